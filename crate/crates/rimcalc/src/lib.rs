//! Alexander polynomial engines and the rim-surgery Seiberg–Witten calculus.
//!
//! The crate is layered:
//!
//! * [`laurent`] and [`matrix`] — exact big-integer Laurent polynomial and
//!   group-ring arithmetic, plus fraction-free linear algebra over it;
//! * [`knot`] and [`alexander`] — braid, PD, and DT presentations of knots
//!   with several independent Alexander polynomial engines that must agree;
//! * [`swtheory`] — Seiberg–Witten basic-class bookkeeping for surface pairs
//!   and the rim-surgery operations built on top of the Alexander layer.

pub mod alexander;
pub mod error;
pub mod knot;
pub mod laurent;
pub mod matrix;
pub mod swtheory;
pub mod table;

/// Serializes any value as canonical JSON: compact separators with
/// lexicographically sorted object keys, so equal values always produce
/// byte-identical text.
pub fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("value serializes to JSON");
    v.to_string()
}

pub use error::{Error, Result};
