//! Knot presentations: braid words, planar-diagram codes and
//! Dowker–Thistlethwaite codes, with parsers, validators and the
//! diagram-level machinery (Seifert matrices, reduced Burau matrices)
//! consumed by the Alexander engines.

pub mod braid;
pub mod burau;
pub mod dt;
pub mod pd;
pub mod seifert;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use braid::{torus_knot, BraidWord};
pub use dt::DtCode;
pub use pd::PdCode;
pub use seifert::{seifert_matrix_from_braid, SeifertMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresentationFormat {
    Braid,
    Pd,
    Dt,
}

impl FromStr for PresentationFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "braid" => Ok(Self::Braid),
            "pd" => Ok(Self::Pd),
            "dt" => Ok(Self::Dt),
            other => Err(Error::SyntaxError(format!(
                "unknown presentation format {other:?} (expected braid, pd or dt)"
            ))),
        }
    }
}

impl fmt::Display for PresentationFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Braid => "braid",
            Self::Pd => "pd",
            Self::Dt => "dt",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotPresentation {
    Braid(BraidWord),
    Pd(PdCode),
    Dt(DtCode),
}

impl KnotPresentation {
    pub fn format(&self) -> PresentationFormat {
        match self {
            Self::Braid(_) => PresentationFormat::Braid,
            Self::Pd(_) => PresentationFormat::Pd,
            Self::Dt(_) => PresentationFormat::Dt,
        }
    }
}

impl fmt::Display for KnotPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Braid(b) => b.fmt(f),
            Self::Pd(p) => p.fmt(f),
            Self::Dt(d) => d.fmt(f),
        }
    }
}

/// Parses a knot presentation in the given format and validates it: label
/// constraints for PD/DT codes, and for braids and PD codes the closure is
/// verified to trace exactly one component.
pub fn parse_presentation(text: &str, format: PresentationFormat) -> Result<KnotPresentation> {
    match format {
        PresentationFormat::Braid => {
            let b = BraidWord::parse(text)?;
            b.require_knot()?;
            Ok(KnotPresentation::Braid(b))
        }
        PresentationFormat::Pd => {
            let pd = PdCode::parse(text)?;
            pd.orient()?;
            Ok(KnotPresentation::Pd(pd))
        }
        PresentationFormat::Dt => Ok(KnotPresentation::Dt(DtCode::parse(text)?)),
    }
}
