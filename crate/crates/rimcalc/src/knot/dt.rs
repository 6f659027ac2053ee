//! Dowker–Thistlethwaite codes.
//!
//! Walking along the knot and numbering each crossing passage 1..2c, every
//! crossing receives one odd and one even number; the code lists, for odd
//! passages 1, 3, 5, …, the even number at the same crossing. A negative
//! entry marks a crossing whose even-numbered passage runs *under* (on
//! alternating diagrams all entries are positive).
//!
//! Reconstruction builds a combinatorial embedding: each crossing can be
//! glued in two ways (the second strand crossing left-to-right or
//! right-to-left), and a choice vector is accepted when Euler's formula
//! V − E + F = 2 holds for the traced faces. The search resolves the
//! reflection/composite-factor ambiguity arbitrarily (first planar embedding
//! in a fixed enumeration order); the Alexander polynomial downstream is
//! mirror-invariant, so the choice is harmless and is made deterministically.

use std::fmt;

use crate::error::{Error, Result};
use crate::knot::pd::PdCode;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DtCode {
    evens: Vec<i64>,
}

impl DtCode {
    pub fn new(evens: Vec<i64>) -> Result<Self> {
        let c = evens.len();
        let mut seen = vec![false; 2 * c + 1];
        for &v in &evens {
            let a = v.unsigned_abs() as usize;
            if v % 2 != 0 || a < 2 || a > 2 * c {
                return Err(Error::InvalidLabels(format!(
                    "DT entry {v} is not an even number with magnitude in 2..={}",
                    2 * c
                )));
            }
            if seen[a] {
                return Err(Error::InvalidLabels(format!(
                    "DT entry magnitude {a} repeats"
                )));
            }
            seen[a] = true;
        }
        Ok(Self { evens })
    }

    /// Grammar: whitespace-separated signed even integers; empty text is the
    /// unknot.
    pub fn parse(text: &str) -> Result<Self> {
        let evens = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::SyntaxError(format!("unreadable DT entry {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(evens)
    }

    pub fn entries(&self) -> &[i64] {
        &self.evens
    }

    pub fn crossings(&self) -> usize {
        self.evens.len()
    }

    /// Reconstructs a planar diagram realizing this code. Edges of the PD
    /// code are numbered by their starting passage, so the result uses labels
    /// 1..2c in walk order.
    pub fn to_pd(&self) -> Result<PdCode> {
        let c = self.evens.len();
        if c == 0 {
            return PdCode::new(Vec::new());
        }
        let n_pos = 2 * c;
        // crossing k is visited at positions odd_pos[k] and even_pos[k]
        let odd_pos: Vec<usize> = (0..c).map(|k| 2 * k + 1).collect();
        let even_pos: Vec<usize> = self.evens.iter().map(|v| v.unsigned_abs() as usize).collect();

        // edge p runs from position p to position p+1 (cyclically); the dart
        // 2(p−1) is its tail end, 2(p−1)+1 its head end
        let arr_dart = |pos: usize| -> usize {
            let e = if pos == 1 { n_pos } else { pos - 1 };
            2 * (e - 1) + 1
        };
        let dep_dart = |pos: usize| -> usize { 2 * (pos - 1) };

        // counterclockwise dart order around crossing k: the odd strand runs
        // straight through; the even strand crosses it one way or the other
        let rotation = |k: usize, flip: bool| -> [usize; 4] {
            let (o, e) = (odd_pos[k], even_pos[k]);
            if flip {
                [arr_dart(o), dep_dart(e), dep_dart(o), arr_dart(e)]
            } else {
                [arr_dart(o), arr_dart(e), dep_dart(o), dep_dart(e)]
            }
        };

        let n_darts = 4 * c;
        let mut sigma = vec![0usize; n_darts];
        let mut found: Option<Vec<bool>> = None;
        'search: for mask in 0u64..(1 << (c - 1)) {
            let flips: Vec<bool> = (0..c)
                .map(|k| k > 0 && (mask >> (k - 1)) & 1 == 1)
                .collect();
            for (k, &flip) in flips.iter().enumerate() {
                let rot = rotation(k, flip);
                for i in 0..4 {
                    sigma[rot[i]] = rot[(i + 1) % 4];
                }
            }
            // count faces: orbits of dart ↦ σ(twin(dart))
            let mut visited = vec![false; n_darts];
            let mut faces = 0;
            for start in 0..n_darts {
                if visited[start] {
                    continue;
                }
                faces += 1;
                let mut d = start;
                while !visited[d] {
                    visited[d] = true;
                    d = sigma[d ^ 1];
                }
            }
            if faces == c + 2 {
                found = Some(flips);
                break 'search;
            }
        }
        let Some(flips) = found else {
            return Err(Error::InvalidLabels(
                "DT code is not realizable as a planar knot diagram".into(),
            ));
        };

        let mut tuples = Vec::with_capacity(c);
        for k in 0..c {
            // positive entry: the even passage goes over, so the odd passage
            // is the incoming under-strand, and vice versa
            let under = if self.evens[k] > 0 { odd_pos[k] } else { even_pos[k] };
            let rot = rotation(k, flips[k]);
            let at = rot
                .iter()
                .position(|&d| d == arr_dart(under))
                .expect("under arrival is incident to its crossing");
            let label = |d: usize| d / 2 + 1;
            tuples.push([
                label(rot[at]),
                label(rot[(at + 1) % 4]),
                label(rot[(at + 2) % 4]),
                label(rot[(at + 3) % 4]),
            ]);
        }
        PdCode::new(tuples)
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.evens {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
