//! Braid words and their closures.
//!
//! A braid on n strands is written as a word in the Artin generators: the
//! integer i stands for σᵢ (strand i crosses over strand i+1) and −i for
//! σᵢ⁻¹. The text grammar is `"<strands>: <signed ints>"` with the strand
//! count explicit — inferring it from max|letter|+1 would silently accept
//! typos.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Serializes as the text grammar, e.g. `"2: 1 1 1"`.
impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl BraidWord {
    /// Validates strand count and letter ranges. The closure is *not*
    /// required to be a knot here; see [`BraidWord::require_knot`].
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::SyntaxError(format!(
                "a braid needs at least 2 strands, got {strands}"
            )));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(Error::SyntaxError(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    /// Grammar: `"<strands>: <signed ints separated by spaces>"`.
    pub fn parse(text: &str) -> Result<Self> {
        let Some((head, tail)) = text.split_once(':') else {
            return Err(Error::SyntaxError(format!(
                "braid text {text:?} is missing the \"strands:\" prefix"
            )));
        };
        if tail.contains(':') {
            return Err(Error::SyntaxError(format!(
                "braid text {text:?} has more than one ':'"
            )));
        }
        let strands: usize = head.trim().parse().map_err(|_| {
            Error::SyntaxError(format!("unreadable strand count {:?}", head.trim()))
        })?;
        let letters = tail
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::SyntaxError(format!("unreadable braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    /// The permutation induced on strand positions: entry j is the strand
    /// that ends in position j.
    pub fn permutation(&self) -> Vec<usize> {
        let mut pos: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            pos.swap(i, i + 1);
        }
        pos
    }

    /// Number of components of the braid closure (cycles of the induced
    /// permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = perm[j];
            }
        }
        cycles
    }

    pub fn is_knot(&self) -> bool {
        self.closure_components() == 1
    }

    pub fn require_knot(&self) -> Result<()> {
        let n = self.closure_components();
        if n != 1 {
            return Err(Error::NotAKnot(format!(
                "braid closure has {n} components"
            )));
        }
        Ok(())
    }

    /// Reverses every crossing; the closure is the mirror-image knot.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// Connected sum of two knot closures: the second braid is placed on
    /// fresh strands above the first, sharing exactly one strand, so the two
    /// closures are tied together along it.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        self.require_knot()?;
        other.require_knot()?;
        let shift = (self.strands - 1) as i32;
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|&l| l + shift * l.signum()));
        Self::new(self.strands + other.strands - 1, letters)
    }
}

/// The (p,q) torus knot as the closed braid (σ₁σ₂⋯σ_{p−1})^q on p strands.
pub fn torus_knot(p: i64, q: i64) -> Result<BraidWord> {
    if p < 2 || q < 2 {
        return Err(Error::SyntaxError(format!(
            "torus knot parameters must both be at least 2, got ({p}, {q})"
        )));
    }
    if gcd(p, q) != 1 {
        return Err(Error::NotCoprime(format!(
            "gcd({p}, {q}) = {}, so T({p},{q}) is a link, not a knot",
            gcd(p, q)
        )));
    }
    let mut letters = Vec::with_capacity(((p - 1) * q) as usize);
    for _ in 0..q {
        for i in 1..p {
            letters.push(i as i32);
        }
    }
    BraidWord::new(p as usize, letters)
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for text in ["2: 1 1 1", "3: 1 -2 1 -2", "2:", "5: 4 -3 2 -1"] {
            let b = BraidWord::parse(text).unwrap();
            assert_eq!(b.to_string(), text);
        }
        let b = BraidWord::parse("2: 1 1 1").unwrap();
        assert_eq!(b.strands(), 2);
        assert_eq!(b.letters(), &[1, 1, 1]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        for text in ["2 1 1", "x: 1", "2: 0", "2: 2", "2: -2", "1: 1", "2: 1 : 1", "2: a"] {
            assert!(
                matches!(BraidWord::parse(text), Err(Error::SyntaxError(_))),
                "{text:?} should be a syntax error"
            );
        }
    }

    #[test]
    fn closure_component_counts() {
        assert_eq!(BraidWord::parse("2: 1").unwrap().closure_components(), 1);
        assert_eq!(BraidWord::parse("2:").unwrap().closure_components(), 2);
        assert_eq!(BraidWord::parse("2: 1 1").unwrap().closure_components(), 2);
        assert_eq!(BraidWord::parse("2: 1 1 1").unwrap().closure_components(), 1);
        assert_eq!(
            BraidWord::parse("3: 1 -2 1 -2").unwrap().closure_components(),
            1
        );
        assert_eq!(BraidWord::parse("3: 1").unwrap().closure_components(), 2);
        assert!(BraidWord::parse("3: 1").unwrap().require_knot().is_err());
    }

    #[test]
    fn torus_braids() {
        assert_eq!(torus_knot(2, 3).unwrap().to_string(), "2: 1 1 1");
        assert_eq!(torus_knot(2, 5).unwrap().to_string(), "2: 1 1 1 1 1");
        let t34 = torus_knot(3, 4).unwrap();
        assert_eq!(t34.to_string(), "3: 1 2 1 2 1 2 1 2");
        assert_eq!(t34.closure_components(), 1);
        assert!(matches!(torus_knot(2, 4), Err(Error::NotCoprime(_))));
        assert!(matches!(torus_knot(1, 5), Err(Error::SyntaxError(_))));
        assert!(matches!(torus_knot(3, 0), Err(Error::SyntaxError(_))));

        // closure of the (p,q) torus braid has gcd(p,q) components in general
        for (p, q) in [(2i64, 6i64), (4, 6), (3, 6)] {
            let mut letters = Vec::new();
            for _ in 0..q {
                for i in 1..p {
                    letters.push(i as i32);
                }
            }
            let b = BraidWord::new(p as usize, letters).unwrap();
            assert_eq!(b.closure_components() as i64, gcd(p, q));
        }
    }

    #[test]
    fn mirror_is_an_involution() {
        let b = BraidWord::parse("3: 1 -2 1 -2").unwrap();
        assert_eq!(b.mirror().mirror(), b);
        assert_eq!(b.mirror().to_string(), "3: -1 2 -1 2");
        assert_eq!(b.mirror().closure_components(), 1);
    }

    #[test]
    fn connected_sum_shifts_the_second_word() {
        let tre = BraidWord::parse("2: 1 1 1").unwrap();
        let sum = tre.connected_sum(&tre).unwrap();
        assert_eq!(sum.to_string(), "3: 1 1 1 2 2 2");
        assert_eq!(sum.closure_components(), 1);

        let fig8 = BraidWord::parse("3: 1 -2 1 -2").unwrap();
        let sum = tre.connected_sum(&fig8).unwrap();
        assert_eq!(sum.to_string(), "4: 1 1 1 2 -3 2 -3");
        assert_eq!(sum.closure_components(), 1);

        let not_knot = BraidWord::parse("2:").unwrap();
        assert!(matches!(
            tre.connected_sum(&not_knot),
            Err(Error::NotAKnot(_))
        ));
    }
}
