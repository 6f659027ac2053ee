//! Exact sparse Laurent-polynomial and group-ring arithmetic.
//!
//! [`LaurentPolynomial`] is ℤ[t, t⁻¹] with arbitrary-precision integer
//! coefficients. [`GroupRingElement`] is the integral group ring ℤ[ℤ^r]
//! written multiplicatively: a finite formal sum of lattice monomials
//! `x^(e₁,…,e_r)`. Both are stored as sparse exponent → coefficient maps
//! with zero coefficients purged on every write, so structural equality is
//! mathematical equality.
//!
//! Everything here is exact; there is no rational-function field and no
//! floating point anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

// ---------------------------------------------------------------------------
// LaurentPolynomial
// ---------------------------------------------------------------------------

/// A Laurent polynomial Σ c_e·t^e with integer coefficients and integer
/// (possibly negative) exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The monomial c·t^e (the zero polynomial if c = 0).
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (i64, BigInt)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    /// Convenience constructor from machine-integer coefficients.
    pub fn from_ints(pairs: &[(i64, i64)]) -> Self {
        Self::from_terms(pairs.iter().map(|&(e, c)| (e, BigInt::from(c))))
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff_ref(0).map(|c| c.is_one()).unwrap_or(false)
    }

    fn coeff_ref(&self, exp: i64) -> Option<&BigInt> {
        self.terms.get(&exp)
    }

    /// The coefficient of t^exp (zero when absent).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// p(1): the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// p(t) · t^k.
    pub fn shifted(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// p(t⁻¹).
    pub fn reversed(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// True iff p(t) = p(t⁻¹) as coefficient maps.
    pub fn is_symmetric(&self) -> bool {
        self.terms
            .iter()
            .all(|(&e, c)| self.coeff_ref(-e) == Some(c))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self` divided by its content, with min-exponent shifted to 0 and a
    /// positive leading coefficient; the canonical associate used by `gcd`.
    fn primitive_canonical(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let content = self.content();
        let min = self.min_exp().unwrap();
        let mut p = Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e - min, c / &content))
                .collect(),
        };
        if p.terms.values().next_back().unwrap().is_negative() {
            p = -&p;
        }
        p
    }

    fn leading(&self) -> Option<(i64, &BigInt)> {
        self.terms.iter().next_back().map(|(&e, c)| (e, c))
    }

    /// Exact division: returns q with self = q·d, or `DivisionNotExact`.
    ///
    /// Iterated leading-term elimination; because monomials are units in the
    /// Laurent ring, an exact quotient has min-exponent exactly
    /// `min(self) − min(d)`, which bounds the elimination and detects
    /// inexactness without ever truncating.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::DivisionNotExact("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let q_min = self.min_exp().unwrap() - d.min_exp().unwrap();
        let (d_lead_exp, d_lead) = d.leading().map(|(e, c)| (e, c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((r_exp, r_lead)) = rem.leading() {
            let q_exp = r_exp - d_lead_exp;
            if q_exp < q_min {
                return Err(Error::DivisionNotExact(format!(
                    "remainder {rem} dividing {self} by {d}"
                )));
            }
            let (q_coeff, r) = r_lead.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact(format!(
                    "leading coefficient {r_lead} not divisible by {d_lead}"
                )));
            }
            let t = Self::monomial(q_exp, q_coeff);
            rem = &rem - &(&t * d);
            quot = &quot + &t;
        }
        Ok(quot)
    }

    /// Pseudo-remainder of a by b (both with b ≠ 0), used by the primitive
    /// polynomial-remainder-sequence gcd.
    fn pseudo_rem(a: &Self, b: &Self) -> Self {
        let (b_deg, b_lead) = b.leading().map(|(e, c)| (e, c.clone())).unwrap();
        let mut r = a.clone();
        while let Some((r_deg, r_lead)) = r.leading().map(|(e, c)| (e, c.clone())) {
            if r_deg < b_deg {
                break;
            }
            let scaled = Self {
                terms: r.terms.iter().map(|(&e, c)| (e, c * &b_lead)).collect(),
            };
            let shift = Self::monomial(r_deg - b_deg, r_lead);
            r = &scaled - &(&shift * b);
        }
        r
    }

    /// Gcd in ℤ[t, t⁻¹], canonicalized: primitive × gcd of contents, minimum
    /// exponent 0, positive leading coefficient. The unit ambiguity inherent
    /// to Laurent gcds is fixed by that canonical form.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_canonical() * Self::monomial(0, other.content());
        }
        if other.is_zero() {
            return self.primitive_canonical() * Self::monomial(0, self.content());
        }
        let content = self.content().gcd(&other.content());
        let mut a = self.primitive_canonical();
        let mut b = other.primitive_canonical();
        if a.max_exp() < b.max_exp() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = Self::pseudo_rem(&a, &b).primitive_canonical();
            a = b;
            b = r;
        }
        a.primitive_canonical() * Self::monomial(0, content)
    }

    /// The symmetric unit-normalized Alexander representative: the unique
    /// q = ±t^k·p with q(t) = q(t⁻¹) and q(1) = 1.
    pub fn normalize_alexander(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotUnitNormalizable(
                "zero polynomial has no unit normalization".into(),
            ));
        }
        let at_one = self.eval_one();
        let p = if at_one.is_one() {
            self.clone()
        } else if (-&at_one).is_one() {
            -self
        } else {
            return Err(Error::NotUnitNormalizable(format!(
                "p(1) = {at_one}, expected ±1 for {self}"
            )));
        };
        let (m, big_m) = (p.min_exp().unwrap(), p.max_exp().unwrap());
        if (m + big_m) % 2 != 0 {
            return Err(Error::NonSymmetrizable(format!(
                "exponent span [{m}, {big_m}] of {p} has odd total"
            )));
        }
        let q = p.shifted(-(m + big_m) / 2);
        if !q.is_symmetric() {
            return Err(Error::NonSymmetrizable(format!(
                "{q} is not palindromic under any unit multiple"
            )));
        }
        Ok(q)
    }

    /// True iff this already is a normalized symmetric Alexander polynomial.
    pub fn is_normalized_alexander(&self) -> bool {
        !self.is_zero() && self.eval_one().is_one() && self.is_symmetric()
    }

    /// Ring homomorphism ℤ[t,t⁻¹] → ℤ[ℤ^rank] sending t to the lattice
    /// monomial at `image`, i.e. c·t^k ↦ c·x^(k·image). Injective whenever
    /// image ≠ 0.
    pub fn substitute_monomial(&self, rank: usize, image: &[i64]) -> Result<GroupRingElement> {
        if image.len() != rank {
            return Err(Error::RankMismatch(format!(
                "image vector has length {}, rank is {rank}",
                image.len()
            )));
        }
        let mut out = GroupRingElement::zero(rank);
        for (e, c) in self.terms() {
            let target: Vec<i64> = image.iter().map(|&m| m * e).collect();
            out.add_term(target, c.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident, $t:ty) => {
        impl $imp<$t> for $t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&$t> for $t {
            type Output = $t;
            fn $method(self, rhs: &$t) -> $t {
                (&self).$method(rhs)
            }
        }
        impl $imp<$t> for &$t {
            type Output = $t;
            fn $method(self, rhs: $t) -> $t {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add, LaurentPolynomial);
forward_owned_binop!(Sub, sub, LaurentPolynomial);
forward_owned_binop!(Mul, mul, LaurentPolynomial);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

// ---------------------------------------------------------------------------
// GroupRingElement
// ---------------------------------------------------------------------------

/// An element of the integral group ring ℤ[ℤ^rank]: a finite formal sum of
/// integer-coefficient lattice monomials. Exponent vectors all have length
/// `rank`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl GroupRingElement {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        let mut x = Self::zero(rank);
        x.add_term(vec![0; rank], BigInt::one());
        x
    }

    /// The monomial c·x^exps.
    pub fn monomial(rank: usize, exps: Vec<i64>, coeff: impl Into<BigInt>) -> Result<Self> {
        let mut x = Self::zero(rank);
        x.try_add_term(exps, coeff.into())?;
        Ok(x)
    }

    pub fn from_terms(
        rank: usize,
        iter: impl IntoIterator<Item = (Vec<i64>, BigInt)>,
    ) -> Result<Self> {
        let mut x = Self::zero(rank);
        for (e, c) in iter {
            x.try_add_term(e, c)?;
        }
        Ok(x)
    }

    fn try_add_term(&mut self, exps: Vec<i64>, coeff: BigInt) -> Result<()> {
        if exps.len() != self.rank {
            return Err(Error::RankMismatch(format!(
                "exponent vector {exps:?} in a rank-{} element",
                self.rank
            )));
        }
        self.add_term(exps, coeff);
        Ok(())
    }

    fn add_term(&mut self, exps: Vec<i64>, coeff: BigInt) {
        debug_assert_eq!(exps.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// The support: exponent vectors with nonzero coefficient, in
    /// lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &[i64]> {
        self.terms.keys().map(|e| e.as_slice())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(format!(
                "rank {} vs rank {}",
                self.rank, other.rank
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.to_vec(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.to_vec(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        Self {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// The image under β ↦ −β on the lattice (used by the symmetry check).
    pub fn negate_exponents(&self) -> Self {
        Self {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    fn leading(&self) -> Option<(&Vec<i64>, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// Exact division in ℤ[ℤ^rank] by leading-term elimination in the
    /// lexicographic order. Because an exact quotient's support is confined
    /// to the componentwise box [min(a)−max(d), max(a)−min(d)], stepping
    /// outside that box proves inexactness; inside it the lexicographic
    /// leading term strictly decreases, so the loop terminates.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        self.check_rank(d)?;
        if d.is_zero() {
            return Err(Error::DivisionNotExact("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.rank));
        }
        let coord_bounds = |x: &Self| -> (Vec<i64>, Vec<i64>) {
            let mut lo = vec![i64::MAX; self.rank];
            let mut hi = vec![i64::MIN; self.rank];
            for e in x.support() {
                for i in 0..self.rank {
                    lo[i] = lo[i].min(e[i]);
                    hi[i] = hi[i].max(e[i]);
                }
            }
            (lo, hi)
        };
        let (a_lo, a_hi) = coord_bounds(self);
        let (d_lo, d_hi) = coord_bounds(d);
        let q_lo: Vec<i64> = a_lo.iter().zip(&d_hi).map(|(a, b)| a - b).collect();
        let q_hi: Vec<i64> = a_hi.iter().zip(&d_lo).map(|(a, b)| a - b).collect();

        let (d_lead_exp, d_lead) = d.leading().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.rank);
        while let Some((r_exp, r_lead)) = rem.leading() {
            let q_exp: Vec<i64> = r_exp.iter().zip(&d_lead_exp).map(|(a, b)| a - b).collect();
            let in_box = q_exp
                .iter()
                .zip(q_lo.iter().zip(&q_hi))
                .all(|(q, (lo, hi))| q >= lo && q <= hi);
            if !in_box {
                return Err(Error::DivisionNotExact(format!(
                    "quotient term x^{q_exp:?} escapes the support box"
                )));
            }
            let (q_coeff, r) = r_lead.div_rem(&d_lead);
            if !r.is_zero() {
                return Err(Error::DivisionNotExact(format!(
                    "leading coefficient {r_lead} not divisible by {d_lead}"
                )));
            }
            let t = Self::monomial(self.rank, q_exp, q_coeff)?;
            rem = rem.try_sub(&t.try_mul(d)?)?;
            quot = quot.try_add(&t)?;
        }
        Ok(quot)
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(e, c)| {
                let key: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                format!("({}):{}", key.join(","), c)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------
//
// Polynomials serialize as JSON objects mapping exponent strings to integer
// coefficients, e.g. {"-1":1,"0":-1,"1":1}; exponent vectors are comma-joined,
// e.g. {"2,0":1}. Keys are emitted in lexicographic string order so output is
// canonical and survives generic JSON round-trips byte-for-byte.

fn coeff_to_number(c: &BigInt) -> serde_json::Number {
    c.to_string()
        .parse()
        .expect("integer literal is a valid JSON number")
}

fn number_to_coeff<E: de::Error>(n: &serde_json::Number) -> std::result::Result<BigInt, E> {
    let s = n.to_string();
    if s.contains(['.', 'e', 'E']) {
        return Err(E::custom(format!("coefficient {s} is not an integer")));
    }
    s.parse()
        .map_err(|_| E::custom(format!("unreadable integer coefficient {s}")))
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: BTreeMap<String, serde_json::Number> = self
            .terms()
            .map(|(e, c)| (e.to_string(), coeff_to_number(c)))
            .collect();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for (k, v) in &entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = LaurentPolynomial;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from integer exponent strings to integers")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut p = LaurentPolynomial::zero();
                while let Some((k, v)) = access.next_entry::<String, serde_json::Number>()? {
                    let e: i64 = k
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent key {k:?}")))?;
                    p.add_term(e, number_to_coeff::<A::Error>(&v)?);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_map(V)
    }
}

pub(crate) fn exps_to_key(exps: &[i64]) -> String {
    exps.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn key_to_exps<E: de::Error>(key: &str) -> std::result::Result<Vec<i64>, E> {
    if key.trim().is_empty() {
        return Ok(Vec::new());
    }
    key.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| E::custom(format!("bad exponent-vector key {key:?}")))
        })
        .collect()
}

impl Serialize for GroupRingElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: BTreeMap<String, serde_json::Number> = self
            .terms()
            .map(|(e, c)| (exps_to_key(e), coeff_to_number(c)))
            .collect();
        let mut map = serializer.serialize_map(Some(entries.len()))?;
        for (k, v) in &entries {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

/// Deserializes a group-ring element, inferring the rank from the first key.
/// An empty map deserializes as the rank-0 zero element; containers that know
/// their rank (e.g. an SW invariant with its class list) should coerce it via
/// [`GroupRingElement::with_rank`].
impl<'de> Deserialize<'de> for GroupRingElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = GroupRingElement;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from comma-joined exponent vectors to integers")
            }
            fn visit_map<A: MapAccess<'de>>(
                self,
                mut access: A,
            ) -> std::result::Result<Self::Value, A::Error> {
                let mut out: Option<GroupRingElement> = None;
                while let Some((k, v)) = access.next_entry::<String, serde_json::Number>()? {
                    let exps = key_to_exps::<A::Error>(&k)?;
                    let coeff = number_to_coeff::<A::Error>(&v)?;
                    let elem = out.get_or_insert_with(|| GroupRingElement::zero(exps.len()));
                    elem.try_add_term(exps, coeff)
                        .map_err(|e| de::Error::custom(e.to_string()))?;
                }
                Ok(out.unwrap_or_else(|| GroupRingElement::zero(0)))
            }
        }
        deserializer.deserialize_map(V)
    }
}

impl GroupRingElement {
    /// Reinterpret the zero element at another rank (a deserialized empty map
    /// has no rank information of its own). Errors on a nonzero element of a
    /// genuinely different rank.
    pub fn with_rank(self, rank: usize) -> Result<Self> {
        if self.rank == rank {
            Ok(self)
        } else if self.is_zero() {
            Ok(Self::zero(rank))
        } else {
            Err(Error::RankMismatch(format!(
                "element of rank {} cannot be reinterpreted at rank {rank}",
                self.rank
            )))
        }
    }
}
