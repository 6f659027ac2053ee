//! Seiberg–Witten bookkeeping for surface pairs and the rim-surgery calculus.
//!
//! An SW invariant is carried around as a finitely supported element of the
//! group ring of the H₂ lattice (one formal variable per named basis class)
//! together with the characteristic numbers (e, sign, b⁺) of the underlying
//! 4-manifold. Rim surgery along a knot K multiplies the invariant by
//! Δ_K evaluated at twice the rim-torus class; the two decision procedures —
//! [`distinguish`] and [`symplectic_isotopy_obstruction`] — are the
//! contrapositives this calculus supports. Nothing here computes gauge
//! theory: base invariants are inputs (presets ship with the crate), and the
//! module's job is to push them through the surgery formula honestly,
//! flagging the degenerate cases (coefficient cancellation, collection
//! collisions) where the clean structure theory stops applying.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::alexander::alexander;
use crate::error::{Error, Result};
use crate::knot::braid::{torus_knot, BraidWord};
use crate::knot::KnotPresentation;
use crate::laurent::{GroupRingElement, LaurentPolynomial};

/// The characteristic numbers of a closed oriented 4-manifold that the
/// calculus tracks: Euler number, signature, and b⁺.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldCharacteristics {
    #[serde(rename = "e")]
    pub euler: i64,
    #[serde(rename = "sign")]
    pub signature: i64,
    pub b_plus: i64,
}

impl ManifoldCharacteristics {
    pub fn new(euler: i64, signature: i64, b_plus: i64) -> Self {
        Self {
            euler,
            signature,
            b_plus,
        }
    }

    /// The sign (−1)^{(e+sign)/4} appearing in the SW symmetry rule.
    /// Requires e + sign ≡ 0 (mod 4).
    pub fn symmetry_sign(&self) -> Result<i64> {
        let total = self.euler + self.signature;
        if total.rem_euclid(4) != 0 {
            return Err(Error::BadCharacteristics(format!(
                "e + sign = {total} is not divisible by 4"
            )));
        }
        Ok(if (total / 4).rem_euclid(2) == 0 { 1 } else { -1 })
    }
}

/// A Seiberg–Witten invariant: named H₂ basis classes, the characteristic
/// numbers, and the invariant itself as a group-ring element whose exponent
/// vectors are written in that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SWInvariant {
    pub classes: Vec<String>,
    pub chars: ManifoldCharacteristics,
    pub value: GroupRingElement,
}

impl SWInvariant {
    pub fn new(
        classes: Vec<String>,
        chars: ManifoldCharacteristics,
        value: GroupRingElement,
    ) -> Result<Self> {
        let value = value.with_rank(classes.len())?;
        Ok(Self {
            classes,
            chars,
            value,
        })
    }

    pub fn rank(&self) -> usize {
        self.classes.len()
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c == label)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SWInvariant = serde_json::from_str(text)
            .map_err(|e| Error::SyntaxError(format!("bad SW invariant: {e}")))?;
        Self::new(raw.classes, raw.chars, raw.value)
    }

    /// Structural sanity: distinct class labels and a value written at the
    /// right rank. (A deserialized zero value carries no rank of its own and
    /// is coerced by [`SWInvariant::new`]; anything else mismatched is an
    /// inconsistent input.)
    pub fn validate_consistency(&self) -> Result<()> {
        for (i, a) in self.classes.iter().enumerate() {
            if self.classes[..i].contains(a) {
                return Err(Error::InconsistentInputs(format!(
                    "duplicate basis class label {a:?}"
                )));
            }
        }
        if self.value.rank() != self.classes.len() {
            return Err(Error::InconsistentInputs(format!(
                "value has rank {} but {} classes are named",
                self.value.rank(),
                self.classes.len()
            )));
        }
        Ok(())
    }
}

/// True iff the coefficient map satisfies SW(−β) = (−1)^{(e+sign)/4} SW(β)
/// for every exponent vector β. Errors when e + sign is not divisible by 4
/// (the sign itself is then undefined).
pub fn check_sw_symmetry(sw: &SWInvariant) -> Result<bool> {
    let sign = BigInt::from(sw.chars.symmetry_sign()?);
    for (exps, coeff) in sw.value.terms() {
        let neg: Vec<i64> = exps.iter().map(|e| -e).collect();
        if sw.value.coeff(&neg) != &sign * coeff {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connected sum with n copies of the reversed projective plane:
/// e += n, sign −= n, b⁺ unchanged.
pub fn blow_up(chars: ManifoldCharacteristics, n: u32) -> ManifoldCharacteristics {
    ManifoldCharacteristics {
        euler: chars.euler + i64::from(n),
        signature: chars.signature - i64::from(n),
        b_plus: chars.b_plus,
    }
}

/// Characteristic numbers of a fiber sum along a genus-g surface:
/// Euler numbers add and correct by 4g − 4, signatures add, and b⁺ is
/// recorded as b⁺_a + b⁺_b + 1 — a stated convention adequate for the
/// b⁺ > 1 gate, not a computed topological claim.
pub fn fiber_sum_characteristics(
    a: ManifoldCharacteristics,
    b: ManifoldCharacteristics,
    g: u32,
) -> ManifoldCharacteristics {
    ManifoldCharacteristics {
        euler: a.euler + b.euler + 4 * i64::from(g) - 4,
        signature: a.signature + b.signature,
        b_plus: a.b_plus + b.b_plus + 1,
    }
}

/// The standard genus-g fibered piece: the (2, 2g+1) torus knot as the
/// fiber's binding, periodic monodromy of order 4g + 2, a section sphere of
/// square −1, and Euler number 8g² + 4.
#[derive(Clone, Debug, Serialize)]
pub struct StandardPairData {
    pub genus: i64,
    pub knot: BraidWord,
    pub monodromy_order: i64,
    pub chars: ManifoldCharacteristics,
    pub section_square: i64,
}

/// Builds the standard pair for genus g ≥ 1. Only the genus-1 model has a
/// known signature (−8, the rational elliptic surface); for g > 1 the
/// signature must be supplied, and b⁺ is then derived from
/// b⁺ + b⁻ = e − 2, b⁺ − b⁻ = sign.
pub fn standard_pair(g: i64, signature: Option<i64>) -> Result<StandardPairData> {
    if g < 1 {
        return Err(Error::InconsistentInputs(format!(
            "standard pair needs genus at least 1, got {g}"
        )));
    }
    let euler = 8 * g * g + 4;
    let signature = match (g, signature) {
        (1, None) | (1, Some(-8)) => -8,
        (1, Some(s)) => {
            return Err(Error::BadCharacteristics(format!(
                "the genus-1 model has signature -8, got {s}"
            )))
        }
        (_, None) => {
            return Err(Error::SignatureUnknown(format!(
                "the signature of the genus-{g} model must be supplied"
            )))
        }
        (_, Some(s)) => s,
    };
    let b2 = euler - 2;
    if (b2 + signature).rem_euclid(2) != 0 {
        return Err(Error::BadCharacteristics(format!(
            "signature {signature} has the wrong parity for b₂ = {b2}"
        )));
    }
    let b_plus = (b2 + signature) / 2;
    if b_plus < 0 || b_plus > b2 {
        return Err(Error::BadCharacteristics(format!(
            "signature {signature} is out of range for b₂ = {b2}"
        )));
    }
    Ok(StandardPairData {
        genus: g,
        knot: torus_knot(2, 2 * g + 1)?,
        monodromy_order: 4 * g + 2,
        chars: ManifoldCharacteristics::new(euler, signature, b_plus),
        section_square: -1,
    })
}

/// A surface pair ready for rim surgery: the genus and self-intersection of
/// the surface, the SW invariant of the ambient fiber sum, and which basis
/// class is the rim torus.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDescriptor {
    pub genus: i64,
    pub self_intersection: i64,
    pub rim_class: String,
    pub base_sw: SWInvariant,
}

impl PairDescriptor {
    pub fn from_json(text: &str) -> Result<Self> {
        let mut pair: PairDescriptor = serde_json::from_str(text)
            .map_err(|e| Error::SyntaxError(format!("bad pair descriptor: {e}")))?;
        pair.base_sw = SWInvariant::new(
            std::mem::take(&mut pair.base_sw.classes),
            pair.base_sw.chars,
            std::mem::replace(&mut pair.base_sw.value, GroupRingElement::zero(0)),
        )?;
        Ok(pair)
    }

    pub fn rim_index(&self) -> Result<usize> {
        self.base_sw.class_index(&self.rim_class).ok_or_else(|| {
            Error::RankMismatch(format!(
                "rim class {:?} is not among the basis classes {:?}",
                self.rim_class, self.base_sw.classes
            ))
        })
    }

    /// Structural checks that every operation needs: sensible genus and
    /// self-intersection, consistent ranks, a resolvable rim class, and a
    /// base invariant satisfying the symmetry rule.
    pub fn validate_structure(&self) -> Result<()> {
        if self.genus < 1 {
            return Err(Error::InconsistentInputs(format!(
                "genus must be at least 1, got {}",
                self.genus
            )));
        }
        if self.self_intersection < 0 {
            return Err(Error::InconsistentInputs(format!(
                "self-intersection must be nonnegative, got {}",
                self.self_intersection
            )));
        }
        self.base_sw.validate_consistency()?;
        self.rim_index()?;
        if !check_sw_symmetry(&self.base_sw)? {
            return Err(Error::InconsistentInputs(
                "base SW value violates the symmetry rule".into(),
            ));
        }
        Ok(())
    }

    /// [`PairDescriptor::validate_structure`] plus the SW-pair hypothesis the
    /// theorems require: b⁺ > 1 and a nonvanishing base invariant.
    pub fn validate(&self) -> Result<()> {
        self.validate_structure()?;
        if self.base_sw.chars.b_plus <= 1 {
            return Err(Error::NotAnSWPair(format!(
                "b⁺ = {} is not > 1",
                self.base_sw.chars.b_plus
            )));
        }
        if self.base_sw.value.is_zero() {
            return Err(Error::NotAnSWPair(
                "base SW invariant vanishes".into(),
            ));
        }
        Ok(())
    }
}

/// The rim-surgery product formula: the surgered invariant is the base times
/// Δ_K(t) evaluated at t = exp(2T), T the rim-torus class. Characteristic
/// numbers are untouched — rim surgery changes neither e nor sign.
/// `delta` must be in normalized symmetric form.
pub fn rim_surgery_sw(pair: &PairDescriptor, delta: &LaurentPolynomial) -> Result<SWInvariant> {
    if !delta.is_normalized_alexander() {
        return Err(Error::NotNormalized(format!(
            "{delta} is not a normalized symmetric Alexander polynomial"
        )));
    }
    let idx = pair.rim_index()?;
    let rank = pair.base_sw.rank();
    let mut image = vec![0i64; rank];
    image[idx] = 2;
    let factor = delta.substitute_monomial(rank, &image)?;
    let value = pair.base_sw.value.clone().with_rank(rank)?.try_mul(&factor)?;
    Ok(SWInvariant {
        classes: pair.base_sw.classes.clone(),
        chars: pair.base_sw.chars,
        value,
    })
}

/// One collection C_b: the surgered basic classes lying over a basic class b
/// of the base, i.e. those agreeing with b away from the rim axis and
/// differing by an even amount along it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Collection {
    pub base_class: Vec<i64>,
    pub members: Vec<Vec<i64>>,
}

/// The partition of the surgered basic classes into collections, along with
/// honesty flags: `collisions` when some surgered class lies over more than
/// one base class (the sets then overlap and the partition reading fails),
/// and `cancellation` when coefficients cancelled so a collection is smaller
/// than Δ's support.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollectionsReport {
    pub collections: Vec<Collection>,
    pub collisions: bool,
    pub cancellation: bool,
}

/// Groups the surgered basic classes into collections C_b = {b + 2mT} over
/// the basic classes b of the base. When `delta` is supplied, cancellation
/// is detected exactly (every collection must have one member per term of
/// Δ); without it, unequal collection sizes are the only signal. A surgered
/// class lying over no base class at all means the inputs were not produced
/// by rim surgery.
pub fn basic_class_collections(
    base: &SWInvariant,
    surgered: &SWInvariant,
    rim_class: &str,
    delta: Option<&LaurentPolynomial>,
) -> Result<CollectionsReport> {
    let idx = base.class_index(rim_class).ok_or_else(|| {
        Error::RankMismatch(format!(
            "rim class {rim_class:?} is not among the basis classes {:?}",
            base.classes
        ))
    })?;
    if base.classes != surgered.classes {
        return Err(Error::InconsistentInputs(
            "base and surgered invariants use different bases".into(),
        ));
    }
    let mut collections: Vec<Collection> = base
        .value
        .support()
        .map(|b| Collection {
            base_class: b.to_vec(),
            members: Vec::new(),
        })
        .collect();
    let mut collisions = false;
    for gamma in surgered.value.support() {
        let mut hits = 0;
        for c in collections.iter_mut() {
            let b = &c.base_class;
            let off_axis_equal = gamma
                .iter()
                .zip(b.iter())
                .enumerate()
                .all(|(i, (g, bb))| i == idx || g == bb);
            if off_axis_equal && (gamma[idx] - b[idx]).rem_euclid(2) == 0 {
                c.members.push(gamma.to_vec());
                hits += 1;
            }
        }
        match hits {
            0 => {
                return Err(Error::InconsistentInputs(format!(
                    "surgered class {gamma:?} lies over no basic class of the base"
                )))
            }
            1 => {}
            _ => collisions = true,
        }
    }
    let cancellation = match delta {
        Some(d) => collections.iter().any(|c| c.members.len() != d.num_terms()),
        None => collections
            .windows(2)
            .any(|w| w[0].members.len() != w[1].members.len()),
    };
    Ok(CollectionsReport {
        collections,
        collisions,
        cancellation,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DistinguishVerdict {
    #[serde(rename = "DISTINGUISHED")]
    Distinguished,
    #[serde(rename = "NOT_DISTINGUISHED_BY_ALEXANDER")]
    NotDistinguishedByAlexander,
}

impl std::fmt::Display for DistinguishVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Distinguished => "DISTINGUISHED",
            Self::NotDistinguishedByAlexander => "NOT_DISTINGUISHED_BY_ALEXANDER",
        })
    }
}

/// Everything the comparison produced: the verdict, both Alexander
/// polynomials, and both surgered invariants for inspection.
#[derive(Clone, Debug, Serialize)]
pub struct DistinguishReport {
    pub verdict: DistinguishVerdict,
    pub delta_1: LaurentPolynomial,
    pub delta_2: LaurentPolynomial,
    pub surgered_1: SWInvariant,
    pub surgered_2: SWInvariant,
}

/// Compares the two rim-surgered pairs through their Alexander polynomials:
/// unequal Δ means no diffeomorphism of pairs can exist (DISTINGUISHED);
/// equal Δ supports no conclusion. Requires the SW-pair hypothesis.
pub fn distinguish_by_deltas(
    pair: &PairDescriptor,
    delta_1: &LaurentPolynomial,
    delta_2: &LaurentPolynomial,
) -> Result<DistinguishReport> {
    pair.validate()?;
    let surgered_1 = rim_surgery_sw(pair, delta_1)?;
    let surgered_2 = rim_surgery_sw(pair, delta_2)?;
    let verdict = if delta_1 != delta_2 {
        DistinguishVerdict::Distinguished
    } else {
        DistinguishVerdict::NotDistinguishedByAlexander
    };
    Ok(DistinguishReport {
        verdict,
        delta_1: delta_1.clone(),
        delta_2: delta_2.clone(),
        surgered_1,
        surgered_2,
    })
}

/// As [`distinguish_by_deltas`], computing each Δ from a knot presentation
/// through the agreeing engines first.
pub fn distinguish(
    pair: &PairDescriptor,
    k1: &KnotPresentation,
    k2: &KnotPresentation,
) -> Result<DistinguishReport> {
    let d1 = alexander(k1)?.alexander;
    let d2 = alexander(k2)?.alexander;
    distinguish_by_deltas(pair, &d1, &d2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ObstructionVerdict {
    #[serde(rename = "OBSTRUCTED")]
    Obstructed,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl std::fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Obstructed => "OBSTRUCTED",
            Self::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// The obstruction verdict with its witness: the collection sizes (any size
/// above 1 contradicts the uniqueness of the symplectic canonical class
/// among basic classes) and the full collections report.
#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub verdict: ObstructionVerdict,
    /// The verdict is conditional on a hypothesis this artifact cannot
    /// check: that the pair arises from a symplectic surface in the first
    /// place.
    pub hypothesis: &'static str,
    pub delta: LaurentPolynomial,
    pub collection_sizes: Vec<usize>,
    pub collections: CollectionsReport,
}

const SYMPLECTIC_HYPOTHESIS: &str =
    "pair assumed to arise from a symplectic surface in a symplectic 4-manifold";

/// The obstruction procedure: Δ_K ≠ 1 forces every collection to contain
/// more than one basic class, which is incompatible with the surgered
/// surface being smoothly isotopic to a symplectic one (the canonical class
/// of a symplectic manifold with b⁺ > 1 is the unique pairing-maximal basic
/// class). Δ_K = 1 yields no conclusion.
pub fn obstruction_by_delta(
    pair: &PairDescriptor,
    delta: &LaurentPolynomial,
) -> Result<ObstructionReport> {
    pair.validate()?;
    let surgered = rim_surgery_sw(pair, delta)?;
    let collections =
        basic_class_collections(&pair.base_sw, &surgered, &pair.rim_class, Some(delta))?;
    let verdict = if delta.is_one() {
        ObstructionVerdict::Inconclusive
    } else {
        ObstructionVerdict::Obstructed
    };
    if !collections.collisions && !collections.cancellation {
        // Δ ≠ 1 ⟺ some collection has more than one member; this is a
        // mathematical identity whenever the expansion is non-degenerate,
        // so a violation is an internal bug, not an input problem.
        let widened = collections.collections.iter().any(|c| c.members.len() > 1);
        assert_eq!(
            widened,
            !delta.is_one(),
            "collection structure contradicts the Alexander polynomial"
        );
    }
    let collection_sizes = collections.collections.iter().map(|c| c.members.len()).collect();
    Ok(ObstructionReport {
        verdict,
        hypothesis: SYMPLECTIC_HYPOTHESIS,
        delta: delta.clone(),
        collection_sizes,
        collections,
    })
}

/// As [`obstruction_by_delta`], computing Δ from a knot presentation through
/// the agreeing engines first.
pub fn symplectic_isotopy_obstruction(
    pair: &PairDescriptor,
    k: &KnotPresentation,
) -> Result<ObstructionReport> {
    let delta = alexander(k)?.alexander;
    obstruction_by_delta(pair, &delta)
}
