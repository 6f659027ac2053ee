//! Alexander polynomial engines.
//!
//! Four independent routes to Δ_K(t), all returning the symmetric
//! unit-normalized representative (Δ(t) = Δ(t⁻¹), Δ(1) = 1):
//!
//! * `seifert` — det(V − tVᵀ) for a Seifert matrix V of the closed braid;
//! * `burau` — det(reduced Burau − I)·(1−t)/(1−tⁿ);
//! * `fox` — Fox free differential calculus on the Wirtinger presentation of
//!   a diagram (PD codes directly, DT codes through planar reconstruction);
//! * the torus-knot closed form (t^{pq}−1)(t−1)/((t^p−1)(t^q−1)).
//!
//! Mutual agreement of the engines is the correctness oracle for the whole
//! artifact: [`alexander`] runs every engine applicable to a presentation and
//! treats disagreement as a hard error, never picking a winner.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::braid::{torus_knot, BraidWord};
use crate::knot::burau::reduced_burau;
use crate::knot::dt::DtCode;
use crate::knot::pd::PdCode;
use crate::knot::seifert::seifert_matrix_from_braid;
use crate::knot::KnotPresentation;
use crate::laurent::LaurentPolynomial;
use crate::matrix::{determinant, identity, mat_sub, maximal_minors, LaurentMatrix};

/// Δ via a Seifert matrix of the braid closure:
/// normalize(det(V − tVᵀ)).
pub fn alexander_via_seifert(b: &BraidWord) -> Result<LaurentPolynomial> {
    let v = seifert_matrix_from_braid(b)?;
    let n = v.len();
    let m: LaurentMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| LaurentPolynomial::from_ints(&[(0, v[i][j]), (1, -v[j][i])]))
                .collect()
        })
        .collect();
    determinant(&m)?.normalize_alexander()
}

/// Δ via the reduced Burau representation:
/// normalize(det(ρ(b) − I)·(1 − t) ÷ (1 − tⁿ)). The division is exact for
/// knot closures; a nonzero remainder would signal a convention bug.
pub fn alexander_via_burau(b: &BraidWord) -> Result<LaurentPolynomial> {
    b.require_knot()?;
    let n = b.strands() as i64;
    let m = reduced_burau(b);
    let diff = mat_sub(&m, &identity(b.strands() - 1))?;
    let det = determinant(&diff)?;
    let num = &det * &LaurentPolynomial::from_ints(&[(0, 1), (1, -1)]);
    let den = LaurentPolynomial::from_ints(&[(0, 1), (n, -1)]);
    num.div_exact(&den)?.normalize_alexander()
}

/// Δ via Fox calculus on the Wirtinger presentation read off a diagram.
///
/// Each crossing contributes the relation x_out = x_over^ε · x_in · x_over^{−ε};
/// abelianizing the Fox derivatives (every generator ↦ t) gives the row
/// (∂/∂x_out, ∂/∂x_in, ∂/∂x_over) = (−1, t^ε, 1 − t^ε), with entries summed
/// when arcs coincide. One generator column is deleted (the last, by
/// convention) and Δ is the gcd of the maximal minors of what remains —
/// a choice of column only moves the result by a unit, which normalization
/// absorbs.
pub fn alexander_via_fox(pd: &PdCode) -> Result<LaurentPolynomial> {
    alexander_via_fox_deleting(pd, None)
}

/// As [`alexander_via_fox`], deleting the given generator column instead of
/// the last one; used to property-test column-choice independence.
pub fn alexander_via_fox_deleting(
    pd: &PdCode,
    column: Option<usize>,
) -> Result<LaurentPolynomial> {
    let diagram = pd.orient()?;
    let c = diagram.crossings.len();
    if c == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let n = diagram.n_arcs;
    let delete = column.unwrap_or(n - 1);
    if delete >= n {
        return Err(Error::RankMismatch(format!(
            "cannot delete generator column {delete} of {n}"
        )));
    }
    let mut rows: LaurentMatrix = vec![vec![LaurentPolynomial::zero(); n - 1]; c];
    for (row, x) in diagram.crossings.iter().enumerate() {
        let e = x.sign as i64;
        let contributions = [
            (diagram.arc_of_edge[x.under_out], LaurentPolynomial::from_ints(&[(0, -1)])),
            (diagram.arc_of_edge[x.under_in], LaurentPolynomial::from_ints(&[(e, 1)])),
            (
                diagram.arc_of_edge[x.over_in],
                LaurentPolynomial::from_ints(&[(0, 1), (e, -1)]),
            ),
        ];
        for (arc, value) in contributions {
            if arc == delete {
                continue;
            }
            let col = if arc > delete { arc - 1 } else { arc };
            rows[row][col] = &rows[row][col] + &value;
        }
    }
    let minors = maximal_minors(&rows)?;
    let gcd = minors
        .iter()
        .fold(LaurentPolynomial::zero(), |acc, m| acc.gcd(m));
    gcd.normalize_alexander()
}

/// Δ of a DT code: reconstruct a diagram, then run the Fox engine.
pub fn alexander_via_dt(dt: &DtCode) -> Result<LaurentPolynomial> {
    alexander_via_fox(&dt.to_pd()?)
}

/// The classical closed form for torus knots, used as an extra oracle:
/// normalize((t^{pq} − 1)(t − 1) ÷ ((t^p − 1)(t^q − 1))).
pub fn alexander_torus_closed_form(p: i64, q: i64) -> Result<LaurentPolynomial> {
    // reuse the torus-braid validation for the p, q preconditions
    torus_knot(p, q)?;
    let cyc = |k: i64| LaurentPolynomial::from_ints(&[(k, 1), (0, -1)]);
    let num = &cyc(p * q) * &cyc(1);
    let den = &cyc(p) * &cyc(q);
    num.div_exact(&den)?.normalize_alexander()
}

/// One engine's verdict inside an [`AlexanderReport`].
#[derive(Clone, Debug, Serialize)]
pub struct EngineResult {
    pub engine: &'static str,
    pub polynomial: LaurentPolynomial,
}

/// The agreed Alexander polynomial together with every engine that was run.
#[derive(Clone, Debug, Serialize)]
pub struct AlexanderReport {
    pub alexander: LaurentPolynomial,
    pub engines: Vec<EngineResult>,
}

fn agree(engines: Vec<EngineResult>) -> Result<AlexanderReport> {
    let first = &engines[0];
    if let Some(other) = engines.iter().find(|e| e.polynomial != first.polynomial) {
        return Err(Error::EngineDisagreement(format!(
            "{} returned {} but {} returned {}",
            first.engine, first.polynomial, other.engine, other.polynomial
        )));
    }
    Ok(AlexanderReport {
        alexander: first.polynomial.clone(),
        engines,
    })
}

/// Runs every engine applicable to the presentation (Seifert and Burau for
/// braids, Fox for diagrams) and errors with `EngineDisagreement` unless all
/// outputs coincide.
pub fn alexander(k: &KnotPresentation) -> Result<AlexanderReport> {
    let engines = match k {
        KnotPresentation::Braid(b) => vec![
            EngineResult {
                engine: "seifert",
                polynomial: alexander_via_seifert(b)?,
            },
            EngineResult {
                engine: "burau",
                polynomial: alexander_via_burau(b)?,
            },
        ],
        KnotPresentation::Pd(pd) => vec![EngineResult {
            engine: "fox",
            polynomial: alexander_via_fox(pd)?,
        }],
        KnotPresentation::Dt(dt) => vec![EngineResult {
            engine: "fox",
            polynomial: alexander_via_dt(dt)?,
        }],
    };
    agree(engines)
}

/// Runs the torus closed form against both braid engines on the standard
/// (σ₁⋯σ_{p−1})^q presentation.
pub fn alexander_torus(p: i64, q: i64) -> Result<AlexanderReport> {
    let b = torus_knot(p, q)?;
    let engines = vec![
        EngineResult {
            engine: "closed_form",
            polynomial: alexander_torus_closed_form(p, q)?,
        },
        EngineResult {
            engine: "seifert",
            polynomial: alexander_via_seifert(&b)?,
        },
        EngineResult {
            engine: "burau",
            polynomial: alexander_via_burau(&b)?,
        },
    ];
    agree(engines)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_presentation;
    use crate::knot::PresentationFormat;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_ints(pairs)
    }

    fn trefoil_poly() -> LaurentPolynomial {
        lp(&[(1, 1), (0, -1), (-1, 1)])
    }

    fn fig8_poly() -> LaurentPolynomial {
        lp(&[(1, -1), (0, 3), (-1, -1)])
    }

    #[test]
    fn classical_values_via_braid_engines() {
        let tre = BraidWord::parse("2: 1 1 1").unwrap();
        assert_eq!(alexander_via_seifert(&tre).unwrap(), trefoil_poly());
        assert_eq!(alexander_via_burau(&tre).unwrap(), trefoil_poly());

        let fig8 = BraidWord::parse("3: 1 -2 1 -2").unwrap();
        assert_eq!(alexander_via_seifert(&fig8).unwrap(), fig8_poly());
        assert_eq!(alexander_via_burau(&fig8).unwrap(), fig8_poly());

        let unknot = BraidWord::parse("2: 1").unwrap();
        assert_eq!(alexander_via_seifert(&unknot).unwrap(), LaurentPolynomial::one());
        assert_eq!(alexander_via_burau(&unknot).unwrap(), LaurentPolynomial::one());

        let t25 = BraidWord::parse("2: 1 1 1 1 1").unwrap();
        let expected = lp(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]);
        assert_eq!(alexander_via_burau(&t25).unwrap(), expected);
        assert_eq!(alexander_via_seifert(&t25).unwrap(), expected);
    }

    #[test]
    fn fox_engine_on_standard_diagrams() {
        // both chiralities of the trefoil
        for text in ["X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"] {
            let pd = PdCode::parse(text).unwrap();
            assert_eq!(alexander_via_fox(&pd).unwrap(), trefoil_poly(), "{text}");
        }
        let fig8 = PdCode::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        assert_eq!(alexander_via_fox(&fig8).unwrap(), fig8_poly());

        // a non-alternating diagram: the (3,4) torus knot
        let t34 = PdCode::parse(
            "X(2,14,3,13) X(5,11,6,10) X(7,15,8,14) X(9,5,10,4) \
             X(11,7,12,6) X(12,2,13,1) X(15,9,16,8) X(16,4,1,3)",
        )
        .unwrap();
        assert_eq!(
            alexander_via_fox(&t34).unwrap(),
            alexander_torus_closed_form(3, 4).unwrap()
        );

        // degenerate diagrams
        assert_eq!(
            alexander_via_fox(&PdCode::parse("").unwrap()).unwrap(),
            LaurentPolynomial::one()
        );
        assert_eq!(
            alexander_via_fox(&PdCode::parse("X(2,1,1,2)").unwrap()).unwrap(),
            LaurentPolynomial::one()
        );
    }

    #[test]
    fn fox_engine_is_column_choice_independent() {
        for text in [
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
            "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
        ] {
            let pd = PdCode::parse(text).unwrap();
            let baseline = alexander_via_fox(&pd).unwrap();
            let n = pd.crossings().len();
            for col in 0..n {
                assert_eq!(
                    alexander_via_fox_deleting(&pd, Some(col)).unwrap(),
                    baseline,
                    "column {col} of {text}"
                );
            }
        }
    }

    #[test]
    fn dt_engine_matches_known_knots() {
        let tre = DtCode::parse("4 6 2").unwrap();
        assert_eq!(alexander_via_dt(&tre).unwrap(), trefoil_poly());
        let fig8 = DtCode::parse("4 6 8 2").unwrap();
        assert_eq!(alexander_via_dt(&fig8).unwrap(), fig8_poly());
        // non-alternating codes with mixed signs: the (3,4) torus knot and
        // two more eight-crossing knots, checked against braid engines
        let t34 = DtCode::parse("4 8 -12 2 -14 -16 -6 -10").unwrap();
        assert_eq!(
            alexander_via_dt(&t34).unwrap(),
            alexander_torus_closed_form(3, 4).unwrap()
        );
        for (code, braid) in [
            ("4 8 -12 2 -14 -6 -16 -10", "3: 1 1 1 -2 -1 -1 -1 -2"),
            ("4 8 -12 2 14 -6 16 10", "3: 1 1 1 2 -1 -1 2 2"),
        ] {
            let dt = DtCode::parse(code).unwrap();
            let b = BraidWord::parse(braid).unwrap();
            assert_eq!(
                alexander_via_dt(&dt).unwrap(),
                alexander_via_burau(&b).unwrap(),
                "{code}"
            );
        }
        assert_eq!(
            alexander_via_dt(&DtCode::parse("").unwrap()).unwrap(),
            LaurentPolynomial::one()
        );
    }

    #[test]
    fn torus_closed_form_values() {
        assert_eq!(alexander_torus_closed_form(2, 3).unwrap(), trefoil_poly());
        assert_eq!(
            alexander_torus_closed_form(2, 5).unwrap(),
            lp(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)])
        );
        assert_eq!(
            alexander_torus_closed_form(3, 4).unwrap(),
            lp(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)])
        );
        assert!(matches!(
            alexander_torus_closed_form(2, 4),
            Err(Error::NotCoprime(_))
        ));
        assert!(matches!(
            alexander_torus_closed_form(1, 3),
            Err(Error::SyntaxError(_))
        ));
    }

    #[test]
    fn multiplicativity_and_mirror_invariance() {
        let tre = BraidWord::parse("2: 1 1 1").unwrap();
        let fig8 = BraidWord::parse("3: 1 -2 1 -2").unwrap();
        let square = tre.connected_sum(&tre).unwrap();
        assert_eq!(
            alexander_via_burau(&square).unwrap(),
            (&trefoil_poly() * &trefoil_poly()).normalize_alexander().unwrap()
        );
        let granny = tre.connected_sum(&fig8).unwrap();
        assert_eq!(
            alexander_via_seifert(&granny).unwrap(),
            (&trefoil_poly() * &fig8_poly()).normalize_alexander().unwrap()
        );
        assert_eq!(
            alexander_via_burau(&tre.mirror()).unwrap(),
            alexander_via_burau(&tre).unwrap()
        );
        assert_eq!(
            alexander_via_seifert(&fig8.mirror()).unwrap(),
            alexander_via_seifert(&fig8).unwrap()
        );
    }

    #[test]
    fn dispatcher_runs_applicable_engines() {
        let report =
            alexander(&parse_presentation("2: 1 1 1", PresentationFormat::Braid).unwrap()).unwrap();
        assert_eq!(report.alexander, trefoil_poly());
        let names: Vec<_> = report.engines.iter().map(|e| e.engine).collect();
        assert_eq!(names, vec!["seifert", "burau"]);

        let report =
            alexander(&parse_presentation("4 6 2", PresentationFormat::Dt).unwrap()).unwrap();
        assert_eq!(report.alexander, trefoil_poly());

        let report = alexander_torus(2, 7).unwrap();
        assert_eq!(report.engines.len(), 3);
        assert_eq!(report.alexander.num_terms(), 7);
    }
}
