//! Seifert matrices of closed braids.
//!
//! Seifert's algorithm on a closed braid produces one disc per strand joined
//! by one twisted band per letter. The surface retracts onto a wedge of
//! circles: for each adjacent strand pair i, consecutive bands between
//! strands i and i+1 bound a loop. With loops ordered lexicographically by
//! (strand pair, occurrence along the word), the linking numbers of pushed-off
//! loops give the Seifert matrix V below; det(V − tVᵀ) is a unit multiple of
//! the Alexander polynomial, and det(V − Vᵀ) = ±1 witnesses that the loops
//! really are a basis of the surface homology.

use crate::error::Result;
use crate::knot::braid::BraidWord;

pub type SeifertMatrix = Vec<Vec<i64>>;

/// The Seifert matrix of the braid closure, of size c − s + 1 (letter count
/// minus strands plus one). Requires the closure to be a knot, which also
/// guarantees every adjacent strand pair is used by some letter.
pub fn seifert_matrix_from_braid(b: &BraidWord) -> Result<SeifertMatrix> {
    b.require_knot()?;
    let s = b.strands();
    // bands[i]: (position in word, crossing sign) of letters on strand pair i
    let mut bands: Vec<Vec<(usize, i64)>> = vec![Vec::new(); s - 1];
    for (pos, &l) in b.letters().iter().enumerate() {
        bands[l.unsigned_abs() as usize - 1].push((pos, l.signum() as i64));
    }
    debug_assert!(
        bands.iter().all(|v| !v.is_empty()),
        "a knot closure uses every strand pair"
    );

    // loops: (strand pair, band j, band j+1), lexicographic order
    struct Loop {
        pair: usize,
        lo: (usize, i64),
        hi: (usize, i64),
    }
    let mut loops = Vec::new();
    for (pair, pbands) in bands.iter().enumerate() {
        for w in pbands.windows(2) {
            loops.push(Loop {
                pair,
                lo: w[0],
                hi: w[1],
            });
        }
    }
    let n = loops.len();
    debug_assert_eq!(n, b.letters().len() + 1 - s);

    let mut v = vec![vec![0i64; n]; n];
    for (x, lx) in loops.iter().enumerate() {
        // self-linking: half-twists of the two bands
        v[x][x] = -(lx.lo.1 + lx.hi.1) / 2;
        for (y, ly) in loops.iter().enumerate().skip(x + 1) {
            if ly.pair == lx.pair {
                // consecutive loops on one strand pair share a band
                if ly.lo.0 == lx.hi.0 {
                    let shared_sign = lx.hi.1;
                    v[x][y] = (shared_sign + 1) / 2;
                    v[y][x] = (shared_sign - 1) / 2;
                }
            } else if ly.pair == lx.pair + 1 {
                // loops on adjacent strand pairs link iff their band
                // positions interleave along the braid axis
                let (p, q) = (lx.lo.0, lx.hi.0);
                let (r, s_) = (ly.lo.0, ly.hi.0);
                if p < r && r < q && q < s_ {
                    v[y][x] = 1;
                } else if r < p && p < s_ && s_ < q {
                    v[y][x] = -1;
                }
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::knot::braid::torus_knot;
    use crate::laurent::LaurentPolynomial;
    use crate::matrix::determinant;

    fn det_v_minus_vt(v: &SeifertMatrix) -> i64 {
        let m: Vec<Vec<LaurentPolynomial>> = v
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &e)| LaurentPolynomial::monomial(0, e - v[j][i]))
                    .collect()
            })
            .collect();
        let d = determinant(&m).unwrap();
        let c = d.coeff(0);
        i64::try_from(&c).unwrap()
    }

    #[test]
    fn trefoil_matrix_matches_the_hand_computation() {
        let v = seifert_matrix_from_braid(&BraidWord::parse("2: 1 1 1").unwrap()).unwrap();
        assert_eq!(v, vec![vec![-1, 1], vec![0, -1]]);
    }

    #[test]
    fn figure_eight_matrix() {
        let v = seifert_matrix_from_braid(&BraidWord::parse("3: 1 -2 1 -2").unwrap()).unwrap();
        assert_eq!(v, vec![vec![-1, 0], vec![1, 1]]);
    }

    #[test]
    fn unknot_gives_the_empty_matrix() {
        let v = seifert_matrix_from_braid(&BraidWord::parse("2: 1").unwrap()).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn intersection_form_is_unimodular() {
        for text in [
            "2: 1 1 1",
            "3: 1 -2 1 -2",
            "2: 1 1 1 1 1",
            "3: 1 1 1 2 2 2",
            "3: 1 1 1 2 -1 2",
            "3: -1 2 -1 2",
        ] {
            let b = BraidWord::parse(text).unwrap();
            let v = seifert_matrix_from_braid(&b).unwrap();
            assert_eq!(det_v_minus_vt(&v).abs(), 1, "braid {text}");
        }
        for (p, q) in [(2, 7), (3, 4), (3, 5), (4, 5)] {
            let v = seifert_matrix_from_braid(&torus_knot(p, q).unwrap()).unwrap();
            assert_eq!(det_v_minus_vt(&v).abs(), 1, "torus ({p},{q})");
        }
    }

    #[test]
    fn non_knot_braids_are_rejected() {
        assert!(matches!(
            seifert_matrix_from_braid(&BraidWord::parse("2: 1 1").unwrap()),
            Err(Error::NotAKnot(_))
        ));
    }
}
