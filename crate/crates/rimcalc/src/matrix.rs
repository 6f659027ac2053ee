//! Exact linear algebra over the Laurent ring.
//!
//! Determinants use fraction-free (Bareiss) elimination: every division is by
//! a previous pivot and is exact by Sylvester's identity, so no fraction
//! field is ever needed. Row swaps are tracked by sign.

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

pub type LaurentMatrix = Vec<Vec<LaurentPolynomial>>;

pub fn identity(n: usize) -> LaurentMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        LaurentPolynomial::one()
                    } else {
                        LaurentPolynomial::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &LaurentMatrix, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    let inner = a.first().map_or(0, Vec::len);
    if b.len() != inner {
        return Err(Error::RankMismatch(format!(
            "matrix product of {}x{inner} by {}x?",
            a.len(),
            b.len()
        )));
    }
    let cols = b.first().map_or(0, Vec::len);
    Ok((0..a.len())
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut acc = LaurentPolynomial::zero();
                    for k in 0..inner {
                        if !a[i][k].is_zero() && !b[k][j].is_zero() {
                            acc = &acc + &(&a[i][k] * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect())
}

pub fn mat_sub(a: &LaurentMatrix, b: &LaurentMatrix) -> Result<LaurentMatrix> {
    if a.len() != b.len() || a.first().map(Vec::len) != b.first().map(Vec::len) {
        return Err(Error::RankMismatch("matrix difference shapes differ".into()));
    }
    Ok(a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect())
}

fn check_rows(m: &LaurentMatrix, cols: usize, what: &str) -> Result<()> {
    for row in m {
        if row.len() != cols {
            return Err(Error::RankMismatch(format!(
                "{what}: expected {cols} columns, found a row with {}",
                row.len()
            )));
        }
    }
    Ok(())
}

/// Determinant by fraction-free elimination. The empty matrix has
/// determinant 1.
pub fn determinant(m: &LaurentMatrix) -> Result<LaurentPolynomial> {
    let n = m.len();
    check_rows(m, n, "determinant")?;
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    let mut a = m.clone();
    let mut positive = true;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        let Some(r) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Ok(LaurentPolynomial::zero());
        };
        if r != k {
            a.swap(k, r);
            positive = !positive;
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let factor = std::mem::replace(&mut a[i][k], LaurentPolynomial::zero());
            for j in k + 1..n {
                let num = &(&pivot * &a[i][j]) - &(&factor * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = pivot;
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if positive { det } else { -det })
}

/// All maximal minors of an n×(n−1) matrix: entry i is det(A with row i
/// deleted). Computed in a single fraction-free elimination by bordering A
/// with a symbolic column x: det[A|x] = Σᵢ (−1)^{i+n−1}·Mᵢ·xᵢ, and the linear
/// form in x that survives elimination reads off every cofactor at once —
/// an order of magnitude cheaper than n separate determinants.
pub fn maximal_minors(m: &LaurentMatrix) -> Result<Vec<LaurentPolynomial>> {
    let n = m.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    check_rows(m, n - 1, "maximal_minors")?;
    let mut real = m.clone();
    let mut sym = identity(n);
    let mut positive = true;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        let Some(r) = (k..n).find(|&r| !real[r][k].is_zero()) else {
            // rank below n−1: every maximal minor vanishes
            return Ok(vec![LaurentPolynomial::zero(); n]);
        };
        if r != k {
            real.swap(k, r);
            sym.swap(k, r);
            positive = !positive;
        }
        let pivot = real[k][k].clone();
        for i in k + 1..n {
            let factor = std::mem::replace(&mut real[i][k], LaurentPolynomial::zero());
            for j in k + 1..n - 1 {
                let num = &(&pivot * &real[i][j]) - &(&factor * &real[k][j]);
                real[i][j] = num.div_exact(&prev)?;
            }
            for j in 0..n {
                if sym[i][j].is_zero() && sym[k][j].is_zero() {
                    continue;
                }
                let num = &(&pivot * &sym[i][j]) - &(&factor * &sym[k][j]);
                sym[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = pivot;
    }
    let bottom = sym.pop().expect("n >= 1");
    Ok(bottom
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            // Mᵢ = (swap sign) · (−1)^{i+n−1} · cᵢ
            let cofactor_negative = (i + n - 1) % 2 == 1;
            if cofactor_negative == positive {
                -c
            } else {
                c
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(pairs: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_ints(pairs)
    }

    fn k(c: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(0, c)
    }

    fn int_matrix(rows: &[&[i64]]) -> LaurentMatrix {
        rows.iter().map(|r| r.iter().map(|&c| k(c)).collect()).collect()
    }

    /// Cofactor-expansion determinant, as an independent cross-check.
    fn naive_det(m: &LaurentMatrix) -> LaurentPolynomial {
        let n = m.len();
        if n == 0 {
            return LaurentPolynomial::one();
        }
        let mut acc = LaurentPolynomial::zero();
        for (i, entry) in m.iter().map(|row| &row[0]).enumerate() {
            if entry.is_zero() {
                continue;
            }
            let sub: LaurentMatrix = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| row[1..].to_vec())
                .collect();
            let term = entry * &naive_det(&sub);
            acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    #[test]
    fn integer_determinants() {
        assert_eq!(determinant(&int_matrix(&[])).unwrap(), k(1));
        assert_eq!(determinant(&int_matrix(&[&[7]])).unwrap(), k(7));
        assert_eq!(
            determinant(&int_matrix(&[&[1, 2], &[3, 4]])).unwrap(),
            k(-2)
        );
        // requires a row swap
        assert_eq!(
            determinant(&int_matrix(&[&[0, 1], &[1, 0]])).unwrap(),
            k(-1)
        );
        assert_eq!(
            determinant(&int_matrix(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])).unwrap(),
            k(5)
        );
        // singular
        assert_eq!(
            determinant(&int_matrix(&[&[1, 2], &[2, 4]])).unwrap(),
            k(0)
        );
        assert_eq!(
            determinant(&int_matrix(&[&[0, 1], &[0, 2]])).unwrap(),
            k(0)
        );
    }

    #[test]
    fn laurent_determinant_matches_hand_value() {
        // det [[t−1, 1], [−t, t−1]] = (t−1)² + t = t² − t + 1
        let m = vec![
            vec![lp(&[(1, 1), (0, -1)]), lp(&[(0, 1)])],
            vec![lp(&[(1, -1)]), lp(&[(1, 1), (0, -1)])],
        ];
        assert_eq!(determinant(&m).unwrap(), lp(&[(2, 1), (1, -1), (0, 1)]));
        assert_eq!(naive_det(&m), lp(&[(2, 1), (1, -1), (0, 1)]));
    }

    #[test]
    fn bareiss_agrees_with_cofactor_expansion() {
        // deterministic pseudo-random Laurent matrices
        let mut seed = 9001u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i64 - 3
        };
        for n in 1..=4 {
            for _ in 0..8 {
                let m: LaurentMatrix = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| lp(&[(next(), next()), (next(), next())]))
                            .collect()
                    })
                    .collect();
                assert_eq!(determinant(&m).unwrap(), naive_det(&m));
            }
        }
    }

    #[test]
    fn maximal_minors_match_row_deletion() {
        let mut seed = 4242u64;
        let mut next = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 9) as i64 - 4
        };
        for n in 1..=5 {
            for _ in 0..6 {
                let m: LaurentMatrix = (0..n)
                    .map(|_| (0..n - 1).map(|_| lp(&[(0, next()), (1, next())])).collect())
                    .collect();
                let minors = maximal_minors(&m).unwrap();
                assert_eq!(minors.len(), n);
                for i in 0..n {
                    let reduced: LaurentMatrix = m
                        .iter()
                        .enumerate()
                        .filter(|&(r, _)| r != i)
                        .map(|(_, row)| row.clone())
                        .collect();
                    assert_eq!(minors[i], determinant(&reduced).unwrap(), "row {i} of {m:?}");
                }
            }
        }
    }

    #[test]
    fn minors_of_deficient_matrix_vanish() {
        // two equal columns of zeros except one row: rank 1 < 2
        let m = int_matrix(&[&[1, 1], &[2, 2], &[3, 3]]);
        assert_eq!(maximal_minors(&m).unwrap(), vec![k(0), k(0), k(0)]);
        // the 1×0 case: the empty determinant convention
        assert_eq!(maximal_minors(&vec![vec![]]).unwrap(), vec![k(1)]);
    }

    #[test]
    fn product_and_identity() {
        let a = vec![
            vec![lp(&[(1, 1)]), lp(&[(0, 2)])],
            vec![lp(&[(0, 0)]), lp(&[(-1, 1)])],
        ];
        let i2 = identity(2);
        assert_eq!(mat_mul(&a, &i2).unwrap(), a);
        assert_eq!(mat_mul(&i2, &a).unwrap(), a);
        let sq = mat_mul(&a, &a).unwrap();
        assert_eq!(sq[0][0], lp(&[(2, 1)]));
        assert_eq!(sq[0][1], lp(&[(1, 2), (-1, 2)]));
        assert!(mat_mul(&a, &vec![vec![lp(&[(0, 1)])]]).is_err());
    }
}
