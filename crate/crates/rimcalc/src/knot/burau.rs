//! The reduced Burau representation.
//!
//! For a braid group on n strands this is the classical (n−1)-dimensional
//! representation over ℤ[t, t⁻¹] obtained from the full Burau representation
//! by quotienting the invariant line. The generator images (and their
//! inverses) act on at most three neighboring basis vectors; the braid
//! relations are exercised by randomized tests.

use crate::knot::braid::BraidWord;
use crate::laurent::LaurentPolynomial;
use crate::matrix::{identity, mat_mul, LaurentMatrix};

fn generator(n: usize, letter: i32) -> LaurentMatrix {
    let i = letter.unsigned_abs() as usize; // 1-based generator index
    let mut m = identity(n - 1);
    let t = |e: i64, c: i64| LaurentPolynomial::from_ints(&[(e, c)]);
    let positive = letter > 0;
    if n == 2 {
        m[0][0] = if positive { t(1, -1) } else { t(-1, -1) };
        return m;
    }
    // 0-based block corner for the 1-based generator i
    if positive {
        if i == 1 {
            m[0][0] = t(1, -1);
            m[1][0] = t(0, 1);
        } else if i == n - 1 {
            let k = n - 3;
            m[k][k + 1] = t(1, 1);
            m[k + 1][k + 1] = t(1, -1);
        } else {
            let k = i - 2;
            m[k][k + 1] = t(1, 1);
            m[k + 1][k + 1] = t(1, -1);
            m[k + 2][k + 1] = t(0, 1);
        }
    } else if i == 1 {
        m[0][0] = t(-1, -1);
        m[1][0] = t(-1, 1);
    } else if i == n - 1 {
        let k = n - 3;
        m[k][k + 1] = t(0, 1);
        m[k + 1][k + 1] = t(-1, -1);
    } else {
        let k = i - 2;
        m[k][k + 1] = t(0, 1);
        m[k + 1][k + 1] = t(-1, -1);
        m[k + 2][k + 1] = t(-1, 1);
    }
    m
}

/// The product of the reduced Burau images of the letters, an
/// (n−1)×(n−1) matrix over ℤ[t, t⁻¹]. The empty word maps to the identity.
pub fn reduced_burau(b: &BraidWord) -> LaurentMatrix {
    let n = b.strands();
    let mut m = identity(n - 1);
    for &l in b.letters() {
        m = mat_mul(&m, &generator(n, l)).expect("square matrices of equal size");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(strands: usize, letters: &[i32]) -> LaurentMatrix {
        reduced_burau(&BraidWord::new(strands, letters.to_vec()).unwrap())
    }

    #[test]
    fn two_strand_generator_is_minus_t() {
        let m = braid(2, &[1]);
        assert_eq!(m, vec![vec![LaurentPolynomial::from_ints(&[(1, -1)])]]);
        let cube = braid(2, &[1, 1, 1]);
        assert_eq!(cube, vec![vec![LaurentPolynomial::from_ints(&[(3, -1)])]]);
    }

    #[test]
    fn empty_word_is_the_identity() {
        assert_eq!(braid(4, &[]), identity(3));
    }

    #[test]
    fn generators_invert() {
        for n in 2..=6 {
            for i in 1..n as i32 {
                assert_eq!(
                    braid(n, &[i, -i]),
                    identity(n - 1),
                    "sigma_{i} on {n} strands"
                );
                assert_eq!(braid(n, &[-i, i]), identity(n - 1));
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 3..=6 {
            for i in 1..(n - 1) as i32 {
                assert_eq!(
                    braid(n, &[i, i + 1, i]),
                    braid(n, &[i + 1, i, i + 1]),
                    "adjacent relation at {i} on {n} strands"
                );
            }
            for i in 1..n as i32 {
                for j in 1..n as i32 {
                    if (i - j).abs() >= 2 {
                        assert_eq!(braid(n, &[i, j]), braid(n, &[j, i]));
                    }
                }
            }
        }
    }
}
