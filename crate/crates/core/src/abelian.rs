//! Exponent-sum matrices and their determinants.
//!
//! The matrix is generic over the integer type so callers can pick `i64`
//! for speed or [`num_bigint::BigInt`] when entries or minors may grow.

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};
use thiserror::Error;

use crate::presentation::Presentation;

/// Integer scalars usable for exact abelianization arithmetic.
pub trait ExactInt: Integer + Signed + Clone + FromPrimitive + std::fmt::Debug {}

impl<T> ExactInt for T where T: Integer + Signed + Clone + FromPrimitive + std::fmt::Debug {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("exponent sum {0} does not fit the scalar type")]
    Overflow(i64),
}

/// Row `i` holds the exponent sums of relator `i`, column `j` generator `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianMatrix<T> {
    size: usize,
    entries: Vec<T>,
}

impl<T: ExactInt> AbelianMatrix<T> {
    pub fn of(p: &Presentation) -> Result<AbelianMatrix<T>, AbelianError> {
        let n = p.num_gens();
        let mut entries = Vec::with_capacity(n * n);
        for r in p.relators() {
            let sums = r
                .exponent_sums(n)
                .expect("presentation relators only use their own generators");
            for s in sums {
                entries.push(T::from_i64(s).ok_or(AbelianError::Overflow(s))?);
            }
        }
        Ok(AbelianMatrix { size: n, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> AbelianMatrix<T> {
        let size = rows.len();
        assert!(rows.iter().all(|r| r.len() == size), "matrix must be square");
        AbelianMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.size.max(1)).take(self.size)
    }

    /// Determinant by Bareiss fraction-free elimination. Every division is
    /// exact, so no rationals are needed.
    pub fn det(&self) -> T {
        let n = self.size;
        if n == 0 {
            return T::one();
        }
        let mut a = self.entries.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !a[r * n + k].is_zero()) else {
                    return T::zero();
                };
                for c in 0..n {
                    a.swap(k * n + c, swap * n + c);
                }
                sign = -sign;
            }
            let pivot = a[k * n + k].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.clone() * a[i * n + j].clone()
                        - a[i * n + k].clone() * a[k * n + j].clone();
                    a[i * n + j] = v.div_floor(&prev);
                }
                a[i * n + k] = T::zero();
            }
            prev = pivot;
        }
        sign * a[n * n - 1].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::default_names;
    use num_bigint::BigInt;

    fn p(rels: &[&str]) -> Presentation {
        Presentation::parse(&default_names(rels.len()), rels).unwrap()
    }

    #[test]
    fn trivial_is_identity() {
        let m = AbelianMatrix::<i64>::of(&p(&["x", "y"])).unwrap();
        assert_eq!(m, AbelianMatrix::from_rows(vec![vec![1, 0], vec![0, 1]]));
        assert_eq!(m.det(), 1);
    }

    #[test]
    fn empty_matrix_det_one() {
        let m = AbelianMatrix::<i64>::of(&Presentation::trivial(0)).unwrap();
        assert_eq!(m.det(), 1);
        assert_eq!(m.rows().count(), 0);
    }

    #[test]
    fn bareiss_against_cofactor_expansion() {
        fn cofactor(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|c| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| *v).collect())
                        .collect();
                    let s = if c % 2 == 0 { 1 } else { -1 };
                    s * m[0][c] * cofactor(&minor)
                })
                .sum()
        }
        let cases = vec![
            vec![vec![0, 2, 1], vec![3, -1, 4], vec![1, 0, 0]],
            vec![vec![2, -3, 1, 5], vec![0, 0, 4, 1], vec![7, 1, -2, 0], vec![1, 1, 1, 1]],
            vec![vec![0, 0], vec![0, 5]],
            vec![vec![1, 2], vec![2, 4]],
        ];
        for rows in cases {
            let expected = cofactor(&rows);
            assert_eq!(AbelianMatrix::from_rows(rows.clone()).det(), expected);
            let big: Vec<Vec<BigInt>> = rows
                .iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect();
            assert_eq!(AbelianMatrix::from_rows(big).det(), BigInt::from(expected));
        }
    }

    #[test]
    fn small_scalar_overflow_reported() {
        let long = "x".repeat(200);
        let q = p(&[&long]);
        assert_eq!(AbelianMatrix::<i8>::of(&q).unwrap_err(), AbelianError::Overflow(200));
        assert_eq!(AbelianMatrix::<i16>::of(&q).unwrap().det(), 200);
    }
}
