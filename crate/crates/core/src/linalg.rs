//! Exact rational elimination and SVD-based numerical rank.

#![allow(clippy::needless_range_loop)]

use nalgebra::{DMatrix, Dyn};
use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Default relative singular-value threshold for numerical rank.
pub const RANK_TOL: f64 = 1e-8;

/// Reduces `rows` to row echelon form in place and returns the rank.
pub fn rational_rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in rank + 1..rows.len() {
            let f = rows[r][col] / p;
            if f.is_zero() {
                continue;
            }
            for c in col..ncols {
                let v = rows[rank][c];
                rows[r][c] -= f * v;
            }
        }
        rank += 1;
    }
    rank
}

/// Solves the square system `a x = b` over the rationals. `None` unless the
/// solution exists and is unique.
pub fn solve_unique(mut a: Vec<Vec<Rational64>>, mut b: Vec<Rational64>) -> Option<Vec<Rational64>> {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n) && b.len() == n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational64::one() / a[col][col];
        for c in col..n {
            a[col][c] *= inv;
        }
        b[col] *= inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let v = b[col];
            b[r] -= f * v;
        }
    }
    Some(b)
}

pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    rational_rank(
        rows.iter()
            .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
            .collect(),
    )
}

/// Outcome of a thresholded SVD rank decision, kept for auditing.
#[derive(Clone, Debug, Serialize)]
pub struct NumericRank {
    pub rank: usize,
    pub singular_values: Vec<f64>,
    pub threshold: f64,
    /// Ratio between the smallest kept and the largest dropped singular
    /// value; `None` when nothing was dropped or nothing kept.
    pub gap: Option<f64>,
}

impl NumericRank {
    fn from_singular_values(mut sv: Vec<f64>, rank_tol: f64) -> Result<Self> {
        sv.sort_by(|a, b| b.total_cmp(a));
        let largest = sv.first().copied().unwrap_or(0.0);
        let threshold = rank_tol * largest;
        if largest == 0.0 {
            return Ok(Self {
                rank: 0,
                singular_values: sv,
                threshold,
                gap: None,
            });
        }
        if let Some(&value) = sv.iter().find(|&&s| s > threshold / 10.0 && s < threshold * 10.0) {
            return Err(Error::IllConditioned { value, threshold });
        }
        let rank = sv.iter().filter(|&&s| s > threshold).count();
        let gap = match (rank, sv.get(rank)) {
            (r, Some(&dropped)) if r > 0 && dropped > 0.0 => Some(sv[r - 1] / dropped),
            _ => None,
        };
        Ok(Self {
            rank,
            singular_values: sv,
            threshold,
            gap,
        })
    }
}

/// Real rank of the column set `cols`.
pub fn real_rank(cols: &[Vec<f64>], rank_tol: f64) -> Result<NumericRank> {
    if cols.is_empty() {
        return NumericRank::from_singular_values(vec![], rank_tol);
    }
    let nrows = cols[0].len();
    let m = DMatrix::from_fn(nrows, cols.len(), |r, c| cols[c][r]);
    let sv = m.singular_values().iter().copied().collect();
    NumericRank::from_singular_values(sv, rank_tol)
}

/// Complex rank of the column set `cols`.
pub fn complex_rank(cols: &[Vec<Complex64>], rank_tol: f64) -> Result<NumericRank> {
    if cols.is_empty() {
        return NumericRank::from_singular_values(vec![], rank_tol);
    }
    let nrows = cols[0].len();
    let m: DMatrix<Complex64> = DMatrix::from_fn_generic(Dyn(nrows), Dyn(cols.len()), |r, c| cols[c][r]);
    let sv = m.singular_values().iter().copied().collect();
    NumericRank::from_singular_values(sv, rank_tol)
}

/// Splits a complex vector into `[re..., im...]`.
pub fn realify(v: &[Complex64]) -> Vec<f64> {
    v.iter().map(|z| z.re).chain(v.iter().map(|z| z.im)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn rational_rank_small() {
        let rows = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert_eq!(rational_rank(rows), 1);
        assert_eq!(integer_rank(&[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]), 2);
        assert_eq!(integer_rank(&[]), 0);
    }

    #[test]
    fn solve_unique_and_singular() {
        let a = vec![vec![q(1, 1), q(1, 1)], vec![q(1, 1), q(-1, 1)]];
        assert_eq!(solve_unique(a, vec![q(1, 1), q(0, 1)]), Some(vec![q(1, 2), q(1, 2)]));
        let s = vec![vec![q(1, 1), q(1, 1)], vec![q(2, 1), q(2, 1)]];
        assert_eq!(solve_unique(s, vec![q(1, 1), q(2, 1)]), None);
    }

    #[test]
    fn numeric_rank_threshold_and_flag() {
        let cols = vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![1.0, 1.0, 0.0]];
        let r = real_rank(&cols, RANK_TOL).unwrap();
        assert_eq!(r.rank, 2);
        // A singular value sitting right at the threshold is refused.
        let near = vec![vec![1.0, 0.0], vec![0.0, 2e-8]];
        assert!(matches!(real_rank(&near, RANK_TOL), Err(Error::IllConditioned { .. })));
        let z = vec![vec![Complex64::new(0.0, 1.0), Complex64::new(0.0, 0.0)]];
        assert_eq!(complex_rank(&z, RANK_TOL).unwrap().rank, 1);
    }
}
