//! Dense exact linear algebra over [`ExactScalar`].
//!
//! Everything here is Gauss-Jordan elimination on row-major `Vec<Vec<_>>`
//! matrices. The field is exact, so pivoting only has to find a nonzero entry.

use crate::error::{Error, Result};
use crate::scalar::ExactScalar;

pub type DenseMatrix = Vec<Vec<ExactScalar>>;

/// Reduced row echelon form, in place. Returns the pivot columns.
pub fn rref(rows: &mut DenseMatrix) -> Vec<usize> {
    let n_rows = rows.len();
    if n_rows == 0 {
        return Vec::new();
    }
    let n_cols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n_cols {
        if r == n_rows {
            break;
        }
        let Some(p) = (r..n_rows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..n_rows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            let (pivot_row, other) = if i < r {
                let (lo, hi) = rows.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = rows.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, y) in other.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = x.sub_ref(&factor.mul_ref(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &DenseMatrix) -> usize {
    let mut m = rows.clone();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}`.
///
/// Each basis vector has a 1 in exactly one free column and zeros in the
/// other free columns, which makes the output canonical for a given `A`.
pub fn nullspace(rows: &DenseMatrix, n_cols: usize) -> Vec<Vec<ExactScalar>> {
    let mut m = rows.clone();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..n_cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![ExactScalar::zero(); n_cols];
            v[f] = ExactScalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[row][f];
            }
            v
        })
        .collect()
}

/// Inverse of a square matrix.
pub fn inverse(a: &DenseMatrix) -> Result<DenseMatrix> {
    let n = a.len();
    let mut aug: DenseMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { ExactScalar::one() } else { ExactScalar::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

pub fn mat_vec(a: &DenseMatrix, v: &[ExactScalar]) -> Vec<ExactScalar> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(ExactScalar::zero(), |acc, (x, y)| acc.add_ref(&x.mul_ref(y)))
        })
        .collect()
}
