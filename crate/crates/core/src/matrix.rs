//! 4×4 matrices over [`ExactScalar`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::ExactScalar;

/// A 2×2 block of Gaussian integers `(re, im)`.
pub type Block = [[(i64, i64); 2]; 2];

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat4 {
    entries: [[ExactScalar; 4]; 4],
}

impl Mat4 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> ExactScalar) -> Mat4 {
        Mat4 { entries: std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))) }
    }

    pub fn from_entries(entries: [[ExactScalar; 4]; 4]) -> Mat4 {
        Mat4 { entries }
    }

    /// Matrix of Gaussian integers given as `(re, im)` pairs.
    pub fn from_gaussian(rows: [[(i64, i64); 4]; 4]) -> Mat4 {
        Mat4::from_fn(|i, j| ExactScalar::gaussian(rows[i][j].0, rows[i][j].1))
    }

    pub fn from_ints(rows: [[i64; 4]; 4]) -> Mat4 {
        Mat4::from_fn(|i, j| ExactScalar::integer(rows[i][j]))
    }

    /// Assembles a matrix from 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(blocks: [[Block; 2]; 2]) -> Mat4 {
        Mat4::from_fn(|i, j| {
            let (re, im) = blocks[i / 2][j / 2][i % 2][j % 2];
            ExactScalar::gaussian(re, im)
        })
    }

    pub fn zero() -> Mat4 {
        Mat4::from_fn(|_, _| ExactScalar::zero())
    }

    pub fn identity() -> Mat4 {
        Mat4::from_fn(|i, j| if i == j { ExactScalar::one() } else { ExactScalar::zero() })
    }

    pub fn scalar(c: ExactScalar) -> Mat4 {
        Mat4::identity().scale(&c)
    }

    pub fn get(&self, i: usize, j: usize) -> &ExactScalar {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[[ExactScalar; 4]; 4] {
        &self.entries
    }

    /// Row-major flattening.
    pub fn to_vec16(&self) -> Vec<ExactScalar> {
        self.entries.iter().flat_map(|r| r.iter().cloned()).collect()
    }

    pub fn from_vec16(v: &[ExactScalar]) -> Mat4 {
        assert_eq!(v.len(), 16);
        Mat4::from_fn(|i, j| v[4 * i + j].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(ExactScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat4::identity()
    }

    pub fn matmul(&self, other: &Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| {
            (0..4).fold(ExactScalar::zero(), |acc, k| {
                let a = &self.entries[i][k];
                let b = &other.entries[k][j];
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc.add_ref(&a.mul_ref(b))
                }
            })
        })
    }

    pub fn scale(&self, c: &ExactScalar) -> Mat4 {
        Mat4::from_fn(|i, j| self.entries[i][j].mul_ref(c))
    }

    pub fn transpose(&self) -> Mat4 {
        Mat4::from_fn(|i, j| self.entries[j][i].clone())
    }

    /// Entrywise complex conjugate `A*`.
    pub fn conjugate(&self) -> Mat4 {
        Mat4::from_fn(|i, j| self.entries[i][j].conjugate())
    }

    /// Conjugate transpose `A†`.
    pub fn dagger(&self) -> Mat4 {
        Mat4::from_fn(|i, j| self.entries[j][i].conjugate())
    }

    pub fn trace(&self) -> ExactScalar {
        (0..4).fold(ExactScalar::zero(), |acc, i| acc.add_ref(&self.entries[i][i]))
    }

    /// Determinant by cofactor expansion along the first row.
    pub fn det(&self) -> ExactScalar {
        let rows: Vec<Vec<ExactScalar>> = self.entries.iter().map(|r| r.to_vec()).collect();
        cofactor_det(&rows)
    }

    pub fn inverse(&self) -> Result<Mat4> {
        let rows: Vec<Vec<ExactScalar>> = self.entries.iter().map(|r| r.to_vec()).collect();
        let inv = linalg::inverse(&rows)?;
        Ok(Mat4::from_fn(|i, j| inv[i][j].clone()))
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn commutator(&self, other: &Mat4) -> Mat4 {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn anticommutator(&self, other: &Mat4) -> Mat4 {
        &self.matmul(other) + &other.matmul(self)
    }

    /// Returns `c` with `self = c · other`, if such a scalar exists.
    pub fn scalar_multiple_of(&self, other: &Mat4) -> Option<ExactScalar> {
        let (i, j) = (0..16).map(|k| (k / 4, k % 4)).find(|&(i, j)| !other.entries[i][j].is_zero())?;
        let c = self.entries[i][j].div_ref(&other.entries[i][j]).ok()?;
        (other.scale(&c) == *self).then_some(c)
    }

    /// True when `self = ±other`.
    pub fn equals_up_to_sign(&self, other: &Mat4) -> bool {
        self == other || *self == -other
    }

    pub fn all_entries(&self, pred: impl Fn(&ExactScalar) -> bool) -> bool {
        self.entries.iter().flatten().all(pred)
    }

    pub fn power(&self, k: u32) -> Mat4 {
        (0..k).fold(Mat4::identity(), |acc, _| acc.matmul(self))
    }

    /// Product of a list of matrices, left to right.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a Mat4>) -> Mat4 {
        factors.into_iter().fold(Mat4::identity(), |acc, m| acc.matmul(m))
    }
}

fn cofactor_det(m: &[Vec<ExactScalar>]) -> ExactScalar {
    let n = m.len();
    match n {
        0 => ExactScalar::one(),
        1 => m[0][0].clone(),
        2 => m[0][0].mul_ref(&m[1][1]).sub_ref(&m[0][1].mul_ref(&m[1][0])),
        _ => {
            let mut total = ExactScalar::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ExactScalar>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != col).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = m[0][col].mul_ref(&cofactor_det(&minor));
                total = if col % 2 == 0 { total.add_ref(&term) } else { total.sub_ref(&term) };
            }
            total
        }
    }
}

impl<'a> Mul<&'a Mat4> for &'a Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: &Mat4) -> Mat4 {
        self.matmul(rhs)
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        self.matmul(&rhs)
    }
}

impl<'a> Add<&'a Mat4> for &'a Mat4 {
    type Output = Mat4;
    fn add(self, rhs: &Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| self.entries[i][j].add_ref(&rhs.entries[i][j]))
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        &self + &rhs
    }
}

impl<'a> Sub<&'a Mat4> for &'a Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: &Mat4) -> Mat4 {
        Mat4::from_fn(|i, j| self.entries[i][j].sub_ref(&rhs.entries[i][j]))
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        &self - &rhs
    }
}

impl Neg for &Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        Mat4::from_fn(|i, j| -&self.entries[i][j])
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        -&self
    }
}

impl fmt::Display for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, "  ")?;
                }
                write!(f, "{c:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Mat4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat4\n{self}")
    }
}

/// Fails with [`Error::SingularMatrix`] unless `m` is invertible.
pub fn require_invertible(m: &Mat4) -> Result<Mat4> {
    m.inverse().map_err(|_| Error::SingularMatrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::GammaRep;

    /// Leibniz formula: independent of the cofactor recursion used by `det`.
    fn leibniz_det(m: &Mat4) -> ExactScalar {
        fn perms(k: usize, used: &mut [bool; 4], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for x in 0..k {
                if !used[x] {
                    used[x] = true;
                    cur.push(x);
                    perms(k, used, cur, out);
                    cur.pop();
                    used[x] = false;
                }
            }
        }
        let mut all = Vec::new();
        perms(4, &mut [false; 4], &mut Vec::new(), &mut all);
        all.iter().fold(ExactScalar::zero(), |acc, p| {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let term = (0..4).fold(ExactScalar::one(), |t, i| t.mul_ref(m.get(i, p[i])));
            if inversions % 2 == 0 {
                acc.add_ref(&term)
            } else {
                acc.sub_ref(&term)
            }
        })
    }

    #[test]
    fn det_of_gamma0_is_one() {
        let rep = GammaRep::dirac_pauli();
        let g0 = &rep.gamma()[0];
        assert_eq!(leibniz_det(g0), ExactScalar::one());
        assert_eq!(g0.det(), ExactScalar::one());
    }

    #[test]
    fn det_agrees_with_leibniz_on_basis_products() {
        let rep = GammaRep::dirac_pauli();
        for b in rep.canonical_basis() {
            let m = &b.matrix + &Mat4::scalar(ExactScalar::gaussian(2, 1));
            assert_eq!(m.det(), leibniz_det(&m), "{}", b.name);
        }
    }

    #[test]
    fn dagger_of_i_gamma0() {
        let rep = GammaRep::dirac_pauli();
        let ig0 = rep.gamma()[0].scale(&ExactScalar::i());
        assert_eq!(ig0.dagger(), -&ig0);
    }

    #[test]
    fn transpose_of_g2g0_flips_sign() {
        let rep = GammaRep::dirac_pauli();
        let c = rep.gamma()[2].matmul(&rep.gamma()[0]);
        assert_eq!(c.transpose(), -&c);
    }

    #[test]
    fn inverse_of_singular_matrix_fails() {
        let rep = GammaRep::dirac_pauli();
        let m = &Mat4::identity() + &rep.gamma()[0];
        assert!(m.det().is_zero());
        assert_eq!(m.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat4::from_gaussian([
            [(1, 0), (2, 1), (0, 0), (0, -1)],
            [(0, 0), (1, 1), (3, 0), (0, 0)],
            [(2, 0), (0, 0), (1, 0), (1, 0)],
            [(0, 1), (0, 0), (0, 0), (1, 0)],
        ]);
        let inv = m.inverse().unwrap();
        assert!(m.matmul(&inv).is_identity());
        assert!(inv.matmul(&m).is_identity());
    }

    #[test]
    fn scalar_multiple_detection() {
        let rep = GammaRep::dirac_pauli();
        let g0 = &rep.gamma()[0];
        let c = ExactScalar::gaussian(0, 3);
        assert_eq!(g0.scale(&c).scalar_multiple_of(g0), Some(c));
        assert_eq!(rep.gamma()[1].scalar_multiple_of(g0), None);
    }
}
