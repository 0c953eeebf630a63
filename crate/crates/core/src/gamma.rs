//! γ-matrices, the canonical basis of the Dirac algebra, and the grading
//! helpers built on top of it.
//!
//! Metric signature is `(+, −, −, −)`. `γ₅ = −i γ₀γ¹γ²γ³`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, DenseMatrix};
use crate::matrix::Mat4;
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Representation {
    DiracPauli,
    Weyl,
    Majorana,
}

impl Representation {
    pub const ALL: [Representation; 3] = [Representation::DiracPauli, Representation::Weyl, Representation::Majorana];

    pub fn short_name(self) -> &'static str {
        match self {
            Representation::DiracPauli => "dp",
            Representation::Weyl => "weyl",
            Representation::Majorana => "majorana",
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl std::str::FromStr for Representation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" | "dirac-pauli" | "dirac_pauli" => Ok(Representation::DiracPauli),
            "weyl" => Ok(Representation::Weyl),
            "majorana" => Ok(Representation::Majorana),
            other => Err(Error::Parse(format!("unknown representation {other:?}"))),
        }
    }
}

/// Index lists of the canonical basis, in its fixed order. Index 0 is γ₀.
pub const CANONICAL_PRODUCTS: [&[usize]; 16] = [
    &[],
    &[0],
    &[1],
    &[2],
    &[3],
    &[0, 1],
    &[0, 2],
    &[0, 3],
    &[1, 2],
    &[2, 3],
    &[3, 1],
    &[0, 1, 2],
    &[1, 2, 3],
    &[2, 3, 0],
    &[3, 0, 1],
    &[0, 1, 2, 3],
];

/// Serialized name of a γ product, e.g. `[2, 0]` ↦ `"g2g0"`, `[]` ↦ `"1"`.
pub fn product_name(indices: &[usize]) -> String {
    if indices.is_empty() {
        "1".to_string()
    } else {
        indices.iter().map(|i| format!("g{i}")).collect()
    }
}

pub fn metric(mu: usize, nu: usize) -> i64 {
    match (mu, nu) {
        (0, 0) => 1,
        (a, b) if a == b => -1,
        _ => 0,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub factors: Vec<usize>,
    pub matrix: Mat4,
}

impl BasisElement {
    pub fn is_even(&self) -> bool {
        self.factors.len().is_multiple_of(2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Grade {
    Even,
    Odd,
    Mixed,
}

#[derive(Clone, Debug)]
pub struct GammaRep {
    tag: Representation,
    gamma: [Mat4; 4],
    gamma5: Mat4,
    basis: Vec<BasisElement>,
    /// Inverse of the 16×16 matrix whose columns are the flattened basis elements.
    dual: DenseMatrix,
    /// `S` with `A_rep = S A_dp S†`; the identity for Dirac–Pauli.
    similarity: Mat4,
}

fn pauli(k: usize) -> [[(i64, i64); 2]; 2] {
    match k {
        1 => [[(0, 0), (1, 0)], [(1, 0), (0, 0)]],
        2 => [[(0, 0), (0, -1)], [(0, 1), (0, 0)]],
        3 => [[(1, 0), (0, 0)], [(0, 0), (-1, 0)]],
        _ => unreachable!("Pauli index must be 1..=3"),
    }
}

fn neg2(b: [[(i64, i64); 2]; 2]) -> [[(i64, i64); 2]; 2] {
    b.map(|r| r.map(|(re, im)| (-re, -im)))
}

const ZERO2: [[(i64, i64); 2]; 2] = [[(0, 0), (0, 0)], [(0, 0), (0, 0)]];
const ONE2: [[(i64, i64); 2]; 2] = [[(1, 0), (0, 0)], [(0, 0), (1, 0)]];

impl GammaRep {
    /// Standard representation: `γ₀ = diag(1, −1)` in 2×2 blocks and
    /// `γᵏ = [[0, σₖ], [−σₖ, 0]]`.
    pub fn dirac_pauli() -> GammaRep {
        let g0 = Mat4::from_blocks([[ONE2, ZERO2], [ZERO2, neg2(ONE2)]]);
        let spatial = |k: usize| Mat4::from_blocks([[ZERO2, pauli(k)], [neg2(pauli(k)), ZERO2]]);
        GammaRep::from_gammas(Representation::DiracPauli, [g0, spatial(1), spatial(2), spatial(3)], Mat4::identity())
            .expect("Dirac-Pauli basis is independent")
    }

    pub fn weyl() -> GammaRep {
        GammaRep::conjugate_representation(&GammaRep::dirac_pauli(), Representation::Weyl)
            .expect("Weyl transform is unitary")
    }

    pub fn majorana() -> GammaRep {
        GammaRep::conjugate_representation(&GammaRep::dirac_pauli(), Representation::Majorana)
            .expect("Majorana transform is unitary")
    }

    pub fn of(tag: Representation) -> GammaRep {
        match tag {
            Representation::DiracPauli => GammaRep::dirac_pauli(),
            Representation::Weyl => GammaRep::weyl(),
            Representation::Majorana => GammaRep::majorana(),
        }
    }

    fn from_gammas(tag: Representation, gamma: [Mat4; 4], similarity: Mat4) -> Result<GammaRep> {
        let minus_i = ExactScalar::gaussian(0, -1);
        let gamma5 = Mat4::product(gamma.iter()).scale(&minus_i);
        let basis: Vec<BasisElement> = CANONICAL_PRODUCTS
            .iter()
            .map(|factors| BasisElement {
                name: product_name(factors),
                factors: factors.to_vec(),
                matrix: Mat4::product(factors.iter().map(|&k| &gamma[k])),
            })
            .collect();
        let columns: Vec<Vec<ExactScalar>> = basis.iter().map(|b| b.matrix.to_vec16()).collect();
        let square: DenseMatrix = (0..16).map(|r| (0..16).map(|c| columns[c][r].clone()).collect()).collect();
        let dual = linalg::inverse(&square)?;
        Ok(GammaRep { tag, gamma, gamma5, basis, dual, similarity })
    }

    /// The unitary `S` taking Dirac–Pauli matrices to `target` via `S A S†`.
    ///
    /// `S_W = (γ₀ − γ₅)/√2` and `S_M = (γ²γ₀ + γ₀)/√2`, both built from the
    /// Dirac–Pauli matrices.
    pub fn similarity_from_dirac_pauli(target: Representation) -> Mat4 {
        let dp = GammaRep::dirac_pauli();
        let g = dp.gamma();
        let k = ExactScalar::inv_sqrt2();
        match target {
            Representation::DiracPauli => Mat4::identity(),
            Representation::Weyl => (&g[0] - dp.gamma5()).scale(&k),
            Representation::Majorana => (&g[2].matmul(&g[0]) + &g[0]).scale(&k),
        }
    }

    /// Re-expresses a Dirac–Pauli representation in `target` by `A ↦ S A S†`.
    pub fn conjugate_representation(rep: &GammaRep, target: Representation) -> Result<GammaRep> {
        if rep.tag != Representation::DiracPauli {
            return Err(Error::UnsupportedRepresentation(format!("conjugation starts from dp, got {}", rep.tag)));
        }
        let s = GammaRep::similarity_from_dirac_pauli(target);
        if s != s.dagger() || !s.matmul(&s).is_identity() {
            return Err(Error::UnsupportedRepresentation(format!(
                "similarity for {target} is not a self-adjoint involution"
            )));
        }
        let gamma = rep.gamma.clone().map(|g| s.matmul(&g).matmul(&s));
        GammaRep::from_gammas(target, gamma, s)
    }

    pub fn tag(&self) -> Representation {
        self.tag
    }

    /// `[γ₀, γ¹, γ², γ³]`.
    pub fn gamma(&self) -> &[Mat4; 4] {
        &self.gamma
    }

    pub fn gamma5(&self) -> &Mat4 {
        &self.gamma5
    }

    pub fn canonical_basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn similarity(&self) -> &Mat4 {
        &self.similarity
    }

    /// `S A S†`: carries a Dirac–Pauli matrix into this representation.
    pub fn from_dirac_pauli(&self, a: &Mat4) -> Mat4 {
        self.similarity.matmul(a).matmul(&self.similarity.dagger())
    }

    /// `S† A S`: carries a matrix of this representation back to Dirac–Pauli.
    pub fn to_dirac_pauli(&self, a: &Mat4) -> Mat4 {
        self.similarity.dagger().matmul(a).matmul(&self.similarity)
    }

    /// Product of γ-matrices in the given index order.
    pub fn product(&self, indices: &[usize]) -> Mat4 {
        Mat4::product(indices.iter().map(|&k| &self.gamma[k]))
    }

    pub fn basis_element(&self, name: &str) -> Option<&BasisElement> {
        self.basis.iter().find(|b| b.name == name)
    }

    /// Clifford relations `{γ^μ, γ^ν} = 2η^{μν}` for all ten index pairs.
    pub fn clifford_violations(&self) -> Vec<(usize, usize)> {
        let mut bad = Vec::new();
        for mu in 0..4 {
            for nu in mu..4 {
                let expected = Mat4::scalar(ExactScalar::integer(2 * metric(mu, nu)));
                if self.gamma[mu].anticommutator(&self.gamma[nu]) != expected {
                    bad.push((mu, nu));
                }
            }
        }
        bad
    }

    /// Unique coefficients `c` with `M = Σ c_k B_k` over the canonical basis.
    pub fn basis_expand(&self, m: &Mat4) -> Vec<ExactScalar> {
        linalg::mat_vec(&self.dual, &m.to_vec16())
    }

    pub fn recombine(&self, coefficients: &[ExactScalar]) -> Mat4 {
        self.basis
            .iter()
            .zip(coefficients)
            .filter(|(_, c)| !c.is_zero())
            .fold(Mat4::zero(), |acc, (b, c)| &acc + &b.matrix.scale(c))
    }

    /// Single-term expansion `c · B_k`, if `M` is supported on one basis element.
    pub fn monomial(&self, m: &Mat4) -> Option<(ExactScalar, &BasisElement)> {
        let coeffs = self.basis_expand(m);
        let mut support = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero());
        let (k, c) = support.next()?;
        support.next().is_none().then(|| (c.clone(), &self.basis[k]))
    }

    /// Even/odd grading by the number of γ factors. The zero matrix counts as even.
    pub fn parity_grade(&self, m: &Mat4) -> Grade {
        let coeffs = self.basis_expand(m);
        let mut has_even = false;
        let mut has_odd = false;
        for (b, c) in self.basis.iter().zip(&coeffs) {
            if c.is_zero() {
                continue;
            }
            if b.is_even() {
                has_even = true;
            } else {
                has_odd = true;
            }
        }
        match (has_even, has_odd) {
            (_, false) => Grade::Even,
            (false, true) => Grade::Odd,
            (true, true) => Grade::Mixed,
        }
    }

    /// Canonical involution α: negates the odd part.
    pub fn involution(&self, m: &Mat4) -> Mat4 {
        let coeffs: Vec<ExactScalar> =
            self.basis_expand(m).into_iter().zip(&self.basis).map(|(c, b)| if b.is_even() { c } else { -c }).collect();
        self.recombine(&coeffs)
    }

    /// True iff `α(g) γ^μ g⁻¹` lies in the complex span of the four γ's for every μ.
    pub fn preserves_gamma_span(&self, g: &Mat4) -> Result<bool> {
        let g_inv = g.inverse()?;
        let twisted = self.involution(g);
        Ok(self.gamma.iter().all(|gm| {
            let image = twisted.matmul(gm).matmul(&g_inv);
            self.basis_expand(&image).iter().zip(&self.basis).all(|(c, b)| c.is_zero() || b.factors.len() == 1)
        }))
    }
}
