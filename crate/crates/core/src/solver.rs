//! Charge conjugation, parity and time reversal as kernels of linear
//! constraint systems, plus the compatibility filters that cut the solutions
//! down to two consistent families.
//!
//! Every constraint has the shape `X·A = s·B·X` with fixed `A`, `B` and a sign
//! `s`. Writing `X = Σ c_k B_k` over the canonical basis turns a system of
//! such relations into a stacked linear map on the sixteen coefficients,
//! whose exact null space is the solution space.

use std::fmt;

use serde::Serialize;

use crate::classify::classify;
use crate::error::{Error, Result};
use crate::gamma::{GammaRep, Representation};
use crate::linalg::{self, DenseMatrix};
use crate::matrix::Mat4;
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Symmetry {
    Parity,
    ChargeConjugation,
    TimeReversal,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Parity, Symmetry::ChargeConjugation, Symmetry::TimeReversal];

    /// γ indices of the closed-form solution in the standard representation:
    /// `γ₀`, `γ²γ₀`, `γ³γ¹`.
    pub fn closed_form_factors(self) -> &'static [usize] {
        match self {
            Symmetry::Parity => &[0],
            Symmetry::ChargeConjugation => &[2, 0],
            Symmetry::TimeReversal => &[3, 1],
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Symmetry::Parity => "p",
            Symmetry::ChargeConjugation => "c",
            Symmetry::TimeReversal => "t",
        }
    }

    /// Carries a standard-representation solution into `rep`.
    ///
    /// Parity constraints are similarity invariant, so `X ↦ S X S†`. The
    /// charge conjugation and time reversal constraints involve `γ∼` or `γ*`
    /// and transform as `X ↦ S X Sᵀ`; the two laws agree only when `S` is real.
    pub fn transport(self, rep: &GammaRep, dp_matrix: &Mat4) -> Mat4 {
        let s = rep.similarity();
        match self {
            Symmetry::Parity => rep.from_dirac_pauli(dp_matrix),
            _ => s.matmul(dp_matrix).matmul(&s.transpose()),
        }
    }

    /// Inverse of [`Symmetry::transport`].
    pub fn to_dirac_pauli(self, rep: &GammaRep, matrix: &Mat4) -> Mat4 {
        let s = rep.similarity();
        match self {
            Symmetry::Parity => rep.to_dirac_pauli(matrix),
            _ => s.dagger().matmul(matrix).matmul(&s.conjugate()),
        }
    }
}

impl std::str::FromStr for Symmetry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "p" | "parity" => Ok(Symmetry::Parity),
            "c" | "charge" => Ok(Symmetry::ChargeConjugation),
            "t" | "time" => Ok(Symmetry::TimeReversal),
            other => Err(Error::Parse(format!("unknown symmetry {other:?}"))),
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

/// One linear condition `X·right = sign·left·X`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub right: Mat4,
    pub left: Mat4,
    pub sign: i64,
}

impl Relation {
    fn residual(&self, x: &Mat4) -> Mat4 {
        let lhs = x.matmul(&self.right);
        let rhs = self.left.matmul(x).scale(&ExactScalar::integer(self.sign));
        &lhs - &rhs
    }

    pub fn holds_for(&self, x: &Mat4) -> bool {
        self.residual(x).is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    pub relations: Vec<Relation>,
}

impl ConstraintSystem {
    /// `[P, γ₀] = 0` and `{P, γᵏ} = 0`.
    pub fn parity(rep: &GammaRep) -> ConstraintSystem {
        let relations = rep
            .gamma()
            .iter()
            .enumerate()
            .map(|(mu, g)| Relation { right: g.clone(), left: g.clone(), sign: if mu == 0 { 1 } else { -1 } })
            .collect();
        ConstraintSystem { relations }
    }

    /// `C γ^{μ∼} C⁻¹ = −γ^μ`, linearized as `C γ^{μ∼} = −γ^μ C`.
    pub fn charge_conjugation(rep: &GammaRep) -> ConstraintSystem {
        let relations =
            rep.gamma().iter().map(|g| Relation { right: g.transpose(), left: g.clone(), sign: -1 }).collect();
        ConstraintSystem { relations }
    }

    /// `T γ^{0*} T⁻¹ = γ₀` and `T γ^{k*} T⁻¹ = −γᵏ`.
    ///
    /// The starred matrices are fixed in a given representation, so the
    /// system is linear in `T`.
    pub fn time_reversal(rep: &GammaRep) -> ConstraintSystem {
        let relations = rep
            .gamma()
            .iter()
            .enumerate()
            .map(|(mu, g)| Relation { right: g.conjugate(), left: g.clone(), sign: if mu == 0 { 1 } else { -1 } })
            .collect();
        ConstraintSystem { relations }
    }

    pub fn for_symmetry(symmetry: Symmetry, rep: &GammaRep) -> ConstraintSystem {
        match symmetry {
            Symmetry::Parity => ConstraintSystem::parity(rep),
            Symmetry::ChargeConjugation => ConstraintSystem::charge_conjugation(rep),
            Symmetry::TimeReversal => ConstraintSystem::time_reversal(rep),
        }
    }

    pub fn is_satisfied_by(&self, x: &Mat4) -> bool {
        self.relations.iter().all(|r| r.holds_for(x))
    }

    /// The stacked linear map on basis coefficients: one 16-row block per
    /// relation, one column per canonical basis element.
    pub fn coefficient_map(&self, rep: &GammaRep) -> DenseMatrix {
        let columns: Vec<Vec<Vec<ExactScalar>>> = rep
            .canonical_basis()
            .iter()
            .map(|b| self.relations.iter().map(|r| r.residual(&b.matrix).to_vec16()).collect())
            .collect();
        let mut rows = Vec::with_capacity(16 * self.relations.len());
        for rel in 0..self.relations.len() {
            for entry in 0..16 {
                rows.push(columns.iter().map(|col| col[rel][entry].clone()).collect());
            }
        }
        rows
    }

    pub fn solve(&self, rep: &GammaRep) -> Vec<Mat4> {
        linalg::nullspace(&self.coefficient_map(rep), 16).into_iter().map(|c| rep.recombine(&c)).collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolutionSpace {
    pub symmetry: Symmetry,
    pub representation: Representation,
    pub dimension: usize,
    pub basis: Vec<Mat4>,
    /// Name of the standard closed form (`"g2g0"` etc.) when the single basis
    /// element is that form carried into this representation.
    pub closed_form_name: Option<String>,
    /// Scalar `λ` with raw kernel vector `= λ · basis[0]`.
    #[serde(skip)]
    pub kernel_scale: Option<ExactScalar>,
}

impl SolutionSpace {
    pub fn single(&self) -> Option<&Mat4> {
        (self.dimension == 1).then(|| &self.basis[0])
    }
}

pub fn solve_symmetry(symmetry: Symmetry, rep: &GammaRep) -> SolutionSpace {
    let system = ConstraintSystem::for_symmetry(symmetry, rep);
    let raw = system.solve(rep);
    let dimension = raw.len();
    if dimension == 1 {
        let dp = GammaRep::dirac_pauli();
        let closed = symmetry.transport(rep, &dp.product(symmetry.closed_form_factors()));
        if let Some(scale) = raw[0].scalar_multiple_of(&closed) {
            return SolutionSpace {
                symmetry,
                representation: rep.tag(),
                dimension,
                basis: vec![closed],
                closed_form_name: Some(crate::gamma::product_name(symmetry.closed_form_factors())),
                kernel_scale: Some(scale),
            };
        }
    }
    SolutionSpace {
        symmetry,
        representation: rep.tag(),
        dimension,
        basis: raw,
        closed_form_name: None,
        kernel_scale: None,
    }
}

pub fn solve_parity(rep: &GammaRep) -> SolutionSpace {
    solve_symmetry(Symmetry::Parity, rep)
}

pub fn solve_charge_conjugation(rep: &GammaRep) -> SolutionSpace {
    solve_symmetry(Symmetry::ChargeConjugation, rep)
}

pub fn solve_time_reversal(rep: &GammaRep) -> SolutionSpace {
    solve_symmetry(Symmetry::TimeReversal, rep)
}

/// `C (P⁻¹)∼ C⁻¹ = P`.
pub fn check_cp_compatibility(c: &Mat4, p: &Mat4) -> Result<bool> {
    let c_inv = c.inverse()?;
    let p_inv = p.inverse()?;
    Ok(c.matmul(&p_inv.transpose()).matmul(&c_inv) == *p)
}

/// `C T* = T C*`.
pub fn check_ct_compatibility(c: &Mat4, t: &Mat4) -> bool {
    c.matmul(&t.conjugate()) == t.matmul(&c.conjugate())
}

/// The four unit multipliers `{1, −1, i, −i}`.
pub fn unit_scalars() -> [ExactScalar; 4] {
    [ExactScalar::integer(1), ExactScalar::integer(-1), ExactScalar::gaussian(0, 1), ExactScalar::gaussian(0, -1)]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CptSolutionSet {
    pub variant: u8,
    pub representation: Representation,
    /// Multipliers `(z, η, w)` of the parity, charge conjugation and time
    /// reversal basis matrices.
    pub multipliers: [ExactScalar; 3],
    pub c: Mat4,
    pub p: Mat4,
    pub t: Mat4,
    pub theta: Mat4,
}

impl CptSolutionSet {
    /// Builds a set from standard-representation multipliers.
    pub fn from_multipliers(rep: &GammaRep, z: ExactScalar, eta: ExactScalar, w: ExactScalar) -> CptSolutionSet {
        let dp = GammaRep::dirac_pauli();
        let form = |s: Symmetry, k: &ExactScalar| s.transport(rep, &dp.product(s.closed_form_factors()).scale(k));
        let p = form(Symmetry::Parity, &z);
        let c = form(Symmetry::ChargeConjugation, &eta);
        let t = form(Symmetry::TimeReversal, &w);
        let theta = Mat4::product([&c, &p, &t]);
        let variant = if eta.mul_ref(&eta).is_one() { 1 } else { 2 };
        CptSolutionSet { variant, representation: rep.tag(), multipliers: [z, eta, w], c, p, t, theta }
    }

    /// `P = iγ₀, C = γ²γ₀, T = iγ³γ¹` (variant 1) or
    /// `P = iγ₀, C = iγ²γ₀, T = γ³γ¹` (variant 2), in `rep`.
    pub fn canonical(rep: &GammaRep, variant: u8) -> CptSolutionSet {
        let one = ExactScalar::one();
        let i = ExactScalar::i();
        match variant {
            1 => CptSolutionSet::from_multipliers(rep, i.clone(), one, i),
            _ => CptSolutionSet::from_multipliers(rep, i.clone(), i, one),
        }
    }

    /// The same set with every matrix carried back to the standard representation.
    pub fn to_dirac_pauli(&self, rep: &GammaRep) -> CptSolutionSet {
        let c = Symmetry::ChargeConjugation.to_dirac_pauli(rep, &self.c);
        let p = Symmetry::Parity.to_dirac_pauli(rep, &self.p);
        let t = Symmetry::TimeReversal.to_dirac_pauli(rep, &self.t);
        let theta = Mat4::product([&c, &p, &t]);
        CptSolutionSet {
            variant: self.variant,
            representation: Representation::DiracPauli,
            multipliers: self.multipliers.clone(),
            c,
            p,
            t,
            theta,
        }
    }

    /// Signs of `C², P², T²` (0 if not ±1), taken in the Dirac-Pauli frame:
    /// `C` and `T` transport as `SXSᵀ`, which does not preserve squares when
    /// `S` is complex.
    pub fn squares(&self) -> [i64; 3] {
        let dp = self.to_dirac_pauli(&GammaRep::of(self.representation));
        let sq = |m: &Mat4| {
            let s = m.matmul(m);
            if s.is_identity() {
                1
            } else if s == -&Mat4::identity() {
                -1
            } else {
                0
            }
        };
        [sq(&dp.c), sq(&dp.p), sq(&dp.t)]
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConsistentSets {
    pub representation: Representation,
    pub sets: Vec<CptSolutionSet>,
    /// Candidate triples examined.
    pub candidates: usize,
    /// True when no parity matrix with `P² = +1` is compatible with any `C`.
    pub parity_plus_rejected: bool,
}

impl ConsistentSets {
    pub fn family(&self, variant: u8) -> Vec<&CptSolutionSet> {
        self.sets.iter().filter(|s| s.variant == variant).collect()
    }

    pub fn variants(&self) -> Vec<u8> {
        let mut v: Vec<u8> = self.sets.iter().map(|s| s.variant).collect();
        v.sort_unstable();
        v.dedup();
        v
    }
}

/// Sweeps `z, η, w ∈ {±1, ±i}` over the one-dimensional solution lines and
/// keeps the triples that pass the unimodularity and both compatibility tests.
pub fn enumerate_consistent_sets(rep: &GammaRep) -> Result<ConsistentSets> {
    let units = unit_scalars();
    let mut sets = Vec::new();
    let mut candidates = 0;
    let mut parity_plus_compatible = false;
    let minus_one = -&Mat4::identity();
    for z in &units {
        for eta in &units {
            let probe = CptSolutionSet::from_multipliers(rep, z.clone(), eta.clone(), ExactScalar::one());
            let cp_ok = check_cp_compatibility(&probe.c, &probe.p)?;
            if cp_ok && probe.p.matmul(&probe.p).is_identity() {
                parity_plus_compatible = true;
            }
            for w in &units {
                candidates += 1;
                let set = CptSolutionSet::from_multipliers(rep, z.clone(), eta.clone(), w.clone());
                let unimodular = [&set.c, &set.p, &set.t].iter().all(|m| m.det().is_one());
                let eta_sq = eta.mul_ref(eta);
                let eta_ok = eta_sq.is_one() || (-&eta_sq).is_one();
                let tt_star = set.t.matmul(&set.t.conjugate()) == minus_one;
                if unimodular && eta_ok && tt_star && cp_ok && check_ct_compatibility(&set.c, &set.t) {
                    sets.push(set);
                }
            }
        }
    }
    Ok(ConsistentSets { representation: rep.tag(), sets, candidates, parity_plus_rejected: !parity_plus_compatible })
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    fn check(&mut self, name: &str, holds: bool) {
        self.checks.push(PropertyCheck { name: name.to_string(), holds });
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.holds).map(|c| c.name.as_str()).collect()
    }

    pub fn get(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.holds)
    }
}

/// Checks every adjoint, transpose, conjugate, square, determinant, trace and
/// class identity of a consistent set. Matrices are compared in the standard
/// representation, where these identities are stated.
pub fn verify_solution_properties(set: &CptSolutionSet) -> Result<PropertyReport> {
    let rep = GammaRep::of(set.representation);
    let s = set.to_dirac_pauli(&rep);
    let dp = GammaRep::dirac_pauli();
    let id = Mat4::identity();
    let minus_id = -&id;
    let mut r = PropertyReport::default();

    let (c, p, t, theta) = (&s.c, &s.p, &s.t, &s.theta);
    let (c_inv, p_inv, t_inv, theta_inv) = (c.inverse()?, p.inverse()?, t.inverse()?, theta.inverse()?);

    // P† = −P = P⁻¹ = −P∼ = P*
    r.check("P^2 = -1", p.matmul(p) == minus_id);
    r.check("P† = -P", p.dagger() == -p);
    r.check("P^-1 = -P", p_inv == -p);
    r.check("P~ = P", p.transpose() == *p);
    r.check("P* = -P", p.conjugate() == -p);

    match s.variant {
        1 => {
            r.check("C^2 = 1", c.matmul(c) == id);
            r.check("C^-1 = C", c_inv == *c);
            r.check("C† = C", c.dagger() == *c);
            r.check("C~ = -C", c.transpose() == -c);
            r.check("C* = -C", c.conjugate() == -c);
            r.check("T^2 = 1", t.matmul(t) == id);
            r.check("T† = T", t.dagger() == *t);
            r.check("T* = -T", t.conjugate() == -t);
            r.check("T^-1 = T", t_inv == *t);
            r.check("T~ = -T", t.transpose() == -t);
        }
        _ => {
            r.check("C^2 = -1", c.matmul(c) == minus_id);
            r.check("C^-1 = -C", c_inv == -c);
            r.check("C† = -C", c.dagger() == -c);
            r.check("C~ = -C", c.transpose() == -c);
            r.check("C* = C", c.conjugate() == *c);
            r.check("T^2 = -1", t.matmul(t) == minus_id);
            r.check("T† = -T", t.dagger() == -t);
            r.check("T* = T", t.conjugate() == *t);
            r.check("T^-1 = -T", t_inv == -t);
            r.check("T~ = -T", t.transpose() == -t);
        }
    }

    r.check("C C* = -1", c.matmul(&c.conjugate()) == minus_id);
    r.check("P T = T P", p.matmul(t) == t.matmul(p));
    r.check("T T* = -1", t.matmul(&t.conjugate()) == minus_id);

    let g123 = dp.product(&[1, 2, 3]);
    r.check("theta = ±g1g2g3", theta.equals_up_to_sign(&g123));
    r.check("theta^2 = 1", theta.matmul(theta) == id);
    r.check("theta† = theta", theta.dagger() == *theta);
    r.check("theta^-1 = theta", theta_inv == *theta);
    r.check("theta~ = -theta", theta.transpose() == -theta);
    r.check("theta* = -theta", theta.conjugate() == -theta);
    let i_g0_g5 = dp.gamma()[0].matmul(dp.gamma5()).scale(&ExactScalar::i());
    r.check("theta = ±i g0 g5", theta.equals_up_to_sign(&i_g0_g5));

    for (name, m) in [("C", c), ("P", p), ("T", t), ("theta", theta)] {
        r.check(&format!("det {name} = 1"), m.det().is_one());
        r.check(&format!("tr {name} = 0"), m.trace().is_zero());
    }

    let (kc, kp, kt, kth) = (classify(c), classify(p), classify(t), classify(theta));
    r.check("theta in K", kth.in_k());
    r.check("P in M", kp.in_m());
    if s.variant == 1 {
        r.check("C in K", kc.in_k());
        r.check("T in K", kt.in_k());
        r.check("C, T imaginary", kc.imaginary_entries && kt.imaginary_entries);
    } else {
        r.check("C in N", kc.in_n());
        r.check("T in N", kt.in_n());
        r.check("C, T real", kc.real_entries && kt.real_entries);
    }
    r.check("P, theta imaginary", kp.imaginary_entries && kth.imaginary_entries);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dp() -> GammaRep {
        GammaRep::dirac_pauli()
    }

    fn i() -> ExactScalar {
        ExactScalar::i()
    }

    #[test]
    fn parity_kernel_is_gamma0() {
        let rep = dp();
        let space = solve_parity(&rep);
        assert_eq!(space.dimension, 1);
        assert_eq!(space.basis[0], rep.gamma()[0]);
        assert_eq!(space.closed_form_name.as_deref(), Some("g0"));
        assert!(ConstraintSystem::parity(&rep).is_satisfied_by(&rep.gamma()[0]));
    }

    #[test]
    fn charge_conjugation_kernel_shape() {
        let rep = dp();
        let space = solve_charge_conjugation(&rep);
        assert_eq!(space.dimension, 1);
        let expected = Mat4::from_gaussian([
            [(0, 0), (0, 0), (0, 0), (0, 1)],
            [(0, 0), (0, 0), (0, -1), (0, 0)],
            [(0, 0), (0, 1), (0, 0), (0, 0)],
            [(0, -1), (0, 0), (0, 0), (0, 0)],
        ]);
        assert_eq!(space.basis[0], expected);
        assert!(space.basis[0].commutator(rep.gamma5()).is_zero());
    }

    #[test]
    fn time_reversal_kernel_shape() {
        let rep = dp();
        let space = solve_time_reversal(&rep);
        assert_eq!(space.dimension, 1);
        let expected = Mat4::from_ints([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]]);
        assert_eq!(space.basis[0], expected);
        assert!(space.basis[0].commutator(&rep.gamma()[0]).is_zero());
        assert!(space.basis[0].trace().is_zero());
    }

    #[test]
    fn weyl_parity_is_off_diagonal() {
        let rep = GammaRep::weyl();
        let space = solve_parity(&rep);
        assert_eq!(space.dimension, 1);
        let off = Mat4::from_ints([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]);
        assert!(space.basis[0].scalar_multiple_of(&off).is_some());
        assert_eq!(space.basis[0], rep.from_dirac_pauli(&dp().gamma()[0]));
    }

    #[test]
    fn majorana_charge_conjugation_is_real_and_acts_as_plain_conjugation() {
        let rep = GammaRep::majorana();
        let space = solve_charge_conjugation(&rep);
        assert_eq!(space.dimension, 1);
        let c = &space.basis[0];
        let real = c.scale(&i());
        assert!(real.all_entries(ExactScalar::is_real));
        // ψ_C = C γ₀ ψ* reduces to a phase times ψ*
        assert!(c.matmul(&rep.gamma()[0]).scalar_multiple_of(&Mat4::identity()).is_some());
        // back in the standard representation it is γ²γ₀
        let back = Symmetry::ChargeConjugation.to_dirac_pauli(&rep, c);
        assert_eq!(back, dp().product(&[2, 0]));
    }

    #[test]
    fn direct_solves_match_transport_everywhere() {
        let dp = dp();
        for tag in Representation::ALL {
            let rep = GammaRep::of(tag);
            for sym in Symmetry::ALL {
                let space = solve_symmetry(sym, &rep);
                assert_eq!(space.dimension, 1, "{sym} in {tag}");
                assert!(space.closed_form_name.is_some(), "{sym} in {tag}");
                let back = sym.to_dirac_pauli(&rep, &space.basis[0]);
                assert_eq!(back, dp.product(sym.closed_form_factors()), "{sym} in {tag}");
            }
        }
    }

    #[test]
    fn cp_compatibility_examples() {
        let rep = dp();
        let g0 = rep.gamma()[0].clone();
        let c = rep.product(&[2, 0]);
        assert!(!check_cp_compatibility(&c, &g0).unwrap());
        assert!(check_cp_compatibility(&c, &g0.scale(&i())).unwrap());
        let c2 = c.scale(&i());
        assert!(check_cp_compatibility(&c2, &g0.scale(&ExactScalar::gaussian(0, -1))).unwrap());
        assert_eq!(check_cp_compatibility(&Mat4::zero(), &g0), Err(Error::SingularMatrix));
    }

    #[test]
    fn ct_compatibility_examples() {
        let rep = dp();
        let c = rep.product(&[2, 0]);
        let t = rep.product(&[3, 1]);
        assert!(check_ct_compatibility(&c, &t.scale(&i())));
        assert!(check_ct_compatibility(&c.scale(&i()), &t));
        assert!(!check_ct_compatibility(&c, &t));
    }

    #[test]
    fn two_families_of_eight() {
        let sets = enumerate_consistent_sets(&dp()).unwrap();
        assert_eq!(sets.candidates, 64);
        assert_eq!(sets.sets.len(), 16);
        assert_eq!(sets.variants(), vec![1, 2]);
        assert!(sets.parity_plus_rejected);
        for s in sets.family(1) {
            assert_eq!(s.squares(), [1, -1, 1]);
        }
        for s in sets.family(2) {
            assert_eq!(s.squares(), [-1, -1, -1]);
        }
        assert_eq!(sets.family(1).len(), 8);
        assert_eq!(sets.family(2).len(), 8);
    }

    #[test]
    fn canonical_sets_are_members() {
        let rep = dp();
        let sets = enumerate_consistent_sets(&rep).unwrap();
        for v in [1, 2] {
            assert!(sets.sets.contains(&CptSolutionSet::canonical(&rep, v)));
        }
    }

    #[test]
    fn properties_hold_for_every_member() {
        let sets = enumerate_consistent_sets(&dp()).unwrap();
        for s in &sets.sets {
            let report = verify_solution_properties(s).unwrap();
            assert!(report.all_hold(), "variant {}: {:?}", s.variant, report.failures());
        }
    }

    #[test]
    fn property_report_names_failures() {
        let rep = dp();
        let mut broken = CptSolutionSet::canonical(&rep, 1);
        broken.t = broken.t.scale(&i());
        let report = verify_solution_properties(&broken).unwrap();
        assert!(!report.all_hold());
        assert!(report.failures().contains(&"T^2 = 1"));
    }
}
