//! Exact structural flags of a 4×4 matrix and the three classes of
//! traceless unitary unimodular matrices the discrete symmetries fall into.

use serde::Serialize;

use crate::matrix::Mat4;
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MatrixClass {
    pub unitary: bool,
    pub unimodular: bool,
    pub traceless: bool,
    pub hermitian: bool,
    pub antihermitian: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub real_entries: bool,
    pub imaginary_entries: bool,
}

impl MatrixClass {
    fn special_unitary_traceless(&self) -> bool {
        self.unitary && self.unimodular && self.traceless
    }

    /// Hermitian and antisymmetric (`K`).
    pub fn in_k(&self) -> bool {
        self.special_unitary_traceless() && self.hermitian && self.antisymmetric
    }

    /// Antihermitian and symmetric (`M`).
    pub fn in_m(&self) -> bool {
        self.special_unitary_traceless() && self.antihermitian && self.symmetric
    }

    /// Antihermitian and antisymmetric (`N`).
    pub fn in_n(&self) -> bool {
        self.special_unitary_traceless() && self.antihermitian && self.antisymmetric
    }
}

pub fn classify(m: &Mat4) -> MatrixClass {
    let dagger = m.dagger();
    let transpose = m.transpose();
    let neg = -m;
    MatrixClass {
        unitary: m.matmul(&dagger).is_identity(),
        unimodular: m.det().is_one(),
        traceless: m.trace().is_zero(),
        hermitian: dagger == *m,
        antihermitian: dagger == neg,
        symmetric: transpose == *m,
        antisymmetric: transpose == neg,
        real_entries: m.all_entries(ExactScalar::is_real),
        imaginary_entries: m.all_entries(ExactScalar::is_imaginary),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::GammaRep;

    #[test]
    fn theta_is_in_k() {
        let rep = GammaRep::dirac_pauli();
        let class = classify(&rep.product(&[1, 2, 3]));
        assert!(class.in_k());
        assert!(class.imaginary_entries);
    }

    #[test]
    fn parity_is_in_m() {
        let rep = GammaRep::dirac_pauli();
        let p = rep.gamma()[0].scale(&ExactScalar::i());
        assert!(classify(&p).in_m());
    }

    #[test]
    fn second_charge_conjugation_is_real_and_in_n() {
        let rep = GammaRep::dirac_pauli();
        let c = rep.product(&[2, 0]).scale(&ExactScalar::i());
        let class = classify(&c);
        assert!(class.in_n());
        assert!(class.real_entries);
        assert!(!class.in_k() && !class.in_m());
    }

    #[test]
    fn identity_flags() {
        let class = classify(&Mat4::identity());
        assert!(class.unitary && class.unimodular && class.hermitian && class.symmetric);
        assert!(!class.traceless && !class.antisymmetric && !class.imaginary_entries);
    }
}
