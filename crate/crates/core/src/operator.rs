//! The group generated by the field-theory operators **C**, **P**, **T**,
//! realized on pairs (quaternion unit, sign) with
//! `C = (1, −1)`, `P = (i, 1)`, `T = (j, 1)`.

use std::fmt;
use std::ops::{Mul, Neg};

use serde::Serialize;

use crate::cpt::{basic_table, BasicTable};
use crate::error::{Error, Result};
use crate::group::{generate_closure, ConcreteGroup, FiniteGroup, GroupElement, DEFAULT_CAP};
use crate::quaternion::Quaternion;
use crate::solver::CptSolutionSet;

pub const OPERATOR_LABELS: [&str; 16] =
    ["1", "C", "P", "T", "C*P", "C*T", "P*T", "Theta", "-C", "-P", "-T", "-C*P", "-C*T", "-P*T", "-Theta", "-1"];

pub const OPERATOR_BASIC_LABELS: [&str; 8] = ["1", "C", "P", "T", "C*P", "C*T", "P*T", "Theta"];

#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct OperatorElement {
    pub quaternion: Quaternion,
    pub sign: i8,
}

impl OperatorElement {
    pub const ONE: OperatorElement = OperatorElement { quaternion: Quaternion::ONE, sign: 1 };
    pub const MINUS_ONE: OperatorElement = OperatorElement { quaternion: Quaternion::MINUS_ONE, sign: 1 };
    pub const C: OperatorElement = OperatorElement { quaternion: Quaternion::ONE, sign: -1 };
    pub const P: OperatorElement = OperatorElement { quaternion: Quaternion::I, sign: 1 };
    pub const T: OperatorElement = OperatorElement { quaternion: Quaternion::J, sign: 1 };

    pub fn new(quaternion: Quaternion, sign: i8) -> OperatorElement {
        OperatorElement { quaternion, sign: sign.signum() }
    }

    /// Evaluates `*`-separated words over `C`, `P`, `T`, `1`, each factor
    /// optionally negated: `"T*P"`, `"-P*T"`, `"-1*-1"`.
    pub fn eval(word: &str) -> Result<OperatorElement> {
        word.split('*')
            .map(|tok| {
                let t = tok.trim();
                let (neg, body) = match t.strip_prefix('-') {
                    Some(r) => (true, r.trim()),
                    None => (false, t),
                };
                let e = match body {
                    "1" => OperatorElement::ONE,
                    "C" => OperatorElement::C,
                    "P" => OperatorElement::P,
                    "T" => OperatorElement::T,
                    _ => return Err(Error::Parse(format!("unknown operator {tok:?} in {word:?}"))),
                };
                Ok(if neg { e.neg() } else { e })
            })
            .try_fold(OperatorElement::ONE, |acc, e| Ok(acc.mul(e?)))
    }
}

impl Mul for OperatorElement {
    type Output = OperatorElement;
    fn mul(self, rhs: OperatorElement) -> OperatorElement {
        OperatorElement { quaternion: self.quaternion * rhs.quaternion, sign: self.sign * rhs.sign }
    }
}

impl Neg for OperatorElement {
    type Output = OperatorElement;
    fn neg(self) -> OperatorElement {
        OperatorElement::MINUS_ONE * self
    }
}

impl fmt::Display for OperatorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.quaternion, self.sign)
    }
}

impl fmt::Debug for OperatorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl GroupElement for OperatorElement {
    fn op(&self, rhs: &OperatorElement) -> OperatorElement {
        self.mul(*rhs)
    }
    fn identity_like(&self) -> OperatorElement {
        OperatorElement::ONE
    }
    fn default_label(&self, _index: usize) -> String {
        self.to_string()
    }
}

/// Word equalities the realization must satisfy.
#[derive(Clone, Debug, Serialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relations: Vec<(String, String)>,
}

impl Presentation {
    pub fn standard() -> Presentation {
        let rel = |a: &str, b: &str| (a.to_string(), b.to_string());
        Presentation {
            generators: vec!["C".into(), "P".into(), "T".into()],
            relations: vec![
                rel("P*P", "-1"),
                rel("C*C", "1"),
                rel("T*T", "-1"),
                rel("T*P", "-P*T"),
                rel("C*P", "P*C"),
                rel("C*T", "T*C"),
                rel("-1*-1", "1"),
            ],
        }
    }

    /// `(relation, holds)` for each relation.
    pub fn check(&self) -> Result<Vec<(String, bool)>> {
        self.relations
            .iter()
            .map(|(a, b)| Ok((format!("{a} = {b}"), OperatorElement::eval(a)? == OperatorElement::eval(b)?)))
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct OperatorGroup {
    pub concrete: ConcreteGroup<OperatorElement>,
}

impl OperatorGroup {
    pub fn group(&self) -> &FiniteGroup {
        &self.concrete.group
    }

    pub fn element(&self, label: &str) -> Result<OperatorElement> {
        Ok(self.concrete.elements[self.group().index_of(label)?])
    }

    pub fn basic_table(&self) -> Result<BasicTable> {
        basic_table(self.group(), &OPERATOR_BASIC_LABELS)
    }
}

/// `1, C, P, T, C*P, C*T, P*T, Θ` and their negatives.
pub fn named_operator_elements() -> Vec<OperatorElement> {
    let (c, p, t) = (OperatorElement::C, OperatorElement::P, OperatorElement::T);
    let positive = [OperatorElement::ONE, c, p, t, c.mul(p), c.mul(t), p.mul(t), c.mul(p).mul(t)];
    let mut out = positive.to_vec();
    out.extend(positive[1..].iter().map(|e| e.neg()));
    out.push(OperatorElement::MINUS_ONE);
    out
}

/// Closes the realization, checks every relation of the presentation and
/// names the elements.
pub fn build_operator_group() -> Result<OperatorGroup> {
    for (rel, holds) in Presentation::standard().check()? {
        if !holds {
            return Err(Error::RelationFailed(rel));
        }
    }
    let closure =
        generate_closure("GTheta", &[OperatorElement::C, OperatorElement::P, OperatorElement::T], DEFAULT_CAP)?;
    let labels: Vec<String> = OPERATOR_LABELS.iter().map(|s| s.to_string()).collect();
    let concrete = closure.arrange(&named_operator_elements(), &labels)?;
    Ok(OperatorGroup { concrete })
}

/// The matrix-level consequence of `C*T = T*C`: `TC = C*T`, which together
/// with `CT* = TC*` forces `T* = T`. Returns the unique variant whose sets
/// pass; errors if none or more than one variant does.
pub fn select_matrix_group(sets: &[CptSolutionSet]) -> Result<u8> {
    let mut passing: Vec<u8> = sets.iter().filter(|s| selection_criterion(s)).map(|s| s.variant).collect();
    passing.sort_unstable();
    passing.dedup();
    match passing.as_slice() {
        [v] => Ok(*v),
        [] => Err(Error::Selection("no variant satisfies T* = T".into())),
        more => Err(Error::Selection(format!("variants {more:?} all satisfy T* = T"))),
    }
}

/// `T* = T` and `TC = C*T`.
pub fn selection_criterion(set: &CptSolutionSet) -> bool {
    set.t.conjugate() == set.t && set.t.matmul(&set.c) == set.c.conjugate().matmul(&set.t)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::gamma::GammaRep;
    use crate::solver::enumerate_consistent_sets;

    #[test]
    fn relations_hold() {
        assert!(Presentation::standard().check().unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn closes_at_sixteen() {
        let g = build_operator_group().unwrap();
        assert_eq!(g.group().order(), 16);
        assert_eq!(g.group().order_profile(), BTreeMap::from([(1, 1), (2, 3), (4, 12)]));
        let involutions: Vec<&str> = g.group().elements_of_order(2).iter().map(|&i| g.group().label(i)).collect();
        assert_eq!(involutions, vec!["C", "-C", "-1"]);
    }

    #[test]
    fn table_spot_checks() {
        let t = build_operator_group().unwrap().basic_table().unwrap();
        assert_eq!(t.get("T", "P"), Some("-P*T"));
        assert_eq!(t.get("C", "C"), Some("1"));
        assert_eq!(t.get("Theta", "Theta"), Some("-1"));
        assert_eq!(t.get("P", "T"), Some("P*T"));
    }

    #[test]
    fn theta_is_cpt_and_squares_to_minus_one() {
        let g = build_operator_group().unwrap();
        let theta = g.element("Theta").unwrap();
        assert_eq!(theta, OperatorElement::eval("C*P*T").unwrap());
        assert_eq!(theta.mul(theta), OperatorElement::MINUS_ONE);
    }

    #[test]
    fn selects_second_variant() {
        let rep = GammaRep::dirac_pauli();
        let sets = enumerate_consistent_sets(&rep).unwrap().sets;
        assert_eq!(select_matrix_group(&sets).unwrap(), 2);
        assert!(!selection_criterion(&CptSolutionSet::canonical(&rep, 1)));
        assert!(selection_criterion(&CptSolutionSet::canonical(&rep, 2)));
        let only_one: Vec<_> = sets.iter().filter(|s| s.variant == 1).cloned().collect();
        assert!(matches!(select_matrix_group(&only_one), Err(Error::Selection(_))));
    }
}
