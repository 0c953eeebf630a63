use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use cptgroup::cpt::CptGroup;
use cptgroup::gamma::GammaRep;
use cptgroup::group::{find_isomorphism, named, FiniteGroup, Permutation, Subset};
use cptgroup::matrix::Mat4;
use cptgroup::operator::build_operator_group;
use cptgroup::solver::{enumerate_consistent_sets, CptSolutionSet};
use cptgroup::ExactScalar;

fn rational() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=7).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (rational(), rational(), rational(), rational()).prop_map(|(p, q, r, s)| ExactScalar::new(p, q, r, s))
}

fn matrix() -> impl Strategy<Value = Mat4> {
    prop::collection::vec(scalar(), 16).prop_map(|v| Mat4::from_vec16(&v))
}

fn small_groups() -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = (1..=8).map(|n| named::cyclic(n).unwrap().group).collect();
    out.push(named::dihedral8().unwrap().group);
    out.push(named::dicyclic8().unwrap().group);
    out.push(named::quaternion().unwrap().group);
    out.push(named::klein());
    out.push(named::sign_group());
    out
}

fn all_groups() -> Vec<FiniteGroup> {
    let rep = GammaRep::dirac_pauli();
    let mut out = small_groups();
    out.push(CptGroup::canonical(&rep, 1).unwrap().concrete.group);
    out.push(CptGroup::canonical(&rep, 2).unwrap().concrete.group);
    out.push(build_operator_group().unwrap().concrete.group);
    out.push(named::dihedral8_times_z2().unwrap().group);
    out.push(named::dicyclic8_times_z2().unwrap().group);
    out.push(named::group_16e().unwrap().group);
    out
}

/// Subgroups by testing every subset containing the identity for closure.
fn subgroups_by_power_set(g: &FiniteGroup) -> Vec<Subset> {
    let n = g.order();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let s = Subset(mask);
        if !s.contains(g.identity()) {
            continue;
        }
        let idx = s.indices();
        if idx.iter().all(|&a| idx.iter().all(|&b| s.contains(g.mul(a, b)))) {
            out.push(s);
        }
    }
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add_ref(&b), b.add_ref(&a));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(a.add_ref(&b).add_ref(&c), a.add_ref(&b.add_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&b.add_ref(&c)), a.mul_ref(&b).add_ref(&a.mul_ref(&c)));
        prop_assert_eq!(a.add_ref(&ExactScalar::zero()), a.clone());
        prop_assert_eq!(a.mul_ref(&ExactScalar::one()), a.clone());
        prop_assert!(a.add_ref(&-a.clone()).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul_ref(&a.inverse().unwrap()).is_one());
        } else {
            prop_assert!(a.inverse().is_err());
        }
        prop_assert_eq!(a.mul_ref(&b).conjugate(), a.conjugate().mul_ref(&b.conjugate()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn basis_expansion_round_trips(m in matrix()) {
        for rep in [GammaRep::dirac_pauli(), GammaRep::weyl(), GammaRep::majorana()] {
            prop_assert_eq!(rep.recombine(&rep.basis_expand(&m)), m.clone());
        }
    }

    #[test]
    fn relabelling_preserves_isomorphism_type(
        which in 0usize..6,
        order in Just((0..16).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let groups = all_groups();
        let g = &groups[groups.len() - 1 - which];
        let labels: Vec<String> = order.iter().map(|i| format!("e{i}")).collect();
        let h = g.permuted(&order, labels, "shuffled").unwrap();
        prop_assert_eq!(h.order_profile(), g.order_profile());
        prop_assert!(find_isomorphism(g, &h).is_some());
        prop_assert!(find_isomorphism(&h, g).is_some());
    }

    #[test]
    fn permutations_compose_as_functions(
        a in Just((1..=8).collect::<Vec<usize>>()).prop_shuffle(),
        b in Just((1..=8).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let p = Permutation::from_images(&a).unwrap();
        let q = Permutation::from_images(&b).unwrap();
        for x in 1..=8 {
            prop_assert_eq!(p.compose(&q).apply(x), p.apply(q.apply(x)));
        }
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(Permutation::parse(&p.cycle_string(), 8).unwrap(), p.clone());
    }
}

#[test]
fn every_group_is_a_latin_square_and_associative() {
    for g in all_groups() {
        let n = g.order();
        for r in 0..n {
            let mut row: Vec<usize> = (0..n).map(|c| g.mul(r, c)).collect();
            let mut col: Vec<usize> = (0..n).map(|c| g.mul(c, r)).collect();
            row.sort_unstable();
            col.sort_unstable();
            assert_eq!(row, (0..n).collect::<Vec<_>>(), "{} row {r}", g.name);
            assert_eq!(col, (0..n).collect::<Vec<_>>(), "{} column {r}", g.name);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)), "{}", g.name);
                }
            }
        }
    }
}

#[test]
fn regular_representations_are_faithful() {
    for g in all_groups() {
        let labeling: Vec<usize> = (0..g.order()).collect();
        let reg = g.regular_representation(&labeling).unwrap();
        for a in 0..g.order() {
            assert_eq!(reg[a].is_identity(), a == g.identity(), "{}", g.name);
            for b in 0..g.order() {
                assert_eq!(reg[g.mul(a, b)], reg[a].compose(&reg[b]), "{}", g.name);
            }
        }
    }
}

#[test]
fn subgroup_enumeration_matches_power_set() {
    for g in small_groups() {
        let mut found = g.subgroups();
        found.sort();
        assert_eq!(found, subgroups_by_power_set(&g), "{}", g.name);
    }
}

#[test]
fn isomorphism_is_symmetric_and_respects_profiles() {
    let groups = all_groups();
    for a in &groups {
        for b in &groups {
            let ab = find_isomorphism(a, b).is_some();
            assert_eq!(ab, find_isomorphism(b, a).is_some(), "{} {}", a.name, b.name);
            if ab {
                assert_eq!(a.order_profile(), b.order_profile());
            }
        }
    }
}

#[test]
fn enumeration_is_invariant_under_change_of_representation() {
    let dp = GammaRep::dirac_pauli();
    let reference = enumerate_consistent_sets(&dp).unwrap();
    for rep in [GammaRep::weyl(), GammaRep::majorana()] {
        let other = enumerate_consistent_sets(&rep).unwrap();
        assert_eq!(other.sets.len(), reference.sets.len());
        let back: Vec<CptSolutionSet> = other.sets.iter().map(|s| s.to_dirac_pauli(&rep)).collect();
        for s in &reference.sets {
            assert!(back.iter().any(|b| b.c == s.c && b.p == s.p && b.t == s.t), "{:?}", s.multipliers);
        }
        let squares: BTreeMap<u8, Vec<[i64; 3]>> =
            [1, 2].into_iter().map(|v| (v, other.family(v).iter().map(|s| s.squares()).collect())).collect();
        assert!(squares[&1].iter().all(|q| *q == [1, -1, 1]));
        assert!(squares[&2].iter().all(|q| *q == [-1, -1, -1]));
    }
}

#[test]
fn theta_squares_to_identity_for_every_set() {
    let sets = enumerate_consistent_sets(&GammaRep::dirac_pauli()).unwrap();
    for s in &sets.sets {
        assert!(Mat4::product([&s.c, &s.p, &s.t]).power(2).is_identity());
    }
}
