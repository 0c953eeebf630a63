//! The full verification pipeline: every published claim recomputed and
//! recorded with a pass, fail or mismatch status.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cpt::{CptGroup, BASIC_LABELS, CPT_LABELS};
use crate::error::{Error, Result};
use crate::gamma::GammaRep;
use crate::group::map::extend_from_generators;
use crate::group::named::{self, Alphabet};
use crate::group::{
    conjugation_action, find_isomorphism, semidirect_product, verify_printed_map, ConcreteGroup, FiniteGroup, GroupMap,
    Permutation, PrintedEntry, PrintedMapCheck, ShortExactSequence, Subset,
};
use crate::listings as lst;
use crate::matrix::Mat4;
use crate::operator::{
    build_operator_group, select_matrix_group, selection_criterion, OperatorElement, OperatorGroup, Presentation,
    OPERATOR_BASIC_LABELS, OPERATOR_LABELS,
};
use crate::quaternion::Quaternion;
use crate::scalar::ExactScalar;
use crate::solver::{
    enumerate_consistent_sets, solve_symmetry, verify_solution_properties, ConsistentSets, ConstraintSystem,
    CptSolutionSet, Symmetry,
};

pub const SCHEMA: &str = "cptgroup-report/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Mismatch,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim_id: String,
    pub section: String,
    pub description: String,
    pub status: Status,
    pub details: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct IsomorphismCheck {
    pub target: String,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub group: String,
    pub order: usize,
    pub profile: BTreeMap<usize, usize>,
    pub table: Vec<Vec<String>>,
    pub cycles: Vec<(String, String)>,
    pub isomorphisms_checked: Vec<IsomorphismCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub mismatch: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: String,
    pub strict: bool,
    pub overall: Status,
    pub counts: Counts,
    pub sections: Vec<Claim>,
    pub groups: Vec<GroupSummary>,
}

impl VerificationReport {
    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.sections.iter().find(|c| c.claim_id == id)
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    /// Claims that make the run fail under the current strictness.
    pub fn failing(&self) -> Vec<&Claim> {
        self.sections
            .iter()
            .filter(|c| c.status == Status::Fail || (self.strict && c.status == Status::Mismatch))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Named sub-checks of one claim.
#[derive(Default)]
struct Checks {
    items: Vec<(String, bool)>,
}

impl Checks {
    fn add(&mut self, name: impl Into<String>, ok: bool) -> &mut Checks {
        self.items.push((name.into(), ok));
        self
    }

    fn ok(&self) -> bool {
        self.items.iter().all(|(_, ok)| *ok)
    }

    fn status(&self) -> Status {
        if self.ok() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn json(&self) -> Value {
        let failed: Vec<&str> = self.items.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect();
        json!({ "checked": self.items.len(), "failed": failed })
    }

    fn done(&self) -> Result<(Status, Value)> {
        Ok((self.status(), self.json()))
    }
}

struct Builder {
    claims: Vec<Claim>,
    section: &'static str,
}

impl Builder {
    fn claim(&mut self, id: &str, description: &str, f: impl FnOnce() -> Result<(Status, Value)>) {
        let (status, details) = f().unwrap_or_else(|e| (Status::Fail, json!({ "error": e.to_string() })));
        self.claims.push(Claim {
            claim_id: id.to_string(),
            section: self.section.to_string(),
            description: description.to_string(),
            status,
            details,
        });
    }
}

/// Everything the claims are computed from, built once.
struct Context {
    dp: GammaRep,
    weyl: GammaRep,
    majorana: GammaRep,
    sets: ConsistentSets,
    g1: CptGroup,
    g2: CptGroup,
    gtheta: OperatorGroup,
    dh8: ConcreteGroup<Permutation>,
    dh8z2: ConcreteGroup<Permutation>,
    dc8: ConcreteGroup<Permutation>,
    dc8z2: ConcreteGroup<Permutation>,
    e16: ConcreteGroup<Permutation>,
    q: FiniteGroup,
    qs0: FiniteGroup,
}

impl Context {
    fn build() -> Result<Context> {
        let dp = GammaRep::dirac_pauli();
        let sets = enumerate_consistent_sets(&dp)?;
        let q = named::quaternion()?.group;
        Ok(Context {
            weyl: GammaRep::weyl(),
            majorana: GammaRep::majorana(),
            g1: CptGroup::canonical(&dp, 1)?,
            g2: CptGroup::canonical(&dp, 2)?,
            gtheta: build_operator_group()?,
            dh8: named::dihedral8()?,
            dh8z2: named::dihedral8_times_z2()?,
            dc8: named::dicyclic8()?,
            dc8z2: named::dicyclic8_times_z2()?,
            e16: named::group_16e()?,
            qs0: q.direct_product(&named::sign_group(), "QxS0")?,
            q,
            sets,
            dp,
        })
    }
}

fn table_diff(computed: &[Vec<String>], printed: &[Vec<String>], labels: &[&str]) -> Vec<Value> {
    let mut diffs = Vec::new();
    for (r, (crow, prow)) in computed.iter().zip(printed).enumerate() {
        for (c, (x, y)) in crow.iter().zip(prow).enumerate() {
            if x != y {
                diffs.push(json!({ "row": labels[r], "col": labels[c], "printed": y, "computed": x }));
            }
        }
    }
    diffs
}

fn labels_of(g: &FiniteGroup, s: Subset) -> Vec<String> {
    s.indices().iter().map(|&i| g.label(i).to_string()).collect()
}

fn set_of(g: &FiniteGroup, labels: &[&str]) -> Result<Subset> {
    Ok(Subset::from_indices(labels.iter().map(|l| g.index_of(l)).collect::<Result<Vec<_>>>()?))
}

fn resolve_all(alpha: &Alphabet, g: &ConcreteGroup<Permutation>, words: &[&str]) -> Result<Subset> {
    Ok(Subset::from_indices(words.iter().map(|w| alpha.resolve(g, w)).collect::<Result<Vec<_>>>()?))
}

fn map_status(check: &PrintedMapCheck) -> Status {
    if check.exact() {
        Status::Pass
    } else if (check.isomorphism || check.repaired) && !check.mismatches.is_empty() {
        Status::Mismatch
    } else {
        Status::Fail
    }
}

fn map_claim(check: PrintedMapCheck) -> Result<(Status, Value)> {
    Ok((map_status(&check), serde_json::to_value(&check).expect("serializable")))
}

fn simple_entries(pairs: &[(&str, &str)]) -> Vec<PrintedEntry> {
    pairs.iter().map(|(s, t)| PrintedEntry::new(s, &[t])).collect()
}

/// The subgroup of a permutation group spanned by `words`, relabelled with
/// those words.
fn word_subgroup(
    g: &ConcreteGroup<Permutation>,
    alpha: &Alphabet,
    words: &[&str],
    name: &str,
) -> Result<(FiniteGroup, Vec<usize>)> {
    let set = resolve_all(alpha, g, words)?;
    let (sub, members) = g.group.subgroup(set, name)?;
    let labels = members
        .iter()
        .map(|&m| {
            words
                .iter()
                .find(|w| alpha.resolve(g, w).ok() == Some(m))
                .map(|w| w.to_string())
                .ok_or_else(|| Error::LabelNotFound(g.group.label(m).to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((sub.relabeled(labels)?, members))
}

/// `N ⋊ H` for subgroups of `g` given by words, with `H` acting by
/// conjugation, plus the multiplication map `(n, h) ↦ nh` into `g`.
fn internal_semidirect(
    g: &ConcreteGroup<Permutation>,
    alpha: &Alphabet,
    n_words: &[&str],
    h_words: &[&str],
    name: &str,
) -> Result<(FiniteGroup, GroupMap)> {
    let (n, n_members) = word_subgroup(g, alpha, n_words, "N")?;
    let (h, h_members) = word_subgroup(g, alpha, h_words, "H")?;
    let action = conjugation_action(&g.group, &n_members, &h_members);
    let sd = semidirect_product(&n, &h, &action, name)?;
    let b = h.order();
    let images = (0..sd.order()).map(|p| g.group.mul(n_members[p / b], h_members[p % b])).collect();
    let psi = GroupMap::new(&sd, &g.group, images)?;
    Ok((sd, psi))
}

fn section_from(ses: &ShortExactSequence, elements: &[usize]) -> Vec<usize> {
    let q = &ses.quotient_group;
    let mut section = vec![usize::MAX; q.order()];
    section[q.identity()] = ses.middle_group.identity();
    for &e in elements {
        section[ses.projection.apply(e)] = e;
    }
    section
}

fn up_to_sign(computed: &Mat4, printed: &Mat4) -> bool {
    computed.equals_up_to_sign(printed)
}

/// Runs every check. With `strict`, printed-listing mismatches fail the run.
pub fn run_verification(strict: bool) -> Result<VerificationReport> {
    let ctx = Context::build()?;
    let mut b = Builder { claims: Vec::new(), section: "dirac-algebra" };
    algebra_claims(&ctx, &mut b);
    b.section = "symmetry-solver";
    solver_claims(&ctx, &mut b);
    b.section = "matrix-groups";
    matrix_group_claims(&ctx, &mut b);
    b.section = "extensions";
    extension_claims(&ctx, &mut b);
    b.section = "operator-group";
    operator_claims(&ctx, &mut b);
    b.section = "representations";
    representation_claims(&ctx, &mut b);

    let groups = summaries(&ctx)?;
    let count = |s: Status| b.claims.iter().filter(|c| c.status == s).count();
    let counts = Counts { pass: count(Status::Pass), fail: count(Status::Fail), mismatch: count(Status::Mismatch) };
    let failed = counts.fail > 0 || (strict && counts.mismatch > 0);
    Ok(VerificationReport {
        schema: SCHEMA.to_string(),
        strict,
        overall: if failed { Status::Fail } else { Status::Pass },
        counts,
        sections: b.claims,
        groups,
    })
}

fn algebra_claims(ctx: &Context, b: &mut Builder) {
    for rep in [&ctx.dp, &ctx.weyl, &ctx.majorana] {
        let id = format!("clifford-{}", rep.tag().short_name());
        b.claim(&id, "anticommutators of the gamma matrices equal twice the metric", || {
            let v = rep.clifford_violations();
            Ok((if v.is_empty() { Status::Pass } else { Status::Fail }, json!({ "violations": v })))
        });
    }
    b.claim("basis-16", "the sixteen products of distinct gamma matrices form a basis", || {
        let mut c = Checks::default();
        for rep in [&ctx.dp, &ctx.weyl, &ctx.majorana] {
            c.add(format!("{} basis size", rep.tag()), rep.canonical_basis().len() == 16);
            for e in rep.canonical_basis() {
                let back = rep.recombine(&rep.basis_expand(&e.matrix));
                c.add(format!("{} {}", rep.tag(), e.name), back == e.matrix);
            }
        }
        c.done()
    });
}

fn solver_claims(ctx: &Context, b: &mut Builder) {
    for (sym, id, desc) in [
        (Symmetry::Parity, "solve-p-dp", "parity constraints have the one-dimensional solution space spanned by g0"),
        (
            Symmetry::ChargeConjugation,
            "solve-c-dp",
            "charge conjugation constraints have the one-dimensional solution space spanned by g2g0",
        ),
        (
            Symmetry::TimeReversal,
            "solve-t-dp",
            "time reversal constraints have the one-dimensional solution space spanned by g3g1",
        ),
    ] {
        b.claim(id, desc, || {
            let space = solve_symmetry(sym, &ctx.dp);
            let expected = ctx.dp.product(sym.closed_form_factors());
            let mut c = Checks::default();
            c.add("dimension 1", space.dimension == 1);
            c.add("basis is the closed form", space.single() == Some(&expected));
            c.add(
                "closed form satisfies every constraint",
                ConstraintSystem::for_symmetry(sym, &ctx.dp).is_satisfied_by(&expected),
            );
            let (status, mut details) = c.done()?;
            details["dimension"] = json!(space.dimension);
            details["closed_form"] = json!(space.closed_form_name);
            details["basis"] = json!(space.basis.iter().map(Mat4::to_string).collect::<Vec<_>>());
            Ok((status, details))
        });
    }
    b.claim(
        "solve-other-reps",
        "direct solves in the Weyl and Majorana representations are one-dimensional and carry back to the standard closed forms",
        || {
            let mut c = Checks::default();
            for rep in [&ctx.weyl, &ctx.majorana] {
                for sym in Symmetry::ALL {
                    let space = solve_symmetry(sym, rep);
                    let back = space.single().map(|m| sym.to_dirac_pauli(rep, m));
                    c.add(format!("{sym} {} dimension", rep.tag()), space.dimension == 1);
                    c.add(
                        format!("{sym} {} closed form", rep.tag()),
                        back == Some(ctx.dp.product(sym.closed_form_factors())),
                    );
                }
            }
            c.done()
        },
    );
    b.claim(
        "compat-families",
        "the consistent sign choices form two families of eight with squares (1,-1,1) and (-1,-1,-1)",
        || {
            let s = &ctx.sets;
            let mut c = Checks::default();
            c.add("sixteen consistent sets", s.sets.len() == 16);
            c.add("two variants", s.variants() == vec![1, 2]);
            c.add("eight in each family", s.family(1).len() == 8 && s.family(2).len() == 8);
            c.add("family 1 squares", s.family(1).iter().all(|x| x.squares() == [1, -1, 1]));
            c.add("family 2 squares", s.family(2).iter().all(|x| x.squares() == [-1, -1, -1]));
            for v in [1, 2] {
                c.add(format!("plus-sign set {v} consistent"), s.sets.contains(&CptSolutionSet::canonical(&ctx.dp, v)));
            }
            let (status, mut details) = c.done()?;
            details["candidates"] = json!(s.candidates);
            Ok((status, details))
        },
    );
    b.claim("compat-parity-plus", "no parity matrix with P^2 = +1 is compatible with any charge conjugation", || {
        let mut c = Checks::default();
        c.add("P^2 = +1 rejected", ctx.sets.parity_plus_rejected);
        let ig0 = ctx.dp.gamma()[0].scale(&ExactScalar::i());
        c.add("every surviving P is ±i g0", ctx.sets.sets.iter().all(|s| s.p.equals_up_to_sign(&ig0)));
        c.done()
    });
    b.claim("theta-39", "theta = CPT is ±g1g2g3 = ±i g0 g5 for every consistent set", || {
        let g123 = ctx.dp.product(&[1, 2, 3]);
        let mut c = Checks::default();
        c.add("all sets", ctx.sets.sets.iter().all(|s| s.theta.equals_up_to_sign(&g123)));
        let i_g0_g5 = ctx.dp.gamma()[0].matmul(ctx.dp.gamma5()).scale(&ExactScalar::i());
        c.add("i g0 g5", g123.equals_up_to_sign(&i_g0_g5));
        c.add("block form", g123.equals_up_to_sign(&lst::theta_block_form()));
        let t1 = &CptSolutionSet::canonical(&ctx.dp, 1).theta;
        let t2 = &CptSolutionSet::canonical(&ctx.dp, 2).theta;
        c.add("same theta for both plus-sign sets", t1 == t2);
        c.done()
    });
    b.claim(
        "theta-40",
        "theta^2 = 1, theta is hermitian, unitary, antisymmetric, imaginary, unimodular and traceless",
        || {
            let mut c = Checks::default();
            for s in &ctx.sets.sets {
                let t = &s.theta;
                let tag = format!("{:?}", s.multipliers.iter().map(ExactScalar::to_string).collect::<Vec<_>>());
                c.add(format!("{tag} square"), t.matmul(t).is_identity());
                c.add(format!("{tag} hermitian"), t.dagger() == *t);
                c.add(format!("{tag} inverse"), t.inverse()? == *t);
                c.add(format!("{tag} transpose"), t.transpose() == -t);
                c.add(format!("{tag} conjugate"), t.conjugate() == -t);
                c.add(format!("{tag} det"), t.det().is_one());
                c.add(format!("{tag} trace"), t.trace().is_zero());
            }
            c.done()
        },
    );
    let prop_claim = |b: &mut Builder, id: &str, desc: &str, prefix: &'static [&'static str]| {
        b.claim(id, desc, || {
            let mut c = Checks::default();
            for s in &ctx.sets.sets {
                let r = verify_solution_properties(s)?;
                for chk in r.checks.iter().filter(|k| prefix.iter().any(|p| k.name.starts_with(p))) {
                    c.add(format!("variant {} {:?}: {}", s.variant, s.multipliers, chk.name), chk.holds);
                }
            }
            c.done()
        });
    };
    prop_claim(b, "props-9b", "P = ±i g0 is antihermitian, symmetric, imaginary, and squares to -1", &["P"]);
    prop_claim(
        b,
        "props-21",
        "adjoint, transpose and conjugation identities of both charge conjugation variants",
        &["C"],
    );
    prop_claim(
        b,
        "props-32-33",
        "adjoint, transpose and conjugation identities of both time reversal variants",
        &["T"],
    );
    prop_claim(b, "props-det-tr", "C, P, T and theta are unimodular and traceless", &["det", "tr"]);
    prop_claim(
        b,
        "classes-41-42",
        "class membership: C, T, theta in K and P in M for variant 1; theta in K, P in M, C, T in N for variant 2",
        &["theta in", "P in", "C in", "T in", "C, T", "P, theta"],
    );
}

fn matrix_group_claims(ctx: &Context, b: &mut Builder) {
    for (g, table, cycles, o2, o4, profile, n) in [
        (
            &ctx.g1,
            &lst::TABLE_G1,
            &lst::CYCLES_G1,
            &lst::ORDER2_G1[..],
            &lst::ORDER4_G1[..],
            [(1, 1), (2, 11), (4, 4)],
            "43",
        ),
        (
            &ctx.g2,
            &lst::TABLE_G2,
            &lst::CYCLES_G2,
            &lst::ORDER2_G2[..],
            &lst::ORDER4_G2[..],
            [(1, 1), (2, 7), (4, 8)],
            "44",
        ),
    ] {
        let v = g.variant();
        b.claim(
            &format!("closure-g{v}"),
            "C, P, T generate a group of sixteen elements named ±1, ±C, ..., ±theta",
            || {
                let mut c = Checks::default();
                c.add("order 16", g.group().order() == 16);
                c.add("labels", g.group().labels().iter().map(String::as_str).eq(CPT_LABELS));
                c.done()
            },
        );
        b.claim(&format!("table-{n}"), "basic multiplication table reproduced entry for entry", || {
            let t = g.basic_table()?;
            let diffs = table_diff(&t.interior(), &lst::parse_table(table), &BASIC_LABELS[1..]);
            Ok((if diffs.is_empty() { Status::Pass } else { Status::Fail }, json!({ "diffs": diffs })))
        });
        b.claim(&format!("orders-g{v}"), "element orders match the listed order-2 and order-4 elements", || {
            let gr = g.group();
            let mut c = Checks::default();
            c.add("profile", gr.order_profile() == BTreeMap::from(profile));
            c.add("order 2 list", Subset::from_indices(gr.elements_of_order(2)) == set_of(gr, o2)?);
            c.add("order 4 list", Subset::from_indices(gr.elements_of_order(4)) == set_of(gr, o4)?);
            let (status, mut details) = c.done()?;
            details["profile"] = json!(gr.order_profile());
            Ok((status, details))
        });
        let cyc_id = if v == 1 { "cycles-45" } else { "cycles-46" };
        b.claim(cyc_id, "left regular representation reproduces the printed cycles of all sixteen elements", || {
            let reg = g.regular_representation()?;
            let mut diffs = Vec::new();
            for (k, printed) in cycles.iter().enumerate() {
                let p = Permutation::parse(printed, 16)?;
                if p != reg[k] {
                    diffs.push(
                        json!({ "element": CPT_LABELS[k], "printed": printed, "computed": reg[k].cycle_string() }),
                    );
                }
            }
            Ok((if diffs.is_empty() { Status::Pass } else { Status::Fail }, json!({ "diffs": diffs })))
        });
        b.claim(&format!("regular-g{v}"), "the regular representation is faithful and regular", || {
            let reg = g.regular_representation()?;
            let gr = g.group();
            let mut c = Checks::default();
            let hom = (0..16).all(|x| (0..16).all(|y| reg[gr.mul(x, y)] == reg[x].compose(&reg[y])));
            c.add("homomorphism", hom);
            c.add("only the identity is trivial", (0..16).all(|x| reg[x].is_identity() == (x == gr.identity())));
            c.add("fixed-point free", reg.iter().all(|p| p.is_identity() || p.is_fixed_point_free()));
            c.done()
        });
        b.claim(
            &format!("grading-g{v}"),
            "every element is even or odd and maps the gamma span to itself; odd elements occur",
            || {
                let r = g.grading(&ctx.dp)?;
                let mut c = Checks::default();
                c.add("homogeneous", r.all_homogeneous);
                c.add("preserves gamma span", r.all_preserve_span);
                c.add("has odd elements", r.has_odd);
                let (status, mut details) = c.done()?;
                details["grades"] = json!(r.grades);
                Ok((status, details))
            },
        );
    }
    b.claim("iso-49-g1", "first matrix group is isomorphic to DH8 x Z2", || {
        let found = find_isomorphism(ctx.g1.group(), &ctx.dh8z2.group);
        Ok((if found.is_some() { Status::Pass } else { Status::Fail }, json!({ "found": found.is_some() })))
    });
    b.claim("iso-49-g2", "second matrix group is isomorphic to 16E", || {
        let found = find_isomorphism(ctx.g2.group(), &ctx.e16.group);
        Ok((if found.is_some() { Status::Pass } else { Status::Fail }, json!({ "found": found.is_some() })))
    });
    b.claim("noniso-g1-g2", "the two matrix groups are not isomorphic, and neither is DC8 x Z2", || {
        let mut c = Checks::default();
        c.add("g1 vs g2", find_isomorphism(ctx.g1.group(), ctx.g2.group()).is_none());
        c.add("g2 vs g1", find_isomorphism(ctx.g2.group(), ctx.g1.group()).is_none());
        c.add("g1 vs DC8xZ2", find_isomorphism(ctx.g1.group(), &ctx.dc8z2.group).is_none());
        c.add("g2 vs DC8xZ2", find_isomorphism(ctx.g2.group(), &ctx.dc8z2.group).is_none());
        c.done()
    });
    b.claim("dh8-50", "DH8 = <(1234), (24)> has the eight listed elements and words", || {
        let alpha = named::dihedral8_alphabet();
        let mut c = Checks::default();
        c.add("order 8", ctx.dh8.group.order() == 8);
        for (w, s) in lst::DH8_ELEMENTS {
            let p = Permutation::parse(s, 4)?;
            c.add(format!("{w} = {s}"), alpha.eval(w)? == p && ctx.dh8.index_of(&p).is_some());
        }
        c.done()
    });
    b.claim(
        "dh8z2-52",
        "DH8 x Z2 in S6 has the listed sixteen elements, eleven of order 2 and four of order 4",
        || {
            let g = &ctx.dh8z2;
            let parse = |l: &[&str]| -> Result<Subset> {
                Ok(Subset::from_indices(
                    l.iter()
                        .map(|s| {
                            g.index_of(&Permutation::parse(s, 6)?).ok_or_else(|| Error::LabelNotFound(s.to_string()))
                        })
                        .collect::<Result<Vec<_>>>()?,
                ))
            };
            let mut c = Checks::default();
            c.add("elements", parse(&lst::DH8_Z2_ELEMENTS)? == g.group.all());
            c.add("order 2", parse(&lst::DH8_Z2_ORDER2)? == Subset::from_indices(g.group.elements_of_order(2)));
            c.add("order 4", parse(&lst::DH8_Z2_ORDER4)? == Subset::from_indices(g.group.elements_of_order(4)));
            c.done()
        },
    );
    b.claim("iso-53", "printed map from the first matrix group onto DH8 x Z2 is an isomorphism", || {
        let g = &ctx.dh8z2;
        let resolve =
            |s: &str| g.index_of(&Permutation::parse(s, 6)?).ok_or_else(|| Error::LabelNotFound(s.to_string()));
        map_claim(verify_printed_map(ctx.g1.group(), &g.group, &simple_entries(&lst::MAP_G1_DH8_Z2), &resolve)?)
    });
    b.claim("orders-16e", "in 16E, a^2 = d^2 = -1 and the listed words have orders 2 and 4", || {
        let alpha = named::group_16e_alphabet();
        let g = &ctx.e16;
        let mut c = Checks::default();
        c.add("a^2 = d^2 = -1", alpha.eval("a2")? == alpha.minus && alpha.eval("d2")? == alpha.minus);
        c.add(
            "order 2",
            resolve_all(&alpha, g, &lst::ORDER2_16E)? == Subset::from_indices(g.group.elements_of_order(2)),
        );
        c.add(
            "order 4",
            resolve_all(&alpha, g, &lst::ORDER4_16E)? == Subset::from_indices(g.group.elements_of_order(4)),
        );
        c.done()
    });
    b.claim("iso-55", "printed map from the second matrix group onto 16E, every printed alias checked", || {
        let alpha = named::group_16e_alphabet();
        let entries: Vec<PrintedEntry> =
            lst::MAP_G2_16E.iter().map(|(s, aliases)| PrintedEntry::new(s, aliases)).collect();
        let resolve = |s: &str| alpha.resolve(&ctx.e16, s);
        let check = verify_printed_map(ctx.g2.group(), &ctx.e16.group, &entries, &resolve)?;
        let status = map_status(&check);
        let mut details = serde_json::to_value(&check).expect("serializable");
        let cycles: Vec<Value> = check
            .mismatches
            .iter()
            .map(|m| {
                let cyc = |l: &Option<String>| l.clone().unwrap_or_else(|| "unparsed".into());
                json!({ "source": m.source, "printed": m.printed, "printed_cycles": cyc(&m.printed_element), "computed_cycles": m.computed_element })
            })
            .collect();
        details["mismatch_cycles"] = json!(cycles);
        Ok((status, details))
    });
}

fn extension_claims(ctx: &Context, b: &mut Builder) {
    let alpha16 = named::group_16e_alphabet();
    let dc8_alpha = named::dicyclic8_alphabet(8);

    b.claim("ses-54", "0 -> DH8 -> DH8 x Z2 -> Z2 -> 0 is exact and splits through (1,h)", || {
        let g = &ctx.dh8z2;
        let five_fixed = Subset::from_indices((0..16).filter(|&i| g.elements[i].apply(5) == 5));
        let ses = ShortExactSequence::from_normal_subgroup(&g.group, five_fixed, ("DH8", "Z2"))?;
        let mut c = Checks::default();
        c.add("exact", ses.verify());
        let embedded: Vec<Permutation> = ctx.dh8.elements.iter().map(|p| p.extend(6)).collect();
        c.add(
            "kernel is DH8 x {1}",
            embedded.iter().all(|p| g.index_of(p).is_some_and(|i| five_fixed.contains(i))) && five_fixed.len() == 8,
        );
        let z = g.index_of(&Permutation::parse("(56)", 6)?).ok_or_else(|| Error::LabelNotFound("(56)".into()))?;
        c.add("(56) is a splitting", ses.is_splitting(&section_from(&ses, &[z])));
        c.done()
    });
    b.claim(
        "normal-dh8-16e",
        "<d, n> is a normal subgroup of index 2 in 16E isomorphic to DH8 via d -> (1234), n -> (24)",
        || {
            let g = &ctx.e16;
            let set = resolve_all(&alpha16, g, &lst::DH8_IN_16E)?;
            let d = alpha16.resolve(g, "d")?;
            let n = alpha16.resolve(g, "n")?;
            let mut c = Checks::default();
            c.add("<d, n> is the listed set", g.group.generated_by(&[d, n]) == set);
            c.add("index 2", set.len() * 2 == g.group.order());
            c.add("normal", g.group.is_normal(set));
            let (sub, members) = g.group.subgroup(set, "<d,n>")?;
            let pos = |i: usize| members.iter().position(|&m| m == i).expect("member");
            let r = ctx.dh8.index_of(&Permutation::parse("(1234)", 4)?).expect("in DH8");
            let bb = ctx.dh8.index_of(&Permutation::parse("(24)", 4)?).expect("in DH8");
            let iso = extend_from_generators(&sub, &ctx.dh8.group, &[pos(d), pos(n)], &[r, bb])
                .map(|images| GroupMap { source: sub.clone(), target: ctx.dh8.group.clone(), images })
                .is_some_and(|m| m.is_isomorphism());
            c.add("d -> (1234), n -> (24) is an isomorphism", iso);
            c.done()
        },
    );
    b.claim("ses-56", "0 -> DH8 -> 16E -> Z2 -> 0 is exact and splits through adn and through and", || {
        let g = &ctx.e16;
        let set = resolve_all(&alpha16, g, &lst::DH8_IN_16E)?;
        let ses = ShortExactSequence::from_normal_subgroup(&g.group, set, ("DH8", "Z2"))?;
        let minus = resolve_all(&alpha16, g, &lst::PHI2_MINUS)?;
        let mut c = Checks::default();
        c.add("exact", ses.verify());
        c.add("listed elements are exactly the non-kernel ones", minus == Subset(g.group.all().0 & !set.0));
        for w in lst::GAMMA2_SECTIONS {
            c.add(format!("{w} splits"), ses.is_splitting(&section_from(&ses, &[alpha16.resolve(g, w)?])));
        }
        c.done()
    });
    b.claim("semidirect-57", "DH8 x| gamma2(Z2) with conjugation action is isomorphic to 16E via (g,h) -> gh", || {
        let (sd, psi) = internal_semidirect(&ctx.e16, &alpha16, &lst::DH8_IN_16E, &["1", "adn"], "DH8xZ2'")?;
        let mut c = Checks::default();
        c.add("order 16", sd.order() == 16);
        c.add("(g,h) -> gh is an isomorphism", psi.is_isomorphism());
        c.add("isomorphic to 16E", find_isomorphism(&sd, &ctx.e16.group).is_some());
        c.done()
    });
    b.claim("map-59", "printed correspondence from the semidirect product onto 16E", || {
        let (sd, _) = internal_semidirect(&ctx.e16, &alpha16, &lst::DH8_IN_16E, &["1", "adn"], "DH8xZ2'")?;
        let resolve = |s: &str| alpha16.resolve(&ctx.e16, s);
        map_claim(verify_printed_map(&sd, &ctx.e16.group, &simple_entries(&lst::MAP_SEMIDIRECT_16E), &resolve)?)
    });
    b.claim("map-60", "printed composite map from the second matrix group onto the semidirect product", || {
        let (sd, psi) = internal_semidirect(&ctx.e16, &alpha16, &lst::DH8_IN_16E, &["1", "adn"], "DH8xZ2'")?;
        let resolve = |s: &str| sd.index_of(s);
        let check = verify_printed_map(ctx.g2.group(), &sd, &simple_entries(&lst::MAP_G2_SEMIDIRECT), &resolve)?;
        let psi_inv = psi.inverse().ok_or_else(|| Error::NotAHomomorphism("psi2 not bijective".into()))?;
        let mut composite_agrees = true;
        for ((label, words), (label2, pair)) in lst::MAP_G2_16E.iter().zip(lst::MAP_G2_SEMIDIRECT.iter()) {
            debug_assert_eq!(label, label2);
            let e = alpha16.resolve(&ctx.e16, words[0])?;
            composite_agrees &= sd.label(psi_inv.apply(e)) == *pair;
        }
        let (mut status, mut details) = map_claim(check)?;
        if !composite_agrees && status == Status::Pass {
            status = Status::Fail;
        }
        details["agrees_with_composition"] = json!(composite_agrees);
        Ok((status, details))
    });
    b.claim("ses-61", "0 -> Z4 -> DH8 -> Z2 -> 0 is exact, non-central, and splits through n and through dn", || {
        let (dh, _) = word_subgroup(&ctx.e16, &alpha16, &lst::DH8_IN_16E, "DH8")?;
        let z4 = set_of(&dh, &lst::Z4_IN_DH8)?;
        let ses = ShortExactSequence::from_normal_subgroup(&dh, z4, ("Z4", "Z2"))?;
        let mut c = Checks::default();
        c.add("exact", ses.verify());
        c.add("listed elements map to -1", set_of(&dh, &lst::PHI_MINUS)? == Subset(dh.all().0 & !z4.0));
        c.add("center is {1, -1}", labels_of(&dh, dh.center()) == vec!["1", "-1"]);
        c.add("Z4 not central", !z4.is_subset_of(dh.center()));
        for w in lst::GAMMA_SECTIONS {
            c.add(format!("{w} splits"), ses.is_splitting(&section_from(&ses, &[dh.index_of(w)?])));
        }
        c.done()
    });
    b.claim("semidirect-62", "Z4 x| gamma(Z2) with conjugation action is isomorphic to DH8 via (g,h) -> gh", || {
        let mut c = Checks::default();
        let (sd, psi) = internal_semidirect(&ctx.e16, &alpha16, &lst::Z4_IN_DH8, &["1", "n"], "Z4xZ2'")?;
        c.add("order 8", sd.order() == 8);
        c.add("isomorphic to DH8", find_isomorphism(&sd, &ctx.dh8.group).is_some());
        let image = psi.image();
        c.add("image is <d, n>", image == resolve_all(&alpha16, &ctx.e16, &lst::DH8_IN_16E)?);
        c.done()
    });
    b.claim("map-63", "printed correspondence from Z4 x| gamma(Z2) onto DH8", || {
        let (sd, psi) = internal_semidirect(&ctx.e16, &alpha16, &lst::Z4_IN_DH8, &["1", "n"], "Z4xZ2'")?;
        let (dh, members) = word_subgroup(&ctx.e16, &alpha16, &lst::DH8_IN_16E, "DH8")?;
        let images: Vec<usize> =
            psi.images.iter().map(|i| members.iter().position(|m| m == i).expect("in <d,n>")).collect();
        let onto_dh = GroupMap::new(&sd, &dh, images)?;
        let resolve = |s: &str| dh.index_of(s);
        let check = verify_printed_map(&sd, &dh, &simple_entries(&lst::MAP_SEMIDIRECT_DH8), &resolve)?;
        let (status, mut details) = map_claim(check)?;
        details["product_map_is_isomorphism"] = json!(onto_dh.is_isomorphism());
        Ok((if onto_dh.is_isomorphism() { status } else { Status::Fail }, details))
    });
    b.claim("hamiltonian-dc8", "DC8 is non-abelian and every subgroup is normal", || {
        let g = &ctx.dc8.group;
        let subs = g.subgroups();
        let mut c = Checks::default();
        c.add("non-abelian", !g.is_abelian());
        c.add("all subgroups normal", subs.iter().all(|&s| g.is_normal(s)));
        let (status, mut details) = c.done()?;
        details["subgroups"] = json!(subs.len());
        Ok((status, details))
    });
    b.claim("ses-74-no-split", "0 -> Z4 -> DC8 -> Z2 -> 0 is exact and has no splitting", || {
        let g = &ctx.dc8;
        let z4 = resolve_all(&dc8_alpha, g, &lst::Z4_IN_DC8)?;
        let ses = ShortExactSequence::from_normal_subgroup(&g.group, z4, ("Z4", "Z2"))?;
        let mut c = Checks::default();
        c.add("exact", ses.verify());
        c.add(
            "listed elements map to -1",
            resolve_all(&dc8_alpha, g, &lst::PHI8_MINUS)? == Subset(g.group.all().0 & !z4.0),
        );
        let splittings = ses.all_splittings();
        c.add("no splitting", splittings.is_empty());
        let (status, mut details) = c.done()?;
        details["sections_tested"] = json!(4);
        Ok((status, details))
    });
    b.claim(
        "ses-75-no-split",
        "0 -> Z2 -> DC8 -> V -> 0 is exact, central, has the listed cosets, and has no splitting",
        || {
            let g = &ctx.dc8;
            let center = g.group.center();
            let ses = ShortExactSequence::from_normal_subgroup(&g.group, center, ("Z2", "V"))?;
            let v = named::klein();
            let mut c = Checks::default();
            c.add("exact", ses.verify());
            c.add("center is {1, x^2}", center == resolve_all(&dc8_alpha, g, &["1", "x2"])?);
            let mut rho = vec![usize::MAX; 4];
            for (_, words, target) in lst::DC8_COSETS {
                let a = dc8_alpha.resolve(g, words[0])?;
                let bb = dc8_alpha.resolve(g, words[1])?;
                let coset = ses.projection.apply(a);
                c.add(format!("{} {} same coset", words[0], words[1]), coset == ses.projection.apply(bb) && a != bb);
                rho[coset] = v.index_of(target)?;
            }
            let rho_ok = !rho.contains(&usize::MAX)
                && GroupMap::new(&ses.quotient_group, &v, rho).is_ok_and(|m| m.is_isomorphism());
            c.add("rho is an isomorphism onto V", rho_ok);
            c.add("no splitting", ses.all_splittings().is_empty());
            c.done()
        },
    );
}

fn operator_claims(ctx: &Context, b: &mut Builder) {
    let g = ctx.gtheta.group();
    b.claim("relations-67-68", "the realization satisfies every defining relation", || {
        let mut c = Checks::default();
        for (rel, ok) in Presentation::standard().check()? {
            c.add(rel, ok);
        }
        c.done()
    });
    b.claim("closure-gtheta", "C, P, T close to sixteen elements, associatively", || {
        let mut c = Checks::default();
        c.add("order 16", g.order() == 16);
        c.add("labels", g.labels().iter().map(String::as_str).eq(OPERATOR_LABELS));
        c.add("Theta = C*P*T", ctx.gtheta.element("Theta")? == OperatorElement::eval("C*P*T")?);
        c.done()
    });
    b.claim("table-71", "basic multiplication table reproduced entry for entry", || {
        let t = ctx.gtheta.basic_table()?;
        let diffs = table_diff(&t.interior(), &lst::parse_table(&lst::TABLE_GTHETA), &OPERATOR_BASIC_LABELS[1..]);
        Ok((if diffs.is_empty() { Status::Pass } else { Status::Fail }, json!({ "diffs": diffs })))
    });
    b.claim("orders-gtheta", "three elements of order 2 (±C, -1) and twelve of order 4", || {
        let mut c = Checks::default();
        c.add("profile", g.order_profile() == BTreeMap::from([(1, 1), (2, 3), (4, 12)]));
        c.add("order 2", Subset::from_indices(g.elements_of_order(2)) == set_of(g, &lst::ORDER2_GTHETA)?);
        c.add("order 4", Subset::from_indices(g.elements_of_order(4)) == set_of(g, &lst::ORDER4_GTHETA)?);
        c.done()
    });
    b.claim(
        "dc8-orders",
        "in DC8, x^2 has order 2 and x, x^3, y, xy, x^2y, x^3y have order 4; DC8 x Z2 has three involutions",
        || {
            let a8 = named::dicyclic8_alphabet(8);
            let a10 = named::dicyclic8_alphabet(10);
            let mut c = Checks::default();
            c.add("order 8", ctx.dc8.group.order() == 8);
            c.add(
                "order 2",
                resolve_all(&a8, &ctx.dc8, &lst::DC8_ORDER2)?
                    == Subset::from_indices(ctx.dc8.group.elements_of_order(2)),
            );
            c.add(
                "order 4",
                resolve_all(&a8, &ctx.dc8, &lst::DC8_ORDER4)?
                    == Subset::from_indices(ctx.dc8.group.elements_of_order(4)),
            );
            c.add(
                "DC8 x Z2 involutions",
                resolve_all(&a10, &ctx.dc8z2, &lst::DC8_Z2_ORDER2)?
                    == Subset::from_indices(ctx.dc8z2.group.elements_of_order(2)),
            );
            c.add("DC8 x Z2 profile", ctx.dc8z2.group.order_profile() == BTreeMap::from([(1, 1), (2, 3), (4, 12)]));
            c.done()
        },
    );
    b.claim("iso-dc8-q", "DC8 is isomorphic to the quaternion group via x -> i, y -> j", || {
        let a8 = named::dicyclic8_alphabet(8);
        let gens: Vec<usize> = lst::DC8_TO_Q.iter().map(|(w, _)| a8.resolve(&ctx.dc8, w)).collect::<Result<_>>()?;
        let imgs: Vec<usize> = lst::DC8_TO_Q.iter().map(|(_, q)| ctx.q.index_of(q)).collect::<Result<_>>()?;
        let mut c = Checks::default();
        c.add("isomorphism found", find_isomorphism(&ctx.dc8.group, &ctx.q).is_some());
        let printed = extend_from_generators(&ctx.dc8.group, &ctx.q, &gens, &imgs)
            .map(|images| GroupMap { source: ctx.dc8.group.clone(), target: ctx.q.clone(), images })
            .is_some_and(|m| m.is_isomorphism());
        c.add("x -> i, y -> j extends to an isomorphism", printed);
        c.done()
    });
    b.claim("iso-72", "the operator group is isomorphic to DC8 x Z2 and to Q x S0", || {
        let mut c = Checks::default();
        c.add("DC8 x Z2", find_isomorphism(g, &ctx.dc8z2.group).is_some());
        c.add("Q x S0", find_isomorphism(g, &ctx.qs0).is_some());
        c.add("Q x S0 reversed", find_isomorphism(&ctx.qs0, g).is_some());
        c.done()
    });
    b.claim("noniso-gtheta", "the operator group is isomorphic to neither matrix group", || {
        let mut c = Checks::default();
        c.add("vs first matrix group", find_isomorphism(g, ctx.g1.group()).is_none());
        c.add("vs second matrix group", find_isomorphism(g, ctx.g2.group()).is_none());
        c.done()
    });
    b.claim("chain-73", "printed chain through DC8 x Z2, Q x S0, S10 and S16 is a sequence of isomorphisms", || {
        let a10 = named::dicyclic8_alphabet(10);
        let reg = g.regular_representation(&(0..16).collect::<Vec<_>>())?;
        let mut diffs = Vec::new();
        let mut s10_images = vec![0; 16];
        let mut checked = 0;
        for row in &lst::THETA_CHAIN {
            let k = g.index_of(row.label)?;
            let mut p = a10.eval(row.dc8.0)?;
            if row.dc8.1 {
                p = p.compose(&a10.eval("z")?);
            }
            let printed10 = Permutation::parse(row.s10, 10)?;
            checked += 1;
            if p != printed10 {
                diffs.push(json!({ "element": row.label, "column": "S10", "printed": row.s10, "computed": p.cycle_string() }));
            }
            s10_images[k] = ctx.dc8z2.index_of(&p).ok_or_else(|| Error::LabelNotFound(row.s10.into()))?;
            let realized = ctx.gtheta.element(row.label)?;
            let printed_qs0 = OperatorElement::new(row.qs0.0.parse::<Quaternion>()?, row.qs0.1);
            checked += 1;
            if realized != printed_qs0 {
                diffs.push(json!({ "element": row.label, "column": "QxS0", "printed": printed_qs0.to_string(), "computed": realized.to_string() }));
            }
            let q = quaternion_of_word(row.dc8.0)?;
            let via_words = OperatorElement::new(q, if row.dc8.1 { -1 } else { 1 });
            checked += 1;
            if via_words != printed_qs0 {
                diffs.push(json!({ "element": row.label, "column": "DC8xZ2 -> QxS0", "printed": printed_qs0.to_string(), "computed": via_words.to_string() }));
            }
            let printed16 = Permutation::parse(row.s16, 16)?;
            checked += 1;
            if printed16 != reg[k] {
                diffs.push(json!({ "element": row.label, "column": "S16", "printed": row.s16, "computed": reg[k].cycle_string() }));
            }
        }
        let psi = GroupMap::new(g, &ctx.dc8z2.group, s10_images).map(|m| m.is_isomorphism()).unwrap_or(false);
        let ok = diffs.is_empty() && psi;
        Ok((
            if ok { Status::Pass } else { Status::Fail },
            json!({ "entries_checked": checked, "diffs": diffs, "s10_map_is_isomorphism": psi }),
        ))
    });
    b.claim(
        "select-69",
        "only the second variant satisfies T* = T and TC = C*T, so the operator group selects it",
        || {
            let mut c = Checks::default();
            let chosen = select_matrix_group(&ctx.sets.sets);
            c.add("selected variant 2", chosen == Ok(2));
            c.add("variant 1 fails", ctx.sets.family(1).iter().all(|s| !selection_criterion(s)));
            c.add("variant 2 T* = T", ctx.sets.family(2).iter().all(|s| s.t.conjugate() == s.t));
            c.add("variant 1 T* = -T", ctx.sets.family(1).iter().all(|s| s.t.conjugate() == -&s.t));
            let (status, mut details) = c.done()?;
            details["selected"] = json!(chosen.ok());
            Ok((status, details))
        },
    );
}

/// A `DC₈` word under `x ↦ i`, `y ↦ j`: letters with optional exponents.
fn quaternion_of_word(word: &str) -> Result<Quaternion> {
    let mut q = Quaternion::ONE;
    let mut last = Quaternion::ONE;
    for ch in word.chars() {
        match ch {
            'x' => last = Quaternion::I,
            'y' => last = Quaternion::J,
            '1' if word == "1" => continue,
            d if d.is_ascii_digit() => {
                for _ in 1..d.to_digit(10).unwrap_or(1) {
                    q = q * last;
                }
                continue;
            }
            _ => return Err(Error::Parse(format!("bad DC8 word {word:?}"))),
        }
        q = q * last;
    }
    Ok(q)
}

fn representation_claims(ctx: &Context, b: &mut Builder) {
    let inv_sqrt2 = ExactScalar::inv_sqrt2();
    for (rep, id, printed) in [
        (&ctx.weyl, "similarity-weyl", lst::weyl_similarity_unscaled()),
        (&ctx.majorana, "similarity-majorana", lst::majorana_similarity_unscaled()),
    ] {
        b.claim(id, "similarity matrix matches the printed form, is hermitian, involutive and traceless, with the printed determinant", || {
            let s = rep.similarity();
            let mut c = Checks::default();
            c.add("printed form", *s == printed.0.scale(&inv_sqrt2));
            c.add("hermitian", s.dagger() == *s);
            c.add("involutive", s.matmul(s).is_identity());
            c.add("traceless", s.trace().is_zero());
            let det = s.det();
            let det_ok = det == ExactScalar::integer(printed.1);
            let (mut status, mut details) = c.done()?;
            details["printed_det"] = json!(printed.1);
            details["computed_det"] = json!(det.to_string());
            if status == Status::Pass && !det_ok {
                status = Status::Mismatch;
            }
            Ok((status, details))
        });
    }
    for (rep, printed, id1, id2) in [
        (&ctx.weyl, lst::weyl_family1(), "weyl-78", "weyl-79"),
        (&ctx.majorana, lst::majorana_family1(), "majorana-78a", "majorana-79a"),
    ] {
        let names = ["C", "P", "T", "theta"];
        let conj = |v: u8| -> Vec<Mat4> {
            let s = CptSolutionSet::canonical(&ctx.dp, v);
            [s.c, s.p, s.t, s.theta].iter().map(|m| rep.from_dirac_pauli(m)).collect()
        };
        b.claim(id1, "conjugated first-family matrices match the printed forms up to sign", || {
            let mut c = Checks::default();
            for ((n, m), p) in names.iter().zip(conj(1)).zip(printed.iter()) {
                c.add(*n, up_to_sign(&m, p));
            }
            c.done()
        });
        b.claim(
            id2,
            "conjugated second-family matrices match the printed multiples of the first family up to sign",
            || {
                let mut c = Checks::default();
                let factors = lst::family2_factors();
                for (((n, m), p), f) in names.iter().zip(conj(2)).zip(printed.iter()).zip(factors.iter()) {
                    c.add(*n, up_to_sign(&m, &p.scale(f)));
                }
                c.done()
            },
        );
    }
    b.claim("majorana-80", "Majorana gamma matrices equal the printed ones and are purely imaginary", || {
        let mut c = Checks::default();
        for (k, (g, p)) in ctx.majorana.gamma().iter().zip(lst::majorana_gammas().iter()).enumerate() {
            c.add(format!("gamma{k} printed"), g == p);
            c.add(format!("gamma{k} imaginary"), g.all_entries(ExactScalar::is_imaginary));
        }
        c.done()
    });
    b.claim(
        "reps-tables",
        "conjugating each matrix group into the Weyl and Majorana representations preserves its table",
        || {
            let mut c = Checks::default();
            for rep in [&ctx.weyl, &ctx.majorana] {
                for g in [&ctx.g1, &ctx.g2] {
                    let s = &g.set;
                    let conj = CptSolutionSet {
                        variant: s.variant,
                        representation: rep.tag(),
                        multipliers: s.multipliers.clone(),
                        c: rep.from_dirac_pauli(&s.c),
                        p: rep.from_dirac_pauli(&s.p),
                        t: rep.from_dirac_pauli(&s.t),
                        theta: rep.from_dirac_pauli(&s.theta),
                    };
                    let h = CptGroup::from_set(conj)?;
                    c.add(format!("{} variant {}", rep.tag(), s.variant), h.group().table() == g.group().table());
                    let (cm, tm) = (h.matrix("C")?, h.matrix("T")?);
                    c.add(format!("{} variant {} TC = CT", rep.tag(), s.variant), tm.matmul(cm) == cm.matmul(tm));
                }
            }
            c.done()
        },
    );
    b.claim("reps-transport", "the Majorana charge conjugation solve is S C S^T, which is real up to a phase", || {
        let mut c = Checks::default();
        let space = solve_symmetry(Symmetry::ChargeConjugation, &ctx.majorana);
        let s = ctx.majorana.similarity();
        let c_dp = ctx.dp.product(&[2, 0]);
        let transposed = s.matmul(&c_dp).matmul(&s.transpose());
        c.add("kernel spanned by S C S^T", space.single() == Some(&transposed));
        c.add("i S C S^T is real", transposed.scale(&ExactScalar::i()).all_entries(ExactScalar::is_real));
        c.add("S C S^T = -g0 in Majorana", transposed == -&ctx.majorana.gamma()[0]);
        c.add("Weyl similarity is real so both laws agree", ctx.weyl.similarity().all_entries(ExactScalar::is_real));
        c.done()
    });
}

/// Order profile, table, regular cycles and isomorphism checks of the two
/// matrix groups and the operator group.
pub fn group_summaries() -> Result<Vec<GroupSummary>> {
    summaries(&Context::build()?)
}

fn summaries(ctx: &Context) -> Result<Vec<GroupSummary>> {
    let iso = |g: &FiniteGroup, targets: &[(&str, &FiniteGroup)]| -> Vec<IsomorphismCheck> {
        targets
            .iter()
            .map(|(name, t)| {
                let m = find_isomorphism(g, t);
                IsomorphismCheck { target: name.to_string(), found: m.is_some(), map: m.map(|m| m.pairs()) }
            })
            .collect()
    };
    let summary =
        |g: &FiniteGroup, table: Vec<Vec<String>>, targets: &[(&str, &FiniteGroup)]| -> Result<GroupSummary> {
            let reg = g.regular_representation(&(0..g.order()).collect::<Vec<_>>())?;
            Ok(GroupSummary {
                group: g.name.clone(),
                order: g.order(),
                profile: g.order_profile(),
                table,
                cycles: g.labels().iter().cloned().zip(reg.iter().map(Permutation::cycle_string)).collect(),
                isomorphisms_checked: iso(g, targets),
            })
        };
    let g1 = ctx.g1.group();
    let g2 = ctx.g2.group();
    let gt = ctx.gtheta.group();
    Ok(vec![
        summary(
            g1,
            ctx.g1.basic_table()?.entries,
            &[("DH8xZ2", &ctx.dh8z2.group), ("16E", &ctx.e16.group), ("DC8xZ2", &ctx.dc8z2.group)],
        )?,
        summary(
            g2,
            ctx.g2.basic_table()?.entries,
            &[("16E", &ctx.e16.group), ("DH8xZ2", &ctx.dh8z2.group), ("DC8xZ2", &ctx.dc8z2.group)],
        )?,
        summary(
            gt,
            ctx.gtheta.basic_table()?.entries,
            &[("DC8xZ2", &ctx.dc8z2.group), ("QxS0", &ctx.qs0), ("G1", g1), ("G2", g2)],
        )?,
    ])
}
