//! Published tables, cycle listings, correspondences and matrices,
//! transcribed as data so they can be checked against computation.
//!
//! Names follow the crate's ASCII labels: `theta` for θ, `Theta` for Θ,
//! `i`, `j`, `k` for the quaternion units ι, γ, κ. Cycle strings are kept
//! exactly as printed, including unusual cycle order and rotation.

use crate::matrix::Mat4;
use crate::scalar::ExactScalar;

/// Basic product tables over `C, P, T, CP, CT, PT, θ`, row times column.
pub const TABLE_G1: [&str; 7] = [
    "1 CP CT P T theta PT",
    "-CP -1 PT C -theta -T CT",
    "CT PT 1 theta C P CP",
    "-P -C theta 1 -PT -CT T",
    "T theta C PT 1 CP P",
    "-theta -T P CT -CP -1 C",
    "-PT -CT CP T -P -C 1",
];

pub const TABLE_G2: [&str; 7] = [
    "-1 CP CT -P -T theta -PT",
    "-CP -1 PT C -theta -T CT",
    "CT PT -1 theta -C -P -CP",
    "P -C theta -1 PT -CT -T",
    "-T theta -C -PT 1 -CP P",
    "-theta -T -P CT CP 1 -C",
    "PT -CT -CP -T -P C 1",
];

pub const TABLE_GTHETA: [&str; 7] = [
    "1 C*P C*T P T Theta P*T",
    "C*P -1 P*T -C Theta -T -C*T",
    "C*T -P*T -1 -Theta -C P C*P",
    "P -C Theta -1 P*T -C*T -T",
    "T -Theta -C -P*T -1 C*P P",
    "Theta T -P C*T -C*P -1 -C",
    "P*T C*T -C*P T -P -C -1",
];

pub fn parse_table(rows: &[&str; 7]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.split_whitespace().map(str::to_string).collect()).collect()
}

/// Regular-representation cycles of the first matrix group, in label order.
pub const CYCLES_G1: [&str; 16] = [
    "(1) (2)...(16)",
    "(1 2) (3 5) (4 6) (7 8) (9 16) (10 12) (11 13) (14 15)",
    "(1 3 16 10) (2 12 9 5) (4 7 11 14) (6 15 13 8)",
    "(1 4) (2 6) (3 7) (5 8) (9 13) (10 14) (11 16) (12 15)",
    "(1 5) (2 10) (3 9) (4 8) (6 14) (7 13) (11 15) (12 16)",
    "(1 6) (2 4) (3 8) (5 7) (9 11) (10 15) (12 14) (13 16)",
    "(1 7 16 14) (2 15 9 8) (3 11 10 4) (5 6 12 13)",
    "(1 8) (2 14) (3 13) (4 5) (6 10) (7 9) (11 12) (15 16)",
    "(1 9) (2 16) (3 12) (4 13) (5 10) (6 11) (7 15) (8 14)",
    "(1 10 16 3) (2 5 9 12) (6 8 13 15) (4 14 11 7)",
    "(1 11) (2 13) (3 14) (4 16) (5 15) (6 9) (7 10) (8 12)",
    "(1 12) (2 3) (4 15) (5 16) (6 7) (8 11) (9 10) (13 14)",
    "(1 13) (2 11) (3 15) (4 9) (5 14) (6 16) (7 12) (8 10)",
    "(1 14 16 7) (2 8 9 15) (3 4 10 11) (12 6 5 13)",
    "(1 15) (2 7) (3 6) (4 12) (5 11) (8 16) (9 14) (10 13)",
    "(1 16) (2 9) (3 10) (4 11) (5 12) (6 13) (7 14) (8 15)",
];

pub const CYCLES_G2: [&str; 16] = [
    "(1) (2)...(16)",
    "(1 2 16 9) (3 5 10 12) (6 11 13 4) (7 8 14 15)",
    "(1 3 16 10) (2 12 9 5) (4 7 11 14) (6 15 13 8)",
    "(1 4 16 11) (2 6 9 13) (5 8 12 15) (3 7 10 14)",
    "(1 5 16 12) (2 3 9 10) (4 8 11 15) (6 7 13 14)",
    "(1 6) (2 11) (3 8) (4 9) (5 14) (7 12) (10 15) (13 16)",
    "(1 7) (16 14) (2 15) (3 11) (4 10) (8 9) (12 13) (5 6)",
    "(1 8) (2 7) (3 13) (4 12) (5 11) (6 10) (9 14) (15 16)",
    "(1 9 16 2) (3 12 10 5) (4 13 11 6) (7 15 14 8)",
    "(1 10 16 3) (2 5 9 12) (4 14 11 7) (6 8 13 15)",
    "(1 11 16 4) (2 13 9 6) (5 15 12 8) (7 3 14 10)",
    "(1 12 16 5) (2 10 9 3) (4 15 11 8) (6 14 13 7)",
    "(1 13) (2 4) (3 15) (5 7) (6 16) (8 10) (9 11) (12 14)",
    "(1 14) (2 8) (3 4) (5 13) (6 12) (7 16) (9 15) (10 11)",
    "(1 15) (2 14) (3 6) (4 5) (7 9) (8 16) (10 13) (11 12)",
    "(1 16) (2 9) (3 10) (4 11) (5 12) (6 13) (7 14) (8 15)",
];

/// Elements of order 2 and 4 as listed for each group.
pub const ORDER2_G1: [&str; 11] = ["-1", "C", "-C", "T", "-T", "CP", "-CP", "CT", "-CT", "theta", "-theta"];
pub const ORDER4_G1: [&str; 4] = ["P", "-P", "PT", "-PT"];
pub const ORDER2_G2: [&str; 7] = ["-1", "CT", "-CT", "PT", "-PT", "theta", "-theta"];
pub const ORDER4_G2: [&str; 8] = ["C", "-C", "P", "-P", "T", "-T", "CP", "-CP"];
pub const ORDER2_GTHETA: [&str; 3] = ["C", "-C", "-1"];
pub const ORDER4_GTHETA: [&str; 12] =
    ["P", "-P", "T", "-T", "C*P", "-C*P", "C*T", "-C*T", "P*T", "-P*T", "Theta", "-Theta"];

/// `DH₈` words in `r = (1234)`, `b = (24)` and the listed cycles.
pub const DH8_ELEMENTS: [(&str, &str); 8] = [
    ("1", "()"),
    ("r", "(1234)"),
    ("r2", "(13)(24)"),
    ("r3", "(1432)"),
    ("b", "(24)"),
    ("rb", "(12)(34)"),
    ("r2b", "(13)"),
    ("r3b", "(14)(23)"),
];

pub const DH8_Z2_ELEMENTS: [&str; 16] = [
    "()",
    "(1234)",
    "(13)(24)",
    "(1432)",
    "(24)",
    "(12)(34)",
    "(13)",
    "(14)(23)",
    "(56)",
    "(1234)(56)",
    "(13)(24)(56)",
    "(1432)(56)",
    "(24)(56)",
    "(12)(34)(56)",
    "(13)(56)",
    "(14)(23)(56)",
];

pub const DH8_Z2_ORDER2: [&str; 11] = [
    "(24)",
    "(13)",
    "(56)",
    "(13)(24)",
    "(13)(24)(56)",
    "(24)(56)",
    "(12)(34)",
    "(12)(34)(56)",
    "(13)(56)",
    "(14)(23)",
    "(14)(23)(56)",
];

pub const DH8_Z2_ORDER4: [&str; 4] = ["(1234)", "(1234)(56)", "(1432)", "(1432)(56)"];

/// First matrix group onto `DH₈ × Z₂ ⊂ S₆`.
pub const MAP_G1_DH8_Z2: [(&str, &str); 16] = [
    ("1", "()"),
    ("C", "(24)"),
    ("P", "(1234)"),
    ("T", "(56)"),
    ("CP", "(14)(23)"),
    ("CT", "(24)(56)"),
    ("PT", "(1234)(56)"),
    ("theta", "(14)(23)(56)"),
    ("-1", "(13)(24)"),
    ("-C", "(13)"),
    ("-P", "(1432)"),
    ("-T", "(13)(24)(56)"),
    ("-CP", "(12)(34)"),
    ("-CT", "(13)(56)"),
    ("-PT", "(1432)(56)"),
    ("-theta", "(12)(34)(56)"),
];

/// Elements of `16E` of order 2 and 4 as listed, as words in `a, d, n`.
pub const ORDER2_16E: [&str; 7] = ["a2", "n", "a2n", "dn", "nd", "and", "adn"];
pub const ORDER4_16E: [&str; 8] = ["a", "a3", "d", "d3", "an", "ad", "da", "a3n"];

/// Second matrix group onto `16E`; every printed name of each image. The
/// first name is the primary word.
pub const MAP_G2_16E: [(&str, &[&str]); 16] = [
    ("1", &["1"]),
    ("C", &["a"]),
    ("P", &["d"]),
    ("T", &["an", "na", "(1836)(2547)"]),
    ("CP", &["ad", "(1735)(2648)"]),
    ("CT", &["a2n", "-n", "(15)(26)(37)(48)"]),
    ("PT", &["and", "-adn", "(24)(57)"]),
    ("theta", &["dn", "(12)(34)(58)(67)"]),
    ("-1", &["-1", "(13)(24)(57)(68)"]),
    ("-C", &["a3", "-an", "(1432)(5876)"]),
    ("-P", &["d3", "-d", "(1836)(2745)"]),
    ("-T", &["a3n", "-an", "(1638)(2745)"]),
    ("-CP", &["da", "-ad", "(1537)(2846)"]),
    ("-CT", &["n"]),
    ("-PT", &["adn", "(13)(68)"]),
    ("-theta", &["nd", "-dn", "(14)(23)(56)(78)"]),
];

/// Words naming the elements of the dihedral subgroup `⟨d, n⟩` of `16E`.
pub const DH8_IN_16E: [&str; 8] = ["1", "-1", "d", "-d", "n", "-n", "dn", "-dn"];

/// The printed isomorphism `⟨d, n⟩ → DH₈`: `d ↦ (1234)`, `n ↦ (24)`.
pub const DH8_IN_16E_GENERATORS: [(&str, &str); 2] = [("d", "(1234)"), ("n", "(24)")];

/// Elements of `16E` outside `⟨d, n⟩`, sent to `−1`.
pub const PHI2_MINUS: [&str; 8] = ["a", "an", "ad", "and", "a3", "a3n", "da", "adn"];

/// Printed splittings `γ₂(−1)`.
pub const GAMMA2_SECTIONS: [&str; 2] = ["adn", "and"];

/// `DH₈ ⋊ γ₂(Z₂) → 16E`, `(g, h) ↦ gh`.
pub const MAP_SEMIDIRECT_16E: [(&str, &str); 16] = [
    ("(1,1)", "1"),
    ("(1,adn)", "adn"),
    ("(n,1)", "n"),
    ("(n,adn)", "da"),
    ("(-1,1)", "-1"),
    ("(-1,adn)", "-adn"),
    ("(-n,1)", "-n"),
    ("(-n,adn)", "-da"),
    ("(d,1)", "d"),
    ("(d,adn)", "an"),
    ("(dn,1)", "dn"),
    ("(dn,adn)", "-a"),
    ("(-d,1)", "-d"),
    ("(-d,adn)", "-an"),
    ("(-dn,1)", "-dn"),
    ("(-dn,adn)", "a"),
];

/// Second matrix group onto `DH₈ ⋊ γ₂(Z₂)`.
pub const MAP_G2_SEMIDIRECT: [(&str, &str); 16] = [
    ("1", "(1,1)"),
    ("C", "(-dn,adn)"),
    ("P", "(d,1)"),
    ("T", "(d,adn)"),
    ("CP", "(-n,adn)"),
    ("CT", "(-n,1)"),
    ("PT", "(-1,adn)"),
    ("theta", "(dn,1)"),
    ("-1", "(-1,1)"),
    ("-C", "(dn,adn)"),
    ("-P", "(-d,1)"),
    ("-T", "(-d,adn)"),
    ("-CP", "(n,adn)"),
    ("-CT", "(n,1)"),
    ("-PT", "(1,adn)"),
    ("-theta", "(-dn,1)"),
];

/// `Z₄ = {1, d, −1, −d}` inside `⟨d, n⟩`.
pub const Z4_IN_DH8: [&str; 4] = ["1", "d", "-1", "-d"];
pub const PHI_MINUS: [&str; 4] = ["n", "dn", "-n", "-dn"];
pub const GAMMA_SECTIONS: [&str; 2] = ["n", "dn"];

/// `Z₄ ⋊ γ(Z₂) → DH₈`, `(g, h) ↦ gh`.
pub const MAP_SEMIDIRECT_DH8: [(&str, &str); 8] = [
    ("(1,1)", "1"),
    ("(1,n)", "n"),
    ("(-1,1)", "-1"),
    ("(-1,n)", "-n"),
    ("(d,1)", "d"),
    ("(d,n)", "dn"),
    ("(-d,1)", "-d"),
    ("(-d,n)", "-dn"),
];

/// `DC₈` words in `x, y` by listed order.
pub const DC8_ORDER2: [&str; 1] = ["x2"];
pub const DC8_ORDER4: [&str; 6] = ["x", "x3", "y", "xy", "x2y", "x3y"];
pub const DC8_Z2_ORDER2: [&str; 3] = ["x2", "x2z", "z"];

/// One row of the operator-group chain: label, `DC₈ × Z₂` pair (word,
/// whether `z` is present), `Q × S⁰` pair, image in `S₁₀`, image in `S₁₆`.
pub struct ChainRow {
    pub label: &'static str,
    pub dc8: (&'static str, bool),
    pub qs0: (&'static str, i8),
    pub s10: &'static str,
    pub s16: &'static str,
}

const fn row(
    label: &'static str,
    dc8: (&'static str, bool),
    qs0: (&'static str, i8),
    s10: &'static str,
    s16: &'static str,
) -> ChainRow {
    ChainRow { label, dc8, qs0, s10, s16 }
}

pub const THETA_CHAIN: [ChainRow; 16] = [
    row("1", ("1", false), ("1", 1), "()", "()"),
    row("C", ("1", true), ("1", -1), "(9 10)", "(1 2)(3 5)(4 6)(7 8)(9 16)(10 12)(11 13)(14 15)"),
    row("P", ("x", false), ("i", 1), "(1234)(5678)", "(1 3 16 10)(2 5 9 12)(4 7 11 14)(6 8 13 15)"),
    row("T", ("y", false), ("j", 1), "(1537)(2846)", "(1 4 16 11)(2 6 9 13)(3 14 10 7)(5 15 12 8)"),
    row("C*P", ("x", true), ("i", -1), "(1234)(5678)(9 10)", "(1 5 16 12)(2 3 9 10)(4 8 11 15)(6 7 13 14)"),
    row("C*T", ("y", true), ("j", -1), "(1537)(2846)(9 10)", "(1 6 16 13)(2 4 9 11)(3 15 10 8)(5 14 12 7)"),
    row("P*T", ("xy", false), ("k", 1), "(1638)(2547)", "(1 7 16 14)(2 8 9 15)(3 4 10 11)(5 6 12 13)"),
    row("Theta", ("xy", true), ("k", -1), "(1638)(2547)(9 10)", "(1 8 16 15)(2 7 9 14)(3 6 10 13)(4 12 11 5)"),
    row("-C", ("x2", true), ("-1", -1), "(13)(24)(57)(68)(9 10)", "(1 9)(2 16)(3 12)(4 13)(5 10)(6 11)(7 15)(8 14)"),
    row("-P", ("x3", false), ("-i", 1), "(1432)(5876)", "(1 10 16 3)(2 12 9 5)(4 14 11 7)(6 15 13 8)"),
    row("-T", ("x2y", false), ("-j", 1), "(1735)(2648)", "(1 11 16 4)(2 13 9 6)(5 8 12 15)(10 14 3 7)"),
    row("-C*P", ("x3", true), ("-i", -1), "(1432)(5876)(9 10)", "(1 12 16 5)(2 10 9 3)(4 15 11 8)(6 14 13 7)"),
    row("-C*T", ("x2y", true), ("-j", -1), "(1735)(2648)(9 10)", "(1 13 16 6)(2 11 9 4)(5 7 12 14)(8 10 15 3)"),
    row("-P*T", ("x3y", false), ("-k", 1), "(1836)(2745)", "(1 14 16 7)(2 15 9 8)(3 11 10 4)(5 13 12 6)"),
    row("-Theta", ("x3y", true), ("-k", -1), "(1836)(2745)(9 10)", "(1 15 16 8)(2 14 9 7)(3 13 10 6)(4 5 11 12)"),
    row("-1", ("x2", false), ("-1", 1), "(13)(24)(57)(68)", "(1 16)(2 9)(3 10)(4 11)(5 12)(6 13)(7 14)(8 15)"),
];

/// `DC₈ → Q`: `x ↦ i`, `y ↦ j`.
pub const DC8_TO_Q: [(&str, &str); 2] = [("x", "i"), ("y", "j")];

/// `Z₄ = {1, x, x², x³}` in `DC₈`; `y, xy, x²y, x³y` project to `−1`.
pub const Z4_IN_DC8: [&str; 4] = ["1", "x", "x2", "x3"];
pub const PHI8_MINUS: [&str; 4] = ["y", "xy", "x2y", "x3y"];

/// Cosets of the centre `{1, x²}` and their images in `V`.
pub const DC8_COSETS: [(&str, [&str; 2], &str); 4] = [
    ("[1]", ["1", "x2"], "(1,1)"),
    ("[x]", ["x", "x3"], "(1,-1)"),
    ("[y]", ["y", "x2y"], "(-1,1)"),
    ("[xy]", ["xy", "x3y"], "(-1,-1)"),
];

const O: (i64, i64) = (0, 0);
const ONE: (i64, i64) = (1, 0);
const I: (i64, i64) = (0, 1);
const MI: (i64, i64) = (0, -1);

type Block = [[(i64, i64); 2]; 2];
const ZERO2: Block = [[O, O], [O, O]];
const ID2: Block = [[ONE, O], [O, ONE]];
const SIGMA2: Block = [[O, MI], [I, O]];

fn neg(b: Block) -> Block {
    b.map(|r| r.map(|(x, y)| (-x, -y)))
}

fn blocks(a: Block, b: Block, c: Block, d: Block) -> Mat4 {
    Mat4::from_blocks([[a, b], [c, d]])
}

fn times_i(m: Mat4) -> Mat4 {
    m.scale(&ExactScalar::i())
}

/// Printed forms `(C, P, T, θ)` of the first family in the Weyl
/// representation, each determined up to sign.
pub fn weyl_family1() -> [Mat4; 4] {
    [
        blocks(SIGMA2, ZERO2, ZERO2, neg(SIGMA2)),
        times_i(blocks(ZERO2, ID2, ID2, ZERO2)),
        blocks(SIGMA2, ZERO2, ZERO2, SIGMA2),
        times_i(blocks(ZERO2, ID2, neg(ID2), ZERO2)),
    ]
}

/// Printed forms `(C, P, T, θ)` of the first family in the Majorana
/// representation, each determined up to sign.
pub fn majorana_family1() -> [Mat4; 4] {
    [
        blocks(ID2, ZERO2, ZERO2, neg(ID2)),
        times_i(blocks(ZERO2, neg(SIGMA2), neg(SIGMA2), ZERO2)),
        blocks(SIGMA2, ZERO2, ZERO2, SIGMA2),
        times_i(blocks(ZERO2, neg(ID2), ID2, ZERO2)),
    ]
}

/// Printed second-family factors relative to the first: `C₂ = iC₁`,
/// `P₂ = P₁`, `T₂ = iT₁`, `θ₂ = −θ₁`.
pub fn family2_factors() -> [ExactScalar; 4] {
    [ExactScalar::i(), ExactScalar::one(), ExactScalar::i(), ExactScalar::integer(-1)]
}

/// Printed Majorana γ-matrices.
pub fn majorana_gammas() -> [Mat4; 4] {
    [
        Mat4::from_gaussian([[O, O, O, I], [O, O, MI, O], [O, I, O, O], [MI, O, O, O]]),
        Mat4::from_gaussian([[MI, O, O, O], [O, I, O, O], [O, O, MI, O], [O, O, O, I]]),
        Mat4::from_gaussian([[O, O, O, I], [O, O, MI, O], [O, MI, O, O], [I, O, O, O]]),
        Mat4::from_gaussian([[O, I, O, O], [I, O, O, O], [O, O, O, I], [O, O, I, O]]),
    ]
}

/// Printed similarity matrices (without the `1/√2`) and their printed
/// determinants.
pub fn weyl_similarity_unscaled() -> (Mat4, i64) {
    (blocks(ID2, ID2, ID2, neg(ID2)), -1)
}

pub fn majorana_similarity_unscaled() -> (Mat4, i64) {
    (blocks(ID2, neg(SIGMA2), neg(SIGMA2), neg(ID2)), 1)
}

/// Printed forms of the standard-representation solutions and `θ`.
pub fn theta_block_form() -> Mat4 {
    blocks(ZERO2, times_block(MI), times_block(I), ZERO2)
}

fn times_block(c: (i64, i64)) -> Block {
    [[c, O], [O, c]]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_square() {
        for t in [&TABLE_G1, &TABLE_G2, &TABLE_GTHETA] {
            let rows = parse_table(t);
            assert!(rows.iter().all(|r| r.len() == 7));
        }
    }

    #[test]
    fn printed_similarities_square_to_twice_identity() {
        for (s, _) in [weyl_similarity_unscaled(), majorana_similarity_unscaled()] {
            assert_eq!(s.matmul(&s), Mat4::identity().scale(&ExactScalar::integer(2)));
        }
    }

    #[test]
    fn majorana_gammas_are_imaginary() {
        assert!(majorana_gammas().iter().all(|g| g.all_entries(ExactScalar::is_imaginary)));
    }
}
