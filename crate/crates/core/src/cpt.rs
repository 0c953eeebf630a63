//! The two sixteen-element matrix groups generated by a consistent
//! `{C, P, T}` set, with the conventional element names.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gamma::{GammaRep, Grade};
use crate::group::{generate_closure, ConcreteGroup, FiniteGroup, Permutation, DEFAULT_CAP};
use crate::matrix::Mat4;
use crate::solver::CptSolutionSet;

/// Element names in the order used for numbering points `1..=16`.
pub const CPT_LABELS: [&str; 16] =
    ["1", "C", "P", "T", "CP", "CT", "PT", "theta", "-C", "-P", "-T", "-CP", "-CT", "-PT", "-theta", "-1"];

/// Rows and columns of the basic multiplication table.
pub const BASIC_LABELS: [&str; 8] = ["1", "C", "P", "T", "CP", "CT", "PT", "theta"];

/// The product block over a list of labels: `entries[r][c]` is the label of
/// `row[r]·col[c]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasicTable {
    pub group: String,
    pub labels: Vec<String>,
    pub entries: Vec<Vec<String>>,
}

impl BasicTable {
    pub fn get(&self, row: &str, col: &str) -> Option<&str> {
        let r = self.labels.iter().position(|l| l == row)?;
        let c = self.labels.iter().position(|l| l == col)?;
        Some(&self.entries[r][c])
    }

    /// The block without the leading identity row and column.
    pub fn interior(&self) -> Vec<Vec<String>> {
        self.entries[1..].iter().map(|row| row[1..].to_vec()).collect()
    }

    /// Aligned text with row and column headers.
    pub fn render_text(&self) -> String {
        let width =
            self.entries.iter().flatten().chain(self.labels.iter()).map(|s| s.chars().count()).max().unwrap_or(1);
        let pad = |s: &str| format!("{s:>width$}");
        let mut out = String::new();
        out.push_str(&pad(""));
        for l in &self.labels {
            out.push(' ');
            out.push_str(&pad(l));
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.entries) {
            out.push_str(&pad(l));
            for e in row {
                out.push(' ');
                out.push_str(&pad(e));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for BasicTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

pub fn basic_table(g: &FiniteGroup, labels: &[&str]) -> Result<BasicTable> {
    let idx: Vec<usize> = labels.iter().map(|l| g.index_of(l)).collect::<Result<_>>()?;
    let entries = idx.iter().map(|&a| idx.iter().map(|&b| g.label(g.mul(a, b)).to_string()).collect()).collect();
    Ok(BasicTable { group: g.name.clone(), labels: labels.iter().map(|s| s.to_string()).collect(), entries })
}

#[derive(Clone, Debug, Serialize)]
pub struct GradingReport {
    pub grades: Vec<(String, Grade)>,
    pub all_homogeneous: bool,
    pub all_preserve_span: bool,
    pub has_even: bool,
    pub has_odd: bool,
}

#[derive(Clone, Debug)]
pub struct CptGroup {
    pub set: CptSolutionSet,
    pub concrete: ConcreteGroup<Mat4>,
}

impl CptGroup {
    /// Group of the plus-sign set of `variant` in `rep`.
    pub fn canonical(rep: &GammaRep, variant: u8) -> Result<CptGroup> {
        CptGroup::from_set(CptSolutionSet::canonical(rep, variant))
    }

    /// Closes `{C, P, T}` and names every element by matching it against the
    /// products `±1, ±C, …, ±θ`.
    pub fn from_set(set: CptSolutionSet) -> Result<CptGroup> {
        let name = format!("G{}", set.variant);
        let closure = generate_closure(&name, &[set.c.clone(), set.p.clone(), set.t.clone()], DEFAULT_CAP)?;
        let named = named_products(&set.c, &set.p, &set.t);
        let labels: Vec<String> = CPT_LABELS.iter().map(|s| s.to_string()).collect();
        if closure.elements.len() != named.len() {
            return Err(Error::NotAGroup(format!("closure has {} elements, expected 16", closure.elements.len())));
        }
        let concrete = closure.arrange(&named, &labels)?;
        Ok(CptGroup { set, concrete })
    }

    pub fn variant(&self) -> u8 {
        self.set.variant
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.concrete.group
    }

    pub fn matrix(&self, label: &str) -> Result<&Mat4> {
        Ok(&self.concrete.elements[self.group().index_of(label)?])
    }

    pub fn basic_table(&self) -> Result<BasicTable> {
        basic_table(self.group(), &BASIC_LABELS)
    }

    /// Left regular representation with element `k` of [`CPT_LABELS`] as
    /// point `k + 1`.
    pub fn regular_representation(&self) -> Result<Vec<Permutation>> {
        let labeling: Vec<usize> = (0..16).collect();
        self.group().regular_representation(&labeling)
    }

    pub fn grading(&self, rep: &GammaRep) -> Result<GradingReport> {
        let mut grades = Vec::new();
        let mut all_preserve_span = true;
        for (label, m) in self.group().labels().iter().zip(&self.concrete.elements) {
            grades.push((label.clone(), rep.parity_grade(m)));
            all_preserve_span &= rep.preserves_gamma_span(m)?;
        }
        Ok(GradingReport {
            all_homogeneous: grades.iter().all(|(_, g)| *g != Grade::Mixed),
            has_even: grades.iter().any(|(_, g)| *g == Grade::Even),
            has_odd: grades.iter().any(|(_, g)| *g == Grade::Odd),
            grades,
            all_preserve_span,
        })
    }
}

/// `1, C, P, T, CP, CT, PT, θ` followed by their negatives, in
/// [`CPT_LABELS`] order.
pub fn named_products(c: &Mat4, p: &Mat4, t: &Mat4) -> Vec<Mat4> {
    let positive = [Mat4::identity(), c.clone(), p.clone(), t.clone(), c * p, c * t, p * t, Mat4::product([c, p, t])];
    let mut out: Vec<Mat4> = positive.to_vec();
    out.extend(positive[1..].iter().map(|m| -m));
    out.push(-&Mat4::identity());
    out
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    #[test]
    fn both_groups_have_sixteen_elements() {
        let rep = GammaRep::dirac_pauli();
        for v in [1, 2] {
            let g = CptGroup::canonical(&rep, v).unwrap();
            assert_eq!(g.group().order(), 16);
            assert_eq!(g.group().labels()[7], "theta");
        }
    }

    #[test]
    fn table_spot_checks() {
        let rep = GammaRep::dirac_pauli();
        let g1 = CptGroup::canonical(&rep, 1).unwrap().basic_table().unwrap();
        let g2 = CptGroup::canonical(&rep, 2).unwrap().basic_table().unwrap();
        assert_eq!(g1.get("P", "P"), Some("-1"));
        assert_eq!(g1.get("CP", "CP"), Some("1"));
        assert_eq!(g2.get("C", "C"), Some("-1"));
        assert_eq!(g2.get("theta", "C"), Some("PT"));
        assert_eq!(g2.get("C", "T"), Some("CT"));
    }

    #[test]
    fn order_profiles() {
        let rep = GammaRep::dirac_pauli();
        let g1 = CptGroup::canonical(&rep, 1).unwrap();
        let g2 = CptGroup::canonical(&rep, 2).unwrap();
        assert_eq!(g1.group().order_profile(), BTreeMap::from([(1, 1), (2, 11), (4, 4)]));
        assert_eq!(g2.group().order_profile(), BTreeMap::from([(1, 1), (2, 7), (4, 8)]));
    }

    #[test]
    fn regular_representation_spot_checks() {
        let rep = GammaRep::dirac_pauli();
        let g1 = CptGroup::canonical(&rep, 1).unwrap().regular_representation().unwrap();
        let g2 = CptGroup::canonical(&rep, 2).unwrap().regular_representation().unwrap();
        assert_eq!(g1[2].cycle_string(), "(1 3 16 10)(2 12 9 5)(4 7 11 14)(6 15 13 8)");
        assert_eq!(g2[1].cycle_string(), "(1 2 16 9)(3 5 10 12)(4 6 11 13)(7 8 14 15)");
        assert_eq!(g1[0].cycle_string(), "()");
        assert_eq!(g1[7].cycle_string(), "(1 8)(2 14)(3 13)(4 5)(6 10)(7 9)(11 12)(15 16)");
        assert_eq!(g2[15].cycle_string(), "(1 16)(2 9)(3 10)(4 11)(5 12)(6 13)(7 14)(8 15)");
    }

    #[test]
    fn grading_is_homogeneous_with_odd_elements() {
        let rep = GammaRep::dirac_pauli();
        for v in [1, 2] {
            let r = CptGroup::canonical(&rep, v).unwrap().grading(&rep).unwrap();
            assert!(r.all_homogeneous && r.all_preserve_span && r.has_odd && r.has_even);
        }
    }

    #[test]
    fn text_rendering_has_header_and_rows() {
        let rep = GammaRep::dirac_pauli();
        let t = CptGroup::canonical(&rep, 1).unwrap().basic_table().unwrap();
        let text = t.render_text();
        assert_eq!(text.lines().count(), 9);
        assert!(text.lines().next().unwrap().contains("theta"));
    }

    #[test]
    fn missing_label_is_reported() {
        let rep = GammaRep::dirac_pauli();
        let g = CptGroup::canonical(&rep, 1).unwrap();
        assert_eq!(basic_table(g.group(), &["1", "X"]).unwrap_err(), Error::LabelNotFound("X".into()));
    }
}
