use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;

use serde::Serialize;

use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::matrix::Mat4;

pub const MAX_ORDER: usize = 64;
pub const DEFAULT_CAP: usize = 256;

/// Anything with an associative product that can be closed into a group.
pub trait GroupElement: Clone + Eq + Hash {
    fn op(&self, rhs: &Self) -> Self;
    fn identity_like(&self) -> Self;
    fn default_label(&self, index: usize) -> String {
        format!("e{index}")
    }
}

impl GroupElement for Mat4 {
    fn op(&self, rhs: &Mat4) -> Mat4 {
        self.matmul(rhs)
    }
    fn identity_like(&self) -> Mat4 {
        Mat4::identity()
    }
}

impl GroupElement for Permutation {
    fn op(&self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
    fn identity_like(&self) -> Permutation {
        Permutation::identity(self.degree())
    }
    fn default_label(&self, _index: usize) -> String {
        self.cycle_string()
    }
}

/// A group together with the concrete elements its indices stand for.
#[derive(Clone, Debug)]
pub struct ConcreteGroup<E> {
    pub elements: Vec<E>,
    pub group: FiniteGroup,
}

impl<E: GroupElement> ConcreteGroup<E> {
    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.elements.iter().position(|x| x == e)
    }

    /// Reorders the elements to `order` and attaches `labels`. Every element
    /// of the group must appear exactly once in `order`.
    pub fn arrange(&self, order: &[E], labels: &[String]) -> Result<ConcreteGroup<E>> {
        let n = self.elements.len();
        if order.len() != n || labels.len() != n {
            return Err(Error::NotAGroup(format!("expected {n} named elements, got {}", order.len())));
        }
        let mut perm = Vec::with_capacity(n);
        for (e, label) in order.iter().zip(labels) {
            let i = self.index_of(e).ok_or_else(|| Error::LabelNotFound(label.clone()))?;
            if perm.contains(&i) {
                return Err(Error::NotAGroup(format!("{label} duplicates another element")));
            }
            perm.push(i);
        }
        let group = self.group.permuted(&perm, labels.to_vec(), &self.group.name)?;
        Ok(ConcreteGroup { elements: order.to_vec(), group })
    }
}

/// Breadth-first closure of `generators` under the product, starting from
/// the identity. Elements are deduplicated by exact equality.
pub fn generate_closure<E: GroupElement>(name: &str, generators: &[E], cap: usize) -> Result<ConcreteGroup<E>> {
    let first = generators.first().ok_or(Error::NoGenerators)?;
    let identity = first.identity_like();
    let mut index: HashMap<E, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in generators {
            let y = elements[i].op(g);
            if !index.contains_key(&y) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded { cap });
                }
                index.insert(y.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let n = elements.len();
    if n > MAX_ORDER {
        return Err(Error::TooLarge { got: n, max: MAX_ORDER });
    }
    let mut table = vec![vec![0; n]; n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            table[i][j] = *index.get(&a.op(b)).ok_or_else(|| Error::NotAGroup("product left the closure".into()))?;
        }
    }
    let labels = elements.iter().enumerate().map(|(i, e)| e.default_label(i)).collect();
    let group = FiniteGroup::new(name, labels, table)?;
    Ok(ConcreteGroup { elements, group })
}

/// A set of group elements as a bitmask over indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u64);

impl Subset {
    pub fn empty() -> Subset {
        Subset(0)
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Subset {
        Subset(indices.into_iter().fold(0, |m, i| m | (1u64 << i)))
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn indices(self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }
}

/// A finite group given by its Cayley table: `table[i][j]` is the index of
/// `eᵢ·eⱼ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteGroup {
    pub name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Validates the Latin-square property, the identity and full
    /// associativity before accepting the table.
    pub fn new(name: &str, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::TooLarge { got: n, max: MAX_ORDER });
        }
        if labels.len() != n {
            return Err(Error::NotAGroup(format!("{} labels for {n} elements", labels.len())));
        }
        for row in &table {
            if row.len() != n || !is_permutation(row.iter().copied(), n) {
                return Err(Error::NotAGroup("table is not a Latin square".into()));
            }
        }
        for j in 0..n {
            if !is_permutation(table.iter().map(|row| row[j]), n) {
                return Err(Error::NotAGroup("table is not a Latin square".into()));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), labels, table, identity })
    }

    /// The same group with element `k` of the result being element `perm[k]`
    /// of `self`.
    pub fn permuted(&self, perm: &[usize], labels: Vec<String>, name: &str) -> Result<FiniteGroup> {
        let n = self.order();
        let mut pos = vec![usize::MAX; n];
        for (k, &i) in perm.iter().enumerate() {
            pos[i] = k;
        }
        let table = (0..n).map(|a| (0..n).map(|b| pos[self.table[perm[a]][perm[b]]]).collect()).collect();
        FiniteGroup::new(name, labels, table)
    }

    /// Same table under new element names.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<FiniteGroup> {
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if labels.len() != self.order() || sorted.len() != labels.len() {
            return Err(Error::NotAGroup("labels must be distinct, one per element".into()));
        }
        Ok(FiniteGroup { labels, ..self.clone() })
    }

    pub fn with_name(mut self, name: &str) -> FiniteGroup {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| Error::LabelNotFound(label.to_string()))
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn product(&self, factors: &[usize]) -> usize {
        factors.iter().fold(self.identity, |acc, &x| self.mul(acc, x))
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("Latin square")
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for a in 0..self.order() {
            *profile.entry(self.element_order(a)).or_insert(0) += 1;
        }
        profile
    }

    pub fn elements_of_order(&self, k: usize) -> Vec<usize> {
        (0..self.order()).filter(|&a| self.element_order(a) == k).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn conjugacy_class(&self, a: usize) -> Subset {
        Subset::from_indices((0..self.order()).map(|g| self.conjugate(g, a)))
    }

    pub fn all(&self) -> Subset {
        Subset::from_indices(0..self.order())
    }

    /// Subgroup generated by `gens`.
    pub fn generated_by(&self, gens: &[usize]) -> Subset {
        let mut set = Subset::from_indices([self.identity]);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, s: Subset) -> bool {
        let idx = s.indices();
        s.contains(self.identity) && idx.iter().all(|&a| idx.iter().all(|&b| s.contains(self.mul(a, self.inverse(b)))))
    }

    /// Smallest generating set, first in lexicographic index order.
    pub fn minimal_generating_set(&self) -> Vec<usize> {
        let n = self.order();
        if n == 1 {
            return Vec::new();
        }
        let full = self.all();
        let candidates: Vec<usize> = (0..n).filter(|&a| a != self.identity).collect();
        for size in 1..=candidates.len() {
            let mut found = None;
            for_each_combination(candidates.len(), size, &mut |combo| {
                let gens: Vec<usize> = combo.iter().map(|&k| candidates[k]).collect();
                if self.generated_by(&gens) == full {
                    found = Some(gens);
                    return true;
                }
                false
            });
            if let Some(g) = found {
                return g;
            }
        }
        unreachable!("the whole group generates itself")
    }

    /// All subgroups, as joins of cyclic subgroups, sorted by size then mask.
    pub fn subgroups(&self) -> Vec<Subset> {
        let mut subs: Vec<Subset> = (0..self.order()).map(|a| self.generated_by(&[a])).collect();
        subs.sort();
        subs.dedup();
        loop {
            let mut added = false;
            let current = subs.clone();
            for (i, &a) in current.iter().enumerate() {
                for &b in &current[i + 1..] {
                    let gens: Vec<usize> = a.union(b).indices();
                    let j = self.generated_by(&gens);
                    if !subs.contains(&j) {
                        subs.push(j);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        subs.sort_by_key(|s| (s.len(), s.0));
        subs
    }

    pub fn is_normal(&self, h: Subset) -> bool {
        let idx = h.indices();
        (0..self.order()).all(|g| idx.iter().all(|&x| h.contains(self.conjugate(g, x))))
    }

    pub fn center(&self) -> Subset {
        let n = self.order();
        Subset::from_indices((0..n).filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z))))
    }

    /// The subgroup as a group in its own right, with the embedding indices.
    pub fn subgroup(&self, h: Subset, name: &str) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(h) {
            return Err(Error::NotAGroup("subset is not a subgroup".into()));
        }
        let members = h.indices();
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let table = members.iter().map(|&a| members.iter().map(|&b| pos[&self.mul(a, b)]).collect()).collect();
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        Ok((FiniteGroup::new(name, labels, table)?, members))
    }

    /// `G/H` via left cosets ordered by their smallest index, labelled
    /// `[g]` with that representative. Also returns the projection.
    pub fn quotient(&self, h: Subset, name: &str) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_subgroup(h) || !self.is_normal(h) {
            return Err(Error::NotNormal);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let k = reps.len();
            reps.push(g);
            for x in h.indices() {
                coset_of[self.mul(g, x)] = k;
            }
        }
        let table = reps.iter().map(|&a| reps.iter().map(|&b| coset_of[self.mul(a, b)]).collect()).collect();
        let labels = reps.iter().map(|&r| format!("[{}]", self.labels[r])).collect();
        Ok((FiniteGroup::new(name, labels, table)?, coset_of))
    }

    /// Labels are `(a,b)`; index `i·|H| + j` is the pair `(eᵢ, fⱼ)`.
    pub fn direct_product(&self, other: &FiniteGroup, name: &str) -> Result<FiniteGroup> {
        let (n, m) = (self.order(), other.order());
        let mut labels = Vec::with_capacity(n * m);
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("({a},{b})"));
            }
        }
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect())
            .collect();
        FiniteGroup::new(name, labels, table)
    }

    /// Left regular representation with points numbered by `labeling`:
    /// point `k + 1` stands for element `labeling[k]`, and `σ_g` sends the
    /// point of `x` to the point of `g·x`.
    pub fn regular_representation(&self, labeling: &[usize]) -> Result<Vec<Permutation>> {
        let n = self.order();
        if !is_permutation(labeling.iter().copied(), n) {
            return Err(Error::Parse("labeling must list every element once".into()));
        }
        let mut point = vec![0; n];
        for (k, &i) in labeling.iter().enumerate() {
            point[i] = k + 1;
        }
        labeling
            .iter()
            .map(|&g| {
                let images: Vec<usize> = labeling.iter().map(|&x| point[self.mul(g, x)]).collect();
                Permutation::from_images(&images)
            })
            .collect()
    }
}

fn is_permutation(items: impl Iterator<Item = usize>, n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut count = 0;
    for x in items {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
        count += 1;
    }
    count == n
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it
/// returns true.
pub(crate) fn for_each_combination(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            cur.push(i);
            if rec(i + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}
