use std::collections::HashSet;

use serde::Serialize;

use super::finite::{FiniteGroup, Subset};
use crate::error::{Error, Result};

/// A map between finite groups given by element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    pub images: Vec<usize>,
}

impl GroupMap {
    /// Accepts `images` only if it is a homomorphism.
    pub fn new(source: &FiniteGroup, target: &FiniteGroup, images: Vec<usize>) -> Result<GroupMap> {
        let m = GroupMap { source: source.clone(), target: target.clone(), images };
        if m.images.len() != source.order() || m.images.iter().any(|&i| i >= target.order()) {
            return Err(Error::NotAHomomorphism("wrong number of images".into()));
        }
        if let Some((a, b)) = m.first_violation() {
            return Err(Error::NotAHomomorphism(format!(
                "image of {}·{} differs from the product of images",
                source.label(a),
                source.label(b)
            )));
        }
        Ok(m)
    }

    pub fn identity(g: &FiniteGroup) -> GroupMap {
        GroupMap { source: g.clone(), target: g.clone(), images: (0..g.order()).collect() }
    }

    fn first_violation(&self) -> Option<(usize, usize)> {
        first_violation(&self.source, &self.target, &self.images)
    }

    pub fn is_homomorphism(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn is_injective(&self) -> bool {
        self.images.iter().collect::<HashSet<_>>().len() == self.images.len()
    }

    pub fn is_surjective(&self) -> bool {
        self.images.iter().collect::<HashSet<_>>().len() == self.target.order()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_homomorphism() && self.is_injective() && self.is_surjective()
    }

    pub fn image(&self) -> Subset {
        Subset::from_indices(self.images.iter().copied())
    }

    pub fn kernel(&self) -> Subset {
        let e = self.target.identity();
        Subset::from_indices((0..self.images.len()).filter(|&i| self.images[i] == e))
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMap) -> GroupMap {
        GroupMap {
            source: self.source.clone(),
            target: other.target.clone(),
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Option<GroupMap> {
        if !(self.is_injective() && self.is_surjective()) {
            return None;
        }
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Some(GroupMap { source: self.target.clone(), target: self.source.clone(), images: inv })
    }

    /// `(source label, target label)` pairs.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.images
            .iter()
            .enumerate()
            .map(|(i, &j)| (self.source.label(i).to_string(), self.target.label(j).to_string()))
            .collect()
    }
}

fn first_violation(source: &FiniteGroup, target: &FiniteGroup, images: &[usize]) -> Option<(usize, usize)> {
    let n = source.order();
    for a in 0..n {
        for b in 0..n {
            if images[source.mul(a, b)] != target.mul(images[a], images[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Extends generator images to a map on all of `source`, walking the
/// closure breadth first. Returns `None` when two words for the same element
/// disagree.
pub fn extend_from_generators(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gens: &[usize],
    gen_images: &[usize],
) -> Option<Vec<usize>> {
    let n = source.order();
    let mut images = vec![usize::MAX; n];
    images[source.identity()] = target.identity();
    let mut frontier = vec![source.identity()];
    while let Some(x) = frontier.pop() {
        for (&g, &gi) in gens.iter().zip(gen_images) {
            let y = source.mul(x, g);
            let yi = target.mul(images[x], gi);
            if images[y] == usize::MAX {
                images[y] = yi;
                frontier.push(y);
            } else if images[y] != yi {
                return None;
            }
        }
    }
    images.iter().all(|&i| i != usize::MAX).then_some(images)
}

/// Searches for an isomorphism `g → h`. Generator images are tried in index
/// order, restricted to elements of matching order and conjugacy class size,
/// so the first map found is deterministic. `None` means the search was
/// exhausted.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupMap> {
    if g.order() != h.order() || g.order_profile() != h.order_profile() {
        return None;
    }
    if g.is_abelian() != h.is_abelian() {
        return None;
    }
    let gens = g.minimal_generating_set();
    if gens.is_empty() {
        return Some(GroupMap { source: g.clone(), target: h.clone(), images: vec![h.identity()] });
    }
    let signature = |grp: &FiniteGroup, a: usize| (grp.element_order(a), grp.conjugacy_class(a).len());
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&a| {
            let s = signature(g, a);
            (0..h.order()).filter(|&b| signature(h, b) == s).collect()
        })
        .collect();
    let mut chosen = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut chosen)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    chosen: &mut Vec<usize>,
) -> Option<GroupMap> {
    let k = chosen.len();
    if k == gens.len() {
        let images = extend_from_generators(g, h, gens, chosen)?;
        let m = GroupMap { source: g.clone(), target: h.clone(), images };
        return m.is_isomorphism().then_some(m);
    }
    for &c in &candidates[k] {
        if chosen.contains(&c) {
            continue;
        }
        chosen.push(c);
        // generator images must generate subgroups of the same size
        let partial_ok = g.generated_by(&gens[..=k]).len() == h.generated_by(chosen).len();
        if partial_ok {
            if let Some(m) = search(g, h, gens, candidates, chosen) {
                return Some(m);
            }
        }
        chosen.pop();
    }
    None
}

/// One transcribed row of a printed correspondence: a source element and
/// every printed name for its image.
#[derive(Clone, Debug)]
pub struct PrintedEntry {
    pub source: String,
    pub aliases: Vec<String>,
}

impl PrintedEntry {
    pub fn new(source: &str, aliases: &[&str]) -> PrintedEntry {
        PrintedEntry { source: source.to_string(), aliases: aliases.iter().map(|s| s.to_string()).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryMismatch {
    pub source: String,
    pub printed: String,
    /// Label of the element the printed text denotes, if it parses.
    pub printed_element: Option<String>,
    /// Label of the image under the verified map.
    pub computed_element: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct PrintedMapCheck {
    /// The primary images form a bijective homomorphism.
    pub isomorphism: bool,
    /// Some homomorphic bijection agrees with all but the mismatched entries.
    pub repaired: bool,
    pub mismatches: Vec<EntryMismatch>,
    pub entries_checked: usize,
}

impl PrintedMapCheck {
    /// No mismatches and an isomorphism.
    pub fn exact(&self) -> bool {
        self.isomorphism && self.mismatches.is_empty()
    }
}

/// Checks a printed correspondence `source → target`.
///
/// The first alias of each entry is its primary image. If the primary images
/// form an isomorphism, every further alias is compared against it. If not,
/// the isomorphism determined by a minimal generating set that agrees with
/// the most entries is used instead, and the disagreeing entries are listed.
pub fn verify_printed_map(
    source: &FiniteGroup,
    target: &FiniteGroup,
    entries: &[PrintedEntry],
    resolve: &dyn Fn(&str) -> Result<usize>,
) -> Result<PrintedMapCheck> {
    let n = source.order();
    let mut primary = vec![usize::MAX; n];
    let mut resolved: Vec<(usize, &str, Option<usize>)> = Vec::new();
    for e in entries {
        let s = source.index_of(&e.source)?;
        let first = e.aliases.first().ok_or_else(|| Error::Parse(format!("no image for {}", e.source)))?;
        let img = resolve(first)?;
        if primary[s] != usize::MAX && primary[s] != img {
            return Err(Error::Parse(format!("{} listed twice", e.source)));
        }
        primary[s] = img;
        for a in &e.aliases {
            resolved.push((s, a.as_str(), resolve(a).ok()));
        }
    }
    if primary.contains(&usize::MAX) {
        return Err(Error::Parse("printed map does not cover the source".into()));
    }
    let pm = GroupMap { source: source.clone(), target: target.clone(), images: primary };
    let isomorphism = pm.is_isomorphism();
    let reference = if isomorphism { Some(pm.images.clone()) } else { best_repair(source, target, &resolved) };
    let mut mismatches = Vec::new();
    if let Some(reference) = &reference {
        for &(s, text, img) in &resolved {
            if img != Some(reference[s]) {
                mismatches.push(EntryMismatch {
                    source: source.label(s).to_string(),
                    printed: text.to_string(),
                    printed_element: img.map(|i| target.label(i).to_string()),
                    computed_element: target.label(reference[s]).to_string(),
                });
            }
        }
    }
    Ok(PrintedMapCheck {
        isomorphism,
        repaired: !isomorphism && reference.is_some(),
        mismatches,
        entries_checked: resolved.len(),
    })
}

fn best_repair(
    source: &FiniteGroup,
    target: &FiniteGroup,
    resolved: &[(usize, &str, Option<usize>)],
) -> Option<Vec<usize>> {
    let gens = source.minimal_generating_set();
    let mut options: Vec<Vec<usize>> = vec![Vec::new()];
    for &g in &gens {
        let imgs: Vec<usize> = {
            let mut v: Vec<usize> = resolved.iter().filter(|r| r.0 == g).filter_map(|r| r.2).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        options = options
            .into_iter()
            .flat_map(|o| {
                imgs.iter().map(move |&i| {
                    let mut o = o.clone();
                    o.push(i);
                    o
                })
            })
            .collect();
    }
    options
        .into_iter()
        .filter_map(|gi| {
            let images = extend_from_generators(source, target, &gens, &gi)?;
            let m = GroupMap { source: source.clone(), target: target.clone(), images };
            m.is_isomorphism().then_some(m.images)
        })
        .max_by_key(|images| {
            let agree = resolved.iter().filter(|r| r.2 == Some(images[r.0])).count();
            (agree, std::cmp::Reverse(images.clone()))
        })
}
