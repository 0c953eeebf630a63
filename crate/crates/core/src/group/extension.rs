use super::finite::{FiniteGroup, Subset};
use super::map::GroupMap;
use crate::error::{Error, Result};

/// `N ⋊ H` on pairs `(g, h)` with
/// `(g′, h′)(g, h) = (g′·Φ(h′)(g), h′h)`.
///
/// `action[h]` lists the image of every element of `N` under `Φ(h)`. Index
/// `i·|H| + j` of the result is the pair `(nᵢ, hⱼ)`.
pub fn semidirect_product(n: &FiniteGroup, h: &FiniteGroup, action: &[Vec<usize>], name: &str) -> Result<FiniteGroup> {
    let (a, b) = (n.order(), h.order());
    if action.len() != b {
        return Err(Error::InvalidAction(format!("{} automorphisms for {b} elements", action.len())));
    }
    for (k, phi) in action.iter().enumerate() {
        GroupMap::new(n, n, phi.clone())
            .ok()
            .filter(GroupMap::is_isomorphism)
            .ok_or_else(|| Error::InvalidAction(format!("Φ({}) is not an automorphism", h.label(k))))?;
    }
    for x in 0..b {
        for y in 0..b {
            let xy = h.mul(x, y);
            if (0..a).any(|g| action[xy][g] != action[x][action[y][g]]) {
                return Err(Error::InvalidAction(format!(
                    "Φ({}·{}) ≠ Φ({})∘Φ({})",
                    h.label(x),
                    h.label(y),
                    h.label(x),
                    h.label(y)
                )));
            }
        }
    }
    let mut labels = Vec::with_capacity(a * b);
    for g in n.labels() {
        for k in h.labels() {
            labels.push(format!("({g},{k})"));
        }
    }
    let table = (0..a * b)
        .map(|p| {
            let (g1, h1) = (p / b, p % b);
            (0..a * b)
                .map(|q| {
                    let (g2, h2) = (q / b, q % b);
                    n.mul(g1, action[h1][g2]) * b + h.mul(h1, h2)
                })
                .collect()
        })
        .collect();
    FiniteGroup::new(name, labels, table)
}

/// The action of a subgroup `H` on a normal subgroup `N` of `G` by
/// conjugation, as index maps on the subgroup groups returned by
/// [`FiniteGroup::subgroup`].
pub fn conjugation_action(g: &FiniteGroup, n_members: &[usize], h_members: &[usize]) -> Vec<Vec<usize>> {
    h_members
        .iter()
        .map(|&x| {
            n_members
                .iter()
                .map(|&m| {
                    let c = g.conjugate(x, m);
                    n_members.iter().position(|&k| k == c).expect("N is normal")
                })
                .collect()
        })
        .collect()
}

/// `0 → K → G → Q → 0`.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    pub kernel_group: FiniteGroup,
    pub middle_group: FiniteGroup,
    pub quotient_group: FiniteGroup,
    pub inclusion: GroupMap,
    pub projection: GroupMap,
}

impl ShortExactSequence {
    pub fn new(inclusion: GroupMap, projection: GroupMap) -> Result<ShortExactSequence> {
        if inclusion.target != projection.source {
            return Err(Error::NotAHomomorphism("maps do not compose".into()));
        }
        Ok(ShortExactSequence {
            kernel_group: inclusion.source.clone(),
            middle_group: inclusion.target.clone(),
            quotient_group: projection.target.clone(),
            inclusion,
            projection,
        })
    }

    /// The sequence `N → G → G/N` for a normal subgroup `N`.
    pub fn from_normal_subgroup(g: &FiniteGroup, n: Subset, names: (&str, &str)) -> Result<ShortExactSequence> {
        let (k, embed) = g.subgroup(n, names.0)?;
        let (q, proj) = g.quotient(n, names.1)?;
        let inclusion = GroupMap::new(&k, g, embed)?;
        let projection = GroupMap::new(g, &q, proj)?;
        ShortExactSequence::new(inclusion, projection)
    }

    /// Injective inclusion, surjective projection, both homomorphisms, and
    /// image of the inclusion equal to the kernel of the projection.
    pub fn verify(&self) -> bool {
        self.inclusion.is_homomorphism()
            && self.projection.is_homomorphism()
            && self.inclusion.is_injective()
            && self.projection.is_surjective()
            && self.inclusion.image() == self.projection.kernel()
    }

    /// True when `section` is a homomorphism `Q → G` with `π ∘ s = id`.
    pub fn is_splitting(&self, section: &[usize]) -> bool {
        let q = &self.quotient_group;
        section.len() == q.order()
            && (0..q.order()).all(|x| self.projection.apply(section[x]) == x)
            && (0..q.order())
                .all(|x| (0..q.order()).all(|y| section[q.mul(x, y)] == self.middle_group.mul(section[x], section[y])))
    }

    /// Every homomorphic section, found by enumerating all set maps that
    /// pick one element of each fibre.
    pub fn all_splittings(&self) -> Vec<GroupMap> {
        let q = &self.quotient_group;
        let g = &self.middle_group;
        let fibres: Vec<Vec<usize>> =
            (0..q.order()).map(|x| (0..g.order()).filter(|&e| self.projection.apply(e) == x).collect()).collect();
        let mut out = Vec::new();
        let mut choice = vec![0usize; q.order()];
        loop {
            let section: Vec<usize> = choice.iter().enumerate().map(|(x, &c)| fibres[x][c]).collect();
            if self.is_splitting(&section) {
                out.push(GroupMap { source: q.clone(), target: g.clone(), images: section });
            }
            let mut k = 0;
            loop {
                if k == choice.len() {
                    return out;
                }
                choice[k] += 1;
                if choice[k] < fibres[k].len() {
                    break;
                }
                choice[k] = 0;
                k += 1;
            }
        }
    }

    pub fn find_splitting(&self) -> Option<GroupMap> {
        self.all_splittings().into_iter().next()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::finite::{generate_closure, DEFAULT_CAP};
    use crate::group::map::find_isomorphism;
    use crate::group::perm::Permutation;

    fn perm_group(name: &str, gens: &[&str], n: usize) -> FiniteGroup {
        let gens: Vec<Permutation> = gens.iter().map(|s| Permutation::parse(s, n).unwrap()).collect();
        generate_closure(name, &gens, DEFAULT_CAP).unwrap().group
    }

    #[test]
    fn trivial_action_gives_direct_product() {
        let z4 = perm_group("Z4", &["(1234)"], 4);
        let z2 = perm_group("Z2", &["(12)"], 2);
        let trivial = vec![(0..4).collect::<Vec<_>>(); 2];
        let sd = semidirect_product(&z4, &z2, &trivial, "Z4xZ2").unwrap();
        let dp = z4.direct_product(&z2, "Z4xZ2").unwrap();
        assert_eq!(sd.table(), dp.table());
    }

    #[test]
    fn inversion_action_gives_dihedral() {
        let z4 = perm_group("Z4", &["(1234)"], 4);
        let z2 = perm_group("Z2", &["(12)"], 2);
        let inv: Vec<usize> = (0..4).map(|i| z4.inverse(i)).collect();
        let sd = semidirect_product(&z4, &z2, &[(0..4).collect(), inv], "D").unwrap();
        let dh = perm_group("DH8", &["(1234)", "(24)"], 4);
        assert!(find_isomorphism(&sd, &dh).is_some());
    }

    #[test]
    fn invalid_action_rejected() {
        let z4 = perm_group("Z4", &["(1234)"], 4);
        let z2 = perm_group("Z2", &["(12)"], 2);
        let not_hom = vec![0, 0, 1, 2];
        let err = semidirect_product(&z4, &z2, &[(0..4).collect(), not_hom], "x").unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
    }

    #[test]
    fn cyclic_four_does_not_split_over_its_square() {
        let z4 = perm_group("Z4", &["(1234)"], 4);
        let sq = z4.generated_by(&[z4.index_of("(1 3)(2 4)").unwrap()]);
        let ses = ShortExactSequence::from_normal_subgroup(&z4, sq, ("Z2", "Z4/Z2")).unwrap();
        assert!(ses.verify());
        assert!(ses.find_splitting().is_none());
    }

    #[test]
    fn klein_splits() {
        let v = perm_group("V", &["(12)", "(34)"], 4);
        let a = v.generated_by(&[v.index_of("(1 2)").unwrap()]);
        let ses = ShortExactSequence::from_normal_subgroup(&v, a, ("Z2", "V/Z2")).unwrap();
        assert!(ses.verify());
        assert_eq!(ses.all_splittings().len(), 2);
    }
}
