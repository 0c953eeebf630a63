use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`.
///
/// Composition follows function notation: `p.compose(&q)` is `p ∘ q`, which
/// applies `q` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // zero-based images
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        Permutation { images: (0..degree).collect() }
    }

    /// Builds from one-based images, e.g. `[2, 1, 3, 4]` for `(1 2)`.
    pub fn from_images(images: &[usize]) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::Parse(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[x - 1] = true;
            zero_based.push(x - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    /// Builds from disjoint one-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree {
                    return Err(Error::Parse(format!("point {x} outside 1..={degree}")));
                }
                if touched[x - 1] {
                    return Err(Error::Parse(format!("point {x} appears twice")));
                }
                touched[x - 1] = true;
                images[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 3 16 10)(2 12 9 5)"`, `"(1234)(56)"`
    /// or `"(1638)(2547)(9 10)"`. A cycle without spaces is read digit by
    /// digit. `"()"`, `"1"` and `"(1) (2)...(16)"` all denote the identity.
    pub fn parse(s: &str, degree: usize) -> Result<Permutation> {
        Permutation::from_cycles(degree, &parse_cycles(s)?)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a one-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// One-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// True when no point is fixed.
    pub fn is_fixed_point_free(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i != x)
    }

    /// Same permutation on a larger set, fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..degree);
        Permutation { images }
    }

    /// Nontrivial cycles, each starting at its smallest point, ordered by
    /// that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, lcm)
    }

    pub fn cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }
}

fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let t = s.trim();
    if t.is_empty() || t == "1" || t == "()" {
        return Ok(Vec::new());
    }
    let mut cycles = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        let open = rest.find('(').ok_or_else(|| Error::Parse(format!("expected '(' in {s:?}")))?;
        let stray = rest[..open].trim();
        if !stray.is_empty() && stray != "..." {
            return Err(Error::Parse(format!("stray text in {s:?}")));
        }
        let close = rest[open..].find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))? + open;
        let body = rest[open + 1..close].trim();
        rest = rest[close + 1..].trim_start();
        if stray == "..." {
            // "(1) (2)...(16)" lists fixed points
            continue;
        }
        let points: Vec<usize> = if body.contains(char::is_whitespace) {
            body.split_whitespace()
                .map(|x| x.parse::<usize>().map_err(|e| Error::Parse(format!("{x:?}: {e}"))))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad point {c:?} in {s:?}")))
                })
                .collect::<Result<_>>()?
        };
        if points.len() > 1 {
            cycles.push(points);
        }
    }
    Ok(cycles)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.cycle_string(), self.degree())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.cycle_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses with the degree set to the largest point mentioned.
    fn from_str(s: &str) -> Result<Permutation> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        Permutation::from_cycles(degree, &cycles)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposition_from_images() {
        let p = Permutation::from_images(&[2, 1, 3, 4]).unwrap();
        assert_eq!(p.cycle_string(), "(1 2)");
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn square_of_double_four_cycle() {
        let a = Permutation::parse("(1234)(5678)", 8).unwrap();
        assert_eq!(a.compose(&a).cycle_string(), "(1 3)(2 4)(5 7)(6 8)");
    }

    #[test]
    fn identity_marker() {
        assert_eq!(Permutation::identity(16).cycle_string(), "()");
        assert!(Permutation::parse("(1) (2)...(16)", 16).unwrap().is_identity());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let r = Permutation::parse("(1234)", 4).unwrap();
        let b = Permutation::parse("(24)", 4).unwrap();
        assert_eq!(r.compose(&b).cycle_string(), "(1 2)(3 4)");
        assert_eq!(r.compose(&b).apply(4), r.apply(b.apply(4)));
    }

    #[test]
    fn rotated_and_reordered_cycles_parse_to_the_same_permutation() {
        let printed = Permutation::parse("(1 7) (16 14) (2 15) (3 11) (4 10) (8 9) (12 13) (5 6)", 16).unwrap();
        let canonical = Permutation::parse("(1 7)(2 15)(3 11)(4 10)(5 6)(8 9)(12 13)(14 16)", 16).unwrap();
        assert_eq!(printed, canonical);
        assert_eq!(printed.cycle_string(), "(1 7)(2 15)(3 11)(4 10)(5 6)(8 9)(12 13)(14 16)");
    }

    #[test]
    fn mixed_compact_and_spaced_cycles() {
        let p = Permutation::parse("(1638)(2547)(9 10)", 10).unwrap();
        assert_eq!(p.cycle_string(), "(1 6 3 8)(2 5 4 7)(9 10)");
        assert_eq!("(1638)(2547)(9 10)".parse::<Permutation>().unwrap(), p);
    }

    #[test]
    fn rejects_repeated_points_and_bad_images() {
        assert!(Permutation::parse("(1 2)(2 3)", 4).is_err());
        assert!(Permutation::parse("(1 5)", 4).is_err());
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }

    #[test]
    fn inverse_and_extend() {
        let p = Permutation::parse("(1 3 16 10)(2 12 9 5)", 16).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        let q = Permutation::parse("(24)", 4).unwrap().extend(6);
        assert_eq!(q.degree(), 6);
        assert_eq!(q.cycle_string(), "(2 4)");
    }
}
