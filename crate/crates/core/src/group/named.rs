use super::finite::{generate_closure, ConcreteGroup, FiniteGroup, GroupElement, DEFAULT_CAP};
use super::perm::Permutation;
use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

impl GroupElement for Quaternion {
    fn op(&self, rhs: &Quaternion) -> Quaternion {
        *self * *rhs
    }
    fn identity_like(&self) -> Quaternion {
        Quaternion::ONE
    }
    fn default_label(&self, _index: usize) -> String {
        self.to_string()
    }
}

/// Named generators in a permutation group plus the central element written
/// as a leading minus sign.
#[derive(Clone, Debug)]
pub struct Alphabet {
    pub letters: Vec<(char, Permutation)>,
    pub minus: Permutation,
}

impl Alphabet {
    pub fn new(letters: &[(char, &str)], minus: &str, degree: usize) -> Result<Alphabet> {
        Ok(Alphabet {
            letters: letters.iter().map(|&(c, s)| Ok((c, Permutation::parse(s, degree)?))).collect::<Result<_>>()?,
            minus: Permutation::parse(minus, degree)?,
        })
    }

    fn degree(&self) -> usize {
        self.minus.degree()
    }

    /// Evaluates words such as `a3n`, `adn`, `-dn` or `1`. Letters multiply
    /// left to right; a digit after a letter is an exponent.
    pub fn eval(&self, word: &str) -> Result<Permutation> {
        let w = word.trim();
        let (negate, body) = match w.strip_prefix('-').or_else(|| w.strip_prefix('−')) {
            Some(rest) => (true, rest.trim()),
            None => (false, w),
        };
        let mut acc = Permutation::identity(self.degree());
        if body != "1" {
            let chars: Vec<char> = body.chars().collect();
            if chars.is_empty() {
                return Err(Error::Parse(format!("empty word {word:?}")));
            }
            let mut k = 0;
            while k < chars.len() {
                let letter = &self
                    .letters
                    .iter()
                    .find(|(c, _)| *c == chars[k])
                    .ok_or_else(|| Error::Parse(format!("unknown letter {:?} in {word:?}", chars[k])))?
                    .1;
                k += 1;
                let mut exp = 0u32;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    exp = exp * 10 + chars[k].to_digit(10).unwrap();
                    k += 1;
                }
                for _ in 0..exp.max(1) {
                    acc = acc.compose(letter);
                }
            }
        }
        if negate {
            acc = self.minus.compose(&acc);
        }
        Ok(acc)
    }

    /// Index of the element a word or cycle string denotes in `g`.
    pub fn resolve(&self, g: &ConcreteGroup<Permutation>, text: &str) -> Result<usize> {
        let t = text.trim();
        let p = if t.starts_with('(') || t == "()" { Permutation::parse(t, self.degree())? } else { self.eval(t)? };
        g.index_of(&p).ok_or_else(|| Error::LabelNotFound(text.to_string()))
    }
}

fn perm_group(name: &str, gens: &[&str], degree: usize) -> Result<ConcreteGroup<Permutation>> {
    let gens: Vec<Permutation> = gens.iter().map(|s| Permutation::parse(s, degree)).collect::<Result<_>>()?;
    generate_closure(name, &gens, DEFAULT_CAP)
}

/// Symmetries of the square in `S₄`: `r = (1234)`, `b = (24)`.
pub fn dihedral8() -> Result<ConcreteGroup<Permutation>> {
    perm_group("DH8", &["(1234)", "(24)"], 4)
}

pub fn dihedral8_alphabet() -> Alphabet {
    Alphabet::new(&[('r', "(1234)"), ('b', "(24)")], "(13)(24)", 4).expect("static")
}

/// `DH₈ × Z₂ ⊂ S₆`, generated by `(1234)`, `(24)`, `(56)`.
pub fn dihedral8_times_z2() -> Result<ConcreteGroup<Permutation>> {
    perm_group("DH8xZ2", &["(1234)", "(24)", "(56)"], 6)
}

/// `DC₈ ⊂ S₈`, generated by `x = (1234)(5678)`, `y = (1537)(2846)`.
pub fn dicyclic8() -> Result<ConcreteGroup<Permutation>> {
    perm_group("DC8", &["(1234)(5678)", "(1537)(2846)"], 8)
}

pub fn dicyclic8_alphabet(degree: usize) -> Alphabet {
    let mut a = Alphabet::new(&[('x', "(1234)(5678)"), ('y', "(1537)(2846)")], "(13)(24)(57)(68)", 8).expect("static");
    if degree > 8 {
        a.letters.push(('z', Permutation::parse("(9 10)", degree).expect("static")));
        for (_, p) in a.letters.iter_mut() {
            *p = p.extend(degree);
        }
        a.minus = a.minus.extend(degree);
    }
    a
}

/// `DC₈ × Z₂ ⊂ S₁₀`, with `z = (9 10)`.
pub fn dicyclic8_times_z2() -> Result<ConcreteGroup<Permutation>> {
    perm_group("DC8xZ2", &["(1234)(5678)", "(1537)(2846)", "(9 10)"], 10)
}

/// `16E ⊂ S₈`, generated by `a = (1234)(5678)`, `d = (1638)(2547)`,
/// `n = (17)(28)(35)(46)`.
pub fn group_16e() -> Result<ConcreteGroup<Permutation>> {
    perm_group("16E", &["(1234)(5678)", "(1638)(2547)", "(17)(28)(35)(46)"], 8)
}

/// Letters `a`, `d`, `n`; the minus sign is `a² = d²`.
pub fn group_16e_alphabet() -> Alphabet {
    Alphabet::new(&[('a', "(1234)(5678)"), ('d', "(1638)(2547)"), ('n', "(17)(28)(35)(46)")], "(13)(24)(57)(68)", 8)
        .expect("static")
}

/// Cyclic group generated by an `n`-cycle.
pub fn cyclic(n: usize) -> Result<ConcreteGroup<Permutation>> {
    if n == 1 {
        return generate_closure("Z1", &[Permutation::identity(1)], DEFAULT_CAP);
    }
    let cycle: Vec<usize> = (1..=n).collect();
    let gen = Permutation::from_cycles(n, &[cycle])?;
    generate_closure(&format!("Z{n}"), &[gen], DEFAULT_CAP)
}

/// The quaternion units closed from `i` and `j` under the unit table.
pub fn quaternion() -> Result<ConcreteGroup<Quaternion>> {
    let q = generate_closure("Q", &[Quaternion::I, Quaternion::J], DEFAULT_CAP)?;
    let order = Quaternion::all();
    let labels: Vec<String> = order.iter().map(Quaternion::to_string).collect();
    q.arrange(&order, &labels)
}

/// `S⁰ = {1, −1}` under multiplication.
pub fn sign_group() -> FiniteGroup {
    FiniteGroup::new("S0", vec!["1".into(), "-1".into()], vec![vec![0, 1], vec![1, 0]]).expect("static")
}

/// `Z₂ × Z₂` as pairs of signs, labelled `(1,1)`, `(1,-1)`, `(-1,1)`, `(-1,-1)`.
pub fn klein() -> FiniteGroup {
    let s = sign_group();
    s.direct_product(&s, "V").expect("static")
}

/// Any of the groups above by name: `DH8`, `DH8xZ2`, `DC8`, `DC8xZ2`, `16E`,
/// `Q`, `QxS0`, `S0`, `V`, `Z<n>`.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    Ok(match name {
        "DH8" => dihedral8()?.group,
        "DH8xZ2" => dihedral8_times_z2()?.group,
        "DC8" => dicyclic8()?.group,
        "DC8xZ2" => dicyclic8_times_z2()?.group,
        "16E" => group_16e()?.group,
        "Q" => quaternion()?.group,
        "QxS0" => quaternion()?.group.direct_product(&sign_group(), "QxS0")?,
        "S0" => sign_group(),
        "V" => klein(),
        _ => {
            let n: usize = name
                .strip_prefix('Z')
                .and_then(|k| k.parse().ok())
                .filter(|&k| k > 0)
                .ok_or_else(|| Error::Parse(format!("unknown group {name:?}")))?;
            cyclic(n)?.group
        }
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;

    #[test]
    fn dihedral_matches_listed_elements() {
        let g = dihedral8().unwrap();
        let listed = ["()", "(1234)", "(13)(24)", "(1432)", "(24)", "(12)(34)", "(13)", "(14)(23)"];
        assert_eq!(g.group.order(), 8);
        for s in listed {
            assert!(g.index_of(&Permutation::parse(s, 4).unwrap()).is_some(), "{s}");
        }
        let words = ["1", "r", "r2", "r3", "b", "rb", "r2b", "r3b"];
        let alpha = dihedral8_alphabet();
        for (w, s) in words.iter().zip(listed) {
            assert_eq!(alpha.eval(w).unwrap(), Permutation::parse(s, 4).unwrap(), "{w}");
        }
    }

    #[test]
    fn group_16e_profile_and_squares() {
        let g = group_16e().unwrap();
        assert_eq!(g.group.order_profile(), BTreeMap::from([(1, 1), (2, 7), (4, 8)]));
        let alpha = group_16e_alphabet();
        assert_eq!(alpha.eval("a2").unwrap(), alpha.eval("d2").unwrap());
        assert_eq!(alpha.eval("a2").unwrap(), alpha.eval("-1").unwrap());
        for w in ["n", "a2n", "dn", "nd", "and", "adn"] {
            assert_eq!(alpha.eval(w).unwrap().order(), 2, "{w}");
        }
        for w in ["a", "a3", "d", "d3", "an", "ad", "da", "a3n"] {
            assert_eq!(alpha.eval(w).unwrap().order(), 4, "{w}");
        }
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion().unwrap();
        assert_eq!(q.group.order(), 8);
        assert_eq!(q.group.elements_of_order(2).len(), 1);
        assert_eq!(q.group.label(q.group.elements_of_order(2)[0]), "-1");
    }

    #[test]
    fn dicyclic_times_z2_profile() {
        let g = dicyclic8_times_z2().unwrap();
        assert_eq!(g.group.order_profile(), BTreeMap::from([(1, 1), (2, 3), (4, 12)]));
        let alpha = dicyclic8_alphabet(10);
        assert_eq!(alpha.eval("xy").unwrap(), Permutation::parse("(1638)(2547)", 10).unwrap());
        assert_eq!(alpha.eval("x2y").unwrap(), Permutation::parse("(1735)(2648)", 10).unwrap());
    }

    #[test]
    fn named_lookup() {
        assert_eq!(named_group("Z4").unwrap().order(), 4);
        assert_eq!(named_group("V").unwrap().order(), 4);
        assert_eq!(named_group("QxS0").unwrap().order(), 16);
        assert!(named_group("Z0").is_err());
        assert!(named_group("nope").is_err());
    }

    #[test]
    fn unknown_letter_is_an_error() {
        assert!(group_16e_alphabet().eval("aq").is_err());
    }
}
