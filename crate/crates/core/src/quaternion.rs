//! The quaternion units `±1, ±i, ±j, ±k`, multiplied through the table of
//! the three imaginary units.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Unit {
    One,
    I,
    J,
    K,
}

/// Products of the imaginary units, row times column: `(sign, unit)`.
pub const UNIT_TABLE: [[(i8, Unit); 3]; 3] = [
    [(-1, Unit::One), (1, Unit::K), (-1, Unit::J)],
    [(-1, Unit::K), (-1, Unit::One), (1, Unit::I)],
    [(1, Unit::J), (-1, Unit::I), (-1, Unit::One)],
];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Quaternion {
    pub sign: i8,
    pub unit: Unit,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion { sign: 1, unit: Unit::One };
    pub const MINUS_ONE: Quaternion = Quaternion { sign: -1, unit: Unit::One };
    pub const I: Quaternion = Quaternion { sign: 1, unit: Unit::I };
    pub const J: Quaternion = Quaternion { sign: 1, unit: Unit::J };
    pub const K: Quaternion = Quaternion { sign: 1, unit: Unit::K };

    pub fn new(sign: i8, unit: Unit) -> Quaternion {
        Quaternion { sign: sign.signum(), unit }
    }

    /// All eight units in the order `1, i, j, k, −1, −i, −j, −k`.
    pub fn all() -> [Quaternion; 8] {
        let units = [Unit::One, Unit::I, Unit::J, Unit::K];
        let mut out = [Quaternion::ONE; 8];
        for (k, u) in units.iter().enumerate() {
            out[k] = Quaternion::new(1, *u);
            out[k + 4] = Quaternion::new(-1, *u);
        }
        out
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign < 0 { "-" } else { "" };
        let u = match self.unit {
            Unit::One => "1",
            Unit::I => "i",
            Unit::J => "j",
            Unit::K => "k",
        };
        write!(f, "{sign}{u}")
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Quaternion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Quaternion> {
        let t = s.trim();
        let (sign, body) = match t.strip_prefix('-').or_else(|| t.strip_prefix('−')) {
            Some(rest) => (-1, rest),
            None => (1, t),
        };
        let unit = match body {
            "1" => Unit::One,
            "i" => Unit::I,
            "j" => Unit::J,
            "k" => Unit::K,
            _ => return Err(Error::Parse(format!("unknown quaternion unit {s:?}"))),
        };
        Ok(Quaternion::new(sign, unit))
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion { sign: -self.sign, unit: self.unit }
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let sign = self.sign * rhs.sign;
        let (s, unit) = match (self.unit, rhs.unit) {
            (Unit::One, u) | (u, Unit::One) => (1, u),
            (a, b) => UNIT_TABLE[a as usize - 1][b as usize - 1],
        };
        Quaternion { sign: sign * s, unit }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_relations() {
        let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
        for u in [i, j, k] {
            assert_eq!(u.mul(u), Quaternion::MINUS_ONE);
        }
        assert_eq!(i.mul(j), k);
        assert_eq!(j.mul(k), i);
        assert_eq!(k.mul(i), j);
        assert_eq!(j.mul(i), k.neg());
        assert_eq!(i.mul(j).mul(k), Quaternion::MINUS_ONE);
    }

    #[test]
    fn associative() {
        let all = Quaternion::all();
        for a in all {
            for b in all {
                for c in all {
                    assert_eq!(a.mul(b).mul(c), a.mul(b.mul(c)));
                }
            }
        }
    }

    #[test]
    fn parse_roundtrip() {
        for q in Quaternion::all() {
            assert_eq!(q.to_string().parse::<Quaternion>().unwrap(), q);
        }
    }
}
