use std::fmt;

use serde::{Deserialize, Serialize};

/// `Z/aZ + Z/bZ` with `a | b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 2]", into = "[u32; 2]")]
pub struct TorsionStructure {
    a: u32,
    b: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TorsionError {
    #[error("({0},{1}) is not a torsion structure: need 1 <= a and a | b")]
    Invalid(u32, u32),
    #[error("no unique maximum among {0:?}")]
    NonUniqueMaximum(Vec<TorsionStructure>),
    #[error("empty set has no maximum")]
    Empty,
}

impl TorsionStructure {
    pub fn new(a: u32, b: u32) -> Result<Self, TorsionError> {
        if a == 0 || b == 0 || b % a != 0 {
            return Err(TorsionError::Invalid(a, b));
        }
        Ok(TorsionStructure { a, b })
    }

    pub const fn trivial() -> Self {
        TorsionStructure { a: 1, b: 1 }
    }

    pub fn a(self) -> u32 {
        self.a
    }

    pub fn b(self) -> u32 {
        self.b
    }

    pub fn order(self) -> u32 {
        self.a * self.b
    }

    pub fn is_cyclic(self) -> bool {
        self.a == 1
    }
}

impl TryFrom<[u32; 2]> for TorsionStructure {
    type Error = TorsionError;
    fn try_from([a, b]: [u32; 2]) -> Result<Self, Self::Error> {
        TorsionStructure::new(a, b)
    }
}

impl From<TorsionStructure> for [u32; 2] {
    fn from(t: TorsionStructure) -> Self {
        [t.a, t.b]
    }
}

impl fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (1, 1) => write!(f, "0"),
            (1, b) => write!(f, "Z/{b}"),
            (a, b) => write!(f, "Z/{a} + Z/{b}"),
        }
    }
}

/// `t1` is isomorphic to a subgroup of `t2`.
pub fn torsion_leq(t1: TorsionStructure, t2: TorsionStructure) -> bool {
    t2.a % t1.a == 0 && t2.b % t1.b == 0
}

/// The element of `set` above every other, if there is one.
pub fn torsion_max<I>(set: I) -> Result<TorsionStructure, TorsionError>
where
    I: IntoIterator<Item = TorsionStructure>,
{
    let mut v: Vec<TorsionStructure> = set.into_iter().collect();
    v.sort();
    v.dedup();
    if v.is_empty() {
        return Err(TorsionError::Empty);
    }
    v.iter()
        .copied()
        .find(|&m| v.iter().all(|&t| torsion_leq(t, m)))
        .ok_or(TorsionError::NonUniqueMaximum(v))
}

fn p_part(n: u32, p: u32) -> u32 {
    let mut n = n;
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

pub fn p_primary(t: TorsionStructure, p: u32) -> TorsionStructure {
    TorsionStructure {
        a: p_part(t.a, p),
        b: p_part(t.b, p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u32, b: u32) -> TorsionStructure {
        TorsionStructure::new(a, b).unwrap()
    }

    #[test]
    fn order_relation() {
        assert!(torsion_leq(t(1, 5), t(5, 5)));
        assert!(!torsion_leq(t(4, 4), t(1, 3)) && !torsion_leq(t(1, 3), t(4, 4)));
        assert!(torsion_leq(t(4, 8), t(8, 16)));
        assert!(!torsion_leq(t(8, 8), t(4, 32)));
    }

    #[test]
    fn maxima() {
        assert_eq!(torsion_max([t(1, 1), t(1, 3), t(3, 15)]), Ok(t(3, 15)));
        assert_eq!(torsion_max([t(1, 1)]), Ok(t(1, 1)));
        assert!(matches!(
            torsion_max([t(4, 4), t(1, 3)]),
            Err(TorsionError::NonUniqueMaximum(_))
        ));
        assert_eq!(torsion_max([]), Err(TorsionError::Empty));
    }

    #[test]
    fn primary_parts() {
        assert_eq!(p_primary(t(8, 24), 2), t(8, 8));
        assert_eq!(p_primary(t(8, 24), 3), t(1, 3));
        assert_eq!(p_primary(t(1, 1), 5), t(1, 1));
        assert!(TorsionStructure::new(2, 3).is_err());
        assert!(serde_json::from_str::<TorsionStructure>("[3,4]").is_err());
        assert_eq!(serde_json::to_string(&t(4, 8)).unwrap(), "[4,8]");
    }
}
