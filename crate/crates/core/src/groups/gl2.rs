use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::element::GroupElement;

/// An invertible 2×2 matrix over `Z/NZ`, entries `[[a, b], [c, d]]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GL2Elem {
    n: u32,
    m: [u32; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GL2Error {
    #[error("modulus must be at least 2")]
    BadModulus,
    #[error("determinant {det} is not a unit mod {n}")]
    Singular { det: u32, n: u32 },
    #[error("malformed matrix {0:?}; expected \"[[a,b],[c,d]] mod N\"")]
    Parse(String),
}

impl GL2Elem {
    pub fn new(n: u32, a: i64, b: i64, c: i64, d: i64) -> Result<Self, GL2Error> {
        if n < 2 {
            return Err(GL2Error::BadModulus);
        }
        let r = |x: i64| x.rem_euclid(n as i64) as u32;
        let e = GL2Elem {
            n,
            m: [r(a), r(b), r(c), r(d)],
        };
        let det = e.det();
        if det.gcd(&n) != 1 {
            return Err(GL2Error::Singular { det, n });
        }
        Ok(e)
    }

    pub fn diag(n: u32, a: i64, d: i64) -> Result<Self, GL2Error> {
        Self::new(n, a, 0, 0, d)
    }

    pub fn identity(n: u32) -> Self {
        GL2Elem { n, m: [1, 0, 0, 1] }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn entries(&self) -> [[u32; 2]; 2] {
        [[self.m[0], self.m[1]], [self.m[2], self.m[3]]]
    }

    pub fn det(&self) -> u32 {
        let n = self.n as u64;
        let [a, b, c, d] = self.m.map(u64::from);
        ((a * d % n + n * n - b * c % n) % n) as u32
    }

    pub fn trace(&self) -> u32 {
        (self.m[0] + self.m[3]) % self.n
    }

    /// The matrix acting on a column vector.
    pub fn act(&self, v: [u32; 2]) -> [u32; 2] {
        let n = self.n as u64;
        let [a, b, c, d] = self.m.map(u64::from);
        let (x, y) = (v[0] as u64, v[1] as u64);
        [((a * x + b * y) % n) as u32, ((c * x + d * y) % n) as u32]
    }
}

pub(crate) fn inv_mod(a: u32, n: u32) -> u32 {
    let e = (a as i64).extended_gcd(&(n as i64));
    debug_assert_eq!(e.gcd, 1);
    e.x.rem_euclid(n as i64) as u32
}

impl GroupElement for GL2Elem {
    fn mul(&self, rhs: &Self) -> Self {
        let n = self.n as u64;
        let [a, b, c, d] = self.m.map(u64::from);
        let [e, f, g, h] = rhs.m.map(u64::from);
        GL2Elem {
            n: self.n,
            m: [
                ((a * e + b * g) % n) as u32,
                ((a * f + b * h) % n) as u32,
                ((c * e + d * g) % n) as u32,
                ((c * f + d * h) % n) as u32,
            ],
        }
    }

    fn inverse(&self) -> Self {
        let n = self.n as u64;
        let di = inv_mod(self.det(), self.n) as u64;
        let [a, b, c, d] = self.m.map(u64::from);
        let neg = |x: u64| (n - x) % n;
        GL2Elem {
            n: self.n,
            m: [d * di % n, neg(b) * di % n, neg(c) * di % n, a * di % n].map(|x| x as u32),
        }
    }

    fn identity_like(&self) -> Self {
        GL2Elem::identity(self.n)
    }

    fn compatible(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl fmt::Display for GL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.m;
        write!(f, "[[{a},{b}],[{c},{d}]] mod {}", self.n)
    }
}

impl fmt::Debug for GL2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GL2Elem {
    type Err = GL2Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GL2Error::Parse(s.to_string());
        let (mat, n) = s.split_once("mod").ok_or_else(bad)?;
        let n: u32 = n.trim().parse().map_err(|_| bad())?;
        let nums: Vec<i64> = mat
            .split(|c: char| "[], ".contains(c))
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let compact: String = mat.chars().filter(|c| !c.is_whitespace()).collect();
        if nums.len() != 4 || !compact.starts_with("[[") || !compact.ends_with("]]") {
            return Err(bad());
        }
        GL2Elem::new(n, nums[0], nums[1], nums[2], nums[3])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let g = GL2Elem::new(5, 1, 2, 3, 4).unwrap();
        assert_eq!(g.det(), 3); // 4 - 6 = -2
        assert!(g.mul(&g.inverse()).is_identity());
        assert_eq!(g.to_string().parse::<GL2Elem>().unwrap(), g);
        assert!(GL2Elem::new(4, 2, 0, 0, 1).is_err());
        assert!("[[1,2],[3]] mod 5".parse::<GL2Elem>().is_err());
        assert_eq!(GL2Elem::diag(25, 7, 1).unwrap().order(), 4);
        assert_eq!(g.act([1, 0]), [1, 3]);
    }
}
