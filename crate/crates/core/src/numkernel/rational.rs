use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number in lowest terms with a positive denominator.
///
/// Thin wrapper over `num_rational::BigRational`, which already keeps the
/// reduced form; the wrapper pins down the text format (`"p/q"` or `"p"`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as a rational")]
pub struct ParseRationalError(pub String);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        let den = den.into();
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num.into(), den))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), e as usize))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// max(|p|, q), the usual naive height.
    pub fn height(&self) -> BigInt {
        self.numer().abs().max(self.denom().clone())
    }

    pub fn as_inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_int(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        // BigInt::from_str accepts a leading '+', which we tolerate; reject
        // a sign on the denominator so "1/-2" is not silently accepted.
        if d.starts_with(['-', '+']) {
            return Err(err());
        }
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rational::new(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Integer `k`-th root of `n >= 0` if `n` is a perfect `k`-th power.
pub(crate) fn exact_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let r = n.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        Some(r)
    } else {
        None
    }
}

/// Whether `q = r^n` for some rational `r`; `n` must be 2 or 3.
///
/// Negative `q` is never a square. Zero is every power.
pub fn is_nth_power(q: &Rational, n: u32) -> bool {
    assert!(n == 2 || n == 3, "only squares and cubes are supported");
    if q.is_zero() {
        return true;
    }
    if n == 2 && q.is_negative() {
        return false;
    }
    // For cubes the sign passes through; test |p| and q.
    exact_root(&q.numer().abs(), n).is_some() && exact_root(q.denom(), n).is_some()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("square class of zero is undefined")]
pub struct ZeroArgument;

/// Whether `a` and `b` differ by a nonzero rational square.
pub fn same_square_class(a: &Rational, b: &Rational) -> Result<bool, ZeroArgument> {
    if a.is_zero() || b.is_zero() {
        return Err(ZeroArgument);
    }
    Ok(is_nth_power(&(a * b), 2))
}

/// Exponent of the unit group mod `n`.
pub fn carmichael_lambda(n: u64) -> u64 {
    assert!(n >= 1);
    let mut m = n;
    let mut acc = 1u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut pe = 1u64;
            let mut e = 0u32;
            while m % p == 0 {
                m /= p;
                pe *= p;
                e += 1;
            }
            acc = acc.lcm(&prime_power_lambda(p, e, pe));
        }
        p += 1;
    }
    if m > 1 {
        acc = acc.lcm(&(m - 1));
    }
    acc
}

fn prime_power_lambda(p: u64, e: u32, pe: u64) -> u64 {
    match (p, e) {
        (2, 1) => 1,
        (2, 2) => 2,
        (2, _) => pe / 4,
        _ => (p - 1) * (pe / p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("-6/4").to_string(), "-3/2");
        assert_eq!(q("0/7").to_string(), "0");
        assert_eq!(q(" 12 ").to_string(), "12");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn powers() {
        assert!(is_nth_power(&q("8/27"), 3));
        assert!(is_nth_power(&q("-27"), 3));
        assert!(!is_nth_power(&q("4"), 3));
        assert!(!is_nth_power(&q("-4"), 2));
        assert!(is_nth_power(&q("9/49"), 2));
        assert!(is_nth_power(&q("0"), 2));
    }

    #[test]
    fn square_classes() {
        assert!(same_square_class(&q("2"), &q("8")).unwrap());
        assert!(!same_square_class(&q("2"), &q("-2")).unwrap());
        assert!(!same_square_class(&q("64"), &q("-4096")).unwrap());
        assert!(same_square_class(&q("-64"), &q("-4096")).unwrap());
        assert_eq!(same_square_class(&q("0"), &q("1")), Err(ZeroArgument));
    }

    #[test]
    fn lambda_values() {
        assert_eq!(carmichael_lambda(16), 4);
        assert_eq!(carmichael_lambda(240), 4);
        assert_eq!(carmichael_lambda(7), 6);
        assert_eq!(carmichael_lambda(1), 1);
        assert_eq!(carmichael_lambda(8), 2);
    }
}
