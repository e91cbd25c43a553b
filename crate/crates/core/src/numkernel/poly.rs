use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;

/// Univariate polynomial with integer coefficients, stored low degree first.
///
/// The zero polynomial has no coefficients; otherwise the last entry is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The polynomial `t`.
    pub fn var() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `a*t - b`, the linear factor vanishing at `b/a`.
    pub fn linear(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Self::new(vec![-b.into(), a.into()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::constant(1);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Exact value at a rational point, by Horner's rule.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + &Rational::from_int(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `sum c_i a^i b^(n-i)`, i.e. `b^n f(a/b)` with `n = deg f`.
    pub fn eval_homogeneous(&self, a: &BigInt, b: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut bpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        acc
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide out the content and make the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.lc().unwrap().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Divide every coefficient by `k`, which must divide all of them.
    pub fn div_exact_scalar(&self, k: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % k).is_zero());
                    c / k
                })
                .collect(),
        )
    }

    /// Pseudo-division: returns `(q, r)` with `lc(d)^(deg f - deg d + 1) f = q d + r`.
    pub fn pseudo_div(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(df) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if df < dd {
            return (Self::zero(), self.clone());
        }
        let l = d.lc().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dd + 1];
        for k in (0..=df - dd).rev() {
            let top = r[k + dd].clone();
            for qc in q.iter_mut() {
                *qc *= l;
            }
            for rc in r.iter_mut() {
                *rc *= l;
            }
            q[k] += &top;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &top * dc;
            }
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Quotient in Z[t], or `None` when `d` does not divide `self` there.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree().expect("division by zero polynomial");
        let Some(df) = self.degree() else {
            return Some(Self::zero());
        };
        if df < dd {
            return None;
        }
        let l = d.lc().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dd + 1];
        for k in (0..=df - dd).rev() {
            let (qk, rem) = r[k + dd].div_rem(l);
            if !rem.is_zero() {
                return None;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[k + i] -= &qk * dc;
            }
            q[k] = qk;
        }
        r.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Exact quotient when `d` divides `self` over the rationals, made primitive.
    pub fn div_primitive(&self, d: &IntPoly) -> IntPoly {
        let (q, r) = self.pseudo_div(d);
        debug_assert!(r.is_zero(), "divisor does not divide");
        q.primitive_part()
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.pseudo_div(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Coefficients reduced into `[0, p)`.
    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        let mut out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.try_into().unwrap()
            })
            .collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        out
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| s.trim().parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.last().is_some_and(Zero::is_zero) {
            return Err(serde::de::Error::custom("trailing zero coefficient"));
        }
        Ok(IntPoly { coeffs })
    }
}
