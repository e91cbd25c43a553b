use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::modp;
use super::roots::{rational_roots, RootError};
use super::{IntPoly, Rational};

/// A reduced quotient `num / den` of integer polynomials.
///
/// `num` and `den` share no root, their combined content is 1, and `den`
/// has a positive leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RatFuncError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("t = {0} is a pole")]
    Pole(Rational),
    #[error(transparent)]
    Root(#[from] RootError),
}

impl RatFunc {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, RatFuncError> {
        if den.is_zero() {
            return Err(RatFuncError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num,
                den: IntPoly::constant(1),
            });
        }
        let (mut num, mut den) = (num, den);
        if !coprime_mod_small_prime(&num, &den) {
            let g = num.gcd(&den);
            if g.degree() != Some(0) {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let mut c = num.content().gcd(&den.content());
        if den.lc().unwrap().is_negative() {
            c = -c;
        }
        Ok(RatFunc {
            num: num.div_exact_scalar(&c),
            den: den.div_exact_scalar(&c),
        })
    }

    /// Polynomial map `f(t) / 1`.
    pub fn poly(f: IntPoly) -> Self {
        Self::new(f, IntPoly::constant(1)).unwrap()
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn eval(&self, t: &Rational) -> Result<Rational, RatFuncError> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(RatFuncError::Pole(t.clone()));
        }
        Ok(&self.num.eval(t) / &d)
    }

    /// All rational `t` with `self(t) = j0`.
    pub fn fiber(&self, j0: &Rational) -> Result<BTreeSet<Rational>, RatFuncError> {
        let a = j0.numer();
        let b = j0.denom();
        let f = &self.num.scale(b) - &self.den.scale(a);
        let roots = rational_roots(&f)?;
        // Coprimality means a common root of num and den cannot exist.
        debug_assert!(roots.iter().all(|t| !self.den.eval(t).is_zero()));
        Ok(roots)
    }
}

/// Cheap sufficient test: coprime modulo a prime not dividing lc(num) implies coprime.
fn coprime_mod_small_prime(num: &IntPoly, den: &IntPoly) -> bool {
    let lc = num.lc().unwrap();
    modp::primes_above_3()
        .filter(|p| !(lc % BigInt::from(*p)).is_zero())
        .take(4)
        .any(|p| {
            let (a, b) = (num.reduce_mod(p), den.reduce_mod(p));
            modp::gcd_degree(&a, &b, p) == Some(0)
        })
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc[{self}]")
    }
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            num: IntPoly,
            den: IntPoly,
        }
        let raw = Raw::deserialize(d)?;
        let rf = RatFunc::new(raw.num.clone(), raw.den.clone()).map_err(serde::de::Error::custom)?;
        // Fixture rows must already be in normal form; silently reducing them
        // would hide a transcription slip.
        if rf.num != raw.num || rf.den != raw.den {
            return Err(serde::de::Error::custom(
                "rational function is not in reduced normal form",
            ));
        }
        Ok(rf)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn normalizes() {
        // (2t^2 - 2) / (-4t - 4) = (t - 1) / -2 -> (-t + 1) / 2
        let r = RatFunc::new(p(&[-2, 0, 2]), p(&[-4, -4])).unwrap();
        assert_eq!(r.num(), &p(&[1, -1]));
        assert_eq!(r.den(), &p(&[2]));
        assert_eq!(
            RatFunc::new(p(&[1]), IntPoly::zero()),
            Err(RatFuncError::ZeroDenominator)
        );
    }

    #[test]
    fn four_four_map() {
        let j = RatFunc::new(p(&[0, 0, 0, 1]), p(&[16, 1])).unwrap();
        assert_eq!(j.eval(&2.into()).unwrap(), Rational::new(4, 9));
        assert!(matches!(j.eval(&(-16).into()), Err(RatFuncError::Pole(_))));
        assert!(j.fiber(&Rational::new(4, 9)).unwrap().contains(&2.into()));
    }
}
