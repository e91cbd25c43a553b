use serde::{Deserialize, Serialize};

use crate::numkernel::Rational;

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6` over Q, nonsingular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[Rational; 5]", into = "[Rational; 5]")]
pub struct WeierstrassModel {
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
    pub a6: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("singular model: discriminant is zero")]
pub struct SingularModel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveInvariants {
    pub b2: Rational,
    pub b4: Rational,
    pub b6: Rational,
    pub b8: Rational,
    pub c4: Rational,
    pub c6: Rational,
    pub delta: Rational,
    pub j: Rational,
}

impl WeierstrassModel {
    pub fn new(ainvs: [Rational; 5]) -> Result<Self, SingularModel> {
        let [a1, a2, a3, a4, a6] = ainvs;
        let m = WeierstrassModel { a1, a2, a3, a4, a6 };
        if raw_invariants(&m).6.is_zero() {
            return Err(SingularModel);
        }
        Ok(m)
    }

    pub fn from_ints(a: [i64; 5]) -> Result<Self, SingularModel> {
        Self::new(a.map(Rational::from))
    }

    pub fn ainvs(&self) -> [Rational; 5] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
            self.a6.clone(),
        ]
    }

    pub fn invariants(&self) -> CurveInvariants {
        curve_invariants(self)
    }

    /// Short model `y^2 = x^3 - 27 c4 d^2 x - 54 c6 d^3`, the quadratic twist by `d`.
    pub fn quadratic_twist(&self, d: &Rational) -> Result<Self, SingularModel> {
        let inv = self.invariants();
        let d2 = d * d;
        let d3 = &d2 * d;
        let a4 = &(&Rational::from(-27) * &inv.c4) * &d2;
        let a6 = &(&Rational::from(-54) * &inv.c6) * &d3;
        Self::new([Rational::zero(), Rational::zero(), Rational::zero(), a4, a6])
    }
}

impl TryFrom<[Rational; 5]> for WeierstrassModel {
    type Error = SingularModel;
    fn try_from(a: [Rational; 5]) -> Result<Self, Self::Error> {
        WeierstrassModel::new(a)
    }
}

impl From<WeierstrassModel> for [Rational; 5] {
    fn from(m: WeierstrassModel) -> Self {
        m.ainvs()
    }
}

type Raw = (Rational, Rational, Rational, Rational, Rational, Rational, Rational);

fn raw_invariants(m: &WeierstrassModel) -> Raw {
    let r = |n: i64| Rational::from(n);
    let (a1, a2, a3, a4, a6) = (&m.a1, &m.a2, &m.a3, &m.a4, &m.a6);
    let b2 = &(a1 * a1) + &(&r(4) * a2);
    let b4 = &(&r(2) * a4) + &(a1 * a3);
    let b6 = &(a3 * a3) + &(&r(4) * a6);
    let b8 = &(&(&(&(&(a1 * a1) * a6) + &(&(&r(4) * a2) * a6)) - &(&(a1 * a3) * a4)) + &(&(a2 * a3) * a3)) - &(a4 * a4);
    let c4 = &(&b2 * &b2) - &(&r(24) * &b4);
    let c6 = &(&(&(-&b2) * &b2) * &b2) + &(&(&(&r(36) * &b2) * &b4) - &(&r(216) * &b6));
    let delta = &(&(&(&c4 * &c4) * &c4) - &(&c6 * &c6)) / &r(1728);
    (b2, b4, b6, b8, c4, c6, delta)
}

/// Standard b-, c-invariants, discriminant and j.
pub fn curve_invariants(m: &WeierstrassModel) -> CurveInvariants {
    let (b2, b4, b6, b8, c4, c6, delta) = raw_invariants(m);
    let j = &(&(&c4 * &c4) * &c4) / &delta;
    CurveInvariants {
        b2,
        b4,
        b6,
        b8,
        c4,
        c6,
        delta,
        j,
    }
}
