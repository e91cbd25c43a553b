//! Rational 2-torsion and the discriminant square class across a 2-isogeny.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::curve::WeierstrassModel;
use crate::numkernel::{rational_roots, same_square_class, IntPoly, Rational};

/// How `Δ(E)` and `Δ(E')` compare modulo squares, `E'` being 2-isogenous.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SquareClass {
    Same,
    Negative,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoIsogenyStep {
    /// x-coordinate of the 2-torsion point on the input model.
    pub root: Rational,
    pub delta: Rational,
    pub delta_isogenous: Rational,
    pub class: SquareClass,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("curve has no rational point of order 2")]
pub struct NoTwoTorsion;

/// Integer polynomial with the same roots as `sum c_i x^i`.
fn clear_denominators(cs: &[Rational]) -> IntPoly {
    let l = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPoly::new(cs.iter().map(|c| c.numer() * (&l / c.denom())).collect())
}

/// x-coordinates of the rational 2-torsion points, ascending.
pub fn two_torsion_roots(m: &WeierstrassModel) -> BTreeSet<Rational> {
    let inv = m.invariants();
    let f = clear_denominators(&[inv.b6, &Rational::from(2) * &inv.b4, inv.b2, Rational::from(4)]);
    rational_roots(&f).expect("division polynomial is nonzero")
}

pub fn has_rational_two_torsion(m: &WeierstrassModel) -> bool {
    !two_torsion_roots(m).is_empty()
}

/// `Δ` of `y^2 = x^3 + A x^2 + B x`.
fn disc_ab(a: &Rational, b: &Rational) -> Rational {
    let r = |n: i64| Rational::from(n);
    &(&(&r(16) * b) * b) * &(&(a * a) - &(&r(4) * b))
}

/// One step per rational 2-torsion point, ordered by the point's x-coordinate.
pub fn two_isogeny_square_class(m: &WeierstrassModel) -> Result<Vec<TwoIsogenyStep>, NoTwoTorsion> {
    let roots = two_torsion_roots(m);
    if roots.is_empty() {
        return Err(NoTwoTorsion);
    }
    let r = |n: i64| Rational::from(n);
    let inv = m.invariants();
    let plain = m.a1.is_zero() && m.a3.is_zero();
    let steps = roots
        .into_iter()
        .map(|x0| {
            // Move the point to the origin of y^2 = x^3 + A x^2 + B x. For
            // a1 = a3 = 0 this is the input model; otherwise use the
            // isomorphic model Y^2 = X^3 + b2 X^2 + 8 b4 X + 16 b6, X = 4x.
            let (c2, c1, u) = if plain {
                (m.a2.clone(), m.a4.clone(), x0.clone())
            } else {
                (inv.b2.clone(), &r(8) * &inv.b4, &r(4) * &x0)
            };
            let a = &(&r(3) * &u) + &c2;
            let b = &(&(&r(3) * &u) * &u) + &(&(&(&r(2) * &c2) * &u) + &c1);
            let a_iso = &r(-2) * &a;
            let b_iso = &(&a * &a) - &(&r(4) * &b);
            let delta = disc_ab(&a, &b);
            let delta_isogenous = disc_ab(&a_iso, &b_iso);
            let class = if same_square_class(&delta, &delta_isogenous).unwrap() {
                SquareClass::Same
            } else if same_square_class(&delta, &-&delta_isogenous).unwrap() {
                SquareClass::Negative
            } else {
                SquareClass::Neither
            };
            TwoIsogenyStep {
                root: x0,
                delta,
                delta_isogenous,
                class,
            }
        })
        .collect();
    Ok(steps)
}
