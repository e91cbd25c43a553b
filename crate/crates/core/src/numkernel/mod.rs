//! Exact rationals, integer polynomials, rational functions and rational root finding.

mod modp;
mod poly;
mod ratfunc;
mod rational;
mod roots;

pub mod expr;

pub use poly::IntPoly;
pub use ratfunc::{RatFunc, RatFuncError};
pub use rational::{carmichael_lambda, is_nth_power, same_square_class, ParseRationalError, Rational, ZeroArgument};
pub use roots::{rational_roots, squarefree_part, RootError, PRIME_BUDGET};

/// `f(t)` exactly.
pub fn poly_eval(f: &IntPoly, t: &Rational) -> Rational {
    f.eval(t)
}

pub fn ratfunc_eval(j: &RatFunc, t: &Rational) -> Result<Rational, RatFuncError> {
    j.eval(t)
}

pub fn ratfunc_fiber(j: &RatFunc, j0: &Rational) -> Result<std::collections::BTreeSet<Rational>, RatFuncError> {
    j.fiber(j0)
}
