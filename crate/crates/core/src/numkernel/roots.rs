use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;
use super::{IntPoly, Rational};

/// Admissible primes tried before giving up.
pub const PRIME_BUDGET: usize = 200;
/// Non-squarefree reductions tolerated before paying for an exact gcd.
const CHEAP_TRIES: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("no squarefree reduction among the first {0} admissible primes")]
    NoGoodPrime(usize),
}

/// Primitive part of `f / gcd(f, f')`: same roots, all simple.
pub fn squarefree_part(f: &IntPoly) -> Result<IntPoly, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let d = f.derivative();
    if d.is_zero() {
        return Ok(f.primitive_part());
    }
    let g = f.gcd(&d);
    Ok(f.div_exact(&g).expect("gcd divides f").primitive_part())
}

/// Every rational root of `f`, found by p-adic lifting and rational reconstruction.
///
/// Candidates that fail reconstruction or exact evaluation are dropped, so the
/// result is sound; it is complete because every rational root reduces to a
/// simple root modulo the chosen prime and lifts uniquely.
pub fn rational_roots(f: &IntPoly) -> Result<BTreeSet<Rational>, RootError> {
    if f.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let mut out = BTreeSet::new();

    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        out.insert(Rational::zero());
    }
    let mut g = IntPoly::new(f.coeffs()[zeros..].to_vec()).primitive_part();

    match g.degree() {
        Some(0) => return Ok(out),
        Some(1) => {
            let c = g.coeffs();
            out.insert(Rational::new(-c[0].clone(), c[1].clone()));
            return Ok(out);
        }
        _ => {}
    }

    let mut reduced = false;
    let mut bad = 0usize;
    let mut tried = 0usize;
    let mut primes = modp::primes_above_3();
    let (p, gp) = loop {
        let p = primes.next().unwrap();
        let lc = g.lc().unwrap();
        if (lc % p).is_zero() {
            continue;
        }
        tried += 1;
        if tried > PRIME_BUDGET {
            return Err(RootError::NoGoodPrime(PRIME_BUDGET));
        }
        let gp = g.reduce_mod(p);
        if modp::roots(&gp, p).is_empty() {
            // Any rational root would survive reduction since p does not divide lc.
            return Ok(out);
        }
        if modp::is_squarefree(&gp, p) {
            break (p, gp);
        }
        bad += 1;
        if !reduced && bad >= CHEAP_TRIES {
            g = squarefree_part(&g)?;
            reduced = true;
            if g.degree() == Some(1) {
                let c = g.coeffs();
                out.insert(Rational::new(-c[0].clone(), c[1].clone()));
                return Ok(out);
            }
        }
    };

    let lc = g.lc().unwrap().abs();
    let c0 = g.coeffs()[0].abs();
    let coeff_sum: BigInt = g.coeffs().iter().map(|c| c.abs()).sum();
    // A root a/b in lowest terms has b | lc and a | c0; the Cauchy bound
    // gives |a| <= max(lc, sum |c_i|) as well.
    let num_bound = c0.min(coeff_sum.max(lc.clone()));
    let den_bound = lc;
    let target: BigInt = BigInt::from(2) * &num_bound * &den_bound;

    for r in modp::roots(&gp, p) {
        let (lifted, modulus) = hensel_lift(&g, r, p, &target);
        let Some((a, b)) = reconstruct(&lifted, &modulus, &num_bound, &den_bound) else {
            continue;
        };
        if g.eval_homogeneous(&a, &b).is_zero() {
            out.insert(Rational::new(a, b));
        }
    }
    Ok(out)
}

/// Newton lifting of a simple root `r` mod `p` until the modulus exceeds `target`.
fn hensel_lift(g: &IntPoly, r: u64, p: u64, target: &BigInt) -> (BigInt, BigInt) {
    let dg = g.derivative();
    let mut m = BigInt::from(p);
    let mut x = BigInt::from(r);
    while &m <= target {
        m = &m * &m;
        let fx = eval_mod(g, &x, &m);
        let dfx = eval_mod(&dg, &x, &m);
        let inv = mod_inverse(&dfx, &m).expect("simple root has invertible derivative");
        x = (x - fx * inv).mod_floor(&m);
    }
    (x, m)
}

fn eval_mod(f: &IntPoly, x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.coeffs().iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Half-extended Euclid: the unique `a/b` with `|a| <= n`, `0 < b <= d`, `a = r b mod m`.
pub(crate) fn reconstruct(r: &BigInt, m: &BigInt, n: &BigInt, d: &BigInt) -> Option<(BigInt, BigInt)> {
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > n {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let s2 = &s0 - &q * &s1;
        r0 = std::mem::replace(&mut r1, r2);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if s1.is_zero() || &s1.abs() > d {
        return None;
    }
    let (a, b) = if s1.is_negative() { (-r1, -s1) } else { (r1, s1) };
    a.gcd(&b).is_one().then_some((a, b))
}
