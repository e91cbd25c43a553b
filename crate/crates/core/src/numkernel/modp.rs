//! Dense polynomial arithmetic over a small prime field.
//!
//! Coefficients are `u64` residues, low degree first, trailing zeros trimmed.

pub(crate) fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

pub(crate) fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
}

pub(crate) fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, i as u64 % p, p))
            .collect(),
    )
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let li = inv(b[db], p);
    while r.len() > db {
        let top = mulmod(*r.last().unwrap(), li, p);
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - mulmod(top, bc, p)) % p;
        }
        r = trim(r);
    }
    r
}

/// Degree of `gcd(a, b)`; `None` when both are zero.
pub(crate) fn gcd_degree(a: &[u64], b: &[u64], p: u64) -> Option<usize> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len().checked_sub(1)
}

/// Squarefree over F_p, assuming the degree did not drop on reduction.
pub(crate) fn is_squarefree(f: &[u64], p: u64) -> bool {
    gcd_degree(f, &derivative(f, p), p) == Some(0)
}

/// All roots in `[0, p)` by exhaustive scan.
pub(crate) fn roots(f: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| eval(f, x, p) == 0).collect()
}

/// Primes greater than 3, in increasing order.
pub(crate) fn primes_above_3() -> impl Iterator<Item = u64> {
    (5u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}
