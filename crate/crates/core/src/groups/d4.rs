//! Dihedral building blocks and the free class-2, exponent-4 groups inside D4^n.

use super::element::GroupElement;
use super::group::Group;
use super::perm::Perm;

/// Rotation `(1 2 3 4)`.
pub fn tau() -> Perm {
    Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap()
}

/// Reflection `(2 4)`.
pub fn sigma() -> Perm {
    Perm::from_cycles(4, &[&[2, 4]]).unwrap()
}

pub fn dihedral() -> Group<Perm> {
    Group::new(vec![tau(), sigma()]).unwrap()
}

#[derive(Clone, Copy)]
enum Letter {
    T,
    S,
}

/// Product of letters placed in 1-based copies of D4 inside D4^n.
fn word(n: usize, letters: &[(Letter, usize)]) -> Perm {
    let degree = 4 * n;
    letters.iter().fold(Perm::identity(degree), |acc, &(l, copy)| {
        let base = match l {
            Letter::T => tau(),
            Letter::S => sigma(),
        };
        acc.mul(&base.shifted(4 * (copy - 1), degree))
    })
}

/// Generators of the free group of class 2 and exponent 4 on `k` generators,
/// realized inside D4^1, D4^3 or D4^9.
pub fn free_gd4_generators(k: usize) -> Group<Perm> {
    use Letter::{S, T};
    let gens = match k {
        1 => vec![word(1, &[(T, 1)])],
        2 => vec![word(3, &[(T, 1), (T, 2)]), word(3, &[(S, 1), (T, 3)])],
        3 => vec![
            word(9, &[(S, 4), (T, 6), (T, 7), (T, 8)]),
            word(9, &[(T, 1), (T, 2), (S, 7), (T, 9)]),
            word(9, &[(S, 1), (T, 3), (T, 4), (T, 5)]),
        ],
        _ => panic!("free_gd4_generators supports k = 1, 2, 3"),
    };
    Group::new(gens).unwrap()
}

/// Expected order `4^k 2^(k(k-1)/2)`.
pub fn free_gd4_order(k: u32) -> u64 {
    4u64.pow(k) * 2u64.pow(k * (k - 1) / 2)
}

/// Upper unitriangular 4×4 matrices over F_2 acting on the 16 vectors of F_2^4.
///
/// Exponent 4 and nilpotency class 3, so not of generalized D4 type.
pub fn unitriangular_f2_4() -> Group<Perm> {
    // I + E_{i,i+1}: coordinate i picks up coordinate i+1.
    let elem = |i: usize| {
        let images = (0u32..16)
            .map(|v| {
                let bit = (v >> (i + 1)) & 1;
                v ^ (bit << i)
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    Group::new(vec![elem(0), elem(1), elem(2)]).unwrap()
}

/// Cyclic group of order `n` on `n` points.
pub fn cyclic(n: u32) -> Group<Perm> {
    let cyc: Vec<u32> = (1..=n).collect();
    Group::new(vec![Perm::from_cycles(n as usize, &[&cyc]).unwrap()]).unwrap()
}
