//! Subgroups of GL2(Z/NZ) and the image audits built on them.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use serde::Serialize;

use super::element::GroupElement;
use super::gl2::GL2Elem;
use super::group::{close, close_gens, is_gen_d4_type, lower_central_series, subgroup, ElementSet, Group};
use super::GroupError;

pub type MatGroup = Group<GL2Elem>;

pub const SUPPORTED_MODULI: [u32; 8] = [2, 3, 4, 5, 8, 9, 16, 25];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gl2Subgroup {
    Full,
    SplitCartan,
    CartanNormalizer,
    Borel,
}

impl MatGroup {
    pub fn modulus(&self) -> u32 {
        self.generators()[0].modulus()
    }
}

fn units(n: u32) -> Vec<u32> {
    (1..n).filter(|&u| num_integer::gcd(u, n) == 1).collect()
}

pub fn gl2_subgroup(n: u32, which: Gl2Subgroup) -> Result<MatGroup, GroupError> {
    if !SUPPORTED_MODULI.contains(&n) {
        return Err(GroupError::UnsupportedModulus(n));
    }
    let m = |a, b, c, d| GL2Elem::new(n, a, b, c, d).unwrap();
    let mut gens: Vec<GL2Elem> = vec![];
    for u in units(n) {
        gens.push(m(u as i64, 0, 0, 1));
        gens.push(m(1, 0, 0, u as i64));
    }
    match which {
        Gl2Subgroup::SplitCartan => {}
        Gl2Subgroup::CartanNormalizer => gens.push(m(0, 1, 1, 0)),
        Gl2Subgroup::Borel => gens.push(m(1, 1, 0, 1)),
        Gl2Subgroup::Full => {
            gens.push(m(1, 1, 0, 1));
            gens.push(m(1, 0, 1, 1));
        }
    }
    gens.retain(|g| !g.is_identity());
    if gens.is_empty() {
        gens.push(GL2Elem::identity(n));
    }
    Group::new(gens)
}

/// Surjective determinant and an element with trace 0, determinant -1.
pub fn qualifies_as_image(g: &MatGroup, cap: usize) -> Result<bool, GroupError> {
    let set = close(g, cap)?;
    Ok(qualifies_set(&set, g.modulus()))
}

fn qualifies_set(set: &ElementSet<GL2Elem>, n: u32) -> bool {
    let dets: HashSet<u32> = set.iter().map(GL2Elem::det).collect();
    let all_units = units(n).into_iter().all(|u| dets.contains(&u));
    all_units && set.iter().any(|x| x.trace() == 0 && x.det() == n - 1)
}

/// One conjugacy class found by the audit.
#[derive(Clone, Debug, Serialize)]
pub struct AuditRow {
    #[serde(serialize_with = "ser_gens")]
    pub generators: Vec<GL2Elem>,
    pub order: usize,
    pub contained_in_target: bool,
}

fn ser_gens<S: serde::Serializer>(g: &[GL2Elem], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(g.iter().map(ToString::to_string))
}

/// A Sylow 2-subgroup: greedily add 2-power-order elements while the
/// generated group stays a 2-group. The result is a maximal 2-subgroup,
/// hence Sylow.
fn sylow2(ambient: &ElementSet<GL2Elem>, cap: usize) -> Result<(Vec<GL2Elem>, ElementSet<GL2Elem>), GroupError> {
    let id = ambient.elements()[0].identity_like();
    let mut gens: Vec<GL2Elem> = vec![];
    let mut current = close_gens(&[id], &id, cap)?;
    for x in ambient.sorted() {
        if current.contains(&x) || !x.order().is_power_of_two() {
            continue;
        }
        let mut trial = gens.clone();
        trial.push(x);
        let next = close_gens(&trial, &id, cap)?;
        if next.len().is_power_of_two() {
            gens = trial;
            current = next;
        }
    }
    Ok((gens, current))
}

/// Every subgroup of the finite group with elements `p`, as (generators, sorted elements).
fn all_subgroups(p: &ElementSet<GL2Elem>, cap: usize) -> Result<Vec<(Vec<GL2Elem>, Vec<GL2Elem>)>, GroupError> {
    let id = p.elements()[0].identity_like();
    let mut found: BTreeMap<Vec<GL2Elem>, Vec<GL2Elem>> = BTreeMap::new();
    found.insert(vec![id], vec![]);
    let mut frontier: Vec<(Vec<GL2Elem>, Vec<GL2Elem>)> = vec![(vec![id], vec![])];
    while let Some((elems, gens)) = frontier.pop() {
        let have: HashSet<&GL2Elem> = elems.iter().collect();
        for x in p.iter() {
            if have.contains(x) {
                continue;
            }
            let mut g2 = gens.clone();
            g2.push(*x);
            let (_, set) = subgroup(g2.clone(), &id, cap)?;
            let key = set.sorted();
            if !found.contains_key(&key) {
                found.insert(key.clone(), g2.clone());
                frontier.push((key, g2));
            }
        }
    }
    Ok(found.into_iter().map(|(e, g)| (g, e)).collect())
}

fn conjugate_sorted(elems: &[GL2Elem], by: &GL2Elem) -> Vec<GL2Elem> {
    let mut v: Vec<GL2Elem> = elems.iter().map(|e| e.conj(by)).collect();
    v.sort();
    v
}

/// Qualifying generalized-D4 subgroups of GL2(Z/NZ) up to conjugacy, with
/// whether each conjugates into the Cartan normalizer (N = 3) or the split
/// Cartan (N = 5).
pub fn audit_qualifying_subgroups(n: u32, cap: usize) -> Result<Vec<AuditRow>, GroupError> {
    let target_kind = match n {
        3 => Gl2Subgroup::CartanNormalizer,
        5 => Gl2Subgroup::SplitCartan,
        _ => return Err(GroupError::UnsupportedModulus(n)),
    };
    let full = close(&gl2_subgroup(n, Gl2Subgroup::Full)?, cap)?;
    let target = close(&gl2_subgroup(n, target_kind)?, cap)?;
    let (_, p) = sylow2(&full, cap)?;
    let two_part = 1usize << full.len().trailing_zeros();
    if p.len() != two_part {
        return Err(GroupError::Internal("greedy 2-subgroup is not Sylow"));
    }

    let mut seen: HashSet<Vec<GL2Elem>> = HashSet::new();
    let mut rows = vec![];
    for (gens, elems) in all_subgroups(&p, cap)? {
        let group = Group::new(if gens.is_empty() { vec![elems[0]] } else { gens })?;
        let set = close(&group, cap)?;
        if !qualifies_set(&set, n) || !is_gen_d4_type(&group, cap)? {
            continue;
        }
        let key = full.iter().map(|g| conjugate_sorted(&elems, g)).min().unwrap();
        if !seen.insert(key) {
            continue;
        }
        let contained = full.iter().any(|g| elems.iter().all(|e| target.contains(&e.conj(g))));
        rows.push(AuditRow {
            generators: group.generators().to_vec(),
            order: elems.len(),
            contained_in_target: contained,
        });
    }
    rows.sort_by_key(|r| r.order);
    Ok(rows)
}

/// A subgroup of (Z/NZ)^2 and its invariant factors `(d1, d2)`, `d1 | d2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSubgroup {
    pub modulus: u32,
    pub generators: Vec<[u32; 2]>,
    pub invariant_factors: (u32, u32),
}

/// Subgroups of (Z/p^2 Z)^2 isomorphic to Z/p + Z/p^2. Cached per modulus.
pub fn submodules_p_p2(p: u32) -> &'static [ModuleSubgroup] {
    static NINE: OnceLock<Vec<ModuleSubgroup>> = OnceLock::new();
    static TWENTY_FIVE: OnceLock<Vec<ModuleSubgroup>> = OnceLock::new();
    match p {
        3 => NINE.get_or_init(|| enumerate_submodules(3)),
        5 => TWENTY_FIVE.get_or_init(|| enumerate_submodules(5)),
        _ => panic!("submodules are only tabulated for p = 3, 5"),
    }
}

fn enumerate_submodules(p: u32) -> Vec<ModuleSubgroup> {
    let n = p * p;
    let size = (n * n) as usize;
    let words = size.div_ceil(64);
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut out = vec![];
    let vecs: Vec<[u32; 2]> = (0..n).flat_map(|x| (0..n).map(move |y| [x, y])).collect();
    for v in &vecs {
        for w in &vecs {
            let mut bits = vec![0u64; words];
            let mut count = 0u32;
            let mut exp_p2 = false;
            for a in 0..n {
                for b in 0..n {
                    let x = (a * v[0] + b * w[0]) % n;
                    let y = (a * v[1] + b * w[1]) % n;
                    let k = (x * n + y) as usize;
                    if bits[k / 64] >> (k % 64) & 1 == 0 {
                        bits[k / 64] |= 1 << (k % 64);
                        count += 1;
                        exp_p2 |= x % p != 0 || y % p != 0;
                    }
                }
            }
            // Order p^3 with an element of order p^2 forces Z/p + Z/p^2.
            if count == p * p * p && exp_p2 && seen.insert(bits) {
                out.push(ModuleSubgroup {
                    modulus: n,
                    generators: vec![*v, *w],
                    invariant_factors: (p, n),
                });
            }
        }
    }
    out
}

/// Whether some submodule M of type (p, p^2) has a normal subgroup N of H
/// fixing M pointwise with H/N of generalized D4 type. It suffices to test
/// N = core of the pointwise stabilizer, the largest such normal subgroup.
pub fn satisfies_prop2(h: &MatGroup, p: u32, cap: usize) -> Result<bool, GroupError> {
    let n = h.modulus();
    if !(p == 3 || p == 5) || n != p * p {
        return Err(GroupError::UnsupportedModulus(n));
    }
    let hset = close(h, cap)?;
    let series = lower_central_series(h, cap)?;
    // γ3 is the third term when it exists; a shorter series means class < 2.
    let gamma3 = series.get(2);
    let fourth_powers: Vec<GL2Elem> = hset.iter().map(|x| x.pow(4)).collect();

    for m in submodules_p_p2(p) {
        let stab: HashSet<GL2Elem> = hset
            .iter()
            .filter(|x| m.generators.iter().all(|v| x.act(*v) == *v))
            .copied()
            .collect();
        let core: HashSet<GL2Elem> = stab
            .iter()
            .filter(|x| hset.iter().all(|g| stab.contains(&x.conj(g))))
            .copied()
            .collect();
        let exp_ok = fourth_powers.iter().all(|x| core.contains(x));
        let class_ok = gamma3.is_none_or(|g3| g3.iter().all(|x| core.contains(x)));
        if exp_ok && class_ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The maximal groups named for the p = 5 and p = 3 arguments.
pub fn h25() -> MatGroup {
    let m = |a, b, c, d| GL2Elem::new(25, a, b, c, d).unwrap();
    Group::new(vec![m(7, 0, 0, 1), m(1, 0, 0, 2), m(1, 1, 0, 1)]).unwrap()
}

/// A subgroup of `h25()` with both image properties.
pub fn h25_witness() -> MatGroup {
    let m = |a, b, c, d| GL2Elem::new(25, a, b, c, d).unwrap();
    Group::new(vec![m(7, 0, 0, 1), m(1, 0, 0, 6), m(1, 0, 0, 24)]).unwrap()
}

pub fn h9() -> MatGroup {
    let m = |a, b, c, d| GL2Elem::new(9, a, b, c, d).unwrap();
    Group::new(vec![m(1, 3, 0, 1), m(1, 0, 0, 2), m(8, 0, 0, 8)]).unwrap()
}
