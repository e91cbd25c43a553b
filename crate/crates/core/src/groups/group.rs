use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;

use super::element::GroupElement;
use super::perm::Perm;
use super::GroupError;

/// A group given by a nonempty list of compatible generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group<E> {
    generators: Vec<E>,
}

impl<E: GroupElement> Group<E> {
    pub fn new(generators: Vec<E>) -> Result<Self, GroupError> {
        let first = generators.first().ok_or(GroupError::NoGenerators)?;
        if generators.iter().any(|g| !g.compatible(first)) {
            return Err(GroupError::MixedShapes);
        }
        Ok(Group { generators })
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn identity(&self) -> E {
        self.generators[0].identity_like()
    }
}

/// A deduplicated set of elements produced by a closure.
#[derive(Clone, Debug)]
pub struct ElementSet<E> {
    elements: Vec<E>,
    index: HashSet<E>,
    /// True when the closure finished within its cap.
    pub complete: bool,
}

impl<E: GroupElement> ElementSet<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &E> {
        self.elements.iter()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn is_subset(&self, other: &ElementSet<E>) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// Sorted copy of the elements; a canonical key for the subgroup.
    pub fn sorted(&self) -> Vec<E> {
        let mut v = self.elements.clone();
        v.sort();
        v
    }
}

/// Breadth-first closure stopping once `cap` elements are known.
pub fn close_bounded<E: GroupElement>(gens: &[E], identity: &E, cap: usize) -> ElementSet<E> {
    let mut index = HashSet::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity.clone());
    let mut queue = VecDeque::from([identity.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if index.contains(&y) {
                continue;
            }
            if elements.len() >= cap {
                return ElementSet {
                    elements,
                    index,
                    complete: false,
                };
            }
            index.insert(y.clone());
            elements.push(y.clone());
            queue.push_back(y);
        }
    }
    ElementSet {
        elements,
        index,
        complete: true,
    }
}

/// All elements of the group, or `CapExceeded` if there are more than `cap`.
pub fn close<E: GroupElement>(g: &Group<E>, cap: usize) -> Result<ElementSet<E>, GroupError> {
    close_gens(g.generators(), &g.identity(), cap)
}

pub(crate) fn close_gens<E: GroupElement>(gens: &[E], identity: &E, cap: usize) -> Result<ElementSet<E>, GroupError> {
    let set = close_bounded(gens, identity, cap);
    if set.complete {
        Ok(set)
    } else {
        Err(GroupError::CapExceeded { cap })
    }
}

/// Lcm of the element orders.
pub fn exponent<E: GroupElement>(g: &Group<E>, cap: usize) -> Result<u64, GroupError> {
    let set = close(g, cap)?;
    Ok(set.iter().fold(1u64, |acc, x| acc.lcm(&x.order())))
}

/// Result of walking the lower central series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Nilpotency {
    Class(u32),
    NotNilpotent,
}

impl Nilpotency {
    pub fn at_most(self, c: u32) -> bool {
        matches!(self, Nilpotency::Class(k) if k <= c)
    }
}

/// Smallest normal subgroup of `<ambient>` containing `seeds`, with a generating list.
pub(crate) fn normal_closure<E: GroupElement>(
    ambient: &[E],
    seeds: &[E],
    identity: &E,
    cap: usize,
) -> Result<(Vec<E>, ElementSet<E>), GroupError> {
    let mut gens: Vec<E> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    gens.sort();
    gens.dedup();
    let mut set = close_gens(&gens, identity, cap)?;
    'outer: loop {
        for g in ambient {
            for h in &gens {
                let c = h.conj(g);
                if !set.contains(&c) {
                    gens.push(c);
                    set = close_gens(&gens, identity, cap)?;
                    continue 'outer;
                }
            }
        }
        return Ok((gens, set));
    }
}

/// The lower central series as element sets, `G = γ1 ⊇ γ2 ⊇ ...`, stopping
/// when it reaches the trivial group or stabilizes.
pub(crate) fn lower_central_series<E: GroupElement>(
    g: &Group<E>,
    cap: usize,
) -> Result<Vec<ElementSet<E>>, GroupError> {
    let id = g.identity();
    let mut series = vec![close(g, cap)?];
    let mut gamma_gens = g.generators().to_vec();
    loop {
        let last = series.last().unwrap();
        if last.len() == 1 {
            return Ok(series);
        }
        let comms: Vec<E> = g
            .generators()
            .iter()
            .flat_map(|x| gamma_gens.iter().map(move |y| x.commutator(y)))
            .collect();
        let (next_gens, next) = normal_closure(g.generators(), &comms, &id, cap)?;
        let stalled = next.len() == last.len();
        series.push(next);
        if stalled {
            return Ok(series);
        }
        gamma_gens = next_gens;
    }
}

pub fn nilpotency_class<E: GroupElement>(g: &Group<E>, cap: usize) -> Result<Nilpotency, GroupError> {
    let series = lower_central_series(g, cap)?;
    let last = series.last().unwrap();
    if last.len() == 1 {
        Ok(Nilpotency::Class(series.len() as u32 - 1))
    } else {
        Ok(Nilpotency::NotNilpotent)
    }
}

/// Exponent dividing 4 and nilpotency class at most 2.
pub fn is_gen_d4_type<E: GroupElement>(g: &Group<E>, cap: usize) -> Result<bool, GroupError> {
    Ok(4 % exponent(g, cap)? == 0 && nilpotency_class(g, cap)?.at_most(2))
}

/// Action of `G` on the right cosets of the normal subgroup `K`.
pub fn quotient_group<E: GroupElement>(g: &Group<E>, k: &Group<E>, cap: usize) -> Result<Group<Perm>, GroupError> {
    if !g.identity().compatible(&k.identity()) {
        return Err(GroupError::MixedShapes);
    }
    let kset = close(k, cap)?;
    for x in g.generators() {
        for y in k.generators() {
            if !kset.contains(&y.conj(x)) {
                return Err(GroupError::NotNormal);
            }
        }
    }
    let gset = close(g, cap)?;
    if !kset.is_subset(&gset) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of: HashMap<E, u32> = HashMap::with_capacity(gset.len());
    let mut reps: Vec<E> = vec![];
    for x in gset.iter() {
        if coset_of.contains_key(x) {
            continue;
        }
        let id = reps.len() as u32;
        for kk in kset.iter() {
            coset_of.insert(kk.mul(x), id);
        }
        reps.push(x.clone());
    }
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let images = reps.iter().map(|r| coset_of[&r.mul(s)]).collect();
            Perm::from_images(images).expect("coset action is a permutation")
        })
        .collect();
    Group::new(gens)
}

/// Subgroup generated by `gens`, returned with its elements.
pub(crate) fn subgroup<E: GroupElement>(
    gens: Vec<E>,
    identity: &E,
    cap: usize,
) -> Result<(Group<E>, ElementSet<E>), GroupError> {
    let gens = if gens.is_empty() { vec![identity.clone()] } else { gens };
    let set = close_gens(&gens, identity, cap)?;
    Ok((Group { generators: gens }, set))
}
