use std::collections::BTreeMap;

use torsion_atlas::groups::*;

const CAP: usize = DEFAULT_CAP;

fn pg(s: &str) -> PermGroup {
    parse_perm_group(s).unwrap()
}

fn order_multiset<E: GroupElement>(g: &Group<E>) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for x in close(g, CAP).unwrap().iter() {
        *m.entry(x.order()).or_insert(0) += 1;
    }
    m
}

fn is_abelian<E: GroupElement>(g: &Group<E>) -> bool {
    let gens = g.generators();
    gens.iter().all(|a| gens.iter().all(|b| a.mul(b) == b.mul(a)))
}

#[test]
fn closure_sizes() {
    assert_eq!(close(&dihedral(), CAP).unwrap().len(), 8);
    assert_eq!(close(&pg("(2,4)(5,6,7,8);(1,2,3,4)"), CAP).unwrap().len(), 16);
    assert_eq!(close(&free_gd4_generators(2), CAP).unwrap().len(), 32);
}

#[test]
fn cap_is_enforced() {
    let s8 = pg("(1,2,3,4,5,6,7,8);(1,2)");
    assert_eq!(close(&s8, 100).unwrap_err(), GroupError::CapExceeded { cap: 100 });
    let partial = close_bounded(s8.generators(), &s8.identity(), 100);
    assert!(!partial.complete);
    assert_eq!(partial.len(), 100);
    assert_eq!(close(&s8, 40320).unwrap().len(), 40320);
}

#[test]
fn exponents() {
    assert_eq!(exponent(&dihedral(), CAP).unwrap(), 4);
    assert_eq!(exponent(&cyclic(8), CAP).unwrap(), 8);
    assert_eq!(exponent(&pg("(1,2);(3,4);(5,6)"), CAP).unwrap(), 2);
}

#[test]
fn nilpotency() {
    assert_eq!(nilpotency_class(&pg("(1,2);(3,4)"), CAP).unwrap(), Nilpotency::Class(1));
    assert_eq!(nilpotency_class(&pg("()"), CAP).unwrap(), Nilpotency::Class(0));
    assert_eq!(nilpotency_class(&dihedral(), CAP).unwrap(), Nilpotency::Class(2));
    assert_eq!(
        nilpotency_class(&pg("(1,2,3);(1,2)"), CAP).unwrap(),
        Nilpotency::NotNilpotent
    );
    assert_eq!(
        nilpotency_class(&unitriangular_f2_4(), CAP).unwrap(),
        Nilpotency::Class(3)
    );
}

#[test]
fn gen_d4_criterion() {
    assert!(is_gen_d4_type(&dihedral(), CAP).unwrap());
    assert!(!is_gen_d4_type(&cyclic(8), CAP).unwrap());
    let ut = unitriangular_f2_4();
    assert_eq!(exponent(&ut, CAP).unwrap(), 4);
    assert_eq!(close(&ut, CAP).unwrap().len(), 64);
    assert!(!is_gen_d4_type(&ut, CAP).unwrap());
}

/// Q8 fingerprint: order 8, nonabelian, one involution.
#[test]
fn quaternion_quotient() {
    let g = pg("(2,4)(5,6,7,8);(1,2,3,4)");
    let h = Group::new(vec!["(1,3)(2,4)(5,7)(6,8)".parse::<Perm>().unwrap()]).unwrap();
    let q = quotient_group(&g, &h, CAP).unwrap();
    assert_eq!(close(&q, CAP).unwrap().len(), 8);
    assert!(!is_abelian(&q));
    assert_eq!(order_multiset(&q).get(&2), Some(&1));
    assert!(is_gen_d4_type(&q, CAP).unwrap());
}

#[test]
fn quotients() {
    let d4 = dihedral();
    let whole = quotient_group(&d4, &d4, CAP).unwrap();
    assert_eq!(close(&whole, CAP).unwrap().len(), 1);
    let centre = Group::new(vec![tau().mul(&tau())]).unwrap();
    let q = quotient_group(&d4, &centre, CAP).unwrap();
    assert_eq!(close(&q, CAP).unwrap().len(), 4);
    assert!(is_abelian(&q));
    assert_eq!(exponent(&q, CAP).unwrap(), 2);
    let refl = Group::new(vec![sigma()]).unwrap();
    assert_eq!(quotient_group(&d4, &refl, CAP).unwrap_err(), GroupError::NotNormal);
}

/// SmallGroup(32,2) fingerprint: nonabelian, exponent 4, class 2, orders {1:1, 2:7, 4:24}.
#[test]
fn free_groups() {
    for k in 1..=3u32 {
        let g = free_gd4_generators(k as usize);
        assert_eq!(close(&g, CAP).unwrap().len() as u64, free_gd4_order(k), "k = {k}");
        assert!(is_gen_d4_type(&g, CAP).unwrap());
    }
    let g2 = free_gd4_generators(2);
    assert!(!is_abelian(&g2));
    assert_eq!(nilpotency_class(&g2, CAP).unwrap(), Nilpotency::Class(2));
    let expect: BTreeMap<u64, usize> = [(1, 1), (2, 7), (4, 24)].into_iter().collect();
    assert_eq!(order_multiset(&g2), expect);
}

#[test]
fn gl2_orders() {
    let ord = |n, w| close(&gl2_subgroup(n, w).unwrap(), CAP).unwrap().len();
    assert_eq!(ord(5, Gl2Subgroup::SplitCartan), 16);
    assert_eq!(ord(3, Gl2Subgroup::CartanNormalizer), 8);
    assert_eq!(ord(3, Gl2Subgroup::Full), 48);
    assert_eq!(ord(5, Gl2Subgroup::Full), 480);
    assert_eq!(ord(5, Gl2Subgroup::Borel), 80);
    assert_eq!(ord(16, Gl2Subgroup::Full), 24576);
    assert_eq!(
        gl2_subgroup(7, Gl2Subgroup::Full).unwrap_err(),
        GroupError::UnsupportedModulus(7)
    );
}

#[test]
fn image_qualification() {
    for n in SUPPORTED_MODULI {
        let g = gl2_subgroup(n, Gl2Subgroup::Full).unwrap();
        assert!(qualifies_as_image(&g, CAP).unwrap(), "N = {n}");
    }
    assert!(qualifies_as_image(&gl2_subgroup(5, Gl2Subgroup::SplitCartan).unwrap(), CAP).unwrap());
    let m = |s: &str| s.parse::<GL2Elem>().unwrap();
    let sl2 = Group::new(vec![m("[[1,1],[0,1]] mod 5"), m("[[1,0],[1,1]] mod 5")]).unwrap();
    assert!(!qualifies_as_image(&sl2, CAP).unwrap());
    // diag(2,1)^2 = diag(-1,1) has trace 0 and determinant -1.
    let cyc = Group::new(vec![m("[[2,0],[0,1]] mod 5")]).unwrap();
    assert!(qualifies_as_image(&cyc, CAP).unwrap());
    let sq = Group::new(vec![m("[[4,0],[0,1]] mod 5")]).unwrap();
    assert!(!qualifies_as_image(&sq, CAP).unwrap());
}

#[test]
fn audits_mod_3_and_5() {
    for n in [3, 5] {
        let rows = audit_qualifying_subgroups(n, CAP).unwrap();
        assert!(!rows.is_empty());
        assert!(rows.iter().all(|r| r.contained_in_target), "N = {n}: {rows:?}");
    }
    let rows = audit_qualifying_subgroups(5, CAP).unwrap();
    assert!(rows.iter().any(|r| r.order == 16), "split Cartan should appear");
    assert!(audit_qualifying_subgroups(7, CAP).is_err());
}

#[test]
fn submodule_counts() {
    // p + 1 index-p subgroups of (Z/p^2)^2 contain p(Z/p^2)^2, all of type (p, p^2).
    assert_eq!(submodules_p_p2(3).len(), 4);
    assert_eq!(submodules_p_p2(5).len(), 6);
}

#[test]
fn maximal_groups_mod_9_and_25() {
    assert!(qualifies_as_image(&h25(), CAP).unwrap());
    // H25 itself fails: the fourth powers of diag(1,2) and [[1,1],[0,1]]
    // fix only a cyclic group of order 25. A subgroup of it passes.
    assert!(!satisfies_prop2(&h25(), 5, CAP).unwrap());
    let w = h25_witness();
    assert!(qualifies_as_image(&w, CAP).unwrap());
    assert!(satisfies_prop2(&w, 5, CAP).unwrap());
    assert!(qualifies_as_image(&h9(), CAP).unwrap());
    assert!(satisfies_prop2(&h9(), 3, CAP).unwrap());
    let full9 = gl2_subgroup(9, Gl2Subgroup::Full).unwrap();
    assert!(!satisfies_prop2(&full9, 3, CAP).unwrap());
}
