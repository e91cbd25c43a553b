//! The exponent/class test for generalized D4-type groups.
//!
//!     cargo run --example gen_d4_groups

use torsion_atlas::groups::*;

fn report(name: &str, g: &PermGroup) {
    let cap = DEFAULT_CAP;
    let order = close(g, cap).unwrap().len();
    let exp = exponent(g, cap).unwrap();
    let class = nilpotency_class(g, cap).unwrap();
    let ok = is_gen_d4_type(g, cap).unwrap();
    println!("{name:<24} order {order:>4}  exponent {exp}  {class:?}  D4-type {ok}");
}

fn main() {
    report("D4", &dihedral());
    for k in 1..=3 {
        report(&format!("free on {k} generators"), &free_gd4_generators(k));
    }
    report("Z/8", &cyclic(8));
    report("unitriangular 4x4 F2", &unitriangular_f2_4());
    report("S3", &parse_perm_group("(1,2,3);(1,2)").unwrap());
}
