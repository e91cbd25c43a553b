//! Subgroups of GL2(Z/N) that can be mod-N images, checked at N = 3, 5, 9, 25.
//!
//!     cargo run --example gl2_audit

use torsion_atlas::groups::DEFAULT_CAP;
use torsion_atlas::selftest::gl2_audit;

fn main() {
    for n in [3, 5, 9, 25] {
        let a = gl2_audit(n, DEFAULT_CAP).unwrap();
        println!("mod {n}: {}", if a.passed { "holds" } else { "fails" });
        for r in &a.rows {
            let gens: Vec<String> = r.generators.iter().map(ToString::to_string).collect();
            println!(
                "  order {:>3} inside target: {}  <{}>",
                r.order,
                r.contained_in_target,
                gens.join(", ")
            );
        }
        if let (Some(q), Some(p)) = (a.qualifies, a.prop2) {
            println!("  image-type {q}, stabilizer property {p}");
        }
        for d in &a.diagnostics {
            println!("  note: {d}");
        }
    }
}
