//! Classify a curve from its a-invariants, and a bare j-invariant.
//!
//!     cargo run --example classify_curve

use torsion_atlas::catalog::builtin_catalog;
use torsion_atlas::classifier::{classify_j, classify_model, WeierstrassModel};

fn main() {
    let cat = builtin_catalog();

    // 15a1: y^2 + xy + y = x^3 + x^2 - 10x - 10
    let e = WeierstrassModel::from_ints([1, 1, 1, -10, -10]).unwrap();
    let r = classify_model(&e, cat).unwrap();
    println!("15a1: j = {}, torsion {}", r.j, r.chosen);
    for m in &r.matched {
        println!(
            "  matched {} via {}",
            m.torsion,
            serde_json::to_string(&m.witness).unwrap()
        );
    }

    // j = 0 needs the model: three twists, three answers
    for s in [1, 3, 16] {
        let e = WeierstrassModel::from_ints([0, 0, 0, 0, s]).unwrap();
        println!("y^2 = x^3 + {s}: {}", classify_model(&e, cat).unwrap().chosen);
    }

    let j = "1331/8".parse().unwrap();
    println!("j = 1331/8: {}", classify_j(&j, cat).unwrap().chosen);
}
