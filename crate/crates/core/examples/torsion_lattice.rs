//! The 24 structures, their order relation, and the catalog behind them.
//!
//!     cargo run --example torsion_lattice

use torsion_atlas::catalog::{builtin_catalog, torsion_leq};

fn main() {
    let cat = builtin_catalog();
    let keys: Vec<_> = cat.keys().into_iter().collect();
    for &t in &keys {
        let covers: Vec<String> = keys
            .iter()
            .filter(|&&s| s != t && torsion_leq(s, t))
            .filter(|&&s| {
                !keys
                    .iter()
                    .any(|&m| m != s && m != t && torsion_leq(s, m) && torsion_leq(m, t))
            })
            .map(ToString::to_string)
            .collect();
        let e = cat.entry(t).unwrap();
        println!(
            "{:<14} maps {} constants {:<2} covers {}",
            t.to_string(),
            e.maps.len(),
            e.constants.len(),
            covers.join(", ")
        );
    }
    println!("isogeny degrees: {:?}", cat.isogeny_whitelist());
}
