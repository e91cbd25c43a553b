//! Walk a j-map forward and back: evaluate at t, then recover every t' with
//! the same j.
//!
//!     cargo run --example j_map_fibers

use torsion_atlas::catalog::{builtin_catalog, TorsionStructure};
use torsion_atlas::numkernel::Rational;

fn main() {
    let cat = builtin_catalog();
    for (a, b) in [(1, 5), (3, 3), (1, 13)] {
        let entry = cat.entry(TorsionStructure::new(a, b).unwrap()).unwrap();
        let map = &entry.maps[0].map;
        let t = Rational::new(3, 2);
        let j = map.eval(&t).unwrap();
        let fiber: Vec<String> = map.fiber(&j).unwrap().iter().map(ToString::to_string).collect();
        println!(
            "{}: deg {}/{}",
            entry.torsion,
            map.num().degree().unwrap(),
            map.den().degree().unwrap_or(0)
        );
        println!("  j(3/2) = {j}");
        println!("  fiber  = {{{}}}", fiber.join(", "));
    }
}
