//! Discriminant square classes across a rational 2-isogeny.
//!
//!     cargo run --example two_isogeny

use torsion_atlas::classifier::{two_isogeny_square_class, WeierstrassModel};

fn main() {
    for a in [[0, 0, 0, -1, 0], [0, 5, 0, 4, 0], [1, 0, 1, 4, -6], [0, 0, 1, 0, -7]] {
        let e = WeierstrassModel::from_ints(a).unwrap();
        print!("{a:?}: ");
        match two_isogeny_square_class(&e) {
            Err(e) => println!("{e}"),
            Ok(steps) => {
                println!();
                for s in steps {
                    println!(
                        "  x = {:>3}  disc {}  isogenous disc {}  {:?}",
                        s.root, s.delta, s.delta_isogenous, s.class
                    );
                }
            }
        }
    }
}
