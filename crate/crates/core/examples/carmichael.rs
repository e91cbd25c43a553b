//! Which cyclotomic fields have Galois group of exponent dividing 4.
//!
//!     cargo run --example carmichael

use torsion_atlas::numkernel::carmichael_lambda;

fn main() {
    let ns: Vec<u64> = (1..=2000).filter(|&n| 4 % carmichael_lambda(n) == 0).collect();
    println!("lambda(n) | 4 for n in {ns:?}");
    println!("all divide 240: {}", ns.iter().all(|n| 240 % n == 0));
}
