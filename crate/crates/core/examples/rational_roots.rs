//! Rational roots by Hensel lifting, with no integer factoring.
//!
//!     cargo run --example rational_roots -- "(3*t-2)^2*(t+7)*(t^4+1)"

use torsion_atlas::numkernel::expr::parse_poly;
use torsion_atlas::numkernel::{rational_roots, squarefree_part};

fn main() {
    let src = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(3*t-2)^2*(t+7)*(t^4+1)".into());
    let f = match parse_poly(&src) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    println!("f = {f}");
    println!("squarefree part = {}", squarefree_part(&f).unwrap());
    let roots: Vec<String> = rational_roots(&f).unwrap().iter().map(ToString::to_string).collect();
    println!("rational roots: {{{}}}", roots.join(", "));
}
