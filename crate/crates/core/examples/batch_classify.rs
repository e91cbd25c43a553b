//! Classify the vendored fixture tables in parallel and compare against
//! their expected structures.
//!
//!     cargo run --example batch_classify

use rayon::prelude::*;
use torsion_atlas::catalog::builtin_catalog;
use torsion_atlas::cli::classify_record;
use torsion_atlas::fixtures::{cm_curves, table1};

fn main() {
    let cat = builtin_catalog();
    let rows: Vec<_> = table1().into_iter().chain(cm_curves()).collect();
    let results: Vec<_> = rows.par_iter().map(|r| classify_record(r, cat)).collect();
    let mut agree = 0;
    for (r, res) in rows.iter().zip(&results) {
        let label = r.label.as_deref().unwrap_or("?");
        match res {
            Ok(rep) => {
                let ok = Some(rep.chosen) == r.expected;
                agree += ok as usize;
                println!(
                    "{label:>8}  {:<14} {}",
                    rep.chosen.to_string(),
                    if ok { "" } else { "MISMATCH" }
                );
            }
            Err(e) => println!("{label:>8}  error: {e}"),
        }
    }
    println!("{agree}/{} agree", rows.len());
}
