//! Exact maximum subgraph density, mad, and shallow-minor density by brute
//! force.
//!
//! cargo run --release --example density

use pathdeg::density::{self, NABLA_DEFAULT_CAP};
use pathdeg::generators::{complete, cycle, Fixture};

fn main() {
    for (name, g) in [
        ("K4", complete(4).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("Petersen", Fixture::Petersen.graph()),
        ("McGee/3", Fixture::McGee.graph().subdivide(3)),
    ] {
        let (d, witness) = density::densest_subgraph(&g).unwrap();
        println!("{name:>9}: max density {d} on {} vertices, mad {}", witness.len(), density::mad(&g));
    }

    println!();
    for (name, g, top) in [("K4", complete(4).unwrap(), 2), ("C6", cycle(6).unwrap(), 2), ("Petersen", Fixture::Petersen.graph(), 2)] {
        let values: Vec<String> = (0..=top)
            .map(|twice_r| density::nabla_r_bruteforce(&g, twice_r, NABLA_DEFAULT_CAP).unwrap().to_string())
            .collect();
        println!("{name:>9}: nabla at r = 0, 1/2, ...: {}", values.join(", "));
    }
}
