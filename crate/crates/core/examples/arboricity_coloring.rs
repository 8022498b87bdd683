//! r+1 edge colors such that every cycle C sees min(|C|, r+1) of them.
//!
//! cargo run --example arboricity_coloring

use pathdeg::colorings::{arboricity_coloring, verify_cycle_rainbow};
use pathdeg::generators::Fixture;

fn main() {
    for r in 1..=3 {
        let g = Fixture::Dodecahedron.graph().subdivide(r);
        let c = arboricity_coloring(&g, r).unwrap();
        let ok = verify_cycle_rainbow(&g, &c, r + 1, 10_000_000).unwrap();
        println!("dodecahedron subdivided {r}: {} edges, {} colors, every cycle rainbow up to {}: {ok}", g.size(), c.color_count(), r + 1);
    }
    let g = Fixture::Heawood.graph().subdivide(2);
    let c = arboricity_coloring(&g, 2).unwrap();
    println!("\nfirst lines of the Heawood coloring (u v color):");
    for line in c.to_lines().lines().take(6) {
        println!("  {line}");
    }
}
