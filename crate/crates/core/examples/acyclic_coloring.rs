//! Proper edge colorings with max(degree, r) colors in which every cycle C
//! sees min(|C|, r) colors.
//!
//! cargo run --example acyclic_coloring

use pathdeg::colorings::{acyclic_edge_coloring, verify_cycle_rainbow, verify_proper};
use pathdeg::generators::{cycle, Fixture};

fn main() {
    for r in 3..=5 {
        let g = Fixture::Dodecahedron.graph().subdivide(r);
        let c = acyclic_edge_coloring(&g, r).unwrap();
        println!(
            "dodecahedron subdivided {r}: {} colors, proper {}, cycles see >= {r} colors: {}",
            c.color_count(),
            verify_proper(&g, &c).unwrap(),
            verify_cycle_rainbow(&g, &c, r, 10_000_000).unwrap(),
        );
    }
    // cycles need n >= r + 2
    for n in [6, 7, 8, 11] {
        let g = cycle(n).unwrap();
        let c = acyclic_edge_coloring(&g, 4).unwrap();
        let colors: Vec<usize> = (0..n).map(|i| c.get(i, (i + 1) % n).unwrap()).collect();
        println!("C{n}, r=4: {colors:?}");
    }
}
