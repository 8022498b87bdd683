//! Subdivided dodecahedra: girth 5(p-1) without p-path degeneracy, and
//! girth 5p with it.
//!
//! cargo run --example planar_witness

use pathdeg::generators::Fixture;
use pathdeg::reduction::{self, suppress, DegeneracyVerdict};

fn main() {
    let dodecahedron = Fixture::Dodecahedron.graph();
    for p in 2..=5 {
        let below = dodecahedron.subdivide(p - 2);
        let above = dodecahedron.subdivide(p - 1);
        let verdict = reduction::is_p_path_degenerate(&below, p).unwrap();
        let stuck = match &verdict {
            DegeneracyVerdict::NotDegenerate { witness, .. } => witness.graph.order(),
            DegeneracyVerdict::Degenerate(_) => 0,
        };
        println!(
            "p={p}: girth {} -> degenerate {} (irreducible core on {stuck} vertices); girth {} -> degenerate {}",
            below.girth(),
            verdict.is_degenerate(),
            above.girth(),
            reduction::is_p_path_degenerate(&above, p).unwrap().is_degenerate(),
        );
    }

    // an edge-minimal irreducible subgraph, and what it looks like with the
    // degree-2 vertices smoothed out
    let g = Fixture::Petersen.graph().subdivide(1);
    let w = reduction::minimal_irreducible_witness(&g, 3).unwrap();
    println!("\nminimal 3-irreducible subgraph of the subdivided Petersen graph: {} vertices, {} edges", w.graph.order(), w.graph.size());
    if let Some(s) = suppress(&w.graph) {
        println!("suppressed: simple = {}, longest chain = {}", s.is_simple(), s.longest_chain());
    }
}
