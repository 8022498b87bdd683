//! Decide p-path degeneracy, print the certificate, and replay it with the
//! independent checker.
//!
//! cargo run --example check_degeneracy

use pathdeg::generators::{cycle, theta, Fixture};
use pathdeg::reduction::{self, check_certificate, parse_certificate, DegeneracyVerdict};

fn main() {
    // C_n is p-path degenerate exactly when n >= p + 1
    for n in 4..=7 {
        let g = cycle(n).unwrap();
        let row: Vec<String> = (2..=7)
            .map(|p| if reduction::is_p_path_degenerate(&g, p).unwrap().is_degenerate() { "y" } else { "." }.to_string())
            .collect();
        println!("C{n}  p=2..7: {}", row.join(" "));
    }

    let g = theta(&[3, 4, 5]).unwrap();
    match reduction::is_p_path_degenerate(&g, 3).unwrap() {
        DegeneracyVerdict::Degenerate(seq) => {
            let text = seq.to_lines();
            println!("\ntheta(3,4,5) at p=3:\n{text}");
            let steps = parse_certificate(&text).unwrap();
            let replay = check_certificate(&g, 3, false, &steps).unwrap();
            println!("replayed {} steps, {} vertices left", replay.applied.len(), replay.remaining.len());
        }
        DegeneracyVerdict::NotDegenerate { .. } => unreachable!(),
    }

    for f in [Fixture::Petersen, Fixture::Heawood, Fixture::McGee] {
        for k in 0..4 {
            let g = f.graph().subdivide(k);
            let pd = reduction::path_degeneracy(&g, 40).unwrap();
            println!("{:>14} subdivided {k}: girth {:>2}, largest p = {pd}", f.name(), g.girth());
        }
    }
}
