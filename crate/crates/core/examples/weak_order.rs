//! Linear orders with small weak reachability sets, from exact-ear
//! certificates.
//!
//! cargo run --example weak_order

use pathdeg::generators::{cycle, Fixture};
use pathdeg::wcol::{self, WcolBoundParams};
use pathdeg::Graph;

fn show(name: &str, g: &Graph, r: usize, q: usize) {
    let params = WcolBoundParams::new(r, q).unwrap();
    let pi = wcol::weak_order(g, params).unwrap();
    let sizes: Vec<usize> = (0..=r).map(|x| wcol::wcol_under_order(g, &pi, x)).collect();
    let targets: Vec<String> = (0..=r).map(|x| format!("{:.3}", wcol::wcol_target(x, params).unwrap())).collect();
    println!(
        "{name} (r={r}, q={q}): max |WReach_x| = {sizes:?}, f = [{}], integer bound {}, good: {}",
        targets.join(", "),
        wcol::wcol_integer_bound(params),
        wcol::check_good_order(g, &pi, params).is_none(),
    );
}

fn main() {
    show("C9", &cycle(9).unwrap(), 3, 4);
    show("dodecahedron/7", &Fixture::Dodecahedron.graph().subdivide(7), 2, 4);
    show("Petersen/5", &Fixture::Petersen.graph().subdivide(5), 2, 3);
    show("Heawood/11", &Fixture::Heawood.graph().subdivide(11), 3, 6);

    // brute force on a small graph for comparison
    let g = cycle(9).unwrap();
    let pi = wcol::weak_order(&g, WcolBoundParams::new(2, 4).unwrap()).unwrap();
    println!("\nC9, x=2: constructed order {}, exact wcol {}", wcol::wcol_under_order(&g, &pi, 2), wcol::wcol_exact(&g, 2).unwrap());
    print!("order: {}", pi.to_line());
}
