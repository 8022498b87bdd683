//! Edge lists, graph6, and the line formats of certificates, colorings and
//! orders.
//!
//! cargo run --example formats

use pathdeg::colorings::{arboricity_coloring, EdgeColoring};
use pathdeg::formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use pathdeg::generators::Fixture;
use pathdeg::reduction::{self, parse_certificate};
use pathdeg::wcol::{weak_order, LinearOrder, WcolBoundParams};

fn main() {
    for f in Fixture::ALL {
        let g = f.graph();
        let s = to_graph6(&g);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        println!("{:>14}: {s}", f.name());
    }

    let g = parse_edge_list("# a triangle with a tail\n0 1\n1 2\n2 0\n2 3\n").unwrap();
    print!("\nedge list:\n{}", to_edge_list(&g));

    let g = Fixture::K4.graph().subdivide(2);
    let seq = reduction::is_p_path_degenerate(&g, 3).unwrap().sequence().clone();
    let text = seq.to_lines();
    print!("\ncertificate:\n{text}");
    assert_eq!(parse_certificate(&text).unwrap(), seq.steps);

    let c = arboricity_coloring(&g, 2).unwrap();
    assert_eq!(EdgeColoring::parse(&c.to_lines()).unwrap(), c);
    let pi = weak_order(&Fixture::K4.graph().subdivide(5), WcolBoundParams::new(2, 3).unwrap()).unwrap();
    assert_eq!(LinearOrder::parse(&pi.to_line()).unwrap(), pi);
    println!("\ncoloring and order line formats round-trip");
}
