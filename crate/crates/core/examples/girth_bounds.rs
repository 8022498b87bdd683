//! Girth thresholds that force p-path degeneracy in sparse classes.
//!
//! cargo run --example girth_bounds

use pathdeg::bounds::{self, ExpansionParams};

fn main() {
    let unit = ExpansionParams::new(1.0, 1.0).unwrap();
    println!("polynomial expansion, a = b = 1");
    for p in [2, 3, 10, 100] {
        let b = bounds::girth_bound_polynomial(unit, p).unwrap();
        println!("  p={p:>3}: girth > {} (gamma {})", b.threshold, bounds::polynomial_gamma(unit, p).unwrap());
    }

    println!("minor-closed classes");
    for d in [6.0, 576.0, 1024.0] {
        let b = bounds::girth_bound_minor_closed(d, 2).unwrap();
        println!("  mad <= {d}: girth > {:.4} (integer {})", b.threshold, b.integer_girth_threshold);
    }

    println!("K_k-minor-free, p = 3");
    for k in [5, 10, 100] {
        let b = bounds::girth_bound_clique(k, 3, bounds::THOMASON_GAMMA).unwrap();
        println!("  k={k:>3}: girth > {:.3}", b.threshold);
    }

    let b = bounds::girth_bound_subexponential(|r: f64| r.sqrt().exp2(), 2, 100).unwrap();
    println!("Exp(r) = 2^sqrt(r), p = 2: girth >= {}", b.threshold);

    let lower = bounds::lower_bound_poly(1.0, 100, 0.75).unwrap();
    println!("non-degenerate witnesses at p = 100, b = 1: girth {lower:.1}");

    let w = bounds::lambert_w_minus1(-0.1).unwrap();
    println!("W_-1(-0.1) = {w:.12}, beta(1, 2) = {:.10}", bounds::threshold_beta(1.0, 2.0).unwrap());
    for (r, q) in [(3, 4), (3, 6), (5, 6)] {
        println!("wcol_{r} bound with q = {q}: {}", bounds::wcol_girth_rule(r, q).unwrap());
    }
}
