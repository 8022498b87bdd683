//! Exact subgraph densities: the maximum of `|E(H)| / |V(H)|` over
//! subgraphs, the maximum average degree, and a brute-force `∇_r` for tiny
//! graphs.

mod flow;
mod shallow;

use std::fmt;

use num_rational::Ratio;
use thiserror::Error;

use crate::graph::Graph;
use flow::FlowNetwork;

pub use shallow::{for_each_shallow_minor, nabla_r_bruteforce, shallow_minors, NABLA_DEFAULT_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DensityError {
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("brute force is limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
    #[error("more than {0} bag systems")]
    StateCap(usize),
}

/// An exact non-negative rational `edges / vertices`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DensityValue(Ratio<u64>);

impl DensityValue {
    pub fn new(numer: u64, denom: u64) -> Self {
        DensityValue(Ratio::new(numer, denom))
    }

    pub fn zero() -> Self {
        DensityValue::new(0, 1)
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn doubled(&self) -> Self {
        DensityValue(self.0 * 2)
    }
}

impl fmt::Display for DensityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

fn edges_within(g: &Graph, inside: &[bool]) -> usize {
    g.edges().filter(|&(u, v)| inside[u] && inside[v]).count()
}

/// The maximum density over nonempty subgraphs together with a vertex set
/// attaining it.
///
/// Dinkelbach iteration: with the current ratio `a/b`, a min cut in the
/// edge/vertex closure network maximizes `b |E(S)| - a |S|`; a positive
/// value gives a denser `S`, otherwise `a/b` is optimal.
pub fn densest_subgraph(g: &Graph) -> Result<(DensityValue, Vec<usize>), DensityError> {
    let n = g.order();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let mut best = DensityValue::new(m as u64, n as u64);
    let mut witness: Vec<usize> = (0..n).collect();
    if m == 0 {
        return Ok((best, witness));
    }
    loop {
        let (a, b) = (best.numer(), best.denom());
        let (s, t) = (0, 1);
        let vertex = |v: usize| 2 + m + v;
        let inf = b * m as u64 + 1;
        let mut net = FlowNetwork::new(2 + m + n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            net.add(s, 2 + i, b);
            net.add(2 + i, vertex(u), inf);
            net.add(2 + i, vertex(v), inf);
        }
        for v in 0..n {
            net.add(vertex(v), t, a);
        }
        let cut = net.max_flow(s, t);
        if b * m as u64 <= cut {
            return Ok((best, witness));
        }
        let side = net.source_side(s);
        let inside: Vec<bool> = (0..n).map(|v| side[vertex(v)]).collect();
        let k = inside.iter().filter(|&&x| x).count() as u64;
        let candidate = DensityValue::new(edges_within(g, &inside) as u64, k);
        debug_assert!(candidate > best);
        best = candidate;
        witness = (0..n).filter(|&v| inside[v]).collect();
    }
}

/// `max |E(H)| / |V(H)|` over nonempty subgraphs `H`.
pub fn max_subgraph_density(g: &Graph) -> Result<DensityValue, DensityError> {
    densest_subgraph(g).map(|(d, _)| d)
}

/// Maximum average degree; 0 for graphs without edges.
pub fn mad(g: &Graph) -> DensityValue {
    if g.size() == 0 {
        return DensityValue::zero();
    }
    max_subgraph_density(g).expect("graph has vertices").doubled()
}

pub const BRUTEFORCE_MAX_VERTICES: usize = 20;

/// [`max_subgraph_density`] by trying every vertex subset.
pub fn max_subgraph_density_bruteforce(g: &Graph) -> Result<DensityValue, DensityError> {
    let n = g.order();
    if n == 0 {
        return Err(DensityError::EmptyGraph);
    }
    if n > BRUTEFORCE_MAX_VERTICES {
        return Err(DensityError::TooLarge { n, max: BRUTEFORCE_MAX_VERTICES });
    }
    let edges: Vec<u32> = g.edges().map(|(u, v)| (1u32 << u) | (1u32 << v)).collect();
    let mut best = DensityValue::zero();
    for mask in 1u32..(1 << n) {
        let e = edges.iter().filter(|&&em| mask & em == em).count();
        best = best.max(DensityValue::new(e as u64, mask.count_ones() as u64));
    }
    Ok(best)
}
