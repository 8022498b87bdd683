use std::collections::HashSet;

use super::{check, greedy_reduce, ReductionError, Subgraph};
use crate::graph::{other_neighbor, Graph};

/// A subgraph `H` of `g` that is p-irreducible and such that `H - e` is
/// p-path degenerate for every edge `e` of `H`.
///
/// Starts from the irreducible residual of the greedy engine and tries to
/// delete each edge once, keeping the deletion whenever the remainder is
/// still not p-path degenerate. One pass suffices: an edge whose deletion
/// makes some `H` degenerate does the same for every subgraph of `H`.
pub fn minimal_irreducible_witness(g: &Graph, p: usize) -> Result<Subgraph, ReductionError> {
    let (_, residual) = greedy_reduce(g, p, false)?;
    if residual.is_empty() {
        return Err(ReductionError::Degenerate(p));
    }
    let mut current = residual;
    for (a, b) in current.parent_edges() {
        let (Some(u), Some(v)) = (position(&current, a), position(&current, b)) else {
            continue;
        };
        if !current.graph.has_edge(u, v) {
            continue;
        }
        let candidate = Subgraph { graph: current.graph.without_edge(u, v), vertices: current.vertices.clone() };
        if let Some(rest) = irreducible_core(&candidate.graph, p)? {
            current = candidate.restrict(&rest);
        }
    }
    Ok(current)
}

fn position(s: &Subgraph, parent: usize) -> Option<usize> {
    s.vertices.iter().position(|&v| v == parent)
}

fn irreducible_core(g: &Graph, p: usize) -> Result<Option<Subgraph>, ReductionError> {
    match check(g, p, false)? {
        super::DegeneracyVerdict::Degenerate(_) => Ok(None),
        super::DegeneracyVerdict::NotDegenerate { witness, .. } => Ok(Some(witness)),
    }
}

/// A connected graph of minimum degree at least 2 with its degree-2 vertices
/// smoothed away.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Suppressed {
    /// No vertex of degree 3 or more: the graph is a cycle of this length.
    Cycle(usize),
    /// Branch vertices (degree >= 3) joined by chains of degree-2 vertices.
    /// Each chain is `(end, end, length)` with the smaller end first.
    Subdivision { branch: Vec<usize>, chains: Vec<(usize, usize, usize)> },
}

impl Suppressed {
    /// No loops and no parallel chains.
    pub fn is_simple(&self) -> bool {
        match self {
            Suppressed::Cycle(_) => false,
            Suppressed::Subdivision { chains, .. } => {
                let mut pairs = HashSet::new();
                chains.iter().all(|&(a, b, _)| a != b && pairs.insert((a, b)))
            }
        }
    }

    pub fn longest_chain(&self) -> usize {
        match self {
            Suppressed::Cycle(len) => *len,
            Suppressed::Subdivision { chains, .. } => chains.iter().map(|c| c.2).max().unwrap_or(0),
        }
    }
}

/// Smooths the degree-2 vertices of `g`; `None` when `g` is disconnected or
/// has a vertex of degree below 2.
pub fn suppress(g: &Graph) -> Option<Suppressed> {
    if g.is_empty() || !g.is_connected() || g.min_degree() < 2 {
        return None;
    }
    let branch: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) >= 3).collect();
    if branch.is_empty() {
        return Some(Suppressed::Cycle(g.order()));
    }
    let mut chains = Vec::new();
    for &x in &branch {
        for &y in g.neighbors(x) {
            let (mut prev, mut cur, mut len) = (x, y, 1);
            while g.degree(cur) == 2 {
                let next = other_neighbor(g, cur, prev);
                prev = cur;
                cur = next;
                len += 1;
            }
            // record each chain once, from its end with the smaller
            // (end, first step) pair
            let key_here = (x, y);
            let key_there = (cur, prev);
            if key_here <= key_there {
                chains.push((x.min(cur), x.max(cur), len));
            }
        }
    }
    chains.sort_unstable();
    Some(Suppressed::Subdivision { branch, chains })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, theta, Fixture};
    use crate::reduction::is_p_path_degenerate;

    #[test]
    fn dodecahedron_is_its_own_witness() {
        let g = Fixture::Dodecahedron.graph();
        let w = minimal_irreducible_witness(&g, 2).unwrap();
        assert_eq!(w.graph, g);
        assert_eq!(w.vertices, (0..20).collect::<Vec<_>>());
    }

    #[test]
    fn tree_components_are_pruned() {
        let tree = Graph::new(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let g = cycle(5).unwrap().disjoint_union(&tree);
        let w = minimal_irreducible_witness(&g, 5).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        assert_eq!(w.graph, cycle(5).unwrap());
    }

    #[test]
    fn degenerate_input_is_an_error() {
        assert_eq!(minimal_irreducible_witness(&cycle(6).unwrap(), 3), Err(ReductionError::Degenerate(3)));
    }

    #[test]
    fn witness_is_edge_minimal() {
        let g = Fixture::Petersen.graph().subdivide(1);
        let w = minimal_irreducible_witness(&g, 3).unwrap();
        for (u, v) in w.graph.edges() {
            assert!(is_p_path_degenerate(&w.graph.without_edge(u, v), 3).unwrap().is_degenerate());
        }
        assert!(!is_p_path_degenerate(&w.graph, 3).unwrap().is_degenerate());
    }

    #[test]
    fn suppression_shapes() {
        assert_eq!(suppress(&cycle(6).unwrap()), Some(Suppressed::Cycle(6)));
        let t = suppress(&theta(&[2, 3, 3]).unwrap()).unwrap();
        assert_eq!(
            t,
            Suppressed::Subdivision { branch: vec![0, 1], chains: vec![(0, 1, 2), (0, 1, 3), (0, 1, 3)] }
        );
        assert!(!t.is_simple());
        let k4 = suppress(&Fixture::K4.graph().subdivide(2)).unwrap();
        assert!(k4.is_simple());
        assert_eq!(k4.longest_chain(), 3);
        assert_eq!(suppress(&Graph::new(3, &[(0, 1), (1, 2)]).unwrap()), None);
    }
}
