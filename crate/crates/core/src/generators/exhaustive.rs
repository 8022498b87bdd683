//! Enumeration of all graphs on a few vertices up to isomorphism.
//!
//! Graphs on `n` vertices are grown from those on `n - 1` by adding a vertex
//! with every possible neighborhood, and deduplicated by a canonical code:
//! the lexicographically smallest upper-triangle adjacency word over all
//! relabelings compatible with color refinement.

use std::collections::HashSet;

use crate::graph::Graph;

const MAX_ORDER: usize = 11;

/// Smallest adjacency code over relabelings; equal codes iff isomorphic.
///
/// Bits are laid out column by column, `(0,1), (0,2), (1,2), (0,3), ...`,
/// most significant first. Panics above 11 vertices.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_ORDER, "canonical_code supports at most {MAX_ORDER} vertices");
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, &w| m | (1 << w)))
        .collect();
    let cells = refine(g);
    let total = n * n.saturating_sub(1) / 2;
    let mut search = Search {
        adj: &adj,
        total,
        best: u64::MAX,
        perm: Vec::with_capacity(n),
        used: 0,
    };
    search.run(&cells, 0, 0, 0);
    search.best
}

struct Search<'a> {
    adj: &'a [u16],
    total: usize,
    best: u64,
    perm: Vec<usize>,
    used: u16,
}

impl Search<'_> {
    // `bits` counts how many code bits `code` already holds.
    fn run(&mut self, cells: &[Vec<usize>], cell: usize, code: u64, bits: usize) {
        if bits > 0 && self.total > 0 {
            let best_prefix = self.best >> (self.total - bits);
            if code > best_prefix {
                return;
            }
        }
        if self.perm.len() == self.adj.len() {
            if code < self.best {
                self.best = code;
            }
            return;
        }
        let mut cell = cell;
        while cells[cell].iter().all(|&v| self.used & (1 << v) != 0) {
            cell += 1;
        }
        for &v in &cells[cell] {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let mut next = code;
            for &u in &self.perm {
                next = (next << 1) | u64::from(self.adj[u] >> v & 1);
            }
            let added = self.perm.len();
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(cells, cell, next, bits + added);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Equitable partition by iterated degree refinement, cells in canonical order.
fn refine(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = color.iter().collect::<HashSet<_>>().len();
        color = next;
        if distinct.len() == before {
            break;
        }
    }
    let classes = color.iter().max().map_or(0, |c| c + 1);
    let mut cells = vec![Vec::new(); classes];
    for (v, &c) in color.iter().enumerate() {
        cells[c].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// All graphs on `n` vertices up to isomorphism, in canonical-code order.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive enumeration is limited to 10 vertices");
    let mut layer = vec![Graph::empty(0)];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &layer {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.clone();
                edges.extend((0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                let h = Graph::new(k, &edges).expect("valid extension");
                if seen.insert(canonical_code(&h)) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    layer.sort_by_cached_key(canonical_code);
    layer
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}
