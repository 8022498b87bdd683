//! Simple undirected graphs and the structural primitives used throughout the
//! crate: girth, subdivisions, strict ears and simple-cycle enumeration.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("more than {cap} cycles")]
    TooManyCycles { cap: usize },
}

/// An immutable simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are kept sorted, so iteration order (and everything derived
/// from it) is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate and reversed pairs collapse
    /// into a single edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut size = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            size += list.len();
        }
        Ok(Graph { adj, size: size / 2 })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], size: 0 }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// The subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut list: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect();
                list.sort_unstable();
                list
            })
            .collect::<Vec<_>>();
        let size = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, size }
    }

    /// Copy of the graph without the edge `uv` (a no-op when absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if let Ok(i) = g.adj[u].binary_search(&v) {
            g.adj[u].remove(i);
            let j = g.adj[v].binary_search(&u).expect("symmetric adjacency");
            g.adj[v].remove(j);
            g.size -= 1;
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|list| list.iter().map(|&w| w + shift).collect()));
        Graph { adj, size: self.size + other.size }
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.size + self.components().len() == self.order()
    }

    /// Length of a shortest cycle, by a BFS from every vertex.
    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                // Nothing found deeper than this can improve on `best`.
                if 2 * dist[u] >= best {
                    break;
                }
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// Replaces every edge by a path with `k` internal vertices.
    ///
    /// The original vertices keep their ids; the internal vertices of the
    /// `i`-th edge (in [`Graph::edges`] order) are `n + i*k .. n + (i+1)*k`,
    /// numbered from the smaller endpoint.
    pub fn subdivide(&self, k: usize) -> Graph {
        if k == 0 {
            return self.clone();
        }
        let n = self.order();
        let mut edges = Vec::with_capacity(self.size * (k + 1));
        for (i, (u, v)) in self.edges().enumerate() {
            let base = n + i * k;
            edges.push((u, base));
            for j in 1..k {
                edges.push((base + j - 1, base + j));
            }
            edges.push((base + k - 1, v));
        }
        Graph::new(n + k * self.size, &edges).expect("subdivision is simple")
    }

    /// All maximal strict ears with at least one internal vertex.
    ///
    /// Ears run between vertices of degree other than 2 through chains of
    /// degree-2 vertices, and are reported from the smaller endpoint (ties
    /// broken by the smaller first internal vertex). Chains that close up on
    /// a single vertex, and components that are pure cycles, carry no maximal
    /// ear with distinct endpoints and are skipped.
    pub fn strict_ears(&self) -> Vec<StrictEar> {
        let mut ears = Vec::new();
        for u in 0..self.order() {
            if self.degree(u) == 2 {
                continue;
            }
            for &first in &self.adj[u] {
                if self.degree(first) != 2 {
                    continue;
                }
                let mut path = vec![u, first];
                let (mut prev, mut cur) = (u, first);
                while self.degree(cur) == 2 {
                    let next = other_neighbor(self, cur, prev);
                    path.push(next);
                    prev = cur;
                    cur = next;
                }
                let end = cur;
                if end == u {
                    continue;
                }
                let reverse_first = path[path.len() - 2];
                if (u, first) < (end, reverse_first) {
                    ears.push(StrictEar { vertices: path });
                }
            }
        }
        ears.sort_by(|a, b| a.vertices.cmp(&b.vertices));
        ears
    }

    /// Every simple cycle, each reported once: it starts at its smallest
    /// vertex and its second vertex is smaller than its last.
    pub fn cycles(&self, cap: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        let mut out = Vec::new();
        self.for_each_cycle(cap, |c| out.push(c.to_vec()))?;
        Ok(out)
    }

    /// Visits every simple cycle (canonical representative as in
    /// [`Graph::cycles`]); fails once more than `cap` cycles are found.
    pub fn for_each_cycle<F>(&self, cap: usize, mut visit: F) -> Result<usize, GraphError>
    where
        F: FnMut(&[usize]),
    {
        let n = self.order();
        let mut on_path = vec![false; n];
        let mut path = Vec::new();
        let mut count = 0usize;
        for s in 0..n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            let mut iters = vec![0usize];
            while let Some(idx) = iters.last_mut() {
                let u = *path.last().unwrap();
                if *idx < self.adj[u].len() {
                    let w = self.adj[u][*idx];
                    *idx += 1;
                    if w == s {
                        if path.len() >= 3 && path[1] < u {
                            count += 1;
                            if count > cap {
                                return Err(GraphError::TooManyCycles { cap });
                            }
                            visit(&path);
                        }
                    } else if w > s && !on_path[w] {
                        on_path[w] = true;
                        path.push(w);
                        iters.push(0);
                    }
                } else {
                    iters.pop();
                    if let Some(v) = path.pop() {
                        on_path[v] = false;
                    }
                }
            }
        }
        Ok(count)
    }
}

pub(crate) fn other_neighbor(g: &Graph, v: usize, from: usize) -> usize {
    let nb = g.neighbors(v);
    if nb[0] == from {
        nb[1]
    } else {
        nb[0]
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Girth of a graph; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    /// `true` when every cycle has length at least `len`.
    pub fn at_least(self, len: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= len,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

/// A path whose internal vertices have degree 2 in the ambient graph and
/// whose endpoints are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrictEar {
    pub vertices: Vec<usize>,
}

impl StrictEar {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}
