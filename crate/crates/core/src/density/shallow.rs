//! Shallow minors of tiny graphs by exhaustive search over bag systems.
//!
//! Depth is a half-integer `r`, passed as `twice_r = 2r`. A bag system
//! partitions the vertices into connected bags, each with a root at BFS
//! depth at most `ceil(r)` from every bag vertex. Bags `B_u` and `B_v` may
//! be joined when some edge `xy` between them has
//! `depth(x) + depth(y) <= 2r`, i.e. the root-to-root path through it has
//! length at most `2r + 1`. Vertices left out of a minor are singleton bags
//! that the densest-subgraph step drops, so partitions of all of `V`
//! suffice.

use std::collections::VecDeque;

use super::{max_subgraph_density, DensityError, DensityValue};
use crate::graph::Graph;

pub const NABLA_DEFAULT_CAP: usize = 5_000_000;
const MAX_VERTICES: usize = 20;

fn distances(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.order())
        .map(|s| {
            let mut d = vec![usize::MAX; g.order()];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in g.neighbors(v) {
                    if d[w] == usize::MAX {
                        d[w] = d[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

/// Calls `visit` with the maximal minor (all allowed edges kept) of every
/// valid bag system; every shallow minor at depth `twice_r / 2` is a
/// subgraph of one of them. Fails once more than `cap` assignments of
/// vertices to roots have been examined.
pub fn for_each_shallow_minor(
    g: &Graph,
    twice_r: usize,
    cap: usize,
    mut visit: impl FnMut(&Graph),
) -> Result<usize, DensityError> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(DensityError::TooLarge { n, max: MAX_VERTICES });
    }
    let radius = twice_r.div_ceil(2);
    let dist = distances(g);
    let mut examined = 0usize;
    let mut valid = 0usize;
    let mut bag = vec![0usize; n];
    let mut depth = vec![usize::MAX; n];
    for roots in 0u32..(1u32 << n) {
        let is_root = |v: usize| roots >> v & 1 == 1;
        let root_list: Vec<usize> = (0..n).filter(|&v| is_root(v)).collect();
        let others: Vec<usize> = (0..n).filter(|&v| !is_root(v)).collect();
        let choices: Vec<Vec<usize>> = others
            .iter()
            .map(|&v| (0..root_list.len()).filter(|&i| dist[root_list[i]][v] <= radius).collect())
            .collect();
        if choices.iter().any(Vec::is_empty) {
            continue;
        }
        let mut pick = vec![0usize; others.len()];
        loop {
            examined += 1;
            if examined > cap {
                return Err(DensityError::StateCap(cap));
            }
            for (i, &r) in root_list.iter().enumerate() {
                bag[r] = i;
            }
            for (j, &v) in others.iter().enumerate() {
                bag[v] = choices[j][pick[j]];
            }
            if bag_depths(g, &root_list, &bag, radius, &mut depth) {
                valid += 1;
                let edges = g
                    .edges()
                    .filter(|&(x, y)| bag[x] != bag[y] && depth[x] + depth[y] <= twice_r)
                    .map(|(x, y)| (bag[x], bag[y]));
                visit(&Graph::from_edges(root_list.len(), edges).expect("bags are distinct"));
            }
            // next mixed-radix assignment
            let mut j = 0;
            while j < pick.len() {
                pick[j] += 1;
                if pick[j] < choices[j].len() {
                    break;
                }
                pick[j] = 0;
                j += 1;
            }
            if j == pick.len() {
                break;
            }
        }
    }
    Ok(valid)
}

// BFS inside each bag from its root; false if some bag vertex is unreachable
// or deeper than `radius`.
fn bag_depths(g: &Graph, roots: &[usize], bag: &[usize], radius: usize, depth: &mut [usize]) -> bool {
    depth.fill(usize::MAX);
    let mut queue = VecDeque::new();
    for &r in roots {
        depth[r] = 0;
        queue.push_back(r);
    }
    while let Some(v) = queue.pop_front() {
        if depth[v] == radius {
            continue;
        }
        for &w in g.neighbors(v) {
            if bag[w] == bag[v] && depth[w] == usize::MAX {
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    depth.iter().all(|&d| d != usize::MAX)
}

/// The distinct maximal shallow minors at depth `twice_r / 2`, as labelled
/// graphs in first-seen order.
pub fn shallow_minors(g: &Graph, twice_r: usize, cap: usize) -> Result<Vec<Graph>, DensityError> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for_each_shallow_minor(g, twice_r, cap, |h| {
        if seen.insert(h.clone()) {
            out.push(h.clone());
        }
    })?;
    Ok(out)
}

/// `∇_r(g)`: the largest density of a shallow minor at depth
/// `r = twice_r / 2`, with parallel edges collapsed.
pub fn nabla_r_bruteforce(g: &Graph, twice_r: usize, cap: usize) -> Result<DensityValue, DensityError> {
    if g.order() == 0 {
        return Err(DensityError::EmptyGraph);
    }
    let mut best = DensityValue::zero();
    let mut seen = std::collections::HashSet::new();
    for_each_shallow_minor(g, twice_r, cap, |h| {
        if seen.insert(h.clone()) {
            best = best.max(max_subgraph_density(h).expect("minor has vertices"));
        }
    })?;
    Ok(best)
}
