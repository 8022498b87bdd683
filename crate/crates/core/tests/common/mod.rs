//! Brute-force oracles written against the definitions, sharing no code with
//! the library beyond `Graph` accessors.

#![allow(dead_code, clippy::int_plus_one)]

use std::collections::{HashMap, VecDeque};

use pathdeg::Graph;
use rand::Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn mask_degree(g: &Graph, mask: u32, v: usize) -> usize {
    g.neighbors(v).iter().filter(|&&w| mask >> w & 1 == 1).count()
}

/// Vertex sets removable by one p-reduction of `g[mask]`. With `exact`,
/// ears must have length exactly `p`.
pub fn reduction_moves(g: &Graph, mask: u32, p: usize, exact: bool) -> Vec<u32> {
    let n = g.order();
    let alive = |v: usize| mask >> v & 1 == 1;
    let mut out = Vec::new();
    for v in (0..n).filter(|&v| alive(v)) {
        if mask_degree(g, mask, v) <= 1 {
            out.push(1 << v);
        }
    }
    // walk from every start through degree-2 vertices; the path is fixed
    // by its first edge
    for a in (0..n).filter(|&a| alive(a)) {
        for &first in g.neighbors(a).iter().filter(|&&w| alive(w)) {
            let mut path = vec![a, first];
            loop {
                let len = path.len() - 1;
                if len >= p && (!exact || len == p) {
                    let interior = path[1..len].iter().fold(0u32, |m, &v| m | 1 << v);
                    out.push(interior);
                }
                let last = *path.last().unwrap();
                if mask_degree(g, mask, last) != 2 || (exact && len >= p) {
                    break;
                }
                let prev = path[path.len() - 2];
                let next = g.neighbors(last).iter().copied().find(|&w| alive(w) && w != prev).unwrap();
                if path.contains(&next) {
                    break;
                }
                path.push(next);
            }
        }
    }
    out
}

/// Whether some sequence of p-reductions empties `g`, by search over vertex
/// subsets.
pub fn degenerate_by_subsets(g: &Graph, p: usize) -> bool {
    assert!(g.order() <= 20);
    fn solve(g: &Graph, p: usize, mask: u32, memo: &mut HashMap<u32, bool>) -> bool {
        if mask == 0 {
            return true;
        }
        if let Some(&known) = memo.get(&mask) {
            return known;
        }
        let result = reduction_moves(g, mask, p, false).into_iter().any(|m| solve(g, p, mask & !m, memo));
        memo.insert(mask, result);
        result
    }
    let full = if g.order() == 32 { u32::MAX } else { (1u32 << g.order()) - 1 };
    solve(g, p, full, &mut HashMap::new())
}

/// Replays certificate text (`I v`, `L v`, `E v0 .. vk`) and reports whether
/// every step is legal and the graph ends empty.
pub fn replay_text(g: &Graph, p: usize, exact: bool, text: &str) -> Result<(), String> {
    let n = g.order();
    assert!(n <= 4096);
    let mut alive = vec![true; n];
    let degree = |alive: &[bool], v: usize| g.neighbors(v).iter().filter(|&&w| alive[w]).count();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let kind = tokens.next().unwrap();
        let ids: Vec<usize> = tokens.map(|t| t.parse().map_err(|_| format!("line {}: bad id", i + 1))).collect::<Result<_, _>>()?;
        if ids.iter().any(|&v| v >= n || !alive[v]) {
            return Err(format!("line {}: vertex gone or out of range", i + 1));
        }
        match (kind, ids.as_slice()) {
            ("I", &[v]) if degree(&alive, v) == 0 => alive[v] = false,
            ("L", &[v]) if degree(&alive, v) == 1 => alive[v] = false,
            ("E", ear) if ear.len() >= 3 => {
                let len = ear.len() - 1;
                let mut distinct = ear.to_vec();
                distinct.sort_unstable();
                distinct.dedup();
                let ok = distinct.len() == ear.len()
                    && ear.windows(2).all(|w| g.has_edge(w[0], w[1]))
                    && ear[1..len].iter().all(|&v| degree(&alive, v) == 2)
                    && (if exact { len == p } else { len >= p });
                if !ok {
                    return Err(format!("line {}: not a legal ear", i + 1));
                }
                for &v in &ear[1..len] {
                    alive[v] = false;
                }
            }
            _ => return Err(format!("line {}: illegal step `{line}`", i + 1)),
        }
    }
    match alive.iter().position(|&a| a) {
        Some(v) => Err(format!("vertex {v} survives")),
        None => Ok(()),
    }
}

/// Shortest cycle length via one BFS per deleted edge.
pub fn girth_oracle(g: &Graph) -> Option<usize> {
    let mut best = None::<usize>;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; g.order()];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if (x, y) == (u, v) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            best = Some(best.map_or(dist[v] + 1, |b| b.min(dist[v] + 1)));
        }
    }
    best
}

/// Every simple cycle once, as a vertex sequence starting at its least
/// vertex.
pub fn for_each_cycle(g: &Graph, mut visit: impl FnMut(&[usize])) -> usize {
    fn extend(g: &Graph, path: &mut Vec<usize>, on: &mut [bool], count: &mut usize, visit: &mut dyn FnMut(&[usize])) {
        let s = path[0];
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w == s && path.len() >= 3 && path[1] < last {
                *count += 1;
                visit(path);
            } else if w > s && !on[w] {
                on[w] = true;
                path.push(w);
                extend(g, path, on, count, visit);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut count = 0;
    let mut on = vec![false; g.order()];
    for s in 0..g.order() {
        on[s] = true;
        extend(g, &mut vec![s], &mut on, &mut count, &mut visit);
        on[s] = false;
    }
    count
}

/// `|WReach_x[v]|` under `rank` by enumerating simple paths of length at
/// most `x` from `v`.
pub fn wreach_oracle(g: &Graph, rank: &[usize], x: usize, v: usize) -> usize {
    fn walk(g: &Graph, rank: &[usize], x: usize, path: &mut Vec<usize>, found: &mut Vec<usize>) {
        let v = path[0];
        let u = *path.last().unwrap();
        let inner: &[usize] = if path.len() >= 2 { &path[1..path.len() - 1] } else { &[] };
        if rank[u] <= rank[v] && inner.iter().all(|&w| rank[w] > rank[u]) && !found.contains(&u) {
            found.push(u);
        }
        if path.len() > x {
            return;
        }
        for &w in g.neighbors(u) {
            if !path.contains(&w) {
                path.push(w);
                walk(g, rank, x, path, found);
                path.pop();
            }
        }
    }
    let mut found = Vec::new();
    walk(g, rank, x, &mut vec![v], &mut found);
    found.len()
}

pub fn ranks(order: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    rank
}

pub fn max_wreach_oracle(g: &Graph, order: &[usize], x: usize) -> usize {
    let rank = ranks(order);
    (0..g.order()).map(|v| wreach_oracle(g, &rank, x, v)).max().unwrap_or(0)
}

/// `min` over all orders of the maximum `|WReach_x|`, by trying every
/// permutation.
pub fn wcol_oracle(g: &Graph, x: usize) -> usize {
    fn permute(g: &Graph, x: usize, prefix: &mut Vec<usize>, best: &mut usize) {
        if prefix.len() == g.order() {
            *best = (*best).min(max_wreach_oracle(g, prefix, x));
            return;
        }
        for v in 0..g.order() {
            if !prefix.contains(&v) {
                prefix.push(v);
                permute(g, x, prefix, best);
                prefix.pop();
            }
        }
    }
    let mut best = usize::MAX;
    permute(g, x, &mut Vec::new(), &mut best);
    if g.order() == 0 { 0 } else { best }
}

/// Maximum of `|E(S)| / |S|` over non-empty vertex subsets, reduced.
pub fn max_density_oracle(g: &Graph) -> (u64, u64) {
    let n = g.order();
    assert!(n <= 20);
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut best = (0u64, 1u64);
    for mask in 1u32..(1 << n) {
        let e = edges.iter().filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1).count() as u64;
        let s = mask.count_ones() as u64;
        if e * best.1 > best.0 * s {
            best = (e, s);
        }
    }
    let g = gcd(best.0, best.1);
    (best.0 / g, best.1 / g)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Largest `k` with `(q - r) 2^k <= q - 1`, i.e. `floor(log2((q-1)/(q-r)))`.
pub fn floor_log2_ratio_oracle(num: usize, den: usize) -> usize {
    let mut k = 0;
    while den << (k + 1) <= num {
        k += 1;
    }
    k
}

/// `size <= f(x)` for the weak-reachability target, compared in integers.
pub fn fits_f_oracle(size: usize, x: usize, r: usize, q: usize) -> bool {
    if x == 0 {
        return size <= 1;
    }
    if q >= 2 * r || size <= x + 2 {
        return size <= x + 2;
    }
    // size <= x + 2 + log2((q-1)/(q-x))  <=>  (q-x) 2^(size-x-2) <= q-1
    let excess = size - x - 2;
    excess < 32 && ((q - x) << excess) <= q - 1
}
