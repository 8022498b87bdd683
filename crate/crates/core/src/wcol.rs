//! Weak reachability, weak coloring numbers and the linear orders built from
//! `2q`-reduction certificates.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::reduction::{self, AppliedStep, DegeneracyVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WcolError {
    #[error("not a linear order: {0}")]
    NotAnOrder(String),
    #[error("need r >= 1 and q >= r + 1, got r={r}, q={q}")]
    InvalidParams { r: usize, q: usize },
    #[error("x={x} exceeds r={r}")]
    RadiusTooLarge { x: usize, r: usize },
    #[error("graph is not {0}-path degenerate")]
    NotDegenerate(usize),
    #[error("brute force is limited to {max} vertices, graph has {n}")]
    TooLarge { n: usize, max: usize },
}

/// A linear order of the vertices; `vertices()[i]` has rank `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder {
    sequence: Vec<usize>,
    rank: Vec<usize>,
}

impl LinearOrder {
    /// Vertices listed from smallest to largest.
    pub fn new(sequence: Vec<usize>) -> Result<Self, WcolError> {
        let n = sequence.len();
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in sequence.iter().enumerate() {
            if v >= n {
                return Err(WcolError::NotAnOrder(format!("vertex {v} out of range for {n} vertices")));
            }
            if rank[v] != usize::MAX {
                return Err(WcolError::NotAnOrder(format!("vertex {v} listed twice")));
            }
            rank[v] = i;
        }
        Ok(LinearOrder { sequence, rank })
    }

    pub fn identity(n: usize) -> Self {
        LinearOrder { sequence: (0..n).collect(), rank: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn rank(&self, v: usize) -> usize {
        self.rank[v]
    }

    pub fn vertices(&self) -> &[usize] {
        &self.sequence
    }

    /// Whitespace-separated ids in rank order, newline-terminated.
    pub fn to_line(&self) -> String {
        let ids: Vec<String> = self.sequence.iter().map(usize::to_string).collect();
        format!("{}\n", ids.join(" "))
    }

    /// Reads ids in rank order, ignoring `#` comments and line breaks.
    pub fn parse(text: &str) -> Result<Self, WcolError> {
        let mut seq = Vec::new();
        for line in text.lines() {
            for tok in line.split('#').next().unwrap().split_whitespace() {
                seq.push(tok.parse().map_err(|_| WcolError::NotAnOrder(format!("`{tok}` is not a vertex id")))?);
            }
        }
        LinearOrder::new(seq)
    }
}

/// Radius `r` and half ear length `q` of the order construction, with
/// `q >= r + 1`; the certificate uses ears of length `p = 2q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WcolBoundParams {
    r: usize,
    q: usize,
}

impl WcolBoundParams {
    pub fn new(r: usize, q: usize) -> Result<Self, WcolError> {
        if r == 0 || q < r + 1 {
            return Err(WcolError::InvalidParams { r, q });
        }
        Ok(WcolBoundParams { r, q })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn p(&self) -> usize {
        2 * self.q
    }
}

fn check_order(g: &Graph, pi: &LinearOrder) {
    assert_eq!(g.order(), pi.len(), "order has {} vertices, graph has {}", pi.len(), g.order());
}

/// Vertices `u` with `rank(u) <= rank(v)` joined to `v` by a path of length
/// at most `x` whose internal vertices all rank above `u`. Sorted by id.
pub fn wreach_set(g: &Graph, pi: &LinearOrder, x: usize, v: usize) -> Vec<usize> {
    check_order(g, pi);
    let mut out: Vec<usize> = (0..g.order())
        .filter(|&u| pi.rank(u) <= pi.rank(v) && reaches_above(g, pi, u, v, x))
        .collect();
    out.sort_unstable();
    out
}

// BFS from u through vertices ranked above u; reports whether v is within x.
fn reaches_above(g: &Graph, pi: &LinearOrder, u: usize, v: usize, x: usize) -> bool {
    if u == v {
        return true;
    }
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::from([u]);
    dist[u] = 0;
    while let Some(a) = queue.pop_front() {
        if dist[a] == x {
            continue;
        }
        for &b in g.neighbors(a) {
            if b == v {
                return true;
            }
            if dist[b] == usize::MAX && pi.rank(b) > pi.rank(u) {
                dist[b] = dist[a] + 1;
                queue.push_back(b);
            }
        }
    }
    false
}

/// `|WReach_x[v]|` for every vertex at once: one restricted BFS per `u`
/// credits every vertex that reaches `u`.
pub fn wreach_sizes(g: &Graph, pi: &LinearOrder, x: usize) -> Vec<usize> {
    check_order(g, pi);
    let n = g.order();
    let mut size = vec![1usize; n];
    let mut dist = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for u in 0..n {
        for &t in &touched {
            dist[t] = usize::MAX;
        }
        touched.clear();
        dist[u] = 0;
        touched.push(u);
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            if dist[a] == x {
                continue;
            }
            for &b in g.neighbors(a) {
                if dist[b] == usize::MAX && pi.rank(b) > pi.rank(u) {
                    dist[b] = dist[a] + 1;
                    touched.push(b);
                    size[b] += 1;
                    queue.push_back(b);
                }
            }
        }
    }
    size
}

/// `max_v |WReach_x[v]|` under `pi`; 0 on the empty graph.
pub fn wcol_under_order(g: &Graph, pi: &LinearOrder, x: usize) -> usize {
    wreach_sizes(g, pi, x).into_iter().max().unwrap_or(0)
}

pub const WCOL_EXACT_MAX_VERTICES: usize = 9;

/// The weak `x`-coloring number, by trying every order (at most
/// [`WCOL_EXACT_MAX_VERTICES`] vertices).
pub fn wcol_exact(g: &Graph, x: usize) -> Result<usize, WcolError> {
    let n = g.order();
    if n > WCOL_EXACT_MAX_VERTICES {
        return Err(WcolError::TooLarge { n, max: WCOL_EXACT_MAX_VERTICES });
    }
    if n == 0 {
        return Ok(0);
    }
    // Any vertex with a neighbor forces 2; an edgeless graph gives 1.
    let floor = if g.size() > 0 { 2 } else { 1 };
    let mut best = usize::MAX;
    let mut seq: Vec<usize> = (0..n).collect();
    permute(&mut seq, 0, &mut |s| {
        let pi = LinearOrder::new(s.to_vec()).unwrap();
        best = best.min(wcol_under_order(g, &pi, x));
        best <= floor || x == 0
    });
    Ok(best)
}

// Heap-free recursive permutation; the callback returns true to stop.
fn permute(seq: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == seq.len() {
        return visit(seq);
    }
    for i in k..seq.len() {
        seq.swap(k, i);
        if permute(seq, k + 1, visit) {
            return true;
        }
        seq.swap(k, i);
    }
    false
}

/// The target function `f` of the order construction: `f(0) = 1`,
/// `f(x) = x + 2 + log2((q-1)/(q-x))` when `q < 2r`, otherwise `x + 2`.
pub fn wcol_target(x: usize, params: WcolBoundParams) -> Result<f64, WcolError> {
    let WcolBoundParams { r, q } = params;
    if x > r {
        return Err(WcolError::RadiusTooLarge { x, r });
    }
    Ok(if x == 0 {
        1.0
    } else if q < 2 * r {
        x as f64 + 2.0 + ((q - 1) as f64 / (q - x) as f64).log2()
    } else {
        x as f64 + 2.0
    })
}

/// Exact test of `size <= f(x)`, without floating point:
/// `s <= x + 2 + log2(a/b)` iff `b * 2^(s-x-2) <= a`.
pub fn fits_target(size: usize, x: usize, params: WcolBoundParams) -> Result<bool, WcolError> {
    let WcolBoundParams { r, q } = params;
    if x > r {
        return Err(WcolError::RadiusTooLarge { x, r });
    }
    if x == 0 {
        return Ok(size <= 1);
    }
    if size <= x + 2 {
        return Ok(true);
    }
    if q >= 2 * r {
        return Ok(false);
    }
    let excess = (size - x - 2) as u32;
    let (a, b) = ((q - 1) as u128, (q - x) as u128);
    Ok(excess < 64 && b << excess <= a)
}

/// The integer bound `r + 2 + floor(log2((q-1)/(q-r)))` for `q < 2r`, and
/// `r + 2` for `q >= 2r`.
pub fn wcol_integer_bound(params: WcolBoundParams) -> usize {
    let WcolBoundParams { r, q } = params;
    if q >= 2 * r {
        return r + 2;
    }
    r + 2 + floor_log2_ratio(q - 1, q - r)
}

/// Largest `k` with `b * 2^k <= a`, for `a >= b >= 1`.
pub(crate) fn floor_log2_ratio(a: usize, b: usize) -> usize {
    assert!(a >= b && b >= 1);
    let mut k = 0;
    while b << (k + 1) <= a {
        k += 1;
    }
    k
}

/// A good linear order with respect to [`wcol_target`] up to `r`, built by
/// replaying an exact `2q`-ear certificate backwards.
///
/// An ear `u1 v1 .. v(q-1) w v'(q-1) .. v'1 u2` puts its midpoint `w` in
/// front of the current order and `v1 .. v(q-1), v'1 .. v'(q-1)` behind it;
/// isolated vertices and leaves go to the back.
pub fn weak_order(g: &Graph, params: WcolBoundParams) -> Result<LinearOrder, WcolError> {
    let p = params.p();
    let steps = match reduction::check(g, p, true).expect("p >= 4") {
        DegeneracyVerdict::Degenerate(seq) => seq.steps,
        DegeneracyVerdict::NotDegenerate { .. } => return Err(WcolError::NotDegenerate(p)),
    };
    let applied = reduction::check_certificate(g, p, true, &steps).expect("engine certificates replay").applied;
    let mut order = VecDeque::with_capacity(g.order());
    for step in applied.iter().rev() {
        match step {
            AppliedStep::Isolated(v) | AppliedStep::Leaf { vertex: v, .. } => order.push_back(*v),
            AppliedStep::Ear(ear) => {
                let q = params.q;
                debug_assert_eq!(ear.len(), 2 * q + 1);
                order.push_front(ear[q]);
                order.extend(&ear[1..q]);
                order.extend(ear[q + 1..2 * q].iter().rev());
            }
        }
    }
    Ok(LinearOrder::new(order.into()).expect("every vertex placed once"))
}

/// Checks `max_v |WReach_x| <= f(x)` for every `x <= r`; returns the first
/// failing `(x, size)`.
pub fn check_good_order(g: &Graph, pi: &LinearOrder, params: WcolBoundParams) -> Option<(usize, usize)> {
    (0..=params.r).find_map(|x| {
        let size = wcol_under_order(g, pi, x);
        (!fits_target(size, x, params).unwrap()).then_some((x, size))
    })
}
