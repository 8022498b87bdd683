//! Dinic's maximum flow, enough for the densest-subgraph cut.

use std::collections::VecDeque;

struct Arc {
    to: usize,
    cap: u64,
}

pub(crate) struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
    level: Vec<usize>,
    next: Vec<usize>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes], level: vec![0; nodes], next: vec![0; nodes] }
    }

    /// Adds `from -> to` with capacity `cap` and its residual twin; arc `i`
    /// and `i ^ 1` are paired.
    pub(crate) fn add(&mut self, from: usize, to: usize, cap: u64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    fn levels(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &a in &self.out[v] {
                let w = self.arcs[a].to;
                if self.arcs[a].cap > 0 && self.level[w] == usize::MAX {
                    self.level[w] = self.level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn push(&mut self, v: usize, t: usize, limit: u64) -> u64 {
        if v == t {
            return limit;
        }
        while self.next[v] < self.out[v].len() {
            let a = self.out[v][self.next[v]];
            let w = self.arcs[a].to;
            if self.arcs[a].cap > 0 && self.level[w] == self.level[v] + 1 {
                let got = self.push(w, t, limit.min(self.arcs[a].cap));
                if got > 0 {
                    self.arcs[a].cap -= got;
                    self.arcs[a ^ 1].cap += got;
                    return got;
                }
            }
            self.next[v] += 1;
        }
        0
    }

    pub(crate) fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        while self.levels(s, t) {
            self.next.fill(0);
            loop {
                let f = self.push(s, t, u64::MAX);
                if f == 0 {
                    break;
                }
                total += f;
            }
        }
        total
    }

    /// Nodes reachable from `s` in the residual network; call after
    /// [`max_flow`](Self::max_flow).
    pub(crate) fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &a in &self.out[v] {
                let w = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }
}
