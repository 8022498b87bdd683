use std::collections::HashSet;

use super::ReductionError;
use crate::graph::Graph;

/// Exhaustive search over every applicable p-reduction, in every order.
///
/// Returns whether some sequence empties `g`. States are vertex subsets;
/// subsets already known to be dead ends are not revisited. More than
/// `budget` distinct states is an error, not a verdict.
pub fn backtrack_degenerate(g: &Graph, p: usize, budget: usize) -> Result<bool, ReductionError> {
    if p < 2 {
        return Err(ReductionError::InvalidP(p));
    }
    let mut search = Search { g, p, budget, failed: HashSet::new(), visited: 0 };
    let alive = vec![true; g.order()];
    search.solve(alive)
}

struct Search<'g> {
    g: &'g Graph,
    p: usize,
    budget: usize,
    failed: HashSet<Vec<bool>>,
    visited: usize,
}

impl Search<'_> {
    fn degree(&self, alive: &[bool], v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|&&w| alive[w]).count()
    }

    fn solve(&mut self, alive: Vec<bool>) -> Result<bool, ReductionError> {
        if !alive.contains(&true) {
            return Ok(true);
        }
        if self.failed.contains(&alive) {
            return Ok(false);
        }
        self.visited += 1;
        if self.visited > self.budget {
            return Err(ReductionError::BudgetExhausted(self.budget));
        }
        for removal in self.moves(&alive) {
            let mut next = alive.clone();
            for v in removal {
                next[v] = false;
            }
            if self.solve(next)? {
                return Ok(true);
            }
        }
        self.failed.insert(alive);
        Ok(false)
    }

    /// Vertex sets removable by one p-reduction.
    fn moves(&self, alive: &[bool]) -> Vec<Vec<usize>> {
        let n = self.g.order();
        let mut out = Vec::new();
        for v in (0..n).filter(|&v| alive[v]) {
            if self.degree(alive, v) <= 1 {
                out.push(vec![v]);
            }
        }
        // Every strict ear of length >= p, found by extending paths through
        // degree-2 vertices; deduplicated by interior.
        let mut interiors = HashSet::new();
        for a in (0..n).filter(|&v| alive[v]) {
            let mut stack = vec![vec![a]];
            while let Some(path) = stack.pop() {
                let last = *path.last().unwrap();
                if path.len() > 1 && self.degree(alive, last) != 2 {
                    continue;
                }
                for &b in self.g.neighbors(last) {
                    if !alive[b] || path.contains(&b) {
                        continue;
                    }
                    let mut ext = path.clone();
                    ext.push(b);
                    if ext.len() - 1 >= self.p {
                        let mut interior = ext[1..ext.len() - 1].to_vec();
                        interior.sort_unstable();
                        interiors.insert(interior);
                    }
                    stack.push(ext);
                }
            }
        }
        let mut ears: Vec<Vec<usize>> = interiors.into_iter().collect();
        ears.sort();
        out.extend(ears);
        out
    }
}
