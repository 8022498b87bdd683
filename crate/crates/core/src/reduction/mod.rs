//! The p-reduction engine.
//!
//! A p-reduction deletes an isolated vertex, a vertex of degree one, or the
//! internal vertices of a strict ear of length at least `p`. A graph is
//! p-path degenerate when some sequence of p-reductions empties it.
//!
//! Every reduction deletes vertices, so the graph after a step is an induced
//! subgraph of the graph before it. Together with heredity of path
//! degeneracy under subgraphs this makes the greedy strategy complete; the
//! backtracking search in [`backtrack_degenerate`] explores every order and
//! is kept as an independent oracle.

mod certificate;
mod oracle;
mod witness;

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

pub use certificate::{check_certificate, parse_certificate, replay, AppliedStep, CertificateError, Replay};
pub use oracle::backtrack_degenerate;
pub use witness::{minimal_irreducible_witness, suppress, Suppressed};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("p must be at least 2, got {0}")]
    InvalidP(usize),
    #[error("backtracking budget of {0} states exhausted")]
    BudgetExhausted(usize),
    #[error("graph is {0}-path degenerate")]
    Degenerate(usize),
}

/// One p-reduction, in the ids of the graph it was computed on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    DeleteIsolated(usize),
    DeleteLeaf(usize),
    /// The whole ear, endpoints included; only the interior is deleted.
    DeleteEarInternals(Vec<usize>),
}

impl ReductionStep {
    /// Vertices the step removes.
    pub fn removed(&self) -> &[usize] {
        match self {
            ReductionStep::DeleteIsolated(v) | ReductionStep::DeleteLeaf(v) => std::slice::from_ref(v),
            ReductionStep::DeleteEarInternals(ear) => &ear[1..ear.len() - 1],
        }
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::DeleteIsolated(v) => write!(f, "I {v}"),
            ReductionStep::DeleteLeaf(v) => write!(f, "L {v}"),
            ReductionStep::DeleteEarInternals(ear) => {
                f.write_str("E")?;
                for v in ear {
                    write!(f, " {v}")?;
                }
                Ok(())
            }
        }
    }
}

/// An ordered list of p-reductions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionSequence {
    pub p: usize,
    /// Every ear step has length exactly `p`.
    pub exact_ears: bool,
    pub steps: Vec<ReductionStep>,
}

impl ReductionSequence {
    /// Line format: a comment header, then one step per line
    /// (`I v`, `L v` or `E v0 v1 ... vk`).
    pub fn to_lines(&self) -> String {
        let mut out = format!("# p={} exact={}\n", self.p, self.exact_ears);
        for s in &self.steps {
            out.push_str(&s.to_string());
            out.push('\n');
        }
        out
    }

    pub fn ear_steps(&self) -> impl Iterator<Item = &[usize]> {
        self.steps.iter().filter_map(|s| match s {
            ReductionStep::DeleteEarInternals(ear) => Some(ear.as_slice()),
            _ => None,
        })
    }
}

/// A subgraph together with the original id of each of its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the id in the parent graph of local vertex `i`.
    pub vertices: Vec<usize>,
}

impl Subgraph {
    pub fn whole(g: &Graph) -> Self {
        Subgraph { graph: g.clone(), vertices: (0..g.order()).collect() }
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    /// Edges in parent ids, each as `(min, max)`, sorted.
    pub fn parent_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (self.vertices[u], self.vertices[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Restricts to `local` vertices of this subgraph.
    pub fn restrict(&self, local: &Subgraph) -> Subgraph {
        Subgraph {
            graph: local.graph.clone(),
            vertices: local.vertices.iter().map(|&i| self.vertices[i]).collect(),
        }
    }
}

/// Outcome of a degeneracy check; both variants carry a checkable record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegeneracyVerdict {
    /// A sequence that replays to the empty graph.
    Degenerate(ReductionSequence),
    /// The reductions that were possible, and the nonempty p-irreducible
    /// subgraph they leave behind.
    NotDegenerate { prefix: ReductionSequence, witness: Subgraph },
}

impl DegeneracyVerdict {
    pub fn is_degenerate(&self) -> bool {
        matches!(self, DegeneracyVerdict::Degenerate(_))
    }

    pub fn sequence(&self) -> &ReductionSequence {
        match self {
            DegeneracyVerdict::Degenerate(seq) => seq,
            DegeneracyVerdict::NotDegenerate { prefix, .. } => prefix,
        }
    }
}

/// Mutable reduction state over a fixed graph: vertices are only deleted.
pub(crate) struct State<'g> {
    g: &'g Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    remaining: usize,
}

impl<'g> State<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        State {
            g,
            alive: vec![true; g.order()],
            degree: (0..g.order()).map(|v| g.degree(v)).collect(),
            remaining: g.order(),
        }
    }

    fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.g.neighbors(v).iter().copied().filter(move |&w| self.alive[w])
    }

    fn other(&self, v: usize, from: usize) -> usize {
        self.neighbors(v).find(|&w| w != from).expect("degree-2 vertex")
    }

    fn delete(&mut self, v: usize) {
        debug_assert!(self.alive[v]);
        self.alive[v] = false;
        self.remaining -= 1;
        for &w in self.g.neighbors(v) {
            if self.alive[w] {
                self.degree[w] -= 1;
            }
        }
    }

    pub(crate) fn apply(&mut self, step: &ReductionStep) {
        for &v in step.removed() {
            self.delete(v);
        }
    }

    fn alive_vertices(&self) -> Vec<usize> {
        (0..self.g.order()).filter(|&v| self.alive[v]).collect()
    }

    /// Follows a degree-2 chain from `start` (entered from `from`) until a
    /// vertex of another degree, or until it returns to `stop`.
    fn walk(&self, from: usize, start: usize, stop: usize) -> Vec<usize> {
        let mut path = vec![from, start];
        let (mut prev, mut cur) = (from, start);
        while self.degree[cur] == 2 && cur != stop {
            let next = self.other(cur, prev);
            path.push(next);
            prev = cur;
            cur = next;
        }
        path
    }

    /// The step taken by the deterministic engine: isolated vertices first,
    /// then leaves (smallest id), then the ear with the smallest endpoint
    /// pair, then smallest vertex sequence.
    pub(crate) fn next_step(&self, p: usize, exact: bool) -> Option<ReductionStep> {
        let n = self.g.order();
        if let Some(v) = (0..n).find(|&v| self.alive[v] && self.degree[v] == 0) {
            return Some(ReductionStep::DeleteIsolated(v));
        }
        if let Some(v) = (0..n).find(|&v| self.alive[v] && self.degree[v] == 1) {
            return Some(ReductionStep::DeleteLeaf(v));
        }
        // Minimum degree is now at least 2.
        let mut best: Option<(usize, usize, Vec<usize>)> = None;
        let mut offer = |ear: Vec<usize>| {
            let (a, b) = (ear[0], *ear.last().unwrap());
            let key = (a.min(b), a.max(b), ear);
            if best.as_ref().is_none_or(|cur| key < *cur) {
                best = Some(key);
            }
        };
        let mut seen_in_chain = vec![false; n];
        for x in 0..n {
            if !self.alive[x] || self.degree[x] == 2 {
                continue;
            }
            for y in self.neighbors(x) {
                if self.degree[y] != 2 || seen_in_chain[y] {
                    continue;
                }
                let chain = self.walk(x, y, x);
                let end = *chain.last().unwrap();
                for &v in &chain[1..chain.len() - 1] {
                    seen_in_chain[v] = true;
                }
                if end != x {
                    // open chain x .. end
                    if chain.len() - 1 < p {
                        continue;
                    }
                    let ear = if x < end { chain } else { chain.into_iter().rev().collect() };
                    offer(if exact { ear[..=p].to_vec() } else { ear });
                } else {
                    // a cycle hanging at x: drop the closing edge
                    let mut open = chain;
                    open.pop();
                    if open.len() - 1 < p {
                        continue;
                    }
                    if open[1] > *open.last().unwrap() {
                        open[1..].reverse();
                    }
                    offer(if exact { open[..=p].to_vec() } else { open });
                }
            }
        }
        // Components that are pure cycles.
        for s in 0..n {
            if !self.alive[s] || self.degree[s] != 2 || seen_in_chain[s] {
                continue;
            }
            let (a, b) = {
                let mut nb = self.neighbors(s);
                let (u, v) = (nb.next().unwrap(), nb.next().unwrap());
                (u.min(v), u.max(v))
            };
            let cycle = self.walk(s, b, s);
            for &v in &cycle {
                seen_in_chain[v] = true;
            }
            let len = cycle.len() - 1;
            if len - 1 < p {
                continue;
            }
            if exact {
                // s, a, ... for p steps
                let mut ear = vec![s, a];
                let (mut prev, mut cur) = (s, a);
                while ear.len() < p + 1 {
                    let next = self.other(cur, prev);
                    ear.push(next);
                    prev = cur;
                    cur = next;
                }
                offer(ear);
            } else {
                // s, b, ..., a: every vertex, ending at the smaller neighbor
                let mut ear = cycle;
                ear.pop();
                offer(ear);
            }
        }
        best.map(|(_, _, ear)| ReductionStep::DeleteEarInternals(ear))
    }
}

fn check_p(p: usize) -> Result<(), ReductionError> {
    if p < 2 {
        Err(ReductionError::InvalidP(p))
    } else {
        Ok(())
    }
}

/// The step the engine would take on `g`, or `None` when `g` is p-irreducible.
pub fn find_p_reduction(g: &Graph, p: usize, exact_ears: bool) -> Result<Option<ReductionStep>, ReductionError> {
    check_p(p)?;
    Ok(State::new(g).next_step(p, exact_ears))
}

/// Applies engine steps until none is left; returns them with the
/// p-irreducible residual (empty iff `g` is p-path degenerate).
pub fn greedy_reduce(g: &Graph, p: usize, exact_ears: bool) -> Result<(ReductionSequence, Subgraph), ReductionError> {
    check_p(p)?;
    let mut state = State::new(g);
    let mut steps = Vec::new();
    while state.remaining > 0 {
        match state.next_step(p, exact_ears) {
            Some(step) => {
                state.apply(&step);
                steps.push(step);
            }
            None => break,
        }
    }
    let vertices = state.alive_vertices();
    let residual = Subgraph { graph: g.induced(&vertices), vertices };
    Ok((ReductionSequence { p, exact_ears, steps }, residual))
}

/// Decides p-path degeneracy.
pub fn is_p_path_degenerate(g: &Graph, p: usize) -> Result<DegeneracyVerdict, ReductionError> {
    check(g, p, false)
}

/// [`is_p_path_degenerate`] with a choice of ear normalization.
pub fn check(g: &Graph, p: usize, exact_ears: bool) -> Result<DegeneracyVerdict, ReductionError> {
    let (seq, residual) = greedy_reduce(g, p, exact_ears)?;
    Ok(if residual.is_empty() {
        DegeneracyVerdict::Degenerate(seq)
    } else {
        DegeneracyVerdict::NotDegenerate { prefix: seq, witness: residual }
    })
}

/// Largest `p` (checked up to `limit`) for which `g` is p-path degenerate;
/// `None` when `g` is p-path degenerate for every `p <= limit`. Returns `Some(1)`
/// when it is not even 2-path degenerate.
pub fn path_degeneracy(g: &Graph, limit: usize) -> Option<usize> {
    (2..=limit)
        .find(|&p| !check(g, p, false).expect("p >= 2").is_degenerate())
        .map(|p| p - 1)
}
