//! Edge colorings built from path-degeneracy certificates, and their
//! verifiers.
//!
//! Both constructions replay an `(r+1)`-reduction certificate backwards,
//! coloring the edges each step removed; an edge is never recolored once
//! colored. A cycle of the final graph either lives in the graph before a
//! step or runs through the whole ear the step added, so it suffices that
//! every ear carries enough colors.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::reduction::{self, AppliedStep, DegeneracyVerdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("r must be at least {min}, got {r}")]
    InvalidR { r: usize, min: usize },
    #[error("graph is not {0}-path degenerate")]
    NotDegenerate(usize),
    #[error("edge {0}-{1} has no color")]
    Partial(usize, usize),
    #[error("colored pair {0}-{1} is not an edge")]
    UnknownEdge(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Colors `1..` on edges, keyed by `(min, max)` endpoint pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<(usize, usize), usize>,
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

impl EdgeColoring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, u: usize, v: usize, color: usize) {
        self.colors.insert(key(u, v), color);
    }

    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.colors.get(&key(u, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        self.colors.values().collect::<BTreeSet<_>>().len()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    /// `u v color` per line, edges in lexicographic order.
    pub fn to_lines(&self) -> String {
        self.iter().map(|((u, v), c)| format!("{u} {v} {c}\n")).collect()
    }

    pub fn parse(text: &str) -> Result<Self, ColoringError> {
        let mut out = EdgeColoring::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(str::parse::<usize>)
                .collect::<Result<Vec<_>, _>>()
                .ok()
                .filter(|v| v.len() == 3)
                .ok_or_else(|| ColoringError::Parse { line: i + 1, message: format!("expected `u v color`, got `{line}`") })?;
            out.set(nums[0], nums[1], nums[2]);
        }
        Ok(out)
    }

    fn check_total(&self, g: &Graph) -> Result<(), ColoringError> {
        for (u, v) in g.edges() {
            if self.get(u, v).is_none() {
                return Err(ColoringError::Partial(u, v));
            }
        }
        for &(u, v) in self.colors.keys() {
            if !g.has_edge(u, v) {
                return Err(ColoringError::UnknownEdge(u, v));
            }
        }
        Ok(())
    }
}

/// No two edges sharing an endpoint share a color.
pub fn verify_proper(g: &Graph, c: &EdgeColoring) -> Result<bool, ColoringError> {
    c.check_total(g)?;
    for v in 0..g.order() {
        let mut seen = BTreeSet::new();
        for &w in g.neighbors(v) {
            if !seen.insert(c.get(v, w).unwrap()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// First cycle `C` (in enumeration order) carrying fewer than
/// `min(|C|, t)` colors.
pub fn find_poor_cycle(g: &Graph, c: &EdgeColoring, t: usize, cap: usize) -> Result<Option<Vec<usize>>, ColoringError> {
    c.check_total(g)?;
    let mut bad = None;
    let mut colors = Vec::new();
    g.for_each_cycle(cap, |cycle| {
        if bad.is_some() {
            return;
        }
        colors.clear();
        colors.extend((0..cycle.len()).map(|i| c.get(cycle[i], cycle[(i + 1) % cycle.len()]).unwrap()));
        colors.sort_unstable();
        colors.dedup();
        if colors.len() < cycle.len().min(t) {
            bad = Some(cycle.to_vec());
        }
    })?;
    Ok(bad)
}

/// Every cycle `C` carries at least `min(|C|, t)` colors.
pub fn verify_cycle_rainbow(g: &Graph, c: &EdgeColoring, t: usize, cap: usize) -> Result<bool, ColoringError> {
    Ok(find_poor_cycle(g, c, t, cap)?.is_none())
}

fn certificate(g: &Graph, p: usize) -> Result<Vec<AppliedStep>, ColoringError> {
    match reduction::is_p_path_degenerate(g, p).expect("p >= 2") {
        DegeneracyVerdict::Degenerate(seq) => Ok(reduction::check_certificate(g, p, false, &seq.steps)
            .expect("engine certificates replay")
            .applied),
        DegeneracyVerdict::NotDegenerate { .. } => Err(ColoringError::NotDegenerate(p)),
    }
}

fn ear_edges(ear: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    ear.windows(2).map(|w| (w[0], w[1]))
}

/// At most `r + 1` colors such that every cycle `C` sees at least
/// `min(|C|, r + 1)` of them; one color on forests.
///
/// Leaf edges get color 1 and each ear is colored `1, 2, ..., r+1, 1, ...`
/// from its first endpoint.
pub fn arboricity_coloring(g: &Graph, r: usize) -> Result<EdgeColoring, ColoringError> {
    if r < 1 {
        return Err(ColoringError::InvalidR { r, min: 1 });
    }
    let mut coloring = EdgeColoring::new();
    if g.is_forest() {
        for (u, v) in g.edges() {
            coloring.set(u, v, 1);
        }
        return Ok(coloring);
    }
    for step in certificate(g, r + 1)?.iter().rev() {
        match step {
            AppliedStep::Isolated(_) => {}
            AppliedStep::Leaf { vertex, neighbor } => coloring.set(*vertex, *neighbor, 1),
            AppliedStep::Ear(ear) => {
                for (i, (u, v)) in ear_edges(ear).enumerate() {
                    coloring.set(u, v, i % (r + 1) + 1);
                }
            }
        }
    }
    Ok(coloring)
}

struct Palette {
    size: usize,
    at: Vec<BTreeSet<usize>>,
}

impl Palette {
    fn free_at(&self, v: usize) -> usize {
        let c = (1..=self.size).find(|c| !self.at[v].contains(c));
        c.expect("palette of max(degree, r) colors always leaves one free")
    }

    fn paint(&mut self, coloring: &mut EdgeColoring, u: usize, v: usize, c: usize) {
        assert!((1..=self.size).contains(&c), "color {c} outside palette 1..={}", self.size);
        self.at[u].insert(c);
        self.at[v].insert(c);
        coloring.set(u, v, c);
    }
}

/// A proper edge coloring with at most `max(Δ, r)` colors (`Δ` on forests)
/// in which every cycle `C` sees at least `min(|C|, r)` colors.
pub fn acyclic_edge_coloring(g: &Graph, r: usize) -> Result<EdgeColoring, ColoringError> {
    if r < 3 {
        return Err(ColoringError::InvalidR { r, min: 3 });
    }
    let applied = certificate(g, r + 1)?;
    let size = if g.is_forest() { g.max_degree() } else { g.max_degree().max(r) };
    let mut palette = Palette { size, at: vec![BTreeSet::new(); g.order()] };
    let mut coloring = EdgeColoring::new();
    for step in applied.iter().rev() {
        match step {
            AppliedStep::Isolated(_) => {}
            AppliedStep::Leaf { vertex, neighbor } => {
                let c = palette.free_at(*neighbor);
                palette.paint(&mut coloring, *vertex, *neighbor, c);
            }
            AppliedStep::Ear(ear) => color_ear(&mut palette, &mut coloring, ear, r),
        }
    }
    Ok(coloring)
}

// The ear is u1 v1 ... vj u2 with j >= r; only u1 and u2 carry colors so far.
fn color_ear(palette: &mut Palette, coloring: &mut EdgeColoring, ear: &[usize], r: usize) {
    let edges: Vec<(usize, usize)> = ear_edges(ear).collect();
    let last = edges.len() - 1;
    let alpha = palette.free_at(ear[0]);
    let beta = palette.free_at(ear[ear.len() - 1]);
    let mut colors = vec![0usize; edges.len()];
    colors[0] = alpha;
    colors[last] = beta;
    let others = |exclude: &[usize], k: usize| -> Vec<usize> {
        (1..=palette.size).filter(|c| !exclude.contains(c)).take(k).collect()
    };
    if alpha != beta {
        // r-2 fresh colors, then greedy along the rest of the ear
        for (i, c) in others(&[alpha, beta], r - 2).into_iter().enumerate() {
            colors[1 + i] = c;
        }
        for i in (r - 1)..last {
            let next = if i + 1 == last { colors[last] } else { 0 };
            colors[i] = (1..=palette.size)
                .find(|&c| c != colors[i - 1] && c != next)
                .expect("at least three colors");
        }
    } else {
        // the r-1 colors other than alpha, cyclically
        let cycle = others(&[alpha], r - 1);
        for i in 1..last {
            colors[i] = cycle[(i - 1) % cycle.len()];
        }
    }
    for (&(u, v), &c) in edges.iter().zip(&colors) {
        palette.paint(coloring, u, v, c);
    }
}
