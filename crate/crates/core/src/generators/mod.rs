//! Deterministic constructions: cycles, paths, cliques, generalized theta
//! graphs, a small set of named cubic fixtures, and exhaustive enumeration
//! of small graphs up to isomorphism.

mod exhaustive;
mod fixtures;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

pub use exhaustive::{all_graphs, canonical_code, connected_graphs};
pub use fixtures::{Fixture, FixtureInfo};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

/// What to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// Path on `n >= 1` vertices.
    Path(usize),
    /// `K_n`, `n >= 1`.
    Complete(usize),
    /// Internally disjoint paths of the given lengths between two hubs.
    Theta(Vec<usize>),
    Fixture(Fixture),
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<Graph, GeneratorError> {
        match self {
            GeneratorSpec::Cycle(n) => cycle(*n),
            GeneratorSpec::Path(n) => path(*n),
            GeneratorSpec::Complete(n) => complete(*n),
            GeneratorSpec::Theta(lengths) => theta(lengths),
            GeneratorSpec::Fixture(f) => Ok(f.graph()),
        }
    }
}

/// Convenience wrapper around [`GeneratorSpec::generate`].
pub fn generate(spec: &GeneratorSpec) -> Result<Graph, GeneratorError> {
    spec.generate()
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    /// Accepts `cycle:N`, `path:N`, `complete:N`, `theta:L1,L2,...` and
    /// `fixture:NAME` (a bare fixture name also works).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, params) = s.split_once(':').unwrap_or(("fixture", s));
        let count = || {
            params
                .trim()
                .parse::<usize>()
                .map_err(|_| GeneratorError::InvalidParameters(format!("`{params}` is not a count")))
        };
        match kind.trim() {
            "cycle" => Ok(GeneratorSpec::Cycle(count()?)),
            "path" => Ok(GeneratorSpec::Path(count()?)),
            "complete" => Ok(GeneratorSpec::Complete(count()?)),
            "theta" => {
                let lengths = params
                    .split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| GeneratorError::InvalidParameters(format!("bad theta lengths `{params}`")))?;
                Ok(GeneratorSpec::Theta(lengths))
            }
            "fixture" => Ok(GeneratorSpec::Fixture(params.parse()?)),
            other => Err(GeneratorError::InvalidParameters(format!("unknown generator `{other}`"))),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GeneratorSpec::Path(n) => write!(f, "path:{n}"),
            GeneratorSpec::Complete(n) => write!(f, "complete:{n}"),
            GeneratorSpec::Theta(ls) => {
                let parts: Vec<String> = ls.iter().map(usize::to_string).collect();
                write!(f, "theta:{}", parts.join(","))
            }
            GeneratorSpec::Fixture(x) => write!(f, "fixture:{}", x.name()),
        }
    }
}

pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::InvalidParameters(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle"))
}

pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::InvalidParameters("path needs at least one vertex".into()));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path"))
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::InvalidParameters("complete graph needs n >= 1".into()));
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges).expect("valid clique"))
}

/// The generalized theta graph. Hubs are `0` and `1`; the internal vertices
/// of each branch are numbered consecutively, branch by branch, from the
/// side of hub `0`.
pub fn theta(lengths: &[usize]) -> Result<Graph, GeneratorError> {
    if lengths.len() < 2 {
        return Err(GeneratorError::InvalidParameters("theta needs at least two branches".into()));
    }
    if lengths.contains(&0) {
        return Err(GeneratorError::InvalidParameters("theta branch lengths must be >= 1".into()));
    }
    if lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(GeneratorError::InvalidParameters(
            "at most one theta branch may have length 1".into(),
        ));
    }
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Ok(Graph::new(n, &edges).expect("valid theta graph"))
}
