//! Line-format certificates and a stand-alone replay checker.
//!
//! The checker shares nothing with the search engine: it keeps its own
//! vertex set and recomputes every degree from scratch at each step.

use thiserror::Error;

use super::ReductionStep;
use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("step {step}: {message}")]
    Illegal { step: usize, message: String },
    #[error("{0} vertices remain after the last step")]
    NotEmpty(usize),
}

/// A replayed step, with the edges it removed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AppliedStep {
    Isolated(usize),
    /// The leaf and its unique neighbor at deletion time.
    Leaf { vertex: usize, neighbor: usize },
    /// The full ear, endpoints included.
    Ear(Vec<usize>),
}

/// Result of replaying a sequence: what each step removed and which vertices
/// are left.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replay {
    pub applied: Vec<AppliedStep>,
    pub remaining: Vec<usize>,
}

/// Parses `I v`, `L v` and `E v0 ... vk` lines; blank lines and `#` comments
/// are skipped.
pub fn parse_certificate(text: &str) -> Result<Vec<ReductionStep>, CertificateError> {
    let mut steps = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| CertificateError::Parse { line: i + 1, message };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap();
        let ids = tokens
            .map(|t| t.parse::<usize>().map_err(|_| err(format!("`{t}` is not a vertex id"))))
            .collect::<Result<Vec<_>, _>>()?;
        let step = match (tag, ids.len()) {
            ("I", 1) => ReductionStep::DeleteIsolated(ids[0]),
            ("L", 1) => ReductionStep::DeleteLeaf(ids[0]),
            ("E", k) if k >= 3 => ReductionStep::DeleteEarInternals(ids),
            ("E", _) => return Err(err("an ear needs at least three vertices".into())),
            ("I" | "L", _) => return Err(err(format!("`{tag}` takes exactly one vertex"))),
            _ => return Err(err(format!("unknown step `{tag}`"))),
        };
        steps.push(step);
    }
    Ok(steps)
}

/// Replays `steps` on `g`, checking that each one is a legal p-reduction
/// (with ears of length exactly `p` when `exact_ears` is set).
pub fn replay(g: &Graph, p: usize, exact_ears: bool, steps: &[ReductionStep]) -> Result<Replay, CertificateError> {
    let n = g.order();
    let mut alive = vec![true; n];
    let live_degree = |alive: &[bool], v: usize| g.neighbors(v).iter().filter(|&&w| alive[w]).count();
    let mut applied = Vec::with_capacity(steps.len());
    for (i, step) in steps.iter().enumerate() {
        let illegal = |message: String| CertificateError::Illegal { step: i + 1, message };
        let check_alive = |alive: &[bool], v: usize| {
            if v >= n || !alive[v] {
                Err(illegal(format!("vertex {v} is not present")))
            } else {
                Ok(())
            }
        };
        match step {
            ReductionStep::DeleteIsolated(v) => {
                check_alive(&alive, *v)?;
                let d = live_degree(&alive, *v);
                if d != 0 {
                    return Err(illegal(format!("vertex {v} has degree {d}, not 0")));
                }
                alive[*v] = false;
                applied.push(AppliedStep::Isolated(*v));
            }
            ReductionStep::DeleteLeaf(v) => {
                check_alive(&alive, *v)?;
                let live: Vec<usize> = g.neighbors(*v).iter().copied().filter(|&w| alive[w]).collect();
                if live.len() != 1 {
                    return Err(illegal(format!("vertex {v} has degree {}, not 1", live.len())));
                }
                alive[*v] = false;
                applied.push(AppliedStep::Leaf { vertex: *v, neighbor: live[0] });
            }
            ReductionStep::DeleteEarInternals(ear) => {
                for &v in ear {
                    check_alive(&alive, v)?;
                }
                let len = ear.len() - 1;
                if len < p || (exact_ears && len != p) {
                    let want = if exact_ears { "exactly" } else { "at least" };
                    return Err(illegal(format!("ear has length {len}, need {want} {p}")));
                }
                let mut sorted = ear.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() != ear.len() {
                    return Err(illegal("ear repeats a vertex".into()));
                }
                if let Some(w) = ear.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                    return Err(illegal(format!("{} and {} are not adjacent", w[0], w[1])));
                }
                for &v in &ear[1..len] {
                    let d = live_degree(&alive, v);
                    if d != 2 {
                        return Err(illegal(format!("internal vertex {v} has degree {d}, not 2")));
                    }
                }
                for &v in &ear[1..len] {
                    alive[v] = false;
                }
                applied.push(AppliedStep::Ear(ear.clone()));
            }
        }
    }
    let remaining = (0..n).filter(|&v| alive[v]).collect();
    Ok(Replay { applied, remaining })
}

/// Checks that `steps` replay legally on `g` and empty it.
pub fn check_certificate(g: &Graph, p: usize, exact_ears: bool, steps: &[ReductionStep]) -> Result<Replay, CertificateError> {
    let r = replay(g, p, exact_ears, steps)?;
    if r.remaining.is_empty() {
        Ok(r)
    } else {
        Err(CertificateError::NotEmpty(r.remaining.len()))
    }
}
