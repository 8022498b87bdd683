//! Path degeneracy of graphs.
//!
//! A graph is *p-path degenerate* when it can be emptied by repeatedly
//! deleting an isolated vertex, a vertex of degree one, or the internal
//! vertices of a strict ear (a path whose internal vertices have degree 2)
//! of length at least `p`. This crate decides the property with checkable
//! certificates and turns certificates into
//!
//! * edge colorings where every cycle sees many colors
//!   ([`colorings::arboricity_coloring`], [`colorings::acyclic_edge_coloring`]),
//! * vertex orders with small weak reachability sets ([`wcol::weak_order`]),
//!
//! and evaluates the girth thresholds that force path degeneracy in sparse
//! graph classes ([`bounds`]). Brute-force oracles for small graphs sit next
//! to each fast routine.
//!
//! ```
//! use pathdeg::generators::Fixture;
//! use pathdeg::reduction::is_p_path_degenerate;
//!
//! let g = Fixture::Dodecahedron.graph().subdivide(1);
//! assert!(is_p_path_degenerate(&g, 2).unwrap().is_degenerate());
//! assert!(!is_p_path_degenerate(&g, 3).unwrap().is_degenerate());
//! ```

// negated float comparisons reject NaN on purpose
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::int_plus_one)]

pub mod bounds;
pub mod cli;
pub mod colorings;
pub mod density;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod reduction;
pub mod wcol;

pub use graph::{Girth, Graph, GraphError};

use thiserror::Error;

/// Any error raised by the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Generator(#[from] generators::GeneratorError),
    #[error(transparent)]
    Reduction(#[from] reduction::ReductionError),
    #[error(transparent)]
    Certificate(#[from] reduction::CertificateError),
    #[error(transparent)]
    Coloring(#[from] colorings::ColoringError),
    #[error(transparent)]
    Wcol(#[from] wcol::WcolError),
    #[error(transparent)]
    Bounds(#[from] bounds::BoundsError),
    #[error(transparent)]
    Density(#[from] density::DensityError),
    #[error(transparent)]
    Format(#[from] formats::FormatError),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{0}")]
    Usage(String),
}
