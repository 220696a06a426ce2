//! Degree sequences, 2-trees, and exhaustive verification of extremal
//! degree-sum bounds for 2-tree containment.
//!
//! A sequence is *potentially H-graphic* if some realization contains H as a
//! subgraph. This crate provides the machinery to check, construct, and
//! falsify such statements for the family of 2-trees on k vertices:
//!
//! * [`degseq`] — non-increasing degree sequences: graphicality, laying off,
//!   realization, degree-sum thresholds.
//! * [`graph`] — small simple graphs: exact canonical forms, subgraph
//!   embedding, realization spaces under 2-switches.
//! * [`twotree`] — recognition, ear structure, and enumeration of 2-trees.
//! * [`hosts`] — the fixed host graphs that contain every 2-tree on k
//!   vertices, and their recursive structure.
//! * [`potential`] — the reduction chains, case analysis, and constructive
//!   realization routines; plus exhaustive/sampled theorem verification.

pub mod degseq;
pub mod graph;
pub mod hosts;
pub mod potential;
pub mod twotree;

pub use degseq::{thresholds, DegreeSequence, ThresholdReport};
pub use graph::{Embedding, SimpleGraph};

use thiserror::Error;

/// Unified error type for the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An index or size argument is outside its documented range.
    #[error("argument out of range: {0}")]
    Range(String),
    /// A sequence failed a structural validity check.
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    /// Laying off is undefined here; the input cannot be graphic.
    #[error("layoff undefined: {0}")]
    LayoffUndefined(String),
    /// Operation requires a graphic sequence.
    #[error("sequence is not graphic: {0}")]
    NotGraphic(String),
    /// Operation requires a 2-tree.
    #[error("graph is not a 2-tree: {0}")]
    NotTwoTree(String),
    /// A named-graph or format string could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
    /// Input violates a documented hypothesis of the routine.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    /// A claimed-impossible situation was reached; counterexample material.
    #[error("falsification: {0}")]
    Falsification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
