//! Semistability of multidegrees on dual graphs of stable curves,
//! orientations realizing them, and the combinatorial criteria for the
//! effective locus in degree `g - 1` to be a divisor.

pub mod cli;
pub mod error;
mod exec;
pub mod family;
pub mod fixtures;
mod flow;
pub mod graph;
pub mod io;
pub mod orientation;
pub mod semistability;
pub mod theta;

pub use error::{Error, Result};
pub use exec::is_parallel;
pub use graph::{DualGraph, Edge, Multidegree, Vertex, VertexSet};
pub use orientation::{Direction, MintyKind, MintyWitness, Orientation};
pub use semistability::{InequalityStatus, InequalityVerdict, ReductionTarget};
pub use theta::{ThetaReason, ThetaVerdict, ThetaWitness};
