//! Circuit theory of 4-regular multigraphs in exact arithmetic.
//!
//! Graphs are stored by half-edges. An Euler system is a set of signed
//! double occurrence words, and a circuit partition is one transition per
//! vertex. From a pair `(C, P)` the crate builds interlacement matrices over
//! GF(2) and the integers, the touch-graph of `P`, and its cycle space.

pub mod counting;
pub mod cycles;
pub mod error;
pub mod euler;
pub mod format;
pub mod graph;
pub mod interlace;
pub mod linalg;
pub mod matrix;
pub mod partition;
pub mod report;
pub mod sweep;
pub mod touch;
pub mod transforms;

pub use error::{Error, Result};
pub use euler::{euler_system, Passage, Sign, SignedEulerSystem, SignedOccurrence};
pub use format::{parse_euler_on, parse_graph, parse_transitions, ParsedGraph};
pub use graph::{FourRegularGraph, HalfEdgeId, VertexId};
pub use matrix::{Gf2Matrix, IntMatrix, Matrix, RatMatrix};
pub use partition::{
    enumerate_partitions, label_transitions, trace_circuits, transition_from_label,
    CircuitPartition, Transition, TransitionLabel,
};
