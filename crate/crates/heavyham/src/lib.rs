//! Heavy-subgraph Hamiltonicity toolkit.
//!
//! A library and CLI for checking pattern heaviness and freeness, exact
//! desk-scale Hamiltonicity, Ore-cycle repair, composed-graph recognition
//! and path extraction, good-pair cycle merging, the non-Hamiltonian
//! witness families, and an exhaustive/randomized implication-survey
//! harness with certified counterexamples.

pub mod brute;
pub mod composed;
pub mod constructions;
pub mod cycles;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod ore;
pub mod patterns;

pub use cycles::{CycleSeq, HamiltonianVerdict, LongestCycleVerdict, PathSeq, DEFAULT_BUDGET};
pub use graph::{Graph, GraphError, VertexSet};
pub use patterns::{Embedding, PatternId};
