//! End-vertex problems for graph searches: can a given vertex be visited last
//! by some BFS, DFS, LBFS, LDFS, MCS or MNS ordering?

pub mod chordal;
pub mod crosscheck;
pub mod dispatch;
pub mod dot;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod interval;
pub mod reduction;
pub mod report;
pub mod samples;
pub mod search;
mod sets;

pub use chordal::{SeparatorChain, WeightedCliqueGraph};
pub use dispatch::{end_vertex, ClassHint, RunConfig};
pub use error::{Error, Result};
pub use generate::GraphClass;
pub use graph::{Graph, VertexOrdering};
pub use interval::{CliquePath, IntervalModel};
pub use reduction::{Literal, ReductionGraph, Sat3Instance};
pub use report::{Algorithm, Decision, EndVertexReport};
pub use search::{Direction, SearchKind, TieBreaker};
