//! Distance-damped network descriptors for small connected graphs.
//!
//! Every descriptor here damps a classical distance quantity by `λ^d` for a
//! parameter `λ ∈ (0, 1)`, so remote pairs contribute geometrically less:
//!
//! * transmission `t(u) = Σ_v d(u,v)·λ^{d(u,v)}`,
//! * edge betweenness `b(e) = Σ_{pairs} (σ_e/σ)·λ^{d(k,l)}`,
//! * vertex centrality `c(u) = Σ_{e ∋ u} b(e)`,
//! * networkness `N(u) = c(u)/t(u)` and surplus `ν(u) = c(u) − t(u)`.
//!
//! [`descriptors`] computes them exactly; [`bounds`] carries closed forms
//! for the extremes of their per-graph aggregates together with the
//! families attaining them; [`generators`] builds those families;
//! [`search`] verifies every bound exhaustively over all labeled connected
//! graphs on up to eight vertices; [`graph`] is the shared adjacency-list
//! representation with an edge-list text format.

#![forbid(unsafe_code)]

pub mod bounds;
pub mod descriptors;
pub mod generators;
pub mod graph;
pub mod search;

pub use bounds::{descriptor_bounds, BoundSet, StationaryPoints};
pub use descriptors::{
    aggregates, betweenness, descriptor_table, transmission, AggregateSummary, DescriptorError,
    DescriptorTable, Extremum, Lambda,
};
pub use generators::GeneratorError;
pub use graph::{parse_edge_list, write_edge_list, EdgeListError, Graph, GraphError, VertexId};
pub use search::{
    probe_conjecture, probe_open_problems, random_connected, verify_claims, ConjectureReport,
    GraphCode, OpenProblemsReport, SearchError, VerificationReport,
};
