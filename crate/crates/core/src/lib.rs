//! Resolvability toolkit for multistage interconnection networks.
//!
//! Builds butterfly, Benes and silicate networks, detects twin vertices,
//! verifies `k`-resolving sets, solves the `k`-metric dimension exactly, and
//! certifies the closed-form fault-tolerant metric dimensions of the three
//! network families instance by instance.

pub mod bitset;
pub mod distance;
pub mod generators;
pub mod graph;
pub mod resolving;
pub mod solver;
pub mod theorems;
pub mod twins;

pub use bitset::VertexSet;
pub use distance::{all_pairs_distances, Distance, DistanceMatrix};
pub use generators::{Classical, Family, GeneratorError};
pub use graph::{build_graph, Graph, GraphError, Vertex};
pub use resolving::{
    is_fault_tolerant_by_removal, is_k_resolving, is_resolving_by_vectors, kappa,
    DistinguisherTable, ResolveError, Violation,
};
pub use solver::{solve_exhaustive_oracle, solve_k_metric_dimension, SolveResult};
pub use theorems::{
    certify_all, certify_benes, certify_butterfly, certify_silicate, Certificate, Report,
    TheoremError, Verdict,
};
pub use twins::{all_vertices_twins, twin_partition, twin_vertices, TwinKind, TwinPartition};
