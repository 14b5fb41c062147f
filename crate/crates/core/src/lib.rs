//! Seed-driven local clustering on attributed graphs.
//!
//! Given a graph, a vertex attribute matrix, a seed vertex and a set of
//! designated attributes, [`run_loclu`] returns a single cluster around the
//! seed that is unimodal both in a power-iteration embedding of the graph and
//! in every designated attribute. Unimodality is judged with Hartigans' dip
//! test ([`dip`]), and the cluster is carved out by repeatedly keeping the side
//! or modal interval of the seed ([`localclust`]).
//!
//! The crate also ships the quality measures used to score a cluster
//! (graph/attribute unimodality and their sum, "compactness"), the NMI and F1
//! evaluation metrics, a planted-partition benchmark generator, and the file
//! loaders used by the `loclu` binary.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod attributes;
pub mod cli;
pub mod cluster;
pub mod dip;
pub mod error;
pub mod graph;
pub mod io;
pub mod localclust;
pub mod measures;
pub mod synthgen;

pub use attributes::AttributeMatrix;
pub use cluster::{run_loclu, verify_unimodality, ClusterResult, ColumnDip, Preference};
pub use dip::{dip_oracle, dip_pvalue, dip_statistic, dip_test, DipConfig, DipResult};
pub use error::{Error, Result};
pub use graph::{
    exact_second_eigenvector, power_iteration, transition_apply, EmbeddingVector, Graph,
    PowerIterConfig,
};
pub use localclust::{local_clustering, CandidateSet};
pub use measures::{attribute_unimodality, compactness, f1, graph_unimodality, nmi};
pub use synthgen::{generate, variable_size_spec, SyntheticInstance, SyntheticSpec};
