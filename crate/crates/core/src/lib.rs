//! Strong equivalence of finite graphs.
//!
//! Two graphs `G` and `H` are strongly equivalent under a property when
//! `G ∪ F` and `H ∪ F` agree on the property for every graph `F`. This crate
//! decides that relation for several properties from their structural
//! characterizations ([`deciders`]), builds separating extensions for
//! non-equivalent pairs ([`witnesses`]), and checks both against a bounded
//! brute-force search ([`oracle`]). [`setcore`] models the same operator on
//! the subsets of a small finite set.

pub mod deciders;
pub mod dense;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod properties;
pub mod setcore;
pub mod witnesses;

pub use deciders::{decide, DecisionOutcome, PropertySelector, Verdict};
pub use error::{Error, Result};
pub use graph::{parse_graph, serialize_graph, Edge, Graph, VertexLabel};
pub use oracle::{refute_bounded, OracleBudget, OracleOutcome};
pub use witnesses::{verify_witness, witness_for, Side, Witness};
