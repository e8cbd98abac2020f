//! Matching engines: weighted blossom matching and cardinality matching.

pub mod blossom;
pub mod cardinality;

pub use blossom::{max_weight_matching, WeightedMatching};
pub use cardinality::{max_matching_covering, CardinalityMatching};
