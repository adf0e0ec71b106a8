//! Pivot-based clustering with a query budget.
//!
//! All algorithms draw randomness from a caller-supplied RNG and access
//! labels only through a [`SimilarityOracle`](crate::oracle::SimilarityOracle).

mod acr;
mod clustering;
mod pivot;
mod rate;

pub use acr::{acr, default_runs, majority_tags, AcrOutcome};
pub use clustering::Clustering;
pub use pivot::{acc, access, kwikcluster, Round, RunTrace, Stop};
pub use rate::{ceil_tolerant, QueryRate};
