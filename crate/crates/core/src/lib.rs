//! Active correlation clustering under a pairwise-query budget.
//!
//! A [`LabeledInstance`](instance::LabeledInstance) holds a hidden ±1
//! similarity over every pair of nodes. Algorithms never read it directly:
//! every label goes through a [`QueryOracle`](oracle::QueryOracle) that
//! counts queries and can enforce a hard budget.
//!
//! - [`algorithms`]: KwikCluster, ACC (budgeted pivot), ACCESS (ACC with
//!   early stopping) and ACR (amplified exact recovery).
//! - [`exact`]: exhaustive optimum, empirical risk minimisation over
//!   sampled pairs, and a VC-shattering checker for small `n`.
//! - [`metrics`]: disagreement cost, bad triangles, knit certificates and
//!   recovery distances.
//! - [`bench`]: seeded sweeps over perturbation level and query rate,
//!   aggregated to CSV.

pub mod algorithms;
pub mod bench;
pub mod error;
pub mod exact;
pub mod instance;
pub mod metrics;
pub mod oracle;
pub mod seed;

pub use algorithms::{Clustering, QueryRate, RunTrace};
pub use error::{Error, Result};
pub use instance::{GroundTruthPartition, Label, LabeledInstance};
pub use oracle::{QueryOracle, SimilarityOracle};
