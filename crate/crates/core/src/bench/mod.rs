//! Experiment harness: dataset specs, seeded single runs, sweeps over
//! `(eta, alpha)` and CSV output.

mod report;
mod sweep;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

pub use report::{emit_csv, parse_csv, prepare_dataset, read_csv, run_once, write_csv, RunReport, CSV_HEADER};
pub use sweep::{default_alphas, default_etas, run_sweep, ExperimentConfig, TradeoffRecord};

use crate::algorithms::{self, Clustering, QueryRate, RunTrace};
use crate::error::{Error, Result};
use crate::exact;
use crate::instance::{self, GroundTruthPartition, InstanceFormat, LabeledInstance};
use crate::metrics;
use crate::oracle::{QueryOracle, SimilarityOracle};
use crate::seed;

/// Failure probability used for the default ACR run count.
pub const ACR_DEFAULT_FAILURE: f64 = 0.1;

/// Where an instance comes from.
#[derive(Debug, Clone, PartialEq)]
pub enum DatasetSpec {
    /// The 900-node, 30-cluster skewed clique union.
    Skew,
    /// Clique union with explicit sizes.
    Cliques(Vec<usize>),
    /// `n` nodes dropped uniformly into `d` cliques.
    LbCliques {
        n: usize,
        d: usize,
    },
    /// Planted lower-bound construction with `k = 1/epsilon` groups.
    LbPlanted {
        n: usize,
        epsilon: f64,
        alpha: f64,
    },
    /// Stochastic block model over the given cluster sizes.
    Sbm {
        sizes: Vec<usize>,
        p_in: f64,
        p_out: f64,
    },
    File {
        path: PathBuf,
        format: InstanceFormat,
    },
}

#[derive(Debug, Clone)]
pub struct Dataset {
    pub id: String,
    pub instance: LabeledInstance,
    pub truth: Option<GroundTruthPartition>,
}

fn parse_sizes(s: &str) -> Result<Vec<usize>> {
    let mut sizes = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        let bad = || Error::param(format!("bad cluster size `{item}`"));
        if let Some((count, size)) = item.split_once('x') {
            let count: usize = count.parse().map_err(|_| bad())?;
            let size: usize = size.parse().map_err(|_| bad())?;
            sizes.extend(std::iter::repeat_n(size, count));
        } else {
            sizes.push(item.parse().map_err(|_| bad())?);
        }
    }
    Ok(sizes)
}

fn parse_field<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.parse().map_err(|_| Error::param(format!("bad {what} `{s}`")))
}

impl DatasetSpec {
    /// Parses `skew`, `cliques:5,5,3` or `cliques:30x30`, `lb-cliques:N:D`,
    /// `planted:N:EPS[:ALPHA]`, `sbm:SIZES:P_IN:P_OUT`, or `file:PATH`
    /// (with `format` applying to files).
    pub fn parse(s: &str, format: InstanceFormat) -> Result<Self> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let parts: Vec<&str> = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(':').collect()
        };
        match (kind, parts.as_slice()) {
            ("skew", []) => Ok(DatasetSpec::Skew),
            ("cliques", [sizes]) => Ok(DatasetSpec::Cliques(parse_sizes(sizes)?)),
            ("lb-cliques", [n, d]) => Ok(DatasetSpec::LbCliques {
                n: parse_field(n, "node count")?,
                d: parse_field(d, "clique count")?,
            }),
            ("planted", [n, eps, rest @ ..]) if rest.len() <= 1 => Ok(DatasetSpec::LbPlanted {
                n: parse_field(n, "node count")?,
                epsilon: parse_field(eps, "epsilon")?,
                alpha: rest
                    .first()
                    .map_or(Ok(instance::DEFAULT_PLANTED_ALPHA), |a| parse_field(a, "alpha"))?,
            }),
            ("sbm", [sizes, p_in, p_out]) => Ok(DatasetSpec::Sbm {
                sizes: parse_sizes(sizes)?,
                p_in: parse_field(p_in, "p_in")?,
                p_out: parse_field(p_out, "p_out")?,
            }),
            ("file", _) if !rest.is_empty() => Ok(DatasetSpec::File {
                path: PathBuf::from(rest),
                format,
            }),
            _ => Err(Error::param(format!("unrecognised dataset `{s}`"))),
        }
    }

    /// Short identifier used in CSV rows.
    pub fn id(&self) -> String {
        match self {
            DatasetSpec::Skew => "skew".into(),
            DatasetSpec::Cliques(sizes) => format!("cliques-n{}-k{}", sizes.iter().sum::<usize>(), sizes.len()),
            DatasetSpec::LbCliques { n, d } => format!("lb-cliques-n{n}-d{d}"),
            DatasetSpec::LbPlanted { n, epsilon, alpha } => format!("planted-n{n}-eps{epsilon}-a{alpha}"),
            DatasetSpec::Sbm { sizes, .. } => format!("sbm-n{}-k{}", sizes.iter().sum::<usize>(), sizes.len()),
            DatasetSpec::File { path, .. } => path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "file".into()),
        }
    }

    /// Generates or loads the instance. `seed` drives generators only.
    pub fn build(&self, seed: u64) -> Result<Dataset> {
        let (instance, truth) = match self {
            DatasetSpec::Skew => {
                let (i, t) = instance::generate_skew(seed);
                (i, Some(t))
            }
            DatasetSpec::Cliques(sizes) => {
                let (i, t) = instance::generate_clique_union(sizes, seed)?;
                (i, Some(t))
            }
            DatasetSpec::LbCliques { n, d } => {
                let (i, t) = instance::generate_lb_cliques(*n, *d, seed)?;
                (i, Some(t))
            }
            DatasetSpec::LbPlanted { n, epsilon, alpha } => {
                let p = instance::generate_lb_planted(*n, *epsilon, *alpha, seed)?;
                (p.instance, Some(p.truth))
            }
            DatasetSpec::Sbm { sizes, p_in, p_out } => {
                let (i, t) = instance::generate_planted_partition(sizes, *p_in, *p_out, seed)?;
                (i, Some(t))
            }
            DatasetSpec::File { path, format } => instance::load_instance(path, *format)?,
        };
        Ok(Dataset {
            id: self.id(),
            instance,
            truth,
        })
    }
}

/// Algorithm selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Acc,
    Access,
    Kwik,
    /// ACR with `runs` ACC executions; default `48⌈ln(n/0.1)⌉`.
    Acr {
        runs: Option<usize>,
    },
    /// ERM with `samples` queried pairs; default `n⌈f(n)⌉`.
    Erm {
        samples: Option<u64>,
    },
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = match s.split_once(':') {
            Some((name, arg)) => (name, Some(arg)),
            None => (s, None),
        };
        match (name, arg) {
            ("acc", None) => Ok(Algorithm::Acc),
            ("access", None) => Ok(Algorithm::Access),
            ("kwik", None) => Ok(Algorithm::Kwik),
            ("acr", arg) => Ok(Algorithm::Acr {
                runs: arg.map(|a| parse_field(a, "run count")).transpose()?,
            }),
            ("erm", arg) => Ok(Algorithm::Erm {
                samples: arg.map(|a| parse_field(a, "sample count")).transpose()?,
            }),
            _ => Err(Error::param(format!(
                "unknown algorithm `{s}` (acc|access|kwik|acr[:K]|erm[:Q])"
            ))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Algorithm::Acc => f.write_str("acc"),
            Algorithm::Access => f.write_str("access"),
            Algorithm::Kwik => f.write_str("kwik"),
            Algorithm::Acr { runs: None } => f.write_str("acr"),
            Algorithm::Acr { runs: Some(k) } => write!(f, "acr:{k}"),
            Algorithm::Erm { samples: None } => f.write_str("erm"),
            Algorithm::Erm { samples: Some(q) } => write!(f, "erm:{q}"),
        }
    }
}

/// Result of a single seeded execution.
#[derive(Debug, Clone)]
pub struct Execution {
    pub clustering: Clustering,
    pub queries: u64,
    pub cost: u64,
    /// Present for the pivot algorithms.
    pub trace: Option<RunTrace>,
}

/// Runs `algorithm` once on `instance` with rate `f(x) = x^alpha`.
pub fn execute(
    instance: &LabeledInstance,
    algorithm: Algorithm,
    alpha: f64,
    budget: Option<u64>,
    run_seed: u64,
) -> Result<Execution> {
    let rate = QueryRate::power(alpha)?;
    let n = instance.n();
    let mut oracle = match budget {
        Some(b) => QueryOracle::with_budget(instance, b),
        None => QueryOracle::new(instance),
    };
    let mut rng = seed::rng(run_seed);
    let (clustering, queries, trace) = match algorithm {
        Algorithm::Acc => {
            let (c, t) = algorithms::acc(&mut oracle, &rate, &mut rng)?;
            (c, t.queries, Some(t))
        }
        Algorithm::Access => {
            let (c, t) = algorithms::access(&mut oracle, &rate, &mut rng)?;
            (c, t.queries, Some(t))
        }
        Algorithm::Kwik => {
            let (c, t) = algorithms::kwikcluster(&mut oracle, &mut rng)?;
            (c, t.queries, Some(t))
        }
        Algorithm::Acr { runs } => {
            if budget.is_some() {
                return Err(Error::param(
                    "ACR runs its own oracles; a query budget is not supported",
                ));
            }
            let runs = match runs {
                Some(k) => k,
                None => algorithms::default_runs(n, ACR_DEFAULT_FAILURE)?,
            };
            let out = algorithms::acr(instance, &rate, runs, run_seed)?;
            (out.clustering, out.queries, None)
        }
        Algorithm::Erm { samples } => {
            let samples = samples.unwrap_or_else(|| (n * rate.ceil_at(n)).max(1) as u64);
            let c = exact::erm_cc(&mut oracle, samples, &mut rng)?;
            (c, oracle.queries_issued(), None)
        }
    };
    let cost = metrics::cost(instance, &clustering)?;
    Ok(Execution {
        clustering,
        queries,
        cost,
        trace,
    })
}
