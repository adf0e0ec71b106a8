use std::fmt::Write as _;
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::sweep::{STREAM_DATASET, STREAM_PERTURB, STREAM_RUNS};
use super::{execute, Algorithm, Dataset, DatasetSpec, TradeoffRecord};
use crate::algorithms::{QueryRate, Stop};
use crate::error::{Error, Result};
use crate::instance;
use crate::metrics::{self, Recovery};
use crate::seed;

pub const CSV_HEADER: &str = "dataset,eta,alpha,reps,mu_q,var_q,mu_delta,var_delta,seed";

/// Writes records with a header row, in the given order.
pub fn write_csv<W: Write>(records: &[TradeoffRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(|e| Error::Csv(e.into()))?;
    Ok(())
}

pub fn emit_csv(records: &[TradeoffRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv(records, std::io::BufWriter::new(file))
}

/// Parses CSV produced by [`write_csv`]; the header must match exactly.
pub fn parse_csv<R: Read>(input: R) -> Result<Vec<TradeoffRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::contract(format!("unexpected CSV header `{}`", header.join(","))));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<TradeoffRecord>> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_csv(std::io::BufReader::new(file))
}

/// Outcome of one seeded run, printable as `key=value` lines.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub dataset: String,
    pub algorithm: Algorithm,
    pub n: usize,
    pub edges: usize,
    pub alpha: f64,
    pub eta: f64,
    pub seed: u64,
    pub queries: u64,
    /// `n⌈f(n)⌉` for the pivot algorithms.
    pub query_bound: u64,
    pub cost: u64,
    pub clusters: usize,
    pub rounds: Option<usize>,
    pub probe_failures: Option<usize>,
    pub stop: Option<Stop>,
    /// One entry per latent cluster, when ground truth is known.
    pub recovery: Vec<Recovery>,
}

fn stop_label(stop: &Stop) -> String {
    match stop {
        Stop::Exhausted => "exhausted".into(),
        Stop::RoundCap { remaining } => format!("round-cap({remaining})"),
        Stop::Sparse { remaining } => format!("sparse({remaining})"),
        Stop::NoPositiveProbe { remaining, probes } => format!("no-positive-probe({remaining},{probes})"),
    }
}

impl RunReport {
    pub fn to_kv(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: &dyn std::fmt::Display| {
            let _ = writeln!(s, "{k}={v}");
        };
        kv("dataset", &self.dataset);
        kv("algorithm", &self.algorithm);
        kv("n", &self.n);
        kv("edges", &self.edges);
        kv("alpha", &self.alpha);
        kv("eta", &self.eta);
        kv("seed", &self.seed);
        kv("queries", &self.queries);
        kv("query_bound", &self.query_bound);
        kv("cost", &self.cost);
        kv("clusters", &self.clusters);
        if let Some(r) = self.rounds {
            kv("rounds", &r);
        }
        if let Some(p) = self.probe_failures {
            kv("probe_failures", &p);
        }
        if let Some(stop) = &self.stop {
            kv("stop", &stop_label(stop));
        }
        if !self.recovery.is_empty() {
            let exact = self.recovery.iter().filter(|r| r.distance == 0).count();
            kv("latent_clusters", &self.recovery.len());
            kv("recovered_exactly", &exact);
            let dists: Vec<String> = self.recovery.iter().map(|r| r.distance.to_string()).collect();
            kv("recovery_distances", &dists.join(","));
        }
        s
    }
}

/// The dataset that `run_once` and a single-`eta` sweep see under `master`:
/// generated from the dataset stream, then perturbed from the first
/// perturbation stream. Ground truth refers to the unperturbed instance.
pub fn prepare_dataset(dataset: &DatasetSpec, eta: f64, master: u64) -> Result<Dataset> {
    let mut data = dataset.build(seed::derive(master, &[STREAM_DATASET]))?;
    data.instance = instance::perturb(&data.instance, eta, seed::derive(master, &[STREAM_PERTURB, 0]))?;
    Ok(data)
}

/// Builds the dataset, perturbs it, and runs `algorithm` once. Seeds follow
/// the sweep streams, so this reproduces repetition 0 of a one-point sweep
/// with the same master seed.
pub fn run_once(
    dataset: &DatasetSpec,
    algorithm: Algorithm,
    alpha: f64,
    eta: f64,
    budget: Option<u64>,
    master: u64,
) -> Result<RunReport> {
    let data = prepare_dataset(dataset, eta, master)?;
    let inst = &data.instance;
    let exec = execute(
        inst,
        algorithm,
        alpha,
        budget,
        seed::derive(master, &[STREAM_RUNS, 0, 0, 0]),
    )?;
    let n = inst.n();
    let recovery = data
        .truth
        .as_ref()
        .map(|t| {
            t.groups()
                .iter()
                .map(|g| metrics::recovery_distance(g, &exec.clustering))
                .collect()
        })
        .unwrap_or_default();
    Ok(RunReport {
        dataset: data.id,
        algorithm,
        n,
        edges: inst.edge_count(),
        alpha,
        eta,
        seed: master,
        queries: exec.queries,
        query_bound: n as u64 * QueryRate::power(alpha)?.ceil_at(n) as u64,
        cost: exec.cost,
        clusters: exec.clustering.num_clusters(),
        rounds: exec.trace.as_ref().map(|t| t.rounds.len()),
        probe_failures: exec.trace.as_ref().map(|t| t.probe_failures()),
        stop: exec.trace.as_ref().map(|t| t.stop),
        recovery,
    })
}
