use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{emit_csv, execute, Algorithm, DatasetSpec};
use crate::error::{Error, Result};
use crate::instance;
use crate::seed;

pub(super) const STREAM_DATASET: u64 = 0;
pub(super) const STREAM_PERTURB: u64 = 1;
pub(super) const STREAM_RUNS: u64 = 2;

/// `{0, 0.1, 0.5, 1}`
pub fn default_etas() -> Vec<f64> {
    vec![0.0, 0.1, 0.5, 1.0]
}

/// `0, 0.05, ..., 1`
pub fn default_alphas() -> Vec<f64> {
    (0..=20).map(|i| i as f64 / 20.0).collect()
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub dataset: DatasetSpec,
    pub etas: Vec<f64>,
    pub alphas: Vec<f64>,
    pub repetitions: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    pub output: Option<PathBuf>,
}

impl ExperimentConfig {
    pub fn new(dataset: DatasetSpec, algorithm: Algorithm, seed: u64) -> Self {
        ExperimentConfig {
            dataset,
            etas: default_etas(),
            alphas: default_alphas(),
            repetitions: 20,
            seed,
            algorithm,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::param("repetitions must be at least 1"));
        }
        if self.etas.is_empty() || self.alphas.is_empty() {
            return Err(Error::param("eta and alpha grids must be non-empty"));
        }
        if let Some(a) = self.alphas.iter().find(|a| !(0.0..=1.0).contains(*a)) {
            return Err(Error::param(format!("alpha {a} outside [0, 1]")));
        }
        if let Some(e) = self.etas.iter().find(|e| !(**e >= 0.0 && e.is_finite())) {
            return Err(Error::param(format!("eta {e} must be finite and nonnegative")));
        }
        Ok(())
    }
}

/// One `(eta, alpha)` grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TradeoffRecord {
    pub dataset: String,
    pub eta: f64,
    pub alpha: f64,
    pub reps: usize,
    pub mu_q: f64,
    pub var_q: f64,
    pub mu_delta: f64,
    pub var_delta: f64,
    pub seed: u64,
}

fn mean_and_variance(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let ss: f64 = xs.iter().map(|x| (x - mean) * (x - mean)).sum();
    (mean, ss / (n - 1.0))
}

fn sorted_grid(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// Runs the full grid. The perturbed instance for each `eta` is drawn once
/// and shared by every `alpha`; repetition `r` at grid point `(i, j)` uses
/// its own derived seed, so the result depends only on the config.
pub fn run_sweep(config: &ExperimentConfig) -> Result<Vec<TradeoffRecord>> {
    config.validate()?;
    let master = config.seed;
    let dataset = config.dataset.build(seed::derive(master, &[STREAM_DATASET]))?;
    let etas = sorted_grid(&config.etas);
    let alphas = sorted_grid(&config.alphas);

    let mut records = Vec::with_capacity(etas.len() * alphas.len());
    for (i, &eta) in etas.iter().enumerate() {
        let perturbed = instance::perturb(
            &dataset.instance,
            eta,
            seed::derive(master, &[STREAM_PERTURB, i as u64]),
        )?;
        for (j, &alpha) in alphas.iter().enumerate() {
            let runs = (0..config.repetitions as u64)
                .into_par_iter()
                .map(|r| {
                    let s = seed::derive(master, &[STREAM_RUNS, i as u64, j as u64, r]);
                    execute(&perturbed, config.algorithm, alpha, None, s)
                })
                .collect::<Result<Vec<_>>>()?;
            let queries: Vec<f64> = runs.iter().map(|e| e.queries as f64).collect();
            let costs: Vec<f64> = runs.iter().map(|e| e.cost as f64).collect();
            let (mu_q, var_q) = mean_and_variance(&queries);
            let (mu_delta, var_delta) = mean_and_variance(&costs);
            records.push(TradeoffRecord {
                dataset: dataset.id.clone(),
                eta,
                alpha,
                reps: config.repetitions,
                mu_q,
                var_q,
                mu_delta,
                var_delta,
                seed: master,
            });
        }
    }
    if let Some(path) = &config.output {
        emit_csv(&records, path)?;
    }
    Ok(records)
}
