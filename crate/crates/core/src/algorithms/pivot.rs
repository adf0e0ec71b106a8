use rand::Rng;

use super::rate::ceil_tolerant;
use super::{Clustering, QueryRate};
use crate::error::Result;
use crate::instance::pairs;
use crate::oracle::SimilarityOracle;

/// One pivot round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub pivot: usize,
    /// `|V_r|` at the start of the round, pivot included.
    pub residual: usize,
    /// `|S_r|`, the number of probe queries made from the pivot.
    pub sampled: usize,
    /// Random pair probes spent on the density check (early-stopping variant).
    pub edge_probes: usize,
    /// No probe from the pivot came back positive, so the pivot was emitted alone.
    pub probe_failed: bool,
    pub cluster_size: usize,
}

/// Why a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stop {
    /// Every node was assigned by pivot rounds.
    Exhausted,
    /// The round cap was reached; `remaining` nodes became singletons.
    RoundCap { remaining: usize },
    /// The residual had too few pairs to be worth exploring.
    Sparse { remaining: usize },
    /// The density probes found no positive pair.
    NoPositiveProbe { remaining: usize, probes: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunTrace {
    pub rounds: Vec<Round>,
    pub queries: u64,
    pub stop: Stop,
}

impl RunTrace {
    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rounds.iter().map(|r| r.pivot)
    }

    pub fn probe_failures(&self) -> usize {
        self.rounds.iter().filter(|r| r.probe_failed).count()
    }
}

/// Removes a uniform pivot from `alive`, probes `sample` random others
/// (all of them when `None`), and scans the rest if any probe is positive.
/// The pivot's cluster is pushed onto `clusters` and removed from `alive`.
fn pivot_round<O, R>(
    oracle: &mut O,
    alive: &mut Vec<usize>,
    sample: Option<usize>,
    rng: &mut R,
    clusters: &mut Vec<Vec<usize>>,
) -> Result<Round>
where
    O: SimilarityOracle + ?Sized,
    R: Rng + ?Sized,
{
    let residual = alive.len();
    let pivot = alive.swap_remove(rng.gen_range(0..residual));
    let m = alive.len();
    let s = sample.unwrap_or(m).min(m);
    if s < m {
        for i in 0..s {
            let j = rng.gen_range(i..m);
            alive.swap(i, j);
        }
    }

    let mut positive = vec![false; m];
    let mut hit = false;
    for i in 0..s {
        positive[i] = oracle.query(pivot, alive[i])?.is_positive();
        hit |= positive[i];
    }
    let mut cluster = vec![pivot];
    if hit {
        for i in s..m {
            positive[i] = oracle.query(pivot, alive[i])?.is_positive();
        }
        let mut rest = Vec::with_capacity(m);
        for (i, &u) in alive.iter().enumerate() {
            if positive[i] {
                cluster.push(u);
            } else {
                rest.push(u);
            }
        }
        *alive = rest;
    }
    let round = Round {
        pivot,
        residual,
        sampled: s,
        edge_probes: 0,
        probe_failed: !hit,
        cluster_size: cluster.len(),
    };
    clusters.push(cluster);
    Ok(round)
}

fn emit_singletons(alive: &mut Vec<usize>, clusters: &mut Vec<Vec<usize>>) -> usize {
    alive.sort_unstable();
    let count = alive.len();
    clusters.extend(alive.drain(..).map(|v| vec![v]));
    count
}

fn finish<O: SimilarityOracle + ?Sized>(
    oracle: &O,
    start: u64,
    clusters: Vec<Vec<usize>>,
    rounds: Vec<Round>,
    stop: Stop,
) -> Result<(Clustering, RunTrace)> {
    let clustering = Clustering::from_clusters(oracle.n(), clusters)?;
    let queries = oracle.queries_issued() - start;
    Ok((clustering, RunTrace { rounds, queries, stop }))
}

/// KwikCluster: each pivot queries every remaining node and takes its
/// positive neighbors. A lone leftover node is emitted without a round.
pub fn kwikcluster<O, R>(oracle: &mut O, rng: &mut R) -> Result<(Clustering, RunTrace)>
where
    O: SimilarityOracle + ?Sized,
    R: Rng + ?Sized,
{
    let start = oracle.queries_issued();
    let mut alive: Vec<usize> = (0..oracle.n()).collect();
    let mut clusters = Vec::new();
    let mut rounds = Vec::new();
    while alive.len() > 1 {
        rounds.push(pivot_round(oracle, &mut alive, None, rng, &mut clusters)?);
    }
    emit_singletons(&mut alive, &mut clusters);
    finish(oracle, start, clusters, rounds, Stop::Exhausted)
}

/// ACC with query rate `f`.
///
/// Round `r` draws a uniform pivot from the residual `V_r`, probes
/// `⌈f(|V_r| - 1)⌉` other residual nodes sampled without replacement, and
/// only if one of them is positive queries the rest and clusters the pivot
/// with all its positive neighbors; otherwise the pivot is a singleton.
/// After `⌈f(n - 1)⌉` rounds the remaining nodes become singletons, so at
/// most `n⌈f(n)⌉` queries are ever made.
pub fn acc<O, R>(oracle: &mut O, rate: &QueryRate, rng: &mut R) -> Result<(Clustering, RunTrace)>
where
    O: SimilarityOracle + ?Sized,
    R: Rng + ?Sized,
{
    let n = oracle.n();
    rate.validate(n)?;
    let start = oracle.queries_issued();
    let cap = rate.ceil_at(n.saturating_sub(1));
    let mut alive: Vec<usize> = (0..n).collect();
    let mut clusters = Vec::new();
    let mut rounds = Vec::new();
    let mut stop = Stop::Exhausted;
    loop {
        match alive.len() {
            0 => break,
            1 => {
                emit_singletons(&mut alive, &mut clusters);
                break;
            }
            _ if rounds.len() >= cap => {
                let remaining = emit_singletons(&mut alive, &mut clusters);
                stop = Stop::RoundCap { remaining };
                break;
            }
            len => {
                let sample = rate.ceil_at(len - 1);
                rounds.push(pivot_round(oracle, &mut alive, Some(sample), rng, &mut clusters)?);
            }
        }
    }
    finish(oracle, start, clusters, rounds, stop)
}

/// ACCESS: ACC with early stopping and no round cap.
///
/// Before each round, if `C(|V_r|, 2) <= 2n²/f(n)` or none of
/// `⌈C(|V_r|, 2)·f(n)/n²⌉` uniformly drawn residual pairs (with
/// replacement) is positive, the residual is emitted as singletons.
/// Otherwise an ACC pivot round runs.
pub fn access<O, R>(oracle: &mut O, rate: &QueryRate, rng: &mut R) -> Result<(Clustering, RunTrace)>
where
    O: SimilarityOracle + ?Sized,
    R: Rng + ?Sized,
{
    let n = oracle.n();
    rate.validate(n)?;
    let start = oracle.queries_issued();
    let f_n = rate.eval(n);
    let n_sq = (n as f64) * (n as f64);
    let sparse_below = 2.0 * n_sq / f_n;
    let mut alive: Vec<usize> = (0..n).collect();
    let mut clusters = Vec::new();
    let mut rounds = Vec::new();
    let stop = loop {
        let m = alive.len();
        if m == 0 {
            break Stop::Exhausted;
        }
        let residual_pairs = pairs(m) as f64;
        if residual_pairs <= sparse_below {
            let remaining = emit_singletons(&mut alive, &mut clusters);
            break Stop::Sparse { remaining };
        }
        let probes = ceil_tolerant(residual_pairs * f_n / n_sq);
        let mut hit = false;
        for _ in 0..probes {
            let a = rng.gen_range(0..m);
            let mut b = rng.gen_range(0..m - 1);
            if b >= a {
                b += 1;
            }
            hit |= oracle.query(alive[a], alive[b])?.is_positive();
        }
        if !hit {
            let remaining = emit_singletons(&mut alive, &mut clusters);
            break Stop::NoPositiveProbe { remaining, probes };
        }
        let sample = rate.ceil_at(m - 1);
        let mut round = pivot_round(oracle, &mut alive, Some(sample), rng, &mut clusters)?;
        round.edge_probes = probes;
        rounds.push(round);
    };
    finish(oracle, start, clusters, rounds, stop)
}
