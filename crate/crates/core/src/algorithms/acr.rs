use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{acc, Clustering, QueryRate};
use crate::error::{Error, Result};
use crate::instance::LabeledInstance;
use crate::oracle::QueryOracle;
use crate::seed;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcrOutcome {
    pub clustering: Clustering,
    /// Majority tag of every node.
    pub tags: Vec<usize>,
    /// Queries summed over all runs.
    pub queries: u64,
    pub runs: usize,
}

/// `48⌈ln(n/p)⌉`, the number of ACC runs that makes exact recovery hold
/// with probability at least `1 - p`.
pub fn default_runs(n: usize, p: f64) -> Result<usize> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::param(format!("failure probability must lie in (0, 1), got {p}")));
    }
    let k = (n.max(1) as f64 / p).ln().ceil().max(1.0);
    Ok(48 * k as usize)
}

/// Per node, the tag received most often; ties go to the smallest tag.
pub fn majority_tags(runs: &[Vec<usize>]) -> Vec<usize> {
    let Some(first) = runs.first() else {
        return Vec::new();
    };
    let mut column = Vec::with_capacity(runs.len());
    (0..first.len())
        .map(|v| {
            column.clear();
            column.extend(runs.iter().map(|tags| tags[v]));
            column.sort_unstable();
            let (mut best, mut best_count) = (column[0], 0);
            let mut i = 0;
            while i < column.len() {
                let j = i + column[i..].iter().take_while(|&&t| t == column[i]).count();
                if j - i > best_count {
                    best = column[i];
                    best_count = j - i;
                }
                i = j;
            }
            best
        })
        .collect()
}

/// ACR: `runs` independent ACC runs with min-tagging, then a per-node
/// majority vote over tags; nodes sharing a final tag form a cluster.
/// Run `i` uses the child seed `i` of `seed`. Output clusters are ordered
/// by tag.
pub fn acr(instance: &LabeledInstance, rate: &QueryRate, runs: usize, seed: u64) -> Result<AcrOutcome> {
    if runs == 0 {
        return Err(Error::param("ACR needs at least one run"));
    }
    rate.validate(instance.n())?;
    let results = (0..runs as u64)
        .into_par_iter()
        .map(|i| {
            let mut oracle = QueryOracle::new(instance);
            let mut rng = seed::rng(seed::child(seed, i));
            let (clustering, trace) = acc(&mut oracle, rate, &mut rng)?;
            Ok((clustering.min_tags(), trace.queries))
        })
        .collect::<Result<Vec<_>>>()?;
    let queries = results.iter().map(|(_, q)| q).sum();
    let tag_runs: Vec<Vec<usize>> = results.into_iter().map(|(t, _)| t).collect();
    let tags = majority_tags(&tag_runs);

    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &t) in tags.iter().enumerate() {
        groups.entry(t).or_default().push(v);
    }
    let clustering = Clustering::from_clusters(instance.n(), groups.into_values().collect())?;
    Ok(AcrOutcome {
        clustering,
        tags,
        queries,
        runs,
    })
}
