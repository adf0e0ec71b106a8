use std::collections::HashMap;

use crate::error::{Error, Result};

/// A partition of `0..n` into disjoint clusters. Cluster ids follow
/// creation order; members are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clustering {
    cluster_of: Vec<usize>,
    clusters: Vec<Vec<usize>>,
}

impl Clustering {
    /// Validates that `clusters` are non-empty, disjoint and cover `0..n`.
    pub fn from_clusters(n: usize, mut clusters: Vec<Vec<usize>>) -> Result<Self> {
        let mut cluster_of = vec![usize::MAX; n];
        for (id, members) in clusters.iter_mut().enumerate() {
            if members.is_empty() {
                return Err(Error::contract(format!("cluster {id} is empty")));
            }
            members.sort_unstable();
            for &v in members.iter() {
                if v >= n {
                    return Err(Error::contract(format!("node {v} out of range for n = {n}")));
                }
                if cluster_of[v] != usize::MAX {
                    return Err(Error::contract(format!("node {v} appears in two clusters")));
                }
                cluster_of[v] = id;
            }
        }
        if let Some(v) = cluster_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::contract(format!("node {v} is not covered")));
        }
        Ok(Clustering { cluster_of, clusters })
    }

    /// From per-node labels; ids are assigned by first appearance.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut dense = HashMap::new();
        let mut clusters: Vec<Vec<usize>> = Vec::new();
        let cluster_of = labels
            .iter()
            .enumerate()
            .map(|(v, l)| {
                let id = *dense.entry(*l).or_insert_with(|| {
                    clusters.push(Vec::new());
                    clusters.len() - 1
                });
                clusters[id].push(v);
                id
            })
            .collect();
        Clustering { cluster_of, clusters }
    }

    pub fn singletons(n: usize) -> Self {
        Clustering {
            cluster_of: (0..n).collect(),
            clusters: (0..n).map(|v| vec![v]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.cluster_of.len()
    }

    pub fn num_clusters(&self) -> usize {
        self.clusters.len()
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.cluster_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.cluster_of
    }

    pub fn clusters(&self) -> &[Vec<usize>] {
        &self.clusters
    }

    pub fn cluster(&self, id: usize) -> &[usize] {
        &self.clusters[id]
    }

    pub fn together(&self, u: usize, v: usize) -> bool {
        self.cluster_of[u] == self.cluster_of[v]
    }

    /// Min-tagging: every node is tagged with the smallest node id of its
    /// cluster.
    pub fn min_tags(&self) -> Vec<usize> {
        self.cluster_of.iter().map(|&c| self.clusters[c][0]).collect()
    }

    /// Whether both describe the same partition, ignoring cluster ids.
    pub fn same_partition(&self, other: &Clustering) -> bool {
        self.n() == other.n() && self.min_tags() == other.min_tags()
    }
}
