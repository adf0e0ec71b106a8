//! Labeled instances `(V, σ)`, ground-truth partitions, generators and
//! file formats.
//!
//! Nodes are dense ids `0..n`. Only positive labels are stored: a pair is
//! `+1` iff it appears in the positive adjacency, and `-1` otherwise.

mod generate;
mod io;

use std::fmt;

pub use generate::{
    generate_clique_union, generate_lb_cliques, generate_lb_planted, generate_planted_partition,
    generate_quasi_cliques, generate_skew, perturb, skew_cluster_sizes, PlantedInstance, DEFAULT_PLANTED_ALPHA,
    SKEW_CLUSTER_SIZES,
};
pub use io::{
    load_ground_truth, load_instance, parse_ground_truth, parse_instance, save_ground_truth, save_instance,
    write_ground_truth, write_instance, InstanceFormat,
};

use crate::error::{Error, Result};

/// A pair label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Positive,
    Negative,
}

impl Label {
    pub fn is_positive(self) -> bool {
        self == Label::Positive
    }

    pub fn as_sign(self) -> i8 {
        match self {
            Label::Positive => 1,
            Label::Negative => -1,
        }
    }

    pub fn flipped(self) -> Label {
        match self {
            Label::Positive => Label::Negative,
            Label::Negative => Label::Positive,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Positive => "+",
            Label::Negative => "-",
        })
    }
}

/// Number of unordered pairs of `n` items.
pub fn pairs(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Ground-truth similarity over all pairs of `n` nodes, stored as a sorted
/// positive adjacency. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledInstance {
    adjacency: Vec<Vec<usize>>,
    edges: usize,
}

impl LabeledInstance {
    /// Builds an instance from positive pairs. Either orientation is
    /// accepted; duplicates collapse. Self-loops and out-of-range ids are
    /// rejected.
    pub fn from_edges<I>(n: usize, positive: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in positive {
            if u >= n || v >= n {
                return Err(Error::param(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::param(format!("self-loop on node {u}")));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Builds from a symmetric adjacency list. Lists may be unsorted and
    /// contain duplicates.
    pub fn from_adjacency(adjacency: Vec<Vec<usize>>) -> Result<Self> {
        let n = adjacency.len();
        for (v, list) in adjacency.iter().enumerate() {
            for &u in list {
                if u >= n {
                    return Err(Error::param(format!("neighbor {u} of {v} out of range")));
                }
                if u == v {
                    return Err(Error::param(format!("self-loop on node {v}")));
                }
            }
        }
        let inst = Self::from_raw_adjacency(adjacency);
        for v in 0..n {
            for &u in inst.neighbors(v) {
                if inst.neighbors(u).binary_search(&v).is_err() {
                    return Err(Error::param(format!(
                        "asymmetric adjacency: {u} listed for {v} but not the reverse"
                    )));
                }
            }
        }
        Ok(inst)
    }

    fn from_raw_adjacency(mut adjacency: Vec<Vec<usize>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let degree_sum: usize = adjacency.iter().map(Vec::len).sum();
        LabeledInstance {
            adjacency,
            edges: degree_sum / 2,
        }
    }

    /// The instance whose positive pairs are exactly the co-clustered pairs
    /// of `truth` (a union of disjoint cliques).
    pub fn from_partition(truth: &GroundTruthPartition) -> Self {
        let groups = truth.groups();
        let mut adjacency = vec![Vec::new(); truth.len()];
        for group in &groups {
            for &v in group {
                adjacency[v] = group.iter().copied().filter(|&u| u != v).collect();
            }
        }
        Self::from_raw_adjacency(adjacency)
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// `|E|`, the number of positive pairs.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Sorted positive neighbors `N_v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_positive(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adjacency[u].len() <= self.adjacency[v].len() {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a].binary_search(&b).is_ok()
    }

    /// `σ(u, v)` for distinct in-range nodes. Callers outside the crate go
    /// through an oracle; this is the raw lookup behind it.
    pub fn label(&self, u: usize, v: usize) -> Label {
        debug_assert!(u != v);
        if self.is_positive(u, v) {
            Label::Positive
        } else {
            Label::Negative
        }
    }

    /// Positive pairs as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// The instance with every label flipped.
    pub fn complement(&self) -> LabeledInstance {
        let n = self.n();
        let adjacency = (0..n)
            .map(|v| {
                let mut it = self.adjacency[v].iter().peekable();
                (0..n)
                    .filter(|&u| {
                        if it.peek() == Some(&&u) {
                            it.next();
                            false
                        } else {
                            u != v
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_raw_adjacency(adjacency)
    }

    /// The instance with node `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<LabeledInstance> {
        if perm.len() != self.n() {
            return Err(Error::contract("permutation length differs from n"));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::contract("not a permutation"));
            }
        }
        LabeledInstance::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

/// Latent cluster membership of every node, for datasets that come with one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruthPartition {
    cluster_of: Vec<usize>,
}

impl GroundTruthPartition {
    pub fn new(cluster_of: Vec<usize>) -> Self {
        GroundTruthPartition { cluster_of }
    }

    pub fn len(&self) -> usize {
        self.cluster_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cluster_of.is_empty()
    }

    pub fn cluster_of(&self, v: usize) -> usize {
        self.cluster_of[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.cluster_of
    }

    /// Non-empty clusters, ordered by cluster id, members ascending.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        let ids = self.cluster_of.iter().copied().max().map_or(0, |m| m + 1);
        let mut groups = vec![Vec::new(); ids];
        for (v, &c) in self.cluster_of.iter().enumerate() {
            groups[c].push(v);
        }
        groups.retain(|g| !g.is_empty());
        groups
    }

    pub fn num_clusters(&self) -> usize {
        self.groups().len()
    }
}
