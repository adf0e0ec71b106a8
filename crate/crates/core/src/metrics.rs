//! Clustering quality: disagreement cost, bad triangles, knit certificates
//! and recovery distances.

use crate::algorithms::Clustering;
use crate::error::{Error, Result};
use crate::instance::{pairs, LabeledInstance};

/// Default cap on `n` for [`bad_triangle_stats`].
pub const TRIANGLE_MAX_NODES: usize = 2000;

fn check_partition(instance: &LabeledInstance, clustering: &Clustering) -> Result<()> {
    if clustering.n() != instance.n() {
        return Err(Error::contract(format!(
            "clustering covers {} nodes, instance has {}",
            clustering.n(),
            instance.n()
        )));
    }
    Ok(())
}

/// `Δ_C`: positive pairs split plus negative pairs co-clustered.
///
/// With `I` the number of positive pairs inside clusters, the cost is
/// `(Σ C(|C_i|, 2) - I) + (|E| - I)`, which needs one pass over the
/// adjacency rather than over all pairs.
pub fn cost(instance: &LabeledInstance, clustering: &Clustering) -> Result<u64> {
    check_partition(instance, clustering)?;
    let mut inside = 0u64;
    for u in 0..instance.n() {
        let c = clustering.cluster_of(u);
        inside += instance
            .neighbors(u)
            .iter()
            .filter(|&&v| v > u && clustering.cluster_of(v) == c)
            .count() as u64;
    }
    let co_clustered: u64 = clustering.clusters().iter().map(|c| pairs(c.len())).sum();
    Ok((co_clustered - inside) + (instance.edge_count() as u64 - inside))
}

/// `Δ_C` by scanning all `C(n, 2)` pairs. Reference for [`cost`].
pub fn cost_by_pair_scan(instance: &LabeledInstance, clustering: &Clustering) -> Result<u64> {
    check_partition(instance, clustering)?;
    let n = instance.n();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            if clustering.together(u, v) != instance.is_positive(u, v) {
                total += 1;
            }
        }
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriangleStats {
    /// Triples whose labels are `{+, +, -}`.
    pub bad_triangles: u64,
    /// Size of a greedy maximal set of pair-disjoint bad triangles; a lower
    /// bound on OPT.
    pub packing: u64,
}

/// Bad-triangle count and greedy edge-disjoint packing. Triangles are
/// taken greedily in lexicographic `(u < v < w)` order.
pub fn bad_triangle_stats(instance: &LabeledInstance) -> Result<TriangleStats> {
    bad_triangle_stats_with(instance, TRIANGLE_MAX_NODES)
}

pub fn bad_triangle_stats_with(instance: &LabeledInstance, max_nodes: usize) -> Result<TriangleStats> {
    let n = instance.n();
    if n > max_nodes {
        return Err(Error::Capacity {
            what: "bad_triangle_stats",
            n,
            limit: max_nodes,
        });
    }
    // Every bad triangle has exactly one node adjacent to both others.
    // Enumerate it from that centre: a non-adjacent pair of neighbors.
    let mut triangles: Vec<(usize, usize, usize)> = Vec::new();
    for centre in 0..n {
        let nb = instance.neighbors(centre);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !instance.is_positive(a, b) {
                    let mut t = [centre, a, b];
                    t.sort_unstable();
                    triangles.push((t[0], t[1], t[2]));
                }
            }
        }
    }
    triangles.sort_unstable();
    let mut used = vec![false; pairs(n) as usize];
    let idx = |u: usize, v: usize| v * (v - 1) / 2 + u;
    let mut packing = 0;
    for &(u, v, w) in &triangles {
        let (a, b, c) = (idx(u, v), idx(u, w), idx(v, w));
        if !used[a] && !used[b] && !used[c] {
            used[a] = true;
            used[b] = true;
            used[c] = true;
            packing += 1;
        }
    }
    Ok(TriangleStats {
        bad_triangles: triangles.len() as u64,
        packing,
    })
}

fn member_mask(instance: &LabeledInstance, set: &[usize]) -> Result<Vec<bool>> {
    if set.len() < 2 {
        return Err(Error::contract("knit checks need a set of at least two nodes"));
    }
    let mut mask = vec![false; instance.n()];
    for &v in set {
        if v >= instance.n() {
            return Err(Error::contract(format!("node {v} out of range")));
        }
        if std::mem::replace(&mut mask[v], true) {
            return Err(Error::contract(format!("node {v} listed twice")));
        }
    }
    Ok(mask)
}

/// Certificate for a `(1 - ε)`-knit set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnitCertificate {
    pub size: usize,
    /// `|E_C|`
    pub internal_edges: u64,
    /// `|cut(C, V \ C)|`
    pub cut_edges: u64,
    /// Smallest ε for which the set is `(1 - ε)`-knit.
    pub epsilon: f64,
}

impl KnitCertificate {
    /// `|E_C| >= (1 - ε)·C(|C|, 2)` and `|cut| <= ε·C(|C|, 2)`.
    pub fn is_knit(&self, epsilon: f64) -> bool {
        let p = pairs(self.size) as f64;
        self.internal_edges as f64 >= (1.0 - epsilon) * p && self.cut_edges as f64 <= epsilon * p
    }
}

pub fn knit_check(instance: &LabeledInstance, set: &[usize]) -> Result<KnitCertificate> {
    let mask = member_mask(instance, set)?;
    let mut twice_internal = 0u64;
    let mut cut = 0u64;
    for &v in set {
        for &u in instance.neighbors(v) {
            if mask[u] {
                twice_internal += 1;
            } else {
                cut += 1;
            }
        }
    }
    let internal = twice_internal / 2;
    let p = pairs(set.len()) as f64;
    let epsilon = (1.0 - internal as f64 / p).max(cut as f64 / p);
    Ok(KnitCertificate {
        size: set.len(),
        internal_edges: internal,
        cut_edges: cut,
        epsilon,
    })
}

/// Certificate for a strongly `(1 - ε)`-knit set: every member's
/// neighborhood lies inside the set and covers at least `(1 - ε)(|C| - 1)`
/// members.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrongKnitCertificate {
    pub size: usize,
    pub min_degree: usize,
    /// Members with a neighbor outside the set.
    pub leaking_members: usize,
    /// Smallest ε, or `None` when some neighborhood leaves the set.
    pub epsilon: Option<f64>,
}

impl StrongKnitCertificate {
    pub fn is_strongly_knit(&self, epsilon: f64) -> bool {
        self.leaking_members == 0 && self.min_degree as f64 >= (1.0 - epsilon) * (self.size - 1) as f64
    }
}

pub fn strongly_knit_check(instance: &LabeledInstance, set: &[usize]) -> Result<StrongKnitCertificate> {
    let mask = member_mask(instance, set)?;
    let mut min_degree = usize::MAX;
    let mut leaking = 0;
    for &v in set {
        let nb = instance.neighbors(v);
        if nb.iter().any(|&u| !mask[u]) {
            leaking += 1;
        }
        min_degree = min_degree.min(nb.len());
    }
    let epsilon = (leaking == 0).then(|| 1.0 - min_degree as f64 / (set.len() - 1) as f64);
    Ok(StrongKnitCertificate {
        size: set.len(),
        min_degree,
        leaking_members: leaking,
        epsilon,
    })
}

/// Closest output cluster to a latent set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recovery {
    /// Id of the output cluster minimising `|C ⊕ Ĉ|`; `None` if there are
    /// no clusters at all.
    pub cluster: Option<usize>,
    pub distance: usize,
}

/// `min over Ĉ of |C ⊕ Ĉ|`, ties broken towards the smaller cluster id.
pub fn recovery_distance(latent: &[usize], clustering: &Clustering) -> Recovery {
    let mut overlap = vec![0usize; clustering.num_clusters()];
    let mut distinct = 0;
    let mut seen = vec![false; clustering.n()];
    let mut outside = 0;
    for &v in latent {
        if v < clustering.n() {
            if !std::mem::replace(&mut seen[v], true) {
                overlap[clustering.cluster_of(v)] += 1;
                distinct += 1;
            }
        } else {
            outside += 1;
        }
    }
    let size = distinct + outside;
    let mut best = Recovery {
        cluster: None,
        distance: size,
    };
    for (id, members) in clustering.clusters().iter().enumerate() {
        let d = size + members.len() - 2 * overlap[id];
        if best.cluster.is_none() || d < best.distance {
            best = Recovery {
                cluster: Some(id),
                distance: d,
            };
        }
    }
    best
}
