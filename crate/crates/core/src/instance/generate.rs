use rand::seq::SliceRandom;
use rand::Rng as _;

use super::{pairs, GroundTruthPartition, LabeledInstance};
use crate::error::{Error, Result};
use crate::seed;

/// Cluster sizes of the `skew` fixture: 900 nodes in 30 clusters with
/// geometrically decaying sizes (ratio 0.9), scaled to 900 by
/// largest-remainder rounding. See [`skew_cluster_sizes`].
pub const SKEW_CLUSTER_SIZES: [usize; 30] = [
    94, 85, 76, 69, 62, 56, 50, 45, 40, 36, 33, 29, 27, 24, 22, 19, 17, 16, 14, 13, 11, 10, 9, 8, 8, 7, 6, 5, 5, 4,
];

/// Default share of nodes on the clique side of the planted construction.
pub const DEFAULT_PLANTED_ALPHA: f64 = 0.9;

/// `count` sizes proportional to `ratio^i`, each at least 1, summing to
/// `total` (largest-remainder rounding, ties to the lower index).
pub fn skew_cluster_sizes(total: usize, count: usize, ratio: f64) -> Result<Vec<usize>> {
    if count == 0 || total < count {
        return Err(Error::param(format!(
            "cannot split {total} nodes into {count} clusters"
        )));
    }
    if !(ratio > 0.0 && ratio.is_finite()) {
        return Err(Error::param(format!("ratio must be positive, got {ratio}")));
    }
    let weights: Vec<f64> = (0..count).map(|i| ratio.powi(i as i32)).collect();
    let sum: f64 = weights.iter().sum();
    let exact: Vec<f64> = weights.iter().map(|w| total as f64 * w / sum).collect();
    let mut sizes: Vec<usize> = exact.iter().map(|&x| (x.floor() as usize).max(1)).collect();
    let assigned: usize = sizes.iter().sum();
    if assigned > total {
        return Err(Error::param("ratio too steep for the requested cluster count"));
    }
    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by(|&a, &b| {
        let fa = exact[a] - exact[a].floor();
        let fb = exact[b] - exact[b].floor();
        fb.total_cmp(&fa).then(a.cmp(&b))
    });
    for &i in order.iter().take(total - assigned) {
        sizes[i] += 1;
    }
    Ok(sizes)
}

/// Shuffled node ids laid out cluster by cluster.
fn shuffled_layout(sizes: &[usize], rng: &mut seed::Rng) -> (Vec<Vec<usize>>, GroundTruthPartition) {
    let n: usize = sizes.iter().sum();
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    let mut cluster_of = vec![0; n];
    let mut groups = Vec::with_capacity(sizes.len());
    let mut next = 0;
    for (c, &size) in sizes.iter().enumerate() {
        let mut group = ids[next..next + size].to_vec();
        group.sort_unstable();
        for &v in &group {
            cluster_of[v] = c;
        }
        groups.push(group);
        next += size;
    }
    (groups, GroundTruthPartition::new(cluster_of))
}

fn check_sizes(sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() {
        return Err(Error::param("cluster size list is empty"));
    }
    if sizes.contains(&0) {
        return Err(Error::param("cluster sizes must be at least 1"));
    }
    Ok(())
}

/// A disjoint union of cliques with the given sizes (so OPT = 0). Node ids
/// are shuffled under `seed`; cluster `i` of the ground truth has
/// `sizes[i]` members.
pub fn generate_clique_union(sizes: &[usize], seed: u64) -> Result<(LabeledInstance, GroundTruthPartition)> {
    check_sizes(sizes)?;
    let mut rng = seed::rng(seed);
    let (_, truth) = shuffled_layout(sizes, &mut rng);
    Ok((LabeledInstance::from_partition(&truth), truth))
}

/// The `skew` fixture: [`SKEW_CLUSTER_SIZES`] as a clique union.
pub fn generate_skew(seed: u64) -> (LabeledInstance, GroundTruthPartition) {
    generate_clique_union(&SKEW_CLUSTER_SIZES, seed).expect("fixture sizes are valid")
}

/// Flips every pair label independently with probability
/// `p = eta·|E| / C(n, 2)`. Pairs are visited once each in `(u < v)`
/// lexicographic order with one Bernoulli draw per pair.
pub fn perturb(instance: &LabeledInstance, eta: f64, seed: u64) -> Result<LabeledInstance> {
    if !(eta >= 0.0 && eta.is_finite()) {
        return Err(Error::param(format!(
            "eta must be a finite nonnegative number, got {eta}"
        )));
    }
    let n = instance.n();
    let total = pairs(n);
    let p = if total == 0 {
        0.0
    } else {
        eta * instance.edge_count() as f64 / total as f64
    };
    if p > 1.0 {
        return Err(Error::param(format!("flip probability {p} exceeds 1 (eta = {eta})")));
    }
    if p == 0.0 {
        return Ok(instance.clone());
    }
    let mut rng = seed::rng(seed);
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        let row = instance.neighbors(u);
        for v in u + 1..n {
            let positive = row.binary_search(&v).is_ok();
            if positive != rng.gen_bool(p) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    Ok(LabeledInstance::from_raw_adjacency(adjacency))
}

/// Stochastic block model: pairs inside a cluster are positive with
/// probability `p_in`, pairs across clusters with probability `p_out`.
pub fn generate_planted_partition(
    sizes: &[usize],
    p_in: f64,
    p_out: f64,
    seed: u64,
) -> Result<(LabeledInstance, GroundTruthPartition)> {
    check_sizes(sizes)?;
    for p in [p_in, p_out] {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::param(format!("probability {p} outside [0, 1]")));
        }
    }
    let mut rng = seed::rng(seed);
    let (_, truth) = shuffled_layout(sizes, &mut rng);
    let n = truth.len();
    let mut adjacency = vec![Vec::new(); n];
    for u in 0..n {
        for v in u + 1..n {
            let p = if truth.cluster_of(u) == truth.cluster_of(v) {
                p_in
            } else {
                p_out
            };
            if rng.gen_bool(p) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
    }
    Ok((LabeledInstance::from_raw_adjacency(adjacency), truth))
}

/// Disjoint near-cliques with no edges between them. Each internal pair is
/// dropped with probability `drop_prob`, but only while both endpoints are
/// missing fewer than `floor(epsilon·(|C| - 1))` internal neighbors, so
/// every cluster is strongly `(1 - epsilon)`-knit by construction.
pub fn generate_quasi_cliques(
    sizes: &[usize],
    epsilon: f64,
    drop_prob: f64,
    seed: u64,
) -> Result<(LabeledInstance, GroundTruthPartition)> {
    check_sizes(sizes)?;
    if !(0.0..=1.0).contains(&epsilon) || !(0.0..=1.0).contains(&drop_prob) {
        return Err(Error::param("epsilon and drop_prob must lie in [0, 1]"));
    }
    let mut rng = seed::rng(seed);
    let (groups, truth) = shuffled_layout(sizes, &mut rng);
    let mut adjacency = vec![Vec::new(); truth.len()];
    let mut missing = vec![0usize; truth.len()];
    for group in &groups {
        let allowance = (epsilon * (group.len().saturating_sub(1)) as f64 + 1e-9).floor() as usize;
        for (i, &u) in group.iter().enumerate() {
            for &v in &group[i + 1..] {
                let droppable = missing[u] < allowance && missing[v] < allowance;
                if rng.gen_bool(drop_prob) && droppable {
                    missing[u] += 1;
                    missing[v] += 1;
                } else {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
    }
    Ok((LabeledInstance::from_raw_adjacency(adjacency), truth))
}

/// Each node joins one of `d` cliques chosen uniformly with replacement.
/// Ground-truth ids are clique indices `0..d`; some may be empty.
pub fn generate_lb_cliques(n: usize, d: usize, seed: u64) -> Result<(LabeledInstance, GroundTruthPartition)> {
    if n == 0 {
        return Err(Error::param("n must be at least 1"));
    }
    if d < 2 {
        return Err(Error::param(format!("need at least 2 cliques, got {d}")));
    }
    let mut rng = seed::rng(seed);
    let truth = GroundTruthPartition::new((0..n).map(|_| rng.gen_range(0..d)).collect());
    Ok((LabeledInstance::from_partition(&truth), truth))
}

/// Output of [`generate_lb_planted`].
#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub instance: LabeledInstance,
    /// Cluster `i` is `A_i` together with the B-nodes attached to it.
    pub truth: GroundTruthPartition,
    /// Number of groups `k = 1/epsilon`.
    pub groups: usize,
    /// Nodes `0..a_size` form the A side, laid out group by group.
    pub a_size: usize,
    /// For each B-node (ids `a_size..n`), the A-group it attaches to.
    pub attachment: Vec<usize>,
}

impl PlantedInstance {
    pub fn group_size(&self) -> usize {
        self.a_size / self.groups
    }

    pub fn is_a_node(&self, v: usize) -> bool {
        v < self.a_size
    }
}

/// Lower-bound construction: `alpha·n` nodes split into `k = 1/epsilon`
/// equal cliques `A_1..A_k`; each of the remaining nodes picks one group
/// uniformly and is positive towards exactly its members. Pairs inside the
/// B side are negative. Sizes must divide exactly.
pub fn generate_lb_planted(n: usize, epsilon: f64, alpha: f64, seed: u64) -> Result<PlantedInstance> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::param(format!("epsilon must lie in (0, 1], got {epsilon}")));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::param(format!("alpha must lie in (0, 1), got {alpha}")));
    }
    let k_real = 1.0 / epsilon;
    let k = k_real.round() as usize;
    if (k_real - k as f64).abs() > 1e-9 {
        return Err(Error::param(format!("1/epsilon = {k_real} is not an integer")));
    }
    let a_real = alpha * n as f64;
    let a_size = a_real.round() as usize;
    if (a_real - a_size as f64).abs() > 1e-9 * (n.max(1) as f64) {
        return Err(Error::param(format!("alpha·n = {a_real} is not an integer")));
    }
    if a_size == 0 || !a_size.is_multiple_of(k) {
        return Err(Error::param(format!(
            "|A| = {a_size} is not divisible into {k} equal groups"
        )));
    }
    let group = a_size / k;
    let mut rng = seed::rng(seed);
    let attachment: Vec<usize> = (a_size..n).map(|_| rng.gen_range(0..k)).collect();

    let members = |i: usize| i * group..(i + 1) * group;
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..k {
        for u in members(i) {
            adjacency[u].extend(members(i).filter(|&v| v != u));
        }
    }
    let mut cluster_of: Vec<usize> = (0..a_size).map(|v| v / group).collect();
    for (offset, &i) in attachment.iter().enumerate() {
        let b = a_size + offset;
        for a in members(i) {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        cluster_of.push(i);
    }
    Ok(PlantedInstance {
        instance: LabeledInstance::from_raw_adjacency(adjacency),
        truth: GroundTruthPartition::new(cluster_of),
        groups: k,
        a_size,
        attachment,
    })
}
