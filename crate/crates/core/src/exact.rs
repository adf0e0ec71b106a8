//! Exhaustive baselines for small instances.
//!
//! Partitions are enumerated as restricted growth strings (RGS): node 0 is
//! in block 0 and node `i` joins a block in `0..=1 + max(earlier blocks)`.
//! Ties always go to the first partition in lexicographic RGS order.

use rand::Rng;

use crate::algorithms::Clustering;
use crate::error::{Error, Result};
use crate::instance::{pairs, LabeledInstance};
use crate::oracle::SimilarityOracle;

/// Largest `n` accepted by [`exact_opt`] and [`erm_cc`] by default.
/// Bell(13) is about 2.8e7 partitions.
pub const EXACT_MAX_NODES: usize = 13;
pub const VC_MIN_NODES: usize = 3;
pub const VC_MAX_NODES: usize = 6;

/// Enumeration caps. Raising a cap above its default logs a warning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_nodes: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: EXACT_MAX_NODES,
        }
    }
}

impl Limits {
    pub fn with_max_nodes(max_nodes: usize) -> Self {
        if max_nodes > EXACT_MAX_NODES {
            log::warn!(
                "exact enumeration cap raised to {max_nodes} (default {EXACT_MAX_NODES}); Bell({max_nodes}) = {} partitions",
                bell_number(max_nodes)
            );
        }
        Limits { max_nodes }
    }

    fn check(&self, what: &'static str, n: usize) -> Result<()> {
        if n > self.max_nodes {
            return Err(Error::Capacity {
                what,
                n,
                limit: self.max_nodes,
            });
        }
        Ok(())
    }
}

/// Number of set partitions of `n` items.
pub fn bell_number(n: usize) -> u128 {
    // Bell triangle.
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last + x);
        }
        row = next;
    }
    row[0]
}

/// Iterator over all restricted growth strings of length `n`, in
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct RestrictedGrowth {
    current: Vec<usize>,
    /// `prefix_max[i]` = max of `current[..i]`.
    prefix_max: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth {
            current: vec![0; n],
            prefix_max: vec![0; n],
            done: false,
        }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let n = self.current.len();
        // Advance: rightmost position that can still grow.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.current[i] <= self.prefix_max[i] {
                self.current[i] += 1;
                for j in i + 1..n {
                    self.current[j] = 0;
                    self.prefix_max[j] = self.prefix_max[j - 1].max(self.current[j - 1]);
                }
                break;
            }
        }
        Some(out)
    }
}

/// Index of pair `{u, v}` (`u < v`) in the order `(0,1), (0,2), (1,2), (0,3), ...`.
fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

/// Minimises `Σ together[p]` over co-clustered pairs plus `Σ apart[p]` over
/// split pairs, by depth-first RGS enumeration with pruning. Returns the
/// lexicographically first minimiser.
fn min_cost_partition(n: usize, together: &[u64], apart: &[u64]) -> (u64, Vec<usize>) {
    if n == 0 {
        return (0, Vec::new());
    }
    struct Search<'a> {
        n: usize,
        together: &'a [u64],
        apart: &'a [u64],
        blocks: Vec<usize>,
        best: u64,
        best_blocks: Vec<usize>,
    }
    impl Search<'_> {
        fn visit(&mut self, i: usize, used: usize, partial: u64) {
            if i == self.n {
                if partial < self.best {
                    self.best = partial;
                    self.best_blocks.clone_from(&self.blocks);
                }
                return;
            }
            let base = i * i.saturating_sub(1) / 2;
            for b in 0..=used {
                let mut add = 0;
                for j in 0..i {
                    add += if self.blocks[j] == b {
                        self.together[base + j]
                    } else {
                        self.apart[base + j]
                    };
                }
                let cost = partial + add;
                if cost >= self.best {
                    continue;
                }
                self.blocks[i] = b;
                self.visit(i + 1, used.max(b + 1), cost);
            }
        }
    }
    let mut search = Search {
        n,
        together,
        apart,
        blocks: vec![0; n],
        best: u64::MAX,
        best_blocks: vec![0; n],
    };
    search.visit(1, 1, 0);
    (search.best, search.best_blocks)
}

/// OPT: minimum disagreement cost over all partitions, and the
/// lexicographically first partition achieving it.
pub fn exact_opt(instance: &LabeledInstance) -> Result<(u64, Clustering)> {
    exact_opt_with(instance, Limits::default())
}

pub fn exact_opt_with(instance: &LabeledInstance, limits: Limits) -> Result<(u64, Clustering)> {
    let n = instance.n();
    limits.check("exact_opt", n)?;
    let total = pairs(n) as usize;
    let mut together = vec![0u64; total];
    let mut apart = vec![0u64; total];
    for v in 1..n {
        for u in 0..v {
            if instance.is_positive(u, v) {
                apart[pair_index(u, v)] = 1;
            } else {
                together[pair_index(u, v)] = 1;
            }
        }
    }
    let (cost, blocks) = min_cost_partition(n, &together, &apart);
    Ok((cost, Clustering::from_labels(&blocks)))
}

/// Empirical risk minimisation over partitions: draws `samples` pairs
/// uniformly with replacement, queries each one, and returns the partition
/// with the fewest disagreements on the sample (repeats count each time).
pub fn erm_cc<O, R>(oracle: &mut O, samples: u64, rng: &mut R) -> Result<Clustering>
where
    O: SimilarityOracle + ?Sized,
    R: Rng + ?Sized,
{
    erm_cc_with(oracle, samples, rng, Limits::default())
}

pub fn erm_cc_with<O, R>(oracle: &mut O, samples: u64, rng: &mut R, limits: Limits) -> Result<Clustering>
where
    O: SimilarityOracle + ?Sized,
    R: Rng + ?Sized,
{
    let n = oracle.n();
    limits.check("erm_cc", n)?;
    if samples == 0 {
        return Err(Error::param("ERM needs at least one sample"));
    }
    if n < 2 {
        return Err(Error::param("ERM needs at least two nodes to sample pairs"));
    }
    let total = pairs(n) as usize;
    let mut together = vec![0u64; total];
    let mut apart = vec![0u64; total];
    for _ in 0..samples {
        let p = rng.gen_range(0..total);
        let (u, v) = unpair(p);
        if oracle.query(u, v)?.is_positive() {
            apart[p] += 1;
        } else {
            together[p] += 1;
        }
    }
    let (_, blocks) = min_cost_partition(n, &together, &apart);
    Ok(Clustering::from_labels(&blocks))
}

fn unpair(p: usize) -> (usize, usize) {
    let mut v = ((((8 * p + 1) as f64).sqrt() + 1.0) / 2.0).floor() as usize;
    while v * (v - 1) / 2 > p {
        v -= 1;
    }
    while (v + 1) * v / 2 <= p {
        v += 1;
    }
    (p - v * (v - 1) / 2, v)
}

/// Result of [`vc_shattering_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcReport {
    pub n: usize,
    /// Size of the largest pair set shattered by the partition classifiers.
    pub dimension: usize,
    /// The first shattered pair set of that size.
    pub witness: Vec<(usize, usize)>,
    /// The star spanning tree centred on node 0 is shattered.
    pub spanning_tree_shattered: bool,
    /// Number of `n`-pair sets examined, none of which is shattered.
    pub n_sets_rejected: usize,
}

/// Brute-force VC dimension of `{h_C}` where `h_C(u, v) = +1` iff `u` and
/// `v` share a cluster of `C`, over all partitions `C` of `n` nodes.
pub fn vc_shattering_check(n: usize) -> Result<VcReport> {
    if n < VC_MIN_NODES {
        return Err(Error::param(format!("vc check needs n >= {VC_MIN_NODES}, got {n}")));
    }
    if n > VC_MAX_NODES {
        return Err(Error::Capacity {
            what: "vc_shattering_check",
            n,
            limit: VC_MAX_NODES,
        });
    }
    let m = pairs(n) as usize;
    let mut hypotheses: Vec<u32> = RestrictedGrowth::new(n)
        .map(|blocks| {
            let mut mask = 0u32;
            for v in 1..n {
                for u in 0..v {
                    if blocks[u] == blocks[v] {
                        mask |= 1 << pair_index(u, v);
                    }
                }
            }
            mask
        })
        .collect();
    hypotheses.sort_unstable();
    hypotheses.dedup();

    let shattered = |set: u32| {
        let mut seen = vec![false; 1 << set.count_ones()];
        let bits: Vec<u32> = (0..m as u32).filter(|b| set >> b & 1 == 1).collect();
        let mut distinct = 0;
        for h in &hypotheses {
            let code = bits
                .iter()
                .enumerate()
                .fold(0usize, |acc, (k, b)| acc | ((h >> b & 1) as usize) << k);
            if !seen[code] {
                seen[code] = true;
                distinct += 1;
            }
        }
        distinct == seen.len()
    };

    let mut dimension = 0;
    let mut witness = 0u32;
    let mut n_sets_rejected = 0;
    for k in 1..=m {
        let found = (0u32..1 << m)
            .filter(|s| s.count_ones() as usize == k)
            .find(|&s| shattered(s));
        if k == n {
            n_sets_rejected = (0u32..1 << m).filter(|s| s.count_ones() as usize == k).count();
        }
        match found {
            Some(s) => {
                dimension = k;
                witness = s;
            }
            None => break,
        }
    }
    let star = (1..n).fold(0u32, |acc, v| acc | 1 << pair_index(0, v));
    let decode = |set: u32| {
        (1..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| set >> pair_index(u, v) & 1 == 1)
            .collect::<Vec<_>>()
    };
    Ok(VcReport {
        n,
        dimension,
        witness: decode(witness),
        spanning_tree_shattered: shattered(star),
        n_sets_rejected: if dimension < n { n_sets_rejected } else { 0 },
    })
}
