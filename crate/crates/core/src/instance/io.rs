//! Text formats.
//!
//! Edge list (`edges`):
//!
//! ```text
//! # comment
//! n 5
//! 0 1
//! 1 2
//! ```
//!
//! One positive pair per line, `u < v` on output. On input either
//! orientation is accepted, and a trailing label token (`+`, `-`, `+1`,
//! `-1`) may be given; a pair declared with both labels is rejected.
//!
//! Ground truth (`clusters`): one `node cluster_id` line per node. As an
//! instance format it denotes the clique union of the listed clusters.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use super::{GroundTruthPartition, LabeledInstance};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InstanceFormat {
    #[default]
    Edges,
    Clusters,
}

impl FromStr for InstanceFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(InstanceFormat::Edges),
            "clusters" => Ok(InstanceFormat::Clusters),
            other => Err(Error::param(format!(
                "unknown format `{other}` (expected edges|clusters)"
            ))),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(origin: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        path: origin.to_string(),
        line,
        message: message.into(),
    }
}

fn parse_num<T: FromStr>(origin: &str, line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(origin, line, format!("expected a nonnegative integer, found `{tok}`")))
}

/// Parses the edge-list format. `origin` names the source in error messages.
pub fn parse_instance(text: &str, origin: &str) -> Result<LabeledInstance> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| parse_err(origin, 0, "missing `n <count>` header"))?;
    let mut toks = header.split_whitespace();
    let n: usize = match (toks.next(), toks.next(), toks.next()) {
        (Some("n"), Some(count), None) => parse_num(origin, line, count)?,
        _ => return Err(parse_err(origin, line, "expected header `n <count>`")),
    };

    let mut declared: HashMap<(usize, usize), (bool, usize)> = HashMap::new();
    for (line, text) in lines {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let positive = match toks.as_slice() {
            [_, _] => true,
            [_, _, "+" | "+1"] => true,
            [_, _, "-" | "-1"] => false,
            _ => return Err(parse_err(origin, line, "expected `u v [+|-]`")),
        };
        let u: usize = parse_num(origin, line, toks[0])?;
        let v: usize = parse_num(origin, line, toks[1])?;
        if u >= n || v >= n {
            return Err(parse_err(origin, line, format!("node out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(origin, line, format!("self-loop on node {u}")));
        }
        let key = (u.min(v), u.max(v));
        match declared.get(&key) {
            Some(&(prev, prev_line)) if prev != positive => {
                return Err(parse_err(
                    origin,
                    line,
                    format!(
                        "pair ({}, {}) contradicts its declaration on line {prev_line}",
                        key.0, key.1
                    ),
                ));
            }
            Some(_) => {}
            None => {
                declared.insert(key, (positive, line));
            }
        }
    }
    LabeledInstance::from_edges(n, declared.into_iter().filter(|(_, (pos, _))| *pos).map(|(k, _)| k))
}

/// Canonical edge-list text: header, then positive pairs in `(u < v)` order.
pub fn write_instance(instance: &LabeledInstance) -> String {
    let mut out = String::with_capacity(16 + instance.edge_count() * 10);
    writeln!(out, "n {}", instance.n()).unwrap();
    for (u, v) in instance.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses a ground-truth file. Nodes must be exactly `0..count`. Cluster
/// ids already forming a dense range `0..k` are kept as written; otherwise
/// they are renumbered in order of first appearance by node id.
pub fn parse_ground_truth(text: &str, origin: &str) -> Result<GroundTruthPartition> {
    let mut raw: Vec<Option<(u64, usize)>> = Vec::new();
    for (line, text) in content_lines(text) {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let [node, cluster] = toks.as_slice() else {
            return Err(parse_err(origin, line, "expected `node cluster_id`"));
        };
        let node: usize = parse_num(origin, line, node)?;
        let cluster: u64 = parse_num(origin, line, cluster)?;
        if node >= raw.len() {
            raw.resize(node + 1, None);
        }
        if let Some((_, first)) = raw[node] {
            return Err(parse_err(
                origin,
                line,
                format!("node {node} already assigned on line {first}"),
            ));
        }
        raw[node] = Some((cluster, line));
    }
    let mut ids = Vec::with_capacity(raw.len());
    for (v, entry) in raw.into_iter().enumerate() {
        let (c, _) = entry.ok_or_else(|| parse_err(origin, 0, format!("node {v} has no cluster")))?;
        ids.push(c);
    }
    let distinct: HashSet<u64> = ids.iter().copied().collect();
    if distinct.iter().all(|&c| c < distinct.len() as u64) {
        return Ok(GroundTruthPartition::new(ids.into_iter().map(|c| c as usize).collect()));
    }
    let mut dense: HashMap<u64, usize> = HashMap::new();
    let cluster_of = ids
        .into_iter()
        .map(|c| {
            let next = dense.len();
            *dense.entry(c).or_insert(next)
        })
        .collect();
    Ok(GroundTruthPartition::new(cluster_of))
}

pub fn write_ground_truth(truth: &GroundTruthPartition) -> String {
    let mut out = String::new();
    for (v, c) in truth.assignment().iter().enumerate() {
        writeln!(out, "{v} {c}").unwrap();
    }
    out
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

/// Loads an instance. The `clusters` format also yields its partition.
pub fn load_instance(
    path: impl AsRef<Path>,
    format: InstanceFormat,
) -> Result<(LabeledInstance, Option<GroundTruthPartition>)> {
    let path = path.as_ref();
    let text = read(path)?;
    let origin = path.display().to_string();
    match format {
        InstanceFormat::Edges => Ok((parse_instance(&text, &origin)?, None)),
        InstanceFormat::Clusters => {
            let truth = parse_ground_truth(&text, &origin)?;
            Ok((LabeledInstance::from_partition(&truth), Some(truth)))
        }
    }
}

/// Saves an instance. The `clusters` format only represents clique unions;
/// other instances are rejected.
pub fn save_instance(path: impl AsRef<Path>, instance: &LabeledInstance, format: InstanceFormat) -> Result<()> {
    let text = match format {
        InstanceFormat::Edges => write_instance(instance),
        InstanceFormat::Clusters => {
            let truth = clique_partition(instance)
                .ok_or_else(|| Error::contract("instance is not a union of disjoint cliques"))?;
            write_ground_truth(&truth)
        }
    };
    write(path.as_ref(), &text)
}

pub fn load_ground_truth(path: impl AsRef<Path>) -> Result<GroundTruthPartition> {
    let path = path.as_ref();
    parse_ground_truth(&read(path)?, &path.display().to_string())
}

pub fn save_ground_truth(path: impl AsRef<Path>, truth: &GroundTruthPartition) -> Result<()> {
    write(path.as_ref(), &write_ground_truth(truth))
}

/// Connected components, if every component is a clique.
fn clique_partition(instance: &LabeledInstance) -> Option<GroundTruthPartition> {
    let n = instance.n();
    let mut cluster_of = vec![usize::MAX; n];
    let mut next = 0;
    for v in 0..n {
        if cluster_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = std::iter::once(v)
            .chain(instance.neighbors(v).iter().copied())
            .collect();
        for &u in &members {
            if cluster_of[u] != usize::MAX || instance.degree(u) != members.len() - 1 {
                return None;
            }
            cluster_of[u] = next;
        }
        next += 1;
    }
    let truth = GroundTruthPartition::new(cluster_of);
    (LabeledInstance::from_partition(&truth) == *instance).then_some(truth)
}
