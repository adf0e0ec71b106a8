//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::f64::consts::E;
use std::process::{Command, ExitCode};
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;

use corrclust::algorithms::{acc, access, acr, default_runs, kwikcluster, RunTrace};
use corrclust::bench::{self, prepare_dataset, run_sweep, Algorithm, DatasetSpec, ExperimentConfig};
use corrclust::exact::{erm_cc, exact_opt, vc_shattering_check};
use corrclust::instance::{
    generate_clique_union, generate_planted_partition, generate_quasi_cliques, pairs, perturb, InstanceFormat,
};
use corrclust::metrics::{cost, knit_check, recovery_distance, strongly_knit_check};
use corrclust::{seed, Clustering, LabeledInstance, QueryOracle, QueryRate};

/// `(2e - 1) / (2(e - 1))`
fn acc_constant() -> f64 {
    (2.0 * E - 1.0) / (2.0 * (E - 1.0))
}

static ACC_RUNS: AtomicU64 = AtomicU64::new(0);
static ACC_VIOLATIONS: AtomicU64 = AtomicU64::new(0);

/// Every ACC run in this suite goes through here so criterion 3 sees it.
fn checked_acc(inst: &LabeledInstance, rate: &QueryRate, run_seed: u64) -> (Clustering, RunTrace) {
    let mut oracle = QueryOracle::new(inst);
    let (c, trace) = acc(&mut oracle, rate, &mut seed::rng(run_seed)).expect("acc runs");
    let n = inst.n();
    ACC_RUNS.fetch_add(1, Ordering::Relaxed);
    if trace.queries > (n * rate.ceil_at(n)) as u64 {
        ACC_VIOLATIONS.fetch_add(1, Ordering::Relaxed);
    }
    (c, trace)
}

struct Stats {
    mean: f64,
    se: f64,
}

fn stats(xs: &[f64]) -> Stats {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Stats {
        mean,
        se: (var / n).sqrt(),
    }
}

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict {
            pass,
            detail: detail.into(),
        }
    }
}

fn random_instance(n: usize, density: f64, rng: &mut impl Rng) -> LabeledInstance {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    LabeledInstance::from_edges(n, edges).unwrap()
}

/// Brute force over all set partitions by recursive block assignment,
/// costing each from a dense label matrix.
fn enumerated_min_cost(inst: &LabeledInstance) -> u64 {
    let n = inst.n();
    let plus: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && inst.is_positive(u, v)).collect())
        .collect();
    fn go(v: usize, n: usize, block: &mut Vec<usize>, blocks: usize, plus: &[Vec<bool>], best: &mut u64) {
        if v == n {
            let mut c = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if (block[a] == block[b]) != plus[a][b] {
                        c += 1;
                    }
                }
            }
            *best = (*best).min(c);
            return;
        }
        for b in 0..=blocks {
            block[v] = b;
            go(v + 1, n, block, blocks.max(b + 1), plus, best);
        }
    }
    let mut best = u64::MAX;
    go(0, n, &mut vec![0; n], 0, &plus, &mut best);
    best
}

fn criterion_1() -> Verdict {
    let mut rng = seed::rng(101);
    let mut worst = String::new();
    let mut checked_outputs = 0;
    for i in 0..200 {
        let n = rng.gen_range(2..=8);
        let density = rng.gen_range(0.3..=0.7);
        let inst = random_instance(n, density, &mut rng);
        let (opt, argmin) = exact_opt(&inst).unwrap();
        let reference = enumerated_min_cost(&inst);
        if opt != reference || cost(&inst, &argmin).unwrap() != reference {
            return Verdict::new(false, format!("instance {i}: exact_opt {opt}, enumeration {reference}"));
        }
        let s = seed::child(7, i);
        let mut outputs = Vec::new();
        for a in [0.0, 0.5, 1.0] {
            let rate = QueryRate::power(a).unwrap();
            outputs.push(checked_acc(&inst, &rate, s).0);
            outputs.push(
                access(&mut QueryOracle::new(&inst), &rate, &mut seed::rng(s))
                    .unwrap()
                    .0,
            );
            outputs.push(acr(&inst, &rate, 5, s).unwrap().clustering);
        }
        outputs.push(kwikcluster(&mut QueryOracle::new(&inst), &mut seed::rng(s)).unwrap().0);
        outputs.push(erm_cc(&mut QueryOracle::new(&inst), 10, &mut seed::rng(s)).unwrap());
        for c in &outputs {
            let got = cost(&inst, c).unwrap();
            if got < opt {
                worst = format!("instance {i}: output cost {got} < OPT {opt}");
            }
            checked_outputs += 1;
        }
    }
    if !worst.is_empty() {
        return Verdict::new(false, worst);
    }
    Verdict::new(
        true,
        format!("200 instances, OPT matches enumeration, {checked_outputs} outputs all >= OPT"),
    )
}

fn criterion_2() -> Verdict {
    let mut rng = seed::rng(202);
    let mut sizes_n = Vec::new();
    for i in 0..100 {
        let n = if i == 0 { 2000 } else { rng.gen_range(1..=2000) };
        let k = rng.gen_range(1..=n.min(60));
        let mut cuts: Vec<usize> = (1..n).collect();
        let (chosen, _) = cuts.partial_shuffle(&mut rng, k - 1);
        let mut cuts = chosen.to_vec();
        cuts.sort_unstable();
        cuts.push(n);
        let mut sizes = Vec::new();
        let mut prev = 0;
        for c in cuts {
            sizes.push(c - prev);
            prev = c;
        }
        sizes_n.push((sizes, seed::child(3, i)));
    }
    let failures: Vec<String> = sizes_n
        .par_iter()
        .filter_map(|(sizes, s)| {
            let (inst, truth) = generate_clique_union(sizes, *s).unwrap();
            let n = inst.n() as u64;
            let (c, trace) = kwikcluster(&mut QueryOracle::new(&inst), &mut seed::rng(*s)).unwrap();
            let ok = cost(&inst, &c).unwrap() == 0
                && trace.queries <= n * n
                && c.same_partition(&Clustering::from_labels(truth.assignment()));
            (!ok).then(|| format!("n={n}"))
        })
        .collect();
    let max_n = sizes_n.iter().map(|(s, _)| s.iter().sum::<usize>()).max().unwrap();
    Verdict::new(
        failures.is_empty(),
        format!("100 clique unions (max n {max_n}); failures: {failures:?}"),
    )
}

fn criterion_3_sweep() {
    let mut rng = seed::rng(303);
    let mut instances = Vec::new();
    for _ in 0..40 {
        let n = rng.gen_range(1..=150);
        let d = rng.gen_range(0.0..=1.0);
        instances.push(random_instance(n, d, &mut rng));
    }
    let skew = prepare_dataset(&DatasetSpec::Skew, 0.5, 3).unwrap().instance;
    instances.push(skew);
    instances.par_iter().enumerate().for_each(|(i, inst)| {
        for a in 0..=20 {
            let rate = QueryRate::power(a as f64 / 20.0).unwrap();
            for r in 0..5 {
                checked_acc(inst, &rate, seed::derive(33, &[i as u64, a, r]));
            }
        }
    });
}

fn criterion_3() -> Verdict {
    let runs = ACC_RUNS.load(Ordering::Relaxed);
    let bad = ACC_VIOLATIONS.load(Ordering::Relaxed);
    Verdict::new(
        bad == 0 && runs > 0,
        format!("{runs} ACC runs checked, {bad} exceeded n*ceil(f(n))"),
    )
}

fn mean_over_runs<F>(runs: u64, f: F) -> Stats
where
    F: Fn(u64) -> f64 + Sync,
{
    let xs: Vec<f64> = (0..runs).into_par_iter().map(&f).collect();
    stats(&xs)
}

fn criterion_4() -> Verdict {
    let inst = prepare_dataset(&DatasetSpec::Skew, 0.0, 0).unwrap().instance;
    let n = inst.n() as f64;
    let mut pass = true;
    let mut parts = Vec::new();
    for a in [0.3, 0.5, 0.7] {
        let rate = QueryRate::power(a).unwrap();
        let s = mean_over_runs(1000, |r| {
            let (c, _) = checked_acc(&inst, &rate, seed::derive(4, &[(a * 10.0) as u64, r]));
            cost(&inst, &c).unwrap() as f64
        });
        let bound = acc_constant() * n * n / n.powf(a) + n / E;
        pass &= s.mean <= bound + 3.0 * s.se;
        parts.push(format!("a={a}: {:.1} <= {:.1}", s.mean, bound + 3.0 * s.se));
    }
    Verdict::new(pass, parts.join("; "))
}

fn criterion_5() -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for (k, eta) in [0.1, 0.5].into_iter().enumerate() {
        for (j, sizes) in [vec![4, 3, 3], vec![5, 5], vec![3, 3, 2, 1]].iter().enumerate() {
            let (base, _) = generate_clique_union(sizes, seed::derive(5, &[k as u64, j as u64])).unwrap();
            let inst = perturb(&base, eta, seed::derive(55, &[k as u64, j as u64])).unwrap();
            let opt = exact_opt(&inst).unwrap().0 as f64;
            let n = inst.n() as f64;
            for a in [0.0, 0.5, 1.0] {
                let rate = QueryRate::power(a).unwrap();
                let s = mean_over_runs(2000, |r| {
                    let (c, _) = checked_acc(&inst, &rate, seed::derive(500, &[k as u64, j as u64, r]));
                    cost(&inst, &c).unwrap() as f64
                });
                let bound = 3.0 * opt + acc_constant() * n * n / rate.eval(inst.n()) + n / E;
                let ok = s.mean <= bound + 3.0 * s.se;
                pass &= ok;
                if !ok || a == 0.5 {
                    parts.push(format!(
                        "eta={eta} n={n} OPT={opt} a={a}: {:.2} <= {:.2}",
                        s.mean,
                        bound + 3.0 * s.se
                    ));
                }
            }
        }
    }
    Verdict::new(pass, parts.join("; "))
}

fn criterion_6() -> Verdict {
    let skew = prepare_dataset(&DatasetSpec::Skew, 0.0, 0).unwrap().instance;
    let (cube, _) = generate_clique_union(&[49; 7], 6).unwrap();
    let (mixed, _) = generate_clique_union(&[60, 30, 10, 5, 5, 1, 1], 66).unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, inst) in [("skew", &skew), ("7x49", &cube), ("mixed", &mixed)] {
        let n = inst.n();
        let nf = n as f64;
        for a in [0.25, 0.5, 0.75, 1.0] {
            let rate = QueryRate::power(a).unwrap();
            let runs: Vec<(f64, f64)> = (0..1000u64)
                .into_par_iter()
                .map(|r| {
                    let mut o = QueryOracle::new(inst);
                    let (c, t) = access(&mut o, &rate, &mut seed::rng(seed::derive(6, &[n as u64, r]))).unwrap();
                    (t.queries as f64, cost(inst, &c).unwrap() as f64)
                })
                .collect();
            let q = stats(&runs.iter().map(|x| x.0).collect::<Vec<_>>());
            let d = stats(&runs.iter().map(|x| x.1).collect::<Vec<_>>());
            let q_bound = (n * (rate.ceil_at(n) + 4)) as f64;
            let d_bound = 2.0 * nf * nf / rate.eval(n) + nf / E;
            let ok = q.mean <= q_bound + 3.0 * q.se && d.mean <= d_bound + 3.0 * d.se;
            pass &= ok;
            parts.push(format!(
                "{name} a={a}: Q {:.0}<={q_bound:.0}, cost {:.0}<={d_bound:.0}",
                q.mean, d.mean
            ));
        }
    }
    Verdict::new(pass, parts.join("; "))
}

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / lx.len() as f64;
    let my = ly.iter().sum::<f64>() / ly.len() as f64;
    let num: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    num / den
}

fn criterion_7() -> Verdict {
    const ACC_EXPONENT: f64 = 1.5;
    let rate = QueryRate::power(0.5).unwrap();
    let ns = [125usize, 343, 729];
    let mut access_q = Vec::new();
    let mut acc_q = Vec::new();
    for &n in &ns {
        let side = (n as f64).cbrt().round() as usize;
        let (inst, _) = generate_clique_union(&vec![side * side; side], seed::child(7, n as u64)).unwrap();
        let a = mean_over_runs(1000, |r| {
            let mut o = QueryOracle::new(&inst);
            access(&mut o, &rate, &mut seed::rng(seed::derive(77, &[n as u64, r])))
                .unwrap()
                .1
                .queries as f64
        });
        let b = mean_over_runs(1000, |r| {
            checked_acc(&inst, &rate, seed::derive(78, &[n as u64, r])).1.queries as f64
        });
        access_q.push(a.mean);
        acc_q.push(b.mean);
    }
    let x: Vec<f64> = ns.iter().map(|&n| n as f64).collect();
    let access_slope = slope(&x, &access_q);
    let acc_slope = slope(&x, &acc_q);
    Verdict::new(
        access_slope <= ACC_EXPONENT - 0.1,
        format!(
            "ACCESS exponent {access_slope:.3} (need <= {:.1}); ACCESS mean Q {access_q:.0?}; \
             empirical ACC exponent {acc_slope:.3}, ACC mean Q {acc_q:.0?}",
            ACC_EXPONENT - 0.1
        ),
    )
}

fn criterion_8() -> Verdict {
    let (eps, size, n) = (0.05, 200usize, 400usize);
    let (inst, truth) = generate_planted_partition(&[size, size], 0.97, 0.02, 8).unwrap();
    let latent = truth.groups()[0].clone();
    let cert = knit_check(&inst, &latent).unwrap();
    if !cert.is_knit(eps) {
        return Verdict::new(
            false,
            format!("fixture is not (1-{eps})-knit: eps* = {:.4}", cert.epsilon),
        );
    }
    let rate = QueryRate::identity();
    let s = mean_over_runs(500, |r| {
        let (c, _) = checked_acc(&inst, &rate, seed::derive(8, &[r]));
        recovery_distance(&latent, &c).distance as f64
    });
    let (c, nf, f) = (size as f64, n as f64, rate.eval(n));
    let bound = 3.0 * eps * c + (2.0 * nf / f).min((1.0 - f / nf) * c) + c * (-c * f / (5.0 * nf)).exp();
    Verdict::new(
        s.mean <= bound + 3.0 * s.se,
        format!(
            "eps*={:.4}, mean |C xor C'| {:.2} <= {:.2}",
            cert.epsilon,
            s.mean,
            bound + 3.0 * s.se
        ),
    )
}

fn criterion_9() -> Verdict {
    let (eps, p, trials) = (0.1, 0.1, 200u64);
    let sizes = [50usize; 4];
    let n = sizes.iter().sum::<usize>();
    let rate = QueryRate::power(0.75).unwrap();
    let threshold = 10.0 * n as f64 / rate.eval(n);
    let runs = default_runs(n, p).unwrap();
    let outcomes: Vec<Result<(bool, bool), String>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let (inst, truth) = generate_quasi_cliques(&sizes, eps, 0.05, seed::derive(9, &[t])).unwrap();
            let groups = truth.groups();
            for g in &groups {
                if !strongly_knit_check(&inst, g).unwrap().is_strongly_knit(eps) || g.len() as f64 <= threshold {
                    return Err(format!("trial {t}: latent cluster violates the premise"));
                }
            }
            let out = acr(&inst, &rate, runs, seed::derive(99, &[t])).unwrap();
            let first = recovery_distance(&groups[0], &out.clustering).distance == 0;
            let all = groups
                .iter()
                .all(|g| recovery_distance(g, &out.clustering).distance == 0);
            Ok((first, all))
        })
        .collect();
    let outcomes: Vec<(bool, bool)> = match outcomes.into_iter().collect() {
        Ok(v) => v,
        Err(e) => return Verdict::new(false, e),
    };
    let fail = outcomes.iter().filter(|o| !o.0).count() as f64 / trials as f64;
    let fail_any = outcomes.iter().filter(|o| !o.1).count() as f64 / trials as f64;
    let sigma = (p * (1.0 - p) / trials as f64).sqrt();
    Verdict::new(
        fail <= p + 3.0 * sigma,
        format!(
            "n={n}, |C|=50 > {threshold:.1}, K={runs}: failure rate {fail:.3} <= {:.3} (any cluster: {fail_any:.3})",
            p + 3.0 * sigma
        ),
    )
}

fn criterion_10() -> Verdict {
    let mut parts = Vec::new();
    let mut pass = true;
    for n in 3..=5 {
        let r = vc_shattering_check(n).unwrap();
        pass &= r.dimension == n - 1 && r.spanning_tree_shattered && r.n_sets_rejected == binom(pairs(n), n as u64);
        parts.push(format!("n={n}: {}", r.dimension));
    }
    Verdict::new(pass, parts.join(", "))
}

fn binom(a: u64, b: u64) -> usize {
    (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1)) as usize
}

/// Spearman correlation with average ranks for ties.
fn spearman(x: &[f64], y: &[f64]) -> f64 {
    fn ranks(v: &[f64]) -> Vec<f64> {
        let mut idx: Vec<usize> = (0..v.len()).collect();
        idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
        let mut r = vec![0.0; v.len()];
        let mut i = 0;
        while i < idx.len() {
            let mut j = i;
            while j + 1 < idx.len() && v[idx[j + 1]] == v[idx[i]] {
                j += 1;
            }
            for &k in &idx[i..=j] {
                r[k] = (i + j) as f64 / 2.0;
            }
            i = j + 1;
        }
        r
    }
    let (rx, ry) = (ranks(x), ranks(y));
    let m = (rx.len() as f64 - 1.0) / 2.0;
    let cov: f64 = rx.iter().zip(&ry).map(|(a, b)| (a - m) * (b - m)).sum();
    let vx: f64 = rx.iter().map(|a| (a - m).powi(2)).sum();
    let vy: f64 = ry.iter().map(|b| (b - m).powi(2)).sum();
    cov / (vx * vy).sqrt()
}

fn criterion_11() -> Verdict {
    let mut cfg = ExperimentConfig::new(DatasetSpec::Skew, Algorithm::Acc, 11);
    cfg.etas = vec![0.0];
    let records = run_sweep(&cfg).unwrap();
    let q: Vec<f64> = records.iter().map(|r| r.mu_q).collect();
    let d: Vec<f64> = records.iter().map(|r| r.mu_delta).collect();
    let rho = spearman(&q, &d);
    let n = 900.0f64;
    let bound_ok = records.iter().all(|r| r.mu_q <= n * n.powf(r.alpha).ceil());
    let kwik_zero = records
        .last()
        .map(|r| r.alpha == 1.0 && r.mu_delta == 0.0)
        .unwrap_or(false);

    let fixture = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/sbm60.edges");
    let spec = DatasetSpec::parse(&format!("file:{}", fixture.display()), InstanceFormat::Edges).unwrap();
    let mut file_cfg = ExperimentConfig::new(spec, Algorithm::Acc, 11);
    file_cfg.etas = vec![0.0, 0.1];
    file_cfg.alphas = vec![0.0, 0.5, 1.0];
    file_cfg.repetitions = 5;
    let file_records = run_sweep(&file_cfg).unwrap();
    let mut buf = Vec::new();
    bench::write_csv(&file_records, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let schema_ok = text.starts_with(&format!("{}\n", bench::CSV_HEADER))
        && bench::parse_csv(text.as_bytes()).unwrap() == file_records
        && file_records.len() == 6;
    Verdict::new(
        rho <= -0.8 && bound_ok && kwik_zero && schema_ok,
        format!(
            "Spearman(mu_Q, mu_Delta) = {rho:.3} over {} alphas; mu_Q bound {bound_ok}; alpha=1 cost 0 {kwik_zero}; \
             file ingest CSV schema {schema_ok}",
            records.len()
        ),
    )
}

fn criterion_12() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let path = dir.path().join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_corrclust"))
            .args([
                "sweep",
                "--dataset",
                "skew",
                "--eta",
                "0,0.1",
                "--alpha",
                "0,0.25,0.5,0.75,1",
                "--reps",
                "5",
            ])
            .args(["--seed", "12", "--out"])
            .arg(&path)
            .status()
            .unwrap();
        if !status.success() {
            return Verdict::new(false, format!("sweep exited with {status}"));
        }
        files.push(std::fs::read(&path).unwrap());
    }
    let mut cfg = ExperimentConfig::new(DatasetSpec::Skew, Algorithm::Access, 12);
    cfg.etas = vec![0.5];
    cfg.alphas = vec![0.5];
    cfg.repetitions = 5;
    let (mut x, mut y) = (Vec::new(), Vec::new());
    bench::write_csv(&run_sweep(&cfg).unwrap(), &mut x).unwrap();
    bench::write_csv(&run_sweep(&cfg).unwrap(), &mut y).unwrap();
    let same = files[0] == files[1] && x == y;
    Verdict::new(
        same,
        format!(
            "CLI sweep outputs identical ({} bytes); library sweeps identical",
            files[0].len()
        ),
    )
}

type Criterion = (u32, &'static str, Duration, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "exact solver cross-check", Duration::from_secs(60), criterion_1),
        (2, "KwikCluster perfect recovery", Duration::from_secs(60), criterion_2),
        (4, "ACC error bound on OPT=0", Duration::from_secs(300), criterion_4),
        (5, "ACC 3*OPT + additive bound", Duration::from_secs(120), criterion_5),
        (6, "ACCESS queries and cost", Duration::from_secs(300), criterion_6),
        (7, "ACCESS savings trend", Duration::from_secs(300), criterion_7),
        (8, "recovery of knit clusters", Duration::from_secs(300), criterion_8),
        (9, "ACR exact recovery", Duration::from_secs(300), criterion_9),
        (10, "VC dimension", Duration::from_secs(60), criterion_10),
        (11, "tradeoff monotonicity", Duration::from_secs(300), criterion_11),
        (12, "sweep determinism", Duration::from_secs(300), criterion_12),
        (3, "ACC deterministic query bound", Duration::from_secs(300), || {
            criterion_3_sweep();
            criterion_3()
        }),
    ];
    let mut results = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let pass = verdict.pass && elapsed < limit;
        results.push((id, pass));
        println!(
            "criterion {id:>2} [{}] {name}: {} ({:.1}s, limit {}s)",
            if pass { "PASS" } else { "FAIL" },
            verdict.detail,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    println!("{} of {} criteria passed", results.len() - failed.len(), results.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed: {failed:?}");
        ExitCode::FAILURE
    }
}
