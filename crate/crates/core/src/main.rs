use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use corrclust::bench::{self, Algorithm, DatasetSpec, ExperimentConfig};
use corrclust::error::{Error, Result};
use corrclust::exact::{self, Limits};
use corrclust::instance::{self, InstanceFormat};
use corrclust::metrics;

#[derive(Parser)]
#[command(
    name = "corrclust",
    version,
    about = "Active correlation clustering with pairwise queries"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate (and optionally perturb) an instance and write it to disk.
    Gen(GenArgs),
    /// Run one algorithm once and print a key=value report.
    Run(RunArgs),
    /// Sweep the (eta, alpha) grid and write aggregated CSV.
    Sweep(SweepArgs),
    /// Solve a small instance exactly.
    Opt(OptArgs),
    /// Brute-force VC dimension of the partition class on n points.
    VcCheck(VcArgs),
}

#[derive(Args)]
struct DatasetArgs {
    /// skew | cliques:SIZES | lb-cliques:N:D | planted:N:EPS[:ALPHA] | sbm:SIZES:PIN:POUT | file:PATH
    #[arg(long, default_value = "skew")]
    dataset: String,
    /// On-disk instance format for `file:` datasets and `gen` output.
    #[arg(long, default_value = "edges")]
    format: InstanceFormat,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl DatasetArgs {
    fn spec(&self) -> Result<DatasetSpec> {
        DatasetSpec::parse(&self.dataset, self.format)
    }
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    data: DatasetArgs,
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    /// Instance output path.
    #[arg(long)]
    out: PathBuf,
    /// Also write the latent partition here.
    #[arg(long)]
    truth: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    data: DatasetArgs,
    /// acc | access | kwik | acr[:K] | erm[:Q]
    #[arg(long, default_value = "acc")]
    algo: Algorithm,
    #[arg(long, default_value_t = 0.5)]
    alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    /// Abort once this many queries have been issued.
    #[arg(long)]
    budget: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    data: DatasetArgs,
    #[arg(long, default_value = "acc")]
    algo: Algorithm,
    /// Comma-separated alpha grid; defaults to 0, 0.05, ..., 1.
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<f64>,
    /// Comma-separated eta grid; defaults to 0, 0.1, 0.5, 1.
    #[arg(long, value_delimiter = ',')]
    eta: Vec<f64>,
    #[arg(long, default_value_t = 20)]
    reps: usize,
    /// CSV output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OptArgs {
    #[command(flatten)]
    data: DatasetArgs,
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    /// Raise the enumeration cap (slow beyond the default).
    #[arg(long, default_value_t = exact::EXACT_MAX_NODES)]
    max_nodes: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VcArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Io {
            path: path.to_path_buf(),
            source: e,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn gen(args: GenArgs) -> Result<()> {
    let data = bench::prepare_dataset(&args.data.spec()?, args.eta, args.data.seed)?;
    instance::save_instance(&args.out, &data.instance, args.data.format)?;
    if let Some(path) = &args.truth {
        let truth = data
            .truth
            .as_ref()
            .ok_or_else(|| Error::Contract("dataset carries no ground truth".into()))?;
        instance::save_ground_truth(path, truth)?;
    }
    log::info!(
        "wrote {} nodes, {} positive pairs to {}",
        data.instance.n(),
        data.instance.edge_count(),
        args.out.display()
    );
    Ok(())
}

fn run(args: RunArgs) -> Result<()> {
    let report = bench::run_once(
        &args.data.spec()?,
        args.algo,
        args.alpha,
        args.eta,
        args.budget,
        args.data.seed,
    )?;
    emit(&report.to_kv(), args.out.as_deref())
}

fn sweep(args: SweepArgs) -> Result<()> {
    let mut config = ExperimentConfig::new(args.data.spec()?, args.algo, args.data.seed);
    if !args.alpha.is_empty() {
        config.alphas = args.alpha;
    }
    if !args.eta.is_empty() {
        config.etas = args.eta;
    }
    config.repetitions = args.reps;
    config.output = args.out.clone();
    let records = bench::run_sweep(&config)?;
    if args.out.is_none() {
        bench::write_csv(&records, std::io::stdout().lock())?;
    }
    Ok(())
}

fn opt(args: OptArgs) -> Result<()> {
    let data = bench::prepare_dataset(&args.data.spec()?, args.eta, args.data.seed)?;
    let limits = Limits::with_max_nodes(args.max_nodes);
    let (opt, clustering) = exact::exact_opt_with(&data.instance, limits)?;
    let triangles = metrics::bad_triangle_stats(&data.instance)?;
    let mut s = String::new();
    let _ = writeln!(s, "dataset={}", data.id);
    let _ = writeln!(s, "n={}", data.instance.n());
    let _ = writeln!(s, "opt={opt}");
    let _ = writeln!(s, "bad_triangles={}", triangles.bad_triangles);
    let _ = writeln!(s, "packing_lower_bound={}", triangles.packing);
    let clusters: Vec<String> = clustering
        .clusters()
        .iter()
        .map(|c| c.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    let _ = writeln!(s, "clustering={}", clusters.join(" | "));
    emit(&s, args.out.as_deref())
}

fn vc_check(args: VcArgs) -> Result<()> {
    let report = exact::vc_shattering_check(args.n)?;
    let mut s = String::new();
    let _ = writeln!(s, "n={}", report.n);
    let _ = writeln!(s, "vc_dimension={}", report.dimension);
    let witness: Vec<String> = report.witness.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    let _ = writeln!(s, "witness={}", witness.join(","));
    let _ = writeln!(s, "spanning_tree_shattered={}", report.spanning_tree_shattered);
    let _ = writeln!(s, "n_sets_rejected={}", report.n_sets_rejected);
    emit(&s, args.out.as_deref())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(a) => gen(a),
        Command::Run(a) => run(a),
        Command::Sweep(a) => sweep(a),
        Command::Opt(a) => opt(a),
        Command::VcCheck(a) => vc_check(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
