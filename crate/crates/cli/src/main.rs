use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fbsplit::problems::ExampleInstance;
use fbsplit_cli::bench::format_table;
use fbsplit_cli::{emit_trace, run_benchmark, run_instance, Algorithm, InstanceDoc, ReportRow, RunConfig};

#[derive(Parser)]
#[command(name = "fbsplit", version, about = "Projection-splitting solvers for systems of monotone inclusions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random instance as JSON.
    Generate(GenerateArgs),
    /// Run one or both algorithms and print an iter/nT report.
    Run(RunArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// 1: A_i(x) = Q_iᵀQ_i x;  2: A_i(x) = Q_iᵀQ_i x + x³
    #[arg(long, default_value_t = 1)]
    example: u8,
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    m: usize,
    /// Number of constraint rows.
    #[arg(long, default_value_t = 20)]
    l: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1.0)]
    scale: f64,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Also store the generated matrices (otherwise the seed alone describes the instance).
    #[arg(long)]
    with_matrices: bool,
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Parallel,
    Cyclic,
    Both,
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Load the instance from a JSON file instead of the flags above.
    #[arg(long)]
    instance_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = AlgorithmArg::Both)]
    algorithm: AlgorithmArg,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long, default_value_t = 0.5)]
    theta: f64,
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Radius R of the bounded selection.
    #[arg(long = "radius", default_value_t = 1.0)]
    radius: f64,
    /// Stop once the iterate is this close to the known solution 0.
    #[arg(long, default_value_t = 1e-3)]
    tol_dist: f64,
    #[arg(long, default_value_t = 1e-10)]
    eps_res: f64,
    #[arg(long, default_value_t = 1e-8)]
    eps_proj: f64,
    #[arg(long, default_value_t = 100_000)]
    k_max: usize,
    #[arg(long, default_value_t = 100)]
    j_max: u32,
    /// Directory for per-run CSV traces (`<algorithm>.csv`).
    #[arg(long)]
    trace_dir: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    trace_stride: usize,
    /// Also write the report rows as CSV.
    #[arg(long)]
    report_csv: Option<PathBuf>,
    /// Print the report rows as JSON instead of a table.
    #[arg(long)]
    json: bool,
}

impl RunArgs {
    fn config(&self) -> RunConfig {
        let i = &self.instance;
        RunConfig {
            example: i.example,
            algorithm: match self.algorithm {
                AlgorithmArg::Parallel => Algorithm::Parallel,
                AlgorithmArg::Cyclic => Algorithm::Cyclic,
                AlgorithmArg::Both => Algorithm::Both,
            },
            n: i.n,
            m: i.m,
            l: i.l,
            seed: i.seed,
            scale: i.scale,
            delta: self.delta,
            theta: self.theta,
            beta: self.beta,
            radius: self.radius,
            tol_dist: self.tol_dist,
            eps_res: self.eps_res,
            eps_proj: self.eps_proj,
            k_max: self.k_max,
            j_max: self.j_max,
            trace_stride: self.trace_stride,
        }
    }
}

fn generate(args: &GenerateArgs) -> Result<()> {
    let i = &args.instance;
    let doc = InstanceDoc {
        example: i.example,
        n: i.n,
        m: i.m,
        l: i.l,
        seed: i.seed,
        scale: i.scale,
        matrices: None,
    };
    let inst: ExampleInstance = doc.to_instance()?;
    InstanceDoc::from_instance(&inst, args.with_matrices).save(&args.output)?;
    Ok(())
}

fn run(args: &RunArgs) -> Result<bool> {
    let cfg = args.config();
    let runs = match &args.instance_file {
        Some(path) => run_instance(&InstanceDoc::load(path)?.to_instance()?, &cfg)?,
        None => run_benchmark(&cfg)?,
    };
    if let Some(dir) = &args.trace_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for r in &runs {
            emit_trace(&r.trace, &dir.join(format!("{}.csv", r.row.algorithm.name())))?;
        }
    }
    let rows: Vec<ReportRow> = runs.into_iter().map(|r| r.row).collect();
    if let Some(path) = &args.report_csv {
        let mut w = csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        for r in &rows {
            w.serialize(r)?;
        }
        w.flush()?;
    }
    if args.json {
        println!("{}", serde_json::to_string_pretty(&rows)?);
    } else {
        print!("{}", format_table(&rows));
    }
    Ok(rows.iter().all(ReportRow::converged))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(args) => generate(args).map(|_| true),
        Command::Run(args) => run(args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
