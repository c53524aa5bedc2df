use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use tdbound::commands::{self, McConfig, SizeMethod};
use tdbound::{CliError, Format, Result, Table};
use tdbound_core::bounds::{GateSetKind, Method};

#[derive(Parser)]
#[command(name = "tdbound", version, about = "Bounds on how well random gate sets approximate unitary t-designs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, default_value = "csv")]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the irreducible representations in the t-th moment with their data.
    LambdaSet {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: u32,
        /// Largest d for exact zero-weight multiplicities.
        #[arg(long, default_value_t = tdbound_core::rep::DEFAULT_WEYL_CAP)]
        weyl_cap: usize,
    },
    /// Total failure bound as a function of delta.
    BoundsCurve {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        size: u64,
        /// Comma-separated methods; defaults to all four main ones.
        #[arg(long, value_delimiter = ',')]
        methods: Vec<Method>,
        /// Either `start:stop:count` or a comma-separated list.
        #[arg(long, default_value = "0.05:0.95:19")]
        deltas: String,
    },
    /// Log objective of the symmetric bound over a grid of theta.
    ThetaCurve {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        size: u64,
        #[arg(long)]
        delta: f64,
        /// Either `start:stop:count` or a comma-separated list.
        #[arg(long, default_value = "1:200:200")]
        thetas: String,
    },
    /// Smallest gate set meeting a target.
    MinSize {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value_t = 0.99)]
        prob: f64,
        /// A bound method or `closed-form`.
        #[arg(long, default_value = "master-plain")]
        method: SizeMethod,
    },
    /// Minimal sizes over the standard grid of d, t and method.
    Table {
        #[arg(long, default_value_t = 0.5)]
        delta: f64,
        #[arg(long, default_value_t = 0.99)]
        prob: f64,
        /// Only cells with d at most this value.
        #[arg(long)]
        max_d: Option<usize>,
    },
    /// Clifford group orders against random-gate-set sizes.
    Clifford {
        #[arg(long, default_value_t = 50)]
        max_qubits: u32,
    },
    /// Monte Carlo tail of the spectral gap against the bounds.
    McVerify {
        #[arg(long, default_value_t = 2)]
        d: usize,
        #[arg(long, default_value_t = 2)]
        t: u32,
        #[arg(long, default_value_t = 10)]
        size: u64,
        #[arg(long, default_value = "plain")]
        kind: GateSetKind,
        #[arg(long, default_value_t = 0.9)]
        delta: f64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write per-trial records as JSON lines here.
        #[arg(long)]
        trial_log: Option<PathBuf>,
    },
}

fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || CliError::Usage(format!("cannot parse grid `{spec}`"));
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [start, stop, count] => {
            let a: f64 = start.trim().parse().map_err(|_| bad())?;
            let b: f64 = stop.trim().parse().map_err(|_| bad())?;
            let n: usize = count.trim().parse().map_err(|_| bad())?;
            match n {
                0 => Err(bad()),
                1 => Ok(vec![a]),
                _ => Ok((0..n).map(|k| a + (b - a) * k as f64 / (n - 1) as f64).collect()),
            }
        }
        [list] => list.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect(),
        _ => Err(bad()),
    }
}

fn run(cli: Cli) -> Result<()> {
    tdbound::parallel::init_thread_pool()?;
    let table: Table = match cli.command {
        Command::LambdaSet { d, t, weyl_cap } => commands::lambda_set(d, t, weyl_cap)?,
        Command::BoundsCurve { d, t, size, methods, deltas } => {
            let methods = if methods.is_empty() {
                vec![Method::MasterPlain, Method::MasterSymmetric, Method::BernsteinPlain, Method::BernsteinSymmetric]
            } else {
                methods
            };
            commands::bounds_curve(d, t, size, &methods, &parse_grid(&deltas)?)?
        }
        Command::ThetaCurve { d, t, size, delta, thetas } => {
            commands::theta_curve(d, t, size, delta, &parse_grid(&thetas)?)?
        }
        Command::MinSize { d, t, delta, prob, method } => commands::min_size(d, t, delta, prob, method)?,
        Command::Table { delta, prob, max_d } => {
            let cells: Vec<_> =
                commands::table2_cells().into_iter().filter(|c| max_d.is_none_or(|m| c.d <= m)).collect();
            commands::table2(&cells, delta, prob)?
        }
        Command::Clifford { max_qubits } => commands::clifford(max_qubits)?,
        Command::McVerify { d, t, size, kind, delta, trials, seed, trial_log } => {
            let report = commands::mc_verify(&McConfig { d, t, size, kind, delta, trials, seed })?;
            if let Some(path) = trial_log {
                fs::write(path, commands::trial_log(&report.records))?;
            }
            report.table
        }
    };
    let text = table.render(cli.common.format)?;
    match cli.common.output {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
