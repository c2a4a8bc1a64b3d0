use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use firewsn_cli::{analyze, simulate, sweep, CliError, Report, ScenarioConfig};
use firewsn_core::FireModelKind;

#[derive(Parser, Debug)]
#[command(name = "firewsn", version, about = "Wildfire detection by Poisson sensor networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// TOML scenario file; omitted fields take the reference values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Restrict the run to one fire model.
    #[arg(long, global = true)]
    model: Option<FireModelKind>,

    /// Master seed for the Monte Carlo runs.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// CSV destination (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for Monte Carlo runs (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Analytic sensing probability over time and per-model headline numbers.
    Analyze,
    /// Monte Carlo validation of the analytic curve.
    Simulate,
    /// Critical density and detection probability along the configured axis.
    Sweep,
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let mut config = match &cli.config {
        Some(path) => ScenarioConfig::load(path)?,
        None => ScenarioConfig::default(),
    };
    if let Some(seed) = cli.seed {
        config.simulation.seed = seed;
    }
    if let Some(out) = &cli.out {
        config.output = Some(out.clone());
    }
    let models = match cli.model {
        Some(kind) => vec![kind],
        None => config.model_kinds()?,
    };
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::InvalidConfig(format!("thread pool: {e}")))?;
    }
    let report = match cli.command {
        Command::Analyze => analyze(&config, &models)?,
        Command::Simulate => simulate(&config, &models)?,
        Command::Sweep => sweep(&config, &models)?,
    };
    match &config.output {
        Some(path) => {
            std::fs::write(path, &report.csv)?;
            print!("{}", report.summary);
        }
        None => {
            print!("{}", report.csv);
            eprint!("{}", report.summary);
        }
    }
    Ok(report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => ExitCode::from(report.exit_code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
