use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wavesearch_cli::{parse_angle, run_experiment, CliError, ExperimentConfig, Format};

#[derive(Parser)]
#[command(name = "wavesearch", version, about = "Grover search, wave focusing and lattice experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Grover iteration: run, threshold, sweep or spectrum.
    Grover(Params),
    /// Classical oscillator-bank focusing: focus or disperse.
    Wave(Params),
    /// Tight-binding chain: spectrum, bound or disorder.
    Lattice(Params),
    /// Walk search on graphs: ctqw, dtqw, revival or hitting.
    Spatial(Params),
    /// Database size searchable with exactly Q queries.
    SolveN(Params),
    /// Table of N for Q = 1, 2, 3.
    Table(Params),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated target indices.
    #[arg(long, value_delimiter = ',')]
    targets: Option<Vec<usize>>,
    /// Radians, or forms like `pi`, `pi/4`, `3pi/4`.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    oracle_phase: Option<f64>,
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    diffusion_phase: Option<f64>,
    #[arg(long)]
    steps: Option<usize>,
    #[arg(long)]
    threshold: Option<f64>,
    #[arg(long)]
    energy: Option<f64>,
    #[arg(long)]
    length: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    hopping: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    impurity: Option<f64>,
    #[arg(long)]
    disorder: Option<f64>,
    #[arg(long)]
    trials: Option<usize>,
    /// `open` or `periodic`.
    #[arg(long)]
    boundary: Option<String>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    time: Option<f64>,
    #[arg(long)]
    dt: Option<f64>,
    /// `16x16` for a 2-D torus, `32` for a cycle.
    #[arg(long)]
    dims: Option<String>,
    #[arg(long)]
    queries: Option<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory for series files and summary.json.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// JSON config file; its keys override the flags.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Params {
    fn into_config(self, experiment: &str) -> Result<ExperimentConfig, CliError> {
        let file = self.config.clone();
        let config = ExperimentConfig {
            experiment: experiment.to_string(),
            mode: self.mode,
            n: self.n,
            targets: self.targets,
            oracle_phase: self.oracle_phase,
            diffusion_phase: self.diffusion_phase,
            steps: self.steps,
            threshold: self.threshold,
            energy: self.energy,
            length: self.length,
            hopping: self.hopping,
            impurity: self.impurity,
            disorder: self.disorder,
            trials: self.trials,
            boundary: self.boundary,
            gamma: self.gamma,
            time: self.time,
            dt: self.dt,
            dims: self.dims,
            queries: self.queries,
            seed: self.seed,
            out: self.out,
            format: match self.format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            },
        };
        match file {
            Some(path) => {
                let text = fs::read_to_string(&path).map_err(|source| CliError::Io { path, source })?;
                config.merged_with(&text)
            }
            None => Ok(config),
        }
    }
}

fn execute(cli: Cli) -> Result<(), CliError> {
    let (name, params) = match cli.command {
        Command::Grover(p) => ("grover", p),
        Command::Wave(p) => ("wave", p),
        Command::Lattice(p) => ("lattice", p),
        Command::Spatial(p) => ("spatial", p),
        Command::SolveN(p) => ("solve-n", p),
        Command::Table(p) => ("table", p),
    };
    let config = params.into_config(name)?;
    let record = run_experiment(&config)?;
    match &config.out {
        Some(dir) => {
            for path in record.write(dir)? {
                println!("{}", path.display());
            }
        }
        None => match &record.text {
            Some(text) => print!("{text}"),
            None => println!("{}", serde_json::to_string_pretty(&record).expect("record serializes")),
        },
    }
    Ok(())
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.one_line());
            ExitCode::FAILURE
        }
    }
}
