use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rankcodes::experiment::{self, Code, ExperimentConfig, OutputFormat, OutputSpec, SweepOptions};

/// Encode/corrupt/decode experiments for list-decodable subspace and folded
/// Gabidulin codes.
#[derive(Parser)]
#[command(name = "rankcodes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print rates, decoder parameters and radii.
    Info(Common),
    /// One encode, channel, decode cycle. Exits 0 iff the message is recovered.
    Roundtrip {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        rho: usize,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Run every trial of every grid cell and write one row per trial.
    Sweep {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        trials: Option<usize>,
        /// Worker threads.
        #[arg(long)]
        parallel: Option<usize>,
        /// Fill the micros column (output is then no longer reproducible).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum Failure {
    Miss(String),
    Config(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Miss(_) => 1,
            Failure::Config(_) => 2,
            Failure::Io(_) => 3,
        }
    }
}

fn load(common: &Common) -> Result<(ExperimentConfig, Code), Failure> {
    let text = std::fs::read_to_string(&common.config)
        .map_err(|e| Failure::Config(format!("{}: {e}", common.config.display())))?;
    let mut config = ExperimentConfig::from_json(&text).map_err(|e| Failure::Config(e.to_string()))?;
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    let code = Code::build(&config).map_err(|e| Failure::Config(e.to_string()))?;
    Ok((config, code))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Info(common) => {
            let (_, code) = load(&common)?;
            let info = experiment::info(&code).map_err(|e| Failure::Config(e.to_string()))?;
            print!("{info}");
            Ok(())
        }
        Command::Roundtrip { common, rho, t } => {
            let (config, code) = load(&common)?;
            code.check_cell(rho, t).map_err(|e| Failure::Config(e.to_string()))?;
            let rec = experiment::run_trial(&code, rho, t, 0, config.seed, false)
                .map_err(|e| Failure::Config(e.to_string()))?;
            let dim = rec.list_dim.map_or("none".to_string(), |d| d.to_string());
            println!(
                "rho = {rho}, t = {t}: success = {}, list_dim = {dim}, guaranteed = {}",
                rec.success, rec.guaranteed
            );
            if rec.success {
                Ok(())
            } else {
                Err(Failure::Miss("message not in the decoded list".into()))
            }
        }
        Command::Sweep { common, out, format, trials, parallel, timing } => {
            let (mut config, _) = load(&common)?;
            if let Some(n) = trials {
                config.trials = n;
            }
            if let Some(path) = out {
                let format = match (format, &config.output) {
                    (Some(Format::Json), _) => OutputFormat::Json,
                    (Some(Format::Csv), _) => OutputFormat::Csv,
                    (None, Some(o)) => o.format,
                    (None, None) => OutputFormat::Csv,
                };
                config.output = Some(OutputSpec { path: path.display().to_string(), format });
            } else if let (Some(f), Some(o)) = (format, config.output.as_mut()) {
                o.format = match f {
                    Format::Csv => OutputFormat::Csv,
                    Format::Json => OutputFormat::Json,
                };
            }
            let result = experiment::sweep(&config, SweepOptions { parallel, timing })
                .map_err(|e| Failure::Config(e.to_string()))?;

            let stdout = io::stdout();
            let mut w = stdout.lock();
            let io_err = |e: io::Error| Failure::Io(e.to_string());
            writeln!(w, "rho,t,trials,successes,guaranteed,max_list_dim").map_err(io_err)?;
            for c in &result.summary {
                let dim = c.max_list_dim.map_or(String::new(), |d| d.to_string());
                writeln!(w, "{},{},{},{},{},{dim}", c.rho, c.t, c.trials, c.successes, c.guaranteed).map_err(io_err)?;
            }
            writeln!(w, "guarantee misses: {}", result.guarantee_misses).map_err(io_err)?;

            if let Some(spec) = &config.output {
                let file = File::create(&spec.path).map_err(|e| Failure::Io(format!("{}: {e}", spec.path)))?;
                let file = BufWriter::new(file);
                match spec.format {
                    OutputFormat::Csv => experiment::write_csv(&result.records, file),
                    OutputFormat::Json => experiment::write_json(&config, &result, file),
                }
                .map_err(|e| Failure::Io(format!("{}: {e}", spec.path)))?;
            }
            if result.guarantee_misses > 0 {
                return Err(Failure::Miss(format!("{} within-guarantee trials missed", result.guarantee_misses)));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Miss(msg) | Failure::Config(msg) | Failure::Io(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.code())
        }
    }
}
