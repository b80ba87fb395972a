use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use v2i_secrecy::config::{parse_config, Config};
use v2i_secrecy::figure::{figure_preset, series_path, FIGURE_IDS};
use v2i_secrecy::output::write_csv_file;
use v2i_secrecy::sweep::{run_sweep, SweepResult};
use v2i_secrecy::validate::{validate, ValidateOptions};
use v2i_secrecy_core::analytic::Method;
use v2i_secrecy_core::channels::Architecture;
use v2i_secrecy_core::montecarlo::{McConfig, MIN_SAMPLES};

const EXIT_INPUT: u8 = 1;
const EXIT_VALIDATION: u8 = 2;

/// Average secrecy capacity of surface-assisted and relayed links.
#[derive(Parser, Debug)]
#[command(name = "v2i-secrecy", version, about)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the sweep of a scenario file and write CSV.
    Sweep {
        /// Scenario file.
        #[arg(long)]
        config: PathBuf,
        /// Output CSV.
        #[arg(long)]
        out: PathBuf,
        /// Overrides `sweep.methods`.
        #[arg(long, value_enum)]
        method: Option<MethodArg>,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Compare the formulas with simulation and report per-point z-scores.
    Validate {
        /// Scenario file.
        #[arg(long)]
        config: PathBuf,
        #[command(flatten)]
        mc: McArgs,
    },
    /// Run a preset on the reference scenario.
    Figure {
        /// Preset: 3, 4, 5 or 6.
        #[arg(long, value_parser = parse_figure_id)]
        id: u32,
        /// Output CSV; multi-series presets write `<stem>_<series>.csv`.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value = "analytic")]
        method: MethodArg,
        #[command(flatten)]
        mc: McArgs,
    },
}

#[derive(clap::Args, Debug)]
struct McArgs {
    /// Simulation samples per point.
    #[arg(long, value_parser = clap::value_parser!(u64).range(MIN_SAMPLES..))]
    samples: Option<u64>,
    /// Master seed.
    #[arg(long)]
    seed: Option<u64>,
}

impl McArgs {
    fn apply(&self, mut cfg: McConfig) -> McConfig {
        if let Some(n) = self.samples {
            cfg.samples = n;
        }
        if let Some(s) = self.seed {
            cfg.master_seed = s;
        }
        cfg
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum MethodArg {
    Analytic,
    Mc,
    Both,
}

impl MethodArg {
    fn methods(self) -> Vec<Method> {
        match self {
            MethodArg::Analytic => vec![Method::Analytic],
            MethodArg::Mc => vec![Method::MonteCarlo],
            MethodArg::Both => vec![Method::Analytic, Method::MonteCarlo],
        }
    }
}

fn parse_figure_id(s: &str) -> Result<u32, String> {
    match s.parse::<u32>() {
        Ok(id) if FIGURE_IDS.contains(&id) => Ok(id),
        _ => Err(format!("expected one of {FIGURE_IDS:?}")),
    }
}

fn load(path: &Path) -> Result<Config, ExitCode> {
    parse_config(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        ExitCode::from(EXIT_INPUT)
    })
}

fn write(result: &SweepResult, path: &Path) -> Result<(), ExitCode> {
    for row in result.failures() {
        eprintln!(
            "warning: {} = {} {} {}: {}",
            row.variable,
            row.value,
            row.architecture.label(),
            row.method.label(),
            row.status()
        );
    }
    write_csv_file(result, path).map_err(|e| {
        eprintln!("cannot write {}: {e}", path.display());
        ExitCode::from(EXIT_INPUT)
    })?;
    eprintln!("wrote {} rows to {}", result.rows.len(), path.display());
    Ok(())
}

fn run(command: Command) -> Result<(), ExitCode> {
    match command {
        Command::Sweep { config, out, method, mc } => {
            let cfg = load(&config)?;
            let Some(mut spec) = cfg.sweep.clone() else {
                eprintln!("{}: no sweep.* keys", config.display());
                return Err(ExitCode::from(EXIT_INPUT));
            };
            if let Some(m) = method {
                spec.methods = m.methods();
            }
            let result = run_sweep(&spec, &cfg.irs, &cfg.relay, &mc.apply(cfg.mc));
            write(&result, &out)
        }
        Command::Validate { config, mc } => {
            let cfg = load(&config)?;
            let architectures = cfg.sweep.as_ref().map_or_else(
                || vec![Architecture::Irs, Architecture::Df, Architecture::Affg],
                |s| s.architectures.clone(),
            );
            let report =
                validate(&cfg, cfg.sweep.as_ref(), &architectures, &mc.apply(cfg.mc), &ValidateOptions::default());
            println!("{report}");
            if report.passed() {
                Ok(())
            } else {
                Err(ExitCode::from(EXIT_VALIDATION))
            }
        }
        Command::Figure { id, out, method, mc } => {
            let series = figure_preset(id, &method.methods()).expect("id checked by the parser");
            let single = series.len() == 1;
            for s in &series {
                let result = run_sweep(&s.spec, &s.config.irs, &s.config.relay, &mc.apply(s.config.mc));
                write(&result, &series_path(&out, s, single))?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("cannot start worker threads: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
