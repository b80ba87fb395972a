//! Scenario files, parameter sweeps, CSV output and analytic against
//! Monte Carlo validation on top of `v2i-secrecy-core`.

#![warn(missing_docs)]

pub mod config;
pub mod figure;
pub mod output;
pub mod parallel;
pub mod sweep;
pub mod validate;

pub use config::{parse_config, parse_config_str, reference_config, Config, ConfigError, Violation};
pub use figure::{figure_preset, FigureSeries};
pub use output::{format_float, read_csv, write_csv, write_csv_file, CsvRecord};
pub use parallel::parallel_simulate;
pub use sweep::{run_sweep, SweepResult, SweepRow, SweepSpec, SweepVariable};
pub use validate::{validate, ValidateOptions, ValidationReport};
