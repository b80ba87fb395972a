//! Analytic against Monte Carlo comparison.

use std::fmt;

use rayon::prelude::*;
use v2i_secrecy_core::analytic::{Method, SecrecyReport};
use v2i_secrecy_core::channels::Architecture;
use v2i_secrecy_core::montecarlo::McConfig;

use crate::config::Config;
use crate::sweep::{evaluate, SweepSpec, SweepVariable};

/// Number of standard errors tolerated.
pub const Z_LIMIT: f64 = 3.0;
/// Relative tolerance that always passes.
pub const REL_LIMIT: f64 = 0.01;

/// Which capacity is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Quantity {
    /// Average secrecy capacity.
    Secrecy,
    /// Legitimate ergodic capacity.
    ErgodicL,
    /// Eavesdropper ergodic capacity.
    ErgodicE,
}

impl Quantity {
    /// Label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Quantity::Secrecy => "secrecy",
            Quantity::ErgodicL => "ergodic_L",
            Quantity::ErgodicE => "ergodic_E",
        }
    }

    fn pick(self, r: &SecrecyReport) -> (f64, f64) {
        let c = match self {
            Quantity::Secrecy => r.secrecy,
            Quantity::ErgodicL => r.legit,
            Quantity::ErgodicE => r.eve,
        };
        (c.bits_per_sec_hz, c.std_error)
    }
}

/// Test hooks.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ValidateOptions {
    /// Added to every analytic capacity before comparison.
    pub analytic_offset: f64,
}

/// One comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationEntry {
    /// Swept quantity, if any.
    pub variable: Option<SweepVariable>,
    /// Its value.
    pub value: f64,
    /// Architecture.
    pub architecture: Architecture,
    /// Compared capacity.
    pub quantity: Quantity,
    /// Analytic value.
    pub analytic: f64,
    /// Simulated value.
    pub monte_carlo: f64,
    /// Standard error of the simulated value.
    pub std_error: f64,
    /// `(analytic − mc)/s.e.`
    pub z: f64,
    /// Within `max(3 s.e., 1 %)`.
    pub pass: bool,
    /// `ok` or a failure message.
    pub status: String,
}

/// All comparisons and the overall verdict.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    /// The comparisons, ordered by value, architecture and quantity.
    pub entries: Vec<ValidationEntry>,
}

impl ValidationReport {
    /// True when every entry passes.
    pub fn passed(&self) -> bool {
        !self.entries.is_empty() && self.entries.iter().all(|e| e.pass)
    }

    /// Largest `|z|` over finite entries.
    pub fn max_abs_z(&self) -> f64 {
        self.entries.iter().map(|e| e.z.abs()).filter(|z| z.is_finite()).fold(0.0, f64::max)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<26} {:>10} {:<5} {:<10} {:>14} {:>14} {:>11} {:>8}  result",
            "variable", "value", "arch", "quantity", "analytic", "monte-carlo", "std_error", "z"
        )?;
        for e in &self.entries {
            let verdict = if e.pass { "pass".to_string() } else { format!("FAIL {}", e.status) };
            writeln!(
                f,
                "{:<26} {:>10} {:<5} {:<10} {:>14.8} {:>14.8} {:>11.3e} {:>8.3}  {}",
                e.variable.map_or("-", SweepVariable::name),
                e.value,
                e.architecture.label(),
                e.quantity.label(),
                e.analytic,
                e.monte_carlo,
                e.std_error,
                e.z,
                verdict
            )?;
        }
        write!(
            f,
            "{} of {} comparisons pass; max |z| = {:.3}; overall {}",
            self.entries.iter().filter(|e| e.pass).count(),
            self.entries.len(),
            self.max_abs_z(),
            if self.passed() { "PASS" } else { "FAIL" }
        )
    }
}

/// `|a − m| ≤ max(3 s.e., 1 % of |a|)`.
pub fn agrees(analytic: f64, monte_carlo: f64, std_error: f64) -> bool {
    (analytic - monte_carlo).abs() <= f64::max(Z_LIMIT * std_error, REL_LIMIT * analytic.abs())
}

/// Compares both methods at every point of `spec` (or at the configured
/// point when `spec` is `None`) for the listed architectures.
pub fn validate(
    config: &Config,
    spec: Option<&SweepSpec>,
    architectures: &[Architecture],
    cfg: &McConfig,
    options: &ValidateOptions,
) -> ValidationReport {
    let points: Vec<(Option<SweepVariable>, f64)> = match spec {
        Some(s) => s.grid().into_iter().map(|v| (Some(s.variable), v)).collect(),
        None => vec![(None, config.irs.tx_power_dbm)],
    };
    let mut tasks = Vec::new();
    for &(variable, value) in &points {
        for &a in architectures {
            tasks.push((variable, value, a));
        }
    }
    let entries: Vec<Vec<ValidationEntry>> = tasks
        .into_par_iter()
        .map(|(variable, value, architecture)| {
            let (irs, relay) = match variable {
                Some(v) => v.apply(value, &config.irs, &config.relay),
                None => (config.irs, config.relay),
            };
            let (a, m) = rayon::join(
                || evaluate(architecture, Method::Analytic, &irs, &relay, cfg),
                || evaluate(architecture, Method::MonteCarlo, &irs, &relay, cfg),
            );
            [Quantity::Secrecy, Quantity::ErgodicL, Quantity::ErgodicE]
                .into_iter()
                .map(|quantity| {
                    let base = ValidationEntry {
                        variable,
                        value,
                        architecture,
                        quantity,
                        analytic: f64::NAN,
                        monte_carlo: f64::NAN,
                        std_error: f64::NAN,
                        z: f64::NAN,
                        pass: false,
                        status: String::new(),
                    };
                    match (&a, &m) {
                        (Ok(a), Ok(m)) => {
                            let (mut av, _) = quantity.pick(a);
                            av += options.analytic_offset;
                            let (mv, se) = quantity.pick(m);
                            let z = if se > 0.0 {
                                (av - mv) / se
                            } else if av == mv {
                                0.0
                            } else {
                                f64::INFINITY.copysign(av - mv)
                            };
                            let pass = agrees(av, mv, se);
                            let status = if pass { "ok".into() } else { "outside max(3 s.e., 1%)".into() };
                            ValidationEntry { analytic: av, monte_carlo: mv, std_error: se, z, pass, status, ..base }
                        }
                        (Err(e), _) | (_, Err(e)) => ValidationEntry { status: e.clone(), ..base },
                    }
                })
                .collect()
        })
        .collect();
    ValidationReport { entries: entries.into_iter().flatten().collect() }
}
