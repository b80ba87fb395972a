//! Parameter sweeps.

use std::fmt;

use rayon::prelude::*;
use v2i_secrecy_core::analytic::{report, Method, SecrecyReport};
use v2i_secrecy_core::channels::{Architecture, ScenarioIrs, ScenarioRelay};
use v2i_secrecy_core::montecarlo::{McConfig, McModel};

use crate::parallel::parallel_simulate;

/// Upper bound on the number of grid points of one sweep.
pub const MAX_GRID_POINTS: usize = 100_000;

/// The swept quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SweepVariable {
    /// Transmit power in dB.
    TxPowerDbm,
    /// Surface/relay to eavesdropper distance.
    EveDistanceM,
    /// Number of reflecting elements.
    NElements,
    /// Source to surface/relay distance.
    SourceSurfaceDistanceM,
}

impl SweepVariable {
    /// Accepted names, for messages.
    pub const NAMES: &'static str = "tx_power_dbm, eve_distance_m, n_elements, source_surface_distance_m";

    /// Parses a variable name.
    pub fn parse(name: &str) -> Option<Self> {
        match name.trim() {
            "tx_power_dbm" => Some(Self::TxPowerDbm),
            "eve_distance_m" => Some(Self::EveDistanceM),
            "n_elements" => Some(Self::NElements),
            "source_surface_distance_m" => Some(Self::SourceSurfaceDistanceM),
            _ => None,
        }
    }

    /// Name used in files.
    pub fn name(self) -> &'static str {
        match self {
            Self::TxPowerDbm => "tx_power_dbm",
            Self::EveDistanceM => "eve_distance_m",
            Self::NElements => "n_elements",
            Self::SourceSurfaceDistanceM => "source_surface_distance_m",
        }
    }

    /// Copies of the scenarios with the variable set to `value`.
    pub fn apply(self, value: f64, irs: &ScenarioIrs, relay: &ScenarioRelay) -> (ScenarioIrs, ScenarioRelay) {
        let (mut irs, mut relay) = (*irs, *relay);
        match self {
            Self::TxPowerDbm => {
                irs.tx_power_dbm = value;
                relay.tx_power_dbm = value;
            }
            Self::EveDistanceM => {
                irs.geometry.d_node_eve = value;
                relay.geometry.d_node_eve = value;
            }
            Self::NElements => irs.n_elements = value as u32,
            Self::SourceSurfaceDistanceM => {
                irs.geometry.d_source_node = value;
                relay.geometry.d_source_node = value;
            }
        }
        (irs, relay)
    }
}

impl fmt::Display for SweepVariable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A one-dimensional sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    /// Swept quantity.
    pub variable: SweepVariable,
    /// First grid value.
    pub from: f64,
    /// Last grid value (inclusive when on the grid).
    pub to: f64,
    /// Grid spacing.
    pub step: f64,
    /// Architectures to evaluate, sorted.
    pub architectures: Vec<Architecture>,
    /// Methods to evaluate, sorted.
    pub methods: Vec<Method>,
}

impl SweepSpec {
    /// Number of grid points `from + k·step ≤ to`.
    pub fn grid_len(&self) -> usize {
        if !(self.step > 0.0) || !(self.from <= self.to) {
            return 0;
        }
        let n = ((self.to - self.from) / self.step * (1.0 + 1e-12) + 1e-9).floor();
        if n.is_finite() && n < MAX_GRID_POINTS as f64 {
            n as usize + 1
        } else {
            usize::MAX
        }
    }

    /// Grid values.
    pub fn grid(&self) -> Vec<f64> {
        let n = self.grid_len().min(MAX_GRID_POINTS);
        (0..n).map(|k| self.from + k as f64 * self.step).collect()
    }

    /// Checks the grid bounds and, for element counts, integrality.
    pub fn check_grid(&self) -> Result<(), String> {
        if !(self.step > 0.0 && self.step.is_finite()) {
            return Err(format!("step must be positive, got {}", self.step));
        }
        if !(self.from <= self.to) {
            return Err(format!("from ({}) must not exceed to ({})", self.from, self.to));
        }
        if self.grid_len() > MAX_GRID_POINTS {
            return Err(format!("grid has more than {MAX_GRID_POINTS} points"));
        }
        if self.variable == SweepVariable::NElements {
            let bad = self.grid().into_iter().find(|v| !(*v >= 1.0 && v.fract() == 0.0 && *v <= f64::from(u32::MAX)));
            if let Some(v) = bad {
                return Err(format!("element counts must be positive integers, grid contains {v}"));
            }
        }
        Ok(())
    }
}

/// One output row.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    /// Swept quantity.
    pub variable: SweepVariable,
    /// Its value at this point.
    pub value: f64,
    /// Architecture.
    pub architecture: Architecture,
    /// Method.
    pub method: Method,
    /// The capacities, or the failure message.
    pub outcome: Result<SecrecyReport, String>,
}

impl SweepRow {
    /// `ok` or the failure message.
    pub fn status(&self) -> &str {
        match &self.outcome {
            Ok(_) => "ok",
            Err(e) => e,
        }
    }
}

/// Rows ordered by value, architecture and method.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SweepResult {
    /// The rows.
    pub rows: Vec<SweepRow>,
}

impl SweepResult {
    /// Rows whose evaluation failed.
    pub fn failures(&self) -> impl Iterator<Item = &SweepRow> {
        self.rows.iter().filter(|r| r.outcome.is_err())
    }
}

/// Evaluates one architecture by one method.
pub fn evaluate(
    architecture: Architecture,
    method: Method,
    irs: &ScenarioIrs,
    relay: &ScenarioRelay,
    cfg: &McConfig,
) -> Result<SecrecyReport, String> {
    let outcome = match method {
        Method::Analytic => report(architecture, irs, relay),
        Method::MonteCarlo => McModel::new(architecture, irs, relay).and_then(|m| parallel_simulate(&m, cfg)),
    };
    outcome.map_err(|e| format!("error: {e}"))
}

/// Evaluates every (point, architecture, method) concurrently. Every
/// simulation uses the same master seed.
pub fn run_sweep(spec: &SweepSpec, irs: &ScenarioIrs, relay: &ScenarioRelay, cfg: &McConfig) -> SweepResult {
    let mut tasks = Vec::new();
    for value in spec.grid() {
        for &architecture in &spec.architectures {
            for &method in &spec.methods {
                tasks.push((value, architecture, method));
            }
        }
    }
    let mut rows: Vec<SweepRow> = tasks
        .into_par_iter()
        .map(|(value, architecture, method)| {
            let (irs, relay) = spec.variable.apply(value, irs, relay);
            SweepRow {
                variable: spec.variable,
                value,
                architecture,
                method,
                outcome: evaluate(architecture, method, &irs, &relay, cfg),
            }
        })
        .collect();
    rows.sort_by(|a, b| {
        a.value.total_cmp(&b.value).then(a.architecture.cmp(&b.architecture)).then(a.method.cmp(&b.method))
    });
    SweepResult { rows }
}
