//! Closed-form and semi-analytic capacities.
//!
//! * IRS: `C = (1/ln 2) ∫₀^∞ (1 − M(z)^N) e^{−z} / z dz`, where `M` is the
//!   moment generating function of one element's Gamma-Gamma SNR, written
//!   as a Meijer G function.
//! * DF: the end-to-end SNR is the minimum of the hop SNRs; its survival
//!   function is a finite double sum, and integrating it against
//!   `1 / (1 + γ)` gives a finite sum of Tricomi U values.
//! * AFFG: `γ₁γ_b / (γ₁ + l)`; the survival function is a finite sum of
//!   Bessel K terms, integrated numerically.
//!
//! The average secrecy capacity is `max(C_L − C_E, 0)`.

mod affg;
mod df;
mod irs;

pub use affg::{affg_ccdf, affg_ergodic_capacity, affg_report, affg_secrecy, affg_snr_constant};
pub use df::{df_ccdf, df_ergodic_capacity, df_ergodic_capacity_via, df_report, df_secrecy, DfPath};
pub use irs::{ergodic_capacity_irs, irs_report, irs_secrecy, mgf_irs_element};

use crate::channels::{Architecture, ScenarioIrs, ScenarioRelay};
use crate::Result;

/// How a capacity value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Formula evaluation.
    Analytic,
    /// Simulation.
    MonteCarlo,
}

impl Method {
    /// Lower-case label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Method::Analytic => "analytic",
            Method::MonteCarlo => "monte-carlo",
        }
    }
}

/// A capacity in bits/s/Hz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityEstimate {
    /// Capacity in bits/s/Hz.
    pub bits_per_sec_hz: f64,
    /// Origin of the value.
    pub method: Method,
    /// Standard error; 0 for analytic values.
    pub std_error: f64,
    /// Number of samples; 0 for analytic values.
    pub samples: u64,
}

impl CapacityEstimate {
    /// An analytic value.
    pub fn analytic(bits_per_sec_hz: f64) -> Self {
        Self { bits_per_sec_hz, method: Method::Analytic, std_error: 0.0, samples: 0 }
    }
}

/// `max(C_L − C_E, 0)`; standard errors are combined in quadrature.
pub fn secrecy_capacity(cl: CapacityEstimate, ce: CapacityEstimate) -> CapacityEstimate {
    let method = if cl.method == Method::MonteCarlo || ce.method == Method::MonteCarlo {
        Method::MonteCarlo
    } else {
        Method::Analytic
    };
    CapacityEstimate {
        bits_per_sec_hz: libm::fmax(cl.bits_per_sec_hz - ce.bits_per_sec_hz, 0.0),
        method,
        std_error: libm::hypot(cl.std_error, ce.std_error),
        samples: cl.samples.min(ce.samples),
    }
}

/// Both ergodic capacities and the resulting secrecy capacity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecrecyReport {
    /// Ergodic capacity at the legitimate receiver.
    pub legit: CapacityEstimate,
    /// Ergodic capacity at the eavesdropper.
    pub eve: CapacityEstimate,
    /// Average secrecy capacity.
    pub secrecy: CapacityEstimate,
}

impl SecrecyReport {
    /// Combines two analytic capacities.
    pub fn from_pair(legit: CapacityEstimate, eve: CapacityEstimate) -> Self {
        Self { legit, eve, secrecy: secrecy_capacity(legit, eve) }
    }
}

/// Analytic report for `architecture`; the IRS uses `irs`, the relays use
/// `relay`.
pub fn report(architecture: Architecture, irs: &ScenarioIrs, relay: &ScenarioRelay) -> Result<SecrecyReport> {
    match architecture {
        Architecture::Irs => irs_report(irs),
        Architecture::Df => df_report(relay),
        Architecture::Affg => affg_report(relay),
    }
}
