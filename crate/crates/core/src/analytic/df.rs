//! Decode-and-forward relay: `γ = min(γ₁, γ_b)`.

use super::{CapacityEstimate, SecrecyReport};
use crate::channels::{FadingParams, Receiver, ScenarioRelay};
use crate::error::domain;
use crate::quadrature::{try_integrate_semi_infinite, DEFAULT_BUDGET};
use crate::specfun::{expint_scaled, ln_factorial, meijer_g_2_1_1_2};
use crate::{Error, Result, LOG2_E};

const QUADRATURE_TOL_REL: f64 = 1e-11;

/// How [`df_ergodic_capacity_via`] evaluates `∫₀^∞ γ^m e^{−sγ} / (1 + γ) dγ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DfPath {
    /// `Γ(m+1) U(m+1, m+1, s)` from exponential integrals.
    TricomiU,
    /// `G^{2,1}_{1,2}(s | −m; 0, −m)` on a Mellin–Barnes contour.
    MellinBarnes,
    /// Adaptive quadrature of the survival function against `1 / (1 + γ)`.
    Quadrature,
}

/// Survival function of `min(γ₁, γ_b)`:
/// `Σ_{j<α₁} Σ_{p<α_b} β₁^j β_b^p γ^{j+p} e^{−γ(β₁+β_b)} / (j! p!)`.
pub fn df_ccdf(g: f64, f1: FadingParams, fb: FadingParams) -> Result<f64> {
    f1.validate()?;
    fb.validate()?;
    let a1 = f1.integer_shape()?;
    let ab = fb.integer_shape()?;
    if !(g >= 0.0) {
        return Err(domain("df_ccdf: argument must be nonnegative"));
    }
    if g == 0.0 {
        return Ok(1.0);
    }
    let ln_g = libm::log(g);
    let rate = f1.beta + fb.beta;
    let mut sum = 0.0;
    for j in 0..a1 {
        for p in 0..ab {
            let ln_term =
                f64::from(j) * libm::log(f1.beta) + f64::from(p) * libm::log(fb.beta) + f64::from(j + p) * ln_g
                    - rate * g
                    - ln_factorial(j)
                    - ln_factorial(p);
            sum += libm::exp(ln_term);
        }
    }
    Ok(sum.min(1.0))
}

/// `ln ∫₀^∞ γ^m e^{−sγ} / (1 + γ) dγ = ln m! + ln(e^s E_{m+1}(s)) − m ln s`.
fn ln_tricomi_integral(m: u32, s: f64) -> Result<f64> {
    Ok(ln_factorial(m) + libm::log(expint_scaled(m + 1, s)?) - f64::from(m) * libm::log(s))
}

/// Ergodic capacity of `min(γ₁, γ_b)` for integer shapes, by the finite sum
/// `(1/ln 2) Σ_j Σ_p β₁^j β_b^p / (j! p!) · Γ(j+p+1) U(j+p+1, j+p+1, β₁+β_b)`.
pub fn df_ergodic_capacity(f1: FadingParams, fb: FadingParams) -> Result<CapacityEstimate> {
    df_ergodic_capacity_via(f1, fb, DfPath::TricomiU)
}

/// [`df_ergodic_capacity`] along a chosen evaluation path.
pub fn df_ergodic_capacity_via(f1: FadingParams, fb: FadingParams, path: DfPath) -> Result<CapacityEstimate> {
    f1.validate()?;
    fb.validate()?;
    let a1 = f1.integer_shape()?;
    let ab = fb.integer_shape()?;
    let s = f1.beta + fb.beta;
    let nats = match path {
        DfPath::Quadrature => {
            try_integrate_semi_infinite(|g| Ok(df_ccdf(g, f1, fb)? / (1.0 + g)), QUADRATURE_TOL_REL, DEFAULT_BUDGET)?
                .value
        }
        DfPath::TricomiU | DfPath::MellinBarnes => {
            let mut sum = 0.0;
            for j in 0..a1 {
                for p in 0..ab {
                    let m = j + p;
                    let ln_coeff = f64::from(j) * libm::log(f1.beta) + f64::from(p) * libm::log(fb.beta)
                        - ln_factorial(j)
                        - ln_factorial(p);
                    sum += match path {
                        DfPath::TricomiU => libm::exp(ln_coeff + ln_tricomi_integral(m, s)?),
                        _ => {
                            let g = meijer_g_2_1_1_2(s, -f64::from(m), 0.0, -f64::from(m))?;
                            libm::exp(ln_coeff) * g.value
                        }
                    };
                }
            }
            sum
        }
    };
    if !nats.is_finite() {
        return Err(Error::Overflow("df_ergodic_capacity".into()));
    }
    Ok(CapacityEstimate::analytic(libm::fmax(nats * LOG2_E, 0.0)))
}

/// Ergodic capacities at both receivers and the secrecy capacity.
pub fn df_report(scenario: &ScenarioRelay) -> Result<SecrecyReport> {
    scenario.validate()?;
    let hop1 = scenario.hop1()?;
    Ok(SecrecyReport::from_pair(
        df_ergodic_capacity(hop1, scenario.hop2(Receiver::Legit)?)?,
        df_ergodic_capacity(hop1, scenario.hop2(Receiver::Eve)?)?,
    ))
}

/// Average secrecy capacity with a decode-and-forward relay.
pub fn df_secrecy(scenario: &ScenarioRelay) -> Result<CapacityEstimate> {
    Ok(df_report(scenario)?.secrecy)
}
