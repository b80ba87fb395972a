//! Fixed-gain amplify-and-forward relay: `γ = γ₁ γ_b / (γ₁ + l)`.
//!
//! Conditioning on `γ₁`, the event `γ > t` is `γ_b > t (1 + l/γ₁)`. With an
//! integer shape for `γ_b` the Gamma survival function is a finite sum, the
//! binomial expansion of `(1 + l/γ₁)^j` separates the powers of `γ₁`, and
//! each remaining expectation over `γ₁` is a Bessel K integral:
//!
//! `P(γ > t) = Σ_{j<α_b} Σ_{k≤j} C(j,k) l^k (β_b t)^j / j! · e^{−β_b t}
//!  · β₁^{α₁} / Γ(α₁) · 2 (β_b l t / β₁)^{(α₁−k)/2} K_{α₁−k}(2√(β₁ β_b l t))`.

use super::{CapacityEstimate, SecrecyReport};
use crate::channels::{FadingParams, Receiver, ScenarioRelay};
use crate::error::domain;
use crate::quadrature::{try_integrate_semi_infinite, DEFAULT_BUDGET, DEFAULT_TOL_REL};
use crate::specfun::{ln_bessel_k, ln_factorial, ln_gamma};
use crate::{Result, LOG2_E};

/// `l = E[γ₁] + 1` for the first-hop SNR law `f1`.
pub fn affg_snr_constant(f1: FadingParams) -> Result<f64> {
    f1.validate()?;
    Ok(f1.mean() + 1.0)
}

fn ln_binomial(n: u32, k: u32) -> f64 {
    ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k)
}

/// Survival function of `γ₁ γ_b / (γ₁ + l)`; `γ_b` needs an integer shape.
pub fn affg_ccdf(g: f64, f1: FadingParams, fb: FadingParams, l: f64) -> Result<f64> {
    f1.validate()?;
    fb.validate()?;
    let ab = fb.integer_shape()?;
    if !(l > 0.0) || !l.is_finite() {
        return Err(domain("affg_ccdf: l must be positive and finite"));
    }
    if !(g >= 0.0) {
        return Err(domain("affg_ccdf: argument must be nonnegative"));
    }
    if g == 0.0 {
        return Ok(1.0);
    }
    let (a1, b1, bb) = (f1.alpha, f1.beta, fb.beta);
    let c = bb * l * g;
    let bessel_arg = 2.0 * libm::sqrt(c * b1);
    let ln_base = a1 * libm::log(b1) - ln_gamma(a1) + core::f64::consts::LN_2 - bb * g;
    let ln_ratio = libm::log(c / b1);
    let ln_bg = libm::log(bb * g);
    let ln_l = libm::log(l);
    let mut sum = 0.0;
    for j in 0..ab {
        for k in 0..=j {
            let order = a1 - f64::from(k);
            let ln_term = ln_base + ln_binomial(j, k) + f64::from(k) * ln_l + f64::from(j) * ln_bg - ln_factorial(j)
                + 0.5 * order * ln_ratio
                + ln_bessel_k(order, bessel_arg)?;
            sum += libm::exp(ln_term);
        }
    }
    Ok(sum.clamp(0.0, 1.0))
}

/// `(1/ln 2) ∫₀^∞ P(γ > t) / (1 + t) dt` for the fixed-gain SNR.
pub fn affg_ergodic_capacity(f1: FadingParams, fb: FadingParams, l: f64) -> Result<CapacityEstimate> {
    fb.integer_shape()?;
    let q = try_integrate_semi_infinite(|t| Ok(affg_ccdf(t, f1, fb, l)? / (1.0 + t)), DEFAULT_TOL_REL, DEFAULT_BUDGET)?;
    Ok(CapacityEstimate::analytic(libm::fmax(q.value * LOG2_E, 0.0)))
}

/// Ergodic capacities at both receivers and the secrecy capacity.
pub fn affg_report(scenario: &ScenarioRelay) -> Result<SecrecyReport> {
    scenario.validate()?;
    let hop1 = scenario.hop1()?;
    let l = scenario.relay_constant()?;
    Ok(SecrecyReport::from_pair(
        affg_ergodic_capacity(hop1, scenario.hop2(Receiver::Legit)?, l)?,
        affg_ergodic_capacity(hop1, scenario.hop2(Receiver::Eve)?, l)?,
    ))
}

/// Average secrecy capacity with a fixed-gain amplify-and-forward relay.
pub fn affg_secrecy(scenario: &ScenarioRelay) -> Result<CapacityEstimate> {
    Ok(affg_report(scenario)?.secrecy)
}
