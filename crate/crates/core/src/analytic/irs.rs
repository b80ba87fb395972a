//! Surface-assisted link: per-element MGF and the MGF capacity integral.

use super::{CapacityEstimate, SecrecyReport};
use crate::channels::{GammaGammaParams, Receiver, ScenarioIrs};
use crate::error::domain;
use crate::quadrature::{try_integrate_semi_infinite, DEFAULT_BUDGET, DEFAULT_TOL_REL};
use crate::specfun::{g_2_1_1_2_outcome, ln_gamma};
use crate::{Error, Result, LOG2_E};

/// Absolute accuracy demanded from a contour evaluation of the MGF.
const FACTOR_ABS_TOL: f64 = 1e-10;
const ASYMPTOTIC_MAX_TERMS: usize = 400;
/// Past this `z` the factor `e^{−z}` underflows.
const Z_CUTOFF: f64 = 745.0;

/// MGF value and its complement `1 − M`, each to full relative accuracy
/// where possible.
#[derive(Debug, Clone, Copy)]
struct Factor {
    value: f64,
    complement: f64,
}

/// Large-argument expansion
/// `M ~ Σ_k (−1)^k (α_T)_k (α_i)_k / (k! x^k)`, `x = β/z`, summed up to its
/// smallest term. `None` when the terms stop shrinking before reaching
/// double precision.
fn asymptotic_factor(x: f64, gg: &GammaGammaParams) -> Option<Factor> {
    let mut term = 1.0;
    let mut complement = 0.0;
    let mut previous = f64::INFINITY;
    for k in 0..ASYMPTOTIC_MAX_TERMS {
        let kf = k as f64;
        term *= (gg.alpha_t + kf) * (gg.alpha_i + kf) / ((kf + 1.0) * x);
        if term >= previous {
            return None;
        }
        previous = term;
        // (−1)^{k+1} term_{k+1} enters M, so it enters 1 − M with (−1)^k
        complement += if k % 2 == 0 { term } else { -term };
        if term <= 1e-17 * complement.abs() {
            return Some(Factor { value: 1.0 - complement, complement });
        }
    }
    None
}

fn contour_factor(x: f64, gg: &GammaGammaParams) -> Result<Factor> {
    let v = gg.order;
    let outcome = g_2_1_1_2_outcome(x, 1.0 - gg.alpha_gg, 0.5 * v, -0.5 * v)?;
    let ln_scale = gg.alpha_gg * libm::log(x) - ln_gamma(gg.alpha_t) - ln_gamma(gg.alpha_i);
    let scale = libm::exp(ln_scale);
    let value = outcome.value * scale;
    let abs_error = outcome.abs_error * scale;
    if !(abs_error <= FACTOR_ABS_TOL) || !value.is_finite() {
        return Err(Error::Accuracy { estimate: value, error: abs_error });
    }
    let value = value.clamp(0.0, 1.0);
    Ok(Factor { value, complement: 1.0 - value })
}

fn element_factor(z: f64, gg: &GammaGammaParams) -> Result<Factor> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(domain("mgf_irs_element: z must be positive and finite"));
    }
    let x = gg.beta_gg / z;
    if x.is_infinite() {
        return Ok(Factor { value: 1.0, complement: 0.0 });
    }
    if x == 0.0 {
        return Ok(Factor { value: 0.0, complement: 1.0 });
    }
    match asymptotic_factor(x, gg) {
        Some(f) => Ok(f),
        None => contour_factor(x, gg),
    }
}

/// `E[e^{−zγ}]` for one element's Gamma-Gamma SNR:
/// `x^α G^{2,1}_{1,2}(x | 1−α; v/2, −v/2) / (Γ(α_T) Γ(α_i))` with `x = β/z`.
pub fn mgf_irs_element(z: f64, gg: &GammaGammaParams) -> Result<f64> {
    Ok(element_factor(z, gg)?.value)
}

/// `1 − M^N` without cancellation when `M` is close to 1.
fn one_minus_power(f: Factor, n: u32) -> f64 {
    if f.complement < 0.5 {
        -libm::expm1(f64::from(n) * libm::log1p(-f.complement))
    } else {
        1.0 - libm::pow(f.value, f64::from(n))
    }
}

/// Ergodic capacity for `n` elements with element law `gg`.
pub(crate) fn ergodic_capacity_elements(gg: &GammaGammaParams, n: u32) -> Result<f64> {
    let q = try_integrate_semi_infinite(
        |z| {
            if z > Z_CUTOFF {
                return Ok(0.0);
            }
            let f = element_factor(z, gg)?;
            Ok(one_minus_power(f, n) * libm::exp(-z) / z)
        },
        DEFAULT_TOL_REL,
        DEFAULT_BUDGET,
    )?;
    Ok(libm::fmax(q.value * LOG2_E, 0.0))
}

/// Ergodic capacity at `receiver` through the MGF integral; the `N`
/// independent elements enter as the power `M^N`.
pub fn ergodic_capacity_irs(scenario: &ScenarioIrs, receiver: Receiver) -> Result<CapacityEstimate> {
    scenario.validate()?;
    let gg = scenario.element_params(receiver)?;
    Ok(CapacityEstimate::analytic(ergodic_capacity_elements(&gg, scenario.n_elements)?))
}

/// Ergodic capacities at both receivers and the secrecy capacity.
pub fn irs_report(scenario: &ScenarioIrs) -> Result<SecrecyReport> {
    Ok(SecrecyReport::from_pair(
        ergodic_capacity_irs(scenario, Receiver::Legit)?,
        ergodic_capacity_irs(scenario, Receiver::Eve)?,
    ))
}

/// Average secrecy capacity of the surface-assisted link.
pub fn irs_secrecy(scenario: &ScenarioIrs) -> Result<CapacityEstimate> {
    Ok(irs_report(scenario)?.secrecy)
}
