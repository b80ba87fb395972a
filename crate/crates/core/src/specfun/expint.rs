//! Exponential integrals and the Tricomi U values behind the DF capacity.

use crate::error::domain;
use crate::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
const EPS: f64 = 1e-16;
const MAX_ITER: usize = 10_000;
const TINY: f64 = 1e-300;

/// `e^x E_n(x)` for `x > 0`, `n >= 1`.
///
/// Series below `x = 1`, modified Lentz continued fraction above; the
/// fraction produces the scaled value directly, so large `x` never
/// underflows.
pub fn expint_scaled(n: u32, x: f64) -> Result<f64> {
    if n == 0 {
        return Err(domain("expint_scaled: order must be at least 1"));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("expint_scaled: argument must be positive and finite"));
    }
    if x >= 1.0 {
        Ok(expint_fraction(n, x))
    } else {
        Ok(libm::exp(x) * expint_series(n, x))
    }
}

/// Exponential integral `E_n(x) = ∫₁^∞ e^{−xt} t^{−n} dt`.
pub fn expint(n: u32, x: f64) -> Result<f64> {
    Ok(expint_scaled(n, x)? * libm::exp(-x))
}

/// `E₁(x)`.
pub fn expint_e1(x: f64) -> Result<f64> {
    expint(1, x)
}

fn expint_fraction(n: u32, x: f64) -> f64 {
    let n = f64::from(n);
    let mut b = x + n;
    let mut c = 1.0 / TINY;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..MAX_ITER {
        let i = i as f64;
        let an = -i * (n - 1.0 + i);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            break;
        }
    }
    h
}

fn expint_series(n: u32, x: f64) -> f64 {
    let nm1 = n - 1;
    let mut ans = if nm1 == 0 { -libm::log(x) - EULER_GAMMA } else { 1.0 / f64::from(nm1) };
    let mut fact = 1.0;
    for i in 1..MAX_ITER as u32 {
        let fi = f64::from(i);
        fact *= -x / fi;
        let del = if i != nm1 {
            -fact / (fi - f64::from(nm1))
        } else {
            // ψ(n) = −γ + Σ_{k=1}^{n−1} 1/k
            let psi = (1..=nm1).fold(-EULER_GAMMA, |acc, k| acc + 1.0 / f64::from(k));
            fact * (-libm::log(x) + psi)
        };
        ans += del;
        if del.abs() < ans.abs() * EPS {
            break;
        }
    }
    ans
}

/// Tricomi confluent hypergeometric `U(m + 1, m + 1, s)` for integer `m >= 0`.
///
/// Satisfies `Γ(m + 1) U(m + 1, m + 1, s) = ∫₀^∞ γ^m e^{−sγ} / (1 + γ) dγ`,
/// and is evaluated through `U(m + 1, m + 1, s) = s^{−m} e^s E_{m+1}(s)`.
pub fn tricomi_u_integer(m: u32, s: f64) -> Result<f64> {
    if !(s > 0.0) {
        return Err(domain("tricomi_u_integer: s must be positive"));
    }
    let scaled = expint_scaled(m + 1, s)?;
    let value = if m == 0 { scaled } else { libm::exp(libm::log(scaled) - f64::from(m) * libm::log(s)) };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("tricomi_u_integer".into()))
    }
}
