//! Modified Bessel function of the second kind, `K_ν(x)`, for real order.
//!
//! Temme's method: the order is split as `ν = μ + n` with `|μ| ≤ 1/2`.
//! `K_μ` and `K_{μ+1}` come from Temme's series for `x < 2` and from
//! Steed's evaluation of the second continued fraction for `x ≥ 2`; forward
//! recurrence in the order, which is stable for `K`, then reaches `K_ν`.
//! The recurrence carries a separate logarithmic scale so the log-space
//! entry point never overflows.

use core::f64::consts::PI;

use crate::error::domain;
use crate::{Error, Result};

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 100_000;
const RESCALE_ABOVE: f64 = 1e250;

/// Taylor coefficients of `1 / Γ(1 + x)` about 0.
const RECIP_GAMMA_1P: [f64; 29] = [
    1.0,
    0.577_215_664_901_532_860_61,
    -0.655_878_071_520_253_881_08,
    -0.042_002_635_034_095_235_529,
    0.166_538_611_382_291_489_5,
    -0.042_197_734_555_544_336_748,
    -0.009_621_971_527_876_973_562_1,
    0.007_218_943_246_663_099_542_4,
    -0.001_165_167_591_859_065_112_1,
    -0.000_215_241_674_114_950_972_82,
    0.000_128_050_282_388_116_186_15,
    -0.000_020_134_854_780_788_238_656,
    -1.250_493_482_142_670_657_3e-6,
    1.133_027_231_981_695_882_4e-6,
    -2.056_338_416_977_607_103_5e-7,
    6.116_095_104_481_415_817_9e-9,
    5.002_007_644_469_222_930_1e-9,
    -1.181_274_570_487_020_144_6e-9,
    1.043_426_711_691_100_510_5e-10,
    7.782_263_439_905_071_254e-12,
    -3.696_805_618_642_205_708_2e-12,
    5.100_370_287_454_475_979e-13,
    -2.058_326_053_566_506_783_2e-14,
    -5.348_122_539_423_017_982_4e-15,
    1.226_778_628_238_260_790_2e-15,
    -1.181_259_301_697_458_769_5e-16,
    1.186_692_254_751_600_332_6e-18,
    1.412_380_655_318_031_781_6e-18,
    -2.298_745_684_435_370_206_6e-19,
];

/// Temme's auxiliary Gamma combinations for `|μ| ≤ 1/2`:
/// `(gam1, gam2, 1/Γ(1+μ), 1/Γ(1−μ))` with
/// `gam1 = (1/Γ(1−μ) − 1/Γ(1+μ)) / (2μ)` and
/// `gam2 = (1/Γ(1−μ) + 1/Γ(1+μ)) / 2`.
fn temme_gammas(mu: f64) -> (f64, f64, f64, f64) {
    let mut even = 0.0;
    let mut odd = 0.0;
    // Horner on μ² for the even and odd parts separately.
    for (j, c) in RECIP_GAMMA_1P.iter().enumerate().rev() {
        if j % 2 == 0 {
            even = even * mu * mu + c;
        } else {
            odd = odd * mu * mu + c;
        }
    }
    // 1/Γ(1+μ) = even(μ²) + μ·odd(μ²), 1/Γ(1−μ) = even − μ·odd
    let gam1 = -odd;
    let gam2 = even;
    (gam1, gam2, even + mu * odd, even - mu * odd)
}

/// Returns `(m, s)` with `K_ν(x) = m · exp(s − x)`.
fn bessel_k_parts(v: f64, x: f64) -> Result<(f64, f64)> {
    if !(x > 0.0) {
        return Err(domain("bessel_k: argument must be positive"));
    }
    if !v.is_finite() || !x.is_finite() {
        return Err(domain("bessel_k: non-finite input"));
    }
    let nu = v.abs();
    let nl = libm::floor(nu + 0.5);
    let mu = nu - nl;
    let mu2 = mu * mu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;

    let (mut kmu, mut k1) = if x < 2.0 {
        let x2 = 0.5 * x;
        let pimu = PI * mu;
        let fact = if pimu.abs() < EPS { 1.0 } else { pimu / libm::sin(pimu) };
        let d = -libm::log(x2);
        let e = mu * d;
        let fact2 = if e.abs() < EPS { 1.0 } else { libm::sinh(e) / e };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = fact * (gam1 * libm::cosh(e) + gam2 * fact2 * d);
        let mut sum = ff;
        let ee = libm::exp(e);
        let mut p = 0.5 * ee / gampl;
        let mut q = 0.5 / (ee * gammi);
        let mut c = 1.0;
        let dd = x2 * x2;
        let mut sum1 = p;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            c *= dd / fi;
            p /= fi - mu;
            q /= fi + mu;
            let del = c * ff;
            sum += del;
            let del1 = c * (p - fi * ff);
            sum1 += del1;
            if del.abs() < sum.abs() * EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Accuracy { estimate: sum, error: f64::NAN });
        }
        let scale = libm::exp(x);
        (sum * scale, sum1 * xi2 * scale)
    } else {
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut h = d;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25 - mu2;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 1..MAX_ITER {
            let fi = i as f64;
            a -= 2.0 * fi;
            c = -a * c / (fi + 1.0);
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh *= b * d - 1.0;
            h += delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::Accuracy { estimate: s, error: f64::NAN });
        }
        h *= a1;
        let kmu = libm::sqrt(PI / (2.0 * x)) / s;
        (kmu, kmu * (mu + x + 0.5 - h) * xi)
    };

    let mut log_scale = 0.0;
    for i in 1..=(nl as u64) {
        let next = (mu + i as f64) * xi2 * k1 + kmu;
        kmu = k1;
        k1 = next;
        if k1.abs() > RESCALE_ABOVE {
            kmu /= RESCALE_ABOVE;
            k1 /= RESCALE_ABOVE;
            log_scale += libm::log(RESCALE_ABOVE);
        }
    }
    Ok((kmu, log_scale))
}

/// `K_ν(x)` for real `ν` and `x > 0`.
///
/// Returns [`Error::Overflow`] when the value exceeds the `f64` range (small
/// `x` with large `|ν|`); use [`ln_bessel_k`] there.
pub fn bessel_k(v: f64, x: f64) -> Result<f64> {
    let (m, s) = bessel_k_parts(v, x)?;
    let value = m * libm::exp(s - x);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("bessel_k: value exceeds f64 range".into()))
    }
}

/// Exponentially scaled `e^x K_ν(x)`.
pub fn bessel_k_scaled(v: f64, x: f64) -> Result<f64> {
    let (m, s) = bessel_k_parts(v, x)?;
    let value = m * libm::exp(s);
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow("bessel_k_scaled: value exceeds f64 range".into()))
    }
}

/// `ln K_ν(x)`; finite for every positive `x` and finite `ν`.
pub fn ln_bessel_k(v: f64, x: f64) -> Result<f64> {
    let (m, s) = bessel_k_parts(v, x)?;
    Ok(libm::log(m) + s - x)
}
