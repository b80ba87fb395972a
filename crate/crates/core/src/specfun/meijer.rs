//! Meijer G instances evaluated by Mellin–Barnes integration along a
//! vertical line.
//!
//! `G^{2,1}_{1,2}(x | a1; b1, b2) = (1/2πi) ∫ Γ(b1+s) Γ(b2+s) Γ(1−a1−s) x^{−s} ds`
//! on `Re s = c` with `−min(b1, b2) < c < 1 − a1`, and
//! `G^{2,0}_{0,2}(x | b1, b2)` likewise without the third factor. The line
//! sits in the middle of the pole-free strip. Its truncation is doubled until
//! the result stops moving, then the node spacing is halved until two
//! consecutive trapezoid sums agree.

use num_complex::Complex64;

use super::gamma::log_gamma;
use crate::error::parameter;
use crate::quadrature::{contour_sums, ContourSpec};
use crate::{Error, Result};

/// Relative accuracy the contour engine aims for.
pub const MEIJER_TARGET_REL: f64 = 1e-8;

const INITIAL_HALF_HEIGHT: f64 = 8.0;
const MAX_HALF_HEIGHT: f64 = 512.0;
const MAX_HALVINGS: usize = 8;
const STEP_TOL_REL: f64 = 1e-11;
const HEIGHT_TOL_REL: f64 = 1e-10;
/// Pole distance assumed for the open-ended strip of `G^{2,0}_{0,2}`.
const OPEN_STRIP_OFFSET: f64 = 1.0;

/// Value of a Meijer G evaluation with its estimated relative error.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeijerValue {
    /// Real part of the contour integral.
    pub value: f64,
    /// Estimated relative error of `value`.
    pub rel_error: f64,
}

/// Contour integral of a real-parameter kernel with an absolute error estimate.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ContourOutcome {
    pub value: f64,
    pub abs_error: f64,
    /// Imaginary residue left after pairing conjugate nodes.
    pub imag: f64,
}

fn nodes_for(half_height: f64, step: f64) -> usize {
    2 * (libm::round(half_height / step) as usize) + 1
}

/// Adaptive Mellin–Barnes driver. `pole_distance` is the distance from the
/// line to the nearest pole of the kernel.
pub(crate) fn mellin_barnes<K>(mut kernel: K, abscissa: f64, pole_distance: f64) -> Result<ContourOutcome>
where
    K: FnMut(Complex64) -> Complex64,
{
    // T / step stays an exact integer, so doubling T only appends tail nodes
    let per_side = libm::ceil(INITIAL_HALF_HEIGHT / libm::fmin(0.25, pole_distance / 4.0));
    let per_side = libm::fmax(per_side, (ContourSpec::MIN_NODES / 2) as f64);
    let mut step = INITIAL_HALF_HEIGHT / per_side;
    let mut half_height = INITIAL_HALF_HEIGHT;

    let eval = |kernel: &mut K, half_height: f64, step: f64| {
        let spec = ContourSpec::new(abscissa, half_height, nodes_for(half_height, step))?;
        contour_sums(kernel, &spec)
    };

    let (mut current, _) = eval(&mut kernel, half_height, step)?;
    let mut magnitude;
    loop {
        let (longer, longer_mag) = eval(&mut kernel, 2.0 * half_height, step)?;
        let moved = (longer - current).norm();
        half_height *= 2.0;
        current = longer;
        magnitude = longer_mag;
        if moved <= HEIGHT_TOL_REL * current.norm() + 16.0 * f64::EPSILON * magnitude {
            break;
        }
        if half_height >= MAX_HALF_HEIGHT {
            return Err(Error::Accuracy { estimate: current.re, error: moved });
        }
    }

    let mut change = f64::INFINITY;
    for _ in 0..MAX_HALVINGS {
        step *= 0.5;
        let (finer, finer_mag) = eval(&mut kernel, half_height, step)?;
        change = (finer - current).norm();
        current = finer;
        magnitude = finer_mag;
        let floor = 64.0 * f64::EPSILON * magnitude;
        if change <= STEP_TOL_REL * current.norm() || change <= floor {
            break;
        }
    }
    let noise = 16.0 * f64::EPSILON * magnitude;
    Ok(ContourOutcome { value: current.re, abs_error: libm::fmax(change, noise), imag: current.im })
}

fn finish(outcome: ContourOutcome) -> Result<MeijerValue> {
    let scale = outcome.value.abs();
    let rel_error = if scale > 0.0 { outcome.abs_error / scale } else { f64::INFINITY };
    if rel_error > MEIJER_TARGET_REL {
        return Err(Error::Accuracy { estimate: outcome.value, error: outcome.abs_error });
    }
    debug_assert!(outcome.imag.abs() <= 1e-9 * scale + outcome.abs_error);
    Ok(MeijerValue { value: outcome.value, rel_error })
}

fn kernel_value(terms: Result<Complex64>) -> Complex64 {
    match terms {
        Ok(log_value) => log_value.exp(),
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    }
}

/// Raw contour evaluation of `G^{2,1}_{1,2}(x | a1; b1, b2)` with an
/// absolute error estimate.
pub(crate) fn g_2_1_1_2_outcome(x: f64, a1: f64, b1: f64, b2: f64) -> Result<ContourOutcome> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(parameter("meijer G: argument must be positive and finite"));
    }
    let left = -libm::fmin(b1, b2);
    let right = 1.0 - a1;
    if !(left < right) {
        return Err(parameter(alloc::format!(
            "meijer G: no separating contour (poles left of {left} must lie left of {right})"
        )));
    }
    let abscissa = 0.5 * (left + right);
    let ln_x = libm::log(x);
    let one = Complex64::new(1.0, 0.0);
    mellin_barnes(
        |s| kernel_value((|| Ok(log_gamma(s + b1)? + log_gamma(s + b2)? + log_gamma(one - a1 - s)? - s * ln_x))()),
        abscissa,
        0.5 * (right - left),
    )
}

/// `G^{2,1}_{1,2}(x | a1; b1, b2)` by numerical Mellin–Barnes integration.
///
/// Needs `−min(b1, b2) < 1 − a1`. Fails with [`Error::Accuracy`] when the
/// estimated relative error exceeds [`MEIJER_TARGET_REL`], which happens
/// when cancellation along the line is severe (extreme `x`).
pub fn meijer_g_2_1_1_2(x: f64, a1: f64, b1: f64, b2: f64) -> Result<MeijerValue> {
    finish(g_2_1_1_2_outcome(x, a1, b1, b2)?)
}

/// `G^{2,0}_{0,2}(x | b1, b2)`; `K_ν(2√x) = ½ G^{2,0}_{0,2}(x | ν/2, −ν/2)`.
pub fn meijer_g_2_0_0_2(x: f64, b1: f64, b2: f64) -> Result<MeijerValue> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(parameter("meijer G: argument must be positive and finite"));
    }
    let abscissa = -libm::fmin(b1, b2) + OPEN_STRIP_OFFSET;
    let ln_x = libm::log(x);
    finish(mellin_barnes(
        |s| kernel_value((|| Ok(log_gamma(s + b1)? + log_gamma(s + b2)? - s * ln_x))()),
        abscissa,
        OPEN_STRIP_OFFSET,
    )?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{bessel_k, gamma, tricomi_u_integer};

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn bessel_representation() {
        for (v, y) in [(0.5, 1.0), (0.0, 0.3), (1.7, 4.0), (3.0, 0.05)] {
            let g = meijer_g_2_0_0_2(y, v / 2.0, -v / 2.0).unwrap();
            let k = bessel_k(v, 2.0 * libm::sqrt(y)).unwrap();
            assert!(rel(0.5 * g.value, k) < 1e-9, "v={v} y={y}: {} vs {k}", 0.5 * g.value);
            assert!(g.rel_error <= MEIJER_TARGET_REL);
        }
    }

    #[test]
    fn tricomi_representation() {
        // G^{2,1}_{1,2}(s | −m; 0, −m) = Γ(m+1) U(m+1, m+1, s)
        for m in 0..5u32 {
            for s in [0.5, 1.0, 6.0] {
                let g = meijer_g_2_1_1_2(s, -f64::from(m), 0.0, -f64::from(m)).unwrap();
                let u = gamma(f64::from(m) + 1.0) * tricomi_u_integer(m, s).unwrap();
                assert!(rel(g.value, u) < 1e-9, "m={m} s={s}");
            }
        }
    }

    #[test]
    fn small_argument_limit() {
        // Simple pole of Γ(b1 + s) at s = 0 with b1 = 0, b2 = 1, a1 = −1:
        // residue Γ(b2)Γ(1 − a1) = 1; the double pole at s = −1 adds O(x ln x).
        // Reference values from mpmath.meijerg.
        for (x, expected) in [(1e-4, 0.998_373_096_045_076_8), (1e-6, 0.999_974_523_368_499)] {
            let g = meijer_g_2_1_1_2(x, -1.0, 0.0, 1.0).unwrap();
            assert!(rel(g.value, expected) < 1e-8, "x={x}: {}", g.value);
            assert!((g.value - 1.0).abs() < 20.0 * x * (1.0 - libm::log(x)));
        }
    }

    #[test]
    fn no_separating_contour_is_rejected() {
        // −min(b) = 2 is not left of 1 − a1 = 1
        assert!(matches!(meijer_g_2_1_1_2(1.0, 0.0, -2.0, 0.0), Err(Error::Parameter(_))));
        assert!(meijer_g_2_1_1_2(0.0, 0.0, 0.0, 0.0).is_err());
    }
}
