//! Adaptive integration: Gauss–Kronrod (7/15) with global bisection on finite
//! intervals and on `(0, ∞)` through `x = t / (1 − t)`, and trapezoidal
//! integration along vertical lines in the complex plane.
//!
//! Neither rule evaluates the integrand at an interval end point, so
//! integrands with a removable singularity at 0 (such as `(1 − M(z)) e^{−z} / z`)
//! can be passed as they are.

use alloc::collections::BinaryHeap;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{domain, parameter};
use crate::{Error, Result};

/// Default relative tolerance for capacity integrals.
pub const DEFAULT_TOL_REL: f64 = 1e-8;
/// Default evaluation budget per integral.
pub const DEFAULT_BUDGET: usize = 200_000;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

const RULE_EVALS: usize = 15;
const INITIAL_PIECES: usize = 4;

/// Value of an integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    /// Integral estimate.
    pub value: f64,
    /// Estimated absolute error of `value`, never negative.
    pub abs_error_estimate: f64,
    /// Number of integrand evaluations spent.
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error).then_with(|| other.a.total_cmp(&self.a))
    }
}

/// 15-point Kronrod estimate on `[a, b]` with the embedded 7-point Gauss error.
fn kronrod<F>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
where
    F: FnMut(f64) -> Result<f64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut eval = |x: f64| -> Result<f64> {
        let y = f(x)?;
        if y.is_finite() {
            Ok(y)
        } else {
            Err(domain("integrand returned a non-finite value"))
        }
    };
    let fc = eval(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.abs() * WGK[7];
    let mut fv = [(0.0, 0.0); 7];
    for (j, &node) in XGK.iter().take(7).enumerate() {
        let dx = half * node;
        let f1 = eval(center - dx)?;
        let f2 = eval(center + dx)?;
        fv[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = kronrod * 0.5;
    let mut asc = WGK[7] * (fc - mean).abs();
    for (j, (f1, f2)) in fv.iter().enumerate() {
        asc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let value = kronrod * half;
    let abs_value = abs_sum * half.abs();
    let asc = asc * half.abs();
    let mut err = ((kronrod - gauss) * half).abs();
    if asc != 0.0 && err != 0.0 {
        err = asc * libm::fmin(1.0, libm::pow(200.0 * err / asc, 1.5));
    }
    if abs_value > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = libm::fmax(50.0 * f64::EPSILON * abs_value, err);
    }
    Ok((value, err))
}

fn check_settings(tol_rel: f64, budget: usize) -> Result<()> {
    if !(tol_rel > 0.0) {
        return Err(parameter("quadrature tolerance must be positive"));
    }
    if budget < RULE_EVALS * INITIAL_PIECES {
        return Err(parameter("quadrature budget too small for the initial rule"));
    }
    Ok(())
}

/// Global adaptive bisection on `[a, b]`.
fn adaptive<F>(mut f: F, a: f64, b: f64, tol_rel: f64, budget: usize) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    check_settings(tol_rel, budget)?;
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0;
    let mut total = 0.0;
    let mut total_err = 0.0;
    // Segments too narrow to split keep contributing their error.
    let mut frozen_err = 0.0;
    let width = (b - a) / INITIAL_PIECES as f64;
    for i in 0..INITIAL_PIECES {
        let lo = a + width * i as f64;
        let hi = if i + 1 == INITIAL_PIECES { b } else { lo + width };
        let (value, error) = kronrod(&mut f, lo, hi)?;
        evaluations += RULE_EVALS;
        total += value;
        total_err += error;
        heap.push(Segment { a: lo, b: hi, value, error });
    }
    loop {
        if total_err <= tol_rel * total.abs() {
            return Ok(QuadratureResult { value: total, abs_error_estimate: total_err, evaluations });
        }
        let Some(worst) = heap.pop() else {
            return Err(Error::Accuracy { estimate: total, error: total_err });
        };
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 4.0 * f64::EPSILON * mid.abs() {
            frozen_err += worst.error;
            if frozen_err > tol_rel * total.abs() && heap.is_empty() {
                return Err(Error::Accuracy { estimate: total, error: total_err });
            }
            continue;
        }
        if evaluations + 2 * RULE_EVALS > budget {
            return Err(Error::Accuracy { estimate: total, error: total_err });
        }
        let (v1, e1) = kronrod(&mut f, worst.a, mid)?;
        let (v2, e2) = kronrod(&mut f, mid, worst.b)?;
        evaluations += 2 * RULE_EVALS;
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.error;
        if total_err < 0.0 {
            total_err = heap.iter().map(|s| s.error).sum::<f64>() + e1 + e2 + frozen_err;
        }
        heap.push(Segment { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Segment { a: mid, b: worst.b, value: v2, error: e2 });
    }
}

/// `∫ₐᵇ f(x) dx` for a fallible integrand.
pub fn try_integrate_finite<F>(f: F, a: f64, b: f64, tol_rel: f64, budget: usize) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(domain("finite integration needs finite limits"));
    }
    if a == b {
        return Ok(QuadratureResult { value: 0.0, abs_error_estimate: 0.0, evaluations: 0 });
    }
    adaptive(f, a, b, tol_rel, budget)
}

/// `∫ₐᵇ f(x) dx`.
pub fn integrate_finite<F>(mut f: F, a: f64, b: f64, tol_rel: f64, budget: usize) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    try_integrate_finite(|x| Ok(f(x)), a, b, tol_rel, budget)
}

/// `∫₀^∞ f(x) dx` for a fallible integrand.
pub fn try_integrate_semi_infinite<F>(mut f: F, tol_rel: f64, budget: usize) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    adaptive(
        |t| {
            let one_minus = 1.0 - t;
            let x = t / one_minus;
            if x.is_infinite() {
                return Ok(0.0);
            }
            Ok(f(x)? / (one_minus * one_minus))
        },
        0.0,
        1.0,
        tol_rel,
        budget,
    )
}

/// `∫₀^∞ f(x) dx` by adaptive Gauss–Kronrod on the image of `x = t / (1 − t)`.
///
/// Converged results satisfy `abs_error_estimate ≤ tol_rel · |value|`; when
/// the evaluation budget runs out an [`Error::Accuracy`] carries the best
/// estimate.
pub fn integrate_semi_infinite<F>(mut f: F, tol_rel: f64, budget: usize) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    try_integrate_semi_infinite(|x| Ok(f(x)), tol_rel, budget)
}

/// Truncated vertical integration line `Re s = abscissa`, `|Im s| ≤ half_height`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourSpec {
    /// Real part `c` of the line.
    pub abscissa: f64,
    /// Truncation `T` of `Im s`.
    pub half_height: f64,
    /// Number of trapezoid nodes on `[−T, T]`.
    pub nodes: usize,
}

impl ContourSpec {
    /// Smallest accepted node count.
    pub const MIN_NODES: usize = 64;

    /// Validated contour description.
    pub fn new(abscissa: f64, half_height: f64, nodes: usize) -> Result<Self> {
        if !abscissa.is_finite() {
            return Err(parameter("contour abscissa must be finite"));
        }
        if !(half_height > 0.0) || !half_height.is_finite() {
            return Err(parameter("contour half height must be positive"));
        }
        if nodes < Self::MIN_NODES {
            return Err(parameter("contour needs at least 64 nodes"));
        }
        Ok(Self { abscissa, half_height, nodes })
    }

    /// Node spacing along the line.
    pub fn step(&self) -> f64 {
        self.half_height / (self.nodes / 2) as f64
    }
}

/// Trapezoidal sum with its magnitude, `(Σ, Σ|·|)`, both scaled by `h / 2π`.
pub(crate) fn contour_sums<K>(kernel: &mut K, spec: &ContourSpec) -> Result<(Complex64, f64)>
where
    K: FnMut(Complex64) -> Complex64,
{
    let c = spec.abscissa;
    let per_side = spec.nodes / 2;
    let h = spec.step();
    let mut eval = |t: f64| -> Result<Complex64> {
        let v = kernel(Complex64::new(c, t));
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(domain("contour kernel returned a non-finite value"))
        }
    };
    let centre = eval(0.0)?;
    let mut sum = centre;
    let mut magnitude = centre.norm();
    let mut inner = 0.0;
    let mut outer = 0.0;
    for k in 1..=per_side {
        let t = h * k as f64;
        // Conjugate nodes are added together so symmetric kernels cancel
        // their imaginary parts pairwise.
        let pair = eval(t)? + eval(-t)?;
        sum += pair;
        magnitude += pair.norm();
        if k == per_side / 2 {
            inner = pair.norm();
        }
        if k == per_side {
            outer = pair.norm();
        }
    }
    if outer > 0.0 && outer >= inner {
        return Err(Error::Divergence);
    }
    let scale = h / (2.0 * PI);
    Ok((sum * scale, magnitude * scale))
}

/// `(1 / 2πi) ∫ kernel(s) ds` along the truncated line described by `spec`.
///
/// Fails with [`Error::Divergence`] when the kernel does not decay towards
/// the ends of the line.
pub fn integrate_vertical_contour<K>(mut kernel: K, spec: &ContourSpec) -> Result<Complex64>
where
    K: FnMut(Complex64) -> Complex64,
{
    contour_sums(&mut kernel, spec).map(|(sum, _)| sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::log_gamma;

    #[test]
    fn kronrod_weights_are_normalised() {
        let k: f64 = 2.0 * WGK[..7].iter().sum::<f64>() + WGK[7];
        let g: f64 = 2.0 * WG[..3].iter().sum::<f64>() + WG[3];
        assert!((k - 2.0).abs() < 1e-15);
        assert!((g - 2.0).abs() < 1e-15);
    }

    #[test]
    fn polynomials_integrate_exactly() {
        let r = integrate_finite(|x| x.powi(9) - 3.0 * x * x + 1.0, -1.0, 2.0, 1e-12, 10_000).unwrap();
        let exact = (2f64.powi(10) - 1.0) / 10.0 - (8.0 + 1.0) + 3.0;
        assert!((r.value - exact).abs() < 1e-12);
        assert_eq!(r.evaluations, RULE_EVALS * INITIAL_PIECES);
    }

    #[test]
    fn semi_infinite_examples() {
        let r = integrate_semi_infinite(|x| libm::exp(-x), 1e-12, DEFAULT_BUDGET).unwrap();
        assert!((r.value - 1.0).abs() < 1e-12);
        let r = integrate_semi_infinite(|x| x * libm::exp(-x * x), 1e-12, DEFAULT_BUDGET).unwrap();
        assert!((r.value - 0.5).abs() < 1e-12);
        let r = integrate_semi_infinite(|x| libm::exp(-x) / (1.0 + x), 1e-12, DEFAULT_BUDGET).unwrap();
        let u = crate::specfun::tricomi_u_integer(0, 1.0).unwrap();
        assert!((r.value - u).abs() < 1e-11 * u);
        assert!(r.abs_error_estimate <= 1e-12 * r.value.abs());
    }

    #[test]
    fn endpoint_singularity_converges() {
        // ∫₀^∞ x^{-1/2} e^{-x} dx = √π
        let r = integrate_semi_infinite(|x| libm::exp(-x) / libm::sqrt(x), 1e-10, DEFAULT_BUDGET).unwrap();
        assert!((r.value - libm::sqrt(PI)).abs() < 1e-9);
    }

    #[test]
    fn removable_singularity_at_origin() {
        // (1 − e^{−z}) e^{−z} / z → 1 as z → 0; integral is ln 2.
        let r = integrate_semi_infinite(|z| -libm::expm1(-z) * libm::exp(-z) / z, 1e-12, DEFAULT_BUDGET).unwrap();
        assert!((r.value - core::f64::consts::LN_2).abs() < 1e-12);
    }

    #[test]
    fn budget_exhaustion_reports_estimate() {
        let err = integrate_finite(|x| libm::sin(1.0 / x), 1e-6, 1.0, 1e-14, 200).unwrap_err();
        match err {
            Error::Accuracy { estimate, error } => {
                assert!(estimate.is_finite());
                assert!(error >= 0.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn scaling_by_power_of_two_is_exact() {
        let f = |x: f64| libm::exp(-x) * libm::cos(x) / (1.0 + x * x);
        let a = integrate_semi_infinite(f, 1e-10, DEFAULT_BUDGET).unwrap();
        let b = integrate_semi_infinite(|x| 4.0 * f(x), 1e-10, DEFAULT_BUDGET).unwrap();
        assert_eq!(b.value, 4.0 * a.value);
        assert_eq!(b.evaluations, a.evaluations);
    }

    #[test]
    fn cahen_mellin_identity() {
        // (1/2πi) ∫ Γ(s) x^{−s} ds = e^{−x}
        let x: f64 = 1.0;
        let spec = ContourSpec::new(0.5, 40.0, 1601).unwrap();
        let v = integrate_vertical_contour(|s| (log_gamma(s).unwrap() - s * libm::log(x)).exp(), &spec).unwrap();
        assert!((v.re - libm::exp(-1.0)).abs() < 1e-10);
        assert!(v.im.abs() <= 1e-12 * v.re.abs());
    }

    #[test]
    fn contour_doubling_height_is_stable_once_converged() {
        let kernel = |s: Complex64| (log_gamma(s).unwrap() - s * libm::log(2.0)).exp();
        let a = integrate_vertical_contour(kernel, &ContourSpec::new(0.5, 40.0, 1601).unwrap()).unwrap();
        let b = integrate_vertical_contour(kernel, &ContourSpec::new(0.5, 80.0, 3201).unwrap()).unwrap();
        assert!((a - b).norm() < 1e-10);
    }

    #[test]
    fn non_decaying_kernel_is_rejected() {
        let spec = ContourSpec::new(0.5, 10.0, 129).unwrap();
        let r = integrate_vertical_contour(|s| (s * 0.3).exp() + (-s * 0.3).exp(), &spec);
        assert_eq!(r, Err(Error::Divergence));
    }

    #[test]
    fn contour_spec_validation() {
        assert!(ContourSpec::new(0.5, 0.0, 128).is_err());
        assert!(ContourSpec::new(0.5, 1.0, 10).is_err());
        assert!(ContourSpec::new(f64::NAN, 1.0, 128).is_err());
    }
}
