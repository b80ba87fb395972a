//! Fading models, pathloss and SNR parameterization for the three
//! architectures, with the matching random samplers.
//!
//! Every squared channel gain is Gamma distributed with shape `alpha` and
//! rate `beta` (mean `alpha / beta`). Multiplying a gain by the link budget
//! `P d^{−ζ} / w` keeps the shape and divides the rate, so each
//! instantaneous SNR stays in the Gamma family.

use rand::Rng;
use rand_distr::Distribution;

use crate::error::{domain, parameter};
use crate::specfun::{gamma_p, gamma_q, ln_bessel_k, ln_gamma};
use crate::{Error, Result};

/// Largest shape accepted where an integer shape is required.
pub const MAX_INTEGER_SHAPE: u32 = 1000;

/// Shape and rate of a Gamma-distributed power gain or SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadingParams {
    /// Shape `α > 0`.
    pub alpha: f64,
    /// Rate `β > 0`.
    pub beta: f64,
}

impl FadingParams {
    /// Validated constructor.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        let p = Self { alpha, beta };
        p.validate()?;
        Ok(p)
    }

    /// Checks `α > 0`, `β > 0`, both finite.
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(parameter(alloc::format!("fading shape must be positive, got {}", self.alpha)));
        }
        if !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(parameter(alloc::format!("fading rate must be positive, got {}", self.beta)));
        }
        Ok(())
    }

    /// Mean `α / β`.
    pub fn mean(&self) -> f64 {
        self.alpha / self.beta
    }

    /// The shape as an integer, or a parameter error if it is not one.
    pub fn integer_shape(&self) -> Result<u32> {
        integer_shape(self.alpha)
    }
}

pub(crate) fn integer_shape(alpha: f64) -> Result<u32> {
    if alpha >= 1.0 && alpha <= f64::from(MAX_INTEGER_SHAPE) && libm::floor(alpha) == alpha {
        Ok(alpha as u32)
    } else {
        Err(parameter(alloc::format!("the series form needs an integer shape in 1..={MAX_INTEGER_SHAPE}, got {alpha}")))
    }
}

/// Link distances and pathloss exponent. The same three distances serve the
/// surface and the relay: source to node, node to the legitimate receiver
/// and node to the eavesdropper.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    /// Source to surface / relay distance in meters.
    pub d_source_node: f64,
    /// Surface / relay to legitimate receiver distance in meters.
    pub d_node_legit: f64,
    /// Surface / relay to eavesdropper distance in meters.
    pub d_node_eve: f64,
    /// Pathloss exponent `ζ`.
    pub pathloss_exponent: f64,
}

impl Geometry {
    /// Checks that all distances and the exponent are positive and finite.
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("d_source_node", self.d_source_node),
            ("d_node_legit", self.d_node_legit),
            ("d_node_eve", self.d_node_eve),
            ("pathloss_exponent", self.pathloss_exponent),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(parameter(alloc::format!("{name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    /// Distance from the node to `receiver`.
    pub fn d_node(&self, receiver: Receiver) -> f64 {
        match receiver {
            Receiver::Legit => self.d_node_legit,
            Receiver::Eve => self.d_node_eve,
        }
    }
}

/// The three ways of reaching the receivers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Architecture {
    /// Intelligent reflecting surface.
    Irs,
    /// Decode-and-forward relay.
    Df,
    /// Fixed-gain amplify-and-forward relay.
    Affg,
}

impl Architecture {
    /// Lower-case label used in configs and reports.
    pub fn label(self) -> &'static str {
        match self {
            Architecture::Irs => "irs",
            Architecture::Df => "df",
            Architecture::Affg => "affg",
        }
    }
}

/// Which end of the second hop is observed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Receiver {
    /// Legitimate receiver `L`.
    Legit,
    /// Eavesdropper `E`.
    Eve,
}

/// Noise powers of the receiving nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoisePowers {
    /// Legitimate receiver.
    pub legit: f64,
    /// Eavesdropper.
    pub eve: f64,
    /// Relay input (unused by the surface).
    pub relay: f64,
}

impl NoisePowers {
    /// Same noise power everywhere.
    pub fn uniform(w: f64) -> Self {
        Self { legit: w, eve: w, relay: w }
    }

    /// Noise power at `receiver`.
    pub fn at(&self, receiver: Receiver) -> f64 {
        match receiver {
            Receiver::Legit => self.legit,
            Receiver::Eve => self.eve,
        }
    }

    fn validate(&self, with_relay: bool) -> Result<()> {
        let mut entries = alloc::vec![("legit", self.legit), ("eve", self.eve)];
        if with_relay {
            entries.push(("relay", self.relay));
        }
        for (name, v) in entries {
            if !(v > 0.0 && v.is_finite()) {
                return Err(parameter(alloc::format!("noise power {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }
}

/// A surface of `N` reflecting elements between the source and both receivers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioIrs {
    /// Number of elements `N ≥ 1`.
    pub n_elements: u32,
    /// Distances and pathloss exponent.
    pub geometry: Geometry,
    /// Source to surface gain, per element.
    pub fading_ts: FadingParams,
    /// Surface to legitimate receiver gain, per element.
    pub fading_sl: FadingParams,
    /// Surface to eavesdropper gain, per element.
    pub fading_se: FadingParams,
    /// Transmit power in dB.
    pub tx_power_dbm: f64,
    /// Receiver noise powers.
    pub noise: NoisePowers,
}

impl ScenarioIrs {
    /// Checks every invariant of the scenario.
    pub fn validate(&self) -> Result<()> {
        if self.n_elements == 0 {
            return Err(parameter("the surface needs at least one element"));
        }
        self.geometry.validate()?;
        self.fading_ts.validate()?;
        self.fading_sl.validate()?;
        self.fading_se.validate()?;
        check_power(self.tx_power_dbm)?;
        self.noise.validate(false)
    }

    /// Unscaled fading of the surface to `receiver` hop.
    pub fn fading_second(&self, receiver: Receiver) -> FadingParams {
        match receiver {
            Receiver::Legit => self.fading_sl,
            Receiver::Eve => self.fading_se,
        }
    }

    /// Link budget `P d_{T}^{−ζ} d_{i}^{−ζ} / w_i` of one element.
    pub fn element_scale(&self, receiver: Receiver) -> Result<f64> {
        let g = &self.geometry;
        Ok(db_to_linear(self.tx_power_dbm)
            * pathloss(g.d_source_node, g.pathloss_exponent)?
            * pathloss(g.d_node(receiver), g.pathloss_exponent)?
            / self.noise.at(receiver))
    }

    /// Gamma-Gamma law of one element's SNR at `receiver`.
    pub fn element_params(&self, receiver: Receiver) -> Result<GammaGammaParams> {
        GammaGammaParams::from_hops(self.fading_ts, self.fading_second(receiver), self.element_scale(receiver)?)
    }
}

/// How the fixed relay gain is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RelayGain {
    /// `l` equals the mean first-hop SNR plus one.
    Auto,
    /// `l` given directly.
    Fixed(f64),
}

/// A relay between the source and both receivers. The relay retransmits
/// with the source power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScenarioRelay {
    /// Distances and pathloss exponent.
    pub geometry: Geometry,
    /// Source to relay gain.
    pub fading_1: FadingParams,
    /// Relay to legitimate receiver gain.
    pub fading_2: FadingParams,
    /// Relay to eavesdropper gain.
    pub fading_3: FadingParams,
    /// Transmit power in dB, used by the source and the relay.
    pub tx_power_dbm: f64,
    /// Noise powers at the relay and both receivers.
    pub noise: NoisePowers,
    /// Fixed gain of the amplify-and-forward relay.
    pub relay_gain: RelayGain,
}

impl ScenarioRelay {
    /// Checks every invariant, including the integer shapes required by the
    /// series forms of the relay formulas.
    pub fn validate(&self) -> Result<()> {
        self.geometry.validate()?;
        for f in [self.fading_1, self.fading_2, self.fading_3] {
            f.validate()?;
            f.integer_shape()?;
        }
        check_power(self.tx_power_dbm)?;
        self.noise.validate(true)?;
        if let RelayGain::Fixed(l) = self.relay_gain {
            if !(l > 0.0 && l.is_finite()) {
                return Err(parameter(alloc::format!("relay gain constant must be positive, got {l}")));
            }
        }
        Ok(())
    }

    /// SNR law of the source to relay hop.
    pub fn hop1(&self) -> Result<FadingParams> {
        let g = &self.geometry;
        let scale =
            db_to_linear(self.tx_power_dbm) * pathloss(g.d_source_node, g.pathloss_exponent)? / self.noise.relay;
        snr_scaled_params(self.fading_1, scale)
    }

    /// SNR law of the relay to `receiver` hop.
    pub fn hop2(&self, receiver: Receiver) -> Result<FadingParams> {
        let g = &self.geometry;
        let fading = match receiver {
            Receiver::Legit => self.fading_2,
            Receiver::Eve => self.fading_3,
        };
        let scale = db_to_linear(self.tx_power_dbm) * pathloss(g.d_node(receiver), g.pathloss_exponent)?
            / self.noise.at(receiver);
        snr_scaled_params(fading, scale)
    }

    /// The constant `l` of the fixed-gain end-to-end SNR.
    pub fn relay_constant(&self) -> Result<f64> {
        match self.relay_gain {
            RelayGain::Auto => Ok(self.hop1()?.mean() + 1.0),
            RelayGain::Fixed(l) => Ok(l),
        }
    }
}

fn check_power(dbm: f64) -> Result<()> {
    if dbm.is_nan() || dbm == f64::INFINITY {
        return Err(parameter(alloc::format!("transmit power must be finite, got {dbm}")));
    }
    Ok(())
}

/// Law of the product of two independent Gamma gains, scaled to an SNR.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaGammaParams {
    /// `(α_T + α_i) / 2`.
    pub alpha_gg: f64,
    /// `β_T β_i` divided by the link budget.
    pub beta_gg: f64,
    /// Bessel order `α_T − α_i`.
    pub order: f64,
    /// Shape of the first factor.
    pub alpha_t: f64,
    /// Shape of the second factor.
    pub alpha_i: f64,
}

impl GammaGammaParams {
    /// Law of `scale · X · Y` with `X ~ first`, `Y ~ second`.
    pub fn from_hops(first: FadingParams, second: FadingParams, scale: f64) -> Result<Self> {
        first.validate()?;
        second.validate()?;
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(domain(alloc::format!("SNR scale must be positive, got {scale}")));
        }
        let beta_gg = first.beta * second.beta / scale;
        if !(beta_gg > 0.0) || !beta_gg.is_finite() {
            return Err(Error::Overflow("Gamma-Gamma rate out of range".into()));
        }
        Ok(Self {
            alpha_gg: 0.5 * (first.alpha + second.alpha),
            beta_gg,
            order: first.alpha - second.alpha,
            alpha_t: first.alpha,
            alpha_i: second.alpha,
        })
    }

    /// Mean `α_T α_i / β_gg`.
    pub fn mean(&self) -> f64 {
        self.alpha_t * self.alpha_i / self.beta_gg
    }
}

/// `d^{−ζ}`.
pub fn pathloss(d: f64, zeta: f64) -> Result<f64> {
    if !(d > 0.0) {
        return Err(domain(alloc::format!("distance must be positive, got {d}")));
    }
    Ok(libm::pow(d, -zeta))
}

/// `10^{dB/10}`.
pub fn db_to_linear(db: f64) -> f64 {
    libm::exp10(0.1 * db)
}

/// Law of `scale · X` for `X ~ Gamma(α, β)`: `Gamma(α, β / scale)`.
pub fn snr_scaled_params(fading: FadingParams, scale: f64) -> Result<FadingParams> {
    if !(scale > 0.0) || !scale.is_finite() {
        return Err(domain(alloc::format!("SNR scale must be positive, got {scale}")));
    }
    FadingParams::new(fading.alpha, fading.beta / scale)
}

/// Gamma density `β^α γ^{α−1} e^{−βγ} / Γ(α)`.
pub fn gamma_pdf(g: f64, p: FadingParams) -> Result<f64> {
    p.validate()?;
    if !(g >= 0.0) {
        return Err(domain("gamma_pdf: argument must be nonnegative"));
    }
    if g == 0.0 {
        return match p.alpha.partial_cmp(&1.0) {
            Some(core::cmp::Ordering::Greater) => Ok(0.0),
            Some(core::cmp::Ordering::Equal) => Ok(p.beta),
            _ => Err(domain("gamma_pdf: density is unbounded at 0 for shape < 1")),
        };
    }
    Ok(libm::exp(p.alpha * libm::log(p.beta) + (p.alpha - 1.0) * libm::log(g) - p.beta * g - ln_gamma(p.alpha)))
}

/// Gamma CDF `γ(α, βγ) / Γ(α)`.
pub fn gamma_cdf(g: f64, p: FadingParams) -> Result<f64> {
    p.validate()?;
    if !(g >= 0.0) {
        return Err(domain("gamma_cdf: argument must be nonnegative"));
    }
    gamma_p(p.alpha, p.beta * g)
}

/// Gamma survival function `Γ(α, βγ) / Γ(α)`.
pub fn gamma_ccdf(g: f64, p: FadingParams) -> Result<f64> {
    p.validate()?;
    if !(g >= 0.0) {
        return Err(domain("gamma_ccdf: argument must be nonnegative"));
    }
    gamma_q(p.alpha, p.beta * g)
}

/// Finite-sum survival function `Σ_{j<α} (βγ)^j e^{−βγ} / j!` for integer `α`.
pub fn gamma_ccdf_series(g: f64, p: FadingParams) -> Result<f64> {
    p.validate()?;
    let n = p.integer_shape()?;
    if !(g >= 0.0) {
        return Err(domain("gamma_ccdf_series: argument must be nonnegative"));
    }
    let x = p.beta * g;
    let mut term = libm::exp(-x);
    let mut sum = term;
    for j in 1..n {
        term *= x / f64::from(j);
        sum += term;
    }
    Ok(sum.min(1.0))
}

/// Density of the Gamma-Gamma SNR:
/// `2 β^α γ^{α−1} K_v(2√(βγ)) / (Γ(α_T) Γ(α_i))`.
///
/// At `γ = 0` the limit is returned when it is finite.
pub fn gamma_gamma_pdf(g: f64, gg: &GammaGammaParams) -> Result<f64> {
    if !(g >= 0.0) {
        return Err(domain("gamma_gamma_pdf: argument must be nonnegative"));
    }
    let norm = ln_gamma(gg.alpha_t) + ln_gamma(gg.alpha_i);
    if g == 0.0 {
        // γ^{α−1} K_v(2√(βγ)) ~ Γ(|v|)/2 · β^{−|v|/2} γ^{min(α_T, α_i) − 1}
        let lower = libm::fmin(gg.alpha_t, gg.alpha_i);
        return if lower > 1.0 {
            Ok(0.0)
        } else if lower == 1.0 && gg.order != 0.0 {
            let v = gg.order.abs();
            Ok(libm::exp(ln_gamma(v) + (gg.alpha_gg - 0.5 * v) * libm::log(gg.beta_gg) - norm))
        } else {
            Err(domain("gamma_gamma_pdf: density is unbounded at 0"))
        };
    }
    let arg = 2.0 * libm::sqrt(gg.beta_gg * g);
    let ln_pdf = core::f64::consts::LN_2
        + gg.alpha_gg * libm::log(gg.beta_gg)
        + (gg.alpha_gg - 1.0) * libm::log(g)
        + ln_bessel_k(gg.order, arg)?
        - norm;
    Ok(libm::exp(ln_pdf))
}

/// Draws from `Gamma(α, β)`; construct once per parameter set.
#[derive(Debug, Clone, Copy)]
pub struct GammaSampler {
    inner: rand_distr::Gamma<f64>,
}

impl GammaSampler {
    /// Sampler for `p`.
    pub fn new(p: FadingParams) -> Result<Self> {
        p.validate()?;
        let inner =
            rand_distr::Gamma::new(p.alpha, 1.0 / p.beta).map_err(|_| parameter("invalid Gamma sampler parameters"))?;
        Ok(Self { inner })
    }

    /// One draw.
    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        self.inner.sample(rng)
    }
}

/// One draw from `Gamma(α, β)`.
pub fn sample_gamma<R: Rng + ?Sized>(p: FadingParams, rng: &mut R) -> Result<f64> {
    Ok(GammaSampler::new(p)?.sample(rng))
}

/// Product of independent draws from `p1` and `p2`.
pub fn sample_gamma_gamma<R: Rng + ?Sized>(p1: FadingParams, p2: FadingParams, rng: &mut R) -> Result<f64> {
    let x = sample_gamma(p1, rng)?;
    let y = sample_gamma(p2, rng)?;
    Ok(x * y)
}
