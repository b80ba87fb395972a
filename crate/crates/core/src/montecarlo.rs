//! Monte Carlo oracle for the ergodic and secrecy capacities.
//!
//! Samples are split into fixed-size chunks. Chunk `i` draws from a ChaCha8
//! generator seeded with the master seed and switched to stream `i`, so the
//! numbers a chunk sees do not depend on which thread runs it. Chunk
//! statistics are merged in chunk order, which makes the result
//! bit-identical for any degree of parallelism; [`run_chunk`] and
//! [`reduce`] are the building blocks for parallel drivers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::analytic::{CapacityEstimate, Method, SecrecyReport};
use crate::channels::{Architecture, GammaSampler, Receiver, ScenarioIrs, ScenarioRelay};
use crate::error::parameter;
use crate::Result;

/// Smallest sample count accepted for a reported estimate.
pub const MIN_SAMPLES: u64 = 1000;
/// Default chunk size.
pub const DEFAULT_CHUNK_SIZE: u64 = 1 << 16;

/// Sample budget and seeding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    /// Total number of channel realizations.
    pub samples: u64,
    /// Seed shared by all chunk streams.
    pub master_seed: u64,
    /// Realizations per chunk.
    pub chunk_size: u64,
}

impl McConfig {
    /// Configuration with [`DEFAULT_CHUNK_SIZE`].
    pub fn new(samples: u64, master_seed: u64) -> Self {
        Self { samples, master_seed, chunk_size: DEFAULT_CHUNK_SIZE }
    }

    /// Checks `samples ≥ MIN_SAMPLES` and `chunk_size ≥ 1`.
    pub fn validate(&self) -> Result<()> {
        if self.samples < MIN_SAMPLES {
            return Err(parameter(alloc::format!("at least {MIN_SAMPLES} samples are needed, got {}", self.samples)));
        }
        if self.chunk_size == 0 {
            return Err(parameter("chunk size must be positive"));
        }
        Ok(())
    }

    /// Number of chunks.
    pub fn chunk_count(&self) -> u64 {
        self.samples.div_ceil(self.chunk_size)
    }

    /// Realizations in chunk `index`.
    pub fn chunk_len(&self, index: u64) -> u64 {
        let start = index * self.chunk_size;
        self.chunk_size.min(self.samples.saturating_sub(start))
    }
}

/// Whether the legitimate and eavesdropper branches share the draw of the
/// common first hop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Coupling {
    /// One draw of the source to node channel feeds both branches.
    #[default]
    Shared,
    /// Each branch draws its own first hop.
    Independent,
}

/// Running mean and sum of squared deviations.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Welford {
    /// Number of observations.
    pub count: u64,
    /// Running mean.
    pub mean: f64,
    /// Sum of squared deviations from the mean.
    pub m2: f64,
}

impl Welford {
    /// Adds one observation.
    #[inline]
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    /// Pooled statistics of `self` followed by `other`.
    pub fn merge(&self, other: &Welford) -> Welford {
        if other.count == 0 {
            return *self;
        }
        if self.count == 0 {
            return *other;
        }
        let count = self.count + other.count;
        let (na, nb, n) = (self.count as f64, other.count as f64, count as f64);
        let delta = other.mean - self.mean;
        Welford { count, mean: self.mean + delta * nb / n, m2: self.m2 + other.m2 + delta * delta * na * nb / n }
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    /// Standard error of the mean.
    pub fn std_error(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            libm::sqrt(self.variance() / self.count as f64)
        }
    }
}

/// Statistics of `log₂(1 + γ)` at both receivers and of their difference.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ChunkStats {
    /// Legitimate receiver.
    pub legit: Welford,
    /// Eavesdropper.
    pub eve: Welford,
    /// Per-realization difference legit − eve.
    pub diff: Welford,
}

impl ChunkStats {
    /// Pooled statistics of `self` followed by `other`.
    pub fn merge(&self, other: &ChunkStats) -> ChunkStats {
        ChunkStats {
            legit: self.legit.merge(&other.legit),
            eve: self.eve.merge(&other.eve),
            diff: self.diff.merge(&other.diff),
        }
    }
}

/// Samplers prepared for one architecture and scenario.
#[derive(Debug, Clone, Copy)]
pub enum McModel {
    /// `γ_i = Σ_n s_i X_n Y_{n,i}` over `n_elements` elements.
    Irs {
        /// Number of elements.
        n_elements: u32,
        /// Source to surface gain.
        ts: GammaSampler,
        /// Surface to legitimate receiver gain.
        sl: GammaSampler,
        /// Surface to eavesdropper gain.
        se: GammaSampler,
        /// Link budget towards the legitimate receiver.
        scale_legit: f64,
        /// Link budget towards the eavesdropper.
        scale_eve: f64,
    },
    /// `γ_i = min(γ₁, γ_{b,i})`.
    Df {
        /// First-hop SNR.
        hop1: GammaSampler,
        /// Relay to legitimate receiver SNR.
        legit: GammaSampler,
        /// Relay to eavesdropper SNR.
        eve: GammaSampler,
    },
    /// `γ_i = γ₁ γ_{b,i} / (γ₁ + l)`.
    Affg {
        /// First-hop SNR.
        hop1: GammaSampler,
        /// Relay to legitimate receiver SNR.
        legit: GammaSampler,
        /// Relay to eavesdropper SNR.
        eve: GammaSampler,
        /// Fixed-gain constant.
        l: f64,
    },
}

impl McModel {
    /// Surface model.
    pub fn irs(s: &ScenarioIrs) -> Result<Self> {
        s.validate()?;
        Ok(McModel::Irs {
            n_elements: s.n_elements,
            ts: GammaSampler::new(s.fading_ts)?,
            sl: GammaSampler::new(s.fading_sl)?,
            se: GammaSampler::new(s.fading_se)?,
            scale_legit: s.element_scale(Receiver::Legit)?,
            scale_eve: s.element_scale(Receiver::Eve)?,
        })
    }

    /// Decode-and-forward model.
    pub fn df(s: &ScenarioRelay) -> Result<Self> {
        s.validate()?;
        Ok(McModel::Df {
            hop1: GammaSampler::new(s.hop1()?)?,
            legit: GammaSampler::new(s.hop2(Receiver::Legit)?)?,
            eve: GammaSampler::new(s.hop2(Receiver::Eve)?)?,
        })
    }

    /// Fixed-gain amplify-and-forward model.
    pub fn affg(s: &ScenarioRelay) -> Result<Self> {
        s.validate()?;
        Ok(McModel::Affg {
            hop1: GammaSampler::new(s.hop1()?)?,
            legit: GammaSampler::new(s.hop2(Receiver::Legit)?)?,
            eve: GammaSampler::new(s.hop2(Receiver::Eve)?)?,
            l: s.relay_constant()?,
        })
    }

    /// Model for `architecture`; the surface uses `irs`, the relays `relay`.
    pub fn new(architecture: Architecture, irs: &ScenarioIrs, relay: &ScenarioRelay) -> Result<Self> {
        match architecture {
            Architecture::Irs => Self::irs(irs),
            Architecture::Df => Self::df(relay),
            Architecture::Affg => Self::affg(relay),
        }
    }

    /// One realization of the SNR pair `(γ_L, γ_E)`.
    #[inline]
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R, coupling: Coupling) -> (f64, f64) {
        match *self {
            McModel::Irs { n_elements, ts, sl, se, scale_legit, scale_eve } => {
                let mut sum_l = 0.0;
                let mut sum_e = 0.0;
                for _ in 0..n_elements {
                    let x = ts.sample(rng);
                    let x_e = match coupling {
                        Coupling::Shared => x,
                        Coupling::Independent => ts.sample(rng),
                    };
                    sum_l += x * sl.sample(rng);
                    sum_e += x_e * se.sample(rng);
                }
                (scale_legit * sum_l, scale_eve * sum_e)
            }
            McModel::Df { hop1, legit, eve } => {
                let (g1, g1_e) = first_hop(&hop1, rng, coupling);
                (g1.min(legit.sample(rng)), g1_e.min(eve.sample(rng)))
            }
            McModel::Affg { hop1, legit, eve, l } => {
                let (g1, g1_e) = first_hop(&hop1, rng, coupling);
                (g1 * legit.sample(rng) / (g1 + l), g1_e * eve.sample(rng) / (g1_e + l))
            }
        }
    }
}

#[inline]
fn first_hop<R: Rng + ?Sized>(hop1: &GammaSampler, rng: &mut R, coupling: Coupling) -> (f64, f64) {
    let g1 = hop1.sample(rng);
    match coupling {
        Coupling::Shared => (g1, g1),
        Coupling::Independent => (g1, hop1.sample(rng)),
    }
}

/// Generator of chunk `index`.
pub fn chunk_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// Statistics of chunk `index`.
pub fn run_chunk(model: &McModel, cfg: &McConfig, coupling: Coupling, index: u64) -> ChunkStats {
    let mut rng = chunk_rng(cfg.master_seed, index);
    let mut stats = ChunkStats::default();
    for _ in 0..cfg.chunk_len(index) {
        let (g_l, g_e) = model.draw(&mut rng, coupling);
        let c_l = libm::log2(1.0 + g_l);
        let c_e = libm::log2(1.0 + g_e);
        stats.legit.push(c_l);
        stats.eve.push(c_e);
        stats.diff.push(c_l - c_e);
    }
    stats
}

/// Merges chunk statistics in the order given and forms the estimates.
/// The secrecy standard error is that of the per-realization difference.
pub fn reduce<I>(chunks: I) -> SecrecyReport
where
    I: IntoIterator<Item = ChunkStats>,
{
    let total = chunks.into_iter().fold(ChunkStats::default(), |acc, c| acc.merge(&c));
    let estimate = |w: &Welford, value: f64| CapacityEstimate {
        bits_per_sec_hz: value,
        method: Method::MonteCarlo,
        std_error: w.std_error(),
        samples: w.count,
    };
    SecrecyReport {
        legit: estimate(&total.legit, total.legit.mean),
        eve: estimate(&total.eve, total.eve.mean),
        secrecy: estimate(&total.diff, libm::fmax(total.legit.mean - total.eve.mean, 0.0)),
    }
}

/// Sequential run of all chunks.
pub fn simulate(model: &McModel, cfg: &McConfig, coupling: Coupling) -> Result<SecrecyReport> {
    cfg.validate()?;
    Ok(reduce((0..cfg.chunk_count()).map(|i| run_chunk(model, cfg, coupling, i))))
}

fn pick(report: SecrecyReport, receiver: Receiver) -> CapacityEstimate {
    match receiver {
        Receiver::Legit => report.legit,
        Receiver::Eve => report.eve,
    }
}

/// Mean of `log₂(1 + Σ_n γ_{i,n})`.
pub fn mc_ergodic_irs(scenario: &ScenarioIrs, receiver: Receiver, cfg: &McConfig) -> Result<CapacityEstimate> {
    Ok(pick(simulate(&McModel::irs(scenario)?, cfg, Coupling::Shared)?, receiver))
}

/// Mean of `log₂(1 + min(γ₁, γ_b))`.
pub fn mc_ergodic_df(scenario: &ScenarioRelay, receiver: Receiver, cfg: &McConfig) -> Result<CapacityEstimate> {
    Ok(pick(simulate(&McModel::df(scenario)?, cfg, Coupling::Shared)?, receiver))
}

/// Mean of `log₂(1 + γ₁γ_b / (γ₁ + l))`.
pub fn mc_ergodic_affg(scenario: &ScenarioRelay, receiver: Receiver, cfg: &McConfig) -> Result<CapacityEstimate> {
    Ok(pick(simulate(&McModel::affg(scenario)?, cfg, Coupling::Shared)?, receiver))
}

/// Both ergodic capacities and `max(Ĉ_L − Ĉ_E, 0)` with a shared first hop.
pub fn mc_report(
    architecture: Architecture,
    irs: &ScenarioIrs,
    relay: &ScenarioRelay,
    cfg: &McConfig,
) -> Result<SecrecyReport> {
    simulate(&McModel::new(architecture, irs, relay)?, cfg, Coupling::Shared)
}

/// Secrecy estimate of [`mc_report`].
pub fn mc_secrecy(
    architecture: Architecture,
    irs: &ScenarioIrs,
    relay: &ScenarioRelay,
    cfg: &McConfig,
) -> Result<CapacityEstimate> {
    Ok(mc_report(architecture, irs, relay, cfg)?.secrecy)
}
