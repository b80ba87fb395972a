//! Average secrecy capacity of vehicle-to-infrastructure links assisted by an
//! intelligent reflecting surface (IRS), a decode-and-forward (DF) relay or a
//! fixed-gain amplify-and-forward (AFFG) relay, in the presence of a passive
//! eavesdropper.
//!
//! The crate is `no_std` (it needs `alloc`). It contains:
//!
//! * [`specfun`]: Gamma family, incomplete Gamma, exponential integrals,
//!   Tricomi U, modified Bessel K of real order and a Mellin–Barnes engine
//!   for the Meijer G instances used by the capacity formulas.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration on finite and
//!   semi-infinite intervals, plus trapezoidal vertical-contour integration.
//! * [`channels`]: Gamma / Gamma-Gamma fading, pathloss, SNR scaling and
//!   samplers.
//! * [`analytic`]: MGF-based IRS capacity, closed-form DF capacity and the
//!   CCDF-based AFFG capacity.
//! * [`montecarlo`]: a chunked, reproducible simulation oracle for all three
//!   architectures.
#![no_std]
#![warn(missing_docs)]

extern crate alloc;

pub mod analytic;
pub mod channels;
mod error;
pub mod montecarlo;
pub mod quadrature;
pub mod specfun;

pub use error::{Error, Result};

/// `1 / ln 2`, converts nats to bits.
pub(crate) const LOG2_E: f64 = core::f64::consts::LOG2_E;
