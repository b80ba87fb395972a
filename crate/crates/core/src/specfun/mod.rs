//! Scalar special functions used by the capacity formulas.

mod bessel;
mod expint;
mod gamma;
mod meijer;

pub use bessel::{bessel_k, bessel_k_scaled, ln_bessel_k};
pub use expint::{expint, expint_e1, expint_scaled, tricomi_u_integer};
pub use gamma::{gamma, gamma_p, gamma_q, ln_factorial, ln_gamma, log_gamma, upper_incomplete_gamma};
pub use meijer::{meijer_g_2_0_0_2, meijer_g_2_1_1_2, MeijerValue, MEIJER_TARGET_REL};

pub(crate) use meijer::g_2_1_1_2_outcome;
