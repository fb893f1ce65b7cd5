//! Bernoulli numbers, exact harmonic sums, Euler's constant and the
//! digamma family.
//!
//! The asymptotic series used here all envelope their function on the
//! positive axis: the truncation error is at most the first omitted term and
//! has its sign. That bound is what every series routine adds to its radius.

mod bernoulli;
mod euler;
mod harmonic;
mod lgamma;
mod polygamma;

pub use bernoulli::{bernoulli_number, bernoulli_polynomial, BernoulliCache};
pub use euler::{euler_gamma, euler_gamma_with, harmonic_em, EmConfig};
pub use harmonic::{
    alternating_partial, alternating_tail, harmonic_exact, odd_harmonic_exact, UnitFractionSum,
};
pub use lgamma::{lgamma, stirling_tail, StirlingKind};
pub use polygamma::{digamma, trigamma};

use crate::bigmath::{Ball, Mag};

/// Working argument from which the polygamma and Stirling series are used.
pub(crate) fn shift_target(bits: u32) -> i64 {
    i64::from((bits / 4).max(16))
}

/// Inputs with a larger relative radius are evaluated through endpoint hulls.
pub(crate) fn is_wide(x: &Ball) -> bool {
    !x.rad().is_zero() && x.rad() > Mag::from_dyadic_down(x.mid()).mul_2exp(-24)
}
