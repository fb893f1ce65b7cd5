//! Exact rationals and midpoint-radius ball arithmetic.

mod ball;
mod consts;
mod decimal;
mod dyadic;
mod elementary;
mod mag;
mod rational;

pub use ball::{Ball, BallOrdering};
pub use consts::{ln2, pi};
pub(crate) use consts::cached as consts_cached;
pub use dyadic::Dyadic;
pub use mag::Mag;
pub use rational::Rational;

use crate::{Error, Result};

/// Working precision of ball midpoints, in bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(u32);

impl Precision {
    pub const MIN_BITS: u32 = 53;
    pub const DEFAULT: Precision = Precision(128);
    /// Largest precision that automatic retries escalate to.
    pub const CAP: Precision = Precision(4096);

    pub fn new(bits: u32) -> Result<Self> {
        if bits < Self::MIN_BITS {
            return Err(Error::Precision(bits));
        }
        Ok(Precision(bits))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Adds guard bits, saturating.
    pub(crate) fn guarded(self, extra: u32) -> Precision {
        Precision(self.0.saturating_add(extra))
    }

    pub fn doubled(self) -> Precision {
        Precision(self.0.saturating_mul(2))
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self::DEFAULT
    }
}

impl core::fmt::Display for Precision {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{} bits", self.0)
    }
}
