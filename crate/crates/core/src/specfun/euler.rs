use alloc::vec::Vec;

use spin::RwLock;

use super::{bernoulli_number, harmonic_exact};
use crate::bigmath::{Ball, Mag, Precision, Rational};
use crate::{Error, Result};

/// Order and precision of an Euler-Maclaurin evaluation of `H(n)`.
///
/// `q` is the index of the first omitted Bernoulli correction: the sum keeps
/// `B_2, ..., B_2(q-1)` and bounds the rest by `|B_2q| / (2q n^2q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmConfig {
    q: u32,
    precision: Precision,
}

impl EmConfig {
    pub const MAX_ORDER: u32 = 50;

    pub fn new(q: u32, precision: Precision) -> Result<Self> {
        if !(1..=Self::MAX_ORDER).contains(&q) {
            return Err(Error::Parameter("Euler-Maclaurin order must be in 1..=50"));
        }
        Ok(EmConfig { q, precision })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }
}

/// `B_2i / (2i n^2i)` as an exact rational.
fn correction_term(i: u32, n: u64) -> Rational {
    let b = bernoulli_number(2 * i as usize);
    let n2i = Rational::from_integer(n as i64).pow(2 * i);
    let den = n2i * Rational::from_integer(2 * i64::from(i));
    b.checked_div(&den).expect("nonzero")
}

/// Enclosure of `H(n)` from `ln n + gamma + 1/(2n) - sum B_2i/(2i n^2i)`.
pub fn harmonic_em(n: u64, cfg: EmConfig) -> Result<Ball> {
    if n == 0 {
        return Err(Error::Domain("harmonic numbers are indexed from n = 1"));
    }
    let p = cfg.precision;
    let wp = p.guarded(16);
    let mut acc = euler_gamma(wp) + Ball::from_i64(n as i64, wp).ln()? + Ball::from_ratio(1, 2 * n as i64, wp);
    for i in 1..cfg.q {
        acc = acc - Ball::from_rational(&correction_term(i, n), wp);
    }
    let rem = Ball::from_rational(&correction_term(cfg.q, n), wp).abs_upper();
    Ok(acc.add_error(rem).with_precision(p))
}

static GAMMA: RwLock<Vec<(u32, Ball)>> = RwLock::new(Vec::new());

/// Enclosure of Euler's constant with radius at most `2^(8 - p)`.
///
/// Cached per precision. Uses [`euler_gamma_with`] at `n = max(32, p/2)`.
pub fn euler_gamma(p: Precision) -> Ball {
    crate::bigmath::consts_cached(&GAMMA, p, |p| euler_gamma_with(default_point(p), p))
}

fn default_point(p: Precision) -> u64 {
    u64::from((p.bits() / 2).max(32))
}

/// Euler's constant from the exact value of `H(n)`:
/// `gamma = H(n) - ln n - 1/(2n) + sum_{i<q} B_2i/(2i n^2i) ± |B_2q|/(2q n^2q)`,
/// where `q` grows until the omitted term drops below the target radius or
/// the corrections stop decreasing.
pub fn euler_gamma_with(n: u64, p: Precision) -> Ball {
    assert!(n >= 1, "euler_gamma_with needs n >= 1");
    let wp = p.guarded(16);
    let h = harmonic_exact(n).expect("n >= 1");
    let mut acc = Ball::from_rational(&h, wp)
        - Ball::from_i64(n as i64, wp).ln().expect("positive")
        - Ball::from_ratio(1, 2 * n as i64, wp);
    let target = Mag::pow2(-(i64::from(wp.bits()) + 2));
    let mut prev: Option<Mag> = None;
    let mut i = 1u32;
    loop {
        let term = Ball::from_rational(&correction_term(i, n), wp);
        let bound = term.abs_upper();
        let diverging = prev.is_some_and(|p| bound >= p);
        if bound <= target || diverging {
            return acc.add_error(bound).with_precision(p);
        }
        acc = acc + term;
        prev = Some(bound);
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(bits: u32) -> Precision {
        Precision::new(bits).unwrap()
    }

    #[test]
    fn gamma_digits() {
        let g = euler_gamma(p(53));
        assert!(g.within(&Rational::parse("0.57721566").unwrap(), &Rational::parse("0.57721567").unwrap()));
        let g = euler_gamma(p(256));
        let lo = Rational::parse("0.5772156649015328606065120900824024310421593359399235988057672348848").unwrap();
        let hi = Rational::parse("0.5772156649015328606065120900824024310421593359399235988057672348849").unwrap();
        assert!(g.within(&lo, &hi));
        assert!(g.rad() <= Mag::pow2(8 - 256));
    }

    #[test]
    fn two_policies_agree() {
        let a = euler_gamma_with(64, p(192));
        let b = euler_gamma_with(150, p(192));
        assert!(a.overlaps(&b));
        assert!(euler_gamma(p(256)).rad() < euler_gamma(p(128)).rad());
    }

    #[test]
    fn em_contains_exact() {
        let cfg = EmConfig::new(3, p(128)).unwrap();
        let h = harmonic_em(10, cfg).unwrap();
        assert!(h.contains_rational(&Rational::from_ratio(7381, 2520)));
        let h1 = harmonic_em(1, EmConfig::new(2, p(128)).unwrap()).unwrap();
        assert!(h1.contains_rational(&Rational::one()));
        let h100 = harmonic_em(100, EmConfig::new(5, p(128)).unwrap()).unwrap();
        assert!(h100.rad() < Mag::pow2(-66)); // < 1e-20 / 2
        assert!(EmConfig::new(0, p(128)).is_err());
        assert!(EmConfig::new(51, p(128)).is_err());
    }
}
