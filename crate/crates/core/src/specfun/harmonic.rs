use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::bigmath::{ln2, Ball, Dyadic, Precision, Rational};
use crate::{Error, Result};

fn running_sum(n: u64, term: impl Fn(u64) -> (bool, u64)) -> UnitFractionSum {
    let mut s = UnitFractionSum::new();
    for k in 1..=n {
        let (positive, d) = term(k);
        s.push(positive, d);
    }
    s
}

fn exact_sum(n: u64, term: impl Fn(u64) -> (bool, u64)) -> Rational {
    running_sum(n, term).to_rational()
}

/// `H(n) = 1 + 1/2 + ... + 1/n`.
pub fn harmonic_exact(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("harmonic numbers are indexed from n = 1"));
    }
    Ok(exact_sum(n, |k| (true, k)))
}

/// `1 + 1/3 + ... + 1/(2n - 1)`.
pub fn odd_harmonic_exact(n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("odd harmonic sums are indexed from n = 1"));
    }
    Ok(exact_sum(n, |k| (true, 2 * k - 1)))
}

/// `sum_{k=1}^n (-1)^(k-1) / k`.
pub fn alternating_partial(n: u64) -> Rational {
    exact_sum(n, |k| (k % 2 == 1, k))
}

/// `|sum_{k>n} (-1)^(k-1)/k| = |ln 2 - S_n|`, a strictly positive enclosure.
pub fn alternating_tail(n: u64, p: Precision) -> Result<Ball> {
    if n == 0 {
        return Err(Error::Domain("alternating tail is indexed from n = 1"));
    }
    let s = alternating_partial(n);
    Ok(alternating_tail_from(&s, n, p))
}

/// Tail from a precomputed partial sum; the partial sum overshoots ln 2 for
/// odd `n` and undershoots for even `n`.
pub(crate) fn alternating_tail_from_ball(s: &Ball, n: u64) -> Ball {
    let p = s.precision();
    let l = ln2(p.guarded(16)).with_precision(p);
    if n % 2 == 1 {
        s - &l
    } else {
        l - s
    }
}

fn alternating_tail_from(s: &Rational, n: u64, p: Precision) -> Ball {
    alternating_tail_from_ball(&Ball::from_rational(s, p), n)
}

/// Running sum of signed unit fractions `±1/d` kept over a common multiple of
/// the denominators seen so far.
///
/// Adding a term costs small-by-large operations only, which keeps sequential
/// sweeps over `H(1), H(2), ...` linear in the size of the denominator.
#[derive(Debug, Clone)]
pub struct UnitFractionSum {
    num: BigInt,
    den: BigInt,
}

impl Default for UnitFractionSum {
    fn default() -> Self {
        UnitFractionSum { num: BigInt::zero(), den: BigInt::one() }
    }
}

impl UnitFractionSum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from an exact value.
    pub fn from_rational(r: &Rational) -> Self {
        UnitFractionSum { num: r.numer().clone(), den: r.denom().clone() }
    }

    /// Adds `sign / d` with `d > 0`.
    pub fn push(&mut self, positive: bool, d: u64) {
        let r = (&self.den % d).to_u64().expect("remainder below d");
        let g = Integer::gcd(&r, &d);
        let scale = d / g;
        let other = &self.den / g;
        self.num = &self.num * scale + if positive { other } else { -other };
        self.den = &self.den * scale;
    }

    /// Unreduced running sums for `H(n)`, the odd sum and the alternating sum.
    pub fn harmonic(n: u64) -> Self {
        running_sum(n, |k| (true, k))
    }

    pub fn odd_harmonic(n: u64) -> Self {
        running_sum(n, |k| (true, 2 * k - 1))
    }

    pub fn alternating(n: u64) -> Self {
        running_sum(n, |k| (k % 2 == 1, k))
    }

    pub fn neg(&self) -> Self {
        UnitFractionSum { num: -&self.num, den: self.den.clone() }
    }

    /// Normalizes; costs a gcd on the full-size numerator and denominator.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.num.clone(), self.den.clone()).expect("positive denominator")
    }

    pub fn to_ball(&self, p: Precision) -> Ball {
        let num = Dyadic::new(self.num.clone(), 0);
        let den = Dyadic::new(self.den.clone(), 0);
        let (mid, err) = num.div_round(&den, p.bits());
        Ball::new(mid, err, p)
    }
}
