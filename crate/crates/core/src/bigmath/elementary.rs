//! ln, exp and sqrt on balls.
//!
//! Both series routines stop once the next term is below the working
//! precision and add an explicit bound on the discarded tail to the radius.

use num_bigint::BigInt;
use num_traits::Zero;

use super::consts::ln2;
use super::{Ball, Dyadic, Mag};
use crate::{Error, Result};

/// Inputs whose relative radius exceeds this use monotone endpoint hulls.
const WIDE_RELATIVE: i64 = -16;
/// Largest |x| accepted by `exp`.
const EXP_LIMIT_LOG2: i64 = 40;
/// Number of halvings before the exp Taylor series.
const EXP_HALVINGS: i64 = 12;

/// `atanh(t)` for `|t| <= 1/2`.
pub(super) fn atanh_series(t: &Ball) -> Ball {
    debug_assert!(t.abs_upper() <= Mag::pow2(-1));
    let wp = t.precision();
    let eps = t.abs_upper().mul_2exp(-(i64::from(wp.bits()) + 4));
    let t2 = t.sqr();
    let mut pow = t.clone();
    let mut sum = t.clone();
    let mut j = 1i64;
    loop {
        pow = &pow * &t2;
        let term = pow.div_i64(2 * j + 1);
        let bound = term.abs_upper();
        if bound <= eps {
            // tail <= |t|^(2j+1) / ((2j+1)(1 - t^2)) <= 2 * bound
            return sum.add_error(bound.mul_2exp(1));
        }
        sum = sum + term;
        j += 1;
    }
}

fn is_wide(x: &Ball) -> bool {
    !x.rad().is_zero() && x.rad() > Mag::from_dyadic_down(x.mid()).mul_2exp(WIDE_RELATIVE)
}

impl Ball {
    /// Natural logarithm; the ball must be strictly positive.
    pub fn ln(&self) -> Result<Ball> {
        if !self.is_positive() {
            return Err(Error::Domain("logarithm of an interval that is not strictly positive"));
        }
        let p = self.precision();
        if is_wide(self) {
            let lo = Ball::exact(self.lower(), p).ln()?;
            let hi = Ball::exact(self.upper(), p).ln()?;
            return Ok(lo.hull(&hi));
        }
        let wp = p.guarded(32);
        let x = self.clone().with_precision(wp);
        // mid in [2^k, 2^(k+1)), then shift y into [3/4, 3/2)
        let mut k = x.mid().top().expect("positive midpoint") - 1;
        let mut y = x.mul_2exp(-k);
        if y.mid() > &Dyadic::new(BigInt::from(3), -1) {
            y = y.mul_2exp(-1);
            k += 1;
        }
        let one = Ball::from_i64(1, wp);
        let t = (&y - &one).div(&(&y + &one))?;
        let mut r = atanh_series(&t).mul_2exp(1);
        if k != 0 {
            r = r + ln2(wp).mul_i64(k);
        }
        Ok(r.with_precision(p))
    }

    /// Exponential; |x| must stay below 2^40.
    pub fn exp(&self) -> Result<Ball> {
        if self.abs_upper() > Mag::pow2(EXP_LIMIT_LOG2) {
            return Err(Error::Range);
        }
        let p = self.precision();
        if self.rad() > Mag::pow2(-4) {
            let lo = Ball::exact(self.lower(), p).exp()?;
            let hi = Ball::exact(self.upper(), p).exp()?;
            return Ok(lo.hull(&hi));
        }
        let wp = p.guarded(48);
        let x = self.clone().with_precision(wp);
        let k = (x.to_f64() / core::f64::consts::LN_2) as i64;
        let r = if k == 0 { x } else { x - ln2(wp.guarded(64)).mul_i64(k).with_precision(wp) };
        let r = r.mul_2exp(-EXP_HALVINGS);
        let eps = Mag::pow2(-(i64::from(wp.bits()) + 4));
        let mut sum = Ball::from_i64(1, wp);
        let mut term = Ball::from_i64(1, wp);
        let mut j = 1i64;
        loop {
            term = (&term * &r).div_i64(j);
            let bound = term.abs_upper();
            sum = sum + &term;
            if bound <= eps {
                // |r| < 1/64, so the remaining tail is below |term|
                sum = sum.add_error(bound);
                break;
            }
            j += 1;
        }
        for _ in 0..EXP_HALVINGS {
            sum = sum.sqr();
        }
        Ok(sum.mul_2exp(k).with_precision(p))
    }

    /// Square root; the ball must be strictly positive or exactly zero.
    pub fn sqrt(&self) -> Result<Ball> {
        let p = self.precision();
        if self.is_exact() && self.mid().is_zero() {
            return Ok(Ball::zero(p));
        }
        if !self.is_positive() {
            return Err(Error::Domain("square root of an interval that is not strictly positive"));
        }
        let man = self.mid().mantissa();
        let exp = self.mid().exponent();
        let want = 2 * (i64::from(p.bits()) + 2) - man.bits() as i64;
        let mut shift = want.max(0);
        if (exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m: BigInt = man << shift as usize;
        let e = (exp - shift) / 2;
        let s = m.sqrt();
        let exact = (&s * &s - &m).is_zero();
        let mid = Dyadic::new(s, e);
        let err = if exact { Mag::ZERO } else { Mag::pow2(e) };
        // |sqrt(x) - sqrt(m)| <= r / sqrt(m) <= r / floor_sqrt(m)
        let prop = if self.rad().is_zero() {
            Mag::ZERO
        } else {
            self.rad().div(Mag::from_dyadic_down(&mid))
        };
        Ok(Ball::new(mid, prop.add(err), p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::{Precision, Rational};

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    /// ln 2 = 2 atanh(1/3) summed in exact rationals, with the tail bracket
    /// `0 < tail < 2 * next term`.
    fn ln2_oracle(terms: u32) -> (Rational, Rational) {
        let mut s = Rational::zero();
        let third = Rational::from_ratio(1, 3);
        for j in 0..terms {
            let k = 2 * j + 1;
            s = s + third.pow(k) * Rational::from_ratio(2, i64::from(k));
        }
        let k = 2 * terms + 1;
        let next = third.pow(k) * Rational::from_ratio(2, i64::from(k));
        let hi = &s + &(&next * &Rational::from_integer(2));
        (s, hi)
    }

    #[test]
    fn ln_of_one_is_exact_zero() {
        let z = Ball::from_i64(1, p()).ln().unwrap();
        assert!(z.contains_dyadic(&Dyadic::zero()));
        assert!(z.is_exact());
    }

    #[test]
    fn ln_two_against_series_oracle() {
        let l = Ball::from_i64(2, p()).ln().unwrap();
        let (lo, hi) = ln2_oracle(60);
        // the oracle bracket is far narrower than the ball
        assert!(l.contains_rational(&lo) && l.contains_rational(&hi));
        assert!(l.rad() < Mag::pow2(-120));
        assert!(l.within(&Rational::parse("0.6931471805599453").unwrap(), &Rational::parse("0.6931471805599454").unwrap()));
    }

    #[test]
    fn exp_of_zero_and_one() {
        assert!(Ball::zero(p()).exp().unwrap().contains_dyadic(&Dyadic::from_i64(1)));
        let e = Ball::from_i64(1, p()).exp().unwrap();
        // Taylor oracle: sum_{k<=30} 1/k! < e < that + 2/31!
        let mut s = Rational::zero();
        let mut f = Rational::one();
        for k in 0..=30i64 {
            if k > 0 {
                f = f.checked_div(&Rational::from_integer(k)).unwrap();
            }
            s = s + f.clone();
        }
        assert!(l_contains_between(&e, &s));
        assert!(e.within(&Rational::parse("2.718281828459045").unwrap(), &Rational::parse("2.718281828459046").unwrap()));
    }

    fn l_contains_between(b: &Ball, lower_oracle: &Rational) -> bool {
        // the true value exceeds the partial sum by less than 1e-33
        let hi = lower_oracle + &Rational::parse("0.000000000000000000000000000000001").unwrap();
        b.lower().to_rational() <= hi && lower_oracle <= &b.upper().to_rational()
    }

    #[test]
    fn exp_ln_round_trip() {
        let x = Ball::from_ratio(3, 2, p());
        let back = x.exp().unwrap().ln().unwrap();
        assert!(back.contains_rational(&Rational::from_ratio(3, 2)));
        let y = Ball::from_ratio(-37, 5, p());
        assert!(y.exp().unwrap().ln().unwrap().contains_rational(&Rational::from_ratio(-37, 5)));
    }

    #[test]
    fn exp_radius_follows_derivative() {
        let r = Mag::pow2(-20);
        let x = ln2(p()).add_error(r);
        let e = x.exp().unwrap();
        assert!(e.contains_dyadic(&Dyadic::from_i64(2)));
        // derivative at ln 2 is 2, so the radius is at least about 2r
        assert!(e.rad() >= r.mul_2exp(1).sub_down(r.mul_2exp(-8)));
    }

    #[test]
    fn domain_and_range_errors() {
        assert!(Ball::zero(p()).ln().is_err());
        assert!(Ball::from_i64(-2, p()).ln().is_err());
        assert_eq!(Ball::from_i64(1 << 50, p()).exp(), Err(Error::Range));
        assert!(Ball::from_i64(-1, p()).sqrt().is_err());
    }

    #[test]
    fn sqrt_values() {
        let s = Ball::from_i64(2, p()).sqrt().unwrap();
        assert!((&s * &s).contains_dyadic(&Dyadic::from_i64(2)));
        assert!(Ball::from_i64(9, p()).sqrt().unwrap().is_exact());
        let q = Ball::from_ratio(1, 4, p()).sqrt().unwrap();
        assert!(q.contains_rational(&Rational::from_ratio(1, 2)));
    }

    #[test]
    fn wide_inputs_use_hulls() {
        let x = Ball::new(Dyadic::from_i64(4), Mag::from_u64(1), p());
        let l = x.ln().unwrap();
        assert!(l.contains(&Ball::from_i64(3, p()).ln().unwrap()));
        assert!(l.contains(&Ball::from_i64(5, p()).ln().unwrap()));
        let e = Ball::new(Dyadic::from_i64(0), Mag::from_u64(1), p()).exp().unwrap();
        assert!(e.contains(&Ball::from_i64(-1, p()).exp().unwrap()));
        assert!(e.contains(&Ball::from_i64(1, p()).exp().unwrap()));
    }
}
