use super::{bernoulli_number, is_wide, shift_target};
use crate::bigmath::{Ball, Mag, Precision};
use crate::{Error, Result};

/// Number of recurrence steps that lift `x` to the series threshold.
pub(super) fn shift_count(x: &Ball, wp: Precision) -> i64 {
    let target = shift_target(wp.bits());
    let xm = x.to_f64();
    if xm >= target as f64 {
        0
    } else {
        let d = target as f64 - xm;
        let k = d as i64;
        if (k as f64) < d {
            k + 1
        } else {
            k
        }
    }
}

fn check_domain(x: &Ball) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::Domain("argument must be strictly positive"))
    }
}

/// Digamma `psi(x)` on a strictly positive ball.
///
/// Lifts the argument with `psi(x) = psi(x + N) - sum_{k<N} 1/(x + k)` and
/// sums `ln y - 1/(2y) - sum B_2k / (2k y^2k)` at `y = x + N`.
pub fn digamma(x: &Ball) -> Result<Ball> {
    check_domain(x)?;
    let p = x.precision();
    if is_wide(x) {
        // psi is increasing
        let lo = digamma(&Ball::exact(x.lower(), p))?;
        let hi = digamma(&Ball::exact(x.upper(), p))?;
        return Ok(lo.hull(&hi));
    }
    let wp = p.guarded(32);
    let x = x.clone().with_precision(wp);
    let shift = shift_count(&x, wp);
    let mut lift = Ball::zero(wp);
    for k in 0..shift {
        lift = lift + (&x + Ball::from_i64(k, wp)).recip()?;
    }
    let y = &x + Ball::from_i64(shift, wp);
    let inv = y.recip()?;
    let inv2 = inv.sqr();
    let mut acc = y.ln()? - inv.mul_2exp(-1);
    let eps = Mag::pow2(-(i64::from(wp.bits()) + 4));
    let mut pow = inv2.clone();
    let mut prev: Option<Mag> = None;
    let mut k = 1usize;
    loop {
        let coeff = Ball::from_rational(&bernoulli_number(2 * k), wp).div_i64(2 * k as i64);
        let term = &coeff * &pow;
        let bound = term.abs_upper();
        if bound <= eps || prev.is_some_and(|b| bound >= b) {
            acc = acc.add_error(bound);
            break;
        }
        acc = acc - term;
        pow = &pow * &inv2;
        prev = Some(bound);
        k += 1;
    }
    Ok((acc - lift).with_precision(p))
}

/// Trigamma `psi'(x)` on a strictly positive ball.
///
/// Lifts with `psi'(x) = psi'(x + N) + sum_{k<N} 1/(x + k)^2` and sums
/// `1/y + 1/(2y^2) + sum B_2k / y^(2k+1)`.
pub fn trigamma(x: &Ball) -> Result<Ball> {
    check_domain(x)?;
    let p = x.precision();
    if is_wide(x) {
        // psi' is decreasing
        let lo = trigamma(&Ball::exact(x.upper(), p))?;
        let hi = trigamma(&Ball::exact(x.lower(), p))?;
        return Ok(lo.hull(&hi));
    }
    let wp = p.guarded(32);
    let x = x.clone().with_precision(wp);
    let shift = shift_count(&x, wp);
    let mut lift = Ball::zero(wp);
    for k in 0..shift {
        lift = lift + (&x + Ball::from_i64(k, wp)).recip()?.sqr();
    }
    let y = &x + Ball::from_i64(shift, wp);
    let inv = y.recip()?;
    let inv2 = inv.sqr();
    let mut acc = &inv + inv2.mul_2exp(-1);
    // relative tolerance: the leading term is 1/y
    let eps = inv.abs_upper().mul_2exp(-(i64::from(wp.bits()) + 4));
    let mut pow = &inv2 * &inv;
    let mut prev: Option<Mag> = None;
    let mut k = 1usize;
    loop {
        let coeff = Ball::from_rational(&bernoulli_number(2 * k), wp);
        let term = &coeff * &pow;
        let bound = term.abs_upper();
        if bound <= eps || prev.is_some_and(|b| bound >= b) {
            acc = acc.add_error(bound);
            break;
        }
        acc = acc + term;
        pow = &pow * &inv2;
        prev = Some(bound);
        k += 1;
    }
    Ok((acc + lift).with_precision(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::Rational;
    use crate::specfun::euler_gamma;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    #[test]
    fn digamma_at_two_is_one_minus_gamma() {
        let d = digamma(&Ball::from_i64(2, p())).unwrap();
        let oracle = Ball::from_i64(1, p()) - euler_gamma(p());
        assert!(d.overlaps(&oracle));
        assert!(d.within(&Rational::parse("0.42278433").unwrap(), &Rational::parse("0.42278434").unwrap()));
    }

    #[test]
    fn digamma_recurrence() {
        let a = digamma(&Ball::from_i64(6, p())).unwrap();
        let b = digamma(&Ball::from_i64(5, p())).unwrap();
        assert!((a - b).contains_rational(&Rational::from_ratio(1, 5)));
    }

    #[test]
    fn trigamma_values() {
        let a = trigamma(&Ball::from_i64(5, p())).unwrap();
        let b = trigamma(&Ball::from_i64(4, p())).unwrap();
        assert!((a - b).contains_rational(&Rational::from_ratio(-1, 16)));
        // zeta(2) - S_N lies in (1/N - 1/(2N^2), 1/N - 1/(2N^2) + 1/(6N^3))
        let t1 = trigamma(&Ball::from_i64(1, p())).unwrap();
        let n = 2000i64;
        let s = (1..=n).fold(Ball::zero(p()), |acc, k| acc + Ball::from_ratio(1, k * k, p()));
        let lo = s + Ball::from_ratio(1, n, p()) - Ball::from_ratio(1, 2 * n * n, p());
        let hi = &lo + Ball::from_ratio(1, 6 * n * n * n, p());
        assert!(lo.lower() < t1.lower() && t1.upper() < hi.upper());
        assert!(t1.within(&Rational::parse("1.6449340668").unwrap(), &Rational::parse("1.6449340669").unwrap()));
    }

    #[test]
    fn nonpositive_is_a_domain_error() {
        assert!(digamma(&Ball::zero(p())).is_err());
        assert!(trigamma(&Ball::from_i64(-3, p())).is_err());
    }

    #[test]
    fn interval_input_encloses_endpoints() {
        let x = Ball::from_i64(3, p()).add_error(Mag::pow2(-2));
        let d = digamma(&x).unwrap();
        for v in [Ball::from_ratio(11, 4, p()), Ball::from_ratio(13, 4, p())] {
            assert!(d.contains(&digamma(&v).unwrap()));
            assert!(trigamma(&x).unwrap().contains(&trigamma(&v).unwrap()));
        }
    }

    fn poly(coeffs: &[i64], x: i64, den: i64, den_pow: u32) -> Rational {
        let xr = Rational::from_integer(x);
        let num = coeffs.iter().fold(Rational::zero(), |acc, &c| acc * xr.clone() + Rational::from_integer(c));
        num.checked_div(&(Rational::from_integer(den) * xr.pow(den_pow))).unwrap()
    }

    #[test]
    fn digamma_inside_polynomial_envelope() {
        let p = Precision::new(256).unwrap();
        for x in [8i64, 10, 20, 50, 100] {
            let d = digamma(&Ball::from_i64(x, p)).unwrap() - Ball::from_i64(x, p).ln().unwrap();
            let lo = -poly(&[1260, 210, 0, -21, 0, 10], x, 2520, 6);
            let hi = -poly(&[2520, 420, 0, -42, 0, 20, 0, -21], x, 5040, 8);
            assert!(d.compare(&Ball::from_rational(&lo, p)) == crate::BallOrdering::CertainlyGreater);
            assert!(d.compare(&Ball::from_rational(&hi, p)) == crate::BallOrdering::CertainlyLess);
        }
    }

    #[test]
    fn trigamma_inside_polynomial_envelope() {
        for x in [3i64, 8, 10, 50] {
            let t = trigamma(&Ball::from_i64(x, p())).unwrap();
            let lo = poly(&[210, 105, 35, 0, -7, 0, 5, 0, -7], x, 210, 9);
            let hi = poly(&[210, 105, 35, 0, -7, 0, 5], x, 210, 7);
            assert!(t.compare(&Ball::from_rational(&lo, p())) == crate::BallOrdering::CertainlyGreater);
            assert!(t.compare(&Ball::from_rational(&hi, p())) == crate::BallOrdering::CertainlyLess);
        }
    }
}
