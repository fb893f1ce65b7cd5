use super::polygamma::shift_count;
use super::{bernoulli_number, is_wide};
use crate::bigmath::{pi, Ball, Dyadic, Mag, Precision, Rational};
use crate::{Error, Result};

/// Which Stirling remainder: `F_n` subtracts `2n` correction terms from
/// `ln Gamma`, `G_n` is the negated remainder after `2n + 1` terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StirlingKind {
    F,
    G,
}

/// Stirling coefficient `B_2j / (2j (2j - 1))`.
fn stirling_coeff(j: usize) -> Rational {
    let b = bernoulli_number(2 * j);
    let d = (2 * j * (2 * j - 1)) as i64;
    b.checked_div(&Rational::from_integer(d)).expect("nonzero")
}

/// `(y - 1/2) ln y - y + ln(2 pi)/2`.
fn stirling_head(y: &Ball) -> Result<Ball> {
    let wp = y.precision();
    let half = Ball::from_ratio(1, 2, wp);
    let ln2pi = pi(wp).mul_2exp(1).ln()?;
    Ok((y - &half) * y.ln()? - y + ln2pi.mul_2exp(-1))
}

/// `sum_{j=1}^{terms} B_2j / (2j (2j-1) y^(2j-1))`.
fn stirling_sum(y: &Ball, terms: usize) -> Result<Ball> {
    let wp = y.precision();
    let inv = y.recip()?;
    let inv2 = inv.sqr();
    let mut pow = inv;
    let mut acc = Ball::zero(wp);
    for j in 1..=terms {
        acc = acc + Ball::from_rational(&stirling_coeff(j), wp) * &pow;
        pow = &pow * &inv2;
    }
    Ok(acc)
}

/// `ln Gamma(x)` on a strictly positive ball.
///
/// The partial sums of the Stirling series bracket `ln Gamma` alternately, so
/// the first omitted term bounds the truncation error.
pub fn lgamma(x: &Ball) -> Result<Ball> {
    if !x.is_positive() {
        return Err(Error::Domain("argument must be strictly positive"));
    }
    let p = x.precision();
    if is_wide(x) {
        let two = Dyadic::from_i64(2);
        let one = Dyadic::from_i64(1);
        // monotone on each side of the minimum near 1.46
        if x.lower() >= two || x.upper() <= one {
            let a = lgamma(&Ball::exact(x.lower(), p))?;
            let b = lgamma(&Ball::exact(x.upper(), p))?;
            return Ok(a.hull(&b));
        }
    }
    let wp = p.guarded(32);
    let x = x.clone().with_precision(wp);
    let shift = shift_count(&x, wp);
    let mut prod = Ball::from_i64(1, wp);
    for k in 0..shift {
        prod = prod * (&x + Ball::from_i64(k, wp));
    }
    let y = &x + Ball::from_i64(shift, wp);
    let mut acc = stirling_head(&y)?;
    let inv = y.recip()?;
    let inv2 = inv.sqr();
    let eps = Mag::pow2(-(i64::from(wp.bits()) + 4));
    let mut pow = inv;
    let mut prev: Option<Mag> = None;
    let mut j = 1usize;
    loop {
        let term = Ball::from_rational(&stirling_coeff(j), wp) * &pow;
        let bound = term.abs_upper();
        if bound <= eps || prev.is_some_and(|b| bound >= b) {
            acc = acc.add_error(bound);
            break;
        }
        acc = acc + term;
        pow = &pow * &inv2;
        prev = Some(bound);
        j += 1;
    }
    if shift > 0 {
        acc = acc - prod.ln()?;
    }
    Ok(acc.with_precision(p))
}

/// Stirling remainder `F_order(x)` or `G_order(x)`, evaluated with 64 extra
/// bits to absorb the cancellation against `ln Gamma`.
pub fn stirling_tail(kind: StirlingKind, order: u32, x: &Ball) -> Result<Ball> {
    if order > 10 {
        return Err(Error::Parameter("Stirling remainder order must be at most 10"));
    }
    if !x.is_positive() {
        return Err(Error::Domain("argument must be strictly positive"));
    }
    let p = x.precision();
    let wp: Precision = p.guarded(64);
    let xw = x.clone().with_precision(wp);
    let lg = lgamma(&xw)?;
    let head = stirling_head(&xw)?;
    let order = order as usize;
    let out = match kind {
        StirlingKind::F => lg - head - stirling_sum(&xw, 2 * order)?,
        StirlingKind::G => head - lg + stirling_sum(&xw, 2 * order + 1)?,
    };
    Ok(out.with_precision(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    #[test]
    fn factorial_values() {
        assert!(lgamma(&Ball::from_i64(1, p())).unwrap().contains_rational(&Rational::zero()));
        assert!(lgamma(&Ball::from_i64(2, p())).unwrap().contains_rational(&Rational::zero()));
        let l5 = lgamma(&Ball::from_i64(5, p())).unwrap();
        let ln24 = Ball::from_i64(24, p()).ln().unwrap();
        assert!(l5.overlaps(&ln24));
        assert!(l5.rad() < Mag::pow2(-110));
    }

    #[test]
    fn recurrence_at_half_integers() {
        let a = lgamma(&Ball::from_ratio(15, 2, p())).unwrap();
        let b = lgamma(&Ball::from_ratio(13, 2, p())).unwrap();
        let l = Ball::from_ratio(13, 2, p()).ln().unwrap();
        assert!((a - b).overlaps(&l));
    }

    #[test]
    fn half_gives_log_sqrt_pi() {
        let g = lgamma(&Ball::from_ratio(1, 2, p())).unwrap();
        let oracle = pi(p()).ln().unwrap().mul_2exp(-1);
        assert!(g.overlaps(&oracle));
    }

    #[test]
    fn tails_are_positive_and_decreasing() {
        let f1 = stirling_tail(StirlingKind::F, 2, &Ball::from_i64(1, p())).unwrap();
        assert!(f1.is_positive());
        let g2 = stirling_tail(StirlingKind::G, 1, &Ball::from_i64(2, p())).unwrap();
        assert!(g2.is_positive());
        let f5 = stirling_tail(StirlingKind::F, 2, &Ball::from_i64(5, p())).unwrap();
        let f10 = stirling_tail(StirlingKind::F, 2, &Ball::from_i64(10, p())).unwrap();
        assert_eq!(f10.compare(&f5), crate::BallOrdering::CertainlyLess);
        assert!(stirling_tail(StirlingKind::F, 11, &Ball::from_i64(1, p())).is_err());
    }
}
