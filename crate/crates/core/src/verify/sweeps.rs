use alloc::vec;
use alloc::vec::Vec;

use super::{certify_from, certify_positive, param, tighter, Outcome, Record, VerificationReport};
use crate::bigmath::{ln2, Ball, Precision, Rational};
use crate::bounds::{self, Partials, Target, Verdict};
use crate::specfun::{euler_gamma, UnitFractionSum};
use crate::{Error, Result};

fn bitlen(n: u64) -> u32 {
    64 - n.leading_zeros()
}

fn nb(n: u64, p: Precision) -> Ball {
    Ball::from_bigint(n.into(), p)
}

fn epsilon_from(partials: &Partials, p: Precision) -> Result<Ball> {
    let n = partials.n();
    let wp = p.guarded(16 + 4 * bitlen(n));
    let nr = Rational::from_bigint(n.into());
    let corr = (nr.pow(2) * Rational::from_integer(12)).recip()? - nr.recip()?.checked_div(&Rational::from_integer(2))?;
    let inner = partials.harmonic_sum().to_ball(wp) + Ball::from_rational(&corr, wp)
        - nb(n, wp).ln()?
        - euler_gamma(wp);
    let n4 = Ball::from_rational(&nr.pow(4), wp);
    Ok((inner * n4).mul_i64(120).with_precision(p))
}

/// `eps_n = 120 n^4 (H(n) - ln n - gamma - 1/(2n) + 1/(12 n^2))`.
pub fn epsilon(n: u64, p: Precision) -> Result<Ball> {
    epsilon_from(&Partials::at(n)?, p)
}

fn epsilon_margin(e: &Ball) -> Ball {
    let one_minus = Ball::from_i64(1, e.precision()) - e;
    tighter(e, &one_minus).clone()
}

pub(super) fn epsilon_range(start: u64, end: u64, p: Precision) -> Result<Vec<Record>> {
    let mut parts = Partials::at(start)?;
    let mut out = Vec::new();
    loop {
        let n = parts.n();
        let first = epsilon_margin(&epsilon_from(&parts, p)?);
        let o = certify_from(first, p, |wp| Ok(epsilon_margin(&epsilon_from(&parts, wp)?)))?;
        out.push(Record::new("epsilon_window", vec![param("n", n)], o));
        if n == end {
            return Ok(out);
        }
        parts.advance();
    }
}

/// Certifies `0 < eps_n < 1` for `n` in `[1, max_n]`.
pub fn epsilon_window(max_n: u64, p: Precision) -> Result<VerificationReport> {
    if max_n < 1 {
        return Err(Error::Parameter("max_n must be at least 1"));
    }
    let mut r = VerificationReport::new();
    for (start, end) in super::ranges(1, max_n) {
        r.extend(epsilon_range(start, end, p)?);
    }
    Ok(r)
}

/// Bounds whose implied interval for `H(n)` must contain the one of `main`.
pub const REFINED_BY_MAIN: [&str; 5] = ["chen", "toth_sharp", "detemple", "franel", "young"];

/// `H(n) - gamma - target(n)` for the targets used in the refinement chain.
fn offset(target: Target, n: u64, p: Precision) -> Result<Ball> {
    Ok(match target {
        Target::HMinusLnGamma => nb(n, p).ln()?,
        Target::HMinusLnHalfGamma => (nb(n, p) + Ball::from_ratio(1, 2, p)).ln()?,
        Target::HMinusLnHalfNGamma => nb(n, p).ln()? + nb(n, p).mul_i64(2).recip()?,
        _ => return Err(Error::Parameter("bound target is not of the form H(n) - gamma - ...")),
    })
}

/// Interval for `H(n) - gamma` implied by bound `id`.
fn implied_shifted(id: &str, n: u64, p: Precision) -> Result<(Ball, Ball)> {
    let spec = bounds::find(id)?;
    let (lo, hi) = spec.evaluate(n, p)?;
    let off = offset(spec.target, n, p)?;
    Ok((lo + &off, hi + &off))
}

/// Interval for `H(n)` implied by bound `id` (targets of the form
/// `H(n) - gamma - ...` only).
pub fn implied_interval(id: &str, n: u64, p: Precision) -> Result<(Ball, Ball)> {
    let (lo, hi) = implied_shifted(id, n, p)?;
    let g = euler_gamma(p);
    Ok((lo + &g, hi + &g))
}

fn containment_margin(main: &(Ball, Ball), other: &(Ball, Ball)) -> Ball {
    let below = &main.0 - &other.0;
    let above = &other.1 - &main.1;
    tighter(&below, &above).clone()
}

pub(super) fn refinement_range(start: u64, end: u64, p: Precision) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let wp = p.guarded(16);
    for n in start.max(2)..=end {
        let main = implied_shifted("main", n, wp)?;
        for id in REFINED_BY_MAIN {
            let first = containment_margin(&main, &implied_shifted(id, n, wp)?);
            let o = certify_from(first, wp, |q| {
                Ok(containment_margin(&implied_shifted("main", n, q)?, &implied_shifted(id, n, q)?))
            })?;
            let o = Outcome { precision: if o.precision == wp { p } else { o.precision }, ..o };
            out.push(Record::new(alloc::format!("refinement.{id}"), vec![param("n", n)], o));
        }
    }
    Ok(out)
}

/// Certifies that the interval for `H(n)` implied by the main bound lies
/// strictly inside the ones implied by [`REFINED_BY_MAIN`], for `n` in `[2, max_n]`.
pub fn refinement_check(max_n: u64, p: Precision) -> Result<VerificationReport> {
    if max_n < 2 {
        return Err(Error::Parameter("max_n must be at least 2"));
    }
    let mut r = VerificationReport::new();
    for (start, end) in super::ranges(2, max_n) {
        r.extend(refinement_range(start, end, p)?);
    }
    Ok(r)
}

fn x_from(partial: &UnitFractionSum, n: u64, p: Precision) -> Result<Ball> {
    let wp = p.guarded(16 + 2 * bitlen(n));
    let s = partial.to_ball(wp);
    let l = ln2(wp);
    let tail = if n % 2 == 1 { s - l } else { l - s };
    Ok((tail.recip()? - nb(n, wp).mul_i64(2)).with_precision(p))
}

/// `x_n = 1/|sum_{k>n} (-1)^(k-1)/k| - 2n`.
pub fn alt_tail_x(n: u64, p: Precision) -> Result<Ball> {
    if n == 0 {
        return Err(Error::Domain("x_n is indexed from n = 1"));
    }
    x_from(&UnitFractionSum::alternating(n), n, p)
}

fn is_sample(n: u64, max_n: u64) -> bool {
    n == max_n || [1, 10, 100, 1000, 10000, 100000].contains(&n)
}

pub(super) fn alt_tail_range(start: u64, end: u64, max_n: u64, p: Precision) -> Result<Vec<Record>> {
    let last = (end + 1).min(max_n);
    let mut sum = UnitFractionSum::alternating(start);
    let mut partials = vec![sum.clone()];
    for n in start + 1..=last {
        sum.push(n % 2 == 1, n);
        partials.push(sum.clone());
    }
    let xs: Vec<Ball> = partials.iter().zip(start..).map(|(s, n)| x_from(s, n, p)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for n in start..=end {
        let i = (n - start) as usize;
        if n < max_n {
            let o = certify_from(&xs[i] - &xs[i + 1], p, |q| {
                Ok(x_from(&partials[i], n, q)? - x_from(&partials[i + 1], n + 1, q)?)
            })?;
            out.push(Record::new("alt_tail.decreasing", vec![param("n", n)], o));
        }
        if is_sample(n, max_n) {
            let one = Ball::from_i64(1, p);
            let o = certify_from(&xs[i] - &one, p, |q| Ok(x_from(&partials[i], n, q)? - Ball::from_i64(1, q)))?;
            out.push(Record::new("alt_tail.above_b", vec![param("n", n)], o));
        }
    }
    Ok(out)
}

/// `1/(1 - ln 2) - 2`.
pub(crate) fn alt_tail_a(p: Precision) -> Result<Ball> {
    Ok((Ball::from_i64(1, p) - ln2(p)).recip()? - Ball::from_i64(2, p))
}

/// Upper threshold for `x_n` at `n >= 1000`.
pub const ALT_TAIL_LIMIT: (i64, i64) = (1001, 1000);

pub(super) fn alt_tail_summary(max_n: u64, p: Precision) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    let diff = alt_tail_x(1, p)? - alt_tail_a(p)?;
    let verdict = if diff.contains_zero() { Verdict::Pass } else { Verdict::Fail };
    out.push(Record::new("alt_tail.x1", vec![param("n", 1)], Outcome::new(verdict, Some(diff), p)));
    if max_n >= 1000 {
        let (a, b) = ALT_TAIL_LIMIT;
        let o = certify_positive(p, |q| Ok(Ball::from_ratio(a, b, q) - alt_tail_x(max_n, q)?))?;
        out.push(Record::new("alt_tail.limit", vec![param("n", max_n), param("threshold", "1001/1000")], o));
    }
    Ok(out)
}

/// `x_1 = a`, `x_n` decreasing on `[1, max_n]`, `x_n > 1` at sampled `n`, and
/// `x_max_n < 1.001` once `max_n >= 1000`.
pub fn alt_tail_constants(max_n: u64, p: Precision) -> Result<VerificationReport> {
    if max_n < 2 {
        return Err(Error::Parameter("max_n must be at least 2"));
    }
    let mut r = VerificationReport::from_records(alt_tail_summary(max_n, p)?);
    for (start, end) in super::ranges(1, max_n) {
        r.extend(alt_tail_range(start, end, max_n, p)?);
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    #[test]
    fn epsilon_values() {
        let e1 = epsilon(1, p()).unwrap();
        assert!(e1.within(&Rational::parse("0.7341202118").unwrap(), &Rational::parse("0.7341202119").unwrap()));
        let e10 = epsilon(10, p()).unwrap();
        assert!(e10.within(&Rational::parse("0.9952872105").unwrap(), &Rational::parse("0.9952872106").unwrap()));
        assert!(epsilon_window(50, p()).unwrap().passed());
    }

    #[test]
    fn refinement_small() {
        let r = refinement_check(40, p()).unwrap();
        assert!(r.passed());
        assert_eq!(r.records().len(), 39 * 5);
        let (lo, hi) = implied_interval("main", 5, p()).unwrap();
        let h5 = Ball::from_ratio(137, 60, p());
        assert!(lo.upper() < h5.lower() && h5.upper() < hi.lower());
    }

    #[test]
    fn alt_tail_values() {
        let x1 = alt_tail_x(1, p()).unwrap();
        assert!(x1.within(&Rational::parse("1.2588913532").unwrap(), &Rational::parse("1.2588913533").unwrap()));
        let x2 = alt_tail_x(2, p()).unwrap();
        assert!(x2.within(&Rational::parse("1.1773988991").unwrap(), &Rational::parse("1.1773988992").unwrap()));
        let r = alt_tail_constants(60, p()).unwrap();
        assert!(r.passed());
    }
}
