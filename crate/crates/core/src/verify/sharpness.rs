use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::symbolic::{g_lower_bound_identity, g_lower_numerator, g_lower_shifted};
use super::{certify_from, certify_positive, param, Outcome, Plan, Record, VerificationReport, CheckKind};
use crate::bigmath::{Ball, BallOrdering, Dyadic, Precision, Rational};
use crate::bounds::Verdict;
use crate::specfun::{digamma, euler_gamma, trigamma};
use crate::{Error, Result};

/// `f(n)` with the certified comparisons that the sharpness argument needs.
#[derive(Debug, Clone)]
pub struct SharpnessProfile {
    pub n: u64,
    pub f_of_n: Ball,
    /// `f(n) < f(n + 1)` certified.
    pub monotone_ok: bool,
    /// `f(n) < 6/5` certified.
    pub below_limit_ok: bool,
}

impl SharpnessProfile {
    pub fn at(n: u64, p: Precision) -> Result<SharpnessProfile> {
        let f_of_n = f_eval_n(n, p)?;
        let next = certify_positive(p, |p| Ok(f_eval_n(n + 1, p)? - f_eval_n(n, p)?))?;
        let below = certify_positive(p, |p| Ok(six_fifths(p) - f_eval_n(n, p)?))?;
        Ok(SharpnessProfile {
            n,
            f_of_n,
            monotone_ok: next.verdict == Verdict::Pass,
            below_limit_ok: below.verdict == Verdict::Pass,
        })
    }
}

fn six_fifths(p: Precision) -> Ball {
    Ball::from_ratio(6, 5, p)
}

/// Extra working bits for `f` and `g`: the denominator of `f` is about
/// `1/(12 x^2)` and cancels that many bits out of `ln x`.
fn guard_for(x: &Ball) -> u32 {
    let bits = x.upper().top().unwrap_or(0).max(0) as u32;
    32 + 3 * bits
}

/// `ln x + 1/(2x) - psi(x + 1)`.
fn f_denominator(x: &Ball) -> Result<Ball> {
    let wp = x.precision();
    let one = Ball::from_i64(1, wp);
    Ok(x.ln()? + x.mul_i64(2).recip()? - digamma(&(x + &one))?)
}

/// `f(x) = 1/(ln x + 1/(2x) - psi(x + 1)) - 12 x^2` for `x >= 1`.
///
/// The working precision is doubled while the denominator is not certainly
/// positive.
pub fn f_eval(x: &Ball, p: Precision) -> Result<Ball> {
    if x.lower() < Dyadic::from_i64(1) {
        return Err(Error::Domain("f is evaluated for arguments >= 1"));
    }
    let mut wp = p.guarded(guard_for(x));
    loop {
        let xw = x.clone().with_precision(wp);
        let d = f_denominator(&xw)?;
        if d.is_positive() {
            let f = d.recip()? - xw.sqr().mul_i64(12);
            return Ok(f.with_precision(p));
        }
        if wp.bits() >= Precision::CAP.bits() {
            return Err(Error::PrecisionCap(wp.bits()));
        }
        wp = wp.doubled();
    }
}

pub fn f_eval_n(n: u64, p: Precision) -> Result<Ball> {
    f_eval(&Ball::from_bigint(n.into(), p), p)
}

/// `g(x) = psi'(x+1) - 1/x + 1/(2x^2) - 24x (psi(x+1) - ln x - 1/(2x))^2`.
pub fn g_eval(x: &Ball, p: Precision) -> Result<Ball> {
    let wp = p.guarded(guard_for(x));
    let x = x.clone().with_precision(wp);
    let one = Ball::from_i64(1, wp);
    let x1 = &x + &one;
    let inner = -f_denominator(&x)?;
    let g = trigamma(&x1)? - x.recip()? + x.sqr().mul_i64(2).recip()? - (x.mul_i64(24) * inner.sqr());
    Ok(g.with_precision(p))
}

/// Monotone chain, limit and known digits of `f` over `[1, max_n]`.
pub fn sharpness_main(max_n: u64, p: Precision) -> Result<VerificationReport> {
    if max_n < 3 {
        return Err(Error::Parameter("max_n must be at least 3"));
    }
    Plan::new(max_n, p, &[CheckKind::Sharpness])?.run()
}

pub(super) fn chain_range(start: u64, end: u64, max_n: u64, p: Precision) -> Result<Vec<Record>> {
    let last = (end + 1).min(max_n);
    let values: Vec<Ball> = (start..=last).map(|n| f_eval_n(n, p)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for n in start..=end {
        let i = (n - start) as usize;
        if n < max_n {
            let o = certify_from(&values[i + 1] - &values[i], p, |p| Ok(f_eval_n(n + 1, p)? - f_eval_n(n, p)?))?;
            out.push(Record::new("sharpness.increasing", vec![param("n", n)], o));
        }
        let o = certify_from(six_fifths(p) - &values[i], p, |p| Ok(six_fifths(p) - f_eval_n(n, p)?))?;
        out.push(Record::new("sharpness.below_limit", vec![param("n", n)], o));
    }
    Ok(out)
}

/// Leading digits of `f(1)`, `f(2)`, `f(3)`.
pub const F_DIGITS: [(u64, &str, &str); 3] = [(1, "0.9507", "0.9508"), (2, "1.1090", "1.1091"), (3, "1.1549", "1.1550")];

/// Sample points for the decreasing gap `6/5 - f(n)`.
pub const GAP_SAMPLES: [u64; 7] = [1, 2, 3, 10, 100, 1000, 10000];

/// Thresholds `1/d` for `6/5 - f(n)` at large `n`, as `(n, d)`.
pub const LIMIT_GAPS: [(u64, i64); 2] = [(1000, 1_000_000), (10000, 100_000_000)];

fn within_outcome(v: Ball, lo: &Rational, hi: &Rational, p: Precision) -> Outcome {
    let verdict = if v.within(lo, hi) {
        Verdict::Pass
    } else if v.upper().to_rational() < *lo || v.lower().to_rational() > *hi {
        Verdict::Fail
    } else {
        Verdict::Undecided
    };
    Outcome::new(verdict, Some(v), p)
}

pub(super) fn summary(max_n: u64, p: Precision) -> Result<Vec<Record>> {
    let mut out = Vec::new();
    for (n, lo, hi) in F_DIGITS {
        if n <= max_n {
            let v = f_eval_n(n, p)?;
            let o = within_outcome(v, &Rational::parse(lo)?, &Rational::parse(hi)?, p);
            out.push(Record::new("sharpness.f_value", vec![param("n", n), param("digits", lo)], o));
        }
    }

    // f(1) against 2(7 - 12 gamma)/(2 gamma - 1)
    let f1 = f_eval_n(1, p)?;
    let g = euler_gamma(p);
    let closed = (Ball::from_i64(7, p) - g.mul_i64(12)).mul_i64(2).div(&(g.mul_i64(2) - Ball::from_i64(1, p)))?;
    let diff = &f1 - &closed;
    let verdict = if diff.contains_zero() { Verdict::Pass } else { Verdict::Fail };
    out.push(Record::new(
        "sharpness.f1_closed_form",
        vec![param("n", 1)],
        Outcome::new(verdict, Some(diff), p),
    ));

    let samples: Vec<u64> = GAP_SAMPLES.iter().copied().filter(|&n| n <= max_n).collect();
    let gap = |n: u64, p: Precision| -> Result<Ball> { Ok(six_fifths(p) - f_eval_n(n, p)?) };
    for w in samples.windows(2) {
        let (a, b) = (w[0], w[1]);
        let o = certify_positive(p, |p| Ok(gap(a, p)? - gap(b, p)?))?;
        out.push(Record::new("sharpness.gap_decreasing", vec![param("a", a), param("b", b)], o));
    }

    for (n, den) in LIMIT_GAPS {
        if n <= max_n {
            let t = Rational::from_ratio(1, den);
            let threshold = &t;
            let o = certify_positive(p, |p| Ok(Ball::from_rational(&t, p) - gap(n, p)?))?;
            out.push(Record::new("sharpness.limit_gap", vec![param("n", n), param("threshold", threshold)], o));
        }
    }
    Ok(out)
}

fn label(x: &Ball) -> String {
    if x.is_exact() {
        x.mid().to_rational().to_string()
    } else {
        x.to_decimal(20)
    }
}

/// Positivity of `g` on a grid of arguments `>= 3`: directly from polygamma
/// enclosures, and through the exact polynomial lower bound.
pub fn g_positivity(grid: &[Ball], p: Precision) -> Result<VerificationReport> {
    let three = Dyadic::from_i64(3);
    if grid.iter().any(|x| x.lower() < three) {
        return Err(Error::Domain("g is checked on [3, oo)"));
    }
    let mut report = VerificationReport::new();
    let numerator = g_lower_numerator();
    for x in grid {
        let o = certify_positive(p, |wp| g_eval(&x.clone().with_precision(wp), wp))?;
        report.push(Record::new("g_positivity.direct", vec![param("x", label(x))], o));

        let value = if x.is_exact() {
            Ball::from_rational(&numerator.eval(&x.mid().to_rational()), p)
        } else {
            let xs = x.clone().with_precision(p);
            numerator.coeffs().iter().rev().fold(Ball::zero(p), |acc, c| acc * &xs + Ball::from_rational(c, p))
        };
        let verdict = Verdict::from_ordering(value.compare(&Ball::zero(p)), BallOrdering::CertainlyGreater);
        report.push(Record::new(
            "g_positivity.polynomial",
            vec![param("x", label(x))],
            Outcome::new(verdict, Some(value), p),
        ));
    }

    let at3 = numerator.eval(&Rational::from_integer(3));
    let verdict = if at3 == Rational::from_integer(58679) { Verdict::Pass } else { Verdict::Fail };
    report.push(Record::new(
        "g_positivity.constant_term",
        vec![param("value", &at3)],
        Outcome::new(verdict, Some(Ball::from_rational(&at3, p)), p),
    ));

    let shifted = g_lower_shifted();
    let expected = [58679, 128772, 81186, 19908, 1659].map(Rational::from_integer);
    let all_positive = shifted.iter().all(|c| !c.is_negative() && !c.is_zero());
    let verdict = if shifted == expected && all_positive { Verdict::Pass } else { Verdict::Fail };
    let coeffs: Vec<String> = shifted.iter().map(|c| c.to_string()).collect();
    report.push(Record::new(
        "g_positivity.shifted_form",
        vec![param("coefficients", coeffs.join(" "))],
        Outcome::new(verdict, None, p),
    ));

    let verdict = if g_lower_bound_identity()? { Verdict::Pass } else { Verdict::Fail };
    report.push(Record::new("g_positivity.lower_bound_identity", Vec::new(), Outcome::new(verdict, None, p)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::Mag;

    fn p() -> Precision {
        Precision::new(256).unwrap()
    }

    #[test]
    fn f_values_match_digits() {
        for (n, lo, hi) in F_DIGITS {
            let f = f_eval_n(n, p()).unwrap();
            assert!(f.within(&Rational::parse(lo).unwrap(), &Rational::parse(hi).unwrap()), "n = {n}");
            assert!(f.rad() < Mag::pow2(-100));
        }
        assert!(f_eval(&Ball::from_ratio(1, 2, p()), p()).is_err());
    }

    #[test]
    fn f_against_oracle_digits() {
        // high-precision reference values
        let cases = [
            (10u64, "1.19553455286020902", "1.19553455286020903"),
            (1000, "1.19999954857192628", "1.19999954857192629"),
        ];
        for (n, lo, hi) in cases {
            let f = f_eval_n(n, Precision::new(128).unwrap()).unwrap();
            assert!(f.within(&Rational::parse(lo).unwrap(), &Rational::parse(hi).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn g_is_positive_on_grid() {
        let grid: Vec<Ball> = [3, 4, 10].iter().map(|&x| Ball::from_i64(x, p())).collect();
        let r = g_positivity(&grid, p()).unwrap();
        assert!(r.passed());
        // g(3) = 2.2771635956e-6
        let g3 = g_eval(&Ball::from_i64(3, p()), p()).unwrap();
        let (lo, hi) = (Rational::from_ratio(227716359, 100000000000000), Rational::from_ratio(227716360, 100000000000000));
        assert!(g3.within(&lo, &hi));
        assert!(g_positivity(&[Ball::from_i64(2, p())], p()).is_err());
    }

    #[test]
    fn profile() {
        let s = SharpnessProfile::at(2, Precision::new(128).unwrap()).unwrap();
        assert!(s.monotone_ok && s.below_limit_ok);
    }
}
