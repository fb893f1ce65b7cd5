//! Catalog of two-sided inequalities for harmonic numbers and related sums,
//! with certified evaluation and a mechanical verdict per instance.

mod catalog;
mod check;

use core::fmt;

use crate::bigmath::{ln2, Ball, Precision, Rational};
use crate::specfun::{euler_gamma, UnitFractionSum};
use crate::{Error, Result};

pub use check::{check_bound, check_spec, BoundCheck, Side, Verdict};

/// Quantity bracketed by a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Target {
    /// `H(n)`
    H,
    /// `H(n) - ln n`
    HMinusLn,
    /// `H(n) - ln n - gamma`
    HMinusLnGamma,
    /// `H(n) - ln(n + 1/2) - gamma`
    HMinusLnHalfGamma,
    /// `H(n) - ln n - 1/(2n) - gamma`
    HMinusLnHalfNGamma,
    /// `sum_{k=1}^n 1/(2k-1)`
    OddHarmonic,
    /// `|sum_{k>n} (-1)^(k-1)/k|`
    AlternatingTail,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::H => "H",
            Target::HMinusLn => "H_minus_ln",
            Target::HMinusLnGamma => "H_minus_ln_gamma",
            Target::HMinusLnHalfGamma => "H_minus_lnhalf_gamma",
            Target::HMinusLnHalfNGamma => "H_minus_ln_half_n_gamma",
            Target::OddHarmonic => "odd_harmonic",
            Target::AlternatingTail => "alternating_tail",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A constant that cannot be improved in its bound, with a short decimal
/// bracket `(lo, hi)` that must contain it.
#[derive(Debug)]
pub struct SharpConstant {
    pub name: &'static str,
    pub expression: &'static str,
    pub decimal: (&'static str, &'static str),
    pub eval: fn(Precision) -> Result<Ball>,
}

impl SharpConstant {
    /// Whether the evaluation at `p` lies inside the decimal bracket.
    pub fn decimal_contains(&self, p: Precision) -> Result<bool> {
        let lo = Rational::parse(self.decimal.0)?;
        let hi = Rational::parse(self.decimal.1)?;
        let v = (self.eval)(p)?;
        Ok(if lo == hi { v.contains_rational(&lo) } else { v.within(&lo, &hi) })
    }
}

pub type BoundFn = fn(u64, Precision) -> Result<Ball>;

/// One inequality `lower(n) < target(n) < upper(n)`, with sides that are
/// attained only at the listed `n`.
#[derive(Debug)]
pub struct BoundSpec {
    pub id: &'static str,
    pub target: Target,
    pub lower: BoundFn,
    pub upper: BoundFn,
    pub lower_equality: &'static [u64],
    pub upper_equality: &'static [u64],
    pub domain_min: u64,
    pub sharp_constants: &'static [SharpConstant],
    /// Plain-text form of the inequality.
    pub statement: &'static str,
    /// Discrepancies between the stated and the implemented form, if any.
    pub note: &'static str,
}

impl BoundSpec {
    pub fn lower_strict(&self, n: u64) -> bool {
        !self.lower_equality.contains(&n)
    }

    pub fn upper_strict(&self, n: u64) -> bool {
        !self.upper_equality.contains(&n)
    }

    pub fn is_equality(&self, side: Side, n: u64) -> bool {
        match side {
            Side::Lower => !self.lower_strict(n),
            Side::Upper => !self.upper_strict(n),
        }
    }

    fn check_domain(&self, n: u64) -> Result<()> {
        if n < self.domain_min {
            return Err(Error::BelowDomain { id: self.id, n, min: self.domain_min });
        }
        Ok(())
    }

    /// Enclosures of both sides at `n`.
    pub fn evaluate(&self, n: u64, p: Precision) -> Result<(Ball, Ball)> {
        self.check_domain(n)?;
        Ok(((self.lower)(n, p)?, (self.upper)(n, p)?))
    }
}

/// The twelve catalogued inequalities.
pub fn catalog() -> &'static [BoundSpec] {
    &catalog::CATALOG
}

pub fn find(id: &str) -> Result<&'static BoundSpec> {
    catalog().iter().find(|b| b.id == id).ok_or_else(|| Error::UnknownBound(id.into()))
}

/// Lower and upper enclosures of bound `id` at `n`.
pub fn evaluate_bound(id: &str, n: u64, p: Precision) -> Result<(Ball, Ball)> {
    find(id)?.evaluate(n, p)
}

/// Exact partial sums at one `n`, advanced one step at a time during sweeps.
///
/// The sums are kept unreduced over a common multiple of their denominators;
/// conversion to a ball needs one division and no gcd.
#[derive(Debug, Clone)]
pub struct Partials {
    n: u64,
    harmonic: UnitFractionSum,
    odd: UnitFractionSum,
    alternating: UnitFractionSum,
}

impl Partials {
    pub fn at(n: u64) -> Result<Partials> {
        if n == 0 {
            return Err(Error::Domain("partial sums are indexed from n = 1"));
        }
        Ok(Partials {
            n,
            harmonic: UnitFractionSum::harmonic(n),
            odd: UnitFractionSum::odd_harmonic(n),
            alternating: UnitFractionSum::alternating(n),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Moves to `n + 1`.
    pub fn advance(&mut self) {
        let n = self.n + 1;
        self.harmonic.push(true, n);
        self.odd.push(true, 2 * n - 1);
        self.alternating.push(n % 2 == 1, n);
        self.n = n;
    }

    pub fn harmonic_sum(&self) -> &UnitFractionSum {
        &self.harmonic
    }

    pub fn odd_sum(&self) -> &UnitFractionSum {
        &self.odd
    }

    pub fn alternating_sum(&self) -> &UnitFractionSum {
        &self.alternating
    }

    pub fn harmonic(&self) -> Rational {
        self.harmonic.to_rational()
    }

    pub fn odd_harmonic(&self) -> Rational {
        self.odd.to_rational()
    }

    pub fn alternating(&self) -> Rational {
        self.alternating.to_rational()
    }
}

/// A target split into its exact rational part and its transcendental part.
#[derive(Debug, Clone)]
pub struct TargetValue {
    pub n: u64,
    pub exact: UnitFractionSum,
    pub transcendental: Ball,
}

impl TargetValue {
    pub fn new(target: Target, partials: &Partials, p: Precision) -> Result<TargetValue> {
        let n = partials.n();
        let wp = p.guarded(8);
        let nb = Ball::from_bigint(n.into(), wp);
        let gamma = || euler_gamma(wp);
        let h = || partials.harmonic_sum().clone();
        let (exact, transcendental) = match target {
            Target::H => (h(), Ball::zero(wp)),
            Target::HMinusLn => (h(), -nb.ln()?),
            Target::HMinusLnGamma => (h(), -(nb.ln()? + gamma())),
            Target::HMinusLnHalfGamma => {
                let ln_half = (nb + Ball::from_ratio(1, 2, wp)).ln()?;
                (h(), -(ln_half + gamma()))
            }
            Target::HMinusLnHalfNGamma => {
                let mut e = h();
                e.push(false, 2 * n);
                (e, -(nb.ln()? + gamma()))
            }
            Target::OddHarmonic => (partials.odd_sum().clone(), Ball::zero(wp)),
            Target::AlternatingTail => {
                // the partial sum overshoots ln 2 for odd n
                if n % 2 == 1 {
                    (partials.alternating_sum().clone(), -ln2(wp))
                } else {
                    (partials.alternating_sum().neg(), ln2(wp))
                }
            }
        };
        Ok(TargetValue { n, exact, transcendental: transcendental.with_precision(p) })
    }

    pub fn exact_rational(&self) -> Rational {
        self.exact.to_rational()
    }

    pub fn to_ball(&self) -> Ball {
        let p = self.transcendental.precision();
        self.exact.to_ball(p.guarded(8)) + &self.transcendental
    }
}

/// Enclosure of `target` at `n`.
pub fn target_value(target: Target, n: u64, p: Precision) -> Result<Ball> {
    Ok(TargetValue::new(target, &Partials::at(n)?, p)?.to_ball().with_precision(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BallOrdering;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    #[test]
    fn catalog_shape() {
        let c = catalog();
        assert_eq!(c.len(), 12);
        for (i, b) in c.iter().enumerate() {
            assert!(c[i + 1..].iter().all(|o| o.id != b.id));
        }
        let main = find("main").unwrap();
        assert_eq!(main.lower_equality, &[1]);
        assert!(main.upper_equality.is_empty());
        let batir = find("batir").unwrap();
        let names: alloc::vec::Vec<_> = batir.sharp_constants.iter().map(|c| c.expression).collect();
        assert_eq!(names, ["1 + ln(sqrt(e) - 1)", "gamma"]);
        assert!(matches!(find("nope"), Err(Error::UnknownBound(_))));
    }

    #[test]
    fn sharp_constants_match_decimals() {
        let p = Precision::new(256).unwrap();
        for b in catalog() {
            for c in b.sharp_constants {
                assert!(c.decimal_contains(p).unwrap(), "{} {}", b.id, c.name);
            }
        }
    }

    #[test]
    fn target_values() {
        assert!(target_value(Target::H, 1, p()).unwrap().contains_rational(&Rational::one()));
        let t = target_value(Target::HMinusLnGamma, 1, p()).unwrap();
        assert!(t.overlaps(&(Ball::from_i64(1, p()) - euler_gamma(p()))));
        let t = target_value(Target::HMinusLnHalfNGamma, 2, p()).unwrap();
        assert!(t.within(&Rational::parse("-0.0203630").unwrap(), &Rational::parse("-0.0203628").unwrap()));
        let t = target_value(Target::AlternatingTail, 2, p()).unwrap();
        assert!(t.within(&Rational::parse("0.19314718").unwrap(), &Rational::parse("0.19314719").unwrap()));
    }

    #[test]
    fn partials_advance_matches_direct() {
        let mut s = Partials::at(1).unwrap();
        for _ in 0..40 {
            s.advance();
        }
        let d = Partials::at(41).unwrap();
        assert_eq!(s.harmonic(), d.harmonic());
        assert_eq!(s.odd_harmonic(), d.odd_harmonic());
        assert_eq!(s.alternating(), d.alternating());
    }

    #[test]
    fn evaluate_examples() {
        let (lo, _) = evaluate_bound("main", 1, p()).unwrap();
        let half_minus_gamma = Ball::from_ratio(1, 2, p()) - euler_gamma(p());
        assert!(lo.overlaps(&half_minus_gamma));
        let (lo, hi) = evaluate_bound("toth", 1, p()).unwrap();
        assert!(lo.contains_rational(&Rational::from_ratio(5, 12)));
        assert!(hi.contains_rational(&Rational::from_ratio(3, 7)));
        let (lo, _) = evaluate_bound("chen", 1, p()).unwrap();
        // with the shifted constant, 1/lower = 24 (1 + c)^2 = 1/(1 - gamma - ln(3/2))
        let delta = Ball::from_i64(1, p()) - euler_gamma(p()) - Ball::from_ratio(3, 2, p()).ln().unwrap();
        assert!(lo.overlaps(&delta));
        assert_eq!(lo.compare(&Ball::from_ratio(1, 100, p())), BallOrdering::CertainlyGreater);
        assert!(matches!(evaluate_bound("main", 0, p()), Err(Error::BelowDomain { .. })));
    }
}
