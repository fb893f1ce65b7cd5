use core::fmt;

use super::{find, BoundSpec, Partials, TargetValue};
use crate::bigmath::{Ball, BallOrdering, Mag, Precision};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Lower,
    Upper,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Lower => "lower",
            Side::Upper => "upper",
        }
    }
}

/// Outcome of one certified comparison or inequality instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    /// A declared equality case, confirmed to the equality tolerance.
    Equality(Side),
    Fail,
    /// Still overlapping at the precision cap.
    Undecided,
}

impl Verdict {
    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::Pass | Verdict::Equality(_))
    }

    /// `Pass` when `ok` is certain, `Fail` when its negation is certain.
    pub fn from_ordering(ord: BallOrdering, want: BallOrdering) -> Verdict {
        match ord {
            BallOrdering::Overlapping => Verdict::Undecided,
            o if o == want => Verdict::Pass,
            _ => Verdict::Fail,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => f.write_str("pass"),
            Verdict::Equality(s) => write!(f, "equality({})", s.as_str()),
            Verdict::Fail => f.write_str("fail"),
            Verdict::Undecided => f.write_str("undecided"),
        }
    }
}

/// Radius below which a persistent overlap at a declared equality counts as
/// equality; about `1e-30`.
pub const EQUALITY_RADIUS_LOG2: i64 = -100;

/// Full record of one checked instance.
#[derive(Debug, Clone)]
pub struct BoundCheck {
    pub id: &'static str,
    pub n: u64,
    pub lower: Ball,
    pub target: Ball,
    pub upper: Ball,
    /// `target - lower`
    pub lower_margin: Ball,
    /// `upper - target`
    pub upper_margin: Ball,
    pub verdict: Verdict,
    pub precision: Precision,
}

enum SideState {
    Holds,
    Violated,
    Equal,
    Open,
}

fn side_state(spec: &BoundSpec, side: Side, n: u64, margin: &Ball) -> SideState {
    match margin.compare(&Ball::zero(margin.precision())) {
        BallOrdering::CertainlyGreater => SideState::Holds,
        BallOrdering::CertainlyLess => SideState::Violated,
        BallOrdering::Overlapping => {
            if spec.is_equality(side, n) && margin.rad() < Mag::pow2(EQUALITY_RADIUS_LOG2) {
                SideState::Equal
            } else {
                SideState::Open
            }
        }
    }
}

/// Checks `spec` at `partials.n()`, doubling the precision from `p` while a
/// side stays undecided, up to [`Precision::CAP`].
pub fn check_spec(spec: &'static BoundSpec, partials: &Partials, p: Precision) -> Result<BoundCheck> {
    let n = partials.n();
    let mut wp = p;
    loop {
        let (lower, upper) = spec.evaluate(n, wp)?;
        let target = TargetValue::new(spec.target, partials, wp)?.to_ball();
        let lower_margin = &target - &lower;
        let upper_margin = &upper - &target;
        let lo = side_state(spec, Side::Lower, n, &lower_margin);
        let hi = side_state(spec, Side::Upper, n, &upper_margin);
        let verdict = match (&lo, &hi) {
            (SideState::Violated, _) | (_, SideState::Violated) => Some(Verdict::Fail),
            (SideState::Open, _) | (_, SideState::Open) => None,
            (SideState::Equal, _) => Some(Verdict::Equality(Side::Lower)),
            (_, SideState::Equal) => Some(Verdict::Equality(Side::Upper)),
            _ => Some(Verdict::Pass),
        };
        let at_cap = wp.bits() >= Precision::CAP.bits();
        if verdict.is_some() || at_cap {
            return Ok(BoundCheck {
                id: spec.id,
                n,
                lower,
                target,
                upper,
                lower_margin,
                upper_margin,
                verdict: verdict.unwrap_or(Verdict::Undecided),
                precision: wp,
            });
        }
        wp = wp.doubled();
    }
}

/// Verdict of bound `id` at `n`, starting from precision `p`.
pub fn check_bound(id: &str, n: u64, p: Precision) -> Result<Verdict> {
    let spec = find(id)?;
    spec.check_domain(n)?;
    Ok(check_spec(spec, &Partials::at(n)?, p)?.verdict)
}
