//! Numerical reproduction of the sharpness argument for the main bound, plus
//! auxiliary certifications, collected into a [`VerificationReport`].
//!
//! Work is split into [`WorkItem`]s whose boundaries depend only on `max_n`,
//! so callers may run the items on any number of threads and concatenate the
//! results in plan order to get the same report.

mod cm;
mod sharpness;
pub mod symbolic;
mod sweeps;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bigmath::{Ball, BallOrdering, Precision};
use crate::bounds::{self, BoundCheck, Partials, Side, Verdict};
use crate::specfun::StirlingKind;
use crate::{Error, Result};

pub use cm::cm_spotcheck;
pub use sharpness::{f_eval, f_eval_n, g_eval, g_positivity, sharpness_main, SharpnessProfile};
pub use sweeps::{
    alt_tail_constants, alt_tail_x, epsilon, epsilon_window, implied_interval, refinement_check, REFINED_BY_MAIN,
};

/// One certified check.
#[derive(Debug, Clone)]
pub struct Record {
    pub check: String,
    pub params: Vec<(String, String)>,
    pub verdict: Verdict,
    /// Quantity whose sign decided the verdict, when there is one.
    pub margin: Option<Ball>,
    pub precision_bits: u32,
}

impl Record {
    pub fn new(check: impl Into<String>, params: Vec<(String, String)>, outcome: Outcome) -> Record {
        Record {
            check: check.into(),
            params,
            verdict: outcome.verdict,
            margin: outcome.margin,
            precision_bits: outcome.precision.bits(),
        }
    }

    fn from_bound(c: &BoundCheck) -> Record {
        let margin = match c.verdict {
            Verdict::Equality(Side::Lower) => c.lower_margin.clone(),
            Verdict::Equality(Side::Upper) => c.upper_margin.clone(),
            _ => tighter(&c.lower_margin, &c.upper_margin).clone(),
        };
        Record {
            check: format!("bounds.{}", c.id),
            params: vec![param("n", c.n)],
            verdict: c.verdict,
            margin: Some(margin),
            precision_bits: c.precision.bits(),
        }
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

pub(crate) fn param(key: &str, value: impl fmt::Display) -> (String, String) {
    (key.to_string(), value.to_string())
}

/// The margin with the smaller midpoint.
pub(crate) fn tighter<'a>(a: &'a Ball, b: &'a Ball) -> &'a Ball {
    if a.cmp_mid(b).is_le() {
        a
    } else {
        b
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub equality: usize,
    pub fail: usize,
    pub undecided: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.pass + self.equality + self.fail + self.undecided
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    records: Vec<Record>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_records(records: Vec<Record>) -> Self {
        VerificationReport { records }
    }

    pub fn push(&mut self, r: Record) {
        self.records.push(r);
    }

    pub fn extend(&mut self, other: impl IntoIterator<Item = Record>) {
        self.records.extend(other);
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn into_records(self) -> Vec<Record> {
        self.records
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Equality(_) => s.equality += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Undecided => s.undecided += 1,
            }
        }
        s
    }

    /// No failures and no undecided records.
    pub fn passed(&self) -> bool {
        let s = self.summary();
        s.fail == 0 && s.undecided == 0
    }

    pub fn with_check<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.check.starts_with(prefix))
    }
}

/// Verdict, deciding quantity and precision of one certification.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub verdict: Verdict,
    pub margin: Option<Ball>,
    pub precision: Precision,
}

impl Outcome {
    pub fn new(verdict: Verdict, margin: Option<Ball>, precision: Precision) -> Outcome {
        Outcome { verdict, margin, precision }
    }

    fn of_sign(margin: Ball, precision: Precision) -> Outcome {
        let v = Verdict::from_ordering(margin.compare(&Ball::zero(precision)), BallOrdering::CertainlyGreater);
        Outcome::new(v, Some(margin), precision)
    }
}

/// Certifies `margin(p) > 0`, doubling the precision while the sign is open
/// or an intermediate division straddles zero.
pub fn certify_positive(p: Precision, margin: impl Fn(Precision) -> Result<Ball>) -> Result<Outcome> {
    let mut wp = p;
    loop {
        let at_cap = wp.bits() >= Precision::CAP.bits();
        match margin(wp) {
            Ok(m) => {
                let o = Outcome::of_sign(m, wp);
                if o.verdict != Verdict::Undecided || at_cap {
                    return Ok(o);
                }
            }
            Err(Error::Enclosure) if at_cap => return Ok(Outcome::new(Verdict::Undecided, None, wp)),
            Err(Error::Enclosure) => {}
            Err(e) => return Err(e),
        }
        wp = wp.doubled();
    }
}

/// Like [`certify_positive`], trying an already computed margin first.
pub(crate) fn certify_from(first: Ball, p: Precision, margin: impl Fn(Precision) -> Result<Ball>) -> Result<Outcome> {
    let o = Outcome::of_sign(first, p);
    if o.verdict != Verdict::Undecided {
        return Ok(o);
    }
    certify_positive(p.doubled(), margin)
}

/// Groups of checks selectable on their own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Bounds,
    Sharpness,
    GPositivity,
    Epsilon,
    Refinement,
    AltTail,
    Cm,
    Symbolic,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Bounds,
        CheckKind::Sharpness,
        CheckKind::GPositivity,
        CheckKind::Epsilon,
        CheckKind::Refinement,
        CheckKind::AltTail,
        CheckKind::Cm,
        CheckKind::Symbolic,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Bounds => "bounds",
            CheckKind::Sharpness => "sharpness",
            CheckKind::GPositivity => "g_positivity",
            CheckKind::Epsilon => "epsilon",
            CheckKind::Refinement => "refinement",
            CheckKind::AltTail => "alt_tail",
            CheckKind::Cm => "cm",
            CheckKind::Symbolic => "symbolic",
        }
    }
}

impl FromStr for CheckKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or(Error::Parameter("unknown check group"))
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Width of the `n` ranges that sweep items cover.
pub const CHUNK: u64 = 500;

/// Default grid for the direct positivity check of `g`.
pub const G_GRID: [i64; 6] = [3, 4, 5, 10, 50, 100];

/// Independent unit of verification work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WorkItem {
    /// Catalog bound `id` for `n` in `[start, end]`.
    Bound { id: &'static str, start: u64, end: u64 },
    /// Chain and limit checks on `f(n)` for `n` in `[start, end]`.
    SharpnessRange { start: u64, end: u64 },
    /// Leading digits of `f(1..3)`, closed form at 1 and sampled gaps.
    SharpnessSummary,
    GPositivity,
    Epsilon { start: u64, end: u64 },
    Refinement { start: u64, end: u64 },
    AltTailRange { start: u64, end: u64 },
    AltTailSummary,
    Cm { kind: StirlingKind, order: u32 },
    Symbolic,
}

/// Ordered list of work items for one configuration.
#[derive(Debug, Clone)]
pub struct Plan {
    pub max_n: u64,
    pub precision: Precision,
    pub items: Vec<WorkItem>,
}

fn ranges(first: u64, last: u64) -> impl Iterator<Item = (u64, u64)> {
    let mut start = first;
    core::iter::from_fn(move || {
        if start > last {
            return None;
        }
        let end = (start + CHUNK - 1).min(last);
        let r = (start, end);
        start = end + 1;
        Some(r)
    })
}

impl Plan {
    pub fn new(max_n: u64, p: Precision, checks: &[CheckKind]) -> Result<Plan> {
        if max_n < 2 {
            return Err(Error::Parameter("max_n must be at least 2"));
        }
        let mut items = Vec::new();
        for kind in CheckKind::ALL.into_iter().filter(|k| checks.contains(k)) {
            match kind {
                CheckKind::Bounds => {
                    for b in bounds::catalog() {
                        for (start, end) in ranges(b.domain_min, max_n) {
                            items.push(WorkItem::Bound { id: b.id, start, end });
                        }
                    }
                }
                CheckKind::Sharpness => {
                    items.push(WorkItem::SharpnessSummary);
                    items.extend(ranges(1, max_n).map(|(start, end)| WorkItem::SharpnessRange { start, end }));
                }
                CheckKind::GPositivity => items.push(WorkItem::GPositivity),
                CheckKind::Epsilon => {
                    items.extend(ranges(1, max_n).map(|(start, end)| WorkItem::Epsilon { start, end }));
                }
                CheckKind::Refinement => {
                    items.extend(ranges(2, max_n).map(|(start, end)| WorkItem::Refinement { start, end }));
                }
                CheckKind::AltTail => {
                    items.push(WorkItem::AltTailSummary);
                    items.extend(ranges(1, max_n).map(|(start, end)| WorkItem::AltTailRange { start, end }));
                }
                CheckKind::Cm => {
                    items.push(WorkItem::Cm { kind: StirlingKind::F, order: 2 });
                    items.push(WorkItem::Cm { kind: StirlingKind::G, order: 1 });
                }
                CheckKind::Symbolic => items.push(WorkItem::Symbolic),
            }
        }
        Ok(Plan { max_n, precision: p, items })
    }

    /// Records of one item. Failures of a check are data; an `Err` means the
    /// item could not be evaluated at all.
    pub fn run_item(&self, item: &WorkItem) -> Result<Vec<Record>> {
        let p = self.precision;
        let max_n = self.max_n;
        match *item {
            WorkItem::Bound { id, start, end } => bound_range(id, start, end, p),
            WorkItem::SharpnessRange { start, end } => sharpness::chain_range(start, end, max_n, p),
            WorkItem::SharpnessSummary => sharpness::summary(max_n, p),
            WorkItem::GPositivity => {
                let grid: Vec<Ball> = G_GRID.iter().map(|&x| Ball::from_i64(x, p)).collect();
                Ok(g_positivity(&grid, p)?.into_records())
            }
            WorkItem::Epsilon { start, end } => sweeps::epsilon_range(start, end, p),
            WorkItem::Refinement { start, end } => sweeps::refinement_range(start, end, p),
            WorkItem::AltTailRange { start, end } => sweeps::alt_tail_range(start, end, max_n, p),
            WorkItem::AltTailSummary => sweeps::alt_tail_summary(max_n, p),
            WorkItem::Cm { kind, order } => {
                let grid: Vec<_> = (1..=20).map(crate::bigmath::Rational::from_integer).collect();
                Ok(cm_spotcheck(kind, order, &grid, 4, p)?.into_records())
            }
            WorkItem::Symbolic => symbolic_records(p),
        }
    }

    /// Runs every item in order on the current thread.
    pub fn run(&self) -> Result<VerificationReport> {
        let mut report = VerificationReport::new();
        for item in &self.items {
            report.extend(self.run_item(item)?);
        }
        Ok(report)
    }
}

fn bound_range(id: &str, start: u64, end: u64, p: Precision) -> Result<Vec<Record>> {
    let spec = bounds::find(id)?;
    let mut parts = Partials::at(start)?;
    let mut out = Vec::with_capacity((end - start + 1) as usize);
    loop {
        out.push(Record::from_bound(&bounds::check_spec(spec, &parts, p)?));
        if parts.n() == end {
            return Ok(out);
        }
        parts.advance();
    }
}

fn symbolic_records(p: Precision) -> Result<Vec<Record>> {
    let verdict = |ok: bool| if ok { Verdict::Pass } else { Verdict::Fail };
    Ok(vec![
        Record::new(
            "symbolic.main_equality",
            vec![param("identity", "-1/(12+2(7-12g)/(2g-1)) = (1-2g)/2")],
            Outcome::new(verdict(symbolic::main_equality_identity()?), None, p),
        ),
        Record::new(
            "symbolic.toth_sharp_equality",
            vec![param("identity", "1/(2+1/(1-g)-2) = 1-g")],
            Outcome::new(verdict(symbolic::shift_equality_identity()?), None, p),
        ),
    ])
}

/// Runs the catalog sweep over `[1, max_n]` and every auxiliary check.
pub fn verify_all(max_n: u64, p: Precision) -> Result<VerificationReport> {
    if max_n < 3 {
        return Err(Error::Parameter("max_n must be at least 3"));
    }
    Plan::new(max_n, p, &CheckKind::ALL)?.run()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plan_is_independent_of_execution() {
        let p = Precision::new(128).unwrap();
        let plan = Plan::new(1200, p, &CheckKind::ALL).unwrap();
        let bounds_items = plan.items.iter().filter(|i| matches!(i, WorkItem::Bound { .. })).count();
        assert_eq!(bounds_items, 12 * 3);
        assert!(Plan::new(1, p, &CheckKind::ALL).is_err());
        assert!(verify_all(2, p).is_err());
        assert_eq!("g_positivity".parse::<CheckKind>().unwrap(), CheckKind::GPositivity);
        assert!("nope".parse::<CheckKind>().is_err());
    }

    #[test]
    fn small_verify_all_passes() {
        let p = Precision::new(128).unwrap();
        let r = verify_all(20, p).unwrap();
        let s = r.summary();
        assert_eq!(s.fail, 0, "{:?}", r.records().iter().find(|r| r.verdict == Verdict::Fail));
        assert_eq!(s.undecided, 0);
        assert_eq!(s.total(), r.records().len());
        assert_eq!(r.with_check("bounds.").count(), 12 * 20);
    }

    #[test]
    fn certify_retries() {
        let p = Precision::new(64).unwrap();
        // exact zero never resolves
        let o = certify_positive(p, |p| Ok(Ball::zero(p))).unwrap();
        assert_eq!(o.verdict, Verdict::Undecided);
        assert_eq!(o.precision, Precision::CAP);
        // a tiny positive margin hidden in rounding at low precision
        let o = certify_positive(p, |p| {
            let third = Ball::from_ratio(1, 3, p);
            Ok(third.mul_i64(3) - Ball::from_i64(1, p) + Ball::exact(crate::bigmath::Dyadic::new(1.into(), -150), p))
        })
        .unwrap();
        assert_eq!(o.verdict, Verdict::Pass);
        assert!(o.precision.bits() > 64);
    }
}
