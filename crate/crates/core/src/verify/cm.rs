use alloc::vec;
use alloc::vec::Vec;

use super::{certify_positive, param, tighter, Record, VerificationReport};
use crate::bigmath::{Ball, Precision, Rational};
use crate::specfun::{stirling_tail, StirlingKind};
use crate::{Error, Result};

pub const MAX_DEPTH: u32 = 6;
pub const MIN_GRID: usize = 8;

fn validate(grid: &[Rational], depth: u32) -> Result<()> {
    if depth > MAX_DEPTH {
        return Err(Error::Parameter("finite-difference depth is at most 6"));
    }
    if grid.len() < MIN_GRID {
        return Err(Error::Parameter("grid needs at least 8 points"));
    }
    if grid[0].is_negative() || grid[0].is_zero() {
        return Err(Error::Domain("grid points must be positive"));
    }
    let step = &grid[1] - &grid[0];
    if step.is_negative() || step.is_zero() {
        return Err(Error::Parameter("grid must be increasing"));
    }
    if grid.windows(2).any(|w| &w[1] - &w[0] != step) {
        return Err(Error::Parameter("grid must be equally spaced"));
    }
    Ok(())
}

/// Smallest of `(-1)^j Delta^j v` over the sequence, by midpoint.
fn signed_difference_min(values: &[Ball], j: u32) -> Ball {
    let mut d = values.to_vec();
    for _ in 0..j {
        d = d.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let signed: Vec<Ball> = d.into_iter().map(|b| if j % 2 == 1 { -b } else { b }).collect();
    signed.iter().fold(signed[0].clone(), |m, b| tighter(&m, b).clone())
}

fn all_positive(values: &[Ball], j: u32) -> bool {
    let mut d = values.to_vec();
    for _ in 0..j {
        d = d.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    d.iter().all(|b| if j % 2 == 1 { b.is_negative() } else { b.is_positive() })
}

fn sample(kind: StirlingKind, order: u32, grid: &[Rational], p: Precision) -> Result<Vec<Ball>> {
    grid.iter().map(|x| stirling_tail(kind, order, &Ball::from_rational(x, p))).collect()
}

/// Checks the finite-difference signature of complete monotonicity:
/// `(-1)^j Delta^j F > 0` on the sampled sequence for `0 <= j <= depth`.
pub fn cm_spotcheck(
    kind: StirlingKind,
    order: u32,
    grid: &[Rational],
    depth: u32,
    p: Precision,
) -> Result<VerificationReport> {
    validate(grid, depth)?;
    let name = match kind {
        StirlingKind::F => "F",
        StirlingKind::G => "G",
    };
    let mut report = VerificationReport::new();
    for j in 0..=depth {
        // retry the whole difference table, since one entry can block the sign
        let o = certify_positive(p, |q| {
            let values = sample(kind, order, grid, q)?;
            let m = signed_difference_min(&values, j);
            if all_positive(&values, j) || m.is_negative() {
                Ok(m)
            } else {
                // some entry overlaps zero: widen so the retry loop sees it
                let widen = m.abs_upper();
                Ok(m.add_error(widen))
            }
        })?;
        report.push(Record::new(
            "cm",
            vec![param("kind", name), param("order", order), param("depth", j)],
            o,
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::Verdict;

    fn grid() -> Vec<Rational> {
        (1..=20).map(Rational::from_integer).collect()
    }

    #[test]
    fn stirling_tails_have_cm_signature() {
        let p = Precision::new(128).unwrap();
        for (kind, order) in [(StirlingKind::F, 2), (StirlingKind::G, 1)] {
            let r = cm_spotcheck(kind, order, &grid(), 4, p).unwrap();
            assert!(r.passed());
            assert_eq!(r.records().len(), 5);
        }
    }

    #[test]
    fn non_cm_sequence_fails_at_depth_one() {
        let values: Vec<Ball> = (1..10).map(|k| Ball::from_i64(k, Precision::new(64).unwrap())).collect();
        assert!(!all_positive(&values, 1));
        assert!(signed_difference_min(&values, 1).is_negative());
    }

    #[test]
    fn grid_validation() {
        let p = Precision::new(64).unwrap();
        let short: Vec<Rational> = (1..5).map(Rational::from_integer).collect();
        assert!(cm_spotcheck(StirlingKind::F, 2, &short, 2, p).is_err());
        assert!(cm_spotcheck(StirlingKind::F, 2, &grid(), 7, p).is_err());
        let mut uneven = grid();
        uneven[3] = Rational::from_ratio(7, 2);
        assert!(cm_spotcheck(StirlingKind::F, 2, &uneven, 2, p).is_err());
        let r = cm_spotcheck(StirlingKind::F, 2, &grid(), 0, p).unwrap();
        assert_eq!(r.records()[0].verdict, Verdict::Pass);
    }
}
