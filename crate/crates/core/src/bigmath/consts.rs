use alloc::vec::Vec;

use spin::RwLock;

use super::elementary::atanh_series;
use super::{Ball, Mag, Precision};

type Cache = RwLock<Vec<(u32, Ball)>>;

static LN2: Cache = RwLock::new(Vec::new());
static PI: Cache = RwLock::new(Vec::new());

/// Looks up a constant by exact precision so results never depend on which
/// precisions were requested earlier.
pub(crate) fn cached(cache: &Cache, p: Precision, compute: impl FnOnce(Precision) -> Ball) -> Ball {
    if let Some((_, b)) = cache.read().iter().find(|(bits, _)| *bits == p.bits()) {
        return b.clone();
    }
    let value = compute(p);
    let mut w = cache.write();
    if !w.iter().any(|(bits, _)| *bits == p.bits()) {
        w.push((p.bits(), value.clone()));
    }
    value
}

/// Enclosure of ln 2.
pub fn ln2(p: Precision) -> Ball {
    cached(&LN2, p, |p| {
        let wp = p.guarded(16);
        atanh_series(&Ball::from_ratio(1, 3, wp)).mul_2exp(1).with_precision(p)
    })
}

/// Enclosure of pi by Machin's formula.
pub fn pi(p: Precision) -> Ball {
    cached(&PI, p, |p| {
        let wp = p.guarded(16);
        let a = arctan_inv(5, wp).mul_i64(16);
        let b = arctan_inv(239, wp).mul_i64(4);
        (a - b).with_precision(p)
    })
}

/// `atan(1/k)` for an integer `k >= 2`; alternating series with tail bounded
/// by the first omitted term.
fn arctan_inv(k: i64, wp: Precision) -> Ball {
    let eps = Mag::pow2(-(i64::from(wp.bits()) + 8));
    let k2 = k * k;
    let mut pow = Ball::from_ratio(1, k, wp);
    let mut sum = pow.clone();
    let mut j = 1i64;
    loop {
        pow = pow.div_i64(k2);
        let term = pow.div_i64(2 * j + 1);
        let bound = term.abs_upper();
        if bound <= eps {
            return sum.add_error(bound);
        }
        sum = if j % 2 == 1 { sum - term } else { sum + term };
        j += 1;
    }
}
