use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};

use super::{Dyadic, Mag, Precision, Rational};
use crate::{Error, Result};

/// Real enclosure `[mid - rad, mid + rad]`.
///
/// The midpoint is an exact dyadic rounded to the ball's working precision
/// after every operation; the radius absorbs input radii and rounding error.
/// Binary operators work at the larger precision of their operands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ball {
    mid: Dyadic,
    rad: Mag,
    prec: Precision,
}

/// Outcome of comparing two enclosures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BallOrdering {
    CertainlyLess,
    CertainlyGreater,
    Overlapping,
}

impl Ball {
    /// Rounds `mid` to `p` bits, widening `rad` by the rounding error.
    pub fn new(mid: Dyadic, rad: Mag, p: Precision) -> Ball {
        let (mid, err) = mid.round_floor(p.bits());
        Ball { mid, rad: rad.add(err), prec: p }
    }

    /// Exact point; the midpoint is not rounded.
    pub fn exact(mid: Dyadic, p: Precision) -> Ball {
        Ball { mid, rad: Mag::ZERO, prec: p }
    }

    pub fn zero(p: Precision) -> Ball {
        Ball::exact(Dyadic::zero(), p)
    }

    pub fn from_i64(v: i64, p: Precision) -> Ball {
        Ball::new(Dyadic::from_i64(v), Mag::ZERO, p)
    }

    pub fn from_bigint(v: BigInt, p: Precision) -> Ball {
        Ball::new(Dyadic::new(v, 0), Mag::ZERO, p)
    }

    /// Enclosure of `r`; exact when `r` is dyadic and fits in `p` bits.
    pub fn from_rational(r: &Rational, p: Precision) -> Ball {
        if let Some(d) = r.to_dyadic() {
            return Ball::new(d, Mag::ZERO, p);
        }
        let num = Dyadic::new(r.numer().clone(), 0);
        let den = Dyadic::new(r.denom().clone(), 0);
        let (mid, err) = num.div_round(&den, p.bits());
        Ball { mid, rad: err, prec: p }
    }

    pub fn from_ratio(num: i64, den: i64, p: Precision) -> Ball {
        Ball::from_rational(&Rational::from_ratio(num, den), p)
    }

    /// Smallest representable ball around the closed interval `[lo, hi]`.
    pub fn from_interval(lo: &Dyadic, hi: &Dyadic, p: Precision) -> Ball {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let mid = lo.add(hi).mul_2exp(-1);
        let half = Mag::from_dyadic_up(&hi.sub(lo).mul_2exp(-1));
        Ball::new(mid, half, p)
    }

    pub fn mid(&self) -> &Dyadic {
        &self.mid
    }

    pub fn rad(&self) -> Mag {
        self.rad
    }

    pub fn precision(&self) -> Precision {
        self.prec
    }

    pub fn with_precision(mut self, p: Precision) -> Ball {
        self.prec = p;
        self
    }

    /// Widens the radius by `extra`.
    pub fn add_error(mut self, extra: Mag) -> Ball {
        self.rad = self.rad.add(extra);
        self
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn lower(&self) -> Dyadic {
        self.mid.sub(&self.rad.to_dyadic())
    }

    pub fn upper(&self) -> Dyadic {
        self.mid.add(&self.rad.to_dyadic())
    }

    /// Upper bound on `|x|` over the ball.
    pub fn abs_upper(&self) -> Mag {
        Mag::from_dyadic_up(&self.mid).add(self.rad)
    }

    /// Lower bound on `|x|` over the ball; zero if the ball touches zero.
    pub fn abs_lower(&self) -> Mag {
        Mag::from_dyadic_down(&self.mid).sub_down(self.rad)
    }

    pub fn is_positive(&self) -> bool {
        self.lower().sign() == Sign::Plus
    }

    pub fn is_negative(&self) -> bool {
        self.upper().sign() == Sign::Minus
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    pub fn contains_dyadic(&self, d: &Dyadic) -> bool {
        &self.lower() <= d && d <= &self.upper()
    }

    pub fn contains_rational(&self, r: &Rational) -> bool {
        &self.lower().to_rational() <= r && r <= &self.upper().to_rational()
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ball) -> bool {
        self.lower() <= other.lower() && other.upper() <= self.upper()
    }

    /// Whether the whole ball lies inside the closed interval `[lo, hi]`.
    pub fn within(&self, lo: &Rational, hi: &Rational) -> bool {
        lo <= &self.lower().to_rational() && &self.upper().to_rational() <= hi
    }

    pub fn overlaps(&self, other: &Ball) -> bool {
        self.compare(other) == BallOrdering::Overlapping
    }

    /// Certain ordering of every point of `self` against every point of `other`.
    pub fn compare(&self, other: &Ball) -> BallOrdering {
        if self.upper() < other.lower() {
            BallOrdering::CertainlyLess
        } else if self.lower() > other.upper() {
            BallOrdering::CertainlyGreater
        } else {
            BallOrdering::Overlapping
        }
    }

    pub fn hull(&self, other: &Ball) -> Ball {
        let lo = core::cmp::min(self.lower(), other.lower());
        let hi = core::cmp::max(self.upper(), other.upper());
        Ball::from_interval(&lo, &hi, self.prec.max(other.prec))
    }

    /// Total order by midpoint; used for picking the tightest margin.
    pub fn cmp_mid(&self, other: &Ball) -> Ordering {
        self.mid.cmp(&other.mid)
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn mul_2exp(&self, k: i64) -> Ball {
        Ball { mid: self.mid.mul_2exp(k), rad: self.rad.mul_2exp(k), prec: self.prec }
    }

    pub fn add_ball(&self, other: &Ball) -> Ball {
        let p = self.prec.max(other.prec);
        let mut rad = self.rad.add(other.rad);
        let limit = i64::from(p.bits()) + 64;
        let mid = match (self.mid.top(), other.mid.top()) {
            (None, _) => other.mid.clone(),
            (_, None) => self.mid.clone(),
            (Some(ta), Some(tb)) if ta > tb + limit => {
                rad = rad.add(Mag::from_dyadic_up(&other.mid));
                self.mid.clone()
            }
            (Some(ta), Some(tb)) if tb > ta + limit => {
                rad = rad.add(Mag::from_dyadic_up(&self.mid));
                other.mid.clone()
            }
            _ => self.mid.add(&other.mid),
        };
        Ball::new(mid, rad, p)
    }

    pub fn mul_ball(&self, other: &Ball) -> Ball {
        let p = self.prec.max(other.prec);
        let mid = self.mid.mul(&other.mid);
        let rad = Mag::from_dyadic_up(&self.mid)
            .mul(other.rad)
            .add(Mag::from_dyadic_up(&other.mid).mul(self.rad))
            .add(self.rad.mul(other.rad));
        Ball::new(mid, rad, p)
    }

    pub fn sqr(&self) -> Ball {
        let mid = self.mid.mul(&self.mid);
        let rad = Mag::from_dyadic_up(&self.mid)
            .mul(self.rad)
            .mul_2exp(1)
            .add(self.rad.mul(self.rad));
        Ball::new(mid, rad, self.prec)
    }

    /// Quotient enclosure; fails if `other` may contain zero.
    pub fn div(&self, other: &Ball) -> Result<Ball> {
        let p = self.prec.max(other.prec);
        let den_lower = other.abs_lower();
        if den_lower.is_zero() {
            return Err(Error::Enclosure);
        }
        let (q, err) = self.mid.div_round(&other.mid, p.bits());
        // |x/y - a/b| <= (ra + |a/b| rb) / (|b| - rb)
        let ratio = Mag::from_dyadic_up(&q).add(err);
        let prop = if self.rad.is_zero() && other.rad.is_zero() {
            Mag::ZERO
        } else {
            self.rad.add(ratio.mul(other.rad)).div(den_lower)
        };
        Ok(Ball { mid: q, rad: prop.add(err), prec: p })
    }

    pub fn recip(&self) -> Result<Ball> {
        Ball::from_i64(1, self.prec).div(self)
    }

    pub fn mul_i64(&self, k: i64) -> Ball {
        self.mul_ball(&Ball::exact(Dyadic::from_i64(k), self.prec))
    }

    /// Division by a nonzero machine integer.
    pub fn div_i64(&self, k: i64) -> Ball {
        assert!(k != 0, "Ball::div_i64 by zero");
        self.div(&Ball::exact(Dyadic::from_i64(k), self.prec))
            .expect("nonzero exact divisor")
    }

    pub fn abs(&self) -> Ball {
        if self.mid.sign() == Sign::Minus {
            -self
        } else {
            self.clone()
        }
    }

    pub fn pow(&self, e: u32) -> Ball {
        let mut acc = Ball::from_i64(1, self.prec);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        acc
    }
}

impl Neg for &Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        Ball { mid: self.mid.neg(), rad: self.rad, prec: self.prec }
    }
}

impl Neg for Ball {
    type Output = Ball;
    fn neg(self) -> Ball {
        -&self
    }
}

macro_rules! ball_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Ball> for &'a Ball {
            type Output = Ball;
            fn $m(self, rhs: &'b Ball) -> Ball {
                let f: fn(&Ball, &Ball) -> Ball = $body;
                f(self, rhs)
            }
        }
        impl $tr<Ball> for Ball {
            type Output = Ball;
            fn $m(self, rhs: Ball) -> Ball {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b Ball> for Ball {
            type Output = Ball;
            fn $m(self, rhs: &'b Ball) -> Ball {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Ball> for &'a Ball {
            type Output = Ball;
            fn $m(self, rhs: Ball) -> Ball {
                self.$m(&rhs)
            }
        }
    };
}

ball_binop!(Add, add, |a, b| a.add_ball(b));
ball_binop!(Sub, sub, |a, b| a.add_ball(&-b));
ball_binop!(Mul, mul, |a, b| a.mul_ball(b));
