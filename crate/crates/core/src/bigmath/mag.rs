use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};

use super::Dyadic;

const MAG_BITS: u32 = 30;

/// Nonnegative magnitude `man * 2^exp` with a 30-bit mantissa.
///
/// Used for ball radii. Every operation rounds away from the exact result in
/// the direction named by the method (`*_up` methods never underestimate).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mag {
    man: u64,
    exp: i64,
}

impl Mag {
    pub const ZERO: Mag = Mag { man: 0, exp: 0 };

    fn from_u128(man: u128, exp: i64, up: bool) -> Mag {
        if man == 0 {
            return Mag::ZERO;
        }
        let bits = 128 - man.leading_zeros();
        if bits <= MAG_BITS {
            return Mag::canonical(man as u64, exp);
        }
        let shift = bits - MAG_BITS;
        let mut m = (man >> shift) as u64;
        let mut e = exp + i64::from(shift);
        if up && man & ((1u128 << shift) - 1) != 0 {
            m += 1;
            if m == 1 << MAG_BITS {
                m >>= 1;
                e += 1;
            }
        }
        Mag::canonical(m, e)
    }

    /// Odd mantissa, so structural equality matches numeric equality.
    fn canonical(man: u64, exp: i64) -> Mag {
        let tz = man.trailing_zeros();
        Mag { man: man >> tz, exp: exp + i64::from(tz) }
    }

    pub fn from_u64(v: u64) -> Mag {
        Mag::from_u128(u128::from(v), 0, true)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Mag {
        Mag { man: 1, exp: e }
    }

    pub fn is_zero(self) -> bool {
        self.man == 0
    }

    /// Upper bound on `|d|`.
    pub fn from_dyadic_up(d: &Dyadic) -> Mag {
        Mag::from_bigint(d.mantissa(), d.exponent(), true)
    }

    /// Lower bound on `|d|`.
    pub fn from_dyadic_down(d: &Dyadic) -> Mag {
        Mag::from_bigint(d.mantissa(), d.exponent(), false)
    }

    fn from_bigint(man: &BigInt, exp: i64, up: bool) -> Mag {
        if man.sign() == Sign::NoSign {
            return Mag::ZERO;
        }
        let mag = man.magnitude();
        let bits = mag.bits();
        if bits <= 64 {
            let v = mag.iter_u64_digits().next().unwrap_or(0);
            return Mag::from_u128(u128::from(v), exp, up);
        }
        let shift = bits - 64;
        let top = mag >> shift;
        let v = top.iter_u64_digits().next().unwrap_or(0);
        let mut m = Mag::from_u128(u128::from(v), exp + shift as i64, up);
        if up {
            // the discarded low bits are below one unit of the 64-bit head
            m = m.add(Mag::pow2(exp + shift as i64));
        }
        m
    }

    /// Exact value as a dyadic.
    pub fn to_dyadic(self) -> Dyadic {
        Dyadic::new(BigInt::from(self.man), self.exp)
    }

    /// Exponent of the bit just above the leading bit: `self < 2^top`.
    fn top(self) -> i64 {
        self.exp + i64::from(64 - self.man.leading_zeros())
    }

    pub fn mul_2exp(self, k: i64) -> Mag {
        if self.is_zero() {
            return self;
        }
        Mag { man: self.man, exp: self.exp + k }
    }

    pub fn add(self, other: Mag) -> Mag {
        if self.is_zero() {
            return other;
        }
        if other.is_zero() {
            return self;
        }
        let (hi, lo) = if self.exp >= other.exp { (self, other) } else { (other, self) };
        let diff = hi.exp - lo.exp;
        if diff > 90 {
            // lo is below one unit of hi's last place after a 32-bit widening
            let wide = (u128::from(hi.man) << 32) + 1;
            return Mag::from_u128(wide, hi.exp - 32, true);
        }
        let sum = (u128::from(hi.man) << diff) + u128::from(lo.man);
        Mag::from_u128(sum, lo.exp, true)
    }

    pub fn mul(self, other: Mag) -> Mag {
        if self.is_zero() || other.is_zero() {
            return Mag::ZERO;
        }
        Mag::from_u128(u128::from(self.man) * u128::from(other.man), self.exp + other.exp, true)
    }

    /// Upper bound on `self / other`; `other` must be nonzero.
    pub fn div(self, other: Mag) -> Mag {
        assert!(!other.is_zero(), "Mag::div by zero");
        if self.is_zero() {
            return Mag::ZERO;
        }
        let num = u128::from(self.man) << 64;
        let den = u128::from(other.man);
        let q = num.div_ceil(den);
        Mag::from_u128(q, self.exp - other.exp - 64, true)
    }

    /// Lower bound on `max(self - other, 0)`.
    pub fn sub_down(self, other: Mag) -> Mag {
        if other.is_zero() {
            return self;
        }
        if self <= other {
            return Mag::ZERO;
        }
        let diff = self.exp - other.exp;
        if diff > 90 {
            let wide = (u128::from(self.man) << 32) - 1;
            return Mag::from_u128(wide, self.exp - 32, false);
        }
        if diff >= 0 {
            let a = u128::from(self.man) << diff;
            Mag::from_u128(a - u128::from(other.man), other.exp, false)
        } else {
            let b = u128::from(other.man) << (-diff);
            Mag::from_u128(u128::from(self.man) - b, self.exp, false)
        }
    }

    pub fn max(self, other: Mag) -> Mag {
        if self >= other {
            self
        } else {
            other
        }
    }

    /// Approximate value; may overflow to infinity or underflow to zero.
    pub fn to_f64(self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        self.man as f64 * super::dyadic::pow2_f64(self.exp)
    }

    /// `floor(log2(self))`, or `None` for zero.
    pub fn log2_floor(self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.top() - 1)
        }
    }
}

impl PartialOrd for Mag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mag {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
        match self.top().cmp(&other.top()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // same top bit: compare with aligned mantissas (diff < 30)
        let e = self.exp.min(other.exp);
        let a = u128::from(self.man) << (self.exp - e);
        let b = u128::from(other.man) << (other.exp - e);
        a.cmp(&b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_rounds_up() {
        let a = Mag::from_u64((1 << 30) - 1);
        let b = Mag::from_u64(1);
        let s = a.add(b);
        assert!(s >= Mag::from_u64(1 << 30));
        let tiny = Mag::pow2(-500);
        assert!(Mag::from_u64(1).add(tiny) > Mag::from_u64(1));
    }

    #[test]
    fn sub_down_is_lower_bound() {
        let a = Mag::from_u64(10);
        let b = Mag::from_u64(3);
        assert!(a.sub_down(b) <= Mag::from_u64(7));
        assert!(a.sub_down(b) > Mag::from_u64(6));
        assert_eq!(b.sub_down(a), Mag::ZERO);
    }

    #[test]
    fn div_is_upper_bound() {
        let q = Mag::from_u64(1).div(Mag::from_u64(3));
        // q >= 1/3  <=>  3q >= 1
        assert!(q.mul(Mag::from_u64(3)) >= Mag::from_u64(1));
        assert!(q < Mag::from_u64(1).mul_2exp(-1));
    }

    #[test]
    fn ordering_across_exponents() {
        assert!(Mag::pow2(-3) < Mag::pow2(-2));
        assert!(Mag::from_u64(3).mul_2exp(-2) > Mag::pow2(-1));
        assert_eq!(Mag::from_u64(4), Mag::pow2(2).max(Mag::ZERO));
    }
}
