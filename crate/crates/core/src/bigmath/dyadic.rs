use core::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{Mag, Rational};

/// Exact binary number `mantissa * 2^exponent`.
///
/// Kept canonical: the mantissa is odd, or zero with exponent zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

pub(crate) fn pow2_f64(e: i64) -> f64 {
    if e > 1023 {
        f64::INFINITY
    } else if e >= -1022 {
        f64::from_bits(((e + 1023) as u64) << 52)
    } else if e >= -1074 {
        f64::from_bits(1u64 << (e + 1074))
    } else {
        0.0
    }
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Dyadic {
        if man.is_zero() {
            return Dyadic::zero();
        }
        let tz = man.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            return Dyadic { man, exp };
        }
        Dyadic { man: man >> tz, exp: exp + tz as i64 }
    }

    pub fn zero() -> Dyadic {
        Dyadic { man: BigInt::zero(), exp: 0 }
    }

    pub fn from_i64(v: i64) -> Dyadic {
        Dyadic::new(BigInt::from(v), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.man.sign()
    }

    /// Number of significant bits.
    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// `|self| < 2^top`; `None` for zero.
    pub fn top(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exp + self.man.bits() as i64)
        }
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { man: -&self.man, exp: self.exp }
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic { man: self.man.abs(), exp: self.exp }
    }

    pub fn mul_2exp(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: self.man.clone(), exp: self.exp + k }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as usize;
        let b = &other.man << (other.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() || other.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { man: &self.man * &other.man, exp: self.exp + other.exp }
    }

    /// Rounds toward negative infinity to at most `bits` significant bits.
    /// Returns the rounded value and an upper bound on the rounding error.
    pub fn round_floor(&self, bits: u32) -> (Dyadic, Mag) {
        let len = self.man.bits();
        if len <= u64::from(bits) {
            return (self.clone(), Mag::ZERO);
        }
        let shift = len - u64::from(bits);
        let man = &self.man >> shift as usize;
        let exp = self.exp + shift as i64;
        (Dyadic::new(man, exp), Mag::pow2(exp))
    }

    /// Quotient `self / other` truncated to `bits` significant bits, with an
    /// upper bound on the truncation error. `other` must be nonzero.
    pub fn div_round(&self, other: &Dyadic, bits: u32) -> (Dyadic, Mag) {
        assert!(!other.is_zero(), "Dyadic::div_round by zero");
        if self.is_zero() {
            return (Dyadic::zero(), Mag::ZERO);
        }
        // scale the numerator so the quotient has at least `bits + 1` bits
        let want = i64::from(bits) + 1 + other.man.bits() as i64 - self.man.bits() as i64;
        let shift = want.max(0);
        let num = &self.man << shift as usize;
        let (q, r) = num.div_rem(&other.man);
        let exp = self.exp - other.exp - shift;
        let q = Dyadic::new(q, exp);
        let err = if r.is_zero() { Mag::ZERO } else { Mag::pow2(exp) };
        let (rounded, err2) = q.round_floor(bits);
        (rounded, err.add(err2))
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_bigint(&self.man << self.exp as usize)
        } else {
            let den = BigInt::from(1) << (-self.exp) as usize;
            Rational::new_unchecked(self.man.clone(), den)
        }
    }

    /// Nearest-ish `f64`; not correctly rounded.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.man.bits() as i64;
        let shift = (bits - 60).max(0);
        let head = (&self.man >> shift as usize).to_i64().unwrap_or(0) as f64;
        let e = self.exp + shift;
        // split the scaling so intermediate powers stay in range
        let half = e / 2;
        head * pow2_f64(half) * pow2_f64(e - half)
    }

    /// Floor of the value as an integer.
    pub fn floor(&self) -> BigInt {
        if self.exp >= 0 {
            &self.man << self.exp as usize
        } else {
            &self.man >> (-self.exp) as usize
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.sign(), other.sign()) {
            (a, b) if a != b => return sign_rank(a).cmp(&sign_rank(b)),
            (Sign::NoSign, _) => return Ordering::Equal,
            _ => {}
        }
        // same nonzero sign: compare magnitudes through the leading bit first
        let ta = self.top().unwrap_or(0);
        let tb = other.top().unwrap_or(0);
        let mag = if ta != tb {
            ta.cmp(&tb)
        } else {
            let e = self.exp.min(other.exp);
            let a = self.man.magnitude() << (self.exp - e) as usize;
            let b = other.man.magnitude() << (other.exp - e) as usize;
            a.cmp(&b)
        };
        if self.sign() == Sign::Minus {
            mag.reverse()
        } else {
            mag
        }
    }
}

fn sign_rank(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let d = Dyadic::new(BigInt::from(12), 0);
        assert_eq!(d.mantissa(), &BigInt::from(3));
        assert_eq!(d.exponent(), 2);
        assert_eq!(Dyadic::new(BigInt::zero(), 7), Dyadic::zero());
    }

    #[test]
    fn floor_rounding_of_negatives() {
        // -7 with 2 bits -> -8, error 1
        let (r, e) = Dyadic::from_i64(-7).round_floor(2);
        assert_eq!(r, Dyadic::from_i64(-8));
        assert_eq!(e, Mag::pow2(1));
        let (r, _) = Dyadic::from_i64(7).round_floor(2);
        assert_eq!(r, Dyadic::from_i64(6));
    }

    #[test]
    fn ordering() {
        let a = Dyadic::new(BigInt::from(3), -1);
        let b = Dyadic::from_i64(1);
        assert!(a > b);
        assert!(a.neg() < b.neg());
        assert!(Dyadic::zero() < b);
        assert!(Dyadic::zero() > b.neg());
    }

    #[test]
    fn division_encloses_quotient() {
        let (q, err) = Dyadic::from_i64(1).div_round(&Dyadic::from_i64(3), 64);
        let third = Rational::from_ratio(1, 3);
        let lo = q.to_rational();
        let hi = q.add(&err.to_dyadic()).to_rational();
        assert!(lo <= third && third <= hi);
    }
}
