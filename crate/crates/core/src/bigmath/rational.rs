use alloc::string::String;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Dyadic;
use crate::{Error, Result};

/// Exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Rational> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(num, den)))
    }

    pub(crate) fn new_unchecked(num: BigInt, den: BigInt) -> Rational {
        Rational(BigRational::new(num, den))
    }

    /// `num / den` for machine integers; panics on a zero denominator.
    pub fn from_ratio(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_integer(v: i64) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(v: BigInt) -> Rational {
        Rational(BigRational::from_integer(v))
    }

    pub fn zero() -> Rational {
        Rational(BigRational::zero())
    }

    pub fn one() -> Rational {
        Rational(BigRational::one())
    }

    /// Parses `"p/q"`, an integer, or a plain decimal such as `"2.9289"`.
    /// Parses `p/q`, an integer, or a decimal with optional exponent (`2.5e-3`).
    pub fn parse(s: &str) -> Result<Rational> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| Error::Parameter("bad numerator"))?;
            let d: BigInt = d.trim().parse().map_err(|_| Error::Parameter("bad denominator"))?;
            return Rational::new(n, d);
        }
        let (mantissa, exp) = match s.split_once(['e', 'E']) {
            Some((m, e)) => (m, e.parse::<i32>().map_err(|_| Error::Parameter("bad exponent"))?),
            None => (s, 0),
        };
        let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
        let neg = int.starts_with('-');
        let mut digits = String::from(int.trim_start_matches(['-', '+']));
        digits.push_str(frac);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parameter("bad decimal"));
        }
        let mag: BigInt = digits.parse().map_err(|_| Error::Parameter("bad decimal"))?;
        let shift = exp - frac.len() as i32;
        let ten = |k: i32| num_traits::pow(BigInt::from(10), k.unsigned_abs() as usize);
        let q = if shift >= 0 {
            Rational::from_bigint(mag * ten(shift))
        } else {
            Rational::new(mag, ten(shift))?
        };
        Ok(if neg { -q } else { q })
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn recip(&self) -> Result<Rational> {
        Rational::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> Rational {
        Rational(num_traits::pow(self.0.clone(), e as usize))
    }

    /// Exact dyadic value if the denominator is a power of two.
    pub fn to_dyadic(&self) -> Option<Dyadic> {
        let den = self.denom();
        let tz = den.trailing_zeros().unwrap_or(0);
        if (den >> tz as usize).is_one() {
            Some(Dyadic::new(self.numer().clone(), -(tz as i64)))
        } else {
            None
        }
    }

    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    pub fn to_f64(&self) -> f64 {
        let n = Dyadic::new(self.numer().clone(), 0);
        let d = Dyadic::new(self.denom().clone(), 0);
        let (q, _) = n.div_round(&d, 64);
        q.to_f64()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational(self.0.$m(rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$m(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_canonical() {
        let s = Rational::from_ratio(1, 2) + Rational::from_ratio(1, 3);
        assert_eq!(s, Rational::from_ratio(5, 6));
        let p = Rational::from_ratio(3, 4) * Rational::from_ratio(4, 3);
        assert_eq!(p, Rational::one());
        assert_eq!(Rational::from_ratio(2, -4).denom(), &BigInt::from(2));
        assert_eq!(Rational::from_ratio(2, -4).numer(), &BigInt::from(-1));
    }

    #[test]
    fn compare_with_decimal() {
        let h10 = Rational::from_ratio(7381, 2520);
        assert!(h10 > Rational::parse("2.9289").unwrap());
        assert!(h10 < Rational::parse("2.929").unwrap());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Rational::one().checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert!(Rational::new(BigInt::one(), BigInt::zero()).is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Rational::parse("7381/2520").unwrap(), Rational::from_ratio(7381, 2520));
        assert_eq!(Rational::parse("-0.25").unwrap(), Rational::from_ratio(-1, 4));
        assert_eq!(Rational::parse("12").unwrap(), Rational::from_integer(12));
        assert_eq!(Rational::parse("2.5e-3").unwrap(), Rational::from_ratio(1, 400));
        assert_eq!(Rational::parse("-3.1E2").unwrap(), Rational::from_integer(-310));
        assert_eq!(Rational::parse("1e-6").unwrap(), Rational::from_ratio(1, 1_000_000));
        assert!(Rational::parse("x").is_err());
        assert!(Rational::parse("1.2.3").is_err());
        assert!(Rational::parse("e5").is_err());
    }

    #[test]
    fn dyadic_detection() {
        assert!(Rational::from_ratio(3, 8).to_dyadic().is_some());
        assert!(Rational::from_ratio(1, 3).to_dyadic().is_none());
    }
}
