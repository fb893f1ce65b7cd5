//! Polynomials and rational functions in one symbol with exact rational
//! coefficients, used to confirm algebraic identities independently of the
//! numeric value of the symbol.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::bigmath::Rational;
use crate::Result;

/// Dense polynomial, lowest degree first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly(Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Poly {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    /// From integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::new(vec![c])
    }

    /// The symbol itself.
    pub fn x() -> Poly {
        Poly::from_ints(&[0, 1])
    }

    pub fn monomial(c: i64, degree: usize) -> Poly {
        let mut v = vec![Rational::zero(); degree + 1];
        v[degree] = Rational::from_integer(c);
        Poly::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// `p(x + s)`, by Horner's scheme on polynomials.
    pub fn shift(&self, s: &Rational) -> Poly {
        let lin = Poly::new(vec![s.clone(), Rational::one()]);
        self.0.iter().rev().fold(Poly::new(Vec::new()), |acc, c| &(&acc * &lin) + &Poly::constant(c.clone()))
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::from_ints(&[1]), |acc, _| &acc * self)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        let zero = Rational::zero();
        Poly::new((0..n).map(|i| self.0.get(i).unwrap_or(&zero) + o.0.get(i).unwrap_or(&zero)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c.clone()).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self + &(-o)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }
}

/// Quotient of two polynomials; equality is decided by cross multiplication.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(crate::Error::DivisionByZero);
        }
        Ok(RatFunc { num, den })
    }

    pub fn poly(p: Poly) -> RatFunc {
        RatFunc { num: p, den: Poly::from_ints(&[1]) }
    }

    pub fn int(c: i64) -> RatFunc {
        RatFunc::poly(Poly::from_ints(&[c]))
    }

    pub fn x() -> RatFunc {
        RatFunc::poly(Poly::x())
    }

    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc { num: &(&self.num * &o.den) + &(&o.num * &self.den), den: &self.den * &o.den }
    }

    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc { num: &self.num * &o.num, den: &self.den * &o.den }
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::int(1).div(self)
    }

    /// Identity as rational functions.
    pub fn same_as(&self, o: &RatFunc) -> bool {
        &self.num * &o.den == &o.num * &self.den
    }
}

/// `-1/(12 + 2(7 - 12g)/(2g - 1)) == (1 - 2g)/2` in the symbol `g`.
pub fn main_equality_identity() -> Result<bool> {
    let g = RatFunc::x();
    let k = RatFunc::int(7).sub(&RatFunc::int(12).mul(&g)).mul(&RatFunc::int(2));
    let k = k.div(&RatFunc::int(2).mul(&g).sub(&RatFunc::int(1)))?;
    let lhs = RatFunc::int(12).add(&k).recip()?.neg();
    let rhs = RatFunc::int(1).sub(&RatFunc::int(2).mul(&g)).div(&RatFunc::int(2))?;
    Ok(lhs.same_as(&rhs))
}

/// `1/(2 + 1/(1-g) - 2) == 1 - g`: the sharpened lower shift is attained at `n = 1`.
pub fn shift_equality_identity() -> Result<bool> {
    let g = RatFunc::x();
    let one_minus_g = RatFunc::int(1).sub(&g);
    let lhs = RatFunc::int(2).add(&one_minus_g.recip()?).sub(&RatFunc::int(2)).recip()?;
    Ok(lhs.same_as(&one_minus_g))
}

/// The polynomial `1659x^4 - 8400x^2 - 100`.
pub fn g_lower_numerator() -> Poly {
    Poly::from_ints(&[-100, 0, -8400, 0, 1659])
}

/// Coefficients of the lower-bound numerator expanded around `x = 3`.
pub fn g_lower_shifted() -> Vec<Rational> {
    g_lower_numerator().shift(&Rational::from_integer(3)).coeffs().to_vec()
}

/// Confirms that the trigamma lower polynomial minus `1/x^2 + 1/x - 1/(2x^2)`
/// and the squared digamma bound equals `(1659x^4 - 8400x^2 - 100) / (264600 x^11)`.
pub fn g_lower_bound_identity() -> Result<bool> {
    let x = RatFunc::x();
    let xp = |d: usize| RatFunc::poly(Poly::monomial(1, d));
    let trig = RatFunc::new(Poly::from_ints(&[-7, 0, 5, 0, -7, 0, 35, 105, 210]), Poly::monomial(210, 9))?;
    let sq = RatFunc::new(Poly::from_ints(&[10, 0, -21, 0, 210]).pow(2), Poly::monomial(264600, 11))?;
    let lhs = trig
        .sub(&xp(2).recip()?)
        .sub(&x.recip()?)
        .add(&RatFunc::int(2).mul(&xp(2)).recip()?)
        .sub(&sq);
    let rhs = RatFunc::new(g_lower_numerator(), Poly::monomial(264600, 11))?;
    Ok(lhs.same_as(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        assert!(main_equality_identity().unwrap());
        assert!(shift_equality_identity().unwrap());
        assert!(g_lower_bound_identity().unwrap());
    }

    #[test]
    fn shifted_expansion() {
        let want: Vec<Rational> = [58679, 128772, 81186, 19908, 1659].iter().map(|&c| Rational::from_integer(c)).collect();
        assert_eq!(g_lower_shifted(), want);
        assert_eq!(g_lower_numerator().eval(&Rational::from_integer(3)), Rational::from_integer(58679));
    }

    #[test]
    fn a_false_identity_is_rejected() {
        let g = RatFunc::x();
        assert!(!g.mul(&g).same_as(&g));
        assert!(RatFunc::int(1).div(&RatFunc::int(0)).is_err());
    }
}
