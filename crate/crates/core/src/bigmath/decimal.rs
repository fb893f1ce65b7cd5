use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

use super::{Ball, Rational};

fn pow10(k: u64) -> BigInt {
    num_traits::pow(BigInt::from(10), k as usize)
}

/// `r * 10^s` as a rational.
fn scale10(r: &Rational, s: i64) -> Rational {
    if s >= 0 {
        r * &Rational::from_bigint(pow10(s as u64))
    } else {
        Rational::new_unchecked(r.numer().clone(), r.denom() * pow10((-s) as u64))
    }
}

/// Rough floor(log10 |r|) from bit lengths; within one of the truth.
fn log10_estimate(r: &Rational) -> i64 {
    let l2 = r.numer().bits() as i64 - r.denom().bits() as i64;
    Integer::div_floor(&(l2 * 30103), &100_000)
}

/// Renders `q * 10^-s`.
fn render(q: &BigInt, s: i64) -> String {
    let neg = q.is_negative();
    let ds = q.abs().to_string();
    let len = ds.len() as i64;
    let lead = len - 1 - s;
    let body = if (-5..=15).contains(&lead) {
        if s <= 0 {
            let mut out = ds.clone();
            out.extend(core::iter::repeat_n('0', (-s) as usize));
            out
        } else if s >= len {
            let mut out = String::from("0.");
            out.extend(core::iter::repeat_n('0', (s - len) as usize));
            out.push_str(&ds);
            out
        } else {
            let (a, b) = ds.split_at((len - s) as usize);
            format!("{a}.{b}")
        }
    } else {
        let (a, b) = ds.split_at(1);
        if b.is_empty() {
            format!("{a}e{lead}")
        } else {
            format!("{a}.{b}e{lead}")
        }
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Two significant digits, rounded up.
fn render_upper(r: &Rational) -> String {
    if r.is_zero() {
        return String::from("0");
    }
    let mut t = 1 - log10_estimate(r);
    loop {
        let v = scale10(r, t);
        let c = v.numer().div_ceil(v.denom());
        if c >= BigInt::from(100) {
            t -= 1;
        } else if c < BigInt::from(10) {
            t += 1;
        } else {
            return render(&c, t);
        }
    }
}

impl Ball {
    /// Decimal midpoint with `digits` significant digits and a radius that
    /// covers both the ball radius and the decimal rounding of the midpoint.
    pub fn to_decimal_parts(&self, digits: usize) -> (String, String) {
        let digits = digits.max(1) as i64;
        let m = self.mid().to_rational();
        let rad = self.rad().to_dyadic().to_rational();
        if m.is_zero() {
            return (String::from("0"), render_upper(&rad));
        }
        let mut s = digits - 1 - log10_estimate(&m);
        let (q, s) = loop {
            let v = scale10(&m, s);
            let (q, r) = v.numer().div_rem(v.denom());
            // round half away from zero
            let q = if (r.abs() * 2u32) >= *v.denom() { &q + q.signum() } else { q };
            let len = q.abs().to_string().len() as i64;
            if len > digits {
                s -= 1;
            } else if len < digits {
                s += 1;
            } else {
                break (q, s);
            }
        };
        let printed = scale10(&Rational::from_bigint(q.clone()), -s);
        let total = &rad + &(&m - &printed).abs();
        (render(&q, s), render_upper(&total))
    }

    /// `mid ± rad` with `digits` significant digits in the midpoint.
    pub fn to_decimal(&self, digits: usize) -> String {
        let (m, r) = self.to_decimal_parts(digits);
        format!("{m} ± {r}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigmath::Precision;

    #[test]
    fn renders_exact_values() {
        let p = Precision::new(64).unwrap();
        assert_eq!(Ball::from_i64(3, p).to_decimal(4), "3.000 ± 0");
        assert_eq!(Ball::from_ratio(-1, 8, p).to_decimal(3), "-0.125 ± 0");
        assert_eq!(Ball::from_i64(0, p).to_decimal(5), "0 ± 0");
    }

    #[test]
    fn radius_covers_decimal_rounding() {
        let p = Precision::new(128).unwrap();
        let third = Ball::from_ratio(1, 3, p);
        let (m, r) = third.to_decimal_parts(5);
        assert_eq!(m, "0.33333");
        // |1/3 - 0.33333| = 3.33e-6, rounded up to two digits
        assert_eq!(r, "3.4e-6");
    }

    #[test]
    fn large_and_small_use_exponents() {
        let p = Precision::new(128).unwrap();
        let big = Ball::from_bigint(num_traits::pow(BigInt::from(10), 30), p);
        assert_eq!(big.to_decimal(3), "1.00e30 ± 0");
        let small = Ball::from_ratio(1, 1 << 40, p);
        assert!(small.to_decimal(3).starts_with("9.09e-13"));
    }
}
