use harmonic_core::bigmath::Mag;
use harmonic_core::specfun::{digamma, lgamma, trigamma};
use harmonic_core::{Ball, Precision, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

fn p(bits: u32) -> Precision {
    Precision::new(bits).unwrap()
}

fn rational() -> impl Strategy<Value = Rational> {
    (-1_000_000i64..1_000_000, 1i64..100_000).prop_map(|(a, b)| Rational::from_ratio(a, b))
}

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..1_000_000, 1i64..10_000).prop_map(|(a, b)| Rational::from_ratio(a, b))
}

/// Ball of radius `w` around `c`, and a point of it at fraction `t` of the width.
fn interval(c: Rational, w: Rational, t: Rational) -> (Ball, Rational) {
    let lo = &c - &w;
    let point = &lo + &(&(&w * &t) * &Rational::from_integer(2));
    let b = Ball::from_rational(&lo, p(128)).hull(&Ball::from_rational(&(&c + &w), p(128)));
    (b, point)
}

fn width() -> impl Strategy<Value = Rational> {
    (0i64..1000).prop_map(|k| Rational::from_ratio(k, 1_000_000))
}

fn fraction() -> impl Strategy<Value = Rational> {
    (0i64..=64).prop_map(|k| Rational::from_ratio(k, 64))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn rational_is_canonical(a in rational(), b in rational()) {
        for r in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one() || r.numer() == &BigInt::from(0));
        }
    }

    #[test]
    fn arithmetic_encloses_sampled_points(
        c1 in rational(), w1 in width(), t1 in fraction(),
        c2 in rational(), w2 in width(), t2 in fraction(),
    ) {
        let (x, px) = interval(c1, w1, t1);
        let (y, py) = interval(c2, w2, t2);
        prop_assert!((&x + &y).contains_rational(&(&px + &py)));
        prop_assert!((&x - &y).contains_rational(&(&px - &py)));
        prop_assert!((&x * &y).contains_rational(&(&px * &py)));
        if let Ok(q) = x.div(&y) {
            prop_assert!(q.contains_rational(&px.checked_div(&py).unwrap()));
        }
    }

    #[test]
    fn sqrt_encloses_square_roots(c in positive(), w in width(), t in fraction()) {
        let (x, px) = interval(c, w, t);
        if x.is_positive() {
            let s = x.sqrt().unwrap();
            // s^2 must reach px: squaring back gives an exact-arithmetic oracle
            let lo = s.lower().to_rational();
            let hi = s.upper().to_rational();
            prop_assert!(&lo * &lo <= px || lo.is_negative());
            prop_assert!(&hi * &hi >= px);
        }
    }

    #[test]
    fn ln_exp_enclose_high_precision_points(c in positive(), w in width(), t in fraction()) {
        let (x, px) = interval(c, w, t);
        if x.is_positive() {
            let point = Ball::from_rational(&px, p(512));
            let fine = point.ln().unwrap();
            prop_assert!(x.ln().unwrap().contains(&fine));
            prop_assert!(fine.exp().unwrap().contains_rational(&px));
            let f = Ball::from_rational(&px, p(64)).to_f64().ln();
            prop_assert!((fine.to_f64() - f).abs() <= 1e-12 * f.abs().max(1.0));
        }
    }

    #[test]
    fn exp_of_small_points(k in -4000i64..4000, w in width(), t in fraction()) {
        let (x, px) = interval(Rational::from_ratio(k, 100), w, t);
        let fine = Ball::from_rational(&px, p(512)).exp().unwrap();
        prop_assert!(x.exp().unwrap().contains(&fine));
        prop_assert!(fine.ln().unwrap().contains_rational(&px));
    }

    #[test]
    fn evaluation_is_deterministic(c in positive()) {
        let x = Ball::from_rational(&c, p(200));
        let a = (x.ln().unwrap(), digamma(&x).unwrap(), lgamma(&x).unwrap());
        let b = (x.ln().unwrap(), digamma(&x).unwrap(), lgamma(&x).unwrap());
        prop_assert_eq!(a.0.mid(), b.0.mid());
        prop_assert_eq!(a.0.rad(), b.0.rad());
        prop_assert_eq!(a.1.mid(), b.1.mid());
        prop_assert_eq!(a.2.rad(), b.2.rad());
    }

    #[test]
    fn doubling_precision_shrinks_radius(c in positive(), bits in 64u32..512) {
        for f in [Ball::ln as fn(&Ball) -> harmonic_core::Result<Ball>, Ball::exp] {
            let lo = Ball::from_rational(&c, p(bits));
            let hi = Ball::from_rational(&c, p(2 * bits));
            let (Ok(a), Ok(b)) = (f(&lo), f(&hi)) else { continue };
            prop_assert!(b.rad() <= a.rad().mul_2exp(1));
            prop_assert!(a.contains(&b) || a.overlaps(&b));
        }
    }

    #[test]
    fn polygamma_brackets_are_consistent(k in 1i64..4000) {
        let x = Ball::from_ratio(k, 40, p(128));
        let psi = digamma(&x).unwrap();
        let psi1 = trigamma(&x).unwrap();
        // psi(x+1) = psi(x) + 1/x and psi'(x+1) = psi'(x) - 1/x^2
        let x1 = &x + Ball::from_i64(1, p(128));
        prop_assert!(digamma(&x1).unwrap().overlaps(&(&psi + x.recip().unwrap())));
        prop_assert!(trigamma(&x1).unwrap().overlaps(&(&psi1 - x.sqr().recip().unwrap())));
        prop_assert!(psi1.is_positive());
    }
}

#[test]
fn radius_vanishes_with_precision() {
    let mut last = Mag::from_u64(1);
    for bits in [64, 128, 256, 512, 1024] {
        let r = Ball::from_ratio(7, 3, p(bits)).ln().unwrap().rad();
        assert!(r < last);
        last = r;
    }
    assert!(last < Mag::pow2(-1000));
}
