use super::{BoundSpec, SharpConstant, Target};
use crate::bigmath::{ln2, Ball, Precision};
use crate::specfun::euler_gamma;
use crate::Result;

fn nb(n: u64, p: Precision) -> Ball {
    Ball::from_bigint(n.into(), p)
}

fn exact(num: i64, den: i64, p: Precision) -> Result<Ball> {
    Ok(Ball::from_ratio(num, den, p))
}

/// `1 / (c * n^2 + k)`, the common shape of several bounds.
fn inv_quadratic(n: u64, c: i64, k: Ball) -> Result<Ball> {
    let p = k.precision();
    (nb(n, p).sqr().mul_i64(c) + k).recip()
}

/// `1 / (2n + k)`.
fn inv_linear(n: u64, k: Ball) -> Result<Ball> {
    let p = k.precision();
    (nb(n, p).mul_i64(2) + k).recip()
}

/// `e^x - 1` for small positive `x`, with guard bits against the cancellation.
fn expm1(x: Ball) -> Result<Ball> {
    let p = x.precision();
    let wp = p.guarded(32);
    Ok((x.with_precision(wp).exp()? - Ball::from_i64(1, wp)).with_precision(p))
}

// constants

fn main_lower_const(p: Precision) -> Result<Ball> {
    let g = euler_gamma(p);
    let num = (Ball::from_i64(7, p) - g.mul_i64(12)).mul_i64(2);
    num.div(&(g.mul_i64(2) - Ball::from_i64(1, p)))
}

fn toth_sharp_const(p: Precision) -> Result<Ball> {
    Ok((Ball::from_i64(1, p) - euler_gamma(p)).recip()? - Ball::from_i64(2, p))
}

fn alt_tail_const(p: Precision) -> Result<Ball> {
    Ok((Ball::from_i64(1, p) - ln2(p)).recip()? - Ball::from_i64(2, p))
}

fn batir_const(p: Precision) -> Result<Ball> {
    let sqrt_e_m1 = expm1(Ball::from_ratio(1, 2, p))?;
    Ok(Ball::from_i64(1, p) + sqrt_e_m1.ln()?)
}

fn qi_guo_const(p: Precision) -> Result<Ball> {
    expm1(Ball::from_i64(1, p) - euler_gamma(p))
}

/// Shift in the lower denominator of `chen`, chosen so that `n = 1` is attained.
fn chen_const(p: Precision) -> Result<Ball> {
    let three_halves = Ball::from_ratio(3, 2, p);
    let delta = Ball::from_i64(1, p) - euler_gamma(p) - three_halves.ln()?;
    Ok(delta.mul_i64(6).sqrt()?.mul_i64(2).recip()? - Ball::from_i64(1, p))
}

fn gamma_const(p: Precision) -> Result<Ball> {
    Ok(euler_gamma(p))
}

// bound expressions

fn franel_lower(n: u64, p: Precision) -> Result<Ball> {
    let nn = nb(n, p);
    Ok(nn.mul_i64(2).recip()? - nn.sqr().mul_i64(8).recip()?)
}

fn half_over_n(n: u64, p: Precision) -> Result<Ball> {
    nb(n, p).mul_i64(2).recip()
}

fn klamkin_lower(_n: u64, p: Precision) -> Result<Ball> {
    exact(1, 2, p)
}

fn klamkin_upper(_n: u64, p: Precision) -> Result<Ball> {
    exact(1, 1, p)
}

fn odd_lower(n: u64, p: Precision) -> Result<Ball> {
    Ok(nb(2 * n + 1, p).ln()?.mul_2exp(-1))
}

fn odd_upper(n: u64, p: Precision) -> Result<Ball> {
    Ok(Ball::from_i64(1, p) + nb(2 * n - 1, p).ln()?.mul_2exp(-1))
}

fn young_lower(n: u64, p: Precision) -> Result<Ball> {
    nb(n + 1, p).mul_i64(2).recip()
}

fn detemple_lower(n: u64, p: Precision) -> Result<Ball> {
    nb(n + 1, p).sqr().mul_i64(24).recip()
}

fn detemple_upper(n: u64, p: Precision) -> Result<Ball> {
    inv_quadratic(n, 24, Ball::zero(p))
}

fn toth_lower(n: u64, p: Precision) -> Result<Ball> {
    inv_linear(n, Ball::from_ratio(2, 5, p))
}

fn toth_upper(n: u64, p: Precision) -> Result<Ball> {
    inv_linear(n, Ball::from_ratio(1, 3, p))
}

fn toth_sharp_lower(n: u64, p: Precision) -> Result<Ball> {
    inv_linear(n, toth_sharp_const(p)?)
}

fn alt_tail_lower(n: u64, p: Precision) -> Result<Ball> {
    inv_linear(n, alt_tail_const(p)?)
}

fn alt_tail_upper(n: u64, p: Precision) -> Result<Ball> {
    inv_linear(n, Ball::from_i64(1, p))
}

fn ln_expm1_inv(n: u64, p: Precision) -> Result<Ball> {
    expm1(nb(n + 1, p).recip()?)?.ln()
}

fn batir_lower(n: u64, p: Precision) -> Result<Ball> {
    Ok(batir_const(p)? - ln_expm1_inv(n, p)?)
}

fn batir_upper(n: u64, p: Precision) -> Result<Ball> {
    Ok(euler_gamma(p) - ln_expm1_inv(n, p)?)
}

fn qi_guo_lower(n: u64, p: Precision) -> Result<Ball> {
    Ok((nb(n, p) + Ball::from_ratio(1, 2, p)).ln()? + euler_gamma(p))
}

fn qi_guo_upper(n: u64, p: Precision) -> Result<Ball> {
    Ok((nb(n, p) + qi_guo_const(p)?).ln()? + euler_gamma(p))
}

fn chen_lower(n: u64, p: Precision) -> Result<Ball> {
    (nb(n, p) + chen_const(p)?).sqr().mul_i64(24).recip()
}

fn chen_upper(n: u64, p: Precision) -> Result<Ball> {
    (nb(n, p) + Ball::from_ratio(1, 2, p)).sqr().mul_i64(24).recip()
}

fn main_lower(n: u64, p: Precision) -> Result<Ball> {
    Ok(-inv_quadratic(n, 12, main_lower_const(p)?)?)
}

fn main_upper(n: u64, p: Precision) -> Result<Ball> {
    Ok(-inv_quadratic(n, 12, Ball::from_ratio(6, 5, p))?)
}

macro_rules! rational_const {
    ($name:expr, $num:expr, $den:expr, $dec:expr) => {
        SharpConstant {
            name: $name,
            expression: $dec,
            decimal: ($dec, $dec),
            eval: |p| Ok(Ball::from_ratio($num, $den, p)),
        }
    };
}

pub(super) static CATALOG: [BoundSpec; 12] = [
    BoundSpec {
        id: "franel",
        target: Target::HMinusLnGamma,
        lower: franel_lower,
        upper: half_over_n,
        lower_equality: &[],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[],
        statement: "1/(2n) - 1/(8n^2) < H(n) - ln n - gamma < 1/(2n)",
        note: "",
    },
    BoundSpec {
        id: "klamkin",
        target: Target::HMinusLn,
        lower: klamkin_lower,
        upper: klamkin_upper,
        lower_equality: &[],
        upper_equality: &[1],
        domain_min: 1,
        sharp_constants: &[rational_const!("lower", 1, 2, "1/2"), rational_const!("upper", 1, 1, "1")],
        statement: "1/2 < H(n) - ln n < 1",
        note: "stated strict, but H(1) - ln 1 = 1 attains the upper side",
    },
    BoundSpec {
        id: "odd",
        target: Target::OddHarmonic,
        lower: odd_lower,
        upper: odd_upper,
        lower_equality: &[],
        upper_equality: &[1],
        domain_min: 1,
        sharp_constants: &[],
        statement: "ln(2n+1)/2 < sum_{k=1}^n 1/(2k-1) < 1 + ln(2n-1)/2",
        note: "stated strict, but n = 1 attains the upper side",
    },
    BoundSpec {
        id: "young",
        target: Target::HMinusLnGamma,
        lower: young_lower,
        upper: half_over_n,
        lower_equality: &[],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[],
        statement: "1/(2(n+1)) < H(n) - ln n - gamma < 1/(2n)",
        note: "",
    },
    BoundSpec {
        id: "detemple",
        target: Target::HMinusLnHalfGamma,
        lower: detemple_lower,
        upper: detemple_upper,
        lower_equality: &[],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[],
        statement: "1/(24(n+1)^2) < H(n) - ln(n+1/2) - gamma < 1/(24n^2)",
        note: "",
    },
    BoundSpec {
        id: "toth",
        target: Target::HMinusLnGamma,
        lower: toth_lower,
        upper: toth_upper,
        lower_equality: &[],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[rational_const!("lower shift", 2, 5, "2/5"), rational_const!("upper shift", 1, 3, "1/3")],
        statement: "1/(2n+2/5) < H(n) - ln n - gamma < 1/(2n+1/3)",
        note: "",
    },
    BoundSpec {
        id: "toth_sharp",
        target: Target::HMinusLnGamma,
        lower: toth_sharp_lower,
        upper: toth_upper,
        lower_equality: &[1],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[
            SharpConstant {
                name: "lower shift",
                expression: "1/(1-gamma) - 2",
                decimal: ("0.3652721186", "0.3652721187"),
                eval: toth_sharp_const,
            },
            rational_const!("upper shift", 1, 3, "1/3"),
        ],
        statement: "1/(2n+1/(1-gamma)-2) <= H(n) - ln n - gamma < 1/(2n+1/3)",
        note: "",
    },
    BoundSpec {
        id: "alt_tail",
        target: Target::AlternatingTail,
        lower: alt_tail_lower,
        upper: alt_tail_upper,
        lower_equality: &[1],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[
            SharpConstant {
                name: "a",
                expression: "1/(1-ln 2) - 2",
                decimal: ("1.2588913532", "1.2588913533"),
                eval: alt_tail_const,
            },
            rational_const!("b", 1, 1, "1"),
        ],
        statement: "1/(2n+a) <= |sum_{k>n} (-1)^(k-1)/k| < 1/(2n+b)",
        note: "the lower side is attained at n = 1 since x_1 = a",
    },
    BoundSpec {
        id: "batir",
        target: Target::H,
        lower: batir_lower,
        upper: batir_upper,
        lower_equality: &[1],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[
            SharpConstant {
                name: "lower",
                expression: "1 + ln(sqrt(e) - 1)",
                decimal: ("0.5672478704", "0.5672478705"),
                eval: batir_const,
            },
            SharpConstant {
                name: "upper",
                expression: "gamma",
                decimal: ("0.5772156649", "0.5772156650"),
                eval: gamma_const,
            },
        ],
        statement: "1 + ln(sqrt(e)-1) - ln(e^(1/(n+1))-1) <= H(n) < gamma - ln(e^(1/(n+1))-1)",
        note: "",
    },
    BoundSpec {
        id: "qi_guo_family",
        target: Target::H,
        lower: qi_guo_lower,
        upper: qi_guo_upper,
        lower_equality: &[],
        upper_equality: &[1],
        domain_min: 1,
        sharp_constants: &[
            rational_const!("lower shift", 1, 2, "1/2"),
            SharpConstant {
                name: "upper shift",
                expression: "e^(1-gamma) - 1",
                decimal: ("0.5262051115", "0.5262051116"),
                eval: qi_guo_const,
            },
        ],
        statement: "ln(n+1/2) + gamma < H(n) <= ln(n+e^(1-gamma)-1) + gamma",
        note: "",
    },
    BoundSpec {
        id: "chen",
        target: Target::HMinusLnHalfGamma,
        lower: chen_lower,
        upper: chen_upper,
        lower_equality: &[1],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[
            SharpConstant {
                name: "lower shift",
                expression: "1/(2 sqrt(6(1-gamma-ln(3/2)))) - 1",
                decimal: ("0.5510654606", "0.5510654607"),
                eval: chen_const,
            },
            rational_const!("upper shift", 1, 2, "1/2"),
        ],
        statement: "1/(24(n+c)^2) <= H(n) - ln(n+1/2) - gamma < 1/(24(n+1/2)^2)",
        note: "c = 1/(2 sqrt(6(1-gamma-ln(3/2)))) - 1 makes n = 1 an equality; \
               without the -1 the lower side is strict and not sharp",
    },
    BoundSpec {
        id: "main",
        target: Target::HMinusLnHalfNGamma,
        lower: main_lower,
        upper: main_upper,
        lower_equality: &[1],
        upper_equality: &[],
        domain_min: 1,
        sharp_constants: &[
            SharpConstant {
                name: "lower",
                expression: "2(7-12gamma)/(2gamma-1)",
                decimal: ("0.9507399991", "0.9507399992"),
                eval: main_lower_const,
            },
            rational_const!("upper", 6, 5, "6/5"),
        ],
        statement: "-1/(12n^2 + 2(7-12gamma)/(2gamma-1)) <= H(n) - ln n - 1/(2n) - gamma < -1/(12n^2 + 6/5)",
        note: "",
    },
];
