use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use spin::RwLock;

use crate::bigmath::Rational;

/// Bernoulli numbers `B_0, B_1, ...` with `B_1 = -1/2`, grown on demand.
///
/// Even-index values come from the integer tangent-number recurrence, so
/// growing the table never touches a rational until the final division.
#[derive(Debug, Clone, Default)]
pub struct BernoulliCache {
    table: Vec<Rational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `B_m`, extending the table if needed.
    pub fn get(&mut self, m: usize) -> Rational {
        if m >= self.table.len() {
            self.grow(m);
        }
        self.table[m].clone()
    }

    /// Cached `B_m` without growing.
    pub fn peek(&self, m: usize) -> Option<&Rational> {
        self.table.get(m)
    }

    fn grow(&mut self, m: usize) {
        // round up to an even count and at least double, to amortize
        let target = (m + 1).max(2 * self.table.len()).max(8);
        let half = target / 2 + 1;
        let tangent = tangent_numbers(half);
        let mut table = Vec::with_capacity(2 * half + 1);
        table.push(Rational::one());
        table.push(Rational::from_ratio(-1, 2));
        for k in 1..=half {
            // B_2k = (-1)^(k-1) 2k T_k / (2^2k (2^2k - 1))
            let four_k = BigInt::from(1) << (2 * k);
            let den = &four_k * (&four_k - 1u32);
            let mut num = &tangent[k] * BigInt::from(2 * k);
            if k % 2 == 0 {
                num = -num;
            }
            table.push(Rational::new(num, den).expect("nonzero denominator"));
            if table.len() < 2 * half + 1 {
                table.push(Rational::zero());
            }
        }
        self.table = table;
    }
}

/// Tangent numbers `T_1..=T_n` (index 0 unused).
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = alloc::vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::from(1);
    for k in 2..=n {
        t[k] = &t[k - 1] * (k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j - k) + &t[j] * (j - k + 2);
        }
    }
    t
}

static SHARED: RwLock<BernoulliCache> = RwLock::new(BernoulliCache { table: Vec::new() });

/// Exact `B_m` from a process-wide cache.
pub fn bernoulli_number(m: usize) -> Rational {
    if let Some(b) = SHARED.read().peek(m) {
        return b.clone();
    }
    SHARED.write().get(m)
}

/// Exact `B_m(x) = sum_k C(m, k) B_k x^(m-k)`.
pub fn bernoulli_polynomial(m: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut binom = BigInt::from(1);
    let mut xpow = Rational::one();
    // walk k from m down to 0 so x^(m-k) builds incrementally
    for k in (0..=m).rev() {
        let coeff = Rational::from_bigint(binom.clone()) * bernoulli_number(k);
        acc = acc + coeff * xpow.clone();
        xpow = xpow * x.clone();
        // C(m, k-1) = C(m, k) * k / (m - k + 1)
        if k > 0 {
            binom = binom * k / (m - k + 1);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `B_m = -1/(m+1) sum_{k<m} C(m+1, k) B_k`.
    fn recurrence(upto: usize) -> Vec<Rational> {
        let mut b = alloc::vec![Rational::one()];
        for m in 1..=upto {
            let mut s = Rational::zero();
            let mut c = BigInt::from(1); // C(m+1, 0)
            for (k, bk) in b.iter().enumerate() {
                s = s + Rational::from_bigint(c.clone()) * bk.clone();
                c = c * (m + 1 - k) / (k + 1);
            }
            b.push(-(s * Rational::from_ratio(1, m as i64 + 1)));
        }
        b
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli_number(0), Rational::one());
        assert_eq!(bernoulli_number(1), Rational::from_ratio(-1, 2));
        assert_eq!(bernoulli_number(2), Rational::from_ratio(1, 6));
        assert_eq!(bernoulli_number(4), Rational::from_ratio(-1, 30));
        assert_eq!(bernoulli_number(10), Rational::from_ratio(5, 66));
        assert!(bernoulli_number(7).is_zero());
    }

    #[test]
    fn tangent_route_matches_recurrence() {
        let oracle = recurrence(60);
        let mut cache = BernoulliCache::new();
        for (m, b) in oracle.iter().enumerate() {
            assert_eq!(&cache.get(m), b, "B_{m}");
        }
    }

    #[test]
    fn polynomial_values() {
        let half = Rational::from_ratio(1, 2);
        assert_eq!(bernoulli_polynomial(0, &half), Rational::one());
        assert_eq!(bernoulli_polynomial(1, &half), Rational::zero());
        assert_eq!(bernoulli_polynomial(2, &Rational::zero()), Rational::from_ratio(1, 6));
        // B_2(x) = x^2 - x + 1/6
        let x = Rational::from_ratio(2, 3);
        assert_eq!(bernoulli_polynomial(2, &x), Rational::from_ratio(4, 9) - x.clone() + Rational::from_ratio(1, 6));
        // B_n(1) = B_n for n >= 2
        for m in 2..12 {
            assert_eq!(bernoulli_polynomial(m, &Rational::one()), bernoulli_number(m));
        }
    }
}
