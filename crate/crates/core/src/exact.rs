//! Exact counting primitives over unbounded integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `n!`
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient `C(n, k)`, zero when `k` lies outside `[0, n]`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) since acc = C(n, i)
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Multinomial coefficient `(sum parts)! / prod(parts!)`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut total = 0u64;
    let mut acc = BigInt::one();
    for &p in parts {
        total += p;
        acc *= binomial(total, p as i64);
    }
    acc
}

/// Fuss-Catalan number `binomial((k+1)n, n) / (kn + 1)`.
///
/// Counts `(k+1)`-ary trees with `n` internal vertices and noncrossing
/// partitions of `[(k+1)n]` into blocks of size `k+1`.
pub fn fuss_catalan(n: u64, k: u64) -> BigInt {
    assert!(k >= 1, "fuss_catalan requires k >= 1");
    let (q, r) = binomial((k + 1) * n, n as i64).div_rem(&BigInt::from(k * n + 1));
    debug_assert!(r.is_zero());
    q
}

/// Catalan number `binomial(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigInt {
    fuss_catalan(n, 1)
}

/// The `(t+1)`-reciprocal binomial coefficient `binomial((t+1)n, n)`.
pub fn reciprocal_binomial(n: u64, t: u64) -> BigInt {
    assert!(t >= 1, "reciprocal_binomial requires t >= 1");
    binomial((t + 1) * n, n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
        let mut tri: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
        for n in 1..=rows {
            let prev = &tri[n - 1];
            let mut row = vec![BigInt::one(); n + 1];
            for k in 1..n {
                row[k] = &prev[k - 1] + &prev[k];
            }
            tri.push(row);
        }
        tri
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(9, 3), BigInt::from(84));
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
    }

    #[test]
    fn binomial_outside_range_is_zero() {
        assert!(binomial(5, -1).is_zero());
        assert!(binomial(5, 6).is_zero());
        assert!(binomial(0, 1).is_zero());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        let tri = pascal(30);
        for n in 0..=30u64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k as i64), tri[n as usize][k as usize]);
            }
        }
    }

    #[test]
    fn pascal_rule() {
        for n in 1..=30u64 {
            for k in -1..=(n as i64 + 1) {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "C({n},{k})"
                );
            }
        }
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(2, 1), BigInt::from(2));
        assert_eq!(fuss_catalan(2, 2), BigInt::from(3));
        assert_eq!(fuss_catalan(3, 2), BigInt::from(12));
        assert_eq!(fuss_catalan(0, 4), BigInt::one());
    }

    #[test]
    fn fuss_catalan_division_is_exact() {
        for n in 0..=50u64 {
            for k in 1..=5u64 {
                let (_, r) = binomial((k + 1) * n, n as i64).div_rem(&BigInt::from(k * n + 1));
                assert!(r.is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn fuss_catalan_one_is_catalan() {
        // Segner recurrence as an independent route
        let mut cat = vec![BigInt::one()];
        for n in 1..=12usize {
            let next = (0..n).map(|i| &cat[i] * &cat[n - 1 - i]).sum();
            cat.push(next);
        }
        for n in 0..=12u64 {
            assert_eq!(fuss_catalan(n, 1), cat[n as usize]);
            assert_eq!(catalan(n), binomial(2 * n, n as i64) / (n + 1));
        }
    }

    #[test]
    fn reciprocal_binomial_values() {
        assert_eq!(reciprocal_binomial(1, 1), BigInt::from(2));
        assert_eq!(reciprocal_binomial(2, 2), BigInt::from(15));
        for t in 1..6 {
            assert_eq!(reciprocal_binomial(0, t), BigInt::one());
        }
    }

    #[test]
    fn multinomial_and_factorial() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(multinomial(&[2, 2, 2]), BigInt::from(90));
        assert_eq!(multinomial(&[4, 4]), BigInt::from(70));
        assert_eq!(multinomial(&[]), BigInt::one());
    }
}
