//! Truncated formal power series in `z`.
//!
//! Coefficients live in any [`Ring`]: rationals for moment series, and
//! polynomials in `x` for bivariate generating functions of polynomial
//! families.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::Ring;

/// Power series known exactly through `z^order`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

/// Default truncation order for generating-function checks.
pub const DEFAULT_ORDER: usize = 15;

impl<C: Ring> TruncatedSeries<C> {
    /// Series with the given leading coefficients, zero-padded or cut to `order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(order, Vec::new())
    }

    pub fn constant(order: usize, c: C) -> Self {
        Self::from_coeffs(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, C::one())
    }

    /// `c * z^power`
    pub fn monomial(order: usize, c: C, power: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        Self::from_coeffs(
            order,
            (0..=order)
                .map(|i| self.coeffs[i].clone() + rhs.coeffs[i].clone())
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().cloned().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![C::zero(); k.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(k)).cloned());
        Self::from_coeffs(order, coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let mut out = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Binary powering.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].inverse().ok_or(Error::NonInvertibleConstant)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Exponential of a series with zero constant term.
    ///
    /// Uses `n f_n = sum_{k=1}^{n} k g_k f_{n-k}`; the coefficient ring must
    /// admit exact division by `n`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonZeroExpConstant);
        }
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(C::one());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                let g = &self.coeffs[k];
                if g.is_zero() {
                    continue;
                }
                acc = acc + scale_int(g, k as u64) * out[n - k].clone();
            }
            out.push(acc.div_integer(n as u64).ok_or(Error::InexactDivision(n as u64))?);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::InvalidArgument(
                "composition requires an inner series with zero constant term".into(),
            ));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = acc.mul(&inner).add(&Self::constant(order, c.clone()));
        }
        Ok(acc)
    }

    /// First index at which the two series differ, over their common order.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&i| self.coeffs[i] != other.coeffs[i])
    }
}

fn scale_int<C: Ring>(c: &C, k: u64) -> C {
    // repeated doubling keeps this generic over any ring
    let mut acc = C::zero();
    let mut base = c.clone();
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        k >>= 1;
    }
    acc
}

impl TruncatedSeries<BigRational> {
    /// Ordinary generating function of an integer sequence.
    pub fn from_integers(order: usize, values: &[BigInt]) -> Self {
        Self::from_coeffs(
            order,
            values
                .iter()
                .take(order + 1)
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        )
    }

    /// Exponential generating function: coefficient `n` is `values[n] / n!`.
    pub fn egf_from_integers(order: usize, values: &[BigInt]) -> Self {
        let mut fact = BigInt::one();
        let coeffs = values
            .iter()
            .take(order + 1)
            .enumerate()
            .map(|(n, v)| {
                if n > 0 {
                    fact *= n;
                }
                BigRational::new(v.clone(), fact.clone())
            })
            .collect();
        Self::from_coeffs(order, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::poly::Polynomial;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rs(order: usize, c: &[(i64, i64)]) -> TruncatedSeries<BigRational> {
        TruncatedSeries::from_coeffs(order, c.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn geometric_series() {
        let s = rs(3, &[(1, 1), (-1, 1)]);
        assert_eq!(s.reciprocal().unwrap(), rs(3, &[(1, 1); 4]));
    }

    #[test]
    fn exp_of_half_z_squared() {
        let g = TruncatedSeries::monomial(4, q(1, 2), 2);
        assert_eq!(g.exp().unwrap(), rs(4, &[(1, 1), (0, 1), (1, 2), (0, 1), (1, 8)]));
    }

    #[test]
    fn error_paths() {
        let s = rs(3, &[(0, 1), (1, 1)]);
        assert_eq!(s.reciprocal(), Err(Error::NonInvertibleConstant));
        let s = rs(3, &[(1, 1), (1, 1)]);
        assert_eq!(s.exp(), Err(Error::NonZeroExpConstant));
        // over the integers exp(z) is not representable
        let zi = TruncatedSeries::<BigInt>::monomial(3, BigInt::one(), 1);
        assert_eq!(zi.exp(), Err(Error::InexactDivision(2)));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        // (1 + z^3 S)^(t+1) with S = 1 + 2z + 3z^2 ...
        let order = 12;
        let s = TruncatedSeries::from_coeffs(order, (1..=13).map(|i| q(i, 1)).collect());
        let base = TruncatedSeries::one(order).add(&s.shift(3));
        for t in 1..=4u32 {
            let mut manual = TruncatedSeries::one(order);
            for _ in 0..=t {
                manual = manual.mul(&base);
            }
            assert_eq!(base.pow(t + 1), manual);
        }
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let a = rs(5, &[(1, 1), (1, 1)]);
        let b = rs(3, &[(1, 1), (2, 1)]);
        assert_eq!(a.mul(&b).order(), 3);
        assert_eq!(a.add(&b).order(), 3);
    }

    #[test]
    fn bivariate_reduces_to_univariate_without_x() {
        // 1/(1 - 2z) with constant polynomial coefficients vs rational coefficients
        let order = 8;
        let poly_series = TruncatedSeries::from_coeffs(
            order,
            vec![Polynomial::one(), Polynomial::constant(BigInt::from(-2))],
        );
        let rat_series = rs(order, &[(1, 1), (-2, 1)]);
        let a = poly_series.reciprocal().unwrap();
        let b = rat_series.reciprocal().unwrap();
        for n in 0..=order {
            assert_eq!(a.coeff(n).degree().unwrap_or(0), 0);
            assert_eq!(BigRational::from_integer(a.coeff(n).coeff(0)), *b.coeff(n));
        }
    }

    #[test]
    fn compose_with_linear_is_scaling() {
        let f = rs(5, &[(1, 1), (1, 1), (1, 1), (1, 1), (1, 1), (1, 1)]);
        let inner = rs(5, &[(0, 1), (2, 1)]);
        let got = f.compose(&inner).unwrap();
        for n in 0..=5 {
            assert_eq!(*got.coeff(n), q(1 << n, 1));
        }
    }

    fn small_series(constant_zero: bool) -> impl Strategy<Value = TruncatedSeries<BigRational>> {
        prop::collection::vec((-6i64..6, 1i64..4), 6).prop_map(move |v| {
            let mut c: Vec<BigRational> = v.into_iter().map(|(n, d)| q(n, d)).collect();
            if constant_zero {
                c[0] = BigRational::zero();
            } else if c[0].is_zero() {
                c[0] = BigRational::one();
            }
            TruncatedSeries::from_coeffs(5, c)
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(a in small_series(false), b in small_series(false), c in small_series(true)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }

        #[test]
        fn reciprocal_is_involutive(a in small_series(false)) {
            let r = a.reciprocal().unwrap();
            prop_assert_eq!(r.reciprocal().unwrap(), a.clone());
            prop_assert_eq!(r.mul(&a), TruncatedSeries::one(5));
        }

        #[test]
        fn exp_is_a_homomorphism(a in small_series(true), b in small_series(true)) {
            let lhs = a.add(&b).exp().unwrap();
            let rhs = a.exp().unwrap().mul(&b.exp().unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
