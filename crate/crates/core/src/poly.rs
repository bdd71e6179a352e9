//! Dense univariate polynomials over an exact coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact commutative ring used for polynomial and series coefficients.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Multiplicative inverse, if it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    /// Exact division by a positive integer, if the quotient stays in the ring.
    fn div_integer(&self, d: u64) -> Option<Self>;
}

impl Ring for BigInt {
    fn inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn div_integer(&self, d: u64) -> Option<Self> {
        let d = BigInt::from(d);
        if (self % &d).is_zero() {
            Some(self / d)
        } else {
            None
        }
    }
}

impl Ring for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn div_integer(&self, d: u64) -> Option<Self> {
        if d == 0 {
            None
        } else {
            Some(self / BigRational::from_integer(BigInt::from(d)))
        }
    }
}

/// Polynomial in `x`; `coeffs[i]` is the coefficient of `x^i`.
///
/// The highest stored coefficient is never zero, so the zero polynomial has
/// no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<R> {
    coeffs: Vec<R>,
}

/// Polynomial with integer coefficients, the home of every family member.
pub type Polynomial = Poly<BigInt>;

/// Polynomial with rational coefficients, used by exponential generating functions.
pub type RationalPolynomial = Poly<BigRational>;

impl<R: Ring> Poly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `c * x^power`
    pub fn monomial(c: R, power: usize) -> Self {
        let mut coeffs = vec![R::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^power` (zero past the degree).
    pub fn coeff(&self, power: usize) -> R {
        self.coeffs.get(power).cloned().unwrap_or_else(R::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    /// Replace `x^{2i}` by `x^i`; `None` if an odd power is present.
    pub fn halve_powers(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl Polynomial {
    /// Embed into the rational polynomial ring.
    pub fn to_rational(&self) -> RationalPolynomial {
        self.map_coeffs(|c| BigRational::from_integer(c.clone()))
    }

    /// Sum of the absolute values of the coefficients.
    pub fn abs_coeff_sum(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl<R: Ring> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Ring> One for Poly<R> {
    fn one() -> Self {
        Poly {
            coeffs: vec![R::one()],
        }
    }
}

impl<R: Ring> Add for Poly<R> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<R: Ring> Add for &Poly<R> {
    type Output = Poly<R>;

    fn add(self, rhs: Self) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Sub for Poly<R> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<R: Ring> Sub for &Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: Self) -> Poly<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<R: Ring> Mul for Poly<R> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<R: Ring> Mul for &Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: Self) -> Poly<R> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<R: Ring> Neg for Poly<R> {
    type Output = Self;

    fn neg(self) -> Self {
        Poly {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<R: Ring> Ring for Poly<R> {
    fn inverse(&self) -> Option<Self> {
        match self.degree() {
            Some(0) => self.coeffs[0].inverse().map(Poly::constant),
            _ => None,
        }
    }

    fn div_integer(&self, d: u64) -> Option<Self> {
        self.coeffs
            .iter()
            .map(|c| c.div_integer(d))
            .collect::<Option<Vec<_>>>()
            .map(Poly::from_coeffs)
    }
}

impl<R: Ring + Signed + fmt::Display> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_magnitude = power == 0 || !magnitude.is_one();
            if show_magnitude {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                p => write!(f, "x^{p}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn basic_arithmetic() {
        let x = Polynomial::x();
        assert_eq!(&x * &x, p(&[0, 0, 1]));
        // x * (x^3 - 1) - x = x^4 - 2x
        let lhs = &x * &p(&[-1, 0, 0, 1]) - x.clone();
        assert_eq!(lhs, p(&[0, -2, 0, 0, 1]));
        assert_eq!(p(&[-1, 0, 1]).eval(&BigInt::from(2)), BigInt::from(3));
        assert_eq!(p(&[1, 2]).shift(2), p(&[0, 0, 1, 2]));
        assert_eq!(p(&[1, 2]).scale(&BigInt::from(-3)), p(&[-3, -6]));
    }

    #[test]
    fn normalization_and_degree() {
        let z = p(&[0, 0, 0]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[1, 1]) - p(&[0, 1]), Polynomial::one());
        assert_eq!(p(&[1, 1]) - p(&[1, 1]), Polynomial::zero());
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, 0, 226800, 0, 0, 0, -2520, 0, 0, 0, 1]).to_string(), "x^10 - 2520x^6 + 226800x^2");
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(p(&[2, -1]).to_string(), "-x + 2");
        assert_eq!(Polynomial::zero().to_string(), "0");
    }

    #[test]
    fn halve_powers() {
        assert_eq!(p(&[2, 0, -4, 0, 1]).halve_powers(), Some(p(&[2, -4, 1])));
        assert_eq!(p(&[0, 1]).halve_powers(), None);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn mul_commutes_and_associates(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn eval_is_a_ring_map(a in small_poly(), b in small_poly(), at in -5i64..5) {
            let at = BigInt::from(at);
            prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
            prop_assert_eq!((&a + &b).eval(&at), a.eval(&at) + b.eval(&at));
        }
    }
}
