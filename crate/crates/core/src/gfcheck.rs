//! Exact coefficient-by-coefficient checks of generating-function identities
//! for the polynomials and their moments.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::family::{generate, Family, FamilyKind};
use crate::moments::{lukasiewicz_series, MomentSequence, WeightSchema};
use crate::poly::{Poly, Polynomial, RationalPolynomial, Ring};
use crate::series::TruncatedSeries;

type Series = TruncatedSeries<BigRational>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    /// `sum U_n z^n = 1/(1 - xz + z^(t+1))`.
    #[serde(rename = "UP")]
    Up,
    /// `sum T_n z^n = (1 - t z^(t+1))/(1 - xz + z^(t+1))`.
    #[serde(rename = "TP")]
    Tp,
    /// `UM = 1 + z^(t+1) UM^(t+1)`.
    #[serde(rename = "UM-feq")]
    UmFeq,
    /// `TM = 1 + (t+1) z^(t+1) UM^t TM`.
    #[serde(rename = "TM-feq")]
    TmFeq,
    /// `sum H_n z^n/n! = exp(xz - z^(t+1)/2)`.
    #[serde(rename = "HP")]
    Hp,
    /// `sum mu_n z^n/n! = exp(z^(t+1)/2)`.
    #[serde(rename = "HM")]
    Hm,
    /// `HM' = 1 + lambda_t z^(t+1) HM' prod_{k=1..t} delta^k HM'`.
    #[serde(rename = "HM'-feq")]
    HmPrimeFeq,
    #[serde(rename = "LM-lfrac")]
    LmLfrac,
    #[serde(rename = "UM-lfrac")]
    UmLfrac,
    #[serde(rename = "TM-lfrac")]
    TmLfrac,
}

impl Identity {
    pub const ALL: [Identity; 10] = [
        Identity::Up,
        Identity::Tp,
        Identity::UmFeq,
        Identity::TmFeq,
        Identity::Hp,
        Identity::Hm,
        Identity::HmPrimeFeq,
        Identity::LmLfrac,
        Identity::UmLfrac,
        Identity::TmLfrac,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Identity::Up => "UP",
            Identity::Tp => "TP",
            Identity::UmFeq => "UM-feq",
            Identity::TmFeq => "TM-feq",
            Identity::Hp => "HP",
            Identity::Hm => "HM",
            Identity::HmPrimeFeq => "HM'-feq",
            Identity::LmLfrac => "LM-lfrac",
            Identity::UmLfrac => "UM-lfrac",
            Identity::TmLfrac => "TM-lfrac",
        }
    }

    /// Truncation order used by default: 12 for exponential generating
    /// functions and L-fractions, 15 otherwise.
    pub fn default_order(self) -> usize {
        match self {
            Identity::Hp | Identity::Hm | Identity::LmLfrac | Identity::UmLfrac | Identity::TmLfrac => 12,
            _ => 15,
        }
    }

    /// Whether the identity exists at order `t`.
    pub fn applies_to(self, t: u32) -> bool {
        t >= 1 && (self != Identity::LmLfrac || t % 2 == 1)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        Identity::ALL
            .into_iter()
            .find(|i| i.id().to_ascii_lowercase() == wanted)
            .or((wanted == "hmprime-feq").then_some(Identity::HmPrimeFeq))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfCheckReport {
    pub identity: Identity,
    pub t: u32,
    pub order: usize,
    /// Agreement of each coefficient `0..=order`.
    pub coefficients: Vec<bool>,
    pub first_failure: Option<usize>,
    pub note: Option<String>,
}

impl GfCheckReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn compare<C: Ring>(
    identity: Identity,
    t: u32,
    lhs: &TruncatedSeries<C>,
    rhs: &TruncatedSeries<C>,
    note: Option<&str>,
) -> GfCheckReport {
    let order = lhs.order().min(rhs.order());
    let coefficients: Vec<bool> = (0..=order).map(|i| lhs.coeff(i) == rhs.coeff(i)).collect();
    GfCheckReport {
        identity,
        t,
        order,
        first_failure: coefficients.iter().position(|ok| !ok),
        coefficients,
        note: note.map(str::to_string),
    }
}

/// Check an identity given by name, e.g. `"UM-feq"`.
pub fn check_identity(id: &str, t: u32, order: usize) -> Result<GfCheckReport> {
    check(id.parse()?, t, order)
}

pub fn check(identity: Identity, t: u32, order: usize) -> Result<GfCheckReport> {
    let kind = match identity {
        Identity::Up | Identity::UmFeq | Identity::UmLfrac => FamilyKind::ChebyshevU,
        Identity::Tp | Identity::TmFeq | Identity::TmLfrac => FamilyKind::ChebyshevT,
        Identity::Hp | Identity::Hm | Identity::HmPrimeFeq => FamilyKind::Hermite,
        Identity::LmLfrac => FamilyKind::Laguerre,
    };
    let family = Family::new(kind, t)?;
    let step = t as usize + 1;
    let moments = |f: Family| Series::from_integers(order, &MomentSequence::closed_form(f, order).values);
    let report = match identity {
        Identity::Up | Identity::Tp => {
            let polys = generate(family, order);
            let lhs = TruncatedSeries::from_coeffs(order, polys);
            let one = Polynomial::one();
            let denom = TruncatedSeries::from_coeffs(order, vec![one.clone(), -Polynomial::x()])
                .add(&TruncatedSeries::monomial(order, one.clone(), step));
            let mut rhs = denom.reciprocal()?;
            if identity == Identity::Tp {
                let numer = TruncatedSeries::one(order)
                    .sub(&TruncatedSeries::monomial(order, Poly::constant(BigInt::from(t)), step));
                rhs = numer.mul(&rhs);
            }
            compare(identity, t, &lhs, &rhs, None)
        }
        Identity::UmFeq => {
            let um = moments(family);
            let rhs = Series::one(order).add(&um.pow(t + 1).shift(step));
            compare(identity, t, &um, &rhs, None)
        }
        Identity::TmFeq => {
            let um = moments(Family::new(FamilyKind::ChebyshevU, t)?);
            let tm = moments(family);
            let lead = rational(BigInt::from(t + 1));
            let rhs = Series::one(order).add(&um.pow(t).mul(&tm).shift(step).scale(&lead));
            compare(identity, t, &tm, &rhs, None)
        }
        Identity::Hp => {
            let mut fact = BigInt::one();
            let lhs_coeffs: Vec<RationalPolynomial> = generate(family, order)
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    if n > 0 {
                        fact *= n;
                    }
                    let inv = BigRational::new(BigInt::one(), fact.clone());
                    p.to_rational().scale(&inv)
                })
                .collect();
            let lhs = TruncatedSeries::from_coeffs(order, lhs_coeffs);
            let exponent = TruncatedSeries::from_coeffs(
                order,
                vec![RationalPolynomial::zero(), RationalPolynomial::x()],
            )
            .sub(&TruncatedSeries::monomial(order, Poly::constant(half()), step));
            compare(identity, t, &lhs, &exponent.exp()?, None)
        }
        Identity::Hm => {
            let lhs = Series::egf_from_integers(order, &MomentSequence::closed_form(family, order).values);
            let rhs = Series::monomial(order, half(), step).exp()?;
            compare(identity, t, &lhs, &rhs, None)
        }
        Identity::HmPrimeFeq => {
            let hm = moments(family);
            let schema = WeightSchema::for_family(family);
            let lambda_t = rational(schema.weight(t as usize, t as usize));
            let mut rhs = hm.clone();
            for k in 1..=t as usize {
                let shifted = lukasiewicz_series(&schema.shifted(k), order, 0);
                rhs = rhs.mul(&Series::from_integers(order, &shifted));
            }
            let rhs = Series::one(order).add(&rhs.shift(step).scale(&lambda_t));
            compare(
                identity,
                t,
                &hm,
                &rhs,
                Some("left side from closed-form moments; shifted factors from the weighted path enumerator"),
            )
        }
        Identity::UmLfrac | Identity::TmLfrac | Identity::LmLfrac => {
            let schema = WeightSchema::for_family(family);
            let rhs = lfraction_truncate(&schema, required_depth(&schema, order), order)?;
            let note = (identity == Identity::LmLfrac).then_some(
                "both products run up to the downstep size; a downstep of size d carries z^(d+1)",
            );
            compare(identity, t, &moments(family), &rhs, note)
        }
    };
    Ok(report)
}

fn rational(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Smallest depth at which [`lfraction_truncate`] is exact through `z^order`.
///
/// Cutting at depth `D` only loses paths that climb to height `D` and make a
/// nonempty excursion there, and every such path is longer than `order`
/// once `D + e + ceil(D / d_max) > order`, where `e` is the length of the
/// shortest excursion.
pub fn required_depth(schema: &WeightSchema, order: usize) -> usize {
    let downs = schema.downsteps();
    let d_max = downs.iter().copied().max().unwrap_or(1).max(1);
    let shortest = if downs.contains(&0) {
        1
    } else {
        downs.iter().copied().min().unwrap_or(1) + 1
    };
    (0..)
        .find(|&d| d + shortest + d.div_ceil(d_max) > order)
        .expect("the bound grows without limit")
}

/// Evaluate the L-fraction `f_s = 1 / (1 - sum_d lambda(s+d, d) z^(d+1) f_{s+1} ... f_{s+d})`
/// bottom-up from `f_depth = 1`, returning `f_0` through `z^order`.
pub fn lfraction_truncate(schema: &WeightSchema, depth: usize, order: usize) -> Result<Series> {
    let required = required_depth(schema, order);
    if depth < required {
        return Err(Error::InsufficientDepth {
            depth,
            order,
            required,
        });
    }
    let downs = schema.downsteps();
    let d_max = downs.iter().copied().max().unwrap_or(0);
    let mut levels = vec![Series::one(order); depth + d_max + 1];
    for s in (0..depth).rev() {
        let mut denom = Series::one(order);
        for &d in &downs {
            let w = schema.weight(s + d, d);
            if w.is_zero() {
                continue;
            }
            let mut term = Series::monomial(order, rational(w), d + 1);
            for level in &levels[s + 1..=s + d] {
                term = term.mul(level);
            }
            denom = denom.sub(&term);
        }
        levels[s] = denom.reciprocal()?;
    }
    Ok(levels.swap_remove(0))
}

/// `m!`-fold overcount of the ordered-block formula for the Hermite moment
/// `mu_{(t+1)m}`, reported next to the true value.
pub fn hermite_ordered_block_discrepancy(t: u32, m: u64) -> (BigInt, BigInt) {
    let ordered = crate::moments::hermite_moment_ordered_blocks(t as u64, m);
    let exact = &ordered / factorial(m);
    (ordered, exact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moments::lukasiewicz_series;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn every_identity_passes() {
        for t in 1..=3 {
            for id in Identity::ALL.into_iter().filter(|i| i.applies_to(t)) {
                let order = id.default_order();
                let r = check(id, t, order).unwrap();
                assert!(r.passed(), "{id} t={t}: {r:?}");
                assert_eq!(r.order, order);
            }
        }
    }

    #[test]
    fn examples() {
        let r = check_identity("UP", 1, 5).unwrap();
        assert!(r.passed());
        let u = generate(Family::new(FamilyKind::ChebyshevU, 1).unwrap(), 2);
        assert_eq!(u[2].to_string(), "x^2 - 1");

        let hm = Series::egf_from_integers(
            6,
            &MomentSequence::closed_form(Family::new(FamilyKind::Hermite, 1).unwrap(), 6).values,
        );
        assert_eq!(hm.coeff(4), &q(1, 8));

        let um = Series::from_integers(
            9,
            &MomentSequence::closed_form(Family::new(FamilyKind::ChebyshevU, 2).unwrap(), 9).values,
        );
        let rhs = Series::one(9).add(&um.pow(3).shift(3));
        assert_eq!(um.coeff(9), &q(12, 1));
        assert_eq!(rhs.coeff(9), &q(12, 1));
    }

    #[test]
    fn unknown_and_even_laguerre_are_rejected() {
        assert!(matches!(check_identity("XYZ", 1, 5), Err(Error::UnknownIdentity(_))));
        assert!(matches!(check(Identity::LmLfrac, 2, 5), Err(Error::EvenLaguerreOrder(2))));
        assert_eq!("hm'-feq".parse::<Identity>().unwrap(), Identity::HmPrimeFeq);
        assert_eq!("um_lfrac".parse::<Identity>().unwrap(), Identity::UmLfrac);
    }

    #[test]
    fn lfraction_examples() {
        let catalan = WeightSchema::for_family(Family::new(FamilyKind::ChebyshevU, 1).unwrap());
        let s = lfraction_truncate(&catalan, 8, 10).unwrap();
        let expected = [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(s.coeff(i), &q(e, 1));
        }
        let t2 = WeightSchema::for_family(Family::new(FamilyKind::ChebyshevU, 2).unwrap());
        assert_eq!(lfraction_truncate(&t2, 1, 2).unwrap(), Series::one(2));

        let lag = WeightSchema::for_family(Family::new(FamilyKind::Laguerre, 3).unwrap());
        let s = lfraction_truncate(&lag, 6, 8).unwrap();
        assert_eq!(s.coeff(4), &q(288, 1));

        assert!(matches!(
            lfraction_truncate(&catalan, 2, 10),
            Err(Error::InsufficientDepth { depth: 2, order: 10, .. })
        ));
    }

    #[test]
    fn lfraction_matches_paths_and_is_stable() {
        for kind in FamilyKind::ALL {
            for t in [1, 2, 3] {
                let Ok(f) = Family::new(kind, t) else { continue };
                let schema = WeightSchema::for_family(f);
                let order = 12;
                let depth = required_depth(&schema, order);
                let s = lfraction_truncate(&schema, depth, order).unwrap();
                let paths = Series::from_integers(order, &lukasiewicz_series(&schema, order, 0));
                assert_eq!(s, paths, "{f}");
                assert_eq!(lfraction_truncate(&schema, depth + 3, order).unwrap(), s, "{f}");
                let shifted = schema.shifted(2);
                assert_eq!(
                    lfraction_truncate(&shifted, depth, order).unwrap(),
                    Series::from_integers(order, &lukasiewicz_series(&shifted, order, 0))
                );
            }
        }
    }

    #[test]
    fn required_depth_is_tight_enough_to_matter() {
        // one level short of the requirement already loses a coefficient
        let schema = WeightSchema::for_family(Family::new(FamilyKind::ChebyshevU, 1).unwrap());
        let order = 12;
        let depth = required_depth(&schema, order);
        let exact = lfraction_truncate(&schema, depth, order).unwrap();
        let mut levels = vec![Series::one(order); depth + 1];
        for s in (0..depth - 1).rev() {
            let term = Series::monomial(order, q(1, 1), 2).mul(&levels[s + 1]);
            levels[s] = Series::one(order).sub(&term).reciprocal().unwrap();
        }
        assert_ne!(levels[0], exact);
    }

    #[test]
    fn hermite_discrepancy() {
        let (ordered, exact) = hermite_ordered_block_discrepancy(3, 2);
        assert_eq!(ordered, BigInt::from(10080));
        assert_eq!(exact, BigInt::from(5040));
    }
}
