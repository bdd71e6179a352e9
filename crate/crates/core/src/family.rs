//! The four higher-order polynomial families and their recurrences.
//!
//! Every family is monic with `deg P_n = n` and satisfies a recurrence of the
//! form `P_{n+1} = x P_n - sum_j c_j(n) P_{n+1-drop_j}`, where polynomials
//! with negative index vanish and `P_0 = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{binomial, factorial};
use crate::poly::Polynomial;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// Paths: Chebyshev polynomials of the second kind.
    ChebyshevU,
    /// Cycles: Chebyshev polynomials of the first kind.
    ChebyshevT,
    /// Complete graphs.
    Hermite,
    /// Balanced complete bipartite graphs, in the variable `x^2 -> x`.
    Laguerre,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        FamilyKind::ChebyshevU,
        FamilyKind::ChebyshevT,
        FamilyKind::Hermite,
        FamilyKind::Laguerre,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            FamilyKind::ChebyshevU => "u",
            FamilyKind::ChebyshevT => "t",
            FamilyKind::Hermite => "h",
            FamilyKind::Laguerre => "l",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::ChebyshevU => "chebyshev_u",
            FamilyKind::ChebyshevT => "chebyshev_t",
            FamilyKind::Hermite => "hermite",
            FamilyKind::Laguerre => "laguerre",
        };
        f.write_str(name)
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "u" | "chebyshev_u" | "chebyshev-u" => Ok(FamilyKind::ChebyshevU),
            "t" | "chebyshev_t" | "chebyshev-t" => Ok(FamilyKind::ChebyshevT),
            "h" | "hermite" => Ok(FamilyKind::Hermite),
            "l" | "laguerre" => Ok(FamilyKind::Laguerre),
            other => Err(Error::InvalidArgument(format!("unknown family `{other}`"))),
        }
    }
}

/// A polynomial family at a fixed order `t`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    kind: FamilyKind,
    t: u32,
}

impl Family {
    /// Rejects `t = 0` and Laguerre with even `t`.
    pub fn new(kind: FamilyKind, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::ZeroOrder);
        }
        if kind == FamilyKind::Laguerre && t.is_multiple_of(2) {
            return Err(Error::EvenLaguerreOrder(t));
        }
        Ok(Family { kind, t })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn order(&self) -> u32 {
        self.t
    }

    /// Vertices a Laguerre t-path uses on each side, `(t+1)/2`.
    pub fn laguerre_k(&self) -> Option<u32> {
        (self.kind == FamilyKind::Laguerre).then_some(self.t.div_ceil(2))
    }

    /// Moments vanish off multiples of this step.
    pub fn lattice_step(&self) -> usize {
        match self.laguerre_k() {
            Some(k) => k as usize,
            None => self.t as usize + 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(t={})", self.kind, self.t)
    }
}

/// One subtracted term `coefficient * P_{n+1-drop}` of the recurrence for `P_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceTerm {
    pub drop: usize,
    pub coefficient: BigInt,
}

/// Recurrence coefficients of a family as functions of `n`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSchedule {
    family: Family,
}

pub fn schedule(family: Family) -> RecurrenceSchedule {
    RecurrenceSchedule { family }
}

impl RecurrenceSchedule {
    pub fn family(&self) -> Family {
        self.family
    }

    /// The multiplier of `x P_n`; every family here is monic.
    pub fn leading_multiplier(&self) -> BigInt {
        BigInt::one()
    }

    /// Distinct drops used by the family, in increasing order.
    pub fn drops(&self) -> Vec<usize> {
        let t = self.family.t as usize;
        match self.family.laguerre_k() {
            Some(k) => vec![k as usize, t + 1],
            None => vec![t + 1],
        }
    }

    /// Subtracted terms in the recurrence producing `P_{n+1}`.
    pub fn terms(&self, n: usize) -> Vec<RecurrenceTerm> {
        let t = self.family.t as u64;
        let nn = n as u64;
        match self.family.kind {
            FamilyKind::ChebyshevU => vec![RecurrenceTerm {
                drop: t as usize + 1,
                coefficient: BigInt::one(),
            }],
            FamilyKind::ChebyshevT => vec![RecurrenceTerm {
                drop: t as usize + 1,
                // T_{t+1} = x T_t - (t+1) T_0 encodes the initial conditions
                coefficient: if nn == t { BigInt::from(t + 1) } else { BigInt::one() },
            }],
            FamilyKind::Hermite => vec![RecurrenceTerm {
                drop: t as usize + 1,
                coefficient: hermite_lambda(t, nn),
            }],
            FamilyKind::Laguerre => {
                let k = t.div_ceil(2);
                let kf2 = factorial(k).pow(2);
                let pair = binomial(nn, k as i64 - 1);
                let first = &kf2 * (&pair * &pair + 2 * binomial(nn, k as i64) * &pair);
                let second = (binomial(nn, t as i64) * binomial(t, k as i64) * &kf2).pow(2);
                vec![
                    RecurrenceTerm {
                        drop: k as usize,
                        coefficient: first,
                    },
                    RecurrenceTerm {
                        drop: t as usize + 1,
                        coefficient: second,
                    },
                ]
            }
        }
    }

    /// Coefficient for a given drop at step `n` (zero if the drop is unused).
    pub fn coefficient(&self, n: usize, drop: usize) -> BigInt {
        self.terms(n)
            .into_iter()
            .filter(|term| term.drop == drop)
            .map(|term| term.coefficient)
            .sum()
    }
}

/// `C(n, t) (t+1)!/2`, the number of t-paths through a fixed vertex of `K_{n+1}`.
pub fn hermite_lambda(t: u64, n: u64) -> BigInt {
    binomial(n, t as i64) * factorial(t + 1) / 2
}

/// `P_0 ..= P_{n_max}` by the family recurrence.
pub fn generate(family: Family, n_max: usize) -> Vec<Polynomial> {
    let sched = schedule(family);
    let x = Polynomial::x();
    let mut out: Vec<Polynomial> = Vec::with_capacity(n_max + 1);
    out.push(Polynomial::one());
    for n in 0..n_max {
        let mut next = &x * &out[n];
        for term in sched.terms(n) {
            if term.coefficient.is_zero() || term.drop > n + 1 {
                continue;
            }
            next = &next - &out[n + 1 - term.drop].scale(&term.coefficient);
        }
        out.push(next);
    }
    out
}

/// Higher-order Fibonacci numbers `tF_0 ..= tF_{n_max}`.
///
/// `U_n` has sign pattern `sum_j (-1)^j a_j x^{n-j(t+1)}` with `a_j >= 0`, so
/// giving every t-path weight `+1` amounts to summing absolute coefficients.
pub fn fibonacci(t: u32, n_max: usize) -> Result<Vec<BigInt>> {
    let family = Family::new(FamilyKind::ChebyshevU, t)?;
    Ok(generate(family, n_max)
        .iter()
        .map(Polynomial::abs_coeff_sum)
        .collect())
}
