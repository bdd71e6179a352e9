//! Moment sequences, the weighted Łukasiewicz-path enumerator, the linear
//! functional `L(x^n) = mu_n`, and Gram matrices `L(P_m P_n)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exact::{binomial, factorial, fuss_catalan, multinomial, reciprocal_binomial};
use crate::family::{generate, schedule, Family, FamilyKind, RecurrenceSchedule};
use crate::poly::Polynomial;

/// Aerated moment sequence `mu_0 ..= mu_{len-1}` of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentSequence {
    pub family: Family,
    #[serde(serialize_with = "crate::report::ser_bigints")]
    pub values: Vec<BigInt>,
}

impl MomentSequence {
    pub fn closed_form(family: Family, n_max: usize) -> Self {
        MomentSequence {
            family,
            values: (0..=n_max).map(|n| closed_form_moment(family, n)).collect(),
        }
    }

    pub fn get(&self, n: usize) -> &BigInt {
        &self.values[n]
    }
}

/// Closed-form `n`-th moment.
///
/// ChebyshevU: aerated Fuss-Catalan numbers. ChebyshevT: aerated
/// `(t+1)`-reciprocal binomials. Hermite: complete coverings of `K_n`, i.e.
/// the multinomial `((t+1)m; t+1, ..., t+1)` times `((t+1)!/2)^m` divided by
/// the `m!` orderings of the blocks. Laguerre: complete coverings of `K_{n,n}`.
pub fn closed_form_moment(family: Family, n: usize) -> BigInt {
    let step = family.lattice_step();
    if !n.is_multiple_of(step) {
        return BigInt::zero();
    }
    let m = (n / step) as u64;
    let t = family.order() as u64;
    match family.kind() {
        FamilyKind::ChebyshevU => fuss_catalan(m, t),
        FamilyKind::ChebyshevT => reciprocal_binomial(m, t),
        FamilyKind::Hermite => hermite_moment_ordered_blocks(t, m) / factorial(m),
        FamilyKind::Laguerre => {
            let k = step as u64;
            (0..m)
                .map(|i| {
                    let side = (m - i) * k;
                    binomial(side, k as i64) * binomial(side - 1, k as i64 - 1) * factorial(k).pow(2)
                })
                .product::<BigInt>()
        }
    }
}

/// `((t+1)m; t+1, ..., t+1) ((t+1)!/2)^m`: coverings of `K_{(t+1)m}` by
/// t-paths with the `m` blocks taken in order. This overcounts the Hermite
/// moment by `m!` and is kept only for reporting.
pub fn hermite_moment_ordered_blocks(t: u64, m: u64) -> BigInt {
    let parts = vec![t + 1; m as usize];
    let per_block: BigInt = factorial(t + 1) / 2u32;
    multinomial(&parts) * per_block.pow(m as u32)
}

/// Weighted Łukasiewicz steps: unit upsteps of weight 1 and downsteps
/// `(1, -d)` (with `d = 0` a horizontal step) whose weight depends on the
/// height the step leaves from.
///
/// A downstep of size `d` leaving height `h` carries the recurrence
/// coefficient of `P_{h-d}` in the equation for `P_{h+1}`. `shift` offsets
/// every height argument, which is how excursions at higher levels are
/// weighted.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct WeightSchema {
    schedule: RecurrenceSchedule,
    shift: usize,
}

impl WeightSchema {
    pub fn for_family(family: Family) -> Self {
        WeightSchema {
            schedule: schedule(family),
            shift: 0,
        }
    }

    pub fn family(&self) -> Family {
        self.schedule.family()
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    /// Same weights with every height argument increased by `by`.
    pub fn shifted(&self, by: usize) -> Self {
        WeightSchema {
            schedule: self.schedule,
            shift: self.shift + by,
        }
    }

    /// Downstep sizes in increasing order (`0` is a horizontal step).
    pub fn downsteps(&self) -> Vec<usize> {
        self.schedule.drops().into_iter().map(|d| d - 1).collect()
    }

    /// Weight of a downstep of `size` leaving `height`.
    pub fn weight(&self, height: usize, size: usize) -> BigInt {
        self.schedule.coefficient(height + self.shift, size + 1)
    }
}

/// Total weight of Łukasiewicz paths of length `n` from height 0 to
/// `end_height` that never go below the axis.
pub fn lukasiewicz_moment(schema: &WeightSchema, n: usize, end_height: usize) -> BigInt {
    lukasiewicz_series(schema, n, end_height).swap_remove(n)
}

/// [`lukasiewicz_moment`] for every length `0 ..= n_max`.
pub fn lukasiewicz_series(schema: &WeightSchema, n_max: usize, end_height: usize) -> Vec<BigInt> {
    let downs = schema.downsteps();
    let mut weights: Vec<Vec<BigInt>> = (0..=n_max)
        .map(|h| downs.iter().map(|&d| schema.weight(h, d)).collect())
        .collect();
    weights.shrink_to_fit();

    let mut layer = vec![BigInt::zero(); n_max + 2];
    layer[0] = BigInt::one();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(layer.get(end_height).cloned().unwrap_or_default());
    for _ in 0..n_max {
        let mut next = vec![BigInt::zero(); n_max + 2];
        for (h, w) in layer.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if h + 1 < next.len() {
                next[h + 1] += w;
            }
            for (i, &d) in downs.iter().enumerate() {
                if d <= h && !weights[h][i].is_zero() {
                    next[h - d] += w * &weights[h][i];
                }
            }
        }
        layer = next;
        out.push(layer.get(end_height).cloned().unwrap_or_default());
    }
    out
}

/// `L(p) = sum_n coeff_n(p) mu_n`.
pub fn apply_functional(family: Family, p: &Polynomial) -> BigInt {
    let Some(deg) = p.degree() else {
        return BigInt::zero();
    };
    let mu = MomentSequence::closed_form(family, deg);
    apply_with_moments(&mu.values, p)
}

pub(crate) fn apply_with_moments(moments: &[BigInt], p: &Polynomial) -> BigInt {
    p.coeffs()
        .iter()
        .zip(moments)
        .map(|(c, m)| c * m)
        .sum()
}

/// Gram matrix, row `m` and column `n` holding `L(P_m P_n)`.
pub fn gram(family: Family, m_max: usize, n_max: usize) -> Vec<Vec<BigInt>> {
    let polys = generate(family, m_max.max(n_max));
    let mu = MomentSequence::closed_form(family, m_max + n_max);
    (0..=m_max)
        .map(|m| {
            (0..=n_max)
                .map(|n| apply_with_moments(&mu.values, &(&polys[m] * &polys[n])))
                .collect()
        })
        .collect()
}

/// The value `L(P_{tn} P_n)` predicted for each family.
pub fn l2_norm(family: Family, n: usize) -> BigInt {
    let t = family.order() as u64;
    let n64 = n as u64;
    match family.kind() {
        FamilyKind::ChebyshevU => BigInt::one(),
        FamilyKind::ChebyshevT if n == 0 => BigInt::one(),
        FamilyKind::ChebyshevT => BigInt::from(t + 1),
        FamilyKind::Hermite => {
            let value = BigRational::new(BigInt::from(t + 1), BigInt::from(2)).pow(n as i32)
                * BigRational::from_integer(factorial(n64 * t));
            assert!(value.is_integer(), "Hermite norm is integral");
            value.to_integer()
        }
        FamilyKind::Laguerre => {
            let k = t.div_ceil(2);
            (0..n64)
                .map(|i| (binomial((n64 - i) * t, t as i64) * binomial(t, k as i64) * factorial(k).pow(2)).pow(2))
                .product::<BigInt>()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(kind: FamilyKind, t: u32) -> Family {
        Family::new(kind, t).unwrap()
    }

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_moment(fam(FamilyKind::ChebyshevU, 2), 9), b(12));
        assert_eq!(closed_form_moment(fam(FamilyKind::ChebyshevT, 1), 4), b(6));
        assert_eq!(closed_form_moment(fam(FamilyKind::Hermite, 1), 4), b(3));
        assert_eq!(closed_form_moment(fam(FamilyKind::Hermite, 3), 8), b(5040));
        assert_eq!(closed_form_moment(fam(FamilyKind::Laguerre, 1), 3), b(6));
        assert_eq!(closed_form_moment(fam(FamilyKind::Laguerre, 3), 4), b(288));
        for kind in FamilyKind::ALL {
            assert!(closed_form_moment(fam(kind, 1), 0).is_one());
        }
    }

    #[test]
    fn hermite_ordered_block_count_overcounts() {
        assert_eq!(hermite_moment_ordered_blocks(3, 2), b(10080));
        assert_eq!(hermite_moment_ordered_blocks(3, 2) / 2, closed_form_moment(fam(FamilyKind::Hermite, 3), 8));
    }

    #[test]
    fn aeration() {
        for t in 1..=3u32 {
            for kind in FamilyKind::ALL {
                let Ok(f) = Family::new(kind, t) else { continue };
                for n in 0..=16 {
                    if n % f.lattice_step() != 0 {
                        assert!(closed_form_moment(f, n).is_zero());
                    }
                }
            }
        }
    }

    /// Brute force over all step words.
    fn brute_paths(schema: &WeightSchema, n: usize, end: usize) -> BigInt {
        let downs = schema.downsteps();
        let letters = downs.len() + 1;
        let mut total = BigInt::zero();
        let count = letters.pow(n as u32);
        for mut code in 0..count {
            let mut h: i64 = 0;
            let mut w = BigInt::one();
            let mut ok = true;
            for _ in 0..n {
                let letter = code % letters;
                code /= letters;
                if letter == 0 {
                    h += 1;
                } else {
                    let d = downs[letter - 1] as i64;
                    if h < d {
                        ok = false;
                        break;
                    }
                    w *= schema.weight(h as usize, d as usize);
                    h -= d;
                }
            }
            if ok && h == end as i64 {
                total += w;
            }
        }
        total
    }

    #[test]
    fn lukasiewicz_examples() {
        let su = WeightSchema::for_family(fam(FamilyKind::ChebyshevU, 2));
        assert_eq!(lukasiewicz_moment(&su, 6, 0), b(3));
        let st = WeightSchema::for_family(fam(FamilyKind::ChebyshevT, 2));
        assert_eq!(lukasiewicz_moment(&st, 6, 0), b(15));
        for kind in FamilyKind::ALL {
            let s = WeightSchema::for_family(fam(kind, 1));
            assert!(lukasiewicz_moment(&s, 0, 0).is_one());
        }
    }

    #[test]
    fn lukasiewicz_dp_matches_brute_force() {
        for kind in FamilyKind::ALL {
            for t in [1u32, 2, 3] {
                let Ok(f) = Family::new(kind, t) else { continue };
                let s = WeightSchema::for_family(f);
                for n in 0..=9 {
                    for end in 0..=2 {
                        assert_eq!(lukasiewicz_moment(&s, n, end), brute_paths(&s, n, end), "{f} n={n} end={end}");
                    }
                    assert_eq!(lukasiewicz_moment(&s.shifted(2), n, 0), brute_paths(&s.shifted(2), n, 0));
                }
            }
        }
    }

    #[test]
    fn closed_form_equals_paths() {
        for kind in FamilyKind::ALL {
            for t in [1u32, 2, 3] {
                let Ok(f) = Family::new(kind, t) else { continue };
                let s = WeightSchema::for_family(f);
                let paths = lukasiewicz_series(&s, 4 * (t as usize + 1), 0);
                for (n, v) in paths.iter().enumerate() {
                    assert_eq!(*v, closed_form_moment(f, n), "{f} n={n}");
                }
            }
        }
    }

    #[test]
    fn functional_examples() {
        let x3 = Polynomial::monomial(b(1), 3);
        assert!(apply_functional(fam(FamilyKind::ChebyshevU, 2), &x3).is_one());
        for kind in FamilyKind::ALL {
            assert!(apply_functional(fam(kind, 1), &Polynomial::one()).is_one());
        }
        let p = Polynomial::from_coeffs(vec![b(-1), b(0), b(1)]);
        assert!(apply_functional(fam(FamilyKind::Hermite, 1), &p).is_zero());
        assert!(apply_functional(fam(FamilyKind::Hermite, 1), &Polynomial::zero()).is_zero());
    }

    #[test]
    fn gram_examples() {
        assert_eq!(gram(fam(FamilyKind::ChebyshevU, 2), 2, 1)[2][1], b(1));
        assert_eq!(gram(fam(FamilyKind::ChebyshevT, 2), 2, 1)[2][1], b(3));
        assert_eq!(gram(fam(FamilyKind::Hermite, 1), 1, 1)[1][1], b(1));
        assert_eq!(gram(fam(FamilyKind::Laguerre, 1), 1, 1)[1][1], b(1));
    }

    #[test]
    fn gram_band_and_norms() {
        for kind in FamilyKind::ALL {
            for t in [1u32, 2, 3] {
                let Ok(f) = Family::new(kind, t) else { continue };
                let g = gram(f, 9, 3);
                for (m, row) in g.iter().enumerate() {
                    for (n, v) in row.iter().enumerate() {
                        if m > t as usize * n {
                            assert!(v.is_zero(), "{f} ({m},{n}) = {v}");
                        }
                        if m == t as usize * n {
                            assert_eq!(*v, l2_norm(f, n), "{f} norm n={n}");
                        }
                    }
                }
            }
        }
    }
}
