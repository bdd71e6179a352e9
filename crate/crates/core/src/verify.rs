//! Aggregated pass/fail checks over bounded ranges, shared by the CLI and
//! the acceptance suite.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use serde::Serialize;

use crate::bijections::{
    all_step_words, all_trees, noncrossing_partitions, partition_to_path, partition_to_tree,
    path_to_partition, tree_to_partition,
};
use crate::coverings::{count_complete_coverings, count_coverings, enumerate_coverings, matching_polynomial, HostGraph};
use crate::error::{Error, Result};
use crate::exact::fuss_catalan;
use crate::family::{fibonacci, generate, Family, FamilyKind};
use crate::gfcheck::{check, hermite_ordered_block_discrepancy, Identity};
use crate::involutions::{
    cheby1_recurrence_bijection, cheby1_recurrence_inverse, enumeration_limit, involution_report, Mode,
    RecurrenceCase,
};
use crate::moments::{closed_form_moment, gram, l2_norm, lukasiewicz_moment, WeightSchema};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Recurrence,
    Orthogonality,
    Involution,
    Bijection,
    Gf,
    All,
}

impl CheckKind {
    pub const EACH: [CheckKind; 5] = [
        CheckKind::Recurrence,
        CheckKind::Orthogonality,
        CheckKind::Involution,
        CheckKind::Bijection,
        CheckKind::Gf,
    ];
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CheckKind::Recurrence => "recurrence",
            CheckKind::Orthogonality => "orthogonality",
            CheckKind::Involution => "involution",
            CheckKind::Bijection => "bijection",
            CheckKind::Gf => "gf",
            CheckKind::All => "all",
        };
        f.write_str(s)
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::EACH
            .into_iter()
            .chain([CheckKind::All])
            .find(|k| k.to_string() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: CheckKind,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub t: u32,
    pub bound: usize,
    pub outcomes: Vec<CheckOutcome>,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("verify reports always serialize")
    }
}

/// Size limits for enumerating host graphs.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HostBounds {
    pub path: usize,
    pub cycle: usize,
    pub complete: usize,
    pub bipartite: usize,
}

impl HostBounds {
    /// Defaults capped by `bound`.
    pub fn capped(t: u32, bound: usize) -> Self {
        HostBounds {
            path: bound.min(14),
            cycle: bound.min(14),
            complete: bound.min(10),
            bipartite: bound.min(if t == 1 { 5 } else { 4 }),
        }
    }
}

/// Families defined at order `t`.
pub fn families(t: u32) -> Vec<Family> {
    FamilyKind::ALL
        .into_iter()
        .filter_map(|k| Family::new(k, t).ok())
        .collect()
}

fn host_for(kind: FamilyKind, n: usize) -> HostGraph {
    match kind {
        FamilyKind::ChebyshevU => HostGraph::Path(n),
        FamilyKind::ChebyshevT => HostGraph::Cycle(n),
        FamilyKind::Hermite => HostGraph::Complete(n),
        FamilyKind::Laguerre => HostGraph::CompleteBipartite(n),
    }
}

/// First `n` where the recurrence and covering enumeration disagree.
pub fn recurrence_mismatch(family: Family, n_max: usize) -> Option<usize> {
    let polys = generate(family, n_max);
    let t = family.order();
    (0..=n_max).find(|&n| {
        let enumerated = match family.kind() {
            FamilyKind::Laguerre => matching_polynomial(HostGraph::CompleteBipartite(n), t).halve_powers(),
            kind => Some(matching_polynomial(host_for(kind, n), t)),
        };
        enumerated.as_ref() != Some(&polys[n])
    })
}

/// Gram entries with `m > t n` that are nonzero, for `m <= m_max`, `n <= n_max`.
pub fn band_violations(family: Family, m_max: usize, n_max: usize) -> Vec<(usize, usize)> {
    let t = family.order() as usize;
    let g = gram(family, m_max, n_max);
    let mut out = Vec::new();
    for (m, row) in g.iter().enumerate() {
        for (n, v) in row.iter().enumerate() {
            if m > t * n && *v != BigInt::from(0) {
                out.push((m, n));
            }
        }
    }
    out
}

/// `n` with `n t <= m_max` where `L(P_{tn} P_n)` differs from [`l2_norm`].
pub fn norm_violations(family: Family, m_max: usize) -> Vec<usize> {
    let t = family.order() as usize;
    let n_max = m_max / t;
    let g = gram(family, m_max, n_max);
    (0..=n_max).filter(|&n| g[t * n][n] != l2_norm(family, n)).collect()
}

/// Largest `n` at which moments are also counted by brute force.
pub fn combinatorial_moment_limit(family: Family) -> usize {
    let t = family.order() as usize;
    match family.kind() {
        FamilyKind::ChebyshevU | FamilyKind::ChebyshevT => 4 * (t + 1),
        FamilyKind::Hermite if t >= 3 => 8,
        FamilyKind::Hermite => 4 * (t + 1),
        FamilyKind::Laguerre if t == 1 => 8,
        FamilyKind::Laguerre => 6,
    }
}

/// The `n`-th moment counted directly: noncrossing partitions for
/// ChebyshevU, markings of `n` isolated vertices for ChebyshevT, complete
/// coverings for Hermite and Laguerre.
pub fn combinatorial_moment(family: Family, n: usize) -> BigInt {
    let t = family.order();
    match family.kind() {
        FamilyKind::ChebyshevU => BigInt::from(noncrossing_partitions(n as u32, t).len()),
        FamilyKind::ChebyshevT => {
            let step = t as usize + 1;
            if !n.is_multiple_of(step) {
                return BigInt::from(0);
            }
            BigInt::from((0..n).combinations(n / step).count())
        }
        FamilyKind::Hermite => count_complete_coverings(HostGraph::Complete(n), t),
        FamilyKind::Laguerre => count_complete_coverings(HostGraph::CompleteBipartite(n), t),
    }
}

/// First `n <= n_max` where the closed form, the path count and (within
/// [`combinatorial_moment_limit`]) the direct count disagree.
pub fn moment_mismatch(family: Family, n_max: usize) -> Option<usize> {
    let schema = WeightSchema::for_family(family);
    let limit = combinatorial_moment_limit(family);
    (0..=n_max).find(|&n| {
        let closed = closed_form_moment(family, n);
        closed != lukasiewicz_moment(&schema, n, 0) || (n <= limit && closed != combinatorial_moment(family, n))
    })
}

/// Check both bijections exhaustively on `(t+1)m` points.
pub fn bijections_hold(t: u32, m: usize) -> Result<bool> {
    let n = (m * (t as usize + 1)) as u32;
    let expected = fuss_catalan(m as u64, t as u64);
    let codomain: HashSet<_> = noncrossing_partitions(n, t).into_iter().collect();
    let trees = all_trees(t, m);
    let words = all_step_words(t, n as usize);
    let mut from_trees = HashSet::new();
    for tree in &trees {
        let p = tree_to_partition(tree, t)?;
        if partition_to_tree(&p, t)? != *tree {
            return Ok(false);
        }
        from_trees.insert(p);
    }
    let mut from_words = HashSet::new();
    for w in &words {
        let p = path_to_partition(w, t)?;
        if partition_to_path(&p, t)? != *w {
            return Ok(false);
        }
        from_words.insert(p);
    }
    Ok(BigInt::from(codomain.len()) == expected
        && BigInt::from(trees.len()) == expected
        && BigInt::from(words.len()) == expected
        && from_trees == codomain
        && from_words == codomain)
}

/// Exhaustive check of the ChebyshevT recurrence bijection at `n`.
pub fn recurrence_bijection_holds(t: u32, n: usize) -> Result<bool> {
    let target: HashSet<_> = enumerate_coverings(HostGraph::Cycle(n + 1), t, false).into_iter().collect();
    let mut images = HashSet::new();
    for host in [HostGraph::Cycle(n), HostGraph::Cycle(n - t as usize)] {
        for c in enumerate_coverings(host, t, false) {
            let (img, case) = cheby1_recurrence_bijection(t, n, &c)?;
            let (sign, power) = c.weight();
            let expected = match case {
                RecurrenceCase::A | RecurrenceCase::B => (sign, power + 1),
                RecurrenceCase::C | RecurrenceCase::D => (-sign, power),
            };
            if img.weight() != expected || cheby1_recurrence_inverse(t, n, &img)? != (c, case) {
                return Ok(false);
            }
            if !images.insert(img) {
                return Ok(false);
            }
        }
    }
    Ok(images == target)
}

/// Size tuples with two or three factors and `n_1 + ... + n_k <= total`.
pub fn size_tuples(total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..=total {
        for b in 0..=total - a {
            out.push(vec![a, b]);
            for c in 0..=total - a - b {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Largest `n_1 + ... + n_k` checked for `family` when at most
/// `vertices` vertices are allowed in total.
pub fn involution_total(family: Family, vertices: usize) -> usize {
    let per_size = if family.kind() == FamilyKind::Laguerre { 2 } else { 1 };
    (vertices / per_size).min(enumeration_limit(family, Mode::Multiplicity))
}

pub fn verify(kind: CheckKind, t: u32, bound: usize, trunc: Option<usize>) -> Result<VerifyReport> {
    if t == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut report = VerifyReport {
        t,
        bound,
        outcomes: Vec::new(),
        notes: Vec::new(),
    };
    let kinds: Vec<CheckKind> = match kind {
        CheckKind::All => CheckKind::EACH.to_vec(),
        k => vec![k],
    };
    for k in kinds {
        match k {
            CheckKind::Recurrence => verify_recurrence(&mut report, t, bound),
            CheckKind::Orthogonality => verify_orthogonality(&mut report, t),
            CheckKind::Involution => verify_involutions(&mut report, t, bound)?,
            CheckKind::Bijection => verify_bijections(&mut report, t, bound)?,
            CheckKind::Gf => verify_gf(&mut report, t, trunc)?,
            CheckKind::All => unreachable!("expanded above"),
        }
    }
    Ok(report)
}

fn push(report: &mut VerifyReport, check: CheckKind, name: String, passed: bool, detail: String) {
    report.outcomes.push(CheckOutcome {
        check,
        name,
        passed,
        detail,
    });
}

fn verify_recurrence(report: &mut VerifyReport, t: u32, bound: usize) {
    let b = HostBounds::capped(t, bound);
    for family in families(t) {
        let n_max = match family.kind() {
            FamilyKind::ChebyshevU => b.path,
            FamilyKind::ChebyshevT => b.cycle,
            FamilyKind::Hermite => b.complete,
            FamilyKind::Laguerre => b.bipartite,
        };
        let bad = recurrence_mismatch(family, n_max);
        let detail = match bad {
            None => format!("n <= {n_max}"),
            Some(n) => format!("mismatch at n = {n}"),
        };
        push(report, CheckKind::Recurrence, format!("{family} recurrence = coverings"), bad.is_none(), detail);
    }
    let n_max = b.path;
    let ok = fibonacci(t, n_max).is_ok_and(|f| {
        (0..=n_max).all(|n| f[n] == count_coverings(HostGraph::Path(n), t))
    });
    push(report, CheckKind::Recurrence, "fibonacci = path coverings".into(), ok, format!("n <= {n_max}"));
    let n_max = b.cycle.min(10);
    let ok = (t as usize + 1..=n_max).all(|n| recurrence_bijection_holds(t, n).unwrap_or(false));
    push(
        report,
        CheckKind::Recurrence,
        "cycle recurrence bijection".into(),
        ok,
        format!("{t} < n <= {n_max}"),
    );
}

fn verify_orthogonality(report: &mut VerifyReport, t: u32) {
    let m_max = 9.max(3 * t as usize);
    for family in families(t) {
        let band = band_violations(family, m_max, 3);
        push(
            report,
            CheckKind::Orthogonality,
            format!("{family} band"),
            band.is_empty(),
            format!("m <= {m_max}, n <= 3, violations {band:?}"),
        );
        let norms = norm_violations(family, 9.max(t as usize));
        push(
            report,
            CheckKind::Orthogonality,
            format!("{family} norms"),
            norms.is_empty(),
            format!("violations at n = {norms:?}"),
        );
        let n_max = 4 * (t as usize + 1);
        let bad = moment_mismatch(family, n_max);
        push(
            report,
            CheckKind::Orthogonality,
            format!("{family} moments"),
            bad.is_none(),
            format!(
                "closed form = paths for n <= {n_max}, = direct count for n <= {}{}",
                combinatorial_moment_limit(family).min(n_max),
                bad.map(|n| format!("; mismatch at n = {n}")).unwrap_or_default()
            ),
        );
    }
    let (ordered, exact) = hermite_ordered_block_discrepancy(t, 2);
    report.notes.push(format!(
        "Hermite mu_{}: the ordered-block product gives {ordered}, but K_{} has {exact} complete coverings; {exact} is used",
        2 * (t + 1),
        2 * (t + 1)
    ));
}

fn verify_involutions(report: &mut VerifyReport, t: u32, bound: usize) -> Result<()> {
    for family in families(t) {
        let total = involution_total(family, bound);
        let mut failures = Vec::new();
        let mut count = 0;
        for sizes in size_tuples(total) {
            count += 1;
            if !involution_report(family, &sizes, Mode::Multiplicity)?.passed() {
                failures.push(sizes);
            }
        }
        push(
            report,
            CheckKind::Involution,
            format!("{family} involution"),
            failures.is_empty(),
            format!("{count} size tuples with total <= {total}, failures {failures:?}"),
        );
    }
    Ok(())
}

fn verify_bijections(report: &mut VerifyReport, t: u32, bound: usize) -> Result<()> {
    let m_max = bound / (t as usize + 1);
    let mut ok = true;
    for m in 0..=m_max {
        ok &= bijections_hold(t, m)?;
    }
    push(
        report,
        CheckKind::Bijection,
        "tree and path bijections".into(),
        ok,
        format!("up to {} points", m_max * (t as usize + 1)),
    );
    Ok(())
}

fn verify_gf(report: &mut VerifyReport, t: u32, trunc: Option<usize>) -> Result<()> {
    for id in Identity::ALL.into_iter().filter(|i| i.applies_to(t)) {
        let order = trunc.unwrap_or(id.default_order());
        let r = check(id, t, order)?;
        let detail = match r.first_failure {
            None => format!("N = {order}"),
            Some(i) => format!("N = {order}, first failure at z^{i}"),
        };
        if let Some(note) = &r.note {
            report.notes.push(format!("{id}: {note}"));
        }
        push(report, CheckKind::Gf, id.to_string(), r.passed(), detail);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let r = verify(CheckKind::All, 1, 8, Some(12)).unwrap();
        assert!(r.passed(), "{r:#?}");
        assert!(r.outcomes.iter().any(|o| o.check == CheckKind::Gf));
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn check_kind_parses() {
        assert_eq!("gf".parse::<CheckKind>().unwrap(), CheckKind::Gf);
        assert_eq!("ALL".parse::<CheckKind>().unwrap(), CheckKind::All);
        assert!("nope".parse::<CheckKind>().is_err());
    }

    #[test]
    fn tuples_have_two_or_three_factors() {
        let tuples = size_tuples(2);
        assert!(tuples.iter().all(|s| (2..=3).contains(&s.len()) && s.iter().sum::<usize>() <= 2));
        assert_eq!(tuples.len(), 6 + 10);
    }

    #[test]
    fn combinatorial_moments_match_small_values() {
        let t2 = Family::new(FamilyKind::ChebyshevT, 2).unwrap();
        assert_eq!(combinatorial_moment(t2, 6), BigInt::from(15));
        let h3 = Family::new(FamilyKind::Hermite, 3).unwrap();
        assert_eq!(combinatorial_moment(h3, 8), BigInt::from(5040));
    }
}
