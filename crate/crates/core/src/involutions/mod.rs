//! Sign-reversing involutions whose fixed points count `L(P_{n_1} ... P_{n_k})`.
//!
//! Hermite and Laguerre configurations are enumerated by their vertex blocks
//! by default: every block stands for all `(t+1)!/2` (respectively
//! `(k!)^2`) t-paths on it, and the involution never looks at the order
//! inside a block. [`Mode::Expanded`] lists every path instead.

mod config;
mod recurrence;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

pub use config::{Color, Component, Layout, ProductConfiguration};
pub use recurrence::{cheby1_recurrence_bijection, cheby1_recurrence_inverse, RecurrenceCase};

use crate::bijections::{all_step_words, all_uniform_partitions, path_to_partition};
use crate::coverings::{enumerate_coverings, Covering, HostGraph};
use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::family::{generate, Family, FamilyKind};
use crate::moments::apply_functional;
use crate::poly::Polynomial;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    #[default]
    Multiplicity,
    Expanded,
}

/// Largest `n_1 + ... + n_k` accepted for enumeration.
pub fn enumeration_limit(family: Family, mode: Mode) -> usize {
    match (family.kind(), mode) {
        (FamilyKind::ChebyshevU, _) => 18,
        (FamilyKind::ChebyshevT, _) => 14,
        (FamilyKind::Hermite, Mode::Multiplicity) => 14,
        (FamilyKind::Hermite, Mode::Expanded) => 8,
        (FamilyKind::Laguerre, Mode::Multiplicity) => 6,
        (FamilyKind::Laguerre, Mode::Expanded) => 4,
    }
}

/// Apply the involution after validating `c`. Fixed points come back unchanged.
pub fn involute(family: Family, c: &ProductConfiguration) -> Result<ProductConfiguration> {
    let layout = Layout::new(family, &c.sizes);
    c.validate(&layout)?;
    Ok(involute_in(&layout, c))
}

pub fn is_fixed_point(family: Family, c: &ProductConfiguration) -> Result<bool> {
    Ok(involute(family, c)? == *c)
}

fn involute_in(layout: &Layout, c: &ProductConfiguration) -> ProductConfiguration {
    let toggle = |i: usize| {
        let mut out = c.clone();
        out.components[i].color = out.components[i].color.toggled();
        out
    };
    match layout.family().kind() {
        FamilyKind::ChebyshevU => match c.components.iter().position(|b| layout.is_flat(&b.vertices)) {
            Some(i) => toggle(i),
            None => c.clone(),
        },
        FamilyKind::Hermite | FamilyKind::Laguerre => {
            match c.components.iter().position(|p| layout.is_homogeneous(&p.vertices)) {
                Some(i) => toggle(i),
                None => c.clone(),
            }
        }
        FamilyKind::ChebyshevT => involute_cycles(layout, c),
    }
}

/// Scan cycles in order and vertices by label for the first path start or
/// marked vertex followed by `t` unmarked fixed vertices, and swap the two.
fn involute_cycles(layout: &Layout, c: &ProductConfiguration) -> ProductConfiguration {
    let t = layout.family().order() as usize;
    let count = layout.vertex_count();
    let mut starts = vec![None; count + 1];
    let mut covered = vec![false; count + 1];
    for (i, p) in c.components.iter().enumerate() {
        starts[p.vertices[0] as usize] = Some(i);
        for &v in &p.vertices {
            covered[v as usize] = true;
        }
    }
    let mut marked = vec![false; count + 1];
    for &v in &c.marked {
        marked[v as usize] = true;
    }
    for v in 1..=count as u32 {
        if let Some(i) = starts[v as usize] {
            let mut out = c.clone();
            out.components.remove(i);
            out.marked.push(v);
            out.marked.sort_unstable();
            return out;
        }
        if !marked[v as usize] || layout.sizes()[layout.part_of(v)] < t + 1 {
            continue;
        }
        let mut path = vec![v];
        for _ in 0..t {
            path.push(layout.successor(*path.last().expect("nonempty")));
        }
        if path[1..].iter().all(|&u| !covered[u as usize] && !marked[u as usize]) {
            let mut out = c.clone();
            out.marked.retain(|&u| u != v);
            out.components.push(Component::new(path, Color::Black));
            out.components.sort_by_key(Component::min_vertex);
            return out;
        }
    }
    c.clone()
}

/// How many configurations each enumerated one stands for.
fn multiplicity(family: Family, mode: Mode, blocks: usize) -> BigInt {
    if mode == Mode::Expanded {
        return BigInt::one();
    }
    let t = family.order() as u64;
    let per_block = match family.kind() {
        FamilyKind::ChebyshevU | FamilyKind::ChebyshevT => return BigInt::one(),
        FamilyKind::Hermite => factorial(t + 1) / 2u32,
        FamilyKind::Laguerre => factorial(t.div_ceil(2)).pow(2),
    };
    per_block.pow(blocks as u32)
}

/// Visit every configuration for `sizes` in a fixed order.
pub fn for_each_configuration<F>(family: Family, sizes: &[usize], mode: Mode, mut visit: F) -> Result<()>
where
    F: FnMut(&ProductConfiguration),
{
    let layout = Layout::new(family, sizes);
    let total = layout.total();
    let limit = enumeration_limit(family, mode);
    if total > limit {
        return Err(Error::BoundExceeded(format!(
            "{family} configurations need n_1 + ... + n_k <= {limit}, got {total}"
        )));
    }
    let t = family.order();
    let emit = |components: Vec<Component>, marked: Vec<u32>, visit: &mut F| {
        visit(&ProductConfiguration::new(sizes.to_vec(), components, marked));
    };
    match family.kind() {
        FamilyKind::ChebyshevU => {
            if !total.is_multiple_of(t as usize + 1) {
                return Ok(());
            }
            for word in all_step_words(t, total) {
                let partition = path_to_partition(&word, t)?;
                let blocks: Vec<Vec<Vec<u32>>> = partition.blocks().iter().map(|b| vec![b.clone()]).collect();
                let eligible: Vec<bool> = partition.blocks().iter().map(|b| layout.is_flat(b)).collect();
                for_each_colored(&blocks, &eligible, &mut |c| emit(c, Vec::new(), &mut visit));
            }
        }
        FamilyKind::Hermite => {
            if !total.is_multiple_of(t as usize + 1) {
                return Ok(());
            }
            for partition in all_uniform_partitions(total as u32, t as usize + 1) {
                let blocks: Vec<Vec<Vec<u32>>> = partition
                    .blocks()
                    .iter()
                    .map(|b| match mode {
                        Mode::Multiplicity => vec![b.clone()],
                        Mode::Expanded => b
                            .iter()
                            .copied()
                            .permutations(b.len())
                            .filter(|p| p[0] < p[p.len() - 1])
                            .collect(),
                    })
                    .collect();
                let eligible: Vec<bool> = partition.blocks().iter().map(|b| layout.is_homogeneous(b)).collect();
                for_each_colored(&blocks, &eligible, &mut |c| emit(c, Vec::new(), &mut visit));
            }
        }
        FamilyKind::Laguerre => {
            let k = (t as usize).div_ceil(2);
            if !total.is_multiple_of(k) {
                return Ok(());
            }
            let m = total / k;
            let sides = all_uniform_partitions(total as u32, k);
            let shift = total as u32;
            for left in &sides {
                for right in &sides {
                    for perm in (0..m).permutations(m) {
                        let pairs: Vec<(Vec<u32>, Vec<u32>)> = left
                            .blocks()
                            .iter()
                            .zip(&perm)
                            .map(|(l, &j)| (l.clone(), right.blocks()[j].iter().map(|&r| r + shift).collect()))
                            .collect();
                        let blocks: Vec<Vec<Vec<u32>>> = pairs
                            .iter()
                            .map(|(l, r)| match mode {
                                Mode::Multiplicity => vec![interleave(l, r)],
                                Mode::Expanded => l
                                    .iter()
                                    .copied()
                                    .permutations(k)
                                    .cartesian_product(r.iter().copied().permutations(k).collect_vec())
                                    .map(|(lo, ro)| interleave(&lo, &ro))
                                    .collect(),
                            })
                            .collect();
                        let eligible: Vec<bool> = blocks.iter().map(|b| layout.is_homogeneous(&b[0])).collect();
                        for_each_colored(&blocks, &eligible, &mut |c| emit(c, Vec::new(), &mut visit));
                    }
                }
            }
        }
        FamilyKind::ChebyshevT => {
            let per_part: Vec<Vec<Covering>> = sizes
                .iter()
                .map(|&n| enumerate_coverings(HostGraph::Cycle(n), t, false))
                .collect();
            let mut chosen = Vec::with_capacity(sizes.len());
            for_each_product(&per_part, &mut chosen, &mut |coverings: &[&Covering]| {
                let mut components = Vec::new();
                let mut fixed = Vec::new();
                for (part, cov) in coverings.iter().enumerate() {
                    for p in &cov.paths {
                        let vertices = p.iter().map(|&v| layout.vertex(part, v as usize)).collect();
                        components.push(Component::new(vertices, Color::Black));
                    }
                    fixed.extend(cov.fixed.iter().map(|&v| layout.vertex(part, v as usize)));
                }
                if fixed.len() % (t as usize + 1) != 0 {
                    return;
                }
                for marked in fixed.iter().copied().combinations(fixed.len() / (t as usize + 1)) {
                    emit(components.clone(), marked, &mut visit);
                }
            });
        }
    }
    Ok(())
}

fn interleave(left: &[u32], right: &[u32]) -> Vec<u32> {
    left.iter().zip(right).flat_map(|(&l, &r)| [l, r]).collect()
}

fn for_each_product<'a, T>(lists: &'a [Vec<T>], acc: &mut Vec<&'a T>, f: &mut dyn FnMut(&[&'a T])) {
    match lists.split_first() {
        None => f(acc),
        Some((head, rest)) => {
            for item in head {
                acc.push(item);
                for_each_product(rest, acc, f);
                acc.pop();
            }
        }
    }
}

/// Every choice of one vertex sequence per block, times every black/dashed
/// coloring of the eligible blocks.
fn for_each_colored(blocks: &[Vec<Vec<u32>>], eligible: &[bool], f: &mut dyn FnMut(Vec<Component>)) {
    let flexible: Vec<usize> = (0..blocks.len()).filter(|&i| eligible[i]).collect();
    let mut acc = Vec::with_capacity(blocks.len());
    for_each_product(blocks, &mut acc, &mut |choice: &[&Vec<u32>]| {
        for mask in 0u64..(1 << flexible.len()) {
            let mut components: Vec<Component> =
                choice.iter().map(|v| Component::new((*v).clone(), Color::Dashed)).collect();
            for (bit, &i) in flexible.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    components[i].color = Color::Black;
                }
            }
            f(components);
        }
    });
}

/// Outcome of running the involution over every configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub mode: Mode,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub configurations: BigInt,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub signed_sum: BigInt,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub fixed_points: BigInt,
    /// `L` applied to the product of the polynomials.
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub expected: BigInt,
    /// Applying the involution twice gave back every configuration.
    pub involution_ok: bool,
    /// Every non-fixed configuration was paired with one of opposite weight.
    pub reversal_ok: bool,
    /// Every fixed point had weight `+1`.
    pub fixed_weights_ok: bool,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.involution_ok
            && self.reversal_ok
            && self.fixed_weights_ok
            && self.signed_sum == self.fixed_points
            && self.fixed_points == self.expected
    }
}

pub fn involution_report(family: Family, sizes: &[usize], mode: Mode) -> Result<InvolutionReport> {
    let layout = Layout::new(family, sizes);
    let mut report = InvolutionReport {
        family,
        sizes: sizes.to_vec(),
        mode,
        configurations: BigInt::zero(),
        signed_sum: BigInt::zero(),
        fixed_points: BigInt::zero(),
        expected: product_functional(family, sizes),
        involution_ok: true,
        reversal_ok: true,
        fixed_weights_ok: true,
    };
    for_each_configuration(family, sizes, mode, |c| {
        let mult = multiplicity(family, mode, c.components.len());
        let w = c.weight(family);
        report.configurations += &mult;
        if w > 0 {
            report.signed_sum += &mult;
        } else {
            report.signed_sum -= &mult;
        }
        let image = involute_in(&layout, c);
        if image == *c {
            report.fixed_points += &mult;
            report.fixed_weights_ok &= w == 1;
        } else {
            report.reversal_ok &= image.weight(family) == -w;
            report.involution_ok &= involute_in(&layout, &image) == *c;
        }
    })?;
    Ok(report)
}

/// The functional value realized as a count of fixed points.
pub fn functional_by_involution(family: Family, sizes: &[usize]) -> Result<BigInt> {
    Ok(involution_report(family, sizes, Mode::Multiplicity)?.fixed_points)
}

fn product_functional(family: Family, sizes: &[usize]) -> BigInt {
    let polys = generate(family, sizes.iter().copied().max().unwrap_or(0));
    let product = sizes.iter().fold(Polynomial::one(), |acc, &n| &acc * &polys[n]);
    apply_functional(family, &product)
}
