//! Host graphs and exhaustive enumeration of coverings by vertex-disjoint t-paths.
//!
//! Enumeration branches on the least undecided vertex: it is either fixed or
//! becomes the smallest vertex of some t-path. Every covering therefore
//! appears exactly once, in a deterministic order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// Vertices are numbered `1..=vertex_count()`. For `CompleteBipartite(n)`,
/// left vertex `i` is `i` and right vertex `j` is `n + j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "n")]
pub enum HostGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// The balanced graph `K_{n,n}`.
    CompleteBipartite(usize),
}

impl HostGraph {
    pub fn vertex_count(&self) -> usize {
        match *self {
            HostGraph::Path(n) | HostGraph::Cycle(n) | HostGraph::Complete(n) => n,
            HostGraph::CompleteBipartite(n) => 2 * n,
        }
    }

    /// The size parameter `n`.
    pub fn size(&self) -> usize {
        match *self {
            HostGraph::Path(n)
            | HostGraph::Cycle(n)
            | HostGraph::Complete(n)
            | HostGraph::CompleteBipartite(n) => n,
        }
    }

    /// Whether `a` and `b` are joined by at least one edge.
    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        if a == b {
            return false;
        }
        match *self {
            HostGraph::Path(_) => a.abs_diff(b) == 1,
            HostGraph::Cycle(n) => {
                let n = n as u32;
                n >= 2 && (a.abs_diff(b) == 1 || a.abs_diff(b) == n - 1)
            }
            HostGraph::Complete(_) => true,
            HostGraph::CompleteBipartite(n) => {
                let n = n as u32;
                (a <= n) != (b <= n)
            }
        }
    }

    /// Human-readable vertex label (`L2`/`R3` on bipartite hosts).
    pub fn vertex_label(&self, v: u32) -> String {
        match *self {
            HostGraph::CompleteBipartite(n) if v as usize > n => format!("R{}", v as usize - n),
            HostGraph::CompleteBipartite(_) => format!("L{v}"),
            _ => v.to_string(),
        }
    }
}

impl fmt::Display for HostGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HostGraph::Path(n) => write!(f, "path({n})"),
            HostGraph::Cycle(n) => write!(f, "cycle({n})"),
            HostGraph::Complete(n) => write!(f, "K{n}"),
            HostGraph::CompleteBipartite(n) => write!(f, "K{n},{n}"),
        }
    }
}

/// A covering of a host graph by vertex-disjoint t-paths and fixed vertices.
///
/// Paths on cycles are listed from their first vertex in increasing cyclic
/// order, so the `t+1` distinct t-paths of `Cycle(t+1)` stay distinct. On
/// every other host a path starts at its endpoint with the smaller label.
/// Paths are ordered by smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Covering {
    pub host: HostGraph,
    pub paths: Vec<Vec<u32>>,
    pub fixed: Vec<u32>,
}

impl Covering {
    /// Validate a covering of `host` by t-paths.
    pub fn new(host: HostGraph, t: u32, mut paths: Vec<Vec<u32>>) -> Result<Self> {
        let n = host.vertex_count();
        let mut seen = vec![false; n + 1];
        for path in &paths {
            if path.len() != t as usize + 1 {
                return Err(Error::InvalidConfiguration(format!(
                    "path {path:?} does not have {t} edges"
                )));
            }
            for &v in path {
                if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::InvalidConfiguration(format!(
                        "vertex {v} is out of range or repeated"
                    )));
                }
            }
            let ok = match host {
                HostGraph::Cycle(c) => path
                    .windows(2)
                    .all(|w| w[1] as usize == (w[0] as usize % c) + 1),
                _ => path.windows(2).all(|w| host.adjacent(w[0], w[1])) && path[0] < path[t as usize],
            };
            if !ok {
                return Err(Error::InvalidConfiguration(format!(
                    "{path:?} is not a canonical t-path of {host}"
                )));
            }
        }
        paths.sort_by_key(|p| p.iter().copied().min());
        let fixed = (1..=n as u32).filter(|&v| !seen[v as usize]).collect();
        Ok(Covering { host, paths, fixed })
    }

    pub fn is_complete(&self) -> bool {
        self.fixed.is_empty()
    }

    /// `(-1)^{#paths} x^{#fixed}` as (sign, power).
    pub fn weight(&self) -> (i32, usize) {
        let sign = if self.paths.len().is_multiple_of(2) { 1 } else { -1 };
        (sign, self.fixed.len())
    }
}

struct Enumerator<'a, F> {
    host: HostGraph,
    t: usize,
    complete_only: bool,
    decided: Vec<bool>,
    paths: Vec<Vec<u32>>,
    fixed: Vec<u32>,
    visit: &'a mut F,
}

impl<F: FnMut(&[Vec<u32>], &[u32])> Enumerator<'_, F> {
    fn run(&mut self) {
        let Some(v) = (1..self.decided.len()).find(|&i| !self.decided[i]) else {
            (self.visit)(&self.paths, &self.fixed);
            return;
        };
        let v = v as u32;
        self.decided[v as usize] = true;
        if !self.complete_only {
            self.fixed.push(v);
            self.run();
            self.fixed.pop();
        }
        for path in self.paths_through(v) {
            for &u in &path {
                self.decided[u as usize] = true;
            }
            self.paths.push(path);
            self.run();
            let path = self.paths.pop().expect("pushed above");
            for &u in &path[..] {
                if u != v {
                    self.decided[u as usize] = false;
                }
            }
        }
        self.decided[v as usize] = false;
    }

    fn free(&self, u: u32) -> bool {
        !self.decided[u as usize]
    }

    /// Canonical t-paths whose vertices are `v` plus undecided vertices.
    fn paths_through(&self, v: u32) -> Vec<Vec<u32>> {
        let t = self.t;
        match self.host {
            HostGraph::Path(n) => {
                let last = v as usize + t;
                if last <= n && (v + 1..=last as u32).all(|u| self.free(u)) {
                    vec![(v..=last as u32).collect()]
                } else {
                    Vec::new()
                }
            }
            HostGraph::Cycle(n) => {
                if n < t + 1 {
                    return Vec::new();
                }
                let mut out = Vec::new();
                for back in (0..=t).rev() {
                    let start = (v as usize + n - 1 - back) % n + 1;
                    let seq: Vec<u32> = (0..=t).map(|i| ((start - 1 + i) % n + 1) as u32).collect();
                    if seq.iter().all(|&u| u == v || self.free(u)) {
                        out.push(seq);
                    }
                }
                out
            }
            HostGraph::Complete(_) | HostGraph::CompleteBipartite(_) => {
                let mut out = Vec::new();
                let mut used = vec![false; self.decided.len()];
                used[v as usize] = true;
                for left_len in 0..=t {
                    let mut left = Vec::new();
                    self.arms(v, left_len, t - left_len, &mut left, &mut used, &mut out);
                }
                out
            }
        }
    }

    // Grow the backward arm to `left_len` edges, then the forward arm.
    fn arms(
        &self,
        v: u32,
        left_len: usize,
        right_len: usize,
        left: &mut Vec<u32>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if left.len() < left_len {
            let tip = *left.last().unwrap_or(&v);
            for u in 1..self.decided.len() as u32 {
                if self.free(u) && !used[u as usize] && self.host.adjacent(tip, u) {
                    used[u as usize] = true;
                    left.push(u);
                    self.arms(v, left_len, right_len, left, used, out);
                    left.pop();
                    used[u as usize] = false;
                }
            }
            return;
        }
        let mut seq: Vec<u32> = left.iter().rev().copied().collect();
        seq.push(v);
        self.forward(right_len, &mut seq, used, out);
    }

    fn forward(&self, remaining: usize, seq: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            if seq[0] < seq[seq.len() - 1] {
                out.push(seq.clone());
            }
            return;
        }
        let tip = seq[seq.len() - 1];
        for u in 1..self.decided.len() as u32 {
            if self.free(u) && !used[u as usize] && self.host.adjacent(tip, u) {
                used[u as usize] = true;
                seq.push(u);
                self.forward(remaining - 1, seq, used, out);
                seq.pop();
                used[u as usize] = false;
            }
        }
    }
}

/// Visit every covering of `host` by t-paths, as borrowed `(paths, fixed)` slices.
pub fn for_each_covering<F>(host: HostGraph, t: u32, complete_only: bool, mut visit: F)
where
    F: FnMut(&[Vec<u32>], &[u32]),
{
    assert!(t >= 1, "t-paths need at least one edge");
    let mut e = Enumerator {
        host,
        t: t as usize,
        complete_only,
        decided: vec![false; host.vertex_count() + 1],
        paths: Vec::new(),
        fixed: Vec::new(),
        visit: &mut visit,
    };
    e.decided[0] = true;
    e.run();
}

/// All coverings of `host` by t-paths, each exactly once, in enumeration order.
pub fn enumerate_coverings(host: HostGraph, t: u32, complete_only: bool) -> Vec<Covering> {
    let mut out = Vec::new();
    for_each_covering(host, t, complete_only, |paths, fixed| {
        out.push(Covering {
            host,
            paths: paths.to_vec(),
            fixed: fixed.to_vec(),
        })
    });
    out
}

/// `sum over coverings of (-1)^{#paths} x^{#fixed}`.
pub fn matching_polynomial(host: HostGraph, t: u32) -> Polynomial {
    let mut coeffs = vec![0i64; host.vertex_count() + 1];
    for_each_covering(host, t, false, |paths, fixed| {
        coeffs[fixed.len()] += if paths.len() % 2 == 0 { 1 } else { -1 };
    });
    Polynomial::from_coeffs(coeffs.into_iter().map(BigInt::from).collect())
}

/// Matching polynomial of `K_{n,n}` with `x^2` replaced by `x`; needs odd `t`.
pub fn substituted_matching_polynomial(n: usize, t: u32) -> Result<Polynomial> {
    if t.is_multiple_of(2) {
        return Err(Error::EvenLaguerreOrder(t));
    }
    matching_polynomial(HostGraph::CompleteBipartite(n), t)
        .halve_powers()
        .ok_or_else(|| Error::InvalidArgument("odd power in bipartite matching polynomial".into()))
}

/// Number of coverings by t-paths alone.
pub fn count_complete_coverings(host: HostGraph, t: u32) -> BigInt {
    let mut count: u64 = 0;
    for_each_covering(host, t, true, |_, _| count += 1);
    BigInt::from(count)
}

/// Number of coverings with every t-path given weight `+1`.
pub fn count_coverings(host: HostGraph, t: u32) -> BigInt {
    let mut count = BigInt::zero();
    for_each_covering(host, t, false, |_, _| count += BigInt::one());
    count
}
