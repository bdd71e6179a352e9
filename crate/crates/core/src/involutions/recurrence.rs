//! The four-case bijection from coverings of `Cycle(n) ⊔ Cycle(n-t)` onto
//! coverings of `Cycle(n+1)`.
//!
//! A covering of `Cycle(m)` is handled as its edge word: entry `i` says
//! whether edge `(i+1, i+2)` (the last one being `(m, 1)`) lies in a t-path.
//! Inserting edges "behind vertex 1" appends them to the word.

use serde::Serialize;

use crate::coverings::{Covering, HostGraph};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceCase {
    /// From `Cycle(n)`, edge `(1,2)` free: append a free edge.
    A,
    /// From `Cycle(n)`, edge `(1,2)` in a path: a free edge goes in front of that path.
    B,
    /// From `Cycle(n-t)`, edge `(1,2)` free: append a free edge and a t-path.
    C,
    /// From `Cycle(n-t)`, edge `(1,2)` in a path with `k` edges behind vertex 1:
    /// append `t-k` path edges, a free edge and `k` path edges.
    D,
}

fn edge_word(c: &Covering, t: usize) -> Vec<bool> {
    let n = c.host.vertex_count();
    let mut word = vec![false; n];
    for p in &c.paths {
        for i in 0..t {
            word[(p[0] as usize - 1 + i) % n] = true;
        }
    }
    word
}

fn from_edge_word(word: &[bool], t: usize) -> Result<Covering> {
    let n = word.len();
    let host = HostGraph::Cycle(n);
    if word.iter().all(|&e| e) && n > 0 {
        return Err(Error::InvalidConfiguration("every edge lies in a path".into()));
    }
    let mut paths = Vec::new();
    for s in 0..n {
        if !word[s] || word[(s + n - 1) % n] {
            continue;
        }
        let run = (0..n).take_while(|&i| word[(s + i) % n]).count();
        if run != t {
            return Err(Error::InvalidConfiguration(format!(
                "a run of {run} path edges is not a single t-path"
            )));
        }
        paths.push((0..=t).map(|i| ((s + i) % n + 1) as u32).collect());
    }
    Covering::new(host, t as u32, paths)
}

/// Index where the run of path edges through edge 0 starts.
fn run_start(word: &[bool]) -> usize {
    let n = word.len();
    let mut s = 0;
    while word[(s + n - 1) % n] {
        s = (s + n - 1) % n;
    }
    s
}

fn check_regime(t: u32, n: usize) -> Result<()> {
    if t == 0 {
        return Err(Error::ZeroOrder);
    }
    if n <= t as usize {
        return Err(Error::InvalidArgument(format!(
            "the recurrence bijection needs n > t, got n = {n}, t = {t}"
        )));
    }
    Ok(())
}

/// Map a covering of `Cycle(n)` or `Cycle(n-t)` to a covering of `Cycle(n+1)`.
pub fn cheby1_recurrence_bijection(t: u32, n: usize, c: &Covering) -> Result<(Covering, RecurrenceCase)> {
    check_regime(t, n)?;
    let tu = t as usize;
    let mut w = edge_word(c, tu);
    let case = if c.host == HostGraph::Cycle(n) {
        if !w[0] {
            w.push(false);
            RecurrenceCase::A
        } else {
            let s = run_start(&w);
            if s == 0 {
                w.push(false);
            } else {
                w.insert(s, false);
            }
            RecurrenceCase::B
        }
    } else if c.host == HostGraph::Cycle(n - tu) {
        if !w[0] {
            w.push(false);
            w.extend(std::iter::repeat_n(true, tu));
            RecurrenceCase::C
        } else {
            let s = run_start(&w);
            let k = if s == 0 { 0 } else { w.len() - s };
            w.extend(std::iter::repeat_n(true, tu - k));
            w.push(false);
            w.extend(std::iter::repeat_n(true, k));
            RecurrenceCase::D
        }
    } else {
        return Err(Error::InvalidConfiguration(format!(
            "expected a covering of cycle({n}) or cycle({}), got {}",
            n - tu,
            c.host
        )));
    };
    Ok((from_edge_word(&w, tu)?, case))
}

/// Inverse of [`cheby1_recurrence_bijection`] on coverings of `Cycle(n+1)`.
pub fn cheby1_recurrence_inverse(t: u32, n: usize, c: &Covering) -> Result<(Covering, RecurrenceCase)> {
    check_regime(t, n)?;
    if c.host != HostGraph::Cycle(n + 1) {
        return Err(Error::InvalidConfiguration(format!(
            "expected a covering of cycle({}), got {}",
            n + 1,
            c.host
        )));
    }
    let tu = t as usize;
    let mut w = edge_word(c, tu);
    let len = w.len();
    let case = if !w[0] {
        if w[len - 1] {
            w.truncate(n - tu);
            RecurrenceCase::C
        } else {
            w.pop();
            RecurrenceCase::A
        }
    } else {
        let s = run_start(&w);
        if w[(s + len - 2) % len] {
            w.truncate(n - tu);
            RecurrenceCase::D
        } else {
            w.remove((s + len - 1) % len);
            RecurrenceCase::B
        }
    };
    Ok((from_edge_word(&w, tu)?, case))
}
