//! Bijections between (t+1)-ary trees, Łukasiewicz words with downsteps of
//! size t, and noncrossing set partitions whose blocks all have size t+1.

use std::fmt;

use crate::error::{Error, Result};

/// A set partition of `[n]`. Blocks are sorted internally and ordered by
/// their smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: u32,
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(n: u32, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n as usize + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > n || std::mem::replace(&mut seen[v as usize], true) {
                    return Err(Error::InvalidPartition(format!(
                        "element {v} is out of range or repeated"
                    )));
                }
            }
        }
        if let Some(v) = (1..=n).find(|&v| !seen[v as usize]) {
            return Err(Error::InvalidPartition(format!("element {v} is not covered")));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    pub fn empty() -> Self {
        SetPartition {
            n: 0,
            blocks: Vec::new(),
        }
    }

    pub fn ground_size(&self) -> u32 {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    /// Arcs join consecutive elements of a block; `(a, b)` and `(c, d)`
    /// cross when `a < c < b < d`.
    pub fn is_noncrossing(&self) -> bool {
        let arcs: Vec<(u32, u32)> = self
            .blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        arcs.iter().all(|&(a, b)| {
            arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    pub fn uniform_block_size(&self) -> Option<usize> {
        let first = self.blocks.first()?.len();
        self.blocks.iter().all(|b| b.len() == first).then_some(first)
    }

    fn check_shape(&self, t: u32) -> Result<()> {
        if let Some(b) = self.blocks.iter().find(|b| b.len() != t as usize + 1) {
            return Err(Error::InvalidPartition(format!(
                "block {b:?} does not have {} elements",
                t + 1
            )));
        }
        if !self.is_noncrossing() {
            return Err(Error::InvalidPartition("blocks cross".into()));
        }
        Ok(())
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            let inner: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", inner.join(","))?;
        }
        f.write_str("}")
    }
}

/// A rooted plane tree in which every vertex is a leaf or has exactly `t+1`
/// ordered children. A bare root plays the role of the empty tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KAryTree {
    children: Vec<KAryTree>,
}

impl KAryTree {
    pub fn leaf() -> Self {
        KAryTree { children: Vec::new() }
    }

    pub fn node(children: Vec<KAryTree>) -> Self {
        KAryTree { children }
    }

    pub fn children(&self) -> &[KAryTree] {
        &self.children
    }

    pub fn vertex_count(&self) -> usize {
        1 + self.children.iter().map(KAryTree::vertex_count).sum::<usize>()
    }

    pub fn internal_count(&self) -> usize {
        let own = usize::from(!self.children.is_empty());
        own + self.children.iter().map(KAryTree::internal_count).sum::<usize>()
    }

    fn check_arity(&self, t: u32) -> Result<()> {
        if !self.children.is_empty() && self.children.len() != t as usize + 1 {
            return Err(Error::InvalidTree(format!(
                "a vertex has {} children, expected 0 or {}",
                self.children.len(),
                t + 1
            )));
        }
        self.children.iter().try_for_each(|c| c.check_arity(t))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    /// The step `(1, -d)`; `Down(0)` is a horizontal step.
    Down(usize),
}

/// A lattice word. Displayed with `U`, `H` and `D`; downstep sizes are not
/// shown.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepWord {
    steps: Vec<Step>,
}

impl StepWord {
    pub fn new(steps: Vec<Step>) -> Self {
        StepWord { steps }
    }

    /// Parse `U`/`H`/`D` letters, reading `D` as a downstep of size `t`.
    pub fn parse(s: &str, t: u32) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'H' => Ok(Step::Down(0)),
                'D' => Ok(Step::Down(t as usize)),
                _ => Err(Error::MalformedWord(format!("unexpected letter `{c}`"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(StepWord::new)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights after each step, or `None` if the word dips below zero.
    pub fn heights(&self) -> Option<Vec<usize>> {
        let mut h = 0usize;
        self.steps
            .iter()
            .map(|s| {
                h = match *s {
                    Step::Up => h + 1,
                    Step::Down(d) => h.checked_sub(d)?,
                };
                Some(h)
            })
            .collect()
    }

    pub fn final_height(&self) -> Option<usize> {
        self.heights().map(|h| h.last().copied().unwrap_or(0))
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down(0) => "H",
                Step::Down(_) => "D",
            })?;
        }
        Ok(())
    }
}

/// Number the vertices depth-first, left to right, with the root as 0; each
/// set of siblings becomes a block.
pub fn tree_to_partition(tree: &KAryTree, t: u32) -> Result<SetPartition> {
    if t == 0 {
        return Err(Error::ZeroOrder);
    }
    tree.check_arity(t)?;
    fn walk(node: &KAryTree, next: &mut u32, blocks: &mut Vec<Vec<u32>>) {
        if node.children.is_empty() {
            return;
        }
        let slot = blocks.len();
        blocks.push(Vec::with_capacity(node.children.len()));
        for child in &node.children {
            *next += 1;
            blocks[slot].push(*next);
            walk(child, next, blocks);
        }
    }
    let mut next = 0;
    let mut blocks = Vec::new();
    walk(tree, &mut next, &mut blocks);
    SetPartition::new(next, blocks)
}

/// Inverse of [`tree_to_partition`]: the block with smallest element `p`
/// hangs below the vertex labelled `p - 1`.
pub fn partition_to_tree(partition: &SetPartition, t: u32) -> Result<KAryTree> {
    if t == 0 {
        return Err(Error::ZeroOrder);
    }
    partition.check_shape(t)?;
    let n = partition.n as usize;
    let mut below: Vec<Option<usize>> = vec![None; n + 1];
    for (i, b) in partition.blocks.iter().enumerate() {
        below[b[0] as usize - 1] = Some(i);
    }
    fn build(v: usize, below: &[Option<usize>], blocks: &[Vec<u32>]) -> KAryTree {
        match below[v] {
            None => KAryTree::leaf(),
            Some(i) => KAryTree::node(
                blocks[i]
                    .iter()
                    .map(|&c| build(c as usize, below, blocks))
                    .collect(),
            ),
        }
    }
    let tree = build(0, &below, &partition.blocks);
    if tree.vertex_count() != n + 1 || tree_to_partition(&tree, t)? != *partition {
        return Err(Error::InvalidPartition(
            "blocks do not nest as sibling sets of a tree".into(),
        ));
    }
    Ok(tree)
}

/// Read the word left to right: an upstep at position `k` makes `k` a
/// candidate, a downstep at `k` closes the block of `k` and the `t` largest
/// candidates.
pub fn path_to_partition(word: &StepWord, t: u32) -> Result<SetPartition> {
    if t == 0 {
        return Err(Error::ZeroOrder);
    }
    let t = t as usize;
    let mut open: Vec<u32> = Vec::new();
    let mut blocks = Vec::new();
    for (i, step) in word.steps.iter().enumerate() {
        let k = i as u32 + 1;
        match *step {
            Step::Up => open.push(k),
            Step::Down(d) if d == t => {
                if open.len() < t {
                    return Err(Error::MalformedWord(format!(
                        "step {k} goes below the axis"
                    )));
                }
                let mut block = open.split_off(open.len() - t);
                block.push(k);
                blocks.push(block);
            }
            Step::Down(d) => {
                return Err(Error::MalformedWord(format!(
                    "step {k} has size {d}, expected {t}"
                )))
            }
        }
    }
    if !open.is_empty() {
        return Err(Error::MalformedWord(format!(
            "word ends at height {}",
            open.len()
        )));
    }
    SetPartition::new(word.len() as u32, blocks)
}

/// Inverse of [`path_to_partition`]: `D` at every block maximum, `U`
/// elsewhere.
pub fn partition_to_path(partition: &SetPartition, t: u32) -> Result<StepWord> {
    if t == 0 {
        return Err(Error::ZeroOrder);
    }
    partition.check_shape(t)?;
    let mut steps = vec![Step::Up; partition.n as usize];
    for b in &partition.blocks {
        steps[*b.last().expect("blocks are nonempty") as usize - 1] = Step::Down(t as usize);
    }
    Ok(StepWord::new(steps))
}

/// All (t+1)-ary trees with `internal` internal vertices, in a fixed order.
pub fn all_trees(t: u32, internal: usize) -> Vec<KAryTree> {
    let arity = t as usize + 1;
    let mut trees: Vec<Vec<KAryTree>> = vec![vec![KAryTree::leaf()]];
    for m in 1..=internal {
        let mut out = Vec::new();
        for forest in forests(arity, m - 1, &trees) {
            out.push(KAryTree::node(forest));
        }
        trees.push(out);
    }
    trees.swap_remove(internal)
}

fn forests(len: usize, total: usize, trees: &[Vec<KAryTree>]) -> Vec<Vec<KAryTree>> {
    if len == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for head in &trees[first] {
            for mut rest in forests(len - 1, total - first, trees) {
                rest.insert(0, head.clone());
                out.push(rest);
            }
        }
    }
    out
}

/// All words of `len` steps over `U` and `(1, -t)` that stay nonnegative and
/// end on the axis.
pub fn all_step_words(t: u32, len: usize) -> Vec<StepWord> {
    let t = t as usize;
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(len);
    fn go(steps: &mut Vec<Step>, h: usize, len: usize, t: usize, out: &mut Vec<StepWord>) {
        let left = len - steps.len();
        if left == 0 {
            if h == 0 {
                out.push(StepWord::new(steps.clone()));
            }
            return;
        }
        if h < (left - 1) * t {
            steps.push(Step::Up);
            go(steps, h + 1, len, t, out);
            steps.pop();
        }
        if h >= t {
            steps.push(Step::Down(t));
            go(steps, h - t, len, t, out);
            steps.pop();
        }
    }
    go(&mut steps, 0, len, t, &mut out);
    out
}

/// Every set partition of `[n]` into blocks of `size` elements, crossing or
/// not.
pub fn all_uniform_partitions(n: u32, size: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    if size == 0 || !(n as usize).is_multiple_of(size) {
        return out;
    }
    fn go(rest: Vec<u32>, size: usize, blocks: &mut Vec<Vec<u32>>, n: u32, out: &mut Vec<SetPartition>) {
        let Some((&head, tail)) = rest.split_first() else {
            out.push(SetPartition::new(n, blocks.clone()).expect("blocks partition [n]"));
            return;
        };
        for_each_subset(tail, size - 1, &mut Vec::new(), &mut |chosen| {
            let mut block = vec![head];
            block.extend_from_slice(chosen);
            let remaining: Vec<u32> = tail.iter().copied().filter(|v| !chosen.contains(v)).collect();
            blocks.push(block);
            go(remaining, size, blocks, n, out);
            blocks.pop();
        });
    }
    go((1..=n).collect(), size, &mut Vec::new(), n, &mut out);
    out
}

fn for_each_subset(items: &[u32], k: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
    if k == 0 {
        f(acc);
        return;
    }
    for i in 0..items.len() {
        if items.len() - i < k {
            break;
        }
        acc.push(items[i]);
        for_each_subset(&items[i + 1..], k - 1, acc, f);
        acc.pop();
    }
}

/// Noncrossing partitions of `[n]` into (t+1)-blocks, by filtering
/// [`all_uniform_partitions`].
pub fn noncrossing_partitions(n: u32, t: u32) -> Vec<SetPartition> {
    all_uniform_partitions(n, t as usize + 1)
        .into_iter()
        .filter(SetPartition::is_noncrossing)
        .collect()
}
