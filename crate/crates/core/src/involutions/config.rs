//! Configurations on a disjoint union of host graphs, one part per factor of
//! a product of polynomials.

use serde::Serialize;

use crate::coverings::HostGraph;
use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    /// Weight `-1`; only allowed inside a single part.
    Black,
    /// Weight `+1`.
    Dashed,
}

impl Color {
    pub fn toggled(self) -> Self {
        match self {
            Color::Black => Color::Dashed,
            Color::Dashed => Color::Black,
        }
    }
}

/// A t-path, or for ChebyshevU a block of the underlying set partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Component {
    pub vertices: Vec<u32>,
    pub color: Color,
}

impl Component {
    pub fn new(vertices: Vec<u32>, color: Color) -> Self {
        Component { vertices, color }
    }

    pub(crate) fn min_vertex(&self) -> u32 {
        self.vertices.iter().copied().min().unwrap_or(0)
    }
}

/// Global vertex numbering of `[n_1] ⊔ ... ⊔ [n_k]`.
///
/// Part `i` takes the labels after those of parts `0..i`. On bipartite
/// hosts all left vertices come first, then all right vertices in the same
/// part order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    family: Family,
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    total: usize,
    part: Vec<usize>,
}

impl Layout {
    pub fn new(family: Family, sizes: &[usize]) -> Self {
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut total = 0;
        for &n in sizes {
            offsets.push(total);
            total += n;
        }
        let mut part = vec![usize::MAX];
        for (i, &n) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, n));
        }
        if family.kind() == FamilyKind::Laguerre {
            part.extend_from_within(1..);
        }
        Layout {
            family,
            sizes: sizes.to_vec(),
            offsets,
            total,
            part,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `n_1 + ... + n_k`.
    pub fn total(&self) -> usize {
        self.total
    }

    pub fn vertex_count(&self) -> usize {
        self.part.len() - 1
    }

    pub fn hosts(&self) -> Vec<HostGraph> {
        let host = match self.family.kind() {
            FamilyKind::ChebyshevU => HostGraph::Path,
            FamilyKind::ChebyshevT => HostGraph::Cycle,
            FamilyKind::Hermite => HostGraph::Complete,
            FamilyKind::Laguerre => HostGraph::CompleteBipartite,
        };
        self.sizes.iter().map(|&n| host(n)).collect()
    }

    /// Global label of local vertex `local` (1-based) of `part`; the left
    /// side on bipartite hosts.
    pub fn vertex(&self, part: usize, local: usize) -> u32 {
        assert!(local >= 1 && local <= self.sizes[part], "local vertex out of range");
        (self.offsets[part] + local) as u32
    }

    /// Right vertex `local` of bipartite `part`.
    pub fn right(&self, part: usize, local: usize) -> u32 {
        self.vertex(part, local) + self.total as u32
    }

    pub fn part_of(&self, v: u32) -> usize {
        self.part[v as usize]
    }

    pub fn is_left(&self, v: u32) -> bool {
        v as usize <= self.total
    }

    /// Next vertex of the same cycle in increasing cyclic order.
    pub(crate) fn successor(&self, v: u32) -> u32 {
        let p = self.part_of(v);
        let local = v as usize - self.offsets[p];
        (self.offsets[p] + local % self.sizes[p] + 1) as u32
    }

    pub(crate) fn is_homogeneous(&self, vertices: &[u32]) -> bool {
        let p = self.part_of(vertices[0]);
        vertices.iter().all(|&v| self.part_of(v) == p)
    }

    /// Homogeneous with consecutive labels.
    pub(crate) fn is_flat(&self, vertices: &[u32]) -> bool {
        self.is_homogeneous(vertices) && vertices.windows(2).all(|w| w[1] == w[0] + 1)
    }
}

/// A configuration for one of the product-functional identities.
///
/// Components are kept ordered by smallest vertex and `marked` is sorted.
/// Only ChebyshevT uses `marked`: every uncovered vertex is fixed, and a
/// `1/(t+1)` share of them is marked.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ProductConfiguration {
    pub sizes: Vec<usize>,
    pub components: Vec<Component>,
    pub marked: Vec<u32>,
}

impl ProductConfiguration {
    pub fn new(sizes: Vec<usize>, mut components: Vec<Component>, mut marked: Vec<u32>) -> Self {
        components.sort_by_key(Component::min_vertex);
        marked.sort_unstable();
        ProductConfiguration {
            sizes,
            components,
            marked,
        }
    }

    /// `+1` or `-1`.
    pub fn weight(&self, family: Family) -> i32 {
        let negative = match family.kind() {
            FamilyKind::ChebyshevT => self.components.len(),
            _ => self.components.iter().filter(|c| c.color == Color::Black).count(),
        };
        if negative % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn validate(&self, layout: &Layout) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfiguration(msg));
        if self.sizes != layout.sizes {
            return bad("sizes do not match the layout".into());
        }
        let family = layout.family;
        let t = family.order() as usize;
        let count = layout.vertex_count();
        let mut covered = vec![false; count + 1];
        for c in &self.components {
            if c.vertices.len() != t + 1 {
                return bad(format!("component {:?} does not have {} vertices", c.vertices, t + 1));
            }
            for &v in &c.vertices {
                if v == 0 || v as usize > count || std::mem::replace(&mut covered[v as usize], true) {
                    return bad(format!("vertex {v} is out of range or covered twice"));
                }
            }
        }
        if self
            .components
            .windows(2)
            .any(|w| w[0].min_vertex() > w[1].min_vertex())
        {
            return bad("components are not ordered by smallest vertex".into());
        }
        let complete = covered[1..].iter().all(|&c| c);
        if family.kind() != FamilyKind::ChebyshevT {
            if !complete {
                return bad("some vertex is not covered".into());
            }
            if !self.marked.is_empty() {
                return bad("only cycle configurations carry marks".into());
            }
            if let Some(c) = self
                .components
                .iter()
                .find(|c| c.color == Color::Black && !layout.is_homogeneous(&c.vertices))
            {
                return bad(format!("black component {:?} spans parts", c.vertices));
            }
        }
        match family.kind() {
            FamilyKind::ChebyshevU => {
                if self.components.iter().any(|c| c.vertices.windows(2).any(|w| w[0] >= w[1])) {
                    return bad("blocks must list vertices in increasing order".into());
                }
                if let Some(c) = self
                    .components
                    .iter()
                    .find(|c| c.color == Color::Black && !layout.is_flat(&c.vertices))
                {
                    return bad(format!("black block {:?} is not flat", c.vertices));
                }
                let arcs: Vec<(u32, u32)> = self
                    .components
                    .iter()
                    .flat_map(|c| c.vertices.windows(2).map(|w| (w[0], w[1])))
                    .collect();
                for &(a, b) in &arcs {
                    if arcs.iter().any(|&(c, d)| a < c && c < b && b < d) {
                        return bad("blocks cross".into());
                    }
                }
            }
            FamilyKind::Hermite => {
                if let Some(c) = self.components.iter().find(|c| c.vertices[0] > c.vertices[t]) {
                    return bad(format!("path {:?} must start at its smaller end", c.vertices));
                }
            }
            FamilyKind::Laguerre => {
                for c in &self.components {
                    let alternating = c
                        .vertices
                        .iter()
                        .enumerate()
                        .all(|(i, &v)| layout.is_left(v) == (i % 2 == 0));
                    if !alternating {
                        return bad(format!(
                            "path {:?} must alternate sides starting on the left",
                            c.vertices
                        ));
                    }
                }
            }
            FamilyKind::ChebyshevT => {
                for c in &self.components {
                    if c.color != Color::Black {
                        return bad("cycle paths are always black".into());
                    }
                    let n = layout.sizes[layout.part_of(c.vertices[0])];
                    let segment = c.vertices.windows(2).all(|w| w[1] == layout.successor(w[0]));
                    if n < t + 1 || !segment {
                        return bad(format!(
                            "path {:?} is not a cyclic segment listed from its start",
                            c.vertices
                        ));
                    }
                }
                let fixed = covered[1..].iter().filter(|&&c| !c).count();
                if self.marked.windows(2).any(|w| w[0] >= w[1])
                    || self.marked.iter().any(|&v| v == 0 || v as usize > count || covered[v as usize])
                {
                    return bad("marks must sit on distinct fixed vertices".into());
                }
                if fixed != self.marked.len() * (t + 1) {
                    return bad(format!(
                        "{} of {fixed} fixed vertices are marked, expected a 1/{} share",
                        self.marked.len(),
                        t + 1
                    ));
                }
            }
        }
        Ok(())
    }
}
