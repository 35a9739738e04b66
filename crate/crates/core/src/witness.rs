//! Path and cycle witness structures and their verification.

use std::fmt;

use crate::graph::Graph;
use crate::set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Path,
    Cycle,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Path => "path",
            Shape::Cycle => "cycle",
        })
    }
}

/// An ordered partition `(W_1, ..., W_ℓ)` of the vertex set certifying that
/// the graph contracts to `P_ℓ` or `C_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WitnessStructure {
    pub shape: Shape,
    pub parts: Vec<VertexSet>,
}

impl WitnessStructure {
    pub fn new(shape: Shape, parts: Vec<VertexSet>) -> Self {
        Self { shape, parts }
    }

    pub fn path(parts: Vec<VertexSet>) -> Self {
        Self::new(Shape::Path, parts)
    }

    pub fn cycle(parts: Vec<VertexSet>) -> Self {
        Self::new(Shape::Cycle, parts)
    }

    /// All-singleton structure in vertex order.
    pub fn identity(shape: Shape, n: usize) -> Self {
        Self::new(shape, (0..n).map(VertexSet::singleton).collect())
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of contractions: `Σ (|W_i| - 1)`.
    pub fn cost(&self) -> usize {
        self.parts.iter().map(|p| p.len().saturating_sub(1)).sum()
    }

    pub fn first(&self) -> &VertexSet {
        &self.parts[0]
    }

    pub fn last(&self) -> &VertexSet {
        &self.parts[self.parts.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self::new(self.shape, parts)
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    /// Cycle structures rotated and reflected so that the part holding the
    /// smallest vertex comes first, followed by whichever neighbouring part
    /// has the smaller minimum. Path structures are oriented so the first
    /// part has the smaller minimum. Two structures describing the same
    /// contraction compare equal after this.
    pub fn canonical(&self) -> Self {
        let mins: Vec<usize> = self
            .parts
            .iter()
            .map(|p| p.first().unwrap_or(usize::MAX))
            .collect();
        let l = self.parts.len();
        if l < 2 {
            return self.clone();
        }
        match self.shape {
            Shape::Path => {
                if mins[0] <= mins[l - 1] {
                    self.clone()
                } else {
                    self.reversed()
                }
            }
            Shape::Cycle => {
                let start = (0..l).min_by_key(|&i| mins[i]).expect("non-empty");
                let forward = mins[(start + 1) % l] <= mins[(start + l - 1) % l];
                let parts = (0..l)
                    .map(|j| {
                        let i = if forward {
                            (start + j) % l
                        } else {
                            (start + l - j) % l
                        };
                        self.parts[i].clone()
                    })
                    .collect();
                Self::new(Shape::Cycle, parts)
            }
        }
    }
}

/// The first condition a candidate witness structure violates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoParts,
    EmptyPart(usize),
    VertexOutOfRange(usize),
    Overlap { vertex: usize },
    Uncovered { vertex: usize },
    DisconnectedPart(usize),
    MissingAdjacency(usize, usize),
    ForbiddenAdjacency(usize, usize),
    CycleTooShort(usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Part indices are reported 1-based to match the text format.
        match *self {
            Violation::NoParts => write!(f, "no parts"),
            Violation::EmptyPart(i) => write!(f, "part {} is empty", i + 1),
            Violation::VertexOutOfRange(v) => write!(f, "vertex {v} is not in the graph"),
            Violation::Overlap { vertex } => write!(f, "vertex {vertex} is in two parts"),
            Violation::Uncovered { vertex } => write!(f, "vertex {vertex} is in no part"),
            Violation::DisconnectedPart(i) => write!(f, "part {} is not connected", i + 1),
            Violation::MissingAdjacency(i, j) => {
                write!(f, "consecutive parts {} and {} are not adjacent", i + 1, j + 1)
            }
            Violation::ForbiddenAdjacency(i, j) => {
                write!(f, "non-consecutive parts {} and {} are adjacent", i + 1, j + 1)
            }
            Violation::CycleTooShort(l) => write!(f, "a cycle needs at least 3 parts, got {l}"),
        }
    }
}

/// Checks every witness-structure invariant of `w` against `g`.
pub fn verify_witness(g: &Graph, w: &WitnessStructure) -> Result<(), Violation> {
    let n = g.vertex_count();
    let l = w.parts.len();
    if l == 0 {
        return Err(Violation::NoParts);
    }
    if w.shape == Shape::Cycle && l < 3 {
        return Err(Violation::CycleTooShort(l));
    }
    let mut seen = VertexSet::new();
    for (i, p) in w.parts.iter().enumerate() {
        if p.is_empty() {
            return Err(Violation::EmptyPart(i));
        }
        if let Some(v) = p.last().filter(|&v| v >= n) {
            return Err(Violation::VertexOutOfRange(v));
        }
        if let Some(vertex) = p.intersection(&seen).first() {
            return Err(Violation::Overlap { vertex });
        }
        seen.union_with(p);
    }
    if let Some(vertex) = g.vertices().difference(&seen).first() {
        return Err(Violation::Uncovered { vertex });
    }
    for (i, p) in w.parts.iter().enumerate() {
        if !g.is_connected_set(p) {
            return Err(Violation::DisconnectedPart(i));
        }
    }
    let consecutive = |i: usize, j: usize| {
        j == i + 1 || (w.shape == Shape::Cycle && i == 0 && j == l - 1)
    };
    for i in 0..l {
        for j in i + 1..l {
            let adjacent = g.sets_adjacent(&w.parts[i], &w.parts[j]);
            match (consecutive(i, j), adjacent) {
                (true, false) => return Err(Violation::MissingAdjacency(i, j)),
                (false, true) => return Err(Violation::ForbiddenAdjacency(i, j)),
                _ => {}
            }
        }
    }
    Ok(())
}

/// Orders a vertex partition along the path it contracts to, if it does.
pub(crate) fn order_as_path(g: &Graph, parts: Vec<VertexSet>) -> Option<Vec<VertexSet>> {
    let q = g.quotient(&parts);
    if !q.is_path() {
        return None;
    }
    let l = parts.len();
    let start = (0..l).find(|&v| q.degree(v) <= 1)?;
    Some(walk(&q, start).into_iter().map(|i| parts[i].clone()).collect())
}

/// Orders a vertex partition around the cycle it contracts to, if it does.
pub(crate) fn order_as_cycle(g: &Graph, parts: Vec<VertexSet>) -> Option<Vec<VertexSet>> {
    if parts.len() < 3 {
        return None;
    }
    let q = g.quotient(&parts);
    if !q.is_cycle() {
        return None;
    }
    Some(walk(&q, 0).into_iter().map(|i| parts[i].clone()).collect())
}

/// Walks a path or cycle graph from `start`, returning the visit order.
fn walk(q: &Graph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = q.neighbors(cur).iter().find(|&u| u != prev && u != start) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Monochromatic components of the 2-colouring whose colour-1 class is `ones`.
pub(crate) fn monochromatic_parts(g: &Graph, ones: &VertexSet) -> Vec<VertexSet> {
    let zeros = g.vertices().difference(ones);
    let mut parts = g.components(ones);
    parts.extend(g.components(&zeros));
    parts
}
