//! Brute-force ground truth for every solver.
//!
//! The primary strategy searches ordered partitions of the vertex set into
//! connected parts, growing one part at a time and rejecting any part that
//! touches a non-consecutive earlier part. A second, dumber strategy tries
//! every edge subset and contracts it; the two are cross-checked in tests.
//! Everything here works on plain `u64` masks and shares no code with the
//! solvers beyond [`Graph`] and [`WitnessStructure`].

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::witness::{Shape, WitnessStructure};

pub const DEFAULT_CAP: usize = 9;

/// Bit-mask view of a graph for the exhaustive searches.
struct Masks {
    n: usize,
    adj: Vec<u64>,
    full: u64,
}

impl Masks {
    fn new(g: &Graph, cap: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > cap || n > 63 {
            return Err(Error::OracleCap { n, cap });
        }
        let adj = (0..n).map(|v| g.neighbors(v).to_bits()).collect();
        Ok(Self {
            n,
            adj,
            full: (1u64 << n) - 1,
        })
    }

    fn nbhd(&self, s: u64) -> u64 {
        let mut out = 0;
        let mut rest = s;
        while rest != 0 {
            out |= self.adj[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        out & !s
    }

    fn connected(&self, s: u64) -> bool {
        if s == 0 {
            return false;
        }
        let mut seen = s & s.wrapping_neg();
        loop {
            let grown = (seen | self.nbhd(seen)) & s;
            if grown == seen {
                return seen == s;
            }
            seen = grown;
        }
    }

    fn adjacent(&self, a: u64, b: u64) -> bool {
        self.nbhd(a) & b != 0
    }
}

fn to_structure(shape: Shape, parts: &[u64]) -> WitnessStructure {
    WitnessStructure::new(shape, parts.iter().map(|&p| VertexSet::from_bits(p)).collect())
}

/// Calls `visit` on every path structure `(W_1, ..., W_ℓ)` of `g` with
/// `x ⊆ W_1`, `y ⊆ W_ℓ` and cost at most `max_cost`. Paths have at least two
/// parts unless `g` has a single vertex.
pub fn for_each_path_structure(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    max_cost: usize,
    cap: usize,
    mut visit: impl FnMut(&WitnessStructure) -> ControlFlow<()>,
) -> Result<()> {
    let m = Masks::new(g, cap)?;
    let (xm, ym) = (x.to_bits(), y.to_bits());
    let mut parts = Vec::new();
    let _ = path_search(&m, xm, ym, &mut parts, 0, 0, &mut |p| {
        visit(&to_structure(Shape::Path, p))
    }, max_cost);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn path_search(
    m: &Masks,
    xm: u64,
    ym: u64,
    parts: &mut Vec<u64>,
    used: u64,
    cost: usize,
    visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
    max_cost: usize,
) -> ControlFlow<()> {
    if used == m.full {
        if (parts.len() >= 2 || m.n == 1) && parts.last().is_some_and(|&l| l & ym == ym) {
            return visit(parts);
        }
        return ControlFlow::Continue(());
    }
    let rest = m.full & !used;
    // Everything already adjacent to the prefix must sit in the next part.
    let forced = if parts.is_empty() { xm } else { m.nbhd(used) };
    if forced & !rest != 0 {
        return ControlFlow::Continue(());
    }
    let free = rest & !forced;
    let mut sub = free;
    loop {
        let a = forced | sub;
        if a != 0 {
            let size = a.count_ones() as usize;
            let ok = cost + size - 1 <= max_cost
                && m.connected(a)
                && (a & ym == 0 || used | a == m.full)
                && match parts.split_last() {
                    None => true,
                    Some((&last, earlier)) => {
                        m.adjacent(a, last) && earlier.iter().all(|&w| !m.adjacent(a, w))
                    }
                };
            if ok {
                parts.push(a);
                let flow = path_search(m, xm, ym, parts, used | a, cost + size - 1, visit, max_cost);
                parts.pop();
                flow?;
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    ControlFlow::Continue(())
}

/// Calls `visit` on every cycle structure of `g` (at least three parts) with
/// cost at most `max_cost` whose first part contains vertex 0.
pub fn for_each_cycle_structure(
    g: &Graph,
    max_cost: usize,
    cap: usize,
    mut visit: impl FnMut(&WitnessStructure) -> ControlFlow<()>,
) -> Result<()> {
    let m = Masks::new(g, cap)?;
    if m.n < 3 {
        return Ok(());
    }
    let mut parts = Vec::new();
    let _ = cycle_search(&m, &mut parts, 0, 0, max_cost, &mut |p| {
        visit(&to_structure(Shape::Cycle, p))
    });
    Ok(())
}

fn cycle_search(
    m: &Masks,
    parts: &mut Vec<u64>,
    used: u64,
    cost: usize,
    max_cost: usize,
    visit: &mut dyn FnMut(&[u64]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if used == m.full {
        let l = parts.len();
        if l >= 3 && m.adjacent(parts[0], parts[l - 1]) {
            return visit(parts);
        }
        return ControlFlow::Continue(());
    }
    let rest = m.full & !used;
    let forced = match parts.len() {
        0 => 1,
        1 => 0,
        l => m.nbhd(parts[l - 1]) & rest,
    };
    let free = rest & !forced;
    let mut sub = free;
    loop {
        let a = forced | sub;
        if a != 0 {
            let size = a.count_ones() as usize;
            let closes = used | a == m.full;
            let ok = cost + size - 1 <= max_cost
                && m.connected(a)
                && match parts.len() {
                    0 => true,
                    l => {
                        let prev = parts[l - 1];
                        m.adjacent(a, prev)
                            && parts[..l - 1].iter().enumerate().all(|(i, &w)| {
                                // Only the closing part may touch W_1.
                                let allowed = i == 0 && closes && l >= 2;
                                allowed || !m.adjacent(a, w)
                            })
                    }
                };
            if ok {
                parts.push(a);
                let flow = cycle_search(m, parts, used | a, cost + size - 1, max_cost, visit);
                parts.pop();
                flow?;
            }
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & free;
    }
    ControlFlow::Continue(())
}

fn minimum(
    search: impl FnOnce(&mut dyn FnMut(&WitnessStructure) -> ControlFlow<()>) -> Result<()>,
) -> Result<Option<WitnessStructure>> {
    let mut best: Option<WitnessStructure> = None;
    search(&mut |w| {
        if best.as_ref().is_none_or(|b| w.cost() < b.cost()) {
            best = Some(w.clone());
        }
        ControlFlow::Continue(())
    })?;
    Ok(best)
}

/// Exhaustive solver with a configurable vertex cap.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Self { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Self { cap }
    }

    /// Minimum-cost path structure with `x ⊆ W_1` and `y ⊆ W_ℓ`, if its
    /// cost is at most `k`.
    pub fn pcce(&self, g: &Graph, x: &VertexSet, y: &VertexSet, k: usize) -> Result<Option<WitnessStructure>> {
        if x.intersects(y) {
            return Err(Error::InvalidInstance("end sets X and Y overlap".into()));
        }
        if let Some(v) = x.union(y).last().filter(|&v| v >= g.vertex_count()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.vertex_count() });
        }
        let cap = self.cap;
        minimum(|visit| for_each_path_structure(g, x, y, k, cap, visit))
    }

    pub fn path(&self, g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
        self.pcce(g, &VertexSet::new(), &VertexSet::new(), k)
    }

    pub fn cycle(&self, g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
        let cap = self.cap;
        minimum(|visit| for_each_cycle_structure(g, k, cap, visit))
    }

    /// Largest `ℓ` such that `g` contracts to `C_ℓ`; `None` when no cycle is reachable.
    pub fn cyclicity(&self, g: &Graph) -> Result<Option<usize>> {
        let n = g.vertex_count();
        Ok(self
            .cycle(g, n.saturating_sub(1))?
            .map(|w| n - w.cost()))
    }
}

pub fn brute_path(g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
    Oracle::default().path(g, k)
}

pub fn brute_cycle(g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
    Oracle::default().cycle(g, k)
}

pub fn brute_pcce(g: &Graph, x: &VertexSet, y: &VertexSet, k: usize) -> Result<Option<WitnessStructure>> {
    Oracle::default().pcce(g, x, y, k)
}

pub fn brute_cyclicity(g: &Graph) -> Result<Option<usize>> {
    Oracle::default().cyclicity(g)
}

/// Second oracle: is there `F ⊆ E` with `|F| <= k` and `G/F` of the given
/// shape? Tries every edge subset, so only usable for tiny edge counts.
pub fn contracts_by_edge_subsets(g: &Graph, k: usize, shape: Shape) -> bool {
    let edges = g.edges();
    assert!(edges.len() <= 20, "edge-subset oracle is limited to 20 edges");
    (0u32..1 << edges.len())
        .filter(|f| f.count_ones() as usize <= k)
        .any(|f| {
            let chosen: Vec<_> = (0..edges.len())
                .filter(|i| f >> i & 1 == 1)
                .map(|i| edges[i])
                .collect();
            let (h, _) = g.contract_edges(&chosen).expect("edges come from g");
            match shape {
                Shape::Path => h.is_path(),
                Shape::Cycle => h.is_cycle(),
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::verify_witness;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn path_examples() {
        let w = brute_path(&Graph::path(4), 0).unwrap().unwrap();
        assert_eq!(w.canonical(), WitnessStructure::identity(Shape::Path, 4));
        assert!(brute_path(&Graph::complete(4), 1).unwrap().is_none());
        let w = brute_path(&Graph::cycle(4), 2).unwrap().unwrap();
        verify_witness(&Graph::cycle(4), &w).unwrap();
        assert_eq!(w.cost(), 2);
    }

    #[test]
    fn cycle_examples() {
        let w = brute_cycle(&Graph::cycle(5), 0).unwrap().unwrap();
        assert_eq!(w.canonical(), WitnessStructure::identity(Shape::Cycle, 5));
        assert!(brute_cycle(&Graph::star(3), 3).unwrap().is_none());
        assert!(brute_cycle(&Graph::path(5), 4).unwrap().is_none());
        let w = brute_cycle(&Graph::complete(4), 1).unwrap().unwrap();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn pcce_examples() {
        let p4 = Graph::path(4);
        let w = brute_pcce(&p4, &set(&[0]), &set(&[3]), 0).unwrap().unwrap();
        assert_eq!(w, WitnessStructure::identity(Shape::Path, 4));
        let w = brute_pcce(&p4, &set(&[3]), &set(&[0]), 0).unwrap().unwrap();
        assert_eq!(w, WitnessStructure::identity(Shape::Path, 4).reversed());
        let star = Graph::star(3);
        assert!(brute_pcce(&star, &set(&[0]), &set(&[1]), 0).unwrap().is_none());
    }

    #[test]
    fn cyclicity_examples() {
        assert_eq!(brute_cyclicity(&Graph::cycle(6)).unwrap(), Some(6));
        assert_eq!(brute_cyclicity(&Graph::complete(4)).unwrap(), Some(3));
        assert_eq!(brute_cyclicity(&Graph::path(5)).unwrap(), None);
    }

    #[test]
    fn refuses_large_graphs() {
        assert_eq!(
            brute_path(&Graph::path(10), 0).unwrap_err(),
            Error::OracleCap { n: 10, cap: DEFAULT_CAP }
        );
        assert!(Oracle::with_cap(10).path(&Graph::path(10), 0).unwrap().is_some());
    }

    #[test]
    fn single_vertex() {
        let g = Graph::path(1);
        assert_eq!(brute_path(&g, 0).unwrap().unwrap().len(), 1);
        assert!(brute_cycle(&g, 0).unwrap().is_none());
    }

    #[test]
    fn visitor_sees_only_valid_structures() {
        let g = Graph::grid(2, 3);
        let mut count = 0;
        for_each_path_structure(&g, &VertexSet::new(), &VertexSet::new(), 5, 9, |w| {
            verify_witness(&g, w).unwrap();
            count += 1;
            ControlFlow::Continue(())
        })
        .unwrap();
        assert!(count > 0);
        for_each_cycle_structure(&g, 5, 9, |w| {
            verify_witness(&g, w).unwrap();
            ControlFlow::Continue(())
        })
        .unwrap();
    }
}
