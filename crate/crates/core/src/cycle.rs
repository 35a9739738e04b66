//! Cycle contraction and exact cyclicity.
//!
//! `solve_cycle` asks whether at most `k` contractions turn `G` into a cycle.
//! Contracting one edge between consecutive parts of a `C_j` structure
//! (`j >= 4`) gives a `C_{j-1}` structure, so this is the same as asking for
//! `C_ℓ` with `ℓ = max(3, n - k)`. Long targets guess three consecutive
//! parts `W_1, W_2, W_3` through the middle part and its split boundary and
//! hand `G - W_2` to the constrained path solver.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use log::debug;

use crate::enumerate::{Bounds, BoundaryTriples};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pcce::{ConstrainedInstance, PcceSolver};
use crate::set::VertexSet;
use crate::witness::{monochromatic_parts, order_as_cycle, verify_witness, Shape, WitnessStructure};

/// A cycle contraction instance with its target length.
#[derive(Clone, Debug)]
pub struct CycleInstance {
    g: Graph,
    budget: usize,
    target_len: usize,
}

impl CycleInstance {
    pub fn new(g: Graph, budget: usize) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::InvalidInstance("graph is not connected".into()));
        }
        let n = g.vertex_count();
        let budget = budget.min(n.saturating_sub(1));
        let target_len = (n - budget).max(3);
        Ok(Self { g, budget, target_len })
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// `ℓ = max(3, n - k)`.
    pub fn target_len(&self) -> usize {
        self.target_len
    }

    /// Base of the expected work `(2 + ε_ℓ)^k`, reported as `2 · 1.5^(3/ℓ)`.
    /// Informational only.
    pub fn work_base(&self) -> f64 {
        2.0 * 1.5f64.powf(3.0 / self.target_len as f64)
    }

    /// Limit on `|W_2| + |N(W_2)|` for the guessed middle part: some three
    /// consecutive parts of a `C_ℓ` structure hold at most `3 + 3k/ℓ`
    /// vertices.
    pub fn window_limit(&self) -> usize {
        3 + 3 * self.budget / self.target_len
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycleStats {
    pub triples: usize,
    pub path_calls: usize,
}

/// Some cycle in `g` as a vertex sequence, if `g` is not a forest.
fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    for &(u, v) in g.edges() {
        // BFS from u to v without using the edge uv.
        let mut parent = vec![usize::MAX; g.vertex_count()];
        parent[u] = u;
        let mut queue = VecDeque::from([u]);
        while let Some(a) = queue.pop_front() {
            for b in g.neighbors(a).iter() {
                if parent[b] != usize::MAX || (a == u && b == v) {
                    continue;
                }
                parent[b] = a;
                queue.push_back(b);
            }
        }
        if parent[v] != usize::MAX {
            let mut cycle = vec![v];
            let mut c = v;
            while c != u {
                c = parent[c];
                cycle.push(c);
            }
            return Some(cycle);
        }
    }
    None
}

/// Grows `parts` over the whole vertex set along BFS trees, keeping each part
/// connected.
fn absorb_rest(g: &Graph, parts: &mut [VertexSet]) {
    let mut owner = vec![usize::MAX; g.vertex_count()];
    let mut queue = VecDeque::new();
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            owner[v] = i;
            queue.push_back(v);
        }
    }
    while let Some(a) = queue.pop_front() {
        for b in g.neighbors(a).iter() {
            if owner[b] == usize::MAX {
                owner[b] = owner[a];
                parts[owner[a]].insert(b);
                queue.push_back(b);
            }
        }
    }
}

/// Contraction to a triangle: possible exactly when `k >= n - 3` and `g`
/// has a cycle.
pub fn solve_c3(g: &Graph, k: usize) -> Option<WitnessStructure> {
    let n = g.vertex_count();
    if n < 3 || k + 3 < n || !g.is_connected() {
        return None;
    }
    let cycle = find_cycle(g)?;
    let mut parts = vec![
        VertexSet::singleton(cycle[0]),
        VertexSet::singleton(cycle[1]),
        cycle[2..].iter().copied().collect(),
    ];
    absorb_rest(g, &mut parts);
    let w = WitnessStructure::cycle(parts);
    debug_assert!(verify_witness(g, &w).is_ok());
    Some(w)
}

/// Contraction to `C_4` by trying the 2-colourings; only `n <= k + 4` can
/// succeed.
pub fn solve_c4(g: &Graph, k: usize) -> Option<WitnessStructure> {
    let n = g.vertex_count();
    if n < 4 || n > k + 4 {
        return None;
    }
    // Parts of a C4 structure alternate colours; vertex 0 is fixed to colour 0.
    for mask in 0u64..1 << (n - 1) {
        let ones = VertexSet::from_bits(mask << 1);
        let parts = monochromatic_parts(g, &ones);
        if parts.len() != 4 {
            continue;
        }
        if let Some(ordered) = order_as_cycle(g, parts) {
            return Some(WitnessStructure::cycle(ordered));
        }
    }
    None
}

/// Decides whether at most `k` contractions turn `g` into a cycle.
pub fn solve_cycle(g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
    Ok(solve_cycle_with_stats(g, k)?.0)
}

pub fn solve_cycle_with_stats(g: &Graph, k: usize) -> Result<(Option<WitnessStructure>, CycleStats)> {
    let inst = CycleInstance::new(g.clone(), k)?;
    let mut stats = CycleStats::default();
    let w = match inst.target_len {
        3 => solve_c3(g, inst.budget),
        4 => solve_c4(g, inst.budget),
        _ => solve_long(&inst, &mut stats)?,
    };
    if let Some(w) = &w {
        if verify_witness(g, w).is_err() || w.cost() > inst.budget || w.shape != Shape::Cycle {
            return Err(Error::RejectedCertificate(format!("{:?}", w.parts)));
        }
    }
    Ok((w, stats))
}

fn solve_long(inst: &CycleInstance, stats: &mut CycleStats) -> Result<Option<WitnessStructure>> {
    let g = &inst.g;
    let k = inst.budget;
    debug!(
        "cycle: n={} k={} target C{} window limit {} work base {:.3}",
        g.vertex_count(),
        k,
        inst.target_len,
        inst.window_limit(),
        inst.work_base()
    );
    let bounds = Bounds {
        size_min: 1,
        size_max: k + 1,
        boundary_min: 2,
        boundary_max: inst.window_limit(),
        total_max: inst.window_limit(),
    };
    for t in BoundaryTriples::new(g, bounds) {
        // Both neighbours of W_2 are non-empty; (Y, W_2, X) is the mirror.
        let (Some(xmin), Some(ymin)) = (t.x.first(), t.y.first()) else {
            continue;
        };
        if xmin > ymin {
            continue;
        }
        let rest = g.vertices().difference(&t.z);
        if !g.is_connected_set(&rest) {
            continue;
        }
        stats.triples += 1;
        let (h, back) = g.induced_subgraph(&rest);
        let to_local = |s: &VertexSet| -> VertexSet {
            s.iter()
                .map(|v| back.binary_search(&v).expect("vertex of G - W_2"))
                .collect()
        };
        let sub = ConstrainedInstance::new(h, to_local(&t.x), to_local(&t.y), k + 1 - t.z.len())?;
        stats.path_calls += 1;
        if let Some(path) = PcceSolver::new(&sub).run()?.witness {
            let mut parts: Vec<VertexSet> = path
                .parts
                .iter()
                .map(|p| p.iter().map(|v| back[v]).collect())
                .collect();
            parts.push(t.z.clone());
            return Ok(Some(WitnessStructure::cycle(parts)));
        }
    }
    Ok(None)
}

/// The longest even cycle `C_ℓ` (`ℓ >= 4`) that `g` contracts to, with every
/// distinct `C_ℓ` structure, by trying all 2-colourings. `None` when no
/// colouring gives an even cycle.
pub fn enum_even_cycle_witnesses(g: &Graph) -> Option<(usize, Vec<WitnessStructure>)> {
    let n = g.vertex_count();
    assert!(n <= 40, "colouring enumeration is limited to 40 vertices");
    if n < 4 {
        return None;
    }
    let mut best = 0;
    let mut found: BTreeSet<Vec<VertexSet>> = BTreeSet::new();
    for mask in 0u64..1 << (n - 1) {
        let ones = VertexSet::from_bits(mask << 1);
        let parts = monochromatic_parts(g, &ones);
        // The quotient is bipartite, so any cycle it forms is even.
        if parts.len() < best.max(4) {
            continue;
        }
        let Some(ordered) = order_as_cycle(g, parts) else {
            continue;
        };
        if ordered.len() > best {
            best = ordered.len();
            found.clear();
        }
        found.insert(WitnessStructure::cycle(ordered).canonical().parts);
    }
    (best > 0).then(|| (best, found.into_iter().map(WitnessStructure::cycle).collect()))
}

/// Splits `within` into two connected sets `A ⊇ p` and `B ⊇ q`.
fn split_connected(g: &Graph, within: &VertexSet, p: &VertexSet, q: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let free = within.difference(&p.union(q)).to_vec();
    assert!(free.len() < 64, "exhaustive split is limited to 63 free vertices");
    for mask in 0u64..1 << free.len() {
        let mut a = p.clone();
        let mut b = q.clone();
        for (i, &v) in free.iter().enumerate() {
            if mask >> i & 1 == 0 {
                a.insert(v);
            } else {
                b.insert(v);
            }
        }
        if g.is_connected_set(&a) && g.is_connected_set(&b) {
            return Some((a, b));
        }
    }
    None
}

/// 2-Disjoint Connected Subgraphs by exhaustive assignment of the free
/// vertices: a partition `V = A ⊎ B` with `p ⊆ A`, `q ⊆ B`, both connected.
pub fn two_disjoint_connected_subgraphs(g: &Graph, p: &VertexSet, q: &VertexSet) -> Result<Option<(VertexSet, VertexSet)>> {
    let n = g.vertex_count();
    if p.is_empty() || q.is_empty() || p.intersects(q) {
        return Err(Error::InvalidArgument("terminal sets must be non-empty and disjoint".into()));
    }
    if let Some(v) = p.union(q).last().filter(|&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    Ok(split_connected(g, &g.vertices(), p, q))
}

/// Largest `ℓ` such that `g` contracts to `C_ℓ`, with a structure; `None`
/// for forests.
pub fn cyclicity_exact(g: &Graph) -> Result<Option<(usize, WitnessStructure)>> {
    if !g.is_connected() {
        return Err(Error::InvalidInstance("graph is not connected".into()));
    }
    let n = g.vertex_count();
    let Some((even, structures)) = enum_even_cycle_witnesses(g) else {
        return Ok(solve_c3(g, n).map(|w| (3, w)));
    };
    // A C_{ℓ+1} structure has two consecutive parts with at most 2n/(ℓ+1)
    // vertices; merging them gives one of the C_ℓ structures found above.
    let mut tried: BTreeMap<(VertexSet, VertexSet, VertexSet), bool> = BTreeMap::new();
    for w in &structures {
        let l = w.len();
        for i in 0..l {
            let part = &w.parts[i];
            if part.len() < 2 || part.len() * (even + 1) > 2 * n {
                continue;
            }
            let prev = &w.parts[(i + l - 1) % l];
            let next = &w.parts[(i + 1) % l];
            let p = g.neighborhood(prev).intersection(part);
            let q = g.neighborhood(next).intersection(part);
            if p.intersects(&q) {
                continue;
            }
            let key = (part.clone(), p.clone(), q.clone());
            if tried.contains_key(&key) {
                continue;
            }
            let split = split_connected(g, part, &p, &q);
            tried.insert(key, split.is_some());
            if let Some((a, b)) = split {
                let mut parts = w.parts.clone();
                parts[i] = a;
                parts.insert(i + 1, b);
                let up = WitnessStructure::cycle(parts);
                debug_assert!(verify_witness(g, &up).is_ok());
                return Ok(Some((even + 1, up)));
            }
        }
    }
    Ok(Some((even, structures[0].clone())))
}
