//! Path contraction through cycle contraction, and the Orthogonal Vectors
//! construction of split graphs.

use crate::cycle::solve_cycle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::witness::{verify_witness, WitnessStructure};

/// `g` plus a fresh path `z_1 .. z_{k+1}` (ids `n .. n+k`) with `z_1 ~ x` and
/// `z_{k+1} ~ y`.
pub fn build_gxy(g: &Graph, x: usize, y: usize, k: usize) -> Result<Graph> {
    let n = g.vertex_count();
    if x == y {
        return Err(Error::InvalidArgument("x and y must differ".into()));
    }
    if let Some(&v) = [x, y].iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut edges = vec![(x, n), (y, n + k)];
    edges.extend((n..n + k).map(|z| (z, z + 1)));
    g.with_extra(k + 1, edges)
}

/// Decides cycle contraction for `path_via_cycle`.
pub trait CycleBackend {
    fn contract_to_cycle(&self, g: &Graph, k: usize) -> Result<Option<WitnessStructure>>;
}

/// The exact cycle solver of this crate.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolverBackend;

impl CycleBackend for SolverBackend {
    fn contract_to_cycle(&self, g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
        solve_cycle(g, k)
    }
}

impl<F> CycleBackend for F
where
    F: Fn(&Graph, usize) -> Result<Option<WitnessStructure>>,
{
    fn contract_to_cycle(&self, g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
        self(g, k)
    }
}

/// Path contraction by trying every end pair `x, y`: `g` contracts to a path
/// with `x` in the first and `y` in the last part within `k` contractions
/// exactly when `G_{x,y}` contracts to a cycle within `k`. Graphs with at
/// most `k + 1` vertices are trivially yes.
pub fn path_via_cycle(g: &Graph, k: usize, backend: &impl CycleBackend) -> Result<Option<WitnessStructure>> {
    if !g.is_connected() {
        return Err(Error::InvalidInstance("graph is not connected".into()));
    }
    let n = g.vertex_count();
    if n <= k + 1 {
        return Ok(Some(trivial_path(g)));
    }
    for x in 0..n {
        for y in x + 1..n {
            let h = build_gxy(g, x, y, k)?;
            let Some(cycle) = backend.contract_to_cycle(&h, k)? else {
                continue;
            };
            let path = path_from_cycle(g, &cycle, k).ok_or_else(|| {
                Error::RejectedCertificate(format!(
                    "cycle structure {:?} of G_{{{x},{y}}} does not yield a path",
                    cycle.parts
                ))
            })?;
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Two parts: a leaf of a BFS tree and the rest (or `P_1`).
fn trivial_path(g: &Graph) -> WitnessStructure {
    let n = g.vertex_count();
    if n == 1 {
        return WitnessStructure::path(vec![VertexSet::singleton(0)]);
    }
    let dist = g.distances(0);
    let far = (0..n).max_by_key(|&v| dist[v]).expect("non-empty");
    let rest = g.vertices().difference(&VertexSet::singleton(far));
    WitnessStructure::path(vec![rest, VertexSet::singleton(far)])
}

/// Drops the added path from a cycle structure of `G_{x,y}` and cuts the
/// cycle where the path was.
fn path_from_cycle(g: &Graph, cycle: &WitnessStructure, k: usize) -> Option<WitnessStructure> {
    let real = g.vertices();
    let parts: Vec<VertexSet> = cycle
        .parts
        .iter()
        .map(|p| p.intersection(&real))
        .filter(|p| !p.is_empty())
        .collect();
    let l = parts.len();
    (0..l).find_map(|start| {
        let rotated: Vec<VertexSet> = (0..l).map(|j| parts[(start + j) % l].clone()).collect();
        let w = WitnessStructure::path(rotated);
        (verify_witness(g, &w).is_ok() && w.cost() <= k && w.len() >= 2).then_some(w)
    })
}

/// Two lists of `n` boolean vectors of dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvInstance {
    xs: Vec<Vec<bool>>,
    ys: Vec<Vec<bool>>,
}

impl OvInstance {
    pub fn new(xs: Vec<Vec<bool>>, ys: Vec<Vec<bool>>) -> Result<Self> {
        if xs.is_empty() || xs.len() != ys.len() {
            return Err(Error::InvalidInstance(format!(
                "need two equal non-empty vector lists, got {} and {}",
                xs.len(),
                ys.len()
            )));
        }
        let d = xs[0].len();
        if d == 0 {
            return Err(Error::InvalidInstance("dimension must be positive".into()));
        }
        if xs.iter().chain(&ys).any(|v| v.len() != d) {
            return Err(Error::InvalidInstance(format!("all vectors must have dimension {d}")));
        }
        Ok(Self { xs, ys })
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn d(&self) -> usize {
        self.xs[0].len()
    }

    pub fn xs(&self) -> &[Vec<bool>] {
        &self.xs
    }

    pub fn ys(&self) -> &[Vec<bool>] {
        &self.ys
    }

    /// The graph equivalence needs every vector to have a one.
    pub fn has_zero_vector(&self) -> bool {
        self.xs.iter().chain(&self.ys).any(|v| !v.contains(&true))
    }
}

/// Lexicographically first orthogonal pair `(i, j)`, 1-based.
pub fn ov_brute(inst: &OvInstance) -> Option<(usize, usize)> {
    for (i, x) in inst.xs.iter().enumerate() {
        for (j, y) in inst.ys.iter().enumerate() {
            if x.iter().zip(y).all(|(a, b)| !(a & b)) {
                return Some((i + 1, j + 1));
            }
        }
    }
    None
}

/// The split graph of an OV instance. Vertex ids: `x_i = i - 1`,
/// `y_j = n + j - 1`, `z_X = 2n`, `z_c = 2n + c` for `c in 1..=d`,
/// `z_Y = 2n + d + 1`.
#[derive(Clone, Debug)]
pub struct OvReductionOutput {
    pub g: Graph,
    /// `k = 2n + d - 2`: the graph contracts to a path only as `P_4`.
    pub budget: usize,
    pub z_x: usize,
    pub z_y: usize,
    pub z_coords: Vec<usize>,
    /// Treewidth stated for the construction; recorded, not computed.
    pub treewidth_claim: usize,
}

impl OvReductionOutput {
    pub fn clique(&self) -> VertexSet {
        let mut z: VertexSet = self.z_coords.iter().copied().collect();
        z.insert(self.z_x);
        z.insert(self.z_y);
        z
    }
}

pub fn ov_to_chordal(inst: &OvInstance) -> OvReductionOutput {
    let (n, d) = (inst.n(), inst.d());
    let z_x = 2 * n;
    let z_coords: Vec<usize> = (1..=d).map(|c| 2 * n + c).collect();
    let z_y = 2 * n + d + 1;
    let mut edges = Vec::new();
    for a in z_x..=z_y {
        for b in a + 1..=z_y {
            edges.push((a, b));
        }
    }
    for i in 0..n {
        edges.push((i, z_x));
        edges.push((n + i, z_y));
        for c in 0..d {
            if inst.xs[i][c] {
                edges.push((i, z_coords[c]));
            }
            if inst.ys[i][c] {
                edges.push((n + i, z_coords[c]));
            }
        }
    }
    let g = Graph::new(2 * n + d + 2, edges).expect("construction is simple");
    let out = OvReductionOutput {
        g,
        budget: 2 * n + d - 2,
        z_x,
        z_y,
        z_coords,
        treewidth_claim: d + 2,
    };
    check_ov_output(inst, &out).expect("construction invariants");
    out
}

/// The structural claims about the construction.
pub fn check_ov_output(inst: &OvInstance, out: &OvReductionOutput) -> Result<()> {
    let g = &out.g;
    let (n, d) = (inst.n(), inst.d());
    let fail = |what: &str| Err(Error::InvalidInstance(format!("OV graph: {what}")));
    if g.vertex_count() != 2 * n + d + 2 {
        return fail("wrong vertex count");
    }
    let z = out.clique();
    if z.len() != d + 2 || !is_clique(g, &z) {
        return fail("Z is not a clique of size d + 2");
    }
    let independent = g.vertices().difference(&z);
    if g.edges().iter().any(|&(u, v)| independent.contains(u) && independent.contains(v)) {
        return fail("X ∪ Y is not independent");
    }
    if !is_chordal(g) {
        return fail("not chordal");
    }
    if !g.is_connected() || diameter(g) > 3 {
        return fail("diameter exceeds 3");
    }
    Ok(())
}

fn is_clique(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|u| s.iter().all(|v| u == v || g.has_edge(u, v)))
}

/// Longest shortest-path distance; `usize::MAX` if disconnected.
pub fn diameter(g: &Graph) -> usize {
    (0..g.vertex_count())
        .flat_map(|s| g.distances(s))
        .map(|d| d.unwrap_or(usize::MAX))
        .max()
        .unwrap_or(0)
}

/// Chordality via maximum cardinality search: the reverse visit order is a
/// perfect elimination ordering exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.vertex_count();
    let mut weight = vec![0usize; n];
    let mut position = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| position[v] == usize::MAX)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        position[v] = step;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if position[u] == usize::MAX {
                weight[u] += 1;
            }
        }
    }
    // For each v, its earlier-visited neighbours must form a clique; it is
    // enough that they are all adjacent to the latest of them.
    order.iter().all(|&v| {
        let earlier: Vec<usize> = g.neighbors(v).iter().filter(|&u| position[u] < position[v]).collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&u| position[u]) else {
            return true;
        };
        earlier.iter().all(|&u| u == parent || g.has_edge(u, parent))
    })
}
