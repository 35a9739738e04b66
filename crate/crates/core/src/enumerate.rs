//! Depth-bounded branching enumeration of connected sets with prescribed
//! size and boundary size.
//!
//! Every enumerator grows a set `Z` from a root vertex. At each node the
//! smallest frontier vertex `u ∈ N(Z)` that has not been decided yet is either
//! taken into `Z` or fixed on the boundary, so each branch adds one to
//! `|Z| + |boundary|` and the tree has at most `2^(α+β)` leaves per root.
//! Without a seed set, vertices smaller than the root may only go to the
//! boundary; every set is therefore produced exactly once, from its minimum.

use crate::graph::Graph;
use crate::set::VertexSet;

/// Inclusive size limits on a connected set and its boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub size_min: usize,
    pub size_max: usize,
    pub boundary_min: usize,
    pub boundary_max: usize,
    /// Limit on `size + boundary`.
    pub total_max: usize,
}

impl Bounds {
    /// Exactly `alpha` members and exactly `beta` boundary vertices.
    pub fn exact(alpha: usize, beta: usize) -> Self {
        Self {
            size_min: alpha,
            size_max: alpha,
            boundary_min: beta,
            boundary_max: beta,
            total_max: alpha + beta,
        }
    }

    /// Any set with `size + boundary <= total`.
    pub fn total(total: usize) -> Self {
        Self {
            size_min: 1,
            size_max: total,
            boundary_min: 0,
            boundary_max: total,
            total_max: total,
        }
    }
}

#[derive(Clone, Debug)]
struct Node {
    inside: VertexSet,
    boundary: VertexSet,
}

/// Lazy stream of connected sets `Z ⊆ universe` with `required ⊆ Z`, where
/// the boundary is `N(Z) ∩ universe`. Vertices outside `universe` behave as
/// if deleted from the graph.
pub struct ConnectedSets<'g> {
    g: &'g Graph,
    universe: VertexSet,
    required: VertexSet,
    bounds: Bounds,
    roots: std::vec::IntoIter<usize>,
    root: usize,
    forbid_below_root: bool,
    stack: Vec<Node>,
    nodes: u64,
}

impl<'g> ConnectedSets<'g> {
    pub fn new(g: &'g Graph, universe: VertexSet, required: VertexSet, bounds: Bounds) -> Self {
        let (roots, forbid_below_root) = if required.is_empty() {
            (universe.to_vec(), true)
        } else if required.is_subset(&universe) && required.len() <= bounds.size_max {
            (vec![required.first().expect("non-empty")], false)
        } else {
            (Vec::new(), false)
        };
        let roots = if bounds.size_max == 0 { Vec::new() } else { roots };
        Self {
            g,
            universe,
            required,
            bounds,
            roots: roots.into_iter(),
            root: 0,
            forbid_below_root,
            stack: Vec::new(),
            nodes: 0,
        }
    }

    /// Search-tree nodes visited so far.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes
    }

    /// Yields `(Z, N(Z) ∩ universe)` pairs instead of bare sets.
    pub fn with_boundary(self) -> WithBoundary<'g> {
        WithBoundary(self)
    }

    fn next_pair(&mut self) -> Option<(VertexSet, VertexSet)> {
        let b = self.bounds;
        loop {
            let Some(node) = self.stack.pop() else {
                self.root = self.roots.next()?;
                self.stack.push(Node {
                    inside: VertexSet::singleton(self.root),
                    boundary: VertexSet::new(),
                });
                continue;
            };
            self.nodes += 1;
            let mut frontier = self.g.neighborhood(&node.inside);
            frontier = frontier.intersection(&self.universe);
            frontier.difference_with(&node.boundary);

            let Some(u) = frontier.first() else {
                let (a, beta) = (node.inside.len(), node.boundary.len());
                if a >= b.size_min
                    && beta >= b.boundary_min
                    && self.required.is_subset(&node.inside)
                {
                    return Some((node.inside, node.boundary));
                }
                continue;
            };

            let a = node.inside.len();
            let beta = node.boundary.len();
            let pending = self.required.difference(&node.inside).len();
            let room = a + beta < b.total_max;
            let can_include = room
                && a + pending < b.size_max + usize::from(self.required.contains(u))
                && !(self.forbid_below_root && u < self.root);
            let can_exclude = room && beta < b.boundary_max && !self.required.contains(u);

            if can_exclude {
                let mut boundary = node.boundary.clone();
                boundary.insert(u);
                self.stack.push(Node {
                    inside: node.inside.clone(),
                    boundary,
                });
            }
            if can_include {
                let mut inside = node.inside;
                inside.insert(u);
                self.stack.push(Node {
                    inside,
                    boundary: node.boundary,
                });
            }
        }
    }
}

impl Iterator for ConnectedSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        self.next_pair().map(|(z, _)| z)
    }
}

pub struct WithBoundary<'g>(ConnectedSets<'g>);

impl WithBoundary<'_> {
    pub fn nodes_visited(&self) -> u64 {
        self.0.nodes
    }
}

impl Iterator for WithBoundary<'_> {
    type Item = (VertexSet, VertexSet);

    fn next(&mut self) -> Option<Self::Item> {
        self.0.next_pair()
    }
}

/// All `(α, β)`-connected sets: connected, `|Z| = α`, `|N(Z)| = β`.
pub fn enum_ab_connected(g: &Graph, alpha: usize, beta: usize) -> ConnectedSets<'_> {
    ConnectedSets::new(g, g.vertices(), VertexSet::new(), Bounds::exact(alpha, beta))
}

/// All `(Q, α, β)`-connected sets: `(α, β)`-connected sets containing `q`.
pub fn enum_q_connected<'g>(g: &'g Graph, q: &VertexSet, alpha: usize, beta: usize) -> ConnectedSets<'g> {
    if q.is_empty() {
        return ConnectedSets::new(g, VertexSet::new(), VertexSet::new(), Bounds::exact(alpha, beta));
    }
    ConnectedSets::new(g, g.vertices(), q.clone(), Bounds::exact(alpha, beta))
}

/// Connected `W ⊆ V \ (X ∪ Y)` with `|W| = α` and `|N(W) \ (X ∪ Y)| = β`.
/// Neighbours in `X ∪ Y` are free: they are never in `W` and never counted.
pub fn enum_avoiding_connected<'g>(
    g: &'g Graph,
    x: &VertexSet,
    y: &VertexSet,
    alpha: usize,
    beta: usize,
) -> ConnectedSets<'g> {
    let universe = g.vertices().difference(&x.union(y));
    ConnectedSets::new(g, universe, VertexSet::new(), Bounds::exact(alpha, beta))
}

/// A connected set `Z` together with a split `X ⊎ Y = N(Z)` of its boundary.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryTriple {
    pub x: VertexSet,
    pub z: VertexSet,
    pub y: VertexSet,
}

#[derive(Clone, Debug)]
struct TripleNode {
    z: VertexSet,
    x: VertexSet,
    y: VertexSet,
}

/// Three-way branching stream of [`BoundaryTriple`]s: each frontier vertex
/// goes into `Z`, `X` or `Y`.
pub struct BoundaryTriples<'g> {
    g: &'g Graph,
    bounds: Bounds,
    roots: std::ops::Range<usize>,
    root: usize,
    stack: Vec<TripleNode>,
}

impl<'g> BoundaryTriples<'g> {
    pub fn new(g: &'g Graph, bounds: Bounds) -> Self {
        let roots = if bounds.size_max == 0 {
            0..0
        } else {
            0..g.vertex_count()
        };
        Self {
            g,
            bounds,
            roots,
            root: 0,
            stack: Vec::new(),
        }
    }
}

impl Iterator for BoundaryTriples<'_> {
    type Item = BoundaryTriple;

    fn next(&mut self) -> Option<BoundaryTriple> {
        let b = self.bounds;
        loop {
            let Some(node) = self.stack.pop() else {
                self.root = self.roots.next()?;
                self.stack.push(TripleNode {
                    z: VertexSet::singleton(self.root),
                    x: VertexSet::new(),
                    y: VertexSet::new(),
                });
                continue;
            };
            let mut frontier = self.g.neighborhood(&node.z);
            frontier.difference_with(&node.x);
            frontier.difference_with(&node.y);
            let Some(u) = frontier.first() else {
                let beta = node.x.len() + node.y.len();
                if node.z.len() >= b.size_min && beta >= b.boundary_min {
                    return Some(BoundaryTriple {
                        x: node.x,
                        z: node.z,
                        y: node.y,
                    });
                }
                continue;
            };
            let a = node.z.len();
            let beta = node.x.len() + node.y.len();
            let room = a + beta < b.total_max;
            let can_include = room && a < b.size_max && u > self.root;
            let can_exclude = room && beta < b.boundary_max;
            // Pushed in reverse so the pops go Z, then X, then Y.
            if can_exclude {
                let mut y = node.y.clone();
                y.insert(u);
                self.stack.push(TripleNode {
                    z: node.z.clone(),
                    x: node.x.clone(),
                    y,
                });
                let mut x = node.x.clone();
                x.insert(u);
                self.stack.push(TripleNode {
                    z: node.z.clone(),
                    x,
                    y: node.y.clone(),
                });
            }
            if can_include {
                let mut z = node.z;
                z.insert(u);
                self.stack.push(TripleNode { z, x: node.x, y: node.y });
            }
        }
    }
}

/// Triples `(X, Z, Y)` where `Z` is `(α, β)`-connected and `X ⊎ Y = N(Z)`.
/// Either side of the split may be empty.
pub fn enum_boundary_partitioned(g: &Graph, alpha: usize, beta: usize) -> BoundaryTriples<'_> {
    BoundaryTriples::new(g, Bounds::exact(alpha, beta))
}
