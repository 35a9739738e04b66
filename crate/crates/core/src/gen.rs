//! Seeded random instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;

const GNP_ATTEMPTS: usize = 100_000;

/// Generator families.
#[derive(Clone, Debug, PartialEq)]
pub enum Family {
    /// Erdős–Rényi `G(n, p)`, resampled until connected.
    Gnp { n: usize, p: f64 },
    /// `C_n` plus `chords` distinct random chords.
    CyclePlusChords { n: usize, chords: usize },
    Grid { rows: usize, cols: usize },
    /// A clique on `clique` vertices and an independent set on `independent`
    /// vertices; each clique–independent pair is an edge with probability `p`,
    /// and every independent vertex gets at least one clique neighbour.
    Split { clique: usize, independent: usize, p: f64 },
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic for a given family and seed.
pub fn gen_random(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    match *family {
        Family::Gnp { n, p } => {
            check_probability(p)?;
            if n == 0 {
                return Err(Error::InvalidArgument("gnp needs n >= 1".into()));
            }
            for _ in 0..GNP_ATTEMPTS {
                let g = gnp(&mut rng, n, p);
                if g.is_connected() {
                    return Ok(g);
                }
            }
            Err(Error::InvalidArgument(format!(
                "no connected G({n}, {p}) sample in {GNP_ATTEMPTS} attempts"
            )))
        }
        Family::CyclePlusChords { n, chords } => cycle_plus_chords(&mut rng, n, chords),
        Family::Grid { rows, cols } => {
            if rows == 0 || cols == 0 {
                return Err(Error::InvalidArgument("grid needs positive dimensions".into()));
            }
            Ok(Graph::grid(rows, cols))
        }
        Family::Split { clique, independent, p } => {
            check_probability(p)?;
            if clique == 0 {
                return Err(Error::InvalidArgument("split graph needs a non-empty clique".into()));
            }
            let mut edges = Vec::new();
            for i in 0..clique {
                for j in i + 1..clique {
                    edges.push((i, j));
                }
            }
            for v in clique..clique + independent {
                let mut nb: Vec<usize> = (0..clique).filter(|_| rng.gen_bool(p)).collect();
                if nb.is_empty() {
                    nb.push(rng.gen_range(0..clique));
                }
                edges.extend(nb.into_iter().map(|u| (u, v)));
            }
            Graph::new(clique + independent, edges)
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("probability {p} outside [0, 1]")))
    }
}

fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("distinct pairs")
}

fn cycle_plus_chords(rng: &mut impl Rng, n: usize, chords: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument("cycle needs n >= 3".into()));
    }
    let cycle = Graph::cycle(n);
    let mut candidates: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !cycle.has_edge(u, v))
        .collect();
    if chords > candidates.len() {
        return Err(Error::InvalidArgument(format!(
            "C{n} has only {} possible chords",
            candidates.len()
        )));
    }
    candidates.shuffle(rng);
    let mut edges = cycle.edges().to_vec();
    edges.extend_from_slice(&candidates[..chords]);
    Graph::new(n, edges)
}

/// A random connected graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`. Never needs resampling.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    for v in 1..n {
        for u in 0..v {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("distinct pairs")
}

/// Random disjoint end sets with `|X|, |Y| <= max_size` (possibly empty).
pub fn random_ends(rng: &mut impl Rng, n: usize, max_size: usize) -> (VertexSet, VertexSet) {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let a = rng.gen_range(0..=max_size.min(n));
    let b = rng.gen_range(0..=max_size.min(n - a));
    let x = order[..a].iter().copied().collect();
    let y = order[a..a + b].iter().copied().collect();
    (x, y)
}
