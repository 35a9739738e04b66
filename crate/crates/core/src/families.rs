//! Exhaustive small-graph families for oracle sweeps.

use std::collections::HashSet;

use crate::graph::Graph;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("codes describe simple graphs")
}

/// Every connected labelled graph on `n` vertices, by edge-mask enumeration.
pub fn connected_labelled(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "labelled enumeration is limited to 8 vertices");
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs)
        .map(move |code| from_code(n, code))
        .filter(|g| g.is_connected())
}

/// Colour refinement by degree and neighbour colours, as a stable ranking.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(s).expect("present"))
            .collect();
        let before = colour.iter().collect::<HashSet<_>>().len();
        if distinct.len() == before {
            return next;
        }
        colour = next;
    }
}

fn from_canonical(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - pair_index(i, j)) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("codes describe simple graphs")
}

/// Canonical edge code: the minimum code over all vertex orders that list
/// the refined colour classes in increasing colour.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let colour = refine(g);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| colour[v]);
    for v in order {
        match classes.last_mut() {
            Some(c) if colour[c[0]] == colour[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut placed = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(g, &classes, 0, &mut placed, &mut used, 0, &mut best);
    best
}

fn search(
    g: &Graph,
    classes: &[Vec<usize>],
    class: usize,
    placed: &mut Vec<usize>,
    used: &mut [bool],
    code: u64,
    best: &mut u64,
) {
    if class == classes.len() {
        *best = (*best).min(code);
        return;
    }
    let members = &classes[class];
    let done = members.iter().all(|&v| used[v]);
    if done {
        search(g, classes, class + 1, placed, used, code, best);
        return;
    }
    for &v in members {
        if used[v] {
            continue;
        }
        let j = placed.len();
        let total = g.vertex_count() * (g.vertex_count() - 1) / 2;
        let mut next = code;
        for (i, &u) in placed.iter().enumerate() {
            if g.has_edge(u, v) {
                next |= 1 << (total - 1 - pair_index(i, j));
            }
        }
        // Earlier positions own the most significant bits, so a placed
        // prefix that already exceeds the best prefix cannot win.
        let shift = total - (j + 1) * j / 2;
        if shift < 64 && next >> shift > *best >> shift {
            continue;
        }
        used[v] = true;
        placed.push(v);
        search(g, classes, class, placed, used, next, best);
        placed.pop();
        used[v] = false;
    }
}

/// All graphs on `n` vertices up to isomorphism, one canonical
/// representative each, built by vertex augmentation.
pub fn all_nonisomorphic(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(0, []).expect("empty graph")];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            let new = size - 1;
            for nb in 0u64..1 << new {
                let extra = (0..new).filter(|i| nb >> i & 1 == 1).map(|i| (i, new));
                let h = g.with_extra(1, extra).expect("fresh vertex");
                let code = canonical_code(&h);
                if seen.insert(code) {
                    next.push(from_canonical(size, code));
                }
            }
        }
        level = next;
    }
    level
}

/// Connected graphs on `n` vertices up to isomorphism.
pub fn connected_nonisomorphic(n: usize) -> Vec<Graph> {
    all_nonisomorphic(n)
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        // Sloane A000088 and A001349.
        let all = [1, 1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for (n, &c) in all.iter().enumerate().skip(1) {
            assert_eq!(all_nonisomorphic(n).len(), c, "all graphs on {n} vertices");
        }
        for (i, &c) in connected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(connected_nonisomorphic(n).len(), c, "connected graphs on {n} vertices");
        }
    }

    #[test]
    fn labelled_counts() {
        // Sloane A001187.
        let counts = [1, 1, 4, 38, 728];
        for (i, &c) in counts.iter().enumerate() {
            assert_eq!(connected_labelled(i + 1).count(), c);
        }
    }

    #[test]
    fn canonical_code_is_relabelling_invariant() {
        let c5 = Graph::cycle(5);
        let shuffled = Graph::new(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_code(&c5), canonical_code(&shuffled));
        assert_ne!(canonical_code(&c5), canonical_code(&Graph::path(5)));
    }
}
