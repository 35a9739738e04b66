use std::ops::ControlFlow;

use contraction::families::connected_labelled;
use contraction::gen::{random_connected, random_ends, rng};
use contraction::oracle::{for_each_path_structure, Oracle};
use contraction::pcce::{DpIndex, PcceSolver, Side};
use contraction::{solve_path, verify_witness, ConstrainedInstance, Graph, Shape, VertexSet};
use rand::seq::IteratorRandom;
use rand::Rng;

fn check_sound(inst: &ConstrainedInstance, w: &contraction::WitnessStructure) {
    assert_eq!(w.shape, Shape::Path);
    assert!(verify_witness(inst.graph(), w).is_ok());
    assert!(w.cost() <= inst.budget());
    assert!(inst.x().is_subset(w.first()));
    assert!(inst.y().is_subset(w.last()));
}

#[test]
fn path_agrees_with_oracle_on_labelled_graphs() {
    let oracle = Oracle::default();
    for n in 1..=5 {
        for g in connected_labelled(n) {
            let mut previous = false;
            for k in 0..n.saturating_sub(1).max(1) {
                let got = solve_path(&g, k).unwrap();
                let want = oracle.path(&g, k).unwrap();
                assert_eq!(got.is_some(), want.is_some(), "{g:?} k={k}");
                if let Some(w) = &got {
                    let inst = ConstrainedInstance::unconstrained(g.clone(), k).unwrap();
                    check_sound(&inst, w);
                }
                assert!(!previous || got.is_some(), "not monotone: {g:?} k={k}");
                previous = got.is_some();
            }
        }
    }
}

#[test]
fn forced_dp_agrees_with_oracle_on_random_instances() {
    let oracle = Oracle::with_cap(27);
    let mut r = rng(11);
    let (mut dp_yes, mut dp_no) = (0, 0);
    for trial in 0..400 {
        let (g, x, y, k) = if trial % 2 == 0 {
            let n = r.gen_range(6..=11);
            let p = r.gen_range(0.0..0.35);
            let g = random_connected(&mut r, n, p);
            let (x, y) = if trial % 4 == 0 {
                (VertexSet::new(), VertexSet::new())
            } else {
                random_ends(&mut r, n, 2)
            };
            let k = r.gen_range(0..=n.saturating_sub(6).min(5));
            (g, x, y, k)
        } else {
            let planted = path_blowup(&mut r);
            let (x, y) = match trial % 6 {
                1 => (VertexSet::new(), VertexSet::new()),
                3 => random_ends(&mut r, planted.graph.vertex_count(), 2),
                _ => (pick(&mut r, &planted.first), pick(&mut r, &planted.last)),
            };
            let k = (planted.cost + r.gen_range(0..=2)).saturating_sub(1);
            (planted.graph, x, y, k)
        };
        let inst = ConstrainedInstance::new(g.clone(), x.clone(), y.clone(), k).unwrap();
        let out = PcceSolver::new(&inst).run().unwrap();
        let want = oracle.pcce(&g, &x, &y, k).unwrap();
        assert_eq!(
            out.witness.is_some(),
            want.is_some(),
            "{g:?} x={x:?} y={y:?} k={k} want={want:?}"
        );
        if let Some(w) = &out.witness {
            check_sound(&inst, w);
        }
        if out.stats.used_dp {
            match out.witness {
                Some(_) => dp_yes += 1,
                None => dp_no += 1,
            }
        }
    }
    println!("dp yes={dp_yes} no={dp_no}");
    assert!(dp_yes >= 40 && dp_no >= 40, "dp yes={dp_yes} no={dp_no}");
}

#[test]
fn dp_entries_have_witnesses() {
    let mut r = rng(5);
    let mut checked = 0;
    for _ in 0..60 {
        let n = r.gen_range(6..=7);
        let g = random_connected(&mut r, n, 0.25);
        let (x, y) = random_ends(&mut r, n, 2);
        let k = r.gen_range(0..=n - 2);
        let inst = ConstrainedInstance::new(g.clone(), x.clone(), y.clone(), k).unwrap();
        let out = PcceSolver::new(&inst).keep_table().run_dp().unwrap();
        let table = out.table.unwrap();
        let symmetric = x.is_empty() && y.is_empty();
        let entries: Vec<DpIndex> = table.true_indices().choose_multiple(&mut r, 25);
        for e in entries {
            let near = match e.side {
                Side::X => &x,
                Side::Y => &y,
            };
            assert!(table.is_true(&e));
            assert!(symmetric || near.is_subset(&e.prefix));
            assert!(has_prefix_structure(&g, &e.prefix, &e.last, near, e.used), "{g:?} {e:?}");
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} entries sampled");
}

/// Independent search: `G[prefix]` has a path structure ending in exactly
/// `last`, starting with a part containing `near`, of cost at most `used`.
fn has_prefix_structure(g: &Graph, prefix: &VertexSet, last: &VertexSet, near: &VertexSet, used: usize) -> bool {
    let (h, back) = g.induced_subgraph(prefix);
    let relabel = |s: &VertexSet| -> VertexSet {
        s.iter().map(|v| back.iter().position(|&b| b == v).unwrap()).collect()
    };
    let (hx, hlast) = (relabel(near), relabel(last));
    let mut found = false;
    for_each_path_structure(&h, &hx, &hlast, used, 12, |w| {
        if *w.last() == hlast {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .unwrap();
    found
}

struct Planted {
    graph: Graph,
    first: VertexSet,
    last: VertexSet,
    cost: usize,
}

fn pick(r: &mut impl Rng, s: &VertexSet) -> VertexSet {
    let v = s.to_vec();
    let take = r.gen_range(0..=v.len().min(2));
    v.into_iter().choose_multiple(r, take).into_iter().collect()
}

/// A graph built around a path witness structure of 7 to 10 parts, each part
/// a random connected graph of 1 to 3 vertices, sometimes with one chord
/// between non-consecutive parts.
fn path_blowup(r: &mut impl Rng) -> Planted {
    let parts = r.gen_range(7..=10);
    let sizes: Vec<usize> = (0..parts).map(|_| if r.gen_bool(0.6) { 1 } else { r.gen_range(2..=3) }).collect();
    let mut start = vec![0];
    for s in &sizes {
        start.push(start.last().unwrap() + s);
    }
    let n = *start.last().unwrap();
    let mut edges = Vec::new();
    for i in 0..parts {
        let inner = random_connected(r, sizes[i], 0.5);
        edges.extend(inner.edges().iter().map(|&(u, v)| (u + start[i], v + start[i])));
        if i + 1 < parts {
            let a = start[i] + r.gen_range(0..sizes[i]);
            let b = start[i + 1] + r.gen_range(0..sizes[i + 1]);
            edges.push((a, b));
            for u in start[i]..start[i + 1] {
                for v in start[i + 1]..start[i + 2] {
                    if (u, v) != (a, b) && r.gen_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }
    if r.gen_bool(0.3) {
        let i = r.gen_range(0..parts - 2);
        let j = r.gen_range(i + 2..parts);
        edges.push((start[i], start[j]));
    }
    Planted {
        graph: Graph::new(n, edges).unwrap(),
        first: (start[0]..start[1]).collect(),
        last: (start[parts - 1]..n).collect(),
        cost: n - parts,
    }
}
