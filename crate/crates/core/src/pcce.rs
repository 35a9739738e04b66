//! Path contraction with constrained ends.
//!
//! Given a connected graph `G`, disjoint end sets `X` and `Y`, and a budget
//! `k`, decide whether at most `k` contractions turn `G` into a path whose
//! first witness set contains `X` and whose last contains `Y`.
//!
//! Short targets (`n <= k + 5`) are settled by trying every 2-colouring that
//! keeps `X` and `Y` monochromatic. Longer targets go through a dynamic
//! program over *potential witness sets* (candidate interior parts that split
//! `G` into an `X`-side and a `Y`-side) and their *prefix sets* (a witness set
//! together with one of the two sides). A table entry `(side, S, W, k')` is
//! true when `G[S]` contracts with at most `k'` contractions to a path whose
//! last part is `W` and whose first part holds that side's end set. Entries
//! are extended forwards by *attachments*, connected sets glued after `W`,
//! and the two sides are finally matched on a shared `W`.

use std::collections::{BTreeSet, HashMap};

use log::debug;

use crate::enumerate::{Bounds, ConnectedSets};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::witness::{monochromatic_parts, order_as_path, verify_witness, WitnessStructure};

/// A validated constrained-ends instance.
#[derive(Clone, Debug)]
pub struct ConstrainedInstance {
    g: Graph,
    x: VertexSet,
    y: VertexSet,
    budget: usize,
}

impl ConstrainedInstance {
    /// Checks that `g` is connected and `x`, `y` are disjoint vertex sets of
    /// `g`. Budgets above `n - 1` are clamped, since no structure costs more.
    pub fn new(g: Graph, x: VertexSet, y: VertexSet, budget: usize) -> Result<Self> {
        let n = g.vertex_count();
        if let Some(v) = x.union(&y).last().filter(|&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if x.intersects(&y) {
            return Err(Error::InvalidInstance("end sets X and Y overlap".into()));
        }
        if !g.is_connected() {
            return Err(Error::InvalidInstance("graph is not connected".into()));
        }
        let budget = budget.min(n - 1);
        Ok(Self { g, x, y, budget })
    }

    pub fn unconstrained(g: Graph, budget: usize) -> Result<Self> {
        Self::new(g, VertexSet::new(), VertexSet::new(), budget)
    }

    pub fn graph(&self) -> &Graph {
        &self.g
    }

    pub fn x(&self) -> &VertexSet {
        &self.x
    }

    pub fn y(&self) -> &VertexSet {
        &self.y
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// With both end sets empty the two sides are interchangeable and share
    /// one table.
    fn symmetric(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    fn ends(&self, side: Side) -> (&VertexSet, &VertexSet) {
        match side {
            Side::X => (&self.x, &self.y),
            Side::Y => (&self.y, &self.x),
        }
    }

    /// `k + slack - |X| - |Y|`, or `None` when negative.
    fn slack(&self, slack: usize) -> Option<usize> {
        (self.budget + slack).checked_sub(self.x.len() + self.y.len())
    }

    fn accepts(&self, w: &WitnessStructure) -> bool {
        verify_witness(&self.g, w).is_ok()
            && w.cost() <= self.budget
            && self.x.is_subset(w.first())
            && self.y.is_subset(w.last())
            && (w.len() >= 2 || self.g.vertex_count() == 1)
    }
}

/// Which end set a prefix set grows from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    X,
    Y,
}

/// A candidate interior witness set `W` with the two components of `G - W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PotentialWitnessSet {
    pub w: VertexSet,
    pub comp_x: VertexSet,
    pub comp_y: VertexSet,
    /// `|N(W) \ (X ∪ Y)|`.
    pub boundary_free: usize,
}

impl PotentialWitnessSet {
    pub fn prefix(&self, side: Side) -> VertexSet {
        match side {
            Side::X => self.comp_x.union(&self.w),
            Side::Y => self.comp_y.union(&self.w),
        }
    }
}

/// Splits `G - W` into the `X`-side and `Y`-side components, if there are
/// exactly two and they hold the end sets.
fn split_sides(inst: &ConstrainedInstance, w: &VertexSet) -> Option<(VertexSet, VertexSet)> {
    let g = &inst.g;
    let mut comps = g.components(&g.vertices().difference(w));
    if comps.len() != 2 {
        return None;
    }
    let second = comps.pop().expect("two components");
    let first = comps.pop().expect("two components");
    let (cx, cy) = if let Some(v) = inst.x.first() {
        if first.contains(v) { (first, second) } else { (second, first) }
    } else if let Some(v) = inst.y.first() {
        if first.contains(v) { (second, first) } else { (first, second) }
    } else {
        (first, second)
    };
    (inst.x.is_subset(&cx) && inst.y.is_subset(&cy)).then_some((cx, cy))
}

/// Every potential witness set: connected `W ⊆ V \ (X ∪ Y)` with
/// `|N(W) \ (X ∪ Y)| + |W| <= k + 5 - |X| - |Y|` such that `G - W` has
/// exactly two components containing `X` and `Y` respectively.
pub fn enum_potential_witness_sets(
    inst: &ConstrainedInstance,
) -> impl Iterator<Item = PotentialWitnessSet> + '_ {
    let limit = inst.slack(5).unwrap_or(0);
    let universe = inst.g.vertices().difference(&inst.x.union(&inst.y));
    ConnectedSets::new(&inst.g, universe, VertexSet::new(), Bounds::total(limit))
        .with_boundary()
        .filter_map(move |(w, boundary)| {
            let (comp_x, comp_y) = split_sides(inst, &w)?;
            Some(PotentialWitnessSet {
                boundary_free: boundary.len(),
                w,
                comp_x,
                comp_y,
            })
        })
}

/// Potential attachments after the prefix `prefix` ending in `last`: connected
/// `A ⊆ V \ prefix` with `N(prefix) ⊆ A`, `|N(prefix)| <= |A| <= k + 1` and
/// `|(N(last) ∩ prefix) \ near| + |last| + |A| + |(N(A) \ prefix) \ far| <=
/// k + 6 - |X| - |Y|`. Sets meeting the far end set are skipped, as they can
/// never be interior witness sets. Each item carries `|N(A) \ prefix|`.
pub fn attachments(
    inst: &ConstrainedInstance,
    side: Side,
    prefix: &VertexSet,
    last: &VertexSet,
) -> Vec<(VertexSet, usize)> {
    let g = &inst.g;
    let (near, far) = inst.ends(side);
    let seed = g.neighborhood(prefix);
    if seed.is_empty() || seed.intersects(far) {
        return Vec::new();
    }
    let behind = g.neighborhood(last).intersection(prefix).difference(near).len();
    let Some(room) = inst
        .slack(6)
        .and_then(|s| s.checked_sub(behind + last.len()))
    else {
        return Vec::new();
    };
    let bounds = Bounds {
        size_min: seed.len(),
        size_max: (inst.budget + 1).min(room),
        boundary_min: 0,
        boundary_max: room,
        total_max: room,
    };
    let universe = g.vertices().difference(&prefix.union(far));
    ConnectedSets::new(g, universe, seed, bounds)
        .with_boundary()
        .map(|(a, free)| {
            let touched_far = g.neighborhood(&a).intersection(far).len();
            (a, free.len() + touched_far)
        })
        .collect()
}

/// One true index of the table: `G[prefix]` contracts with `used`
/// contractions to a path ending in `last` and starting at the side's end set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DpIndex {
    pub side: Side,
    pub prefix: VertexSet,
    pub last: VertexSet,
    pub used: usize,
}

/// Truth values for one `(side, prefix, last)` pair. Validity caps `k'` at
/// `k - |N(prefix)| + 1`, and truth is upward closed in `k'`, so the true
/// indices form the range `min_used..=max_used`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DpEntry {
    pub min_used: usize,
    pub max_used: usize,
    /// The `(prefix, last)` this entry was extended from at `min_used`;
    /// `None` for two-part entries created at initialisation.
    pub pred: Option<(VertexSet, VertexSet)>,
}

type Key = (Side, VertexSet, VertexSet);

/// The sparse table of true entries.
#[derive(Clone, Debug, Default)]
pub struct DpTable {
    entries: HashMap<Key, DpEntry>,
}

impl DpTable {
    pub fn entry(&self, side: Side, prefix: &VertexSet, last: &VertexSet) -> Option<&DpEntry> {
        // Cloning the key is cheap for inline sets; lookups are rare outside the solver.
        self.entries.get(&(side, prefix.clone(), last.clone()))
    }

    pub fn is_true(&self, index: &DpIndex) -> bool {
        self.entry(index.side, &index.prefix, &index.last)
            .is_some_and(|e| (e.min_used..=e.max_used).contains(&index.used))
    }

    /// Number of materialised `(side, prefix, last)` pairs.
    pub fn pair_count(&self) -> usize {
        self.entries.len()
    }

    /// Number of true valid indices, counting every `k'` separately.
    pub fn true_index_count(&self) -> usize {
        self.entries.values().map(|e| e.max_used - e.min_used + 1).sum()
    }

    /// All true indices.
    pub fn true_indices(&self) -> impl Iterator<Item = DpIndex> + '_ {
        self.entries.iter().flat_map(|((side, prefix, last), e)| {
            (e.min_used..=e.max_used).map(move |used| DpIndex {
                side: *side,
                prefix: prefix.clone(),
                last: last.clone(),
                used,
            })
        })
    }

    /// Parts `(W_1, ..., W_q = last)` of the cheapest structure recorded for
    /// this entry.
    fn unwind(&self, side: Side, prefix: &VertexSet, last: &VertexSet) -> Vec<VertexSet> {
        let mut parts = Vec::new();
        let (mut s, mut w) = (prefix.clone(), last.clone());
        loop {
            let e = &self.entries[&(side, s.clone(), w.clone())];
            match &e.pred {
                Some((ps, pw)) => {
                    parts.push(w);
                    s = ps.clone();
                    w = pw.clone();
                }
                None => {
                    parts.push(w.clone());
                    parts.push(s.difference(&w));
                    break;
                }
            }
        }
        parts.reverse();
        parts
    }
}

/// Constant `c` in the table-size bound `c · 2^(k-|X|-|Y|) · n²`.
pub const DP_BOUND_CONSTANT: f64 = 256.0;

/// `c · 2^(k-|X|-|Y|) · n²`, an upper bound on the number of true indices.
pub fn dp_index_bound(n: usize, k: usize, ends: usize) -> f64 {
    DP_BOUND_CONSTANT * 2f64.powi(k as i32 - ends as i32) * (n * n) as f64
}

/// Counters reported by the solver.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PcceStats {
    pub potential_witness_sets: usize,
    pub dp_pairs: usize,
    pub dp_true_indices: usize,
    pub attachments: usize,
    pub colourings: u64,
    pub used_dp: bool,
}

#[derive(Clone, Debug)]
pub struct PcceOutcome {
    pub witness: Option<WitnessStructure>,
    pub stats: PcceStats,
    pub table: Option<DpTable>,
}

/// Tries every 2-colouring with `X` and `Y` monochromatic; only applies when
/// `n <= k + 5`, where some optimal path has at most five parts.
pub fn solve_small_target(inst: &ConstrainedInstance) -> Option<WitnessStructure> {
    small_target(inst).0
}

fn small_target(inst: &ConstrainedInstance) -> (Option<WitnessStructure>, u64) {
    let g = &inst.g;
    let n = g.vertex_count();
    if n > inst.budget + 5 {
        return (None, 0);
    }
    if n == 1 {
        return (Some(WitnessStructure::path(vec![VertexSet::singleton(0)])), 0);
    }
    let mut free: Vec<usize> = g
        .vertices()
        .difference(&inst.x.union(&inst.y))
        .to_vec();
    let mut base_options = vec![VertexSet::new()];
    if !inst.x.is_empty() && !inst.y.is_empty() {
        base_options.push(inst.y.clone());
    } else if inst.symmetric() {
        // Swapping the colours gives the same partition.
        free.remove(0);
    }
    let mut tried = 0u64;
    for base in &base_options {
        for mask in 0u64..1 << free.len() {
            tried += 1;
            let mut ones = base.clone();
            ones.extend((0..free.len()).filter(|i| mask >> i & 1 == 1).map(|i| free[i]));
            let parts = monochromatic_parts(g, &ones);
            if parts.len() < 2 || n - parts.len() > inst.budget {
                continue;
            }
            let Some(ordered) = order_as_path(g, parts) else {
                continue;
            };
            let w = WitnessStructure::path(ordered);
            for candidate in [w.clone(), w.reversed()] {
                if inst.x.is_subset(candidate.first()) && inst.y.is_subset(candidate.last()) {
                    return (Some(candidate), tried);
                }
            }
        }
    }
    (None, tried)
}

/// Solves the instance, returning a verified witness structure or `None`.
pub fn solve_pcce(inst: &ConstrainedInstance) -> Result<Option<WitnessStructure>> {
    Ok(PcceSolver::new(inst).run()?.witness)
}

/// Path contraction: the constrained problem with both end sets empty.
pub fn solve_path(g: &Graph, k: usize) -> Result<Option<WitnessStructure>> {
    solve_pcce(&ConstrainedInstance::unconstrained(g.clone(), k)?)
}

/// The solver with access to its table and counters.
pub struct PcceSolver<'a> {
    inst: &'a ConstrainedInstance,
    keep_table: bool,
}

impl<'a> PcceSolver<'a> {
    pub fn new(inst: &'a ConstrainedInstance) -> Self {
        Self {
            inst,
            keep_table: false,
        }
    }

    /// Keep the dynamic-programming table in the outcome.
    pub fn keep_table(mut self) -> Self {
        self.keep_table = true;
        self
    }

    /// Runs the table-based algorithm even for short targets.
    pub fn run_dp(&self) -> Result<PcceOutcome> {
        let mut stats = PcceStats {
            used_dp: true,
            ..PcceStats::default()
        };
        let (witness, table) = self.dynamic_program(&mut stats);
        let witness = witness.map(|w| self.check(w)).transpose()?;
        Ok(PcceOutcome {
            witness,
            stats,
            table: self.keep_table.then_some(table),
        })
    }

    pub fn run(&self) -> Result<PcceOutcome> {
        let inst = self.inst;
        let g = &inst.g;
        let n = g.vertex_count();
        if inst.symmetric() && g.is_path() {
            let singles = (0..n).map(VertexSet::singleton).collect();
            let parts = order_as_path(g, singles).expect("g is a path");
            let w = WitnessStructure::path(parts);
            return Ok(PcceOutcome {
                witness: Some(self.check(w)?),
                stats: PcceStats::default(),
                table: None,
            });
        }
        if n <= inst.budget + 5 {
            let (w, colourings) = small_target(inst);
            let witness = w.map(|w| self.check(w)).transpose()?;
            return Ok(PcceOutcome {
                witness,
                stats: PcceStats {
                    colourings,
                    ..PcceStats::default()
                },
                table: None,
            });
        }
        self.run_dp()
    }

    fn check(&self, w: WitnessStructure) -> Result<WitnessStructure> {
        if self.inst.accepts(&w) {
            Ok(w)
        } else {
            Err(Error::RejectedCertificate(format!(
                "{:?} (verify: {:?})",
                w.parts,
                verify_witness(&self.inst.g, &w)
            )))
        }
    }

    fn dynamic_program(&self, stats: &mut PcceStats) -> (Option<WitnessStructure>, DpTable) {
        let inst = self.inst;
        let g = &inst.g;
        let k = inst.budget;
        let y_side = if inst.symmetric() { Side::X } else { Side::Y };

        let witness_sets: Vec<PotentialWitnessSet> = enum_potential_witness_sets(inst).collect();
        stats.potential_witness_sets = witness_sets.len();

        let mut table = DpTable::default();
        let mut queue: BTreeSet<(usize, usize, Key)> = BTreeSet::new();

        // Initialisation: (C, W) is a two-part path of G[C ∪ W].
        for pws in &witness_sets {
            for (side, comp) in [(Side::X, &pws.comp_x), (y_side, &pws.comp_y)] {
                let prefix = comp.union(&pws.w);
                let lo = prefix.len() - 2;
                let Some(hi) = (k + 1).checked_sub(g.neighborhood(&prefix).len()) else {
                    continue;
                };
                let hi = hi.min(k);
                if lo > hi {
                    continue;
                }
                let key = (side, prefix, pws.w.clone());
                queue.insert((key.1.len(), key.2.len(), key.clone()));
                table.entries.insert(
                    key,
                    DpEntry {
                        min_used: lo,
                        max_used: hi,
                        pred: None,
                    },
                );
            }
        }

        // Forward updates, in increasing |S|, then |W|. Every update targets a
        // strictly larger prefix, so an entry is final when it is popped.
        let wide_limit = inst.slack(5).unwrap_or(0);
        while let Some((_, _, key)) = queue.pop_first() {
            let (side, prefix, last) = &key;
            let used = table.entries[&key].min_used;
            let (_, far) = inst.ends(*side);
            for (a, out) in attachments(inst, *side, prefix, last) {
                stats.attachments += 1;
                let lo = used + a.len() - 1;
                let Some(hi) = (k + 1).checked_sub(out) else {
                    continue;
                };
                let hi = hi.min(k);
                if lo > hi {
                    continue;
                }
                let grown = prefix.union(&a);
                // The target must itself be a valid index: A is a potential
                // witness set whose far component is the rest of the graph.
                let rest = g.vertices().difference(&grown);
                let free_boundary = g
                    .neighborhood(&a)
                    .difference(&inst.x)
                    .difference(&inst.y)
                    .len();
                if free_boundary + a.len() > wide_limit
                    || !far.is_subset(&rest)
                    || !g.is_connected_set(&rest)
                {
                    continue;
                }
                let target = (*side, grown, a);
                match table.entries.get_mut(&target) {
                    Some(e) => {
                        if lo < e.min_used {
                            e.min_used = lo;
                            e.pred = Some((prefix.clone(), last.clone()));
                        }
                    }
                    None => {
                        queue.insert((target.1.len(), target.2.len(), target.clone()));
                        table.entries.insert(
                            target,
                            DpEntry {
                                min_used: lo,
                                max_used: hi,
                                pred: Some((prefix.clone(), last.clone())),
                            },
                        );
                    }
                }
            }
        }
        stats.dp_pairs = table.pair_count();
        stats.dp_true_indices = table.true_index_count();

        // Match the two sides on a shared witness set.
        let mut best: Option<(usize, &PotentialWitnessSet)> = None;
        for pws in &witness_sets {
            let sx = pws.prefix(Side::X);
            let sy = pws.prefix(Side::Y);
            let (Some(ex), Some(ey)) = (
                table.entry(Side::X, &sx, &pws.w),
                table.entry(y_side, &sy, &pws.w),
            ) else {
                continue;
            };
            let total = ex.min_used + ey.min_used + 1 - pws.w.len();
            if total <= k && best.is_none_or(|(c, _)| total < c) {
                best = Some((total, pws));
            }
        }
        debug!(
            "pcce dp: n={} k={} |X|={} |Y|={} witness sets={} pairs={} attachments={}",
            g.vertex_count(),
            k,
            inst.x.len(),
            inst.y.len(),
            stats.potential_witness_sets,
            stats.dp_pairs,
            stats.attachments
        );
        let witness = best.map(|(_, pws)| {
            let mut parts = table.unwind(Side::X, &pws.prefix(Side::X), &pws.w);
            let mut tail = table.unwind(y_side, &pws.prefix(Side::Y), &pws.w);
            tail.pop();
            tail.reverse();
            parts.extend(tail);
            WitnessStructure::path(parts)
        });
        (witness, table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::Shape;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn inst(g: Graph, x: &[usize], y: &[usize], k: usize) -> ConstrainedInstance {
        ConstrainedInstance::new(g, set(x), set(y), k).unwrap()
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(ConstrainedInstance::new(Graph::path(3), set(&[0]), set(&[0]), 1).is_err());
        let disconnected = Graph::new(3, [(0, 1)]).unwrap();
        assert!(matches!(
            ConstrainedInstance::unconstrained(disconnected, 1),
            Err(Error::InvalidInstance(_))
        ));
        assert!(ConstrainedInstance::new(Graph::path(3), set(&[5]), set(&[]), 1).is_err());
    }

    #[test]
    fn small_target_examples() {
        let w = solve_small_target(&inst(Graph::path(4), &[0], &[3], 0)).unwrap();
        assert_eq!(w, WitnessStructure::identity(Shape::Path, 4));

        let w = solve_small_target(&inst(Graph::complete(4), &[0], &[3], 2)).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.cost(), 2);
        assert!(w.first().contains(0) && w.last().contains(3));

        // Star with centre 3 and leaves 0, 1, 2.
        let w = solve_small_target(&inst(Graph::star(3), &[0], &[1], 1)).unwrap();
        assert_eq!(w.parts, vec![set(&[0]), set(&[2, 3]), set(&[1])]);
    }

    #[test]
    fn small_target_declines_long_targets() {
        assert!(solve_small_target(&inst(Graph::path(8), &[], &[], 2)).is_none());
    }

    #[test]
    fn potential_witness_sets_on_p6() {
        let i = inst(Graph::path(6), &[0], &[5], 0);
        let mut ws: Vec<_> = enum_potential_witness_sets(&i).map(|p| p.w).collect();
        ws.sort();
        // {1,2} has free boundary {3}: 1 + 2 <= 3, and likewise {3,4}.
        assert_eq!(
            ws,
            vec![set(&[1]), set(&[2]), set(&[1, 2]), set(&[3]), set(&[4]), set(&[3, 4])]
        );
        for p in enum_potential_witness_sets(&i) {
            assert!(p.comp_x.contains(0) && p.comp_y.contains(5));
            assert!(p.boundary_free + p.w.len() <= 3);
        }
    }

    fn brute_potential_witness_sets(i: &ConstrainedInstance) -> Vec<VertexSet> {
        let g = i.graph();
        let ends = i.x().union(i.y());
        let limit = (i.budget() + 5).checked_sub(ends.len());
        (1u64..1 << g.vertex_count())
            .map(VertexSet::from_bits)
            .filter(|w| {
                let free = g.neighborhood(w).difference(&ends).len();
                !w.intersects(&ends)
                    && g.is_connected_set(w)
                    && limit.is_some_and(|l| free + w.len() <= l)
                    && split_sides(i, w).is_some()
            })
            .collect()
    }

    #[test]
    fn potential_witness_sets_match_subset_filter() {
        let graphs = [Graph::path(7), Graph::cycle(6), Graph::grid(2, 4), Graph::star(5)];
        for g in graphs {
            let n = g.vertex_count();
            for (x, y) in [(vec![], vec![]), (vec![0], vec![]), (vec![0], vec![n - 1]), (vec![0, 1], vec![n - 1])] {
                for k in 0..n {
                    let i = inst(g.clone(), &x, &y, k);
                    let mut got: Vec<_> = enum_potential_witness_sets(&i).map(|p| p.w).collect();
                    got.sort();
                    let mut want = brute_potential_witness_sets(&i);
                    want.sort();
                    assert_eq!(got, want, "{g:?} x={x:?} y={y:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn potential_witness_sets_on_k4_and_full_ends() {
        let i = inst(Graph::complete(4), &[0], &[3], 2);
        assert_eq!(enum_potential_witness_sets(&i).count(), 0);
        let i = inst(Graph::path(3), &[0, 1], &[2], 2);
        assert_eq!(enum_potential_witness_sets(&i).count(), 0);
    }

    #[test]
    fn attachments_on_p6() {
        let i = inst(Graph::path(6), &[0], &[5], 0);
        let got = attachments(&i, Side::X, &set(&[0, 1]), &set(&[1]));
        assert_eq!(got, vec![(set(&[2]), 1)]);
        let none = attachments(&i, Side::X, &Graph::path(6).vertices(), &set(&[5]));
        assert!(none.is_empty());
    }

    #[test]
    fn path_examples() {
        let w = solve_pcce(&inst(Graph::path(8), &[0], &[7], 0)).unwrap().unwrap();
        assert_eq!(w, WitnessStructure::identity(Shape::Path, 8));
        let w = solve_pcce(&inst(Graph::path(8), &[0], &[7], 2)).unwrap().unwrap();
        assert!(w.cost() <= 2);

        let w = solve_pcce(&inst(Graph::cycle(4), &[0], &[2], 2)).unwrap().unwrap();
        assert_eq!(w.parts, vec![set(&[0, 1, 3]), set(&[2])]);
    }

    #[test]
    fn solve_path_examples() {
        let w = solve_path(&Graph::path(6), 0).unwrap().unwrap();
        assert_eq!(w.canonical(), WitnessStructure::identity(Shape::Path, 6));
        assert!(solve_path(&Graph::complete(4), 1).unwrap().is_none());
        assert_eq!(solve_path(&Graph::complete(4), 2).unwrap().unwrap().len(), 2);
        assert!(solve_path(&Graph::cycle(4), 1).unwrap().is_none());
        assert_eq!(solve_path(&Graph::cycle(4), 2).unwrap().unwrap().len(), 2);
    }

    #[test]
    fn dp_handles_long_targets() {
        // P10 with a pendant on vertex 4: needs exactly one contraction.
        let g = Graph::path(10).with_extra(1, [(4, 10)]).unwrap();
        let i = ConstrainedInstance::unconstrained(g.clone(), 1).unwrap();
        let out = PcceSolver::new(&i).run().unwrap();
        assert!(out.stats.used_dp);
        let w = out.witness.unwrap();
        assert_eq!(w.cost(), 1);
        assert!(solve_path(&g, 0).unwrap().is_none());
    }

    #[test]
    fn dp_agrees_with_colourings_on_short_targets() {
        let g = Graph::grid(2, 4);
        for k in 0..=7 {
            let i = ConstrainedInstance::new(g.clone(), set(&[0]), set(&[7]), k).unwrap();
            let dp = PcceSolver::new(&i).run_dp().unwrap().witness;
            let small = solve_small_target(&i);
            if let Some(w) = &dp {
                assert!(i.accepts(w));
            }
            // The DP only promises completeness for paths of six or more parts.
            if g.vertex_count() > k + 5 {
                assert_eq!(dp.is_some(), small.is_some(), "k={k}");
            }
        }
    }

    #[test]
    fn single_vertex() {
        let i = inst(Graph::path(1), &[0], &[], 0);
        assert_eq!(solve_pcce(&i).unwrap().unwrap().len(), 1);
    }
}
