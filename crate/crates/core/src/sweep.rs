//! Per-graph comparisons of the solvers against the oracle.
//!
//! Each check runs every budget of interest on one graph and returns the
//! number of comparisons made and a description of each disagreement or
//! rejected certificate.

use rand::Rng;

use crate::cycle::{cyclicity_exact, solve_cycle};
use crate::error::Result;
use crate::gen::random_ends;
use crate::graph::Graph;
use crate::oracle::Oracle;
use crate::pcce::{solve_pcce, ConstrainedInstance};
use crate::reductions::{path_via_cycle, SolverBackend};
use crate::set::VertexSet;
use crate::witness::{verify_witness, Shape, WitnessStructure};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub checks: usize,
    pub issues: Vec<String>,
}

impl CheckOutcome {
    pub fn merge(&mut self, other: CheckOutcome) {
        self.checks += other.checks;
        self.issues.extend(other.issues);
    }

    fn compare(&mut self, what: impl FnOnce() -> String, got: bool, want: bool) {
        self.checks += 1;
        if got != want {
            self.issues.push(format!("{}: solver {} oracle {}", what(), yes(got), yes(want)));
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b { "yes" } else { "no" }
}

fn certificate_issue(g: &Graph, w: &WitnessStructure, shape: Shape, k: usize) -> Option<String> {
    if w.shape != shape {
        return Some(format!("wrong shape {}", w.shape));
    }
    if let Err(v) = verify_witness(g, w) {
        return Some(format!("certificate rejected: {v}"));
    }
    (w.cost() > k).then(|| format!("certificate cost {} exceeds {k}", w.cost()))
}

fn path_budgets(g: &Graph) -> std::ops::RangeInclusive<usize> {
    0..=g.vertex_count().saturating_sub(2)
}

/// `solve_path` against the oracle for every `k` in `[0, n-2]`.
pub fn check_path(g: &Graph) -> Result<CheckOutcome> {
    let oracle = Oracle::default();
    let mut out = CheckOutcome::default();
    for k in path_budgets(g) {
        let got = crate::pcce::solve_path(g, k)?;
        let want = oracle.path(g, k)?;
        out.compare(|| format!("path {g:?} k={k}"), got.is_some(), want.is_some());
        if let Some(issue) = got.and_then(|w| certificate_issue(g, &w, Shape::Path, k)) {
            out.issues.push(format!("path {g:?} k={k}: {issue}"));
        }
    }
    Ok(out)
}

/// `solve_pcce` against the oracle for `pairs` random disjoint end-set pairs
/// (sizes at most 2) and every `k` in `[0, n-2]`.
pub fn check_pcce(g: &Graph, pairs: usize, rng: &mut impl Rng) -> Result<CheckOutcome> {
    let oracle = Oracle::default();
    let mut out = CheckOutcome::default();
    for _ in 0..pairs {
        let (x, y) = random_ends(rng, g.vertex_count(), 2);
        for k in path_budgets(g) {
            out.merge(check_pcce_instance(g, &x, &y, k, &oracle)?);
        }
    }
    Ok(out)
}

pub fn check_pcce_instance(g: &Graph, x: &VertexSet, y: &VertexSet, k: usize, oracle: &Oracle) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    let inst = ConstrainedInstance::new(g.clone(), x.clone(), y.clone(), k)?;
    let got = solve_pcce(&inst)?;
    let want = oracle.pcce(g, x, y, k)?;
    let what = || format!("pcce {g:?} X={x} Y={y} k={k}");
    out.compare(what, got.is_some(), want.is_some());
    if let Some(w) = got {
        let mut issue = certificate_issue(g, &w, Shape::Path, k);
        if !x.is_subset(w.first()) || !y.is_subset(w.last()) {
            issue = Some("end sets not in the end parts".into());
        }
        if let Some(issue) = issue {
            out.issues.push(format!("{}: {issue}", what()));
        }
    }
    Ok(out)
}

/// `solve_cycle` against the oracle for every `k` in `[0, n-3]`.
pub fn check_cycle(g: &Graph) -> Result<CheckOutcome> {
    let oracle = Oracle::default();
    let mut out = CheckOutcome::default();
    for k in 0..=g.vertex_count().saturating_sub(3) {
        let got = solve_cycle(g, k)?;
        let want = oracle.cycle(g, k)?;
        out.compare(|| format!("cycle {g:?} k={k}"), got.is_some(), want.is_some());
        if let Some(issue) = got.and_then(|w| certificate_issue(g, &w, Shape::Cycle, k)) {
            out.issues.push(format!("cycle {g:?} k={k}: {issue}"));
        }
    }
    Ok(out)
}

/// `cyclicity_exact` against the oracle.
pub fn check_cyclicity(g: &Graph) -> Result<CheckOutcome> {
    let mut out = CheckOutcome::default();
    let got = cyclicity_exact(g)?;
    let want = Oracle::default().cyclicity(g)?;
    out.checks += 1;
    let got_len = got.as_ref().map(|(l, _)| *l);
    if got_len != want {
        out.issues.push(format!("cyclicity {g:?}: solver {got_len:?} oracle {want:?}"));
    }
    if let Some((l, w)) = got {
        let n = g.vertex_count();
        if w.len() != l {
            out.issues.push(format!("cyclicity {g:?}: structure has {} parts, not {l}", w.len()));
        } else if let Some(issue) = certificate_issue(g, &w, Shape::Cycle, n - l) {
            out.issues.push(format!("cyclicity {g:?}: {issue}"));
        }
    }
    Ok(out)
}

/// Path contraction through the cycle construction against the oracle, for
/// `k` in `[0, k_max]`.
pub fn check_path_via_cycle(g: &Graph, k_max: usize) -> Result<CheckOutcome> {
    let oracle = Oracle::default();
    let mut out = CheckOutcome::default();
    for k in 0..=k_max {
        let got = path_via_cycle(g, k, &SolverBackend)?;
        let want = oracle.path(g, k)?;
        out.compare(|| format!("path via cycle {g:?} k={k}"), got.is_some(), want.is_some());
        if let Some(issue) = got.and_then(|w| certificate_issue(g, &w, Shape::Path, k)) {
            out.issues.push(format!("path via cycle {g:?} k={k}: {issue}"));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::rng;

    #[test]
    fn checks_pass_on_small_graphs() {
        let mut r = rng(1);
        for g in [Graph::cycle(5), Graph::grid(2, 3), Graph::complete(4), Graph::star(4)] {
            let mut all = check_path(&g).unwrap();
            all.merge(check_pcce(&g, 3, &mut r).unwrap());
            all.merge(check_cycle(&g).unwrap());
            all.merge(check_cyclicity(&g).unwrap());
            all.merge(check_path_via_cycle(&g, 2).unwrap());
            assert!(all.issues.is_empty(), "{:?}", all.issues);
            assert!(all.checks > 5);
        }
    }

    #[test]
    fn compare_records_disagreements() {
        let mut out = CheckOutcome::default();
        out.compare(|| "x".into(), true, false);
        assert_eq!(out.issues, vec!["x: solver yes oracle no".to_string()]);
    }
}
