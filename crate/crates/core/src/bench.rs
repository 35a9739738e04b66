//! Empirical scaling of the solvers on cycles with chords.

use std::fmt::Write as _;
use std::time::Instant;

use crate::cycle::solve_cycle_with_stats;
use crate::error::{Error, Result};
use crate::gen::{gen_random, Family};
use crate::pcce::{dp_index_bound, ConstrainedInstance, PcceSolver};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Path,
    Cycle,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub target: Target,
    pub k_min: usize,
    pub k_max: usize,
    pub repetitions: usize,
    pub chords: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            target: Target::Path,
            k_min: 4,
            k_max: 12,
            repetitions: 5,
            chords: 2,
            seed: 1,
        }
    }
}

impl BenchConfig {
    /// Every instance has `k_max + 8` vertices, so each repetition runs the
    /// same graph at every budget.
    pub fn vertices(&self) -> usize {
        self.k_max + 8
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub k: usize,
    pub n: usize,
    pub repetitions: usize,
    pub yes: usize,
    pub median_ms: f64,
    /// Path: true table indices; cycle: constrained path calls.
    pub median_states: u64,
    pub max_states: u64,
    pub bound: f64,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub target: Target,
    pub rows: Vec<BenchRow>,
}

fn median<T: Copy + PartialOrd>(values: &mut [T]) -> T {
    values.sort_by(|a, b| a.partial_cmp(b).expect("comparable"));
    values[values.len() / 2]
}

fn ratios(values: impl Iterator<Item = f64>) -> Vec<f64> {
    let v: Vec<f64> = values.collect();
    v.windows(2)
        .map(|w| if w[0] > 0.0 { w[1] / w[0] } else { f64::NAN })
        .collect()
}

fn median_of(mut v: Vec<f64>) -> Option<f64> {
    v.retain(|x| x.is_finite());
    (!v.is_empty()).then(|| median(&mut v))
}

impl BenchReport {
    /// Consecutive wall-time ratios, one per `(k, k+1)` pair.
    pub fn time_ratios(&self) -> Vec<f64> {
        ratios(self.rows.iter().map(|r| r.median_ms))
    }

    pub fn state_ratios(&self) -> Vec<f64> {
        ratios(self.rows.iter().map(|r| r.median_states as f64))
    }

    pub fn median_time_ratio(&self) -> Option<f64> {
        median_of(self.time_ratios())
    }

    pub fn median_state_ratio(&self) -> Option<f64> {
        median_of(self.state_ratios())
    }

    /// Rows whose largest state count exceeds the table-size bound.
    pub fn bound_violations(&self) -> Vec<usize> {
        self.rows
            .iter()
            .filter(|r| self.target == Target::Path && r.max_states as f64 > r.bound)
            .map(|r| r.k)
            .collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from(
            "k\tn\treps\tyes\tmedian_ms\tmedian_states\tmax_states\tbound\ttime_ratio\tstate_ratio\n",
        );
        let (tr, sr) = (self.time_ratios(), self.state_ratios());
        for (i, r) in self.rows.iter().enumerate() {
            let ratio = |v: &[f64]| match i.checked_sub(1).and_then(|j| v.get(j)) {
                Some(x) if x.is_finite() => format!("{x:.3}"),
                _ => "-".into(),
            };
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{:.3}\t{}\t{}\t{:.0}\t{}\t{}",
                r.k,
                r.n,
                r.repetitions,
                r.yes,
                r.median_ms,
                r.median_states,
                r.max_states,
                r.bound,
                ratio(&tr),
                ratio(&sr)
            )
            .expect("writing to a string");
        }
        let fmt = |x: Option<f64>| x.map_or("-".into(), |x| format!("{x:.3}"));
        writeln!(out, "# median time ratio {}", fmt(self.median_time_ratio())).expect("writing to a string");
        writeln!(out, "# median state ratio {}", fmt(self.median_state_ratio())).expect("writing to a string");
        out
    }
}

pub fn bench_scaling(config: &BenchConfig) -> Result<BenchReport> {
    if config.repetitions == 0 || config.k_min > config.k_max {
        return Err(Error::InvalidArgument("empty benchmark range".into()));
    }
    let n = config.vertices();
    let graphs = (0..config.repetitions as u64)
        .map(|rep| gen_random(&Family::CyclePlusChords { n, chords: config.chords }, config.seed.wrapping_add(rep)))
        .collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for k in config.k_min..=config.k_max {
        let mut times = Vec::new();
        let mut states = Vec::new();
        let mut yes = 0;
        for g in graphs.iter().cloned() {
            let start = Instant::now();
            let (found, count) = match config.target {
                Target::Path => {
                    let inst = ConstrainedInstance::unconstrained(g, k)?;
                    let out = PcceSolver::new(&inst).run()?;
                    (out.witness.is_some(), out.stats.dp_true_indices as u64)
                }
                Target::Cycle => {
                    let (w, stats) = solve_cycle_with_stats(&g, k)?;
                    (w.is_some(), stats.path_calls as u64)
                }
            };
            times.push(start.elapsed().as_secs_f64() * 1e3);
            states.push(count);
            yes += usize::from(found);
        }
        rows.push(BenchRow {
            k,
            n,
            repetitions: config.repetitions,
            yes,
            median_ms: median(&mut times),
            median_states: median(&mut states),
            max_states: *states.iter().max().expect("non-empty"),
            bound: dp_index_bound(n, k, 0),
        });
    }
    Ok(BenchReport {
        target: config.target,
        rows,
    })
}
