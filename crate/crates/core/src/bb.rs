//! Leaf function of an arbitrary graph by exhaustive exploration of
//! configurations, optionally pruned with the leaf potential.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::config::Configuration;
use crate::graph::{random_gnp, Graph, VertexId};
use crate::leaf_function::LeafFunction;
use crate::potential::prunable;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Configurations where no vertex could be added, i.e. induced subtrees
    /// reported to the leaf function.
    pub visited_subtrees: u64,
    pub include_ops: u64,
    pub exclude_ops: u64,
    /// Branch points cut by the bound.
    pub pruned: u64,
    /// Search-tree nodes entered.
    pub nodes: u64,
    #[serde(rename = "elapsed_ms", serialize_with = "as_millis")]
    pub elapsed: Duration,
}

fn as_millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOptions {
    pub use_bound: bool,
    /// Sizes for which to record one optimal vertex set.
    pub witnesses_for: BTreeSet<usize>,
    /// Maximum number of search nodes before giving up.
    pub node_budget: Option<u64>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            use_bound: true,
            witnesses_for: BTreeSet::new(),
            node_budget: None,
        }
    }
}

impl SolveOptions {
    pub fn without_bound() -> Self {
        SolveOptions {
            use_bound: false,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub leaf_function: LeafFunction,
    pub stats: SearchStats,
    /// Size -> one vertex set achieving the optimum at that size.
    pub witnesses: BTreeMap<usize, Vec<VertexId>>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("node budget of {budget} exhausted; values found so far are lower bounds only")]
    BudgetExhausted {
        budget: u64,
        /// Best values seen before stopping. Not the leaf function.
        partial: Box<Solution>,
    },
    #[error("invalid options: {0}")]
    InvalidOptions(String),
}

enum Frame {
    Enter,
    AfterInclude(VertexId),
    AfterExclude,
}

/// Depth-first walk over the include/exclude decision tree. `visit` is
/// called at every configuration where no vertex can be added; `cut` may
/// veto a branch point before it is expanded.
fn explore<V, C>(
    g: &Graph,
    stats: &mut SearchStats,
    budget: Option<u64>,
    mut visit: V,
    mut cut: C,
) -> bool
where
    V: FnMut(&Configuration),
    C: FnMut(&Configuration) -> bool,
{
    let mut c = Configuration::new(g);
    let mut stack = vec![Frame::Enter];
    while let Some(frame) = stack.pop() {
        match frame {
            Frame::Enter => {
                stats.nodes += 1;
                if budget.is_some_and(|b| stats.nodes > b) {
                    return false;
                }
                match c.vertex_to_add() {
                    None => {
                        stats.visited_subtrees += 1;
                        visit(&c);
                    }
                    Some(_) if cut(&c) => stats.pruned += 1,
                    Some(u) => {
                        c.add_to_subtree(u).expect("vertex_to_add is addable");
                        stats.include_ops += 1;
                        stack.push(Frame::AfterInclude(u));
                        stack.push(Frame::Enter);
                    }
                }
            }
            Frame::AfterInclude(u) => {
                c.undo().expect("include on history");
                c.exclude_vertex(u).expect("addable vertex is excludable");
                stats.exclude_ops += 1;
                stack.push(Frame::AfterExclude);
                stack.push(Frame::Enter);
            }
            Frame::AfterExclude => c.undo().expect("exclude on history"),
        }
    }
    true
}

/// Computes the leaf function of `g`.
pub fn leaf_function_bb(g: &Graph, opts: &SolveOptions) -> Result<Solution, SolveError> {
    if opts.node_budget == Some(0) {
        return Err(SolveError::InvalidOptions(
            "node budget must be positive".into(),
        ));
    }
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let best = std::cell::RefCell::new(LeafFunction::unknown(g.order()));
    let mut witnesses = BTreeMap::new();

    let finished = explore(
        g,
        &mut stats,
        opts.node_budget,
        |c| {
            let (size, leaves) = c.green_stats();
            let improved = best.borrow_mut().improve(size, leaves);
            // size 0 starts out solved, so its witness is taken on first sight
            let first = size == 0 && !witnesses.contains_key(&0);
            if (improved || first) && opts.witnesses_for.contains(&size) {
                let mut set = c.greens().to_vec();
                set.sort_unstable();
                witnesses.insert(size, set);
            }
        },
        |c| opts.use_bound && c.green_count() >= 3 && prunable(c, &best.borrow()),
    );
    stats.elapsed = start.elapsed();

    let solution = Solution {
        leaf_function: best.into_inner(),
        stats,
        witnesses,
    };
    if finished {
        Ok(solution)
    } else {
        Err(SolveError::BudgetExhausted {
            budget: opts.node_budget.unwrap_or_default(),
            partial: Box::new(solution),
        })
    }
}

/// Calls `visitor(size, leaves, vertices)` once per induced subtree of `g`,
/// the empty tree and singletons included, and returns how many there were.
pub fn enumerate_induced_subtrees<F>(g: &Graph, mut visitor: F) -> u64
where
    F: FnMut(usize, usize, &[VertexId]),
{
    let mut stats = SearchStats::default();
    explore(
        g,
        &mut stats,
        None,
        |c| {
            let (size, leaves) = c.green_stats();
            visitor(size, leaves, c.greens());
        },
        |_| false,
    );
    stats.visited_subtrees
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub density: f64,
    pub seed: u64,
    pub visited_bound: u64,
    pub visited_nobound: u64,
    pub ms_bound: f64,
    pub ms_nobound: f64,
}

pub const BENCH_CSV_HEADER: &str =
    "n,density,seed,visited_bound,visited_nobound,ms_bound,ms_nobound";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{:.3},{:.3}",
            self.n,
            self.density,
            self.seed,
            self.visited_bound,
            self.visited_nobound,
            self.ms_bound,
            self.ms_nobound
        )
    }
}

/// Solves `random_gnp(n, density, seed)` with and without the bound for
/// every `(density, seed)` cell. Cells run in parallel; rows come back
/// ordered by density, then seed.
pub fn density_benchmark(n: usize, densities: &[f64], seeds: &[u64]) -> Vec<BenchRow> {
    let cells: Vec<(f64, u64)> = densities
        .iter()
        .flat_map(|&d| seeds.iter().map(move |&s| (d, s)))
        .collect();
    cells
        .into_par_iter()
        .map(|(density, seed)| {
            let g = random_gnp(n, density, seed);
            let with = leaf_function_bb(&g, &SolveOptions::default()).expect("no budget");
            let without = leaf_function_bb(&g, &SolveOptions::without_bound()).expect("no budget");
            debug_assert_eq!(with.leaf_function, without.leaf_function);
            BenchRow {
                n,
                density,
                seed,
                visited_bound: with.stats.visited_subtrees,
                visited_nobound: without.stats.visited_subtrees,
                ms_bound: with.stats.elapsed.as_secs_f64() * 1e3,
                ms_nobound: without.stats.elapsed.as_secs_f64() * 1e3,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::hypercube_table;
    use crate::graph::{is_induced_subtree, leaf_count, Family};
    use crate::leaf_function::LeafCount;

    fn solve(g: &Graph) -> LeafFunction {
        leaf_function_bb(g, &SolveOptions::default())
            .unwrap()
            .leaf_function
    }

    #[test]
    fn examples() {
        let q3 = Family::Hypercube(3).generate().unwrap();
        assert_eq!(solve(&q3), hypercube_table(3).unwrap());
        let k4 = Family::Complete(4).generate().unwrap();
        assert_eq!(solve(&k4).to_table(), "0 0 2 * *");
        let p4 = Family::Path(4).generate().unwrap();
        assert_eq!(solve(&p4).to_table(), "0 0 2 2 2");
        assert_eq!(solve(&Graph::empty(0)).to_table(), "0");
        assert_eq!(solve(&Graph::empty(2)).to_table(), "0 0 *");
    }

    #[test]
    fn bound_does_not_change_result() {
        for seed in 0..20 {
            let g = random_gnp(10, 0.35, seed);
            let a = leaf_function_bb(&g, &SolveOptions::default()).unwrap();
            let b = leaf_function_bb(&g, &SolveOptions::without_bound()).unwrap();
            assert_eq!(a.leaf_function, b.leaf_function);
            assert!(a.stats.visited_subtrees <= b.stats.visited_subtrees);
            assert_eq!(b.stats.pruned, 0);
            assert!(a.stats.pruned <= a.stats.include_ops + a.stats.exclude_ops);
        }
    }

    #[test]
    fn witnesses_are_optimal_subtrees() {
        let q3 = Family::Hypercube(3).generate().unwrap();
        let opts = SolveOptions {
            witnesses_for: (0..=8).collect(),
            ..Default::default()
        };
        let sol = leaf_function_bb(&q3, &opts).unwrap();
        for i in 0..=8 {
            match sol.leaf_function[i] {
                LeafCount::Impossible => assert!(!sol.witnesses.contains_key(&i)),
                LeafCount::Count(l) => {
                    let w = &sol.witnesses[&i];
                    assert_eq!(w.len(), i);
                    assert!(is_induced_subtree(&q3, w));
                    assert_eq!(leaf_count(&q3, w), Ok(l));
                }
            }
        }
        // A claw for i = 4.
        assert_eq!(leaf_count(&q3, &sol.witnesses[&4]), Ok(3));
    }

    #[test]
    fn budget_is_reported() {
        let g = random_gnp(12, 0.3, 1);
        let opts = SolveOptions {
            node_budget: Some(50),
            ..Default::default()
        };
        match leaf_function_bb(&g, &opts) {
            Err(SolveError::BudgetExhausted { budget, partial }) => {
                assert_eq!(budget, 50);
                assert_eq!(partial.stats.nodes, 51);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
        let zero = SolveOptions {
            node_budget: Some(0),
            ..Default::default()
        };
        assert!(matches!(
            leaf_function_bb(&g, &zero),
            Err(SolveError::InvalidOptions(_))
        ));
        let big = SolveOptions {
            node_budget: Some(1 << 40),
            ..Default::default()
        };
        assert!(leaf_function_bb(&g, &big).is_ok());
    }

    #[test]
    fn enumeration_examples() {
        let mut seen = Vec::new();
        let k3 = Family::Complete(3).generate().unwrap();
        let count = enumerate_induced_subtrees(&k3, |_, _, vs| {
            let mut v = vs.to_vec();
            v.sort();
            seen.push(v)
        });
        assert_eq!(count, 7);
        seen.sort();
        assert_eq!(
            seen,
            vec![
                vec![],
                vec![0],
                vec![0, 1],
                vec![0, 2],
                vec![1],
                vec![1, 2],
                vec![2]
            ]
        );

        let p3 = Family::Path(3).generate().unwrap();
        assert_eq!(enumerate_induced_subtrees(&p3, |_, _, _| {}), 7);
        assert_eq!(
            enumerate_induced_subtrees(&Graph::empty(3), |_, _, _| {}),
            4
        );
        assert_eq!(
            enumerate_induced_subtrees(&Graph::empty(1), |_, _, _| {}),
            2
        );
    }

    #[test]
    fn benchmark_rows() {
        let rows = density_benchmark(10, &[1.0, 0.3], &[1, 2]);
        assert_eq!(rows.len(), 4);
        assert_eq!(
            rows.iter().map(|r| (r.density, r.seed)).collect::<Vec<_>>(),
            vec![(1.0, 1), (1.0, 2), (0.3, 1), (0.3, 2)]
        );
        for r in &rows {
            assert!(r.visited_bound <= r.visited_nobound);
        }
        // K_10: empty tree, 10 singletons, 45 edges.
        assert_eq!(rows[0].visited_nobound, 56);
        let single = density_benchmark(1, &[0.5], &[3]);
        assert_eq!((single[0].visited_bound, single[0].visited_nobound), (2, 2));
        assert_eq!(BENCH_CSV_HEADER.split(',').count(), 7);
        assert!(rows[0].to_csv().starts_with("10,1,1,56,56,"));
    }
}
