//! Upper bound on the number of leaves reachable by growing a configuration,
//! and the pruning test built on it.
//!
//! Red vertices are treated as deleted throughout: the component `K`, the
//! distances from the inner green vertices, and the vertex degrees are all
//! measured in the red-free graph.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use thiserror::Error;

use crate::config::{Color, Configuration};
use crate::graph::VertexId;
use crate::leaf_function::{LeafCount, LeafFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PotentialError {
    #[error("configuration has no green vertex")]
    NoGreenVertex,
    #[error("leaf potential needs at least 3 green vertices, got {0}")]
    TooFewGreens(usize),
    #[error("target size {target} is below the current green count {greens}")]
    TargetTooSmall { target: usize, greens: usize },
}

fn red_free_degree(c: &Configuration, v: VertexId) -> usize {
    c.graph()
        .neighbors(v)
        .iter()
        .filter(|&&w| c.color(w) != Color::Red)
        .count()
}

/// Order of the red-free component containing the green tree.
pub fn component_size(c: &Configuration) -> Result<usize, PotentialError> {
    let &start = c.greens().first().ok_or(PotentialError::NoGreenVertex)?;
    let g = c.graph();
    let mut seen = vec![false; g.order()];
    seen[start] = true;
    let mut stack = vec![start];
    let mut size = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if !seen[w] && c.color(w) != Color::Red {
                seen[w] = true;
                size += 1;
                stack.push(w);
            }
        }
    }
    Ok(size)
}

/// Available vertices (yellow, blue and green leaves of `K`) grouped by their
/// distance to the inner green vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvailableLayers {
    pub component_size: usize,
    /// `layers[d - 1]` holds `(vertex, red-free degree)` at distance `d`.
    pub layers: Vec<Vec<(VertexId, usize)>>,
}

impl AvailableLayers {
    pub fn build(c: &Configuration) -> Result<Self, PotentialError> {
        let n = c.green_count();
        if n < 3 {
            return Err(PotentialError::TooFewGreens(n));
        }
        let g = c.graph();
        let mut dist = vec![usize::MAX; g.order()];
        let mut queue = VecDeque::new();
        for &v in c.greens() {
            if c.is_inner(v) {
                dist[v] = 0;
                queue.push_back(v);
            }
        }
        let mut component_size = queue.len();
        let mut layers: Vec<Vec<(VertexId, usize)>> = Vec::new();
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] != usize::MAX || c.color(w) == Color::Red {
                    continue;
                }
                dist[w] = dist[u] + 1;
                component_size += 1;
                queue.push_back(w);
                // Every non-inner vertex of K is available: inner vertices
                // all sit at distance 0.
                if layers.len() < dist[w] {
                    layers.push(Vec::new());
                }
                layers[dist[w] - 1].push((w, red_free_degree(c, w)));
            }
        }
        Ok(AvailableLayers {
            component_size,
            layers,
        })
    }

    /// Degrees of the vertices picked by the greedy rounds, in order. In
    /// round `d` the candidates are the unpicked vertices at distance at
    /// most `d`; the highest degree wins, ties going to the smallest index.
    pub fn greedy_picks(&self) -> GreedyPicks<'_> {
        GreedyPicks {
            layers: self,
            round: 0,
            heap: BinaryHeap::new(),
        }
    }
}

pub struct GreedyPicks<'a> {
    layers: &'a AvailableLayers,
    round: usize,
    heap: BinaryHeap<(usize, Reverse<VertexId>)>,
}

impl Iterator for GreedyPicks<'_> {
    /// `(vertex, red-free degree)`
    type Item = (VertexId, usize);

    fn next(&mut self) -> Option<Self::Item> {
        if let Some(layer) = self.layers.layers.get(self.round) {
            self.heap
                .extend(layer.iter().map(|&(v, deg)| (deg, Reverse(v))));
        }
        self.round += 1;
        self.heap.pop().map(|(deg, Reverse(v))| (v, deg))
    }
}

/// State of the bound computation after each round, for instrumentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PotentialStep {
    pub rounds: usize,
    pub size: i64,
    pub leaves: i64,
}

/// Trace of one bound computation: the number of inner vertices and the
/// `(size, leaves)` accounting after the completion step and each round.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialTrace {
    pub inner: usize,
    pub steps: Vec<PotentialStep>,
    pub value: LeafCount,
}

fn to_count(leaves: i64) -> LeafCount {
    LeafCount::Count(usize::try_from(leaves.max(0)).expect("non-negative"))
}

/// Upper bound on the leaves of any extension of `c` to `target` green
/// vertices, `Impossible` if `target` exceeds the red-free component.
pub fn leaf_potential(c: &Configuration, target: usize) -> Result<LeafCount, PotentialError> {
    leaf_potential_traced(c, target).map(|t| t.value)
}

/// [`leaf_potential`] that also records every intermediate `(size, leaves)`
/// pair.
pub fn leaf_potential_traced(
    c: &Configuration,
    target: usize,
) -> Result<PotentialTrace, PotentialError> {
    let greens = c.green_count();
    let layers = AvailableLayers::build(c)?;
    if target < greens {
        return Err(PotentialError::TargetTooSmall { target, greens });
    }
    let inner = greens - c.green_leaf_count();
    if target > layers.component_size {
        return Ok(PotentialTrace {
            inner,
            steps: Vec::new(),
            value: LeafCount::Impossible,
        });
    }
    let goal = target as i64;
    let mut n = greens as i64;
    let mut leaves = c.green_leaf_count() as i64;
    let y = c.inner_yellow_count() as i64;
    // Completion: every yellow neighbor of an inner vertex becomes a leaf.
    if n + y >= goal {
        leaves += goal - n;
        n = goal;
    } else {
        n += y;
        leaves += y;
    }
    let mut steps = vec![PotentialStep {
        rounds: 0,
        size: n,
        leaves,
    }];
    let mut picks = layers.greedy_picks();
    while n < goal {
        let Some((_, deg)) = picks.next() else { break };
        let deg = deg as i64;
        if n + deg - 1 <= goal {
            n += deg - 1;
            leaves += deg - 2;
        } else {
            leaves += goal - n - 1;
            n = goal;
        }
        let rounds = steps.len();
        debug_assert_eq!(n - leaves, (inner + rounds) as i64);
        steps.push(PotentialStep {
            rounds,
            size: n,
            leaves,
        });
    }
    Ok(PotentialTrace {
        inner,
        steps,
        value: to_count(leaves),
    })
}

/// Leaf potential for every target in `greens..=component_size` from one
/// greedy sweep. Entry `k` is the bound for `greens + k` vertices.
pub fn potential_profile(c: &Configuration) -> Result<Vec<LeafCount>, PotentialError> {
    let greens = c.green_count();
    let layers = AvailableLayers::build(c)?;
    let leaves0 = c.green_leaf_count() as i64;
    let y = c.inner_yellow_count() as i64;
    let n0 = greens as i64;
    let last = layers.component_size as i64;

    // (size, leaves) after the completion step and after each full round.
    let mut prefix = vec![(n0 + y, leaves0 + y)];
    let (mut n, mut l) = (n0 + y, leaves0 + y);
    for (_, deg) in layers.greedy_picks() {
        if n >= last {
            break;
        }
        n += deg as i64 - 1;
        l += deg as i64 - 2;
        prefix.push((n, l));
    }

    let mut out = Vec::with_capacity((last - n0 + 1) as usize);
    let mut k = 0;
    for target in n0..=last {
        if target <= n0 + y {
            out.push(to_count(leaves0 + target - n0));
            continue;
        }
        // First round whose size reaches the target.
        while k < prefix.len() && prefix[k].0 < target {
            k += 1;
        }
        let value = if k == prefix.len() {
            prefix[k - 1].1
        } else {
            let (n_before, l_before) = prefix[k - 1];
            l_before + (target - n_before) - 1
        };
        out.push(to_count(value));
    }
    Ok(out)
}

/// Whether no extension of `c` can beat the leaf counts in `best`: the
/// bound is at most `best` at every reachable size. Always false with
/// fewer than 3 green vertices.
pub fn prunable(c: &Configuration, best: &LeafFunction) -> bool {
    let greens = c.green_count();
    if greens < 3 {
        return false;
    }
    let profile = potential_profile(c).expect("at least 3 greens");
    profile
        .iter()
        .enumerate()
        .all(|(k, &bound)| bound <= best.get(greens + k))
}
