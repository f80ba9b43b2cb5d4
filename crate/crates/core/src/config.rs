//! Induced subtree configurations.
//!
//! A configuration colors every vertex of a graph:
//!
//! * green vertices form the current induced subtree,
//! * yellow vertices have exactly one green neighbor and can be added,
//! * red vertices are excluded (explicitly, or because they touch two greens),
//! * blue vertices have not been considered yet and touch no green vertex.
//!
//! Every include/exclude pushes a compact history entry so that [`undo`]
//! restores the previous state in time proportional to the work done.
//!
//! [`undo`]: Configuration::undo

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Green,
    Yellow,
    Red,
    Blue,
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Green => "green",
            Color::Yellow => "yellow",
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("vertex {0} cannot be added to the subtree")]
    IllegalAdd(VertexId),
    #[error("vertex {0} cannot be excluded")]
    IllegalExclude(VertexId),
    #[error("history is empty")]
    EmptyHistory,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    Include,
    Exclude,
}

/// One undoable operation. `recolored` is empty for exclusions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HistoryEntry {
    pub kind: OpKind,
    pub vertex: VertexId,
    pub previous: Color,
    pub recolored: Vec<(VertexId, Color)>,
    leaves_before: usize,
    inner_yellow_before: usize,
}

#[derive(Clone)]
pub struct Configuration<'g> {
    graph: &'g Graph,
    color: Vec<Color>,
    green_degree: Vec<usize>,
    /// For a yellow vertex, its unique green neighbor. Stale otherwise.
    anchor: Vec<VertexId>,
    /// Number of yellow vertices anchored at each green vertex.
    anchored_yellows: Vec<usize>,
    greens: Vec<VertexId>,
    green_leaf_count: usize,
    inner_yellow_count: usize,
    history: Vec<HistoryEntry>,
    work: u64,
}

impl fmt::Debug for Configuration<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Configuration")
            .field("color", &self.color)
            .field("history_depth", &self.history.len())
            .finish()
    }
}

impl<'g> Configuration<'g> {
    /// Initial configuration: everything blue, empty history.
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.order();
        Configuration {
            graph,
            color: vec![Color::Blue; n],
            green_degree: vec![0; n],
            anchor: vec![0; n],
            anchored_yellows: vec![0; n],
            greens: Vec::new(),
            green_leaf_count: 0,
            inner_yellow_count: 0,
            history: Vec::new(),
            work: 0,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn color(&self, v: VertexId) -> Color {
        self.color[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color
    }

    /// Number of green neighbors of `v`.
    #[inline]
    pub fn green_degree(&self, v: VertexId) -> usize {
        self.green_degree[v]
    }

    /// Green vertices in insertion order.
    pub fn greens(&self) -> &[VertexId] {
        &self.greens
    }

    pub fn green_count(&self) -> usize {
        self.greens.len()
    }

    pub fn green_leaf_count(&self) -> usize {
        self.green_leaf_count
    }

    /// Yellow vertices whose green neighbor is an inner vertex of the tree.
    pub fn inner_yellow_count(&self) -> usize {
        self.inner_yellow_count
    }

    /// `(size, leaves)` of the green subtree.
    pub fn green_stats(&self) -> (usize, usize) {
        (self.greens.len(), self.green_leaf_count)
    }

    /// Green vertex that is not a leaf of the green tree (green degree >= 2).
    #[inline]
    pub fn is_inner(&self, v: VertexId) -> bool {
        self.color[v] == Color::Green && self.green_degree[v] >= 2
    }

    pub fn history(&self) -> &[HistoryEntry] {
        &self.history
    }

    pub fn depth(&self) -> usize {
        self.history.len()
    }

    /// Elementary steps performed so far (vertex recolorings and neighbor
    /// visits). Used to check per-operation costs.
    pub fn work(&self) -> u64 {
        self.work
    }

    fn can_add(&self, v: VertexId) -> bool {
        match self.color[v] {
            Color::Yellow => true,
            Color::Blue => self.greens.is_empty(),
            _ => false,
        }
    }

    /// Next vertex to branch on: the smallest yellow vertex, or the smallest
    /// blue vertex while the green set is empty.
    pub fn vertex_to_add(&self) -> Option<VertexId> {
        let wanted = if self.greens.is_empty() {
            Color::Blue
        } else {
            Color::Yellow
        };
        self.color.iter().position(|&c| c == wanted)
    }

    /// Colors `v` green and updates its neighborhood: blue neighbors turn
    /// yellow, yellow neighbors (now touching two greens) turn red.
    pub fn add_to_subtree(&mut self, v: VertexId) -> Result<(), ConfigError> {
        if v >= self.color.len() || !self.can_add(v) {
            return Err(ConfigError::IllegalAdd(v));
        }
        let graph = self.graph;
        let previous = self.color[v];
        let leaves_before = self.green_leaf_count;
        let inner_yellow_before = self.inner_yellow_count;

        let parent = (previous == Color::Yellow).then(|| self.anchor[v]);
        if let Some(parent) = parent {
            self.anchored_yellows[parent] -= 1;
            if self.green_degree[parent] >= 2 {
                self.inner_yellow_count -= 1;
            }
            // The parent gains a green neighbor.
            match self.green_degree[parent] {
                0 => self.green_leaf_count += 2,
                1 => {
                    // parent stops being a leaf and v is a new leaf
                    self.inner_yellow_count += self.anchored_yellows[parent];
                }
                _ => self.green_leaf_count += 1,
            }
            self.green_degree[parent] += 1;
        }

        self.color[v] = Color::Green;
        self.greens.push(v);
        self.work += 1;

        let mut recolored = Vec::new();
        for &w in graph.neighbors(v) {
            self.work += 1;
            if Some(w) == parent {
                continue;
            }
            self.green_degree[w] += 1;
            match self.color[w] {
                Color::Blue => {
                    recolored.push((w, Color::Blue));
                    self.color[w] = Color::Yellow;
                    self.anchor[w] = v;
                    self.anchored_yellows[v] += 1;
                }
                Color::Yellow => {
                    recolored.push((w, Color::Yellow));
                    self.color[w] = Color::Red;
                    let a = self.anchor[w];
                    self.anchored_yellows[a] -= 1;
                    if self.green_degree[a] >= 2 {
                        self.inner_yellow_count -= 1;
                    }
                }
                Color::Green | Color::Red => {}
            }
        }

        self.history.push(HistoryEntry {
            kind: OpKind::Include,
            vertex: v,
            previous,
            recolored,
            leaves_before,
            inner_yellow_before,
        });
        Ok(())
    }

    /// Colors a yellow or blue vertex red.
    pub fn exclude_vertex(&mut self, v: VertexId) -> Result<(), ConfigError> {
        let previous = match self.color.get(v) {
            Some(&c @ (Color::Yellow | Color::Blue)) => c,
            _ => return Err(ConfigError::IllegalExclude(v)),
        };
        let inner_yellow_before = self.inner_yellow_count;
        if previous == Color::Yellow {
            let a = self.anchor[v];
            self.anchored_yellows[a] -= 1;
            if self.green_degree[a] >= 2 {
                self.inner_yellow_count -= 1;
            }
        }
        self.color[v] = Color::Red;
        self.work += 1;
        self.history.push(HistoryEntry {
            kind: OpKind::Exclude,
            vertex: v,
            previous,
            recolored: Vec::new(),
            leaves_before: self.green_leaf_count,
            inner_yellow_before,
        });
        Ok(())
    }

    /// Cancels the most recent include or exclude.
    pub fn undo(&mut self) -> Result<(), ConfigError> {
        let entry = self.history.pop().ok_or(ConfigError::EmptyHistory)?;
        let v = entry.vertex;
        if entry.kind == OpKind::Include {
            let graph = self.graph;
            for &(w, prev) in entry.recolored.iter().rev() {
                self.work += 1;
                match prev {
                    Color::Blue => self.anchored_yellows[v] -= 1,
                    Color::Yellow => self.anchored_yellows[self.anchor[w]] += 1,
                    _ => unreachable!("only blue and yellow neighbors are recolored"),
                }
                self.color[w] = prev;
            }
            for &w in graph.neighbors(v) {
                self.work += 1;
                self.green_degree[w] -= 1;
            }
            self.greens.pop();
        }
        if entry.previous == Color::Yellow {
            self.anchored_yellows[self.anchor[v]] += 1;
        }
        self.color[v] = entry.previous;
        self.green_leaf_count = entry.leaves_before;
        self.inner_yellow_count = entry.inner_yellow_before;
        self.work += 1;
        Ok(())
    }

    /// One line per vertex: `id color green_degree`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.color.iter().enumerate() {
            out.push_str(&format!("{v} {c} {}\n", self.green_degree[v]));
        }
        out
    }

    /// Recomputes everything from scratch and reports the first broken
    /// invariant, if any.
    pub fn validate(&self) -> Result<(), String> {
        let g = self.graph;
        let n = g.order();
        let green: Vec<VertexId> = (0..n).filter(|&v| self.color[v] == Color::Green).collect();

        let mut sorted = self.greens.clone();
        sorted.sort_unstable();
        if sorted != green {
            return Err(format!(
                "green list {:?} disagrees with colors {green:?}",
                self.greens
            ));
        }
        if !crate::graph::is_induced_subtree(g, &green) {
            return Err("green vertices do not induce a tree".into());
        }
        let mut leaves = 0;
        for v in 0..n {
            let gd = g
                .neighbors(v)
                .iter()
                .filter(|&&w| self.color[w] == Color::Green)
                .count();
            if gd != self.green_degree[v] {
                return Err(format!(
                    "green_degree[{v}] = {} but is {gd}",
                    self.green_degree[v]
                ));
            }
            match self.color[v] {
                Color::Green => {
                    if gd == 1 {
                        leaves += 1;
                    }
                    if let Some(&w) = g
                        .neighbors(v)
                        .iter()
                        .find(|&&w| self.color[w] == Color::Blue)
                    {
                        return Err(format!("green {v} has blue neighbor {w}"));
                    }
                }
                Color::Yellow => {
                    if gd != 1 {
                        return Err(format!("yellow {v} has {gd} green neighbors"));
                    }
                    if self.color[self.anchor[v]] != Color::Green || !g.has_edge(v, self.anchor[v])
                    {
                        return Err(format!("yellow {v} has a stale anchor"));
                    }
                }
                Color::Red | Color::Blue => {}
            }
        }
        if leaves != self.green_leaf_count {
            return Err(format!(
                "cached leaves {} but counted {leaves}",
                self.green_leaf_count
            ));
        }
        let inner_yellow = (0..n)
            .filter(|&v| {
                self.color[v] == Color::Yellow && g.neighbors(v).iter().any(|&w| self.is_inner(w))
            })
            .count();
        if inner_yellow != self.inner_yellow_count {
            return Err(format!(
                "cached inner yellows {} but counted {inner_yellow}",
                self.inner_yellow_count
            ));
        }
        for &gv in &green {
            let anchored = (0..n)
                .filter(|&v| self.color[v] == Color::Yellow && self.anchor[v] == gv)
                .count();
            if anchored != self.anchored_yellows[gv] {
                return Err(format!("anchored yellow count of {gv} is stale"));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{random_gnp, Family};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn colors_of(c: &Configuration) -> String {
        c.colors()
            .iter()
            .map(|c| match c {
                Color::Green => 'G',
                Color::Yellow => 'Y',
                Color::Red => 'R',
                Color::Blue => 'B',
            })
            .collect()
    }

    /// Full observable state, for exact-inverse checks.
    fn snapshot(c: &Configuration) -> (Vec<Color>, Vec<usize>, Vec<usize>, usize, usize, usize) {
        (
            c.colors().to_vec(),
            (0..c.graph().order()).map(|v| c.green_degree(v)).collect(),
            c.greens().to_vec(),
            c.green_leaf_count(),
            c.inner_yellow_count(),
            c.depth(),
        )
    }

    #[test]
    fn initial_configuration() {
        let k3 = Family::Complete(3).generate().unwrap();
        let c = Configuration::new(&k3);
        assert_eq!(colors_of(&c), "BBB");
        assert_eq!(c.depth(), 0);
        assert_eq!(c.green_stats(), (0, 0));

        let empty = Graph::empty(0);
        let c = Configuration::new(&empty);
        assert_eq!(c.vertex_to_add(), None);
        c.validate().unwrap();

        let p2 = Family::Path(2).generate().unwrap();
        assert_eq!(colors_of(&Configuration::new(&p2)), "BB");
    }

    #[test]
    fn vertex_to_add_policy() {
        let p3 = Family::Path(3).generate().unwrap();
        let mut c = Configuration::new(&p3);
        assert_eq!(c.vertex_to_add(), Some(0));
        c.add_to_subtree(1).unwrap();
        assert_eq!(colors_of(&c), "YGY");
        assert_eq!(c.vertex_to_add(), Some(0));
        c.exclude_vertex(0).unwrap();
        c.exclude_vertex(2).unwrap();
        assert_eq!(c.vertex_to_add(), None);

        // A blue vertex outside the tree's reach is never offered.
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let mut c = Configuration::new(&g);
        c.add_to_subtree(0).unwrap();
        c.exclude_vertex(1).unwrap();
        assert_eq!(colors_of(&c), "GRB");
        assert_eq!(c.vertex_to_add(), None);
    }

    #[test]
    fn add_recolors_neighborhood() {
        let k3 = Family::Complete(3).generate().unwrap();
        let mut c = Configuration::new(&k3);
        c.add_to_subtree(0).unwrap();
        c.add_to_subtree(1).unwrap();
        assert_eq!(colors_of(&c), "GGR");
        assert_eq!(c.green_stats(), (2, 2));

        let p5 = Family::Path(5).generate().unwrap();
        let mut c = Configuration::new(&p5);
        c.add_to_subtree(1).unwrap();
        c.add_to_subtree(2).unwrap();
        c.add_to_subtree(3).unwrap();
        assert_eq!(colors_of(&c), "YGGGY");
        assert_eq!(c.green_stats(), (3, 2));
        assert_eq!(c.inner_yellow_count(), 0);
        c.validate().unwrap();
    }

    /// The recoloring from the illustrated 16-vertex example: adding a yellow
    /// vertex whose other neighbors are one yellow and one blue vertex.
    #[test]
    fn add_turns_yellow_red_and_blue_yellow() {
        // tree 0-1, yellow 2 and 3 hang off 1 and 0; 3 is adjacent to 2; 4 hangs off 2
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (2, 3), (2, 4)]).unwrap();
        let mut c = Configuration::new(&g);
        c.add_to_subtree(0).unwrap();
        c.add_to_subtree(1).unwrap();
        assert_eq!(colors_of(&c), "GGYYB");
        c.add_to_subtree(2).unwrap();
        assert_eq!(colors_of(&c), "GGGRY");
        c.validate().unwrap();
    }

    #[test]
    fn illegal_operations() {
        let p3 = Family::Path(3).generate().unwrap();
        let mut c = Configuration::new(&p3);
        assert_eq!(c.undo(), Err(ConfigError::EmptyHistory));
        c.add_to_subtree(0).unwrap();
        assert_eq!(c.exclude_vertex(0), Err(ConfigError::IllegalExclude(0)));
        assert_eq!(c.add_to_subtree(2), Err(ConfigError::IllegalAdd(2)));
        assert_eq!(c.add_to_subtree(0), Err(ConfigError::IllegalAdd(0)));
        assert_eq!(c.add_to_subtree(7), Err(ConfigError::IllegalAdd(7)));
        c.exclude_vertex(1).unwrap();
        assert_eq!(c.exclude_vertex(1), Err(ConfigError::IllegalExclude(1)));
        assert_eq!(c.depth(), 2);
    }

    #[test]
    fn exclude_and_undo() {
        let k3 = Family::Complete(3).generate().unwrap();
        let mut c = Configuration::new(&k3);
        c.exclude_vertex(0).unwrap();
        assert_eq!(colors_of(&c), "RBB");
        c.undo().unwrap();
        assert_eq!(colors_of(&c), "BBB");
        assert_eq!(c.depth(), 0);
    }

    #[test]
    fn green_stats_of_star() {
        let s = Family::Star(4).generate().unwrap();
        let mut c = Configuration::new(&s);
        for v in [0, 1, 2, 3] {
            c.add_to_subtree(v).unwrap();
        }
        assert_eq!(c.green_stats(), (4, 3));
        assert_eq!(c.inner_yellow_count(), 1);
    }

    #[test]
    fn dump_format() {
        let p2 = Family::Path(2).generate().unwrap();
        let mut c = Configuration::new(&p2);
        c.add_to_subtree(0).unwrap();
        assert_eq!(c.dump(), "0 green 0\n1 yellow 1\n");
    }

    #[test]
    fn operation_costs_are_local() {
        let g = random_gnp(30, 0.3, 11);
        let mut c = Configuration::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..200 {
            let before = c.work();
            match c.vertex_to_add() {
                Some(v) if rng.gen_bool(0.6) => {
                    c.add_to_subtree(v).unwrap();
                    assert!(c.work() - before <= 1 + g.degree(v) as u64);
                }
                Some(v) => {
                    c.exclude_vertex(v).unwrap();
                    assert_eq!(c.work() - before, 1);
                }
                None => {
                    let Some(top) = c.history().last().cloned() else {
                        break;
                    };
                    c.undo().unwrap();
                    let bound = match top.kind {
                        OpKind::Include => 1 + 2 * g.degree(top.vertex) as u64,
                        OpKind::Exclude => 1,
                    };
                    assert!(c.work() - before <= bound);
                }
            }
        }
    }

    #[test]
    fn random_replay_undoes_to_initial() {
        let g = random_gnp(10, 0.5, 3);
        let mut c = Configuration::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let mut snapshots = vec![snapshot(&c)];
        let mut ops = 0;
        while ops < 30 {
            let candidates: Vec<VertexId> = (0..g.order())
                .filter(|&v| matches!(c.color(v), Color::Yellow | Color::Blue))
                .collect();
            if candidates.is_empty() {
                break;
            }
            let v = candidates[rng.gen_range(0..candidates.len())];
            if c.can_add(v) && rng.gen_bool(0.7) {
                c.add_to_subtree(v).unwrap();
            } else {
                c.exclude_vertex(v).unwrap();
            }
            c.validate().unwrap();
            snapshots.push(snapshot(&c));
            ops += 1;
        }
        snapshots.pop();
        while let Some(expected) = snapshots.pop() {
            c.undo().unwrap();
            assert_eq!(snapshot(&c), expected);
        }
        assert_eq!(c.depth(), 0);
        assert_eq!(colors_of(&c), "B".repeat(10));
    }
}
