//! Polynomial leaf function for trees.
//!
//! Every directed edge `tail -> head` of a tree identifies the subtree that
//! hangs off `head` away from `tail`. Its rooted leaf function (a rooted
//! single vertex counts as a leaf) is obtained by merging the rooted leaf
//! functions of `head`'s other neighbors with a max-plus convolution and
//! shifting by one for the root. An unrooted subtree with at least two
//! vertices contains some edge `{u, v}`, so the leaf function of the tree is
//! the best split of `i` across the two sides of some edge.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::leaf_function::{LeafCount, LeafFunction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeDpError {
    #[error("input graph is not a tree")]
    NotATree,
    #[error("({0}, {1}) is not an arc of the tree")]
    NotAnArc(VertexId, VertexId),
    #[error("{{{0}, {1}}} is not an edge of the tree")]
    NotAnEdge(VertexId, VertexId),
    #[error("cannot merge an empty forest")]
    EmptyForest,
}

/// Directed edge; identifies the subtree rooted at `head` that does not
/// contain `tail`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Arc {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        Arc { tail, head }
    }

    pub fn reversed(self) -> Self {
        Arc::new(self.head, self.tail)
    }
}

/// `values[i]`: maximum leaves of a rooted subtree with `i` vertices that
/// shares the root. Always feasible up to `size`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RootedLeafFunction {
    values: Vec<usize>,
}

impl RootedLeafFunction {
    pub fn new(values: Vec<usize>) -> Self {
        assert!(
            !values.is_empty(),
            "rooted leaf function needs an entry for size 0"
        );
        RootedLeafFunction { values }
    }

    /// A single rooted vertex, which is its own leaf.
    pub fn single_vertex() -> Self {
        RootedLeafFunction { values: vec![0, 1] }
    }

    /// Number of vertices of the underlying rooted tree or forest.
    pub fn size(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Leaf function of the rooted tree obtained by putting a new root above
    /// a forest with this leaf function.
    fn lift(&self) -> Self {
        let mut values = Vec::with_capacity(self.values.len() + 1);
        values.push(0);
        values.push(1);
        values.extend_from_slice(&self.values[1..]);
        RootedLeafFunction { values }
    }
}

/// Max-plus convolution of two rooted leaf functions.
fn merge_pair(a: &RootedLeafFunction, b: &RootedLeafFunction) -> RootedLeafFunction {
    let (sa, sb) = (a.size(), b.size());
    let mut values = vec![0; sa + sb + 1];
    for (i, slot) in values.iter_mut().enumerate() {
        let lo = i.saturating_sub(sb);
        let hi = i.min(sa);
        *slot = (lo..=hi)
            .map(|j| a.values[j] + b.values[i - j])
            .max()
            .expect("range is non-empty");
    }
    RootedLeafFunction { values }
}

/// Leaf function of a rooted forest from those of its trees.
pub fn merge_forest(parts: &[RootedLeafFunction]) -> Result<RootedLeafFunction, TreeDpError> {
    let (first, rest) = parts.split_first().ok_or(TreeDpError::EmptyForest)?;
    Ok(rest
        .iter()
        .fold(first.clone(), |acc, p| merge_pair(&acc, p)))
}

/// Memo of rooted leaf functions, one slot per arc of the tree.
#[derive(Debug, Clone)]
pub struct ArcTable<'t> {
    tree: &'t Graph,
    /// Arc `(v -> neighbors(v)[k])` is stored at `offset[v] + k`.
    offset: Vec<usize>,
    memo: Vec<Option<RootedLeafFunction>>,
    computed: usize,
}

impl<'t> ArcTable<'t> {
    pub fn new(tree: &'t Graph) -> Result<Self, TreeDpError> {
        if !tree.is_tree() {
            return Err(TreeDpError::NotATree);
        }
        let mut offset = Vec::with_capacity(tree.order() + 1);
        let mut total = 0;
        for v in 0..tree.order() {
            offset.push(total);
            total += tree.degree(v);
        }
        Ok(ArcTable {
            tree,
            offset,
            memo: vec![None; total],
            computed: 0,
        })
    }

    fn slot(&self, arc: Arc) -> Result<usize, TreeDpError> {
        let Arc { tail, head } = arc;
        if tail >= self.tree.order() || head >= self.tree.order() {
            return Err(TreeDpError::NotAnArc(tail, head));
        }
        self.tree
            .neighbors(tail)
            .binary_search(&head)
            .map(|k| self.offset[tail] + k)
            .map_err(|_| TreeDpError::NotAnArc(tail, head))
    }

    /// Already-computed entry, if any.
    pub fn get(&self, arc: Arc) -> Option<&RootedLeafFunction> {
        self.slot(arc).ok().and_then(|s| self.memo[s].as_ref())
    }

    /// Number of arcs computed so far.
    pub fn len(&self) -> usize {
        self.computed
    }

    pub fn is_empty(&self) -> bool {
        self.computed == 0
    }

    /// Sum of the sizes of all stored functions.
    pub fn stored_entries(&self) -> usize {
        self.memo.iter().flatten().map(|f| f.values.len()).sum()
    }

    fn children(&self, arc: Arc) -> impl Iterator<Item = Arc> + '_ {
        self.tree
            .neighbors(arc.head)
            .iter()
            .filter(move |&&w| w != arc.tail)
            .map(move |&w| Arc::new(arc.head, w))
    }

    /// Computes `arc` assuming all its child arcs are present.
    fn compute_ready(&mut self, arc: Arc) -> Result<(), TreeDpError> {
        let slot = self.slot(arc)?;
        if self.memo[slot].is_some() {
            return Ok(());
        }
        let parts: Vec<RootedLeafFunction> = self
            .children(arc)
            .map(|a| self.get(a).cloned().expect("children computed first"))
            .collect();
        let value = match merge_forest(&parts) {
            Ok(forest) => forest.lift(),
            Err(TreeDpError::EmptyForest) => RootedLeafFunction::single_vertex(),
            Err(e) => return Err(e),
        };
        self.memo[slot] = Some(value);
        self.computed += 1;
        Ok(())
    }

    /// Rooted leaf function of the subtree behind `arc`, computing and
    /// memoizing whatever it depends on.
    pub fn rooted_leaf_function(&mut self, arc: Arc) -> Result<&RootedLeafFunction, TreeDpError> {
        let slot = self.slot(arc)?;
        if self.memo[slot].is_none() {
            // (arc, children pushed?)
            let mut stack = vec![(arc, false)];
            while let Some((a, expanded)) = stack.pop() {
                if self.get(a).is_some() {
                    continue;
                }
                if expanded {
                    self.compute_ready(a)?;
                } else {
                    stack.push((a, true));
                    let pending: Vec<Arc> = self
                        .children(a)
                        .filter(|&c| self.get(c).is_none())
                        .collect();
                    stack.extend(pending.into_iter().map(|c| (c, false)));
                }
            }
        }
        Ok(self.memo[slot].as_ref().expect("just computed"))
    }

    /// Fills every arc: downward arcs in post-order from vertex 0, then
    /// upward arcs in breadth-first order.
    pub fn fill(&mut self) {
        let tree = self.tree;
        let n = tree.order();
        let mut parent = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        if n > 0 {
            parent[0] = 0;
            order.push(0);
            let mut i = 0;
            while i < order.len() {
                let u = order[i];
                for &w in tree.neighbors(u) {
                    if parent[w] == usize::MAX {
                        parent[w] = u;
                        order.push(w);
                    }
                }
                i += 1;
            }
        }
        for &v in order.iter().skip(1).rev() {
            self.compute_ready(Arc::new(parent[v], v))
                .expect("tree arc");
        }
        for &v in order.iter().skip(1) {
            self.compute_ready(Arc::new(v, parent[v]))
                .expect("tree arc");
        }
        debug_assert_eq!(self.computed, 2 * n.saturating_sub(1));
    }

    /// Best leaf count of a subtree with `i` vertices containing the edge
    /// `{u, v}`, for every `i` in `0..=n`. Impossible below 2.
    pub fn edge_leaf_function(
        &mut self,
        u: VertexId,
        v: VertexId,
    ) -> Result<Vec<LeafCount>, TreeDpError> {
        let n = self.tree.order();
        if u >= n || v >= n || !self.tree.has_edge(u, v) {
            return Err(TreeDpError::NotAnEdge(u, v));
        }
        let toward_v = self.rooted_leaf_function(Arc::new(u, v))?.clone();
        let toward_u = self.rooted_leaf_function(Arc::new(v, u))?;
        Ok(combine_edge(&toward_v, toward_u, n))
    }
}

/// `side_v` is rooted at `v` (away from `u`), `side_u` at `u`.
fn combine_edge(
    side_v: &RootedLeafFunction,
    side_u: &RootedLeafFunction,
    n: usize,
) -> Vec<LeafCount> {
    let (sv, su) = (side_v.size(), side_u.size());
    (0..=n)
        .map(|i| {
            if i < 2 {
                return LeafCount::Impossible;
            }
            let lo = 1.max(i.saturating_sub(su));
            let hi = (i - 1).min(sv);
            (lo..=hi)
                .map(|j| side_v.values[j] + side_u.values[i - j])
                .max()
                .map_or(LeafCount::Impossible, LeafCount::Count)
        })
        .collect()
}

/// Rooted leaf function of the whole tree rooted at `root`.
pub fn rooted_at(tree: &Graph, root: VertexId) -> Result<RootedLeafFunction, TreeDpError> {
    let mut table = ArcTable::new(tree)?;
    if root >= tree.order() {
        return Err(TreeDpError::NotAnArc(root, root));
    }
    let parts = tree
        .neighbors(root)
        .iter()
        .map(|&w| table.rooted_leaf_function(Arc::new(root, w)).cloned())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(match merge_forest(&parts) {
        Ok(forest) => forest.lift(),
        Err(_) => RootedLeafFunction::single_vertex(),
    })
}

/// Leaf function of a tree. Also returns the filled arc table.
pub fn leaf_function_tree_with_table(
    tree: &Graph,
) -> Result<(LeafFunction, ArcTable<'_>), TreeDpError> {
    let mut table = ArcTable::new(tree)?;
    table.fill();
    let n = tree.order();
    let mut best = vec![LeafCount::Impossible; n + 1];
    best[0] = LeafCount::Count(0);
    best[1] = LeafCount::Count(0);
    for (u, v) in tree.edges() {
        let side_v = table.get(Arc::new(u, v)).expect("filled");
        let side_u = table.get(Arc::new(v, u)).expect("filled");
        for (slot, val) in best.iter_mut().zip(combine_edge(side_v, side_u, n)).skip(2) {
            *slot = (*slot).max(val);
        }
    }
    Ok((LeafFunction::new(best), table))
}

pub fn leaf_function_tree(tree: &Graph) -> Result<LeafFunction, TreeDpError> {
    leaf_function_tree_with_table(tree).map(|(lf, _)| lf)
}
