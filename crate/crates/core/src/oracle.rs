//! Brute-force ground truth for small graphs. Everything here enumerates
//! vertex subsets as bitmasks and shares no code with the solvers.

use thiserror::Error;

use crate::config::{Color, Configuration};
use crate::graph::{Graph, LisInstance, VertexId};
use crate::leaf_function::{LeafCount, LeafFunction};

pub const MAX_ORACLE_ORDER: usize = 20;
pub const MAX_EXTENSION_CANDIDATES: usize = 15;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance too large for brute force ({size} > {limit})")]
    TooLarge { size: usize, limit: usize },
}

fn guard(size: usize, limit: usize) -> Result<(), OracleError> {
    if size > limit {
        Err(OracleError::TooLarge { size, limit })
    } else {
        Ok(())
    }
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.order())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// `Some(leaves)` if `mask` induces a tree.
fn tree_leaves(adj: &[u32], mask: u32) -> Option<usize> {
    let size = mask.count_ones();
    if size <= 1 {
        return Some(0);
    }
    let mut twice_edges = 0;
    let mut leaves = 0;
    let mut rest = mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & mask).count_ones();
        twice_edges += d;
        if d == 1 {
            leaves += 1;
        }
    }
    if twice_edges != 2 * (size - 1) {
        return None;
    }
    // connectivity by frontier expansion
    let mut reached = 1u32 << mask.trailing_zeros();
    loop {
        let mut next = reached;
        let mut rest = reached;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            next |= adj[v] & mask;
        }
        if next == reached {
            break;
        }
        reached = next;
    }
    (reached == mask).then_some(leaves)
}

fn mask_to_vertices(mask: u32) -> Vec<VertexId> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Leaf function by checking every vertex subset.
pub fn leaf_function_bruteforce(g: &Graph) -> Result<LeafFunction, OracleError> {
    Ok(bruteforce_with_witnesses(g)?.0)
}

/// One optimal vertex set per size, `None` where no subtree exists.
pub type SizeWitnesses = Vec<Option<Vec<VertexId>>>;

/// Leaf function together with the first optimal subset (in bitmask order)
/// for every feasible size.
pub fn bruteforce_with_witnesses(g: &Graph) -> Result<(LeafFunction, SizeWitnesses), OracleError> {
    let n = g.order();
    guard(n, MAX_ORACLE_ORDER)?;
    let adj = adjacency_masks(g);
    let mut best: Vec<Option<(usize, u32)>> = vec![None; n + 1];
    for mask in 0u32..(1u32 << n) {
        if let Some(leaves) = tree_leaves(&adj, mask) {
            let slot = &mut best[mask.count_ones() as usize];
            if slot.is_none_or(|(b, _)| leaves > b) {
                *slot = Some((leaves, mask));
            }
        }
    }
    let lf = LeafFunction::from_counts(best.iter().map(|b| b.map(|(l, _)| l)));
    let witnesses = best
        .iter()
        .map(|b| b.map(|(_, m)| mask_to_vertices(m)))
        .collect();
    Ok((lf, witnesses))
}

/// Number of induced subtrees, counting the empty tree and singletons.
pub fn count_induced_subtrees(g: &Graph) -> Result<u64, OracleError> {
    guard(g.order(), MAX_ORACLE_ORDER)?;
    let adj = adjacency_masks(g);
    Ok((0u32..(1u32 << g.order()))
        .filter(|&m| tree_leaves(&adj, m).is_some())
        .count() as u64)
}

/// All induced subtrees with `size` vertices and the maximum leaf count for
/// that size.
pub fn optimal_subtrees(g: &Graph, size: usize) -> Result<Vec<Vec<VertexId>>, OracleError> {
    guard(g.order(), MAX_ORACLE_ORDER)?;
    let adj = adjacency_masks(g);
    let mut best = None;
    let mut sets = Vec::new();
    for mask in 0u32..(1u32 << g.order()) {
        if mask.count_ones() as usize != size {
            continue;
        }
        if let Some(l) = tree_leaves(&adj, mask) {
            if best.is_none_or(|b| l > b) {
                best = Some(l);
                sets.clear();
            }
            if best == Some(l) {
                sets.push(mask_to_vertices(mask));
            }
        }
    }
    Ok(sets)
}

/// Whether some `k` vertices are pairwise non-adjacent.
pub fn has_independent_set(g: &Graph, k: usize) -> Result<bool, OracleError> {
    let n = g.order();
    guard(n, MAX_ORACLE_ORDER)?;
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    let adj = adjacency_masks(g);
    Ok((0u32..(1u32 << n)).any(|mask| {
        mask.count_ones() as usize == k
            && mask_to_vertices(mask).iter().all(|&v| adj[v] & mask == 0)
    }))
}

/// Whether the graph has an induced subtree with exactly `inst.i` vertices
/// and exactly `inst.ell` leaves.
pub fn lis_positive(inst: &LisInstance) -> Result<bool, OracleError> {
    let n = inst.graph.order();
    guard(n, MAX_ORACLE_ORDER)?;
    if inst.i > n {
        return Ok(false);
    }
    let adj = adjacency_masks(&inst.graph);
    Ok((0u32..(1u32 << n)).any(|mask| {
        mask.count_ones() as usize == inst.i && tree_leaves(&adj, mask) == Some(inst.ell)
    }))
}

/// Maximum leaves over all extensions of `c` to exactly `target` green
/// vertices: supersets of the green set that avoid red vertices and induce
/// a tree.
pub fn max_leaves_over_extensions(
    c: &Configuration,
    target: usize,
) -> Result<LeafCount, OracleError> {
    let g = c.graph();
    let n = g.order();
    guard(n, 32)?;
    let greens = c.greens().len();
    if target < greens {
        return Ok(LeafCount::Impossible);
    }
    let green_mask = c.greens().iter().fold(0u32, |m, &v| m | 1 << v);
    // Candidates: non-red, non-green vertices reachable from the tree
    // without crossing red vertices.
    let adj = adjacency_masks(g);
    let allowed: u32 = (0..n)
        .filter(|&v| c.color(v) != Color::Red)
        .fold(0, |m, v| m | 1 << v);
    let mut reach = if green_mask == 0 { allowed } else { green_mask };
    if green_mask != 0 {
        loop {
            let mut next = reach;
            for v in mask_to_vertices(reach) {
                next |= adj[v] & allowed;
            }
            if next == reach {
                break;
            }
            reach = next;
        }
    }
    let candidates = mask_to_vertices(reach & !green_mask);
    guard(candidates.len(), MAX_EXTENSION_CANDIDATES)?;
    let extra = target - greens;
    if extra > candidates.len() {
        return Ok(LeafCount::Impossible);
    }
    let mut best = LeafCount::Impossible;
    for sub in 0u32..(1u32 << candidates.len()) {
        if sub.count_ones() as usize != extra {
            continue;
        }
        let mask = mask_to_vertices(sub)
            .into_iter()
            .fold(green_mask, |m, i| m | 1 << candidates[i]);
        if let Some(l) = tree_leaves(&adj, mask) {
            best = best.max(LeafCount::Count(l));
        }
    }
    Ok(best)
}
