//! Simple undirected graphs with dense `0..n` vertex labels.
//!
//! A [`Graph`] is immutable once built. Adjacency lists are kept sorted so
//! that iteration order (and therefore every search built on top of it) is
//! deterministic.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex, always in `0..graph.order()`.
pub type VertexId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("vertex set does not induce a tree")]
    NotATree,
}

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidParams(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidParams(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut m = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(GraphError::InvalidParams(format!(
                    "duplicate edge at vertex {u}"
                )));
            }
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Parses the edge-list text format: a header `n m` followed by `m`
    /// lines `u v`. Blank lines and lines starting with `#` are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
        let (n, m) = parse_pair(hline, header)?;

        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        let mut count = 0usize;
        for (lineno, line) in lines {
            let (u, v) = parse_pair(lineno, line)?;
            if u >= n || v >= n {
                return Err(parse_err(lineno, format!("vertex out of range 0..{n}")));
            }
            if u == v {
                return Err(parse_err(lineno, format!("self-loop at {u}")));
            }
            if adj[u].contains(&v) {
                return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            count += 1;
        }
        if count != m {
            return Err(parse_err(
                hline,
                format!("header declares {m} edges, found {count}"),
            ));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, m })
    }

    /// Serializes to the edge-list text format, edges as `u v` with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonGraph::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let raw: JsonGraph =
            serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
        Graph::from_edges(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.order() == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order()
    }

    /// Connected and acyclic. The empty graph is not considered a tree.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.order()];
        for s in 0..self.order() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size() == n * n.saturating_sub(1) / 2
    }

    /// Copy of the graph with one extra vertex (index `n`) adjacent to every
    /// existing vertex.
    pub fn with_universal_vertex(&self) -> Graph {
        let n = self.order();
        let mut adj = self.adj.clone();
        for list in &mut adj {
            list.push(n);
        }
        adj.push((0..n).collect());
        Graph { adj, m: self.m + n }
    }
}

fn parse_pair(lineno: usize, line: &str) -> Result<(usize, usize), GraphError> {
    let mut toks = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = toks
            .next()
            .ok_or_else(|| parse_err(lineno, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(lineno, format!("bad token `{tok}`")))
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = toks.next() {
        return Err(parse_err(lineno, format!("unexpected token `{extra}`")));
    }
    Ok((a, b))
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<&Graph> for JsonGraph {
    fn from(g: &Graph) -> Self {
        JsonGraph {
            n: g.order(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// Named graph families.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Complete(usize),
    Cycle(usize),
    /// Rim of `n` vertices plus a hub with index `n`.
    Wheel(usize),
    CompleteBipartite(usize, usize),
    Hypercube(u32),
    Path(usize),
    /// Center 0 with `q` rays.
    Star(usize),
    RandomGnp {
        n: usize,
        p: f64,
        seed: u64,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
}

impl Family {
    /// Builds a family from a tag such as `"hypercube"` and its textual
    /// parameters. Random families take their seed separately.
    pub fn from_tag(tag: &str, params: &[String], seed: Option<u64>) -> Result<Self, GraphError> {
        let int = |i: usize| -> Result<usize, GraphError> {
            let raw = params.get(i).ok_or_else(|| {
                GraphError::InvalidParams(format!("`{tag}` needs parameter #{}", i + 1))
            })?;
            raw.parse()
                .map_err(|_| GraphError::InvalidParams(format!("bad integer `{raw}`")))
        };
        let arity = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::InvalidParams(format!(
                    "`{tag}` takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let seed = seed.unwrap_or(0);
        let family =
            match tag.replace('_', "-").as_str() {
                "complete" => {
                    arity(1)?;
                    Family::Complete(int(0)?)
                }
                "cycle" => {
                    arity(1)?;
                    Family::Cycle(int(0)?)
                }
                "wheel" => {
                    arity(1)?;
                    Family::Wheel(int(0)?)
                }
                "complete-bipartite" => {
                    arity(2)?;
                    Family::CompleteBipartite(int(0)?, int(1)?)
                }
                "hypercube" => {
                    arity(1)?;
                    let d = int(0)?;
                    Family::Hypercube(u32::try_from(d).map_err(|_| {
                        GraphError::InvalidParams(format!("dimension {d} too large"))
                    })?)
                }
                "path" => {
                    arity(1)?;
                    Family::Path(int(0)?)
                }
                "star" => {
                    arity(1)?;
                    Family::Star(int(0)?)
                }
                "random-gnp" => {
                    arity(2)?;
                    let p: f64 = params[1].parse().map_err(|_| {
                        GraphError::InvalidParams(format!("bad probability `{}`", params[1]))
                    })?;
                    Family::RandomGnp {
                        n: int(0)?,
                        p,
                        seed,
                    }
                }
                "random-tree" => {
                    arity(1)?;
                    Family::RandomTree { n: int(0)?, seed }
                }
                _ => return Err(GraphError::UnknownFamily(tag.to_string())),
            };
        Ok(family)
    }

    pub fn generate(&self) -> Result<Graph, GraphError> {
        let invalid = |msg: String| Err(GraphError::InvalidParams(msg));
        match *self {
            Family::Complete(n) => {
                if n < 1 {
                    return invalid("complete graph needs n >= 1".into());
                }
                Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return invalid("cycle needs n >= 3".into());
                }
                Graph::from_edges(n, (0..n).map(|u| (u, (u + 1) % n)))
            }
            Family::Wheel(n) => {
                if n < 3 {
                    return invalid("wheel rim needs n >= 3".into());
                }
                let rim = (0..n).map(|u| (u, (u + 1) % n));
                let spokes = (0..n).map(|u| (u, n));
                Graph::from_edges(n + 1, rim.chain(spokes))
            }
            Family::CompleteBipartite(p, q) => {
                if p < 1 || q < 1 {
                    return invalid("complete bipartite needs p, q >= 1".into());
                }
                Graph::from_edges(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
            }
            Family::Hypercube(d) => {
                if !(1..=20).contains(&d) {
                    return invalid(format!("hypercube dimension {d} outside 1..=20"));
                }
                let n = 1usize << d;
                Graph::from_edges(
                    n,
                    (0..n).flat_map(|u| {
                        (0..d)
                            .map(move |b| (u, u ^ (1 << b)))
                            .filter(|&(u, v)| u < v)
                    }),
                )
            }
            Family::Path(n) => {
                if n < 1 {
                    return invalid("path needs n >= 1".into());
                }
                Graph::from_edges(n, (1..n).map(|u| (u - 1, u)))
            }
            Family::Star(q) => {
                if q < 1 {
                    return invalid("star needs q >= 1".into());
                }
                Graph::from_edges(q + 1, (1..=q).map(|v| (0, v)))
            }
            Family::RandomGnp { n, p, seed } => {
                if n < 1 || !(0.0..=1.0).contains(&p) {
                    return invalid(format!(
                        "random-gnp needs n >= 1 and p in [0,1], got n={n} p={p}"
                    ));
                }
                Ok(random_gnp(n, p, seed))
            }
            Family::RandomTree { n, seed } => {
                if n < 1 {
                    return invalid("random-tree needs n >= 1".into());
                }
                Ok(random_tree(n, seed))
            }
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    /// Parses `tag:p1,p2,...`, e.g. `hypercube:4` or `random-gnp:12,0.3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
        let params: Vec<String> = rest
            .split(',')
            .filter(|p| !p.is_empty())
            .map(str::to_string)
            .collect();
        Family::from_tag(tag, &params, None)
    }
}

/// Erdős–Rényi graph: each pair present independently with probability `p`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("generated edges are simple")
}

/// Uniformly random labelled tree, decoded from a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("tiny tree");
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Graph::from_edges(n, prufer_decode(n, &code)).expect("prufer decoding yields a tree")
}

fn prufer_decode(n: usize, code: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time decoding with a moving pointer to the smallest leaf.
    let mut ptr = degree.iter().position(|&d| d == 1).unwrap();
    let mut leaf = ptr;
    for &c in code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if c < ptr && degree[c] == 1 {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

/// Random shuffle of the vertex labels. Used to build isomorphic copies in
/// tests.
pub fn relabel_randomly(g: &Graph, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut rng);
    Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

/// Membership mask for a vertex set; `None` if some vertex is out of range.
fn membership(g: &Graph, set: &[VertexId]) -> Option<Vec<bool>> {
    let mut inside = vec![false; g.order()];
    for &v in set {
        *inside.get_mut(v)? = true;
    }
    Some(inside)
}

/// Whether `set` induces a tree in `g`. The empty set and singletons count
/// as trees. Duplicate entries in `set` are ignored.
pub fn is_induced_subtree(g: &Graph, set: &[VertexId]) -> bool {
    let Some(inside) = membership(g, set) else {
        return false;
    };
    let members: Vec<VertexId> = (0..g.order()).filter(|&v| inside[v]).collect();
    if members.len() <= 1 {
        return true;
    }
    let induced_edges: usize = members
        .iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&w| inside[w]).count())
        .sum::<usize>()
        / 2;
    if induced_edges + 1 != members.len() {
        return false;
    }
    let mut seen = vec![false; g.order()];
    let mut stack = vec![members[0]];
    seen[members[0]] = true;
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == members.len()
}

/// Number of vertices of induced degree one in the tree induced by `set`.
pub fn leaf_count(g: &Graph, set: &[VertexId]) -> Result<usize, GraphError> {
    if !is_induced_subtree(g, set) {
        return Err(GraphError::NotATree);
    }
    let inside = membership(g, set).expect("checked above");
    Ok((0..g.order())
        .filter(|&v| inside[v] && g.neighbors(v).iter().filter(|&&w| inside[w]).count() == 1)
        .count())
}

/// Instance of the leafed-induced-subtree decision problem: does the graph
/// contain an induced subtree with exactly `i` vertices and `ell` leaves?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LisInstance {
    pub graph: Graph,
    pub i: usize,
    pub ell: usize,
}

/// Maps an independent-set query `(g, k)` to the equivalent instance
/// `(H, k + 1, k)`, where `H` is `g` plus a universal vertex.
pub fn reduce_independent_set(g: &Graph, k: usize) -> LisInstance {
    LisInstance {
        graph: g.with_universal_vertex(),
        i: k + 1,
        ell: k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_triangle() {
        let g = Graph::from_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.size(), 3);
        assert!(g.is_complete());
    }

    #[test]
    fn parse_single_edge() {
        let g = Graph::from_edge_list("2 1\n0 1\n").unwrap();
        assert_eq!((g.degree(0), g.degree(1)), (1, 1));
    }

    #[test]
    fn parse_comments_and_blank_lines() {
        let g = Graph::from_edge_list("# a path\n3 2\n\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g, Family::Path(3).generate().unwrap());
    }

    #[test]
    fn parse_rejects_bad_input() {
        for bad in [
            "3 2\n0 1\n0 1",
            "3 2\n0 1\n1 0",
            "3 1\n1 1",
            "3 1\n0 3",
            "3 1\n0 x",
            "3 2\n0 1",
            "3 1\n0 1 2",
            "",
            "-1 0",
        ] {
            assert!(
                matches!(Graph::from_edge_list(bad), Err(GraphError::Parse { .. })),
                "accepted {bad:?}"
            );
        }
    }

    #[test]
    fn edge_list_and_json_export() {
        let g = Family::Wheel(5).generate().unwrap();
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
        let k2 = Family::Path(2).generate().unwrap();
        assert_eq!(k2.to_json(), r#"{"n":2,"edges":[[0,1]]}"#);
    }

    #[test]
    fn family_shapes() {
        let q3 = Family::Hypercube(3).generate().unwrap();
        assert_eq!((q3.order(), q3.size()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));
        assert!(q3.is_bipartite());

        let k4 = Family::Complete(4).generate().unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));

        let w6 = Family::Wheel(6).generate().unwrap();
        assert_eq!((w6.order(), w6.size(), w6.degree(6)), (7, 12, 6));

        let k23 = Family::CompleteBipartite(2, 3).generate().unwrap();
        assert_eq!((k23.order(), k23.size()), (5, 6));

        let s = Family::Star(4).generate().unwrap();
        assert_eq!((s.order(), s.degree(0)), (5, 4));
    }

    #[test]
    fn family_param_errors() {
        assert!(Family::Cycle(2).generate().is_err());
        assert!(Family::Wheel(2).generate().is_err());
        assert!(Family::Complete(0).generate().is_err());
        assert!(Family::CompleteBipartite(0, 3).generate().is_err());
        assert!(Family::RandomGnp {
            n: 5,
            p: 1.5,
            seed: 0
        }
        .generate()
        .is_err());
        assert!(matches!(
            "dodecahedron:3".parse::<Family>(),
            Err(GraphError::UnknownFamily(_))
        ));
        assert!("cycle:3,4".parse::<Family>().is_err());
        assert_eq!(
            "hypercube:4".parse::<Family>().unwrap(),
            Family::Hypercube(4)
        );
    }

    #[test]
    fn random_families_are_seeded() {
        let a = random_gnp(20, 0.3, 7);
        assert_eq!(a, random_gnp(20, 0.3, 7));
        assert_ne!(a, random_gnp(20, 0.3, 8));
        for n in 1..40 {
            assert!(random_tree(n, n as u64).is_tree());
        }
        assert_eq!(
            random_gnp(6, 1.0, 3),
            Family::Complete(6).generate().unwrap()
        );
        assert_eq!(random_gnp(6, 0.0, 3).size(), 0);
    }

    #[test]
    fn prufer_known_code() {
        // Code [3, 3, 3] on 5 vertices is the star centred at 3.
        let mut edges = prufer_decode(5, &[3, 3, 3]);
        edges.sort();
        assert_eq!(edges, vec![(0, 3), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn induced_subtree_examples() {
        let k3 = Family::Complete(3).generate().unwrap();
        assert!(!is_induced_subtree(&k3, &[0, 1, 2]));
        assert!(is_induced_subtree(&k3, &[0, 1]));
        assert!(is_induced_subtree(&k3, &[]));
        assert!(is_induced_subtree(&k3, &[2]));
        let p4 = Family::Path(4).generate().unwrap();
        assert!(!is_induced_subtree(&p4, &[0, 1, 3]));
        assert!(!is_induced_subtree(&p4, &[0, 9]));
    }

    #[test]
    fn leaf_count_examples() {
        let p5 = Family::Path(5).generate().unwrap();
        assert_eq!(leaf_count(&p5, &[0, 1, 2, 3, 4]), Ok(2));
        let s = Family::Star(4).generate().unwrap();
        assert_eq!(leaf_count(&s, &[0, 1, 2, 3, 4]), Ok(4));
        assert_eq!(leaf_count(&s, &[3]), Ok(0));
        assert_eq!(leaf_count(&s, &[]), Ok(0));
        assert_eq!(leaf_count(&s, &[0, 2]), Ok(2));
        let k3 = Family::Complete(3).generate().unwrap();
        assert_eq!(leaf_count(&k3, &[0, 1, 2]), Err(GraphError::NotATree));
    }

    #[test]
    fn reduction_shapes() {
        let c5 = Family::Cycle(5).generate().unwrap();
        let inst = reduce_independent_set(&c5, 2);
        assert_eq!(inst.graph, Family::Wheel(5).generate().unwrap());
        assert_eq!((inst.i, inst.ell), (3, 2));

        let k3 = Family::Complete(3).generate().unwrap();
        let inst = reduce_independent_set(&k3, 2);
        assert_eq!(inst.graph, Family::Complete(4).generate().unwrap());

        let inst = reduce_independent_set(&Graph::empty(3), 3);
        assert_eq!(
            inst.graph,
            Family::Star(3).generate().unwrap().relabel_hub_last()
        );
        assert_eq!((inst.i, inst.ell), (4, 3));

        let inst = reduce_independent_set(&Graph::empty(0), 0);
        assert_eq!((inst.graph.order(), inst.i, inst.ell), (1, 1, 0));

        let g = random_gnp(9, 0.4, 1);
        let h = reduce_independent_set(&g, 3).graph;
        assert_eq!(h.size(), g.size() + g.order());
    }

    impl Graph {
        /// Star with the center moved from index 0 to the last index.
        fn relabel_hub_last(&self) -> Graph {
            let n = self.order();
            let map = |v: usize| if v == 0 { n - 1 } else { v - 1 };
            Graph::from_edges(n, self.edges().map(|(u, v)| (map(u), map(v)))).unwrap()
        }
    }
}
