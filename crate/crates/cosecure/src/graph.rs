//! Immutable simple-graph data model and edge-list I/O.
//!
//! Vertices are dense 0-based ids; human-readable labels, when present in an
//! input file, live in `#` comment lines and are ignored by every algorithm.
//! The text format is a header `n m` followed by one `u v` line per edge.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Construction error for programmatic graph building.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} out of range (n = {1})")]
    OutOfRange(usize, usize),
}

/// Error raised while parsing the edge-list text format.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range (n = {n})")]
    OutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: expected {expected} edges, found {found}")]
    EdgeCountMismatch {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("missing `n m` header")]
    MissingHeader,
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency lists are kept sorted; the edge count always equals half the
/// degree sum. Construction validates that there are no self-loops and no
/// duplicate edges. A constructed graph is never mutated, so it can be shared
/// freely across threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Builds a graph from an explicit edge list, validating simplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            m: edges.len(),
            adj,
        })
    }

    /// Parses the canonical edge-list text format.
    ///
    /// `#`-prefixed lines and blank lines are skipped. The first data line is
    /// the header `n m`; every further line is one edge `u v`. Errors carry
    /// the offending 1-based physical line number.
    pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut adj: Vec<Vec<usize>> = Vec::new();
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut last_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            last_line = line;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut parts = trimmed.split_whitespace();
            let a = parts.next();
            let b = parts.next();
            let extra = parts.next();
            let (a, b) = match (a, b, extra) {
                (Some(a), Some(b), None) => (a, b),
                _ => {
                    return Err(ParseError::Syntax {
                        line,
                        msg: format!("expected two integers, got {trimmed:?}"),
                    })
                }
            };
            let parse = |tok: &str| {
                tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                    line,
                    msg: format!("invalid integer {tok:?}"),
                })
            };
            let (x, y) = (parse(a)?, parse(b)?);
            match header {
                None => {
                    header = Some((x, y));
                    adj = vec![Vec::new(); x];
                }
                Some((n, m)) => {
                    if seen.len() == m {
                        return Err(ParseError::EdgeCountMismatch {
                            line,
                            expected: m,
                            found: m + 1,
                        });
                    }
                    if x >= n {
                        return Err(ParseError::OutOfRange { line, vertex: x, n });
                    }
                    if y >= n {
                        return Err(ParseError::OutOfRange { line, vertex: y, n });
                    }
                    if x == y {
                        return Err(ParseError::SelfLoop { line, vertex: x });
                    }
                    let key = (x.min(y), x.max(y));
                    if !seen.insert(key) {
                        return Err(ParseError::DuplicateEdge {
                            line,
                            u: key.0,
                            v: key.1,
                        });
                    }
                    adj[x].push(y);
                    adj[y].push(x);
                }
            }
        }
        let (n, m) = header.ok_or(ParseError::MissingHeader)?;
        if seen.len() != m {
            return Err(ParseError::EdgeCountMismatch {
                line: last_line + 1,
                expected: m,
                found: seen.len(),
            });
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, m, adj })
    }

    /// Deterministic serialization: header then edges sorted lexicographically.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Least isolated vertex, if any.
    pub fn isolated_vertex(&self) -> Option<usize> {
        (0..self.n).find(|&v| self.adj[v].is_empty())
    }

    /// Connected components, each sorted, listed by minimum member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Induced subgraph on `verts` plus the map from new ids to original ids.
    ///
    /// New ids follow the sorted order of `verts`.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let mut order: Vec<usize> = verts.to_vec();
        order.sort_unstable();
        order.dedup();
        let mut back = vec![usize::MAX; self.n];
        for (new, &old) in order.iter().enumerate() {
            back[old] = new;
        }
        let mut edges = Vec::new();
        for (i, &old) in order.iter().enumerate() {
            for &w in &self.adj[old] {
                if back[w] != usize::MAX && back[w] > i {
                    edges.push((i, back[w]));
                }
            }
        }
        let g = Graph::from_edges(order.len(), &edges).expect("induced subgraph is simple");
        (g, order)
    }

    /// Relabels vertices: `perm[old] = new`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(self.n, &edges).expect("relabeling preserves simplicity")
    }

    /// Two-colors the graph, or returns an odd cycle.
    ///
    /// For disconnected graphs the side assignment is fixed by giving the
    /// lowest-id vertex of each component side `X`.
    pub fn bipartition_of(&self) -> Result<Bipartition, OddCycle> {
        let mut side: Vec<Option<Side>> = vec![None; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(Side::X);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(side[u].unwrap().flip());
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push_back(v);
                        }
                        Some(s) if s == side[u].unwrap() => {
                            return Err(odd_cycle(u, v, &parent, &depth));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(Bipartition {
            side: side.into_iter().map(|s| s.unwrap()).collect(),
        })
    }
}

fn odd_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> OddCycle {
    let (mut a, mut b) = (u, v);
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[a] > depth[b] {
        left.push(a);
        a = parent[a];
    }
    while depth[b] > depth[a] {
        right.push(b);
        b = parent[b];
    }
    while a != b {
        left.push(a);
        right.push(b);
        a = parent[a];
        b = parent[b];
    }
    left.push(a);
    right.reverse();
    left.extend(right);
    OddCycle(left)
}

/// Witness for a failed two-coloring: vertices of an odd cycle in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddCycle(pub Vec<usize>);

/// Which side of a bipartition a vertex is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

/// A two-sided vertex labeling; every edge must join an X-vertex to a Y-vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    side: Vec<Side>,
}

impl Bipartition {
    pub fn new(side: Vec<Side>) -> Bipartition {
        Bipartition { side }
    }

    pub fn side(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn len(&self) -> usize {
        self.side.len()
    }

    pub fn is_empty(&self) -> bool {
        self.side.is_empty()
    }

    pub fn x_vertices(&self) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == Side::X)
            .collect()
    }

    pub fn y_vertices(&self) -> Vec<usize> {
        (0..self.side.len())
            .filter(|&v| self.side[v] == Side::Y)
            .collect()
    }

    /// True iff every edge of `g` crosses sides.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side.len() == g.n() && g.edges().all(|(u, v)| self.side[u] != self.side[v])
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> VertexSet {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        VertexSet::new(v)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
