//! Structural validators used on gadget witnesses: tree convexity of
//! bipartite graphs, star and comb shape checks, doubly-perfect elimination
//! orderings, and a small-instance chordal-bipartite test.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Bipartition, Graph, Side};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassCheckError {
    #[error("tree edge set is not a tree on the given vertices")]
    NotATree,
    #[error("tree does not span the X side of the bipartition")]
    NotSpanning,
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("instance has {n} vertices, above the size guard {max_n}")]
    GuardExceeded { n: usize, max_n: usize },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
}

/// Adjacency map of a claimed tree; errors unless `edges` form a tree exactly
/// on `vertices`.
fn tree_adjacency(
    vertices: &[usize],
    edges: &[(usize, usize)],
) -> Result<BTreeMap<usize, Vec<usize>>, ClassCheckError> {
    let verts: BTreeSet<usize> = vertices.iter().copied().collect();
    if verts.len() != vertices.len() {
        return Err(ClassCheckError::NotATree);
    }
    if verts.is_empty() || edges.len() + 1 != verts.len() {
        return Err(ClassCheckError::NotATree);
    }
    let mut adj: BTreeMap<usize, Vec<usize>> = verts.iter().map(|&v| (v, Vec::new())).collect();
    let mut seen = BTreeSet::new();
    for &(u, v) in edges {
        if !verts.contains(&u) || !verts.contains(&v) || u == v {
            return Err(ClassCheckError::NotATree);
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ClassCheckError::NotATree);
        }
        adj.get_mut(&u).unwrap().push(v);
        adj.get_mut(&v).unwrap().push(u);
    }
    // n-1 edges + connected = tree
    let root = *verts.iter().next().unwrap();
    let mut reached = BTreeSet::from([root]);
    let mut stack = vec![root];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if reached.insert(w) {
                stack.push(w);
            }
        }
    }
    if reached.len() != verts.len() {
        return Err(ClassCheckError::NotATree);
    }
    Ok(adj)
}

/// Checks that every Y-vertex neighborhood induces a connected subtree of the
/// given tree on the X side. Returns the least violating Y-vertex, or `None`
/// when the graph is tree-convex with this witness.
pub fn tree_convex_violation(
    g: &Graph,
    bp: &Bipartition,
    tree_edges: &[(usize, usize)],
) -> Result<Option<usize>, ClassCheckError> {
    if bp.len() != g.n() {
        return Err(ClassCheckError::NotSpanning);
    }
    let x_side = bp.x_vertices();
    let adj = tree_adjacency(&x_side, tree_edges)?;
    for y in bp.y_vertices() {
        let nbhd: BTreeSet<usize> = g.neighbors(y).iter().copied().collect();
        if nbhd.iter().any(|v| bp.side(*v) != Side::X) {
            return Err(ClassCheckError::NotSpanning);
        }
        if nbhd.len() <= 1 {
            continue;
        }
        let start = *nbhd.iter().next().unwrap();
        let mut reached = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[&u] {
                if nbhd.contains(&w) && reached.insert(w) {
                    stack.push(w);
                }
            }
        }
        if reached.len() != nbhd.len() {
            return Ok(Some(y));
        }
    }
    Ok(None)
}

/// Tests whether the tree is a star; on success returns its center.
/// Single-vertex and single-edge trees count as stars (least id as center).
pub fn star_center(
    vertices: &[usize],
    edges: &[(usize, usize)],
) -> Result<Option<usize>, ClassCheckError> {
    let adj = tree_adjacency(vertices, edges)?;
    let n = vertices.len();
    if n <= 2 {
        return Ok(vertices.iter().copied().min());
    }
    Ok(adj
        .iter()
        .find(|(_, nbrs)| nbrs.len() == n - 1)
        .map(|(&c, _)| c))
}

/// Tests the comb shape: `backbone` must be a path in the tree and
/// `teeth[i]` the unique leaf hanging off `backbone[i]`; together they use
/// every tree vertex exactly once.
pub fn is_comb(
    vertices: &[usize],
    edges: &[(usize, usize)],
    backbone: &[usize],
    teeth: &[usize],
) -> Result<bool, ClassCheckError> {
    let adj = tree_adjacency(vertices, edges)?;
    if backbone.len() != teeth.len() || backbone.is_empty() {
        return Ok(false);
    }
    let mut all: Vec<usize> = backbone.iter().chain(teeth).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != vertices.len()
        || all != {
            let mut v = vertices.to_vec();
            v.sort_unstable();
            v
        }
    {
        return Ok(false);
    }
    let backbone_set: BTreeSet<usize> = backbone.iter().copied().collect();
    for w in backbone.windows(2) {
        if !adj[&w[0]].contains(&w[1]) {
            return Ok(false);
        }
    }
    for (i, (&b, &t)) in backbone.iter().zip(teeth).enumerate() {
        if !adj[&b].contains(&t) || adj[&t].len() != 1 {
            return Ok(false);
        }
        // backbone degree: path neighbors plus exactly its one tooth
        let expected = 1 + usize::from(i > 0) + usize::from(i + 1 < backbone.len());
        if adj[&b].len() != expected {
            return Ok(false);
        }
        if adj[&b].iter().filter(|w| !backbone_set.contains(w)).count() != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Verifies a doubly perfect elimination ordering: at each position the
/// vertex must be simplicial in the remaining induced subgraph and have a
/// maximum neighbor there. Returns the first failing position (0-based), or
/// `None` if the ordering is a DPEO.
pub fn verify_dpeo(g: &Graph, order: &[usize]) -> Result<Option<usize>, ClassCheckError> {
    let n = g.n();
    if order.len() != n {
        return Err(ClassCheckError::NotAPermutation);
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n {
            return Err(ClassCheckError::VertexOutOfRange(v));
        }
        if seen[v] {
            return Err(ClassCheckError::NotAPermutation);
        }
        seen[v] = true;
    }
    let mut alive = vec![true; n];
    for (pos, &v) in order.iter().enumerate() {
        let closed: Vec<usize> = std::iter::once(v)
            .chain(g.neighbors(v).iter().copied())
            .filter(|&w| alive[w])
            .collect();
        let simplicial = closed.iter().all(|&a| {
            closed
                .iter()
                .all(|&b| a == b || g.has_edge(a, b) || (a == v || b == v))
        });
        // closed neighborhoods within the remaining subgraph
        let closed_of = |u: usize| -> BTreeSet<usize> {
            std::iter::once(u)
                .chain(g.neighbors(u).iter().copied())
                .filter(|&w| alive[w])
                .collect()
        };
        let has_max_neighbor = closed.iter().any(|&y| {
            let ny = closed_of(y);
            closed.iter().all(|&z| closed_of(z).is_subset(&ny))
        });
        if !(simplicial && has_max_neighbor) {
            return Ok(Some(pos));
        }
        alive[v] = false;
    }
    Ok(None)
}

/// True iff the bipartite graph has no chordless cycle of length at least
/// six, by bounded chordless-path enumeration. Guarded to `n <= 30`.
pub fn is_chordal_bipartite_small(g: &Graph) -> Result<bool, ClassCheckError> {
    const MAX_N: usize = 30;
    if g.n() > MAX_N {
        return Err(ClassCheckError::GuardExceeded {
            n: g.n(),
            max_n: MAX_N,
        });
    }
    if g.bipartition_of().is_err() {
        return Err(ClassCheckError::NotBipartite);
    }
    // Grow chordless paths from each start s using only vertices > s. A new
    // vertex adjacent to s either closes a cycle (report when length >= 6) or
    // is skipped: extending through it would put the chord w-s inside any
    // longer cycle.
    fn extend(g: &Graph, s: usize, path: &mut Vec<usize>, on_path: &mut Vec<bool>) -> bool {
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if w <= s || on_path[w] {
                continue;
            }
            if path.len() >= 2 {
                if path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                    continue;
                }
                // w closes back to the start: either a long chordless cycle,
                // or a short one that bans any extension through w
                if g.has_edge(w, s) {
                    if path.len() + 1 >= 6 {
                        return true;
                    }
                    continue;
                }
            }
            path.push(w);
            on_path[w] = true;
            if extend(g, s, path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    let mut on_path = vec![false; g.n()];
    for s in 0..g.n() {
        let mut path = vec![s];
        on_path[s] = true;
        if extend(g, s, &mut path, &mut on_path) {
            return Ok(false);
        }
        on_path[s] = false;
    }
    Ok(true)
}
