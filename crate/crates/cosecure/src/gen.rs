//! Deterministic instance generators for tests, cross-checks and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::oracle::SetCoverInstance;

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// K_{p,q} with X = `0..p` and Y = `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut edges = Vec::with_capacity(p * q);
    for x in 0..p {
        for y in 0..q {
            edges.push((x, p + y));
        }
    }
    Graph::from_edges(p + q, &edges).unwrap()
}

pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

/// Builds the chain graph determined by class sizes: X classes come first in
/// id order, then Y classes, and a vertex of `X_i` is adjacent to `Y_j`
/// exactly when `j <= i`. All class sizes must be positive and the two size
/// vectors equally long; the result is connected.
pub fn chain_from_classes(x_sizes: &[usize], y_sizes: &[usize]) -> Graph {
    assert_eq!(x_sizes.len(), y_sizes.len());
    assert!(!x_sizes.is_empty());
    assert!(x_sizes.iter().chain(y_sizes).all(|&s| s >= 1));
    let nx: usize = x_sizes.iter().sum();
    let ny: usize = y_sizes.iter().sum();
    let mut x_start = vec![0usize; x_sizes.len() + 1];
    let mut y_start = vec![nx; y_sizes.len() + 1];
    for i in 0..x_sizes.len() {
        x_start[i + 1] = x_start[i] + x_sizes[i];
        y_start[i + 1] = y_start[i] + y_sizes[i];
    }
    let mut edges = Vec::new();
    for i in 0..x_sizes.len() {
        for x in x_start[i]..x_start[i + 1] {
            for j in 0..=i {
                for y in y_start[j]..y_start[j + 1] {
                    edges.push((x, y));
                }
            }
        }
    }
    Graph::from_edges(nx + ny, &edges).unwrap()
}

/// Random connected chain graph on at most `max_n` vertices (at least 2), with
/// labels shuffled so the chain structure is not visible in the id order.
pub fn random_chain(max_n: usize, rng: &mut impl Rng) -> Graph {
    assert!(max_n >= 2);
    let n = rng.gen_range(2..=max_n);
    let k = rng.gen_range(1..=(n / 2).max(1));
    let x_total = rng.gen_range(k..=n - k);
    let x_sizes = random_composition(x_total, k, rng);
    let y_sizes = random_composition(n - x_total, k, rng);
    let g = chain_from_classes(&x_sizes, &y_sizes);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// Splits `total` into `parts` positive summands, uniformly over cut points.
fn random_composition(total: usize, parts: usize, rng: &mut impl Rng) -> Vec<usize> {
    let total = total.max(parts);
    let mut cuts: Vec<usize> = (1..total).collect();
    cuts.shuffle(rng);
    let mut cuts: Vec<usize> = cuts.into_iter().take(parts - 1).collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut out = Vec::with_capacity(parts);
    let mut prev = 0;
    for c in cuts {
        out.push(c - prev);
        prev = c;
    }
    out
}

/// Erdos-Renyi graph on `n` vertices.
pub fn random_graph(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(n: usize, edge_prob: f64, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    let mut present = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
        present[u][v] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected bipartite graph with side sizes `n1`, `n2` (X = `0..n1`).
/// A random cross spanning tree guarantees connectivity; further cross edges
/// appear with probability `extra_prob`.
pub fn random_connected_bipartite(
    n1: usize,
    n2: usize,
    extra_prob: f64,
    rng: &mut impl Rng,
) -> Graph {
    assert!(n1 >= 1 && n2 >= 1);
    let n = n1 + n2;
    let mut order: Vec<usize> = (0..n).filter(|&v| v != 0 && v != n1).collect();
    order.shuffle(rng);
    // seed with one vertex from each side so every later vertex finds an
    // earlier neighbor on the opposite side
    let mut placed: Vec<usize> = vec![0, n1];
    let mut edges = vec![(0, n1)];
    let mut present = std::collections::BTreeSet::from([(0, n1)]);
    for v in order {
        let v_is_x = v < n1;
        let candidates: Vec<usize> = placed
            .iter()
            .copied()
            .filter(|&u| (u < n1) != v_is_x)
            .collect();
        let u = *candidates.choose(rng).unwrap();
        let key = (u.min(v), u.max(v));
        edges.push(key);
        present.insert(key);
        placed.push(v);
    }
    for x in 0..n1 {
        for y in n1..n {
            if !present.contains(&(x, y)) && rng.gen_bool(extra_prob) {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random set-cover instance with `p <= max_p` elements and `q <= max_q`
/// subsets; every element is covered and no subset is empty.
pub fn random_set_cover(max_p: usize, max_q: usize, rng: &mut impl Rng) -> SetCoverInstance {
    let p = rng.gen_range(1..=max_p);
    let q = rng.gen_range(1..=max_q);
    let mut subsets: Vec<Vec<usize>> = (0..q)
        .map(|_| (1..=p).filter(|_| rng.gen_bool(0.4)).collect())
        .collect();
    for s in subsets.iter_mut() {
        if s.is_empty() {
            s.push(rng.gen_range(1..=p));
        }
    }
    let mut covered = vec![false; p + 1];
    for s in &subsets {
        for &e in s {
            covered[e] = true;
        }
    }
    for e in 1..=p {
        if !covered[e] {
            let j = rng.gen_range(0..q);
            subsets[j].push(e);
        }
    }
    SetCoverInstance::new(p, subsets).expect("generator maintains the invariants")
}

/// All labeled graphs on `n` vertices that are connected, by edge-mask order.
/// Only sensible for very small `n`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "exhaustive enumeration is for n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{csdn_chain, recognize_chain};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chain_classes_p4() {
        let g = chain_from_classes(&[1, 1], &[1, 1]);
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 3);
        let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
        assert_eq!(csdn_chain(&g).unwrap(), 2);
    }

    #[test]
    fn random_chain_recognizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let g = random_chain(12, &mut rng);
            let bp = g.bipartition_of().expect("chain graphs are bipartite");
            recognize_chain(&g, &bp).expect("generated graph must be a chain graph");
        }
    }

    #[test]
    fn random_bipartite_is_connected_bipartite() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let g = random_connected_bipartite(3, 4, 0.3, &mut rng);
            assert!(g.is_connected());
            assert!(g.bipartition_of().is_ok());
        }
    }

    #[test]
    fn random_set_cover_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let inst = random_set_cover(4, 4, &mut rng);
            assert!(inst.validate().is_ok());
        }
    }

    #[test]
    fn connected_graph_counts() {
        // labeled connected graphs: 1, 1, 4, 38 for n = 1..4
        assert_eq!(connected_graphs(1).len(), 1);
        assert_eq!(connected_graphs(2).len(), 1);
        assert_eq!(connected_graphs(3).len(), 4);
        assert_eq!(connected_graphs(4).len(), 38);
    }

    #[test]
    fn deterministic_under_seed() {
        let a = random_chain(10, &mut ChaCha8Rng::seed_from_u64(42));
        let b = random_chain(10, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(a, b);
    }
}
