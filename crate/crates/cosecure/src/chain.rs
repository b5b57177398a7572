//! Chain graphs: recognition, proper ordered chain partition, and an exact
//! polynomial-space solver for the cosecure domination number.
//!
//! A bipartite graph is a chain graph when the X-side neighborhoods are
//! totally ordered by inclusion. Grouping X by equal neighborhoods gives
//! classes `X_1..X_k` with strictly nested neighborhoods; `Y_1 = N(X_1)` and
//! `Y_i = N(X_i) \ N(X_{i-1})` partition the other side. In that partition a
//! vertex of `X_i` is adjacent to `Y_j` exactly when `j <= i`, so the whole
//! graph is determined by the class sizes.
//!
//! Vertices inside one class are twins, hence whether a set is cosecure
//! dominating depends only on how many vertices it takes from each class.
//! The solver therefore minimizes over per-class selection counts. An
//! exchange argument caps the useful counts per class at
//! `{0, 1, 2, size - 1, size}`: the feasibility predicate only ever tests a
//! count for being zero, one, at least two, deficient, one short of full, or
//! full, and any count strictly between two and `size - 2` can be lowered to
//! two without changing those facts. The remaining search is pruned by cost
//! against a template upper bound and is exact.

use serde::Serialize;
use thiserror::Error;

use crate::domsets::{certify_cosecure, CosecureCertificate};
use crate::graph::{Bipartition, Graph, OddCycle, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("graph is not bipartite (odd cycle through {} vertices)", .0.0.len())]
    NotBipartite(OddCycle),
    #[error("not a chain graph: vertices {u} and {v} have incomparable neighborhoods")]
    NotChain { u: usize, v: usize },
    #[error("isolated vertex {vertex}")]
    IsolatedVertex { vertex: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("invalid side sizes: need 1 <= p <= q, got p={p}, q={q}")]
    InvalidDimensions { p: usize, q: usize },
    #[error("internal partition inconsistency (recognition bug)")]
    PartitionInconsistent,
    #[error("internal witness construction error (selection bug)")]
    WitnessInvalid,
}

/// Orderings of the two sides with nested (X) and reverse-nested (Y)
/// neighborhoods.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainOrdering {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
}

/// Proper ordered chain partition: X grouped by equal neighborhoods in chain
/// order, Y split into the newly-reached remainders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainPartition {
    pub x_classes: Vec<Vec<usize>>,
    pub y_classes: Vec<Vec<usize>>,
}

impl ChainPartition {
    pub fn k(&self) -> usize {
        self.x_classes.len()
    }
}

/// One step in the optimal selection, for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum ChainCase {
    /// Single class: the graph is complete bipartite with side sizes `p <= q`.
    CompleteBipartite { p: usize, q: usize },
    /// A fully selected X class below the first selected Y class. Such
    /// blocks are forced whenever their vertices see no selected neighbor.
    FullBlockX { class: usize },
    /// A fully selected Y class above the last selected X class.
    FullBlockY { class: usize },
    /// Partial selections: `(class, count)` pairs per side.
    Core {
        x_counts: Vec<(usize, usize)>,
        y_counts: Vec<(usize, usize)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    #[serde(flatten)]
    pub case: ChainCase,
    /// Amount this step adds to the total.
    pub contribution: usize,
}

/// Full report for one connected chain graph.
#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub k: usize,
    pub x_classes: Vec<Vec<usize>>,
    pub y_classes: Vec<Vec<usize>>,
    pub gamma_cs: usize,
    pub witness: CosecureCertificate,
    pub trace: Vec<TraceStep>,
}

/// Orders the sides by degree and verifies neighborhood nesting.
///
/// X is sorted by ascending degree (ties by id), Y by descending degree. On
/// failure the returned pair of X-vertices has incomparable neighborhoods.
pub fn recognize_chain(g: &Graph, bp: &Bipartition) -> Result<ChainOrdering, ChainError> {
    debug_assert!(bp.is_valid_for(g), "bipartition precondition violated");
    if !g.is_connected() {
        return Err(ChainError::Disconnected);
    }
    let mut x_order = bp.x_vertices();
    x_order.sort_by_key(|&v| (g.degree(v), v));
    for w in x_order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !is_subset(g.neighbors(a), g.neighbors(b)) {
            // degrees ascend, so failure of inclusion means incomparability
            return Err(ChainError::NotChain { u: a, v: b });
        }
    }
    let mut y_order = bp.y_vertices();
    y_order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for w in y_order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !is_subset(g.neighbors(b), g.neighbors(a)) {
            return Err(ChainError::NotChain { u: a, v: b });
        }
    }
    Ok(ChainOrdering { x_order, y_order })
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    if small.len() > big.len() {
        return false;
    }
    let mut it = big.iter();
    'outer: for &s in small {
        for &b in it.by_ref() {
            if b == s {
                continue 'outer;
            }
            if b > s {
                return false;
            }
        }
        return false;
    }
    true
}

/// Groups the ordering into the proper ordered chain partition.
pub fn partition_chain(g: &Graph, ord: &ChainOrdering) -> Result<ChainPartition, ChainError> {
    let mut x_classes: Vec<Vec<usize>> = Vec::new();
    for &x in &ord.x_order {
        match x_classes.last_mut() {
            Some(class) if g.neighbors(class[0]) == g.neighbors(x) => class.push(x),
            _ => x_classes.push(vec![x]),
        }
    }
    let k = x_classes.len();
    // a Y vertex belongs to the earliest X class it is adjacent to
    let mut class_of_x = vec![usize::MAX; g.n()];
    for (i, class) in x_classes.iter().enumerate() {
        for &x in class {
            class_of_x[x] = i;
        }
    }
    let mut y_classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &y in &ord.y_order {
        let first = g
            .neighbors(y)
            .iter()
            .map(|&x| class_of_x[x])
            .min()
            .ok_or(ChainError::PartitionInconsistent)?;
        y_classes[first].push(y);
    }
    for class in x_classes.iter_mut().chain(y_classes.iter_mut()) {
        class.sort_unstable();
    }
    if y_classes.iter().any(|c| c.is_empty()) {
        return Err(ChainError::PartitionInconsistent);
    }
    Ok(ChainPartition {
        x_classes,
        y_classes,
    })
}

/// Cosecure domination number of the complete bipartite graph with side sizes
/// `p <= q`: `q` when `p = 1`, otherwise `min(p, 4)`.
pub fn csdn_complete_bipartite(p: usize, q: usize) -> Result<usize, ChainError> {
    if p < 1 || p > q {
        return Err(ChainError::InvalidDimensions { p, q });
    }
    Ok(match p {
        1 => q,
        2 => 2,
        3 => 3,
        _ => 4,
    })
}

/// Exact feasibility of a per-class selection profile.
///
/// `a[i]` / `b[j]` vertices are taken from `X_i` / `Y_j`. The conditions are
/// the cosecure-domination definition specialized to the staircase adjacency
/// (`X_i ~ Y_j` iff `j <= i`), written against class counts:
///
/// - an unselected X vertex needs a selected Y class at or below it,
/// - an unselected Y vertex needs a selected X class at or above it,
/// - a selected X vertex swaps with an unselected Y vertex at or below it;
///   after the swap every still-deficient Y class above the remaining last
///   selected X class would be undominated, so at most one such class may be
///   deficient and the swap must fill it,
/// - symmetrically for selected Y vertices.
fn profile_is_cosecure(x: &[usize], y: &[usize], a: &[usize], b: &[usize]) -> bool {
    let k = x.len();
    let first_y = (0..k).find(|&j| b[j] >= 1);
    let last_x = (0..k).rev().find(|&i| a[i] >= 1);
    for i in 0..k {
        if a[i] < x[i] && !first_y.is_some_and(|f| f <= i) {
            return false;
        }
    }
    for j in 0..k {
        if b[j] < y[j] && !last_x.is_some_and(|l| l >= j) {
            return false;
        }
    }
    // selected X_i members need a replacement below them
    for i in 0..k {
        if a[i] == 0 {
            continue;
        }
        let lx_i = if a[i] >= 2 {
            last_x
        } else {
            (0..k).rev().find(|&r| r != i && a[r] >= 1)
        };
        let lo = lx_i.map_or(0, |l| l + 1);
        let mut deficient_above = (lo..k).filter(|&s| b[s] < y[s]);
        let ok = match (deficient_above.next(), deficient_above.next()) {
            (None, _) => (0..=i).any(|j| b[j] < y[j]),
            (Some(s), None) => s <= i && b[s] + 1 == y[s],
            _ => false,
        };
        if !ok {
            return false;
        }
    }
    // selected Y_j members need a replacement at or above them
    for j in 0..k {
        if b[j] == 0 {
            continue;
        }
        let fy_j = if b[j] >= 2 {
            first_y
        } else {
            (0..k).find(|&s| s != j && b[s] >= 1)
        };
        let hi = fy_j.unwrap_or(k);
        let mut deficient_below = (0..hi).filter(|&t| a[t] < x[t]);
        let ok = match (deficient_below.next(), deficient_below.next()) {
            (None, _) => (j..k).any(|r| a[r] < x[r]),
            (Some(t), None) => t >= j && a[t] + 1 == x[t],
            _ => false,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// Count candidates worth trying for a class of the given size.
fn candidates(size: usize) -> Vec<usize> {
    let mut c = vec![0, 1, 2, size.saturating_sub(1), size];
    c.retain(|&v| v <= size);
    c.sort_unstable();
    c.dedup();
    c
}

struct ProfileSearch<'a> {
    x: &'a [usize],
    y: &'a [usize],
    x_cands: Vec<Vec<usize>>,
    y_cands: Vec<Vec<usize>>,
    best_cost: usize,
    best: Option<(Vec<usize>, Vec<usize>)>,
}

impl<'a> ProfileSearch<'a> {
    fn new(x: &'a [usize], y: &'a [usize]) -> Self {
        ProfileSearch {
            x,
            y,
            x_cands: x.iter().map(|&s| candidates(s)).collect(),
            y_cands: y.iter().map(|&s| candidates(s)).collect(),
            best_cost: usize::MAX,
            best: None,
        }
    }

    /// Seeds the incumbent with boundary templates: full X prefix, full Y
    /// suffix, and one or two selections at the boundary classes. These cover
    /// the common optima, so the exhaustive pass below prunes hard.
    fn seed_templates(&mut self) {
        let k = self.x.len();
        let mut a = vec![0usize; k];
        let mut b = vec![0usize; k];
        for first_sel_y in 0..=k {
            for last_sel_x in 0..=k {
                for &ar in &[0usize, 1, 2] {
                    for &bl in &[0usize, 1, 2] {
                        a.iter_mut().for_each(|v| *v = 0);
                        b.iter_mut().for_each(|v| *v = 0);
                        let head = first_sel_y.min(k);
                        a[..head].copy_from_slice(&self.x[..head]);
                        b[last_sel_x..].copy_from_slice(&self.y[last_sel_x..]);
                        if last_sel_x >= 1 && last_sel_x <= k {
                            let i = last_sel_x - 1;
                            a[i] = a[i].max(ar.min(self.x[i]));
                        }
                        if first_sel_y < k {
                            b[first_sel_y] = b[first_sel_y].max(bl.min(self.y[first_sel_y]));
                        }
                        self.try_profile(&a, &b);
                    }
                }
            }
        }
    }

    fn try_profile(&mut self, a: &[usize], b: &[usize]) {
        let cost: usize = a.iter().sum::<usize>() + b.iter().sum::<usize>();
        if cost < self.best_cost && profile_is_cosecure(self.x, self.y, a, b) {
            self.best_cost = cost;
            self.best = Some((a.to_vec(), b.to_vec()));
        }
    }

    fn run(mut self) -> Option<(usize, Vec<usize>, Vec<usize>)> {
        self.seed_templates();
        let k = self.x.len();
        let mut a = vec![0usize; k];
        let mut b = vec![0usize; k];
        self.dfs(0, 0, false, &mut a, &mut b);
        let cost = self.best_cost;
        self.best.map(|(a, b)| (cost, a, b))
    }

    fn dfs(&mut self, i: usize, cost: usize, have_y: bool, a: &mut Vec<usize>, b: &mut Vec<usize>) {
        if cost >= self.best_cost {
            return;
        }
        if i == self.x.len() {
            if profile_is_cosecure(self.x, self.y, a, b) {
                self.best_cost = cost;
                self.best = Some((a.clone(), b.clone()));
            }
            return;
        }
        let (xa, yb) = (self.x_cands[i].clone(), self.y_cands[i].clone());
        for &bv in &yb {
            for &av in &xa {
                // an unselected X vertex here can never be dominated later:
                // its Y neighbors all sit at or below this class
                let saw_y = have_y || bv >= 1;
                if av < self.x[i] && !saw_y {
                    continue;
                }
                a[i] = av;
                b[i] = bv;
                self.dfs(i + 1, cost + av + bv, saw_y, a, b);
            }
        }
        a[i] = 0;
        b[i] = 0;
    }
}

fn validated_partition(g: &Graph) -> Result<ChainPartition, ChainError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(ChainError::IsolatedVertex { vertex: v });
    }
    if !g.is_connected() {
        return Err(ChainError::Disconnected);
    }
    let bp = g.bipartition_of().map_err(ChainError::NotBipartite)?;
    let ord = recognize_chain(g, &bp)?;
    partition_chain(g, &ord)
}

fn solve_sizes(x: &[usize], y: &[usize]) -> Result<(usize, Vec<usize>, Vec<usize>), ChainError> {
    ProfileSearch::new(x, y)
        .run()
        .ok_or(ChainError::PartitionInconsistent)
}

fn trace_of(x: &[usize], y: &[usize], a: &[usize], b: &[usize]) -> Vec<TraceStep> {
    let k = x.len();
    if k == 1 {
        let (p, q) = (x[0].min(y[0]), x[0].max(y[0]));
        return vec![TraceStep {
            case: ChainCase::CompleteBipartite { p, q },
            contribution: a[0] + b[0],
        }];
    }
    let first_y = (0..k).find(|&j| b[j] >= 1).unwrap_or(k);
    let last_x = (0..k).rev().find(|&i| a[i] >= 1);
    let mut steps = Vec::new();
    let mut core_x = Vec::new();
    let mut core_y = Vec::new();
    for i in 0..k {
        if a[i] == 0 {
            continue;
        }
        if a[i] == x[i] && i < first_y {
            steps.push(TraceStep {
                case: ChainCase::FullBlockX { class: i + 1 },
                contribution: a[i],
            });
        } else {
            core_x.push((i + 1, a[i]));
        }
    }
    for j in 0..k {
        if b[j] == 0 {
            continue;
        }
        if b[j] == y[j] && last_x.is_none_or(|l| j > l) {
            steps.push(TraceStep {
                case: ChainCase::FullBlockY { class: j + 1 },
                contribution: b[j],
            });
        } else {
            core_y.push((j + 1, b[j]));
        }
    }
    let core_cost: usize = core_x.iter().map(|&(_, c)| c).sum::<usize>()
        + core_y.iter().map(|&(_, c)| c).sum::<usize>();
    if core_cost > 0 || steps.is_empty() {
        steps.push(TraceStep {
            case: ChainCase::Core {
                x_counts: core_x,
                y_counts: core_y,
            },
            contribution: core_cost,
        });
    }
    steps
}

/// Cosecure domination number of a connected chain graph.
pub fn csdn_chain(g: &Graph) -> Result<usize, ChainError> {
    let part = validated_partition(g)?;
    let x: Vec<usize> = part.x_classes.iter().map(|c| c.len()).collect();
    let y: Vec<usize> = part.y_classes.iter().map(|c| c.len()).collect();
    if part.k() == 1 {
        // complete bipartite: closed form
        return csdn_complete_bipartite(x[0].min(y[0]), x[0].max(y[0]));
    }
    Ok(solve_sizes(&x, &y)?.0)
}

fn materialize(part: &ChainPartition, a: &[usize], b: &[usize]) -> VertexSet {
    let mut members = Vec::new();
    for (class, &take) in part.x_classes.iter().zip(a) {
        members.extend_from_slice(&class[..take]);
    }
    for (class, &take) in part.y_classes.iter().zip(b) {
        members.extend_from_slice(&class[..take]);
    }
    VertexSet::new(members)
}

/// Builds an explicit optimal cosecure dominating set of size `csdn_chain(g)`
/// and validates it. Validation failure signals a solver bug, never a
/// property of the input.
pub fn chain_witness(g: &Graph) -> Result<CosecureCertificate, ChainError> {
    let part = validated_partition(g)?;
    let x: Vec<usize> = part.x_classes.iter().map(|c| c.len()).collect();
    let y: Vec<usize> = part.y_classes.iter().map(|c| c.len()).collect();
    let (_, a, b) = solve_sizes(&x, &y)?;
    let set = materialize(&part, &a, &b);
    certify_cosecure(g, &set).map_err(|_| ChainError::WitnessInvalid)
}

/// Recognition, partition, value, witness and selection trace in one call.
pub fn analyze(g: &Graph) -> Result<ChainReport, ChainError> {
    let part = validated_partition(g)?;
    let x: Vec<usize> = part.x_classes.iter().map(|c| c.len()).collect();
    let y: Vec<usize> = part.y_classes.iter().map(|c| c.len()).collect();
    let (gamma_cs, a, b) = solve_sizes(&x, &y)?;
    let set = materialize(&part, &a, &b);
    let witness = certify_cosecure(g, &set).map_err(|_| ChainError::WitnessInvalid)?;
    if witness.set.len() != gamma_cs {
        return Err(ChainError::WitnessInvalid);
    }
    let trace = trace_of(&x, &y, &a, &b);
    Ok(ChainReport {
        k: part.k(),
        x_classes: part.x_classes,
        y_classes: part.y_classes,
        gamma_cs,
        witness,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::min_cosecure;

    #[test]
    fn cb_formula() {
        assert_eq!(csdn_complete_bipartite(1, 5).unwrap(), 5);
        assert_eq!(csdn_complete_bipartite(2, 2).unwrap(), 2);
        assert_eq!(csdn_complete_bipartite(3, 3).unwrap(), 3);
        assert_eq!(csdn_complete_bipartite(4, 7).unwrap(), 4);
        assert!(csdn_complete_bipartite(5, 4).is_err());
        assert!(csdn_complete_bipartite(0, 4).is_err());
    }

    #[test]
    fn recognize_p4() {
        let g = gen::path(4);
        let bp = g.bipartition_of().unwrap();
        let ord = recognize_chain(&g, &bp).unwrap();
        assert_eq!(ord.x_order, vec![0, 2]);
        assert_eq!(ord.y_order, vec![1, 3]);
    }

    #[test]
    fn recognize_c6_fails_with_witness() {
        let g = gen::cycle(6);
        let bp = g.bipartition_of().unwrap();
        let err = recognize_chain(&g, &bp).unwrap_err();
        match err {
            ChainError::NotChain { u, v } => {
                let nu = g.neighbors(u);
                let nv = g.neighbors(v);
                assert!(!is_subset(nu, nv) && !is_subset(nv, nu));
            }
            other => panic!("expected NotChain, got {other:?}"),
        }
    }

    #[test]
    fn recognize_complete_bipartite() {
        let g = gen::complete_bipartite(2, 3);
        let bp = g.bipartition_of().unwrap();
        let ord = recognize_chain(&g, &bp).unwrap();
        let part = partition_chain(&g, &ord).unwrap();
        assert_eq!(part.k(), 1);
    }

    #[test]
    fn partition_p4() {
        let g = gen::path(4);
        let bp = g.bipartition_of().unwrap();
        let ord = recognize_chain(&g, &bp).unwrap();
        let part = partition_chain(&g, &ord).unwrap();
        assert_eq!(part.x_classes, vec![vec![0], vec![2]]);
        assert_eq!(part.y_classes, vec![vec![1], vec![3]]);
    }

    #[test]
    fn partition_double_star() {
        // centers 0,1 adjacent; 0 has leaves 2,3; 1 has leaves 4,5
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let bp = g.bipartition_of().unwrap();
        let ord = recognize_chain(&g, &bp).unwrap();
        let part = partition_chain(&g, &ord).unwrap();
        assert_eq!(part.x_classes, vec![vec![4, 5], vec![0]]);
        assert_eq!(part.y_classes, vec![vec![1], vec![2, 3]]);
    }

    #[test]
    fn chain_values() {
        assert_eq!(csdn_chain(&gen::path(4)).unwrap(), 2);
        assert_eq!(csdn_chain(&gen::complete_bipartite(3, 4)).unwrap(), 3);
        let double_star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(csdn_chain(&double_star).unwrap(), 4);
        let g = gen::chain_from_classes(&[1, 1, 1], &[1, 1, 1]);
        assert_eq!(csdn_chain(&g).unwrap(), 3);
    }

    #[test]
    fn chain_errors() {
        let c3 = gen::cycle(3);
        assert!(matches!(csdn_chain(&c3), Err(ChainError::NotBipartite(_))));
        let disconnected = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            csdn_chain(&disconnected),
            Err(ChainError::Disconnected)
        ));
        let isolated = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            csdn_chain(&isolated),
            Err(ChainError::IsolatedVertex { vertex: 2 })
        ));
    }

    #[test]
    fn witness_matches_value() {
        for g in [
            gen::path(4),
            gen::complete_bipartite(2, 5),
            gen::complete_bipartite(3, 4),
            gen::complete_bipartite(4, 4),
            gen::chain_from_classes(&[1, 1, 1], &[1, 1, 1]),
            gen::chain_from_classes(&[2, 2], &[1, 1]),
            gen::chain_from_classes(&[1, 2, 1], &[2, 1, 1]),
            gen::chain_from_classes(&[2, 2, 3], &[1, 1, 1]),
        ] {
            let cert = chain_witness(&g).unwrap();
            assert_eq!(cert.set.len(), csdn_chain(&g).unwrap());
        }
    }

    #[test]
    fn forced_block_in_witness() {
        // |X_1| = 2 pendants on a single support: the witness must contain all
        // of X_1 and skip the support.
        let g = gen::chain_from_classes(&[2, 2], &[1, 1]);
        let part = validated_partition(&g).unwrap();
        let cert = chain_witness(&g).unwrap();
        for &v in &part.x_classes[0] {
            assert!(cert.set.contains(v));
        }
        assert!(!cert.set.contains(part.y_classes[0][0]));
    }

    #[test]
    fn trace_sums_to_value() {
        for g in [
            gen::chain_from_classes(&[3, 1, 2], &[1, 2, 1]),
            gen::chain_from_classes(&[2, 2, 3], &[1, 1, 1]),
            gen::chain_from_classes(&[1, 1], &[1, 1]),
            gen::complete_bipartite(3, 4),
        ] {
            let report = analyze(&g).unwrap();
            let total: usize = report.trace.iter().map(|s| s.contribution).sum();
            assert_eq!(total, report.gamma_cs);
        }
    }

    // Nested multi-pendant blocks are the shapes where a naive peel-off
    // recursion overestimates; the profile search must match the oracle.
    #[test]
    fn nested_pendant_blocks_match_oracle() {
        for (x, y) in [
            (vec![2usize, 2, 3], vec![1usize, 1, 1]),
            (vec![2, 2, 2], vec![1, 1, 1]),
            (vec![1, 1, 1], vec![2, 2, 2]),
            (vec![1, 1, 1], vec![3, 2, 2]),
            (vec![2, 3, 2], vec![1, 1, 1]),
            (vec![3, 2, 3], vec![1, 1, 1]),
        ] {
            let g = gen::chain_from_classes(&x, &y);
            let expected = min_cosecure(&g).unwrap().value;
            assert_eq!(csdn_chain(&g).unwrap(), expected, "shape x={x:?} y={y:?}");
            let cert = chain_witness(&g).unwrap();
            assert_eq!(cert.set.len(), expected);
        }
    }

    // Any chain graph with at least four vertices on each side needs at
    // least four cosecure dominators.
    #[test]
    fn lower_bound_with_wide_sides() {
        for (x, y) in [
            (vec![4usize], vec![4usize]),
            (vec![2, 2], vec![2, 2]),
            (vec![1, 3], vec![3, 1]),
            (vec![2, 1, 1], vec![1, 1, 2]),
            (vec![1, 1, 1, 1], vec![1, 1, 1, 1]),
            (vec![2, 2, 2], vec![1, 2, 1]),
        ] {
            let g = gen::chain_from_classes(&x, &y);
            assert!(csdn_chain(&g).unwrap() >= 4, "shape x={x:?} y={y:?}");
        }
    }

    #[test]
    fn matches_oracle_on_shapes() {
        let shapes: Vec<(Vec<usize>, Vec<usize>)> = vec![
            (vec![1], vec![1]),
            (vec![1], vec![4]),
            (vec![2], vec![2]),
            (vec![4], vec![5]),
            (vec![1, 1], vec![1, 1]),
            (vec![2, 1], vec![1, 1]),
            (vec![1, 2], vec![2, 1]),
            (vec![2, 2], vec![2, 2]),
            (vec![1, 3], vec![2, 2]),
            (vec![1, 1, 1], vec![1, 1, 1]),
            (vec![2, 1, 1], vec![1, 1, 2]),
            (vec![1, 2, 1], vec![1, 2, 1]),
            (vec![2, 1, 2], vec![1, 2, 1]),
            (vec![1, 1, 1, 1], vec![1, 1, 1, 1]),
            (vec![2, 1, 1, 1], vec![1, 1, 1, 2]),
        ];
        for (x, y) in shapes {
            let g = gen::chain_from_classes(&x, &y);
            let expected = min_cosecure(&g).unwrap().value;
            assert_eq!(
                csdn_chain(&g).unwrap(),
                expected,
                "shape x={x:?} y={y:?} disagrees with the oracle"
            );
        }
    }
}
