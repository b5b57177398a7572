//! Exact brute-force solvers for minimum dominating set, minimum cosecure
//! dominating set, and minimum set cover.
//!
//! The searches enumerate candidate sets in increasing cardinality and, within
//! one cardinality, in lexicographic order of the sorted member list, so the
//! reported witness is always the lexicographically least optimum. A size
//! guard (default 24 vertices) protects against accidental exponential runs;
//! it can be raised up to the hard cap of 63 vertices.

use serde::Serialize;
use thiserror::Error;

use crate::domsets::{certify_cosecure, pendant_supports, CosecureCertificate};
use crate::graph::{Graph, VertexSet};

/// Hard cap: vertex sets are manipulated as single `u64` masks.
pub const HARD_CAP: usize = 63;

#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Refuse instances with more vertices than this.
    pub max_n: usize,
    /// Apply the forced-pendant preprocessing filter: pendants of a support
    /// with two or more pendant neighbors are fixed inside every candidate
    /// set and the support outside. Off by default so that this very property
    /// stays testable against the unpruned search.
    pub forced_pendant_prune: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            max_n: 24,
            forced_pendant_prune: false,
        }
    }
}

impl OracleOptions {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleOptions {
            max_n,
            ..Default::default()
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, above the size guard {max_n}")]
    GuardExceeded { n: usize, max_n: usize },
    #[error("isolated vertex {vertex}: no cosecure dominating set exists")]
    IsolatedVertex { vertex: usize },
    #[error("no feasible set exists")]
    Unsolvable,
}

/// Result of an exact search: optimum value, the lexicographically least
/// optimal witness, and (for cosecure runs) its certificate.
#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub value: usize,
    pub witness: VertexSet,
    pub certificate: Option<CosecureCertificate>,
}

struct Masks {
    n: usize,
    full: u64,
    closed: Vec<u64>,
    open: Vec<u64>,
    /// `critical[i]` lists vertices whose closed neighborhood has maximum id
    /// `i`: once vertex `i` is decided their domination status is final.
    critical: Vec<Vec<usize>>,
    max_cover: usize,
}

impl Masks {
    fn build(g: &Graph) -> Masks {
        let n = g.n();
        assert!(n <= HARD_CAP);
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
        let mut closed = vec![0u64; n];
        let mut open = vec![0u64; n];
        let mut critical = vec![Vec::new(); n];
        let mut max_cover = 1;
        for v in 0..n {
            let mut c = 1u64 << v;
            for &w in g.neighbors(v) {
                c |= 1 << w;
            }
            closed[v] = c;
            open[v] = c & !(1 << v);
            max_cover = max_cover.max(c.count_ones() as usize);
            let hi = 63 - c.leading_zeros() as usize;
            critical[hi].push(v);
        }
        Masks {
            n,
            full,
            closed,
            open,
            critical,
            max_cover,
        }
    }

    /// Greedy disjoint closed-neighborhood packing: a sound lower bound for
    /// both domination numbers.
    fn packing_lower_bound(&self) -> usize {
        let mut taken = 0u64;
        let mut count = 0;
        for v in 0..self.n {
            if self.closed[v] & taken == 0 {
                taken |= self.closed[v];
                count += 1;
            }
        }
        count.max(1)
    }
}

struct Search<'a> {
    m: &'a Masks,
    k: usize,
    cosecure: bool,
    forced_in: u64,
    forced_out: u64,
}

impl<'a> Search<'a> {
    /// Lexicographically least feasible set of size exactly `k`, if any.
    fn run(&self) -> Option<u64> {
        if self.k > self.m.n {
            return None;
        }
        self.dfs(0, 0, 0, 0)
    }

    fn dfs(&self, i: usize, chosen: u64, dominated: u64, count: usize) -> Option<u64> {
        let m = self.m;
        if count == self.k {
            if dominated == m.full && (!self.cosecure || self.final_cosecure(chosen)) {
                return Some(chosen);
            }
            return None;
        }
        if i == m.n || self.k - count > m.n - i {
            return None;
        }
        let undominated = (m.full & !dominated).count_ones() as usize;
        if undominated > (self.k - count) * m.max_cover {
            return None;
        }

        // take vertex i first: yields lexicographically least witnesses
        if self.forced_out >> i & 1 == 0 {
            let nc = chosen | 1 << i;
            let mut alive = true;
            if self.cosecure {
                // a member whose whole open neighborhood is chosen can never
                // be replaced, in this candidate or any superset
                if m.open[i] & !nc == 0 {
                    alive = false;
                } else {
                    let mut members = m.open[i] & chosen;
                    while members != 0 {
                        let w = members.trailing_zeros() as usize;
                        members &= members - 1;
                        if m.open[w] & !nc == 0 {
                            alive = false;
                            break;
                        }
                    }
                }
            }
            if alive {
                let nd = dominated | m.closed[i];
                if self.criticals_dominated(i, nd) {
                    if let Some(res) = self.dfs(i + 1, nc, nd, count + 1) {
                        return Some(res);
                    }
                }
            }
        }
        if self.forced_in >> i & 1 == 0 && self.criticals_dominated(i, dominated) {
            if let Some(res) = self.dfs(i + 1, chosen, dominated, count) {
                return Some(res);
            }
        }
        None
    }

    fn criticals_dominated(&self, i: usize, dominated: u64) -> bool {
        self.m.critical[i].iter().all(|&v| dominated >> v & 1 == 1)
    }

    fn final_cosecure(&self, chosen: u64) -> bool {
        let m = self.m;
        if chosen == m.full {
            return false;
        }
        let mut members = [0usize; HARD_CAP + 1];
        let mut len = 0;
        let mut bits = chosen;
        while bits != 0 {
            members[len] = bits.trailing_zeros() as usize;
            len += 1;
            bits &= bits - 1;
        }
        // prefix/suffix closed-neighborhood unions give coverage without one
        // member in O(1) per member
        let mut prefix = [0u64; HARD_CAP + 2];
        let mut suffix = [0u64; HARD_CAP + 2];
        for j in 0..len {
            prefix[j + 1] = prefix[j] | m.closed[members[j]];
        }
        suffix[len] = 0;
        for j in (0..len).rev() {
            suffix[j] = suffix[j + 1] | m.closed[members[j]];
        }
        for j in 0..len {
            let v = members[j];
            let cov = prefix[j] | suffix[j + 1];
            let mut candidates = m.open[v] & !chosen;
            let mut ok = false;
            while candidates != 0 {
                let u = candidates.trailing_zeros() as usize;
                candidates &= candidates - 1;
                if cov | m.closed[u] == m.full {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }
}

fn mask_to_vec(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut bits = mask;
    while bits != 0 {
        out.push(bits.trailing_zeros() as usize);
        bits &= bits - 1;
    }
    out
}

fn check_guard(n: usize, opts: &OracleOptions) -> Result<(), OracleError> {
    let cap = opts.max_n.min(HARD_CAP);
    if n > cap {
        return Err(OracleError::GuardExceeded { n, max_n: cap });
    }
    Ok(())
}

/// Minimum dominating set with default options.
pub fn min_dominating(g: &Graph) -> Result<OracleResult, OracleError> {
    min_dominating_with(g, &OracleOptions::default())
}

pub fn min_dominating_with(g: &Graph, opts: &OracleOptions) -> Result<OracleResult, OracleError> {
    check_guard(g.n(), opts)?;
    if g.n() == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: VertexSet::empty(),
            certificate: None,
        });
    }
    let masks = Masks::build(g);
    for k in masks.packing_lower_bound()..=g.n() {
        let search = Search {
            m: &masks,
            k,
            cosecure: false,
            forced_in: 0,
            forced_out: 0,
        };
        if let Some(mask) = search.run() {
            return Ok(OracleResult {
                value: k,
                witness: VertexSet::new(mask_to_vec(mask)),
                certificate: None,
            });
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Minimum cosecure dominating set with default options.
pub fn min_cosecure(g: &Graph) -> Result<OracleResult, OracleError> {
    min_cosecure_with(g, &OracleOptions::default())
}

/// Minimum cosecure dominating set.
///
/// Disconnected inputs are solved per component and summed; the witness is the
/// union of the per-component witnesses. Inputs with an isolated vertex are
/// rejected.
pub fn min_cosecure_with(g: &Graph, opts: &OracleOptions) -> Result<OracleResult, OracleError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(OracleError::IsolatedVertex { vertex: v });
    }
    check_guard(g.n(), opts)?;
    if g.n() == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: VertexSet::empty(),
            certificate: None,
        });
    }
    let mut witness: Vec<usize> = Vec::new();
    let mut value = 0;
    for comp in g.components() {
        let (sub, map) = g.induced(comp.as_slice());
        let local = cosecure_component(&sub, opts)?;
        value += local.len();
        witness.extend(local.into_iter().map(|v| map[v]));
    }
    let witness = VertexSet::new(witness);
    let certificate = certify_cosecure(g, &witness)
        .expect("oracle witness must certify; this indicates a search bug");
    Ok(OracleResult {
        value,
        witness,
        certificate: Some(certificate),
    })
}

fn cosecure_component(g: &Graph, opts: &OracleOptions) -> Result<Vec<usize>, OracleError> {
    let masks = Masks::build(g);
    let (mut forced_in, mut forced_out) = (0u64, 0u64);
    if opts.forced_pendant_prune {
        for (support, pendants) in pendant_supports(g) {
            if pendants.len() >= 2 {
                forced_out |= 1 << support;
                for p in pendants.iter() {
                    forced_in |= 1 << p;
                }
            }
        }
    }
    let lb = masks
        .packing_lower_bound()
        .max(forced_in.count_ones() as usize)
        .max(1);
    for k in lb..g.n() {
        let search = Search {
            m: &masks,
            k,
            cosecure: true,
            forced_in,
            forced_out,
        };
        if let Some(mask) = search.run() {
            return Ok(mask_to_vec(mask));
        }
    }
    Err(OracleError::Unsolvable)
}

/// A set-cover instance: elements `1..=p` and `q` subsets of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetCoverInstance {
    pub p: usize,
    pub subsets: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SetCoverError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("element {element} out of range 1..={p}")]
    ElementOutOfRange { element: usize, p: usize },
    #[error("element {element} is covered by no subset")]
    UncoveredElement { element: usize },
    #[error("missing `p q` header")]
    MissingHeader,
    #[error("expected {expected} subset lines, found {found}")]
    SubsetCountMismatch { expected: usize, found: usize },
}

impl SetCoverInstance {
    pub fn new(p: usize, subsets: Vec<Vec<usize>>) -> Result<SetCoverInstance, SetCoverError> {
        let inst = SetCoverInstance {
            p,
            subsets: subsets
                .into_iter()
                .map(|mut s| {
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .collect(),
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn q(&self) -> usize {
        self.subsets.len()
    }

    pub fn validate(&self) -> Result<(), SetCoverError> {
        let mut covered = vec![false; self.p + 1];
        for s in &self.subsets {
            for &e in s {
                if e == 0 || e > self.p {
                    return Err(SetCoverError::ElementOutOfRange {
                        element: e,
                        p: self.p,
                    });
                }
                covered[e] = true;
            }
        }
        for e in 1..=self.p {
            if !covered[e] {
                return Err(SetCoverError::UncoveredElement { element: e });
            }
        }
        Ok(())
    }

    /// Text format: header `p q`, then one line per subset listing its
    /// elements. `#` comments and blank lines are skipped.
    pub fn parse(text: &str) -> Result<SetCoverInstance, SetCoverError> {
        let mut header: Option<(usize, usize)> = None;
        let mut subsets = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let nums: Result<Vec<usize>, _> = trimmed
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>().map_err(|_| SetCoverError::Syntax {
                        line,
                        msg: format!("invalid integer {t:?}"),
                    })
                })
                .collect();
            let nums = nums?;
            match header {
                None => {
                    if nums.len() != 2 {
                        return Err(SetCoverError::Syntax {
                            line,
                            msg: "expected header `p q`".into(),
                        });
                    }
                    header = Some((nums[0], nums[1]));
                }
                Some(_) => subsets.push(nums),
            }
        }
        let (p, q) = header.ok_or(SetCoverError::MissingHeader)?;
        if subsets.len() != q {
            return Err(SetCoverError::SubsetCountMismatch {
                expected: q,
                found: subsets.len(),
            });
        }
        SetCoverInstance::new(p, subsets)
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.p, self.q());
        for s in &self.subsets {
            let toks: Vec<String> = s.iter().map(|e| e.to_string()).collect();
            out.push_str(&toks.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Minimum set cover by cardinality-increasing enumeration over subset
/// indices; the witness holds 0-based subset indices, least by index order.
pub fn min_set_cover(inst: &SetCoverInstance) -> Result<OracleResult, OracleError> {
    let q = inst.q();
    if inst.p > HARD_CAP || q > HARD_CAP {
        return Err(OracleError::GuardExceeded {
            n: inst.p.max(q),
            max_n: HARD_CAP,
        });
    }
    let full: u64 = if inst.p == 0 { 0 } else { (1u64 << inst.p) - 1 };
    let masks: Vec<u64> = inst
        .subsets
        .iter()
        .map(|s| s.iter().fold(0u64, |acc, &e| acc | 1 << (e - 1)))
        .collect();
    // suffix unions for a can-still-cover prune
    let mut suffix = vec![0u64; q + 1];
    for j in (0..q).rev() {
        suffix[j] = suffix[j + 1] | masks[j];
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        j: usize,
        covered: u64,
        count: usize,
        k: usize,
        masks: &[u64],
        suffix: &[u64],
        full: u64,
        picked: &mut Vec<usize>,
    ) -> bool {
        if covered == full && count == k {
            return true;
        }
        if count == k || j == masks.len() {
            return false;
        }
        if covered | suffix[j] != full {
            return false;
        }
        picked.push(j);
        if rec(
            j + 1,
            covered | masks[j],
            count + 1,
            k,
            masks,
            suffix,
            full,
            picked,
        ) {
            return true;
        }
        picked.pop();
        rec(j + 1, covered, count, k, masks, suffix, full, picked)
    }

    for k in 0..=q {
        let mut picked = Vec::new();
        if rec(0, 0, 0, k, &masks, &suffix, full, &mut picked) {
            return Ok(OracleResult {
                value: k,
                witness: VertexSet::new(picked),
                certificate: None,
            });
        }
    }
    unreachable!("validated instances are coverable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    #[test]
    fn dominating_k2() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = min_dominating(&g).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, VertexSet::new(vec![0]));
    }

    #[test]
    fn dominating_p4_least_witness() {
        let g = gen::path(4);
        let r = min_dominating(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, VertexSet::new(vec![0, 2]));
    }

    #[test]
    fn dominating_complete_bipartite() {
        let g = gen::complete_bipartite(2, 3);
        assert_eq!(min_dominating(&g).unwrap().value, 2);
        let g = gen::complete_bipartite(3, 5);
        assert_eq!(min_dominating(&g).unwrap().value, 2);
    }

    #[test]
    fn cosecure_p4() {
        let g = gen::path(4);
        let r = min_cosecure(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, VertexSet::new(vec![0, 2]));
        assert!(r.certificate.is_some());
    }

    #[test]
    fn cosecure_c5() {
        let g = gen::cycle(5);
        let r = min_cosecure(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness, VertexSet::new(vec![0, 2]));
        let cert = r.certificate.unwrap();
        assert_eq!(cert.replacement, vec![(0, 4), (2, 3)]);
    }

    #[test]
    fn cosecure_complete_bipartite_2_3() {
        let g = gen::complete_bipartite(2, 3);
        assert_eq!(min_cosecure(&g).unwrap().value, 2);
    }

    #[test]
    fn cosecure_rejects_isolated() {
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(
            min_cosecure(&g).unwrap_err(),
            OracleError::IsolatedVertex { vertex: 0 }
        );
    }

    #[test]
    fn guard_enforced_and_overridable() {
        let g = gen::path(25);
        assert!(matches!(
            min_cosecure(&g),
            Err(OracleError::GuardExceeded { n: 25, max_n: 24 })
        ));
        let r = min_cosecure_with(&g, &OracleOptions::with_max_n(32)).unwrap();
        assert!(r.value >= 9); // gamma(P25) = 9 and cosecure needs at least that
    }

    #[test]
    fn disconnected_sums_components() {
        // two disjoint P4s
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)]).unwrap();
        let r = min_cosecure(&g).unwrap();
        assert_eq!(r.value, 4);
        assert_eq!(r.witness, VertexSet::new(vec![0, 2, 4, 6]));
        assert!(r.certificate.is_some());
    }

    #[test]
    fn forced_pendant_prune_matches_unpruned() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let plain = min_cosecure(&g).unwrap();
        let pruned = min_cosecure_with(
            &g,
            &OracleOptions {
                forced_pendant_prune: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(plain.value, pruned.value);
        assert_eq!(plain.witness, pruned.witness);
    }

    #[test]
    fn set_cover_examples() {
        let inst = SetCoverInstance::new(2, vec![vec![1], vec![2], vec![1, 2]]).unwrap();
        let r = min_set_cover(&inst).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(r.witness, VertexSet::new(vec![2]));

        let inst = SetCoverInstance::new(3, vec![vec![1, 2], vec![2, 3]]).unwrap();
        assert_eq!(min_set_cover(&inst).unwrap().value, 2);

        let inst = SetCoverInstance::new(1, vec![vec![1]]).unwrap();
        assert_eq!(min_set_cover(&inst).unwrap().value, 1);
    }

    #[test]
    fn set_cover_validation() {
        assert_eq!(
            SetCoverInstance::new(2, vec![vec![1]]).unwrap_err(),
            SetCoverError::UncoveredElement { element: 2 }
        );
        assert_eq!(
            SetCoverInstance::new(1, vec![vec![2]]).unwrap_err(),
            SetCoverError::ElementOutOfRange { element: 2, p: 1 }
        );
    }

    #[test]
    fn set_cover_roundtrip() {
        let inst = SetCoverInstance::new(3, vec![vec![1, 2], vec![3], vec![2, 3]]).unwrap();
        assert_eq!(SetCoverInstance::parse(&inst.serialize()).unwrap(), inst);
    }

    #[test]
    fn gamma_le_gamma_cs_small() {
        for (n, edges) in [
            (4usize, vec![(0, 1), (1, 2), (2, 3)]),
            (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
            (4, vec![(0, 1), (0, 2), (0, 3)]),
        ] {
            let g = Graph::from_edges(n, &edges).unwrap();
            let d = min_dominating(&g).unwrap().value;
            let cs = min_cosecure(&g).unwrap().value;
            assert!(d <= cs);
        }
    }
}
