//! Verifiers for dominating and cosecure dominating sets.
//!
//! A set `S` dominates `g` when every vertex is in `S` or adjacent to a member
//! of `S`. A cosecure dominating set is a dominating set in which every member
//! `v` has an outside neighbor `u` such that swapping `v` for `u` still
//! dominates; `certify_cosecure` either produces the full replacement map or a
//! machine-checkable failure witness.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Least vertex not covered by `N[S]`, if any.
pub fn undominated_vertex(g: &Graph, s: &VertexSet) -> Option<usize> {
    let mut covered = vec![false; g.n()];
    for v in s.iter() {
        covered[v] = true;
        for &w in g.neighbors(v) {
            covered[w] = true;
        }
    }
    covered.iter().position(|&c| !c)
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    undominated_vertex(g, s).is_none()
}

/// Proof that a set is cosecure dominating: each member paired with a
/// replacement vertex outside the set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosecureCertificate {
    pub set: VertexSet,
    /// `(v, u)` pairs, ascending in `v`: `u` replaces `v`.
    pub replacement: Vec<(usize, usize)>,
    /// Always `true`; kept so serialized certificates are self-describing.
    pub valid: bool,
}

impl CosecureCertificate {
    pub fn replacement_for(&self, v: usize) -> Option<usize> {
        self.replacement
            .binary_search_by_key(&v, |&(a, _)| a)
            .ok()
            .map(|i| self.replacement[i].1)
    }
}

/// Why a set fails to be cosecure dominating.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CosecureFailure {
    /// The graph has an isolated vertex, so no cosecure dominating set exists.
    IsolatedVertex {
        vertex: usize,
    },
    /// The whole vertex set can never be cosecure dominating.
    FullVertexSet,
    NotDominating {
        vertex: usize,
    },
    /// A member with no valid replacement.
    NoReplacement {
        vertex: usize,
    },
}

/// Checks the cosecure domination property and produces a certificate or the
/// first failure.
///
/// Checks run in a fixed order: isolated vertex, `S = V`, domination, then for
/// each `v` in `S` (ascending) the least valid replacement among `v`'s
/// neighbors outside `S`. The result therefore depends only on `(g, S)`.
pub fn certify_cosecure(g: &Graph, s: &VertexSet) -> Result<CosecureCertificate, CosecureFailure> {
    if let Some(v) = g.isolated_vertex() {
        return Err(CosecureFailure::IsolatedVertex { vertex: v });
    }
    if s.len() == g.n() {
        return Err(CosecureFailure::FullVertexSet);
    }
    if let Some(v) = undominated_vertex(g, s) {
        return Err(CosecureFailure::NotDominating { vertex: v });
    }

    let n = g.n();
    let mut in_s = vec![false; n];
    for v in s.iter() {
        in_s[v] = true;
    }
    // cover[w] = |N[w] ∩ S|; after removing v and adding u, w stays dominated
    // unless cover[w] == 1, w ∈ N[v] and w ∉ N[u].
    let mut cover = vec![0usize; n];
    for v in s.iter() {
        cover[v] += 1;
        for &w in g.neighbors(v) {
            cover[w] += 1;
        }
    }

    let mut replacement = Vec::with_capacity(s.len());
    let mut in_closed_u = vec![false; n];
    for v in s.iter() {
        let mut crit: Vec<usize> = Vec::new();
        if cover[v] == 1 {
            crit.push(v);
        }
        for &w in g.neighbors(v) {
            if cover[w] == 1 {
                crit.push(w);
            }
        }
        let mut found = None;
        for &u in g.neighbors(v) {
            if in_s[u] {
                continue;
            }
            in_closed_u[u] = true;
            for &w in g.neighbors(u) {
                in_closed_u[w] = true;
            }
            let ok = crit.iter().all(|&w| in_closed_u[w]);
            in_closed_u[u] = false;
            for &w in g.neighbors(u) {
                in_closed_u[w] = false;
            }
            if ok {
                found = Some(u);
                break;
            }
        }
        match found {
            Some(u) => replacement.push((v, u)),
            None => return Err(CosecureFailure::NoReplacement { vertex: v }),
        }
    }
    Ok(CosecureCertificate {
        set: s.clone(),
        replacement,
        valid: true,
    })
}

/// Maps every support vertex `u` to its set of pendant (degree-1) neighbors.
/// Vertices without pendant neighbors do not appear.
pub fn pendant_supports(g: &Graph) -> BTreeMap<usize, VertexSet> {
    let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        if g.degree(v) == 1 {
            map.entry(g.neighbors(v)[0]).or_default().push(v);
        }
    }
    map.into_iter()
        .map(|(u, l)| (u, VertexSet::new(l)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn dominating_basic() {
        let g = p4();
        assert!(is_dominating(&g, &VertexSet::new(vec![1, 2])));
        assert_eq!(undominated_vertex(&g, &VertexSet::new(vec![0])), Some(2));
        assert!(is_dominating(&g, &VertexSet::new(vec![0, 1, 2, 3])));
    }

    #[test]
    fn certify_p4_inner_pair() {
        let g = p4();
        let cert = certify_cosecure(&g, &VertexSet::new(vec![1, 2])).unwrap();
        assert_eq!(cert.replacement, vec![(1, 0), (2, 3)]);
    }

    #[test]
    fn certify_p3_center_fails() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let err = certify_cosecure(&g, &VertexSet::new(vec![1])).unwrap_err();
        assert_eq!(err, CosecureFailure::NoReplacement { vertex: 1 });
    }

    #[test]
    fn certify_full_set_rejected() {
        let g = p4();
        let err = certify_cosecure(&g, &VertexSet::new(vec![0, 1, 2, 3])).unwrap_err();
        assert_eq!(err, CosecureFailure::FullVertexSet);
    }

    #[test]
    fn certify_isolated_rejected() {
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        let err = certify_cosecure(&g, &VertexSet::new(vec![1])).unwrap_err();
        assert_eq!(err, CosecureFailure::IsolatedVertex { vertex: 0 });
    }

    #[test]
    fn certify_not_dominating() {
        let g = p4();
        let err = certify_cosecure(&g, &VertexSet::new(vec![0])).unwrap_err();
        assert_eq!(err, CosecureFailure::NotDominating { vertex: 2 });
    }

    #[test]
    fn pendant_supports_cases() {
        let g = p4();
        let map = pendant_supports(&g);
        assert_eq!(map.len(), 2);
        assert_eq!(map[&1], VertexSet::new(vec![0]));
        assert_eq!(map[&2], VertexSet::new(vec![3]));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let map = pendant_supports(&star);
        assert_eq!(map[&0], VertexSet::new(vec![1, 2, 3]));

        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(pendant_supports(&c4).is_empty());
    }

    // Multi-pendant supports force pendants in and the support out of every
    // accepted set: exhaustive check on the double star.
    #[test]
    fn multi_pendant_forcing_double_star() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let mut accepted = 0;
        for mask in 0u32..(1 << 6) {
            let set: VertexSet = (0..6).filter(|&v| mask >> v & 1 == 1).collect();
            if certify_cosecure(&g, &set).is_ok() {
                accepted += 1;
                for leaf in [2, 3, 4, 5] {
                    assert!(set.contains(leaf));
                }
                assert!(!set.contains(0) && !set.contains(1));
            }
        }
        assert!(accepted > 0);
    }

    #[test]
    fn failure_serialization_keys() {
        let fail = CosecureFailure::NotDominating { vertex: 2 };
        let json = serde_json::to_value(&fail).unwrap();
        assert_eq!(json["kind"], "not-dominating");
        assert_eq!(json["vertex"], 2);
        let fail = CosecureFailure::FullVertexSet;
        assert_eq!(
            serde_json::to_value(&fail).unwrap()["kind"],
            "full-vertex-set"
        );
    }
}
