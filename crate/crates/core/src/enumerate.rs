//! Isomorphism-free enumeration of small graphs.
//!
//! Canonical form: the minimum upper-triangle adjacency bit string (graph6
//! column order) over all vertex permutations, found by branch-and-bound
//! over permutation prefixes. Enumeration proceeds level by level: every
//! canonical graph on n-1 vertices is extended by one new vertex with every
//! possible neighbor subset, then re-canonicalized and deduplicated.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the catalog enumerator accepts. Level 8 already holds
/// 12346 isomorphism classes; this is the scale the verification harness
/// needs and a factorial-scan canonical form still handles comfortably.
pub const ENUMERATION_GUARD: usize = 8;

/// Canonical key: upper-triangle bits of the minimal permutation, packed
/// MSB-first into a u64 (valid for order <= 11; we use it up to 8).
pub fn canonical_key(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n * (n - 1) / 2 <= 64);
    if n < 2 {
        return 0;
    }
    // Twin classes: swapping u and v is an automorphism iff their
    // adjacencies agree away from each other. Placing either twin at a
    // position spans the same subtree of keys, so only the class
    // representative is tried.
    let mut twin_rep: Vec<usize> = (0..n).collect();
    for v in 1..n {
        if let Some(u) = (0..v).find(|&u| {
            twin_rep[u] == u
                && g.neighbors_mask(u) & !(1u64 << v) == g.neighbors_mask(v) & !(1u64 << u)
        }) {
            twin_rep[v] = u;
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    let mut used = 0u64;
    descend(g, &twin_rep, &mut perm, &mut used, 0, 0, false, &mut best);
    best
}

/// Extend the permutation prefix one position at a time. `key` holds the
/// bits contributed so far, left-aligned at bit 63. `free` is set once the
/// prefix is strictly below the incumbent, after which no comparisons can
/// prune.
#[allow(clippy::too_many_arguments)]
fn descend(
    g: &Graph,
    twin_rep: &[usize],
    perm: &mut Vec<usize>,
    used: &mut u64,
    key: u64,
    filled: u32,
    free: bool,
    best: &mut u64,
) {
    let n = g.order();
    let depth = perm.len();
    if depth == n {
        if key < *best {
            *best = key;
        }
        return;
    }
    // candidate columns, tried in ascending value so small keys are found
    // early and pruning bites; one candidate per twin class
    let mut cands: Vec<(u64, usize)> = Vec::with_capacity(n - depth);
    let mut tried_class = 0u64;
    for (v, &class) in twin_rep.iter().enumerate() {
        if *used & (1 << v) != 0 {
            continue;
        }
        if *used & (1 << class) == 0 {
            if tried_class & (1 << class) != 0 {
                continue;
            }
            tried_class |= 1 << class;
        }
        let mut col = 0u64;
        for (row, &p) in perm.iter().enumerate() {
            if g.has_edge(p, v) {
                col |= 1 << (depth - 1 - row);
            }
        }
        cands.push((col, v));
    }
    cands.sort_unstable();
    for (col, v) in cands {
        let nfilled = filled + depth as u32;
        let nkey = if depth == 0 {
            key
        } else {
            key | (col << (64 - nfilled))
        };
        let mut nfree = free;
        if !free && nfilled > 0 {
            let shift = 64 - nfilled;
            let prefix = (*best >> shift) << shift;
            if nkey > prefix {
                continue; // every completion is larger than the incumbent
            }
            if nkey < prefix {
                nfree = true;
            }
        }
        perm.push(v);
        *used |= 1 << v;
        descend(g, twin_rep, perm, used, nkey, nfilled, nfree, best);
        *used &= !(1 << v);
        perm.pop();
    }
}

/// Rebuild the canonical representative from its key.
fn graph_from_key(n: usize, key: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0u32;
    for j in 1..n {
        for i in 0..j {
            if key & (1u64 << (63 - t)) != 0 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Sorted canonical keys of all isomorphism classes on n vertices, built
/// level by level and cached for the lifetime of the process.
fn level_keys(n: usize) -> std::sync::Arc<Vec<u64>> {
    use std::sync::{Arc, Mutex, OnceLock};
    type KeyCache = Mutex<Vec<Option<Arc<Vec<u64>>>>>;
    static CACHE: OnceLock<KeyCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![None; ENUMERATION_GUARD + 1]));
    {
        let guard = cache.lock().unwrap();
        if let Some(keys) = &guard[n] {
            return Arc::clone(keys);
        }
    }
    let keys: Arc<Vec<u64>> = if n == 1 {
        Arc::new(vec![0])
    } else {
        let parents = level_keys(n - 1);
        let mut next: HashSet<u64> = HashSet::new();
        for &key in parents.iter() {
            let parent = graph_from_key(n - 1, key);
            let mut adj: Vec<u64> = (0..n - 1).map(|v| parent.neighbors_mask(v)).collect();
            adj.push(0);
            for sub in 0u64..(1 << (n - 1)) {
                for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if sub & (1 << v) != 0 {
                        *row |= 1 << (n - 1);
                    } else {
                        *row &= !(1u64 << (n - 1));
                    }
                }
                adj[n - 1] = sub;
                let cand = Graph::from_adj(adj.clone());
                next.insert(canonical_key(&cand));
            }
        }
        let mut keys: Vec<u64> = next.into_iter().collect();
        keys.sort_unstable();
        Arc::new(keys)
    };
    cache.lock().unwrap()[n] = Some(Arc::clone(&keys));
    keys
}

/// One representative per isomorphism class of ALL simple graphs on n
/// vertices (connected or not), in ascending canonical-key order.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if !(1..=ENUMERATION_GUARD).contains(&n) {
        return Err(Error::UnsupportedOrder {
            order: n,
            max: ENUMERATION_GUARD,
        });
    }
    let keys = level_keys(n);
    Ok(keys.iter().map(|&k| graph_from_key(n, k)).collect())
}

/// One representative per isomorphism class of connected simple graphs on
/// n vertices, in ascending canonical-key order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?
        .into_iter()
        .filter(|g| g.is_connected())
        .collect())
}

/// Connected graphs of every order in 1..=n, ascending by order.
pub fn catalog_connected_upto(n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for m in 1..=n {
        out.extend(enumerate_connected(m)?);
    }
    Ok(out)
}

/// All trees (connected, |E| = n-1) on n vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_connected(n)?
        .into_iter()
        .filter(|g| g.size() == n - 1)
        .collect())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && canonical_key(a) == canonical_key(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::Combinations;

    /// Naive canonical form: scan all n! permutations explicitly.
    fn canon_naive(g: &Graph) -> u64 {
        let n = g.order();
        let mut best = u64::MAX;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let mut key = 0u64;
            let mut t = 0;
            for j in 1..n {
                for i in 0..j {
                    if g.has_edge(p[i], p[j]) {
                        key |= 1u64 << (63 - t);
                    }
                    t += 1;
                }
            }
            best = best.min(key);
        });
        best
    }

    fn permute(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn canonical_matches_naive() {
        // every labeled graph on 4 and 5 vertices
        for n in [4usize, 5] {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
                .collect();
            for bits in 0u64..(1 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(canonical_key(&g), canon_naive(&g));
            }
        }
    }

    /// Brute-force class count oracle: canonicalize every labeled connected
    /// graph and count distinct keys.
    fn count_connected_naive(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let mut keys = std::collections::HashSet::new();
        for bits in 0u64..(1 << pairs.len()) {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() {
                keys.insert(canonical_key(&g));
            }
        }
        keys.len()
    }

    #[test]
    fn connected_counts() {
        let expect = [1usize, 1, 2, 6, 21, 112];
        for (i, &e) in expect.iter().enumerate() {
            let n = i + 1;
            let got = enumerate_connected(n).unwrap();
            assert_eq!(got.len(), e, "n = {n}");
            for g in &got {
                assert_eq!(g.order(), n);
                assert!(g.is_connected());
            }
        }
        // independent oracle for the first five counts
        for n in 1..=5 {
            assert_eq!(
                enumerate_connected(n).unwrap().len(),
                count_connected_naive(n)
            );
        }
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(9).is_err());
    }

    #[test]
    fn larger_counts_frozen() {
        assert_eq!(enumerate_connected(7).unwrap().len(), 853);
        assert_eq!(enumerate_all(7).unwrap().len(), 1044);
        assert_eq!(enumerate_all(8).unwrap().len(), 12346);
        assert_eq!(enumerate_connected(8).unwrap().len(), 11117);
    }

    #[test]
    fn representatives_pairwise_nonisomorphic() {
        let graphs = enumerate_connected(5).unwrap();
        let keys: Vec<u64> = graphs.iter().map(canonical_key).collect();
        for i in 0..keys.len() {
            for j in i + 1..keys.len() {
                assert_ne!(keys[i], keys[j]);
            }
        }
    }

    #[test]
    fn graph6_round_trip_over_catalog() {
        for n in 1..=6 {
            for g in enumerate_connected(n).unwrap() {
                let enc = crate::graph6::encode_graph6(&g).unwrap();
                let back = crate::graph6::parse_graph6(&enc).unwrap();
                assert_eq!(g, back);
            }
        }
    }

    #[test]
    fn induced_search_agrees_with_naive_on_catalog() {
        use crate::induced::{contains_induced, contains_induced_naive, Pattern};
        let patterns = [
            Pattern::path4(),
            Pattern::cycle4(),
            Pattern::cycle5(),
            Pattern::bowtie(),
            Pattern::house(),
        ];
        for n in 1..=6 {
            for g in enumerate_connected(n).unwrap() {
                for p in &patterns {
                    assert_eq!(
                        contains_induced(&g, p).is_some(),
                        contains_induced_naive(&g, p)
                    );
                }
            }
        }
    }

    #[test]
    fn combos_sanity() {
        assert_eq!(Combinations::new(8, 4).count(), 70);
    }
}
