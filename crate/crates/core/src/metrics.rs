//! Set distance, eccentricity and the k-radius.

use crate::bits::Combinations;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Distance values live in u32 with this sentinel for "unreachable".
pub const INFINITE: u32 = u32::MAX;

/// dist(S, v) = min over x in S of the shortest-path length from x to v.
pub fn set_distance(g: &Graph, s: &VertexSet, v: usize) -> Result<u32> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    assert!(v < g.order());
    Ok(g.distances_from_mask(s.mask())[v])
}

/// ecc(S) = max over v not in S of dist(S, v); ecc(V) = 0.
pub fn eccentricity(g: &Graph, s: &VertexSet) -> Result<u32> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(ecc_mask(g, s.mask()))
}

pub(crate) fn ecc_mask(g: &Graph, s: u64) -> u32 {
    let dist = g.distances_from_mask(s);
    let mut ecc = 0u32;
    for (v, &d) in dist.iter().enumerate() {
        if s & (1 << v) == 0 {
            ecc = ecc.max(d);
        }
    }
    ecc
}

/// rad_k(G) = min over |S| = k of ecc(S), by exhaustive subset scan with an
/// early exit once the best possible value for the arity is reached.
/// Guarded at the exhaustive-parameter order cap.
pub fn k_radius(g: &Graph, k: usize) -> Result<u32> {
    k_radius_guarded(g, k, crate::params::EXHAUSTIVE_GUARD)
}

pub fn k_radius_guarded(g: &Graph, k: usize, limit: usize) -> Result<u32> {
    let n = g.order();
    if n > limit {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive k-radius guarded at order {limit}, graph has {n}"
        )));
    }
    if k < 1 || k > n {
        return Err(Error::BadArity { k, min: 1, max: n });
    }
    if k == n {
        return Ok(0);
    }
    let mut best = INFINITE;
    for mask in Combinations::new(n, k) {
        best = best.min(ecc_mask(g, mask));
        if best <= 1 {
            break; // k < n forces ecc >= 1
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn set_distance_cases() {
        let p3 = path(3);
        let s = VertexSet::from_ids(3, &[0]).unwrap();
        assert_eq!(set_distance(&p3, &s, 2).unwrap(), 2);
        assert_eq!(set_distance(&p3, &s, 0).unwrap(), 0);
        let two_k1 = Graph::empty(2).unwrap();
        let s = VertexSet::from_ids(2, &[0]).unwrap();
        assert_eq!(set_distance(&two_k1, &s, 1).unwrap(), INFINITE);
        let empty = VertexSet::empty(3);
        assert!(matches!(set_distance(&p3, &empty, 0), Err(Error::EmptySet)));
    }

    #[test]
    fn eccentricity_cases() {
        let p5 = path(5);
        let mid = VertexSet::from_ids(5, &[2]).unwrap();
        assert_eq!(eccentricity(&p5, &mid).unwrap(), 2);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = VertexSet::from_ids(4, &[1]).unwrap();
        assert_eq!(eccentricity(&k4, &s).unwrap(), 1);
        let p7 = path(7);
        let end = VertexSet::from_ids(7, &[0]).unwrap();
        assert_eq!(eccentricity(&p7, &end).unwrap(), 6);
        assert_eq!(eccentricity(&p7, &VertexSet::full(7)).unwrap(), 0);
    }

    #[test]
    fn k_radius_cases() {
        let p7 = path(7);
        assert_eq!(k_radius(&p7, 1).unwrap(), 3);
        assert_eq!(k_radius(&p7, 2).unwrap(), 2); // brute-force derived
        assert_eq!(k_radius(&p7, 7).unwrap(), 0);
        assert!(matches!(k_radius(&p7, 0), Err(Error::BadArity { .. })));
        assert!(matches!(k_radius(&p7, 8), Err(Error::BadArity { .. })));
    }

    #[test]
    fn k_radius_monotone_in_k() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let mut prev = k_radius(&g, 1).unwrap();
        for k in 2..=6 {
            let r = k_radius(&g, k).unwrap();
            assert!(r <= prev);
            prev = r;
        }
    }
}
