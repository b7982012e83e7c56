//! Domination and independence numbers by exhaustive search.

use crate::bits::{ones, Combinations};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Orders above this are refused by the exhaustive parameter searches.
/// The limit can be raised through [`crate::budget::Budget`].
pub const EXHAUSTIVE_GUARD: usize = 24;

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    closed_neighborhood_mask(g, s.mask()) == g.full_mask()
}

pub(crate) fn closed_neighborhood_mask(g: &Graph, s: u64) -> u64 {
    let mut m = s;
    for v in ones(s) {
        m |= g.neighbors_mask(v);
    }
    m
}

/// N\[S\]: S together with all neighbors of members of S.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> VertexSet {
    VertexSet::from_mask(g.order(), closed_neighborhood_mask(g, s.mask()))
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if g.order() > limit {
        return Err(Error::BudgetExceeded(format!(
            "exhaustive parameter search guarded at order {limit}, graph has {}",
            g.order()
        )));
    }
    Ok(())
}

/// Domination number, scanning subset sizes upward. Isolated vertices must
/// self-dominate, so the search starts from the isolated-vertex count.
pub fn domination_number(g: &Graph) -> Result<usize> {
    domination_number_guarded(g, EXHAUSTIVE_GUARD)
}

pub fn domination_number_guarded(g: &Graph, limit: usize) -> Result<usize> {
    guard(g, limit)?;
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n {
        for mask in Combinations::new(n, k) {
            if closed_neighborhood_mask(g, mask) == g.full_mask() {
                return Ok(k);
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Independence number by branch and bound over the candidate mask.
pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_guarded(g, EXHAUSTIVE_GUARD)
}

pub fn independence_number_guarded(g: &Graph, limit: usize) -> Result<usize> {
    guard(g, limit)?;
    fn rec(g: &Graph, candidates: u64, size: usize, best: &mut usize) {
        if size + candidates.count_ones() as usize <= *best {
            return;
        }
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = candidates.trailing_zeros() as usize;
        // take v
        rec(g, candidates & !g.closed_neighbors_mask(v), size + 1, best);
        // skip v
        rec(g, candidates & !(1 << v), size, best);
    }
    let mut best = 0;
    rec(g, g.full_mask(), 0, &mut best);
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn closed_neighborhood_cases() {
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let c = VertexSet::from_ids(5, &[0]).unwrap();
        assert_eq!(closed_neighborhood(&star, &c).len(), 5);
        let p5 = path(5);
        let s = VertexSet::from_ids(5, &[2]).unwrap();
        assert_eq!(closed_neighborhood(&p5, &s).to_vec(), vec![1, 2, 3]);
        assert!(closed_neighborhood(&p5, &VertexSet::empty(5)).is_empty());
    }

    #[test]
    fn domination_cases() {
        assert_eq!(domination_number(&path(7)).unwrap(), 3);
        assert_eq!(domination_number(&complete(6)).unwrap(), 1);
        // P_2 x P_6 grid: gamma = floor((6+2)/2) = 4
        let mut edges = Vec::new();
        for r in 0..2 {
            for c in 0..6 {
                let id = r * 6 + c;
                if c + 1 < 6 {
                    edges.push((id, id + 1));
                }
                if r == 0 {
                    edges.push((id, id + 6));
                }
            }
        }
        let grid = Graph::from_edges(12, &edges).unwrap();
        assert_eq!(domination_number(&grid).unwrap(), 4);
        // isolated vertices self-dominate
        let g = Graph::from_edges(3, &[(1, 2)]).unwrap();
        assert_eq!(domination_number(&g).unwrap(), 2);
    }

    #[test]
    fn independence_cases() {
        assert_eq!(independence_number(&complete(5)).unwrap(), 1);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(independence_number(&c5).unwrap(), 2);
        assert_eq!(independence_number(&path(4)).unwrap(), 2);
        assert_eq!(independence_number(&Graph::empty(6).unwrap()).unwrap(), 6);
    }

    #[test]
    fn corona_domination_is_base_order_on_catalog() {
        // every leaf must be covered by itself or its support, and the
        // supports alone dominate
        for n in 1..=6 {
            for h in crate::enumerate::enumerate_connected(n).unwrap() {
                let c = crate::compose::corona_with_k1(&h).unwrap();
                assert_eq!(domination_number(&c).unwrap(), n);
            }
        }
    }

    #[test]
    fn guard_refuses_large_orders() {
        let star: Vec<(usize, usize)> = (1..30).map(|v| (0, v)).collect();
        let g = Graph::from_edges(30, &star).unwrap();
        assert!(matches!(
            domination_number(&g),
            Err(Error::BudgetExceeded(_))
        ));
        assert_eq!(domination_number_guarded(&g, 30).unwrap(), 1);
        assert!(matches!(
            crate::metrics::k_radius(&g, 1),
            Err(Error::BudgetExceeded(_))
        ));
        assert_eq!(crate::metrics::k_radius_guarded(&g, 1, 30).unwrap(), 1);
    }
}
