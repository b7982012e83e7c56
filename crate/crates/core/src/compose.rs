//! Graph composition operators: Cartesian product, corona with K_1,
//! matched sums and disjoint unions.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cartesian product. Vertex (x, y) gets id x * |V(h)| + y; (x1,y1) and
/// (x2,y2) are adjacent iff x1 = x2 and y1y2 is an edge of h, or y1 = y2
/// and x1x2 is an edge of g.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.order(), h.order());
    let n = gn * hn;
    let mut edges = Vec::new();
    for x in 0..gn {
        for (y1, y2) in h.edges() {
            edges.push((x * hn + y1, x * hn + y2));
        }
    }
    for y in 0..hn {
        for (x1, x2) in g.edges() {
            edges.push((x1 * hn + y, x2 * hn + y));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Corona with K_1: append one pendant leaf to every vertex. Original
/// vertices keep their ids; the leaf of vertex i gets id n + i.
pub fn corona_with_k1(g: &Graph) -> Result<Graph> {
    let n = g.order();
    let mut edges = g.edges();
    for i in 0..n {
        edges.push((i, n + i));
    }
    Graph::from_edges(2 * n, &edges)
}

/// Matched sum: disjoint union of g1 and g2 plus a perfect matching between
/// them. Pairs are (u, v) with u a g1 id and v a g2-local id; g2 ids are
/// offset by |V(g1)| in the result.
pub fn matched_sum_compose(g1: &Graph, g2: &Graph, m: &[(usize, usize)]) -> Result<Graph> {
    let (n1, n2) = (g1.order(), g2.order());
    if n1 != n2 || m.len() != n1 {
        return Err(Error::BadMatching(format!(
            "need |V(g1)| = |V(g2)| = |m|, got {n1}, {n2}, {}",
            m.len()
        )));
    }
    let mut seen1 = vec![false; n1];
    let mut seen2 = vec![false; n2];
    for &(u, v) in m {
        if u >= n1 || v >= n2 {
            return Err(Error::BadMatching(format!("pair ({u},{v}) out of range")));
        }
        if seen1[u] || seen2[v] {
            return Err(Error::BadMatching(format!(
                "pair ({u},{v}) repeats a vertex"
            )));
        }
        seen1[u] = true;
        seen2[v] = true;
    }
    let mut edges = g1.edges();
    for (u, v) in g2.edges() {
        edges.push((u + n1, v + n1));
    }
    for &(u, v) in m {
        edges.push((u, v + n1));
    }
    Graph::from_edges(n1 + n2, &edges)
}

/// Disjoint union; h ids are offset by |V(g)|.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n1 = g.order();
    let mut edges = g.edges();
    for (u, v) in h.edges() {
        edges.push((u + n1, v + n1));
    }
    Graph::from_edges(n1 + h.order(), &edges)
}
