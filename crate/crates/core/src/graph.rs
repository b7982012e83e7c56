//! Immutable simple undirected graphs with dense ids and bitset adjacency.

use crate::bits::ones;
use crate::error::{Error, Result};

/// Largest supported order. Matches the graph6 short form and lets every
/// vertex subset live in one machine word.
pub const MAX_ORDER: usize = 62;

/// An immutable simple undirected graph. Vertex ids are dense in [0, n).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Graph with n vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Build directly from neighbor bitmasks. Must already be symmetric and
    /// loop-free; checked in debug builds.
    pub(crate) fn from_adj(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_ORDER);
        #[cfg(debug_assertions)]
        for u in 0..n {
            debug_assert_eq!(adj[u] >> n, 0, "neighbor bits out of range");
            debug_assert_eq!(adj[u] & (1 << u), 0, "loop at {u}");
            for v in ones(adj[u]) {
                debug_assert_ne!(adj[v] & (1 << u), 0, "asymmetric edge ({u},{v})");
            }
        }
        Graph { n, adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Bitmask over all vertices.
    #[inline]
    pub fn full_mask(&self) -> u64 {
        if self.n == 64 {
            !0
        } else {
            (1u64 << self.n) - 1
        }
    }

    #[inline]
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v] | (1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    /// Edges as (u, v) with u < v, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for v in ones(self.adj[u]) {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// BFS distances from a source mask; u32::MAX marks unreachable vertices.
    pub fn distances_from_mask(&self, src: u64) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        let mut seen = src;
        let mut cur = src;
        let mut d = 0u32;
        while cur != 0 {
            let mut next = 0u64;
            for v in ones(cur) {
                dist[v] = d;
                next |= self.adj[v];
            }
            cur = next & !seen;
            seen |= cur;
            d += 1;
        }
        dist
    }

    /// Connected components as vertex masks, ordered by least contained id.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.full_mask())
    }

    /// Connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut remaining = within;
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp = 1u64 << start;
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0u64;
                for v in ones(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & within & !comp;
                comp |= frontier;
            }
            out.push(comp);
            remaining &= !comp;
        }
        out
    }

    /// Connected components as vertex sets, ordered by least contained id.
    pub fn component_sets(&self) -> Vec<VertexSet> {
        self.components()
            .into_iter()
            .map(|m| VertexSet::from_mask(self.n, m))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Graph with vertex v removed; ids above v shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.n);
        let keep = self.full_mask() & !(1 << v);
        self.induced_subgraph(keep)
    }

    /// Induced subgraph on the vertices of `mask`, relabeled to [0, k) in
    /// ascending original-id order.
    pub fn induced_subgraph(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = ones(mask).collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![0u64; verts.len()];
        for (i, &v) in verts.iter().enumerate() {
            for w in ones(self.adj[v] & mask) {
                adj[i] |= 1 << pos[w];
            }
        }
        Graph::from_adj(adj)
    }

    /// Upper-triangle adjacency bits in graph6 column order, one bool per
    /// pair (i, j) with i < j, columns ascending.
    pub(crate) fn triangle_bits(&self) -> Vec<bool> {
        let mut bits = Vec::with_capacity(self.n * (self.n - 1) / 2);
        for j in 1..self.n {
            for i in 0..j {
                bits.push(self.has_edge(i, j));
            }
        }
        bits
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A subset of the vertices of a graph of a fixed order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    order: u8,
}

impl VertexSet {
    pub fn empty(order: usize) -> VertexSet {
        assert!(order <= MAX_ORDER);
        VertexSet {
            bits: 0,
            order: order as u8,
        }
    }

    pub fn full(order: usize) -> VertexSet {
        assert!(order <= MAX_ORDER);
        let bits = if order == 0 { 0 } else { (1u64 << order) - 1 };
        VertexSet {
            bits,
            order: order as u8,
        }
    }

    pub fn from_mask(order: usize, mask: u64) -> VertexSet {
        let full = VertexSet::full(order);
        assert_eq!(mask & !full.bits, 0, "mask has bits outside [0, order)");
        VertexSet {
            bits: mask,
            order: order as u8,
        }
    }

    pub fn from_ids(order: usize, ids: &[usize]) -> Result<VertexSet> {
        let mut s = VertexSet::empty(order);
        for &v in ids {
            if v >= order {
                return Err(Error::InvalidGraph(format!(
                    "vertex {v} out of range for order {order}"
                )));
            }
            s.bits |= 1 << v;
        }
        Ok(s)
    }

    #[inline]
    pub fn mask(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.order as usize && self.bits & (1 << v) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.order as usize);
        self.bits |= 1 << v;
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.order, other.order);
        VertexSet {
            bits: self.bits | other.bits,
            order: self.order,
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.order, other.order);
        VertexSet {
            bits: self.bits & other.bits,
            order: self.order,
        }
    }

    pub fn complement(&self) -> VertexSet {
        let full = VertexSet::full(self.order as usize);
        VertexSet {
            bits: full.bits & !self.bits,
            order: self.order,
        }
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        ones(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{{:?}}}", self.to_vec())
    }
}
