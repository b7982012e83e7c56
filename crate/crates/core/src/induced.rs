//! Induced-subgraph search for small query patterns.

use crate::bits::ones;
use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_PATTERN: usize = 8;

/// A small graph used as an induced-subgraph query target.
#[derive(Clone, Debug)]
pub struct Pattern {
    graph: Graph,
}

impl Pattern {
    pub fn new(graph: Graph) -> Result<Pattern> {
        if graph.order() > MAX_PATTERN {
            return Err(Error::BadParams(format!(
                "pattern order {} exceeds {MAX_PATTERN}",
                graph.order()
            )));
        }
        Ok(Pattern { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn path4() -> Pattern {
        Pattern::new(Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap()
    }

    pub fn cycle4() -> Pattern {
        Pattern::new(Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()).unwrap()
    }

    pub fn cycle5() -> Pattern {
        Pattern::new(Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap())
            .unwrap()
    }

    /// Two triangles sharing vertex 0.
    pub fn bowtie() -> Pattern {
        Pattern::new(
            Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap(),
        )
        .unwrap()
    }

    /// C_4 on 0..3 plus a roof vertex adjacent to two consecutive cycle
    /// vertices.
    pub fn house() -> Pattern {
        Pattern::new(
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (0, 3), (4, 2), (4, 3)]).unwrap(),
        )
        .unwrap()
    }
}

/// Search for an injective map w such that the image of the pattern induces
/// exactly the pattern (edges and non-edges both respected). Candidates are
/// tried in ascending id order position by position, so the first witness
/// found is the lexicographically least tuple.
pub fn contains_induced(g: &Graph, p: &Pattern) -> Option<Vec<usize>> {
    let pg = p.graph();
    let pn = pg.order();
    if pn > g.order() {
        return None;
    }
    if pn == 0 {
        return Some(Vec::new());
    }
    let mut assign = vec![usize::MAX; pn];
    let mut used = 0u64;
    fn rec(g: &Graph, pg: &Graph, assign: &mut Vec<usize>, used: &mut u64, depth: usize) -> bool {
        if depth == pg.order() {
            return true;
        }
        'cand: for v in 0..g.order() {
            if *used & (1 << v) != 0 {
                continue;
            }
            if g.degree(v) < pg.degree(depth) {
                continue;
            }
            for (i, &a) in assign.iter().enumerate().take(depth) {
                if g.has_edge(a, v) != pg.has_edge(i, depth) {
                    continue 'cand;
                }
            }
            assign[depth] = v;
            *used |= 1 << v;
            if rec(g, pg, assign, used, depth + 1) {
                return true;
            }
            *used &= !(1 << v);
        }
        false
    }
    if rec(g, pg, &mut assign, &mut used, 0) {
        Some(assign)
    } else {
        None
    }
}

/// Naive oracle used by the test suite: check every |p|-subset of g against
/// every vertex ordering of the pattern. Exponential and only for tiny
/// inputs, but entirely independent of the pruned search above.
#[doc(hidden)]
pub fn contains_induced_naive(g: &Graph, p: &Pattern) -> bool {
    let pg = p.graph();
    let pn = pg.order();
    if pn > g.order() {
        return false;
    }
    for mask in crate::bits::Combinations::new(g.order(), pn) {
        let verts: Vec<usize> = ones(mask).collect();
        let mut perm: Vec<usize> = (0..pn).collect();
        if permute_match(g, pg, &verts, &mut perm, 0) {
            return true;
        }
    }
    false
}

fn permute_match(g: &Graph, pg: &Graph, verts: &[usize], perm: &mut Vec<usize>, k: usize) -> bool {
    let pn = pg.order();
    if k == pn {
        for i in 0..pn {
            for j in i + 1..pn {
                if pg.has_edge(i, j) != g.has_edge(verts[perm[i]], verts[perm[j]]) {
                    return false;
                }
            }
        }
        return true;
    }
    for i in k..pn {
        perm.swap(k, i);
        if permute_match(g, pg, verts, perm, k + 1) {
            perm.swap(k, i);
            return true;
        }
        perm.swap(k, i);
    }
    false
}
