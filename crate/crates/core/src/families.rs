//! Deterministic constructors for the named graph families and the fixed
//! gallery graphs used by the verification harness.

use num_rational::Rational64;

use crate::compose::{cartesian_product, corona_with_k1};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Base family for a corona construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoronaBase {
    Path,
    Cycle,
}

/// A named family instance. Every constructor is deterministic: repeated
/// generation yields vertex-id-identical graphs.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    /// P_n, n >= 1.
    Path(usize),
    /// C_n, n >= 3.
    Cycle(usize),
    /// K_n, n >= 1.
    Complete(usize),
    /// K_{p,q} with parts [0,p) and [p,p+q).
    CompleteBipartite(usize, usize),
    /// Q_d = K_2 x ... x K_2, d >= 0.
    Hypercube(usize),
    /// Full r-ary tree of height h, BFS ids from the root.
    FullAryTree(usize, usize),
    /// Base family with one pendant leaf added to each vertex.
    Corona(CoronaBase, usize),
    /// j cyclically linked blocks K_d - e; (d-1)-regular.
    GeneralizedNecklace(usize, usize),
    /// K_n with every edge replaced by s internally disjoint paths of
    /// length m.
    Gnsm(usize, usize, usize),
    /// C_k x P_r plus an apex adjacent to the first cycle copy.
    GeneralizedWheel(usize, usize),
    /// Corona of (C_4 with three pendant paths P_{r+1}).
    Mgraph(usize),
    /// r copies of the 7-vertex two-path block, consecutive copies linked
    /// through their degree-3 vertices; None selects that default chain.
    G1Chain(usize, Option<Vec<(usize, usize)>>),
    /// P_n x P_m.
    Grid(usize, usize),
    /// Intersection graph of closed unit intervals at the given left
    /// endpoints. Rational endpoints keep boundary adjacency exact.
    UnitInterval(Vec<Rational64>),
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParams("path needs n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams("cycle needs n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParams("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(Error::BadParams("bipartite parts must be nonempty".into()));
    }
    let mut edges = Vec::new();
    for u in 0..p {
        for v in 0..q {
            edges.push((u, p + v));
        }
    }
    Graph::from_edges(p + q, &edges)
}

pub fn hypercube(d: usize) -> Result<Graph> {
    let mut g = Graph::empty(1)?;
    let k2 = complete(2)?;
    for _ in 0..d {
        g = cartesian_product(&g, &k2)?;
    }
    Ok(g)
}

pub fn full_ary_tree(r: usize, h: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::BadParams("arity must be >= 1".into()));
    }
    let mut edges = Vec::new();
    let mut level: Vec<usize> = vec![0];
    let mut next_id = 1usize;
    for _ in 0..h {
        let mut next_level = Vec::with_capacity(level.len() * r);
        for &p in &level {
            for _ in 0..r {
                edges.push((p, next_id));
                next_level.push(next_id);
                next_id += 1;
            }
        }
        level = next_level;
    }
    Graph::from_edges(next_id, &edges)
}

pub fn generalized_necklace(j: usize, d: usize) -> Result<Graph> {
    if j < 2 || d < 4 {
        return Err(Error::BadParams("necklace needs j >= 2, d >= 4".into()));
    }
    // block i occupies ids [i*d, (i+1)*d); within a block the missing edge
    // is {0, 1} (local), whose endpoints serve as the right/left connectors
    let mut edges = Vec::new();
    for b in 0..j {
        let base = b * d;
        for u in 0..d {
            for v in u + 1..d {
                if (u, v) != (0, 1) {
                    edges.push((base + u, base + v));
                }
            }
        }
        let next = ((b + 1) % j) * d;
        edges.push((base + 1, next));
    }
    Graph::from_edges(j * d, &edges)
}

pub fn gnsm(n: usize, s: usize, m: usize) -> Result<Graph> {
    if n < 2 || s < 1 || m < 1 {
        return Err(Error::BadParams("need n >= 2, s >= 1, m >= 1".into()));
    }
    let mut edges = Vec::new();
    let mut next = n;
    for i in 0..n {
        for j in i + 1..n {
            if m == 1 {
                edges.push((i, j));
                continue;
            }
            for _ in 0..s {
                let mut prev = i;
                for _ in 0..m - 1 {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, j));
            }
        }
    }
    Graph::from_edges(next, &edges)
}

pub fn generalized_wheel(k: usize, r: usize) -> Result<Graph> {
    if k < 4 || r < 1 {
        return Err(Error::BadParams("wheel needs k >= 4, r >= 1".into()));
    }
    let prism = cartesian_product(&cycle(k)?, &path(r)?)?;
    // cycle copy y = 0 holds ids {x * r : x in [0, k)}; apex = k * r
    let apex = k * r;
    let mut edges = prism.edges();
    for x in 0..k {
        edges.push((x * r, apex));
    }
    Graph::from_edges(apex + 1, &edges)
}

pub fn m_graph(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(Error::BadParams("need r >= 1".into()));
    }
    // C_4 on 0..4; pendant paths of r extra vertices hang off vertices
    // 1, 2, 3 (vertex 0 carries no path); then one leaf per vertex
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (0, 3)];
    let mut next = 4;
    for anchor in 1..=3 {
        let mut prev = anchor;
        for _ in 0..r {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    let base = Graph::from_edges(next, &edges)?;
    corona_with_k1(&base)
}

/// The 7-vertex block: a P_4 on ids b..b+3 and a P_3 on ids b+4..b+6
/// joined through the two degree-3 vertices b+1 and b+5.
fn g1_block_edges(b: usize, edges: &mut Vec<(usize, usize)>) {
    edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3)]);
    edges.extend([(b + 4, b + 5), (b + 5, b + 6)]);
    edges.push((b + 1, b + 5));
}

/// Degree-3 ("green") vertices of copy i: the P_4 one then the P_3 one.
pub fn g1_green_vertices(copy: usize) -> (usize, usize) {
    (7 * copy + 1, 7 * copy + 5)
}

pub fn g1_chain(r: usize, green_edges: Option<&[(usize, usize)]>) -> Result<Graph> {
    if r < 1 {
        return Err(Error::BadParams("need r >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 0..r {
        g1_block_edges(7 * i, &mut edges);
    }
    let greens: Vec<usize> = (0..r)
        .flat_map(|i| {
            let (a, b) = g1_green_vertices(i);
            [a, b]
        })
        .collect();
    match green_edges {
        Some(extra) => {
            for &(u, v) in extra {
                if !greens.contains(&u) || !greens.contains(&v) || u == v {
                    return Err(Error::BadParams(format!(
                        "({u},{v}) is not a green-green pair"
                    )));
                }
                edges.push((u, v));
            }
        }
        None => {
            for i in 0..r.saturating_sub(1) {
                let (t0, b0) = g1_green_vertices(i);
                let (t1, b1) = g1_green_vertices(i + 1);
                edges.push((t0, t1));
                edges.push((b0, b1));
            }
        }
    }
    Graph::from_edges(7 * r, &edges)
}

pub fn grid(n: usize, m: usize) -> Result<Graph> {
    cartesian_product(&path(n)?, &path(m)?)
}

pub fn unit_interval(points: &[Rational64]) -> Result<Graph> {
    if points.is_empty() {
        return Err(Error::BadParams("need at least one interval".into()));
    }
    let one = Rational64::from_integer(1);
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = if points[i] >= points[j] {
                points[i] - points[j]
            } else {
                points[j] - points[i]
            };
            if d <= one {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(points.len(), &edges)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Cycle(n) => cycle(*n),
        FamilySpec::Complete(n) => complete(*n),
        FamilySpec::CompleteBipartite(p, q) => complete_bipartite(*p, *q),
        FamilySpec::Hypercube(d) => hypercube(*d),
        FamilySpec::FullAryTree(r, h) => full_ary_tree(*r, *h),
        FamilySpec::Corona(base, n) => {
            let g = match base {
                CoronaBase::Path => path(*n)?,
                CoronaBase::Cycle => cycle(*n)?,
            };
            corona_with_k1(&g)
        }
        FamilySpec::GeneralizedNecklace(j, d) => generalized_necklace(*j, *d),
        FamilySpec::Gnsm(n, s, m) => gnsm(*n, *s, *m),
        FamilySpec::GeneralizedWheel(k, r) => generalized_wheel(*k, *r),
        FamilySpec::Mgraph(r) => m_graph(*r),
        FamilySpec::G1Chain(r, extra) => g1_chain(*r, extra.as_deref()),
        FamilySpec::Grid(n, m) => grid(*n, *m),
        FamilySpec::UnitInterval(points) => unit_interval(points),
    }
}

/// Fixed graphs transcribed from their published drawings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GalleryGraph {
    /// 11-vertex cop-win graph with capture time 7 but a dominating pair.
    H11,
    Bowtie,
    House,
    C5,
    /// 6-vertex interval tree separating cop product throttling from the
    /// domination number.
    IntervalT,
}

pub fn fixed_gallery(name: GalleryGraph) -> Graph {
    match name {
        // drawn labels 1..11 shifted to 0-based ids
        GalleryGraph::H11 => Graph::from_edges(
            11,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 4),
                (1, 5),
                (3, 2),
                (3, 4),
                (3, 6),
                (3, 7),
                (4, 8),
                (6, 2),
                (6, 10),
                (5, 8),
                (5, 4),
                (5, 2),
                (5, 6),
                (5, 9),
                (7, 4),
                (7, 6),
                (7, 8),
                (7, 10),
                (9, 6),
                (9, 8),
                (9, 10),
            ],
        )
        .unwrap(),
        GalleryGraph::Bowtie => crate::induced::Pattern::bowtie().graph().clone(),
        GalleryGraph::House => crate::induced::Pattern::house().graph().clone(),
        GalleryGraph::C5 => cycle(5).unwrap(),
        // center 0 with arms 0-1-2, 0-3-4 and leaf 5
        GalleryGraph::IntervalT => {
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)]).unwrap()
        }
    }
}
