//! Round-based propagation engines for standard zero forcing, PSD zero
//! forcing and power domination, with full traces, minimum forcing-set
//! solvers and reversal construction.

use serde::Serialize;

use crate::bits::{ones, Combinations};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::params::closed_neighborhood_mask;

/// Color change rule selecting the process.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Rule {
    /// A blue vertex with a unique white neighbor forces it.
    #[serde(rename = "zf")]
    StandardZf,
    /// Forcing applies within each component of the white subgraph.
    #[serde(rename = "psd")]
    PsdZf,
    /// One closed-neighborhood domination step, then standard forcing.
    #[serde(rename = "pd")]
    PowerDom,
}

/// One recorded force. For the power domination round 1, the forcer is the
/// least-id dominating neighbor inside the seed set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForceRecord {
    #[serde(rename = "from")]
    pub forcer: usize,
    #[serde(rename = "to")]
    pub forced: usize,
    pub round: u32,
}

/// Full round-by-round record of a propagation run. `rounds[0]` is the
/// initial set; `rounds[i]` for i >= 1 holds the vertices first colored in
/// round i.
#[derive(Clone, Debug)]
pub struct PropagationTrace {
    pub rule: Rule,
    pub initial: VertexSet,
    pub rounds: Vec<VertexSet>,
    pub forces: Vec<ForceRecord>,
    pub complete: bool,
}

impl PropagationTrace {
    /// Number of propagation rounds performed (the index of the last
    /// nonempty round).
    pub fn rounds_used(&self) -> u32 {
        (self.rounds.len() - 1) as u32
    }

    /// rd(v): the round in which v was colored, if it ever was.
    pub fn round_of(&self, v: usize) -> Option<u32> {
        self.rounds
            .iter()
            .position(|r| r.contains(v))
            .map(|i| i as u32)
    }

    /// Final coloring: the union of all rounds.
    pub fn final_coloring(&self) -> VertexSet {
        let mut m = VertexSet::empty(self.initial.order());
        for r in &self.rounds {
            m = m.union(r);
        }
        m
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "rule": self.rule,
            "initial": self.initial.to_vec(),
            "rounds": self.rounds.iter().map(|r| r.to_vec()).collect::<Vec<_>>(),
            "forces": self.forces,
            "complete": self.complete,
        })
    }
}

/// All vertices forceable in one round given the blue set, every
/// independent force applied simultaneously. For `PowerDom` this is the
/// zero-forcing step only (rounds after the domination step).
pub fn step(g: &Graph, rule: Rule, blue: &VertexSet) -> VertexSet {
    VertexSet::from_mask(g.order(), step_mask(g, rule, blue.mask()))
}

pub(crate) fn step_mask(g: &Graph, rule: Rule, blue: u64) -> u64 {
    match rule {
        Rule::StandardZf | Rule::PowerDom => standard_step(g, blue),
        Rule::PsdZf => psd_step(g, blue),
    }
}

fn standard_step(g: &Graph, blue: u64) -> u64 {
    let mut forced = 0u64;
    for v in ones(blue) {
        let white = g.neighbors_mask(v) & !blue;
        if white.count_ones() == 1 {
            forced |= white;
        }
    }
    forced
}

fn psd_step(g: &Graph, blue: u64) -> u64 {
    let white = g.full_mask() & !blue;
    let mut forced = 0u64;
    for comp in g.components_within(white) {
        for v in ones(blue) {
            let w = g.neighbors_mask(v) & comp;
            if w.count_ones() == 1 {
                forced |= w;
            }
        }
    }
    forced
}

/// Least-id forcer for each vertex in `forced`, given the blue set before
/// the round.
fn attribute_forces(
    g: &Graph,
    rule: Rule,
    blue: u64,
    forced: u64,
    round: u32,
    out: &mut Vec<ForceRecord>,
) {
    match rule {
        Rule::StandardZf | Rule::PowerDom => {
            for w in ones(forced) {
                let forcer = ones(g.neighbors_mask(w) & blue)
                    .find(|&v| (g.neighbors_mask(v) & !blue).count_ones() == 1)
                    .expect("forced vertex has a forcer");
                out.push(ForceRecord {
                    forcer,
                    forced: w,
                    round,
                });
            }
        }
        Rule::PsdZf => {
            let white = g.full_mask() & !blue;
            let comps = g.components_within(white);
            for w in ones(forced) {
                let comp = comps.iter().find(|c| *c & (1 << w) != 0).unwrap();
                let forcer = ones(g.neighbors_mask(w) & blue)
                    .find(|&v| (g.neighbors_mask(v) & comp).count_ones() == 1)
                    .expect("forced vertex has a forcer");
                out.push(ForceRecord {
                    forcer,
                    forced: w,
                    round,
                });
            }
        }
    }
}

/// Run the process from seed s to its final coloring, recording rounds and
/// forces. Seeding with V(G) yields a complete trace with zero rounds
/// under every rule.
pub fn propagate(g: &Graph, rule: Rule, s: &VertexSet) -> Result<PropagationTrace> {
    if s.is_empty() && g.order() > 0 {
        return Err(Error::EmptySet);
    }
    let full = g.full_mask();
    let mut rounds = vec![*s];
    let mut forces = Vec::new();
    let mut blue = s.mask();
    let mut round = 0u32;
    if rule == Rule::PowerDom && blue != full {
        // domination step
        round += 1;
        let observed = closed_neighborhood_mask(g, blue) & !blue;
        if observed == 0 {
            return Ok(PropagationTrace {
                rule,
                initial: *s,
                rounds,
                forces,
                complete: false,
            });
        }
        for w in ones(observed) {
            let forcer = ones(g.neighbors_mask(w) & blue).next().unwrap();
            out_of_seed_force(&mut forces, forcer, w, round);
        }
        blue |= observed;
        rounds.push(VertexSet::from_mask(g.order(), observed));
    }
    while blue != full {
        let forced = step_mask(g, rule, blue);
        if forced == 0 {
            break;
        }
        round += 1;
        attribute_forces(g, rule, blue, forced, round, &mut forces);
        blue |= forced;
        rounds.push(VertexSet::from_mask(g.order(), forced));
    }
    Ok(PropagationTrace {
        rule,
        initial: *s,
        rounds,
        forces,
        complete: blue == full,
    })
}

fn out_of_seed_force(forces: &mut Vec<ForceRecord>, forcer: usize, forced: usize, round: u32) {
    forces.push(ForceRecord {
        forcer,
        forced,
        round,
    });
}

/// Propagation / power propagation time of the seed, or None when the seed
/// does not color the whole graph. pt of V(G) is 0 under every rule.
pub fn propagation_time(g: &Graph, rule: Rule, s: &VertexSet) -> Option<u32> {
    if s.mask() == g.full_mask() {
        return Some(0);
    }
    pt_mask(g, rule, s.mask())
}

pub(crate) fn pt_mask(g: &Graph, rule: Rule, s: u64) -> Option<u32> {
    let full = g.full_mask();
    if s == full {
        return Some(0);
    }
    if s == 0 {
        return None;
    }
    let mut blue = s;
    let mut rounds = 0u32;
    if rule == Rule::PowerDom {
        let nb = closed_neighborhood_mask(g, blue);
        if nb == blue {
            return None;
        }
        blue = nb;
        rounds = 1;
        if blue == full {
            return Some(1);
        }
    }
    loop {
        let forced = step_mask(g, rule, blue);
        if forced == 0 {
            return None;
        }
        blue |= forced;
        rounds += 1;
        if blue == full {
            return Some(rounds);
        }
    }
}

/// Minimum forcing/power-dominating set: (size, lexicographically least
/// witness), by exhaustive search over subset sizes in increasing order.
pub fn forcing_number(g: &Graph, rule: Rule) -> (usize, VertexSet) {
    let n = g.order();
    if n == 0 {
        return (0, VertexSet::empty(0));
    }
    for k in 1..=n {
        for mask in Combinations::new(n, k) {
            if pt_mask(g, rule, mask).is_some() {
                return (k, VertexSet::from_mask(n, mask));
            }
        }
    }
    unreachable!("V(G) always forces")
}

/// Terminal vertices of the forcing chains of a complete standard-rule
/// trace: exactly the blue vertices that never perform a force. The
/// reversal has the same cardinality as the seed and is itself a zero
/// forcing set.
pub fn reversal(g: &Graph, trace: &PropagationTrace) -> Result<VertexSet> {
    if trace.rule != Rule::StandardZf {
        return Err(Error::BadTrace(
            "reversal requires a standard-rule trace".into(),
        ));
    }
    if !trace.complete {
        return Err(Error::BadTrace("reversal requires a complete trace".into()));
    }
    let mut forcers = 0u64;
    for f in &trace.forces {
        forcers |= 1 << f.forcer;
    }
    Ok(VertexSet::from_mask(g.order(), g.full_mask() & !forcers))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn vs(order: usize, ids: &[usize]) -> VertexSet {
        VertexSet::from_ids(order, ids).unwrap()
    }

    #[test]
    fn step_cases() {
        let p4 = path(4);
        let s = step(&p4, Rule::StandardZf, &vs(4, &[0]));
        assert_eq!(s.to_vec(), vec![1]);
        let k13 = star(3);
        let s = step(&k13, Rule::PsdZf, &vs(4, &[0]));
        assert_eq!(s.to_vec(), vec![1, 2, 3]);
        let s = step(&k13, Rule::StandardZf, &vs(4, &[0]));
        assert!(s.is_empty());
    }

    #[test]
    fn propagate_path_chain() {
        let p6 = path(6);
        let t = propagate(&p6, Rule::StandardZf, &vs(6, &[0])).unwrap();
        assert!(t.complete);
        assert_eq!(t.rounds_used(), 5);
        for v in 0..6 {
            assert_eq!(t.round_of(v), Some(v as u32));
        }
        assert_eq!(t.forces.len(), 5);
    }

    #[test]
    fn propagate_power_dom_p5_center() {
        let p5 = path(5);
        let t = propagate(&p5, Rule::PowerDom, &vs(5, &[2])).unwrap();
        assert!(t.complete);
        assert_eq!(t.rounds_used(), 2);
        assert_eq!(t.rounds[1].to_vec(), vec![1, 3]);
        assert_eq!(t.rounds[2].to_vec(), vec![0, 4]);
    }

    #[test]
    fn psd_single_vertex_on_cycle_stalls() {
        // C_6 minus one vertex is a single path component, so the blue
        // vertex keeps two white neighbors in it and never forces
        let c6 = cycle(6);
        let t = propagate(&c6, Rule::PsdZf, &vs(6, &[0])).unwrap();
        assert!(!t.complete);
        assert_eq!(propagation_time(&c6, Rule::PsdZf, &vs(6, &[0])), None);
        // two antipodal seeds split the white set into two components
        assert_eq!(propagation_time(&c6, Rule::PsdZf, &vs(6, &[0, 3])), Some(1));
    }

    #[test]
    fn propagation_time_cases() {
        let p7 = path(7);
        assert_eq!(
            propagation_time(&p7, Rule::StandardZf, &vs(7, &[0])),
            Some(6)
        );
        let k19 = star(9);
        assert_eq!(
            propagation_time(&k19, Rule::PowerDom, &vs(10, &[0])),
            Some(1)
        );
        let c5 = cycle(5);
        assert_eq!(propagation_time(&c5, Rule::StandardZf, &vs(5, &[0])), None);
        // pt of the full set is 0 under every rule
        for rule in [Rule::StandardZf, Rule::PsdZf, Rule::PowerDom] {
            assert_eq!(propagation_time(&c5, rule, &VertexSet::full(5)), Some(0));
        }
    }

    #[test]
    fn power_dom_identity_with_closed_neighborhood() {
        // pt_pd(G; S) = pt(G; N[S]) + 1 for S != V(G), on every connected
        // graph of order <= 5 and every nonempty proper seed
        for n in 2..=5usize {
            for g in crate::enumerate::enumerate_connected(n).unwrap() {
                for mask in 1..g.full_mask() {
                    let s = VertexSet::from_mask(n, mask);
                    let lhs = propagation_time(&g, Rule::PowerDom, &s);
                    let nb = crate::params::closed_neighborhood(&g, &s);
                    let rhs = propagation_time(&g, Rule::StandardZf, &nb).map(|p| p + 1);
                    assert_eq!(lhs, rhs, "n={n} S={s:?}");
                }
            }
        }
    }

    #[test]
    fn forcing_number_cases() {
        let p9 = path(9);
        let (z, w) = forcing_number(&p9, Rule::StandardZf);
        assert_eq!(z, 1);
        assert_eq!(w.to_vec(), vec![0]);
        // Z_+(K_n) = n - 1
        let mut e = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                e.push((u, v));
            }
        }
        let k5 = Graph::from_edges(5, &e).unwrap();
        assert_eq!(forcing_number(&k5, Rule::PsdZf).0, 4);
        let (pd, w) = forcing_number(&star(4), Rule::PowerDom);
        assert_eq!((pd, w.to_vec()), (1, vec![0]));
    }

    #[test]
    fn reversal_cases() {
        let p6 = path(6);
        let t = propagate(&p6, Rule::StandardZf, &vs(6, &[0])).unwrap();
        let r = reversal(&p6, &t).unwrap();
        assert_eq!(r.to_vec(), vec![5]);
        // rev(V) = V
        let t = propagate(&p6, Rule::StandardZf, &VertexSet::full(6)).unwrap();
        assert_eq!(reversal(&p6, &t).unwrap(), VertexSet::full(6));
        // errors
        let c5 = cycle(5);
        let t = propagate(&c5, Rule::StandardZf, &vs(5, &[0])).unwrap();
        assert!(matches!(reversal(&c5, &t), Err(Error::BadTrace(_))));
        let t = propagate(&p6, Rule::PsdZf, &vs(6, &[0])).unwrap();
        assert!(matches!(reversal(&p6, &t), Err(Error::BadTrace(_))));
    }

    #[test]
    fn reversal_of_p10_half_set() {
        // seed {v_i : i = 2 or 3 mod 4, 1-based} on P_10 forces in one
        // round; its reversal is again a forcing set of the same size
        let p10 = path(10);
        let s = vs(10, &[1, 2, 5, 6, 9]);
        let t = propagate(&p10, Rule::StandardZf, &s).unwrap();
        assert!(t.complete);
        assert_eq!(t.rounds_used(), 1);
        let r = reversal(&p10, &t).unwrap();
        assert_eq!(r.len(), 5);
        assert_eq!(propagation_time(&p10, Rule::StandardZf, &r), Some(1));
    }

    #[test]
    fn trace_json_shape() {
        let p5 = path(5);
        let t = propagate(&p5, Rule::PowerDom, &vs(5, &[2])).unwrap();
        let j = t.to_json();
        assert_eq!(j["rule"], "pd");
        assert_eq!(j["initial"], serde_json::json!([2]));
        assert_eq!(j["complete"], true);
        assert_eq!(j["rounds"].as_array().unwrap().len(), 3);
        let f = &j["forces"][0];
        assert!(f["from"].is_u64() && f["to"].is_u64() && f["round"].is_u64());
    }

    #[test]
    fn trace_round_partition_invariants() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        for rule in [Rule::StandardZf, Rule::PsdZf, Rule::PowerDom] {
            for mask in 1..g.full_mask() {
                let s = VertexSet::from_mask(6, mask);
                let t = propagate(&g, rule, &s).unwrap();
                // rounds pairwise disjoint, nonempty after round 0
                let mut seen = 0u64;
                for (i, r) in t.rounds.iter().enumerate() {
                    assert_eq!(seen & r.mask(), 0);
                    seen |= r.mask();
                    if i > 0 {
                        assert!(!r.is_empty());
                    }
                }
                assert_eq!(t.complete, seen == g.full_mask());
                // forced vertices recorded exactly once, never in the seed
                let mut forced_seen = 0u64;
                for f in &t.forces {
                    assert_eq!(forced_seen & (1 << f.forced), 0);
                    forced_seen |= 1 << f.forced;
                    assert!(!t.initial.contains(f.forced));
                    assert_eq!(t.round_of(f.forced), Some(f.round));
                }
                assert_eq!(forced_seen, seen & !mask);
            }
        }
    }
}
