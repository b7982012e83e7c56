//! Exact Cops-and-Robbers solver by retrograde analysis.
//!
//! A round is a cop half-move followed by a robber half-move. Capture is
//! checked after each half-move, and a round in which capture occurs
//! counts as one full round; a robber starting on a cop counts as zero
//! rounds. States where the cops are to move minimize, states where the
//! robber is to move maximize, and states never labeled by the backward
//! induction are robber wins.

use std::collections::HashMap;

use crate::bits::{binomial, ones, Multisets};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Value sentinel: robber evades forever.
pub const INFINITE: u32 = u32::MAX;

/// A multiset of cop positions, stored sorted ascending. Repeats are
/// allowed: several cops may share a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CopConfig(Vec<u8>);

impl CopConfig {
    pub fn new(mut positions: Vec<u8>) -> Result<CopConfig> {
        if positions.is_empty() {
            return Err(Error::EmptySet);
        }
        positions.sort_unstable();
        Ok(CopConfig(positions))
    }

    pub fn positions(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Mask of occupied vertices.
    pub fn cover(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &c| m | (1 << c))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Turn {
    CopsToMove,
    RobberToMove,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub cops: CopConfig,
    pub robber: usize,
    pub turn: Turn,
}

/// Solved minimax capture times for every state with a fixed cop count.
pub struct GameTable {
    n: usize,
    k: usize,
    configs: Vec<Vec<u8>>,
    rank: HashMap<Vec<u8>, u32>,
    values: Vec<u32>,
}

impl GameTable {
    pub fn cop_count(&self) -> usize {
        self.k
    }

    #[inline]
    fn state_id(&self, ci: usize, r: usize, turn: Turn) -> usize {
        (ci * self.n + r) * 2 + (turn == Turn::RobberToMove) as usize
    }

    /// Rounds to capture from a state under optimal play; None = robber wins.
    pub fn value(&self, state: &GameState) -> Result<Option<u32>> {
        if state.cops.len() != self.k {
            return Err(Error::BadArity {
                k: state.cops.len(),
                min: self.k,
                max: self.k,
            });
        }
        let ci = *self
            .rank
            .get(state.cops.positions())
            .ok_or_else(|| Error::BadParams("cop position out of range".into()))?
            as usize;
        let v = self.values[self.state_id(ci, state.robber, state.turn)];
        Ok(if v == INFINITE { None } else { Some(v) })
    }

    /// Worst-case capture time over robber starts for one cop placement.
    fn capture_time_index(&self, ci: usize) -> u32 {
        let mut worst = 0u32;
        for r in 0..self.n {
            let v = self.values[self.state_id(ci, r, Turn::CopsToMove)];
            worst = worst.max(v);
            if worst == INFINITE {
                break;
            }
        }
        worst
    }

    /// min over placements of the worst-case capture time, with the
    /// lexicographically least optimal placement.
    pub fn best_placement(&self) -> (u32, CopConfig) {
        let mut best = INFINITE;
        let mut witness = 0usize;
        for ci in 0..self.configs.len() {
            let v = self.capture_time_index(ci);
            if v < best {
                best = v;
                witness = ci;
            }
        }
        (best, CopConfig(self.configs[witness].clone()))
    }

    /// All rows (cops, robber, turn, value) for debugging dumps.
    pub fn rows(&self) -> impl Iterator<Item = (&[u8], usize, Turn, Option<u32>)> {
        self.configs.iter().enumerate().flat_map(move |(ci, c)| {
            (0..self.n).flat_map(move |r| {
                [Turn::CopsToMove, Turn::RobberToMove]
                    .into_iter()
                    .map(move |t| {
                        let v = self.values[self.state_id(ci, r, t)];
                        (
                            c.as_slice(),
                            r,
                            t,
                            if v == INFINITE { None } else { Some(v) },
                        )
                    })
            })
        })
    }
}

/// Pack a sorted multiset into a u64 key (6 bits per cop).
fn pack(c: &[u8]) -> u64 {
    c.iter().fold(0u64, |acc, &x| (acc << 6) | x as u64)
}

/// Deduplicated cop move vectors from a sorted config: every cop moves
/// within its closed neighborhood (staying allowed).
fn config_successors(g: &Graph, config: &[u8], rank: &HashMap<Vec<u8>, u32>) -> Vec<u32> {
    let k = config.len();
    let options: Vec<Vec<u8>> = config
        .iter()
        .map(|&c| {
            ones(g.closed_neighbors_mask(c as usize))
                .map(|v| v as u8)
                .collect()
        })
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut pick = vec![0usize; k];
    'outer: loop {
        let mut dest: Vec<u8> = pick
            .iter()
            .enumerate()
            .map(|(i, &p)| options[i][p])
            .collect();
        dest.sort_unstable();
        if seen.insert(pack(&dest)) {
            out.push(rank[&dest]);
        }
        // odometer
        for i in (0..k).rev() {
            pick[i] += 1;
            if pick[i] < options[i].len() {
                continue 'outer;
            }
            pick[i] = 0;
        }
        break;
    }
    out
}

/// Solve the full game for k cops on g by backward induction.
pub fn solve_game(g: &Graph, k: usize, budget: &Budget) -> Result<GameTable> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Undefined("game needs at least one vertex".into()));
    }
    if k < 1 {
        return Err(Error::BadArity {
            k,
            min: 1,
            max: usize::MAX,
        });
    }
    let nconfigs = binomial(n + k - 1, k);
    let nstates = nconfigs.saturating_mul(n as u64).saturating_mul(2);
    if nstates > budget.max_states as u64 {
        return Err(Error::BudgetExceeded(format!(
            "{nstates} game states exceed limit {}",
            budget.max_states
        )));
    }
    let configs: Vec<Vec<u8>> = Multisets::new(n, k).collect();
    let mut rank = HashMap::with_capacity(configs.len());
    for (i, c) in configs.iter().enumerate() {
        rank.insert(c.clone(), i as u32);
    }
    let covers: Vec<u64> = configs
        .iter()
        .map(|c| CopConfig(c.clone()).cover())
        .collect();
    let succ: Vec<Vec<u32>> = configs
        .iter()
        .map(|c| config_successors(g, c, &rank))
        .collect();

    let nc = configs.len();
    let mut values = vec![INFINITE; nc * n * 2];
    let state_id =
        |ci: usize, r: usize, rob_turn: bool| -> usize { (ci * n + r) * 2 + rob_turn as usize };

    // robber-node counters: non-suicide robber moves still unresolved
    let mut cnt = vec![0u16; nc * n];
    for ci in 0..nc {
        for r in 0..n {
            if covers[ci] & (1 << r) == 0 {
                cnt[ci * n + r] = (g.closed_neighbors_mask(r) & !covers[ci]).count_ones() as u16;
            }
        }
    }

    // bucket queue over values; entries are (state, is_robber_turn)
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(), Vec::new()];
    // captured states have value 0
    for ci in 0..nc {
        for r in ones(covers[ci]) {
            values[state_id(ci, r, false)] = 0;
            values[state_id(ci, r, true)] = 0;
        }
        // cop half-move captures: value 1
        let mut reach1 = 0u64;
        for &cj in &succ[ci] {
            reach1 |= covers[cj as usize];
        }
        for r in ones(reach1 & !covers[ci]) {
            values[state_id(ci, r, false)] = 1;
            buckets[1].push(state_id(ci, r, false));
        }
    }

    let mut value = 0usize;
    while value < buckets.len() {
        while let Some(s) = buckets[value].pop() {
            let rob_turn = s % 2 == 1;
            let ci = s / 2 / n;
            let r = s / 2 % n;
            if rob_turn {
                // robber node resolved: cops predecessors may take it
                for &cj in &succ[ci] {
                    let cj = cj as usize;
                    if covers[cj] & (1 << r) != 0 {
                        continue;
                    }
                    let p = state_id(cj, r, false);
                    if values[p] == INFINITE {
                        values[p] = value as u32 + 1;
                        while buckets.len() <= value + 1 {
                            buckets.push(Vec::new());
                        }
                        buckets[value + 1].push(p);
                    }
                }
            } else {
                // cops node resolved: robber predecessors count down
                for r0 in ones(g.closed_neighbors_mask(r) & !covers[ci]) {
                    let p = state_id(ci, r0, true);
                    if values[p] == INFINITE {
                        let c = &mut cnt[ci * n + r0];
                        *c -= 1;
                        if *c == 0 {
                            values[p] = value as u32;
                            buckets[value].push(p);
                        }
                    }
                }
            }
        }
        value += 1;
    }

    Ok(GameTable {
        n,
        k,
        configs,
        rank,
        values,
    })
}

/// Worst-case capture time from fixed cop positions: the robber sees the
/// placement and starts wherever survival is longest. Returns None when
/// the robber evades forever.
pub fn capture_time_from(g: &Graph, s: &CopConfig, budget: &Budget) -> Result<Option<u32>> {
    let table = solve_game(g, s.len(), budget)?;
    let ci = table.rank[s.positions()] as usize;
    let v = table.capture_time_index(ci);
    Ok(if v == INFINITE { None } else { Some(v) })
}

/// k-capture time: best over all k-cop placements; None iff k < c(G).
pub fn capt_k(g: &Graph, k: usize, budget: &Budget) -> Result<Option<u32>> {
    let table = solve_game(g, k, budget)?;
    let (v, _) = table.best_placement();
    Ok(if v == INFINITE { None } else { Some(v) })
}

/// Cop number: least k with finite k-capture time. k = n always suffices.
pub fn cop_number(g: &Graph, budget: &Budget) -> Result<usize> {
    for k in 1..=g.order() {
        if capt_k(g, k, budget)?.is_some() {
            return Ok(k);
        }
    }
    Err(Error::Undefined("cop number of the empty graph".into()))
}
