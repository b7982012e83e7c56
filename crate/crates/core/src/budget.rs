//! Search budgets for the exhaustive solvers.

/// Limits applied by the solvers that enumerate game states or vertex
/// subsets. Exceeding a limit is reported as `Error::BudgetExceeded`
/// rather than silently truncating a search.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum number of game states `pursuit::solve_game` may allocate.
    pub max_states: usize,
    /// Maximum number of candidate subsets a single per-k search may test.
    pub max_subsets: u64,
    /// Order cap for the exhaustive graph parameters (domination number,
    /// independence number, k-radius over all subsets).
    pub exhaustive_order: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 50_000_000,
            max_subsets: 200_000_000,
            exhaustive_order: crate::params::EXHAUSTIVE_GUARD,
        }
    }
}

impl Budget {
    /// Default budget scaled by the THROTTLE_BUDGET environment variable
    /// (a state-count override) when present.
    pub fn from_env() -> Budget {
        let mut b = Budget::default();
        if let Ok(v) = std::env::var("THROTTLE_BUDGET") {
            if let Ok(states) = v.trim().parse::<usize>() {
                b.max_states = states;
                b.max_subsets = states as u64;
            }
        }
        b
    }
}
