//! Solvability of pebbling configurations and the two pebbling numbers.

mod fast;
mod number;
mod search;
pub mod verify;

pub use fast::{solvable_exactly_one_fast, weight_prune, FastSolver};
pub use number::{
    find_unsolvable_witness, pebbling_number, singular_pebbling_number, t_search_cap,
};

use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::game::{Configuration, GoalMode, Move};
use crate::graph::{Graph, VertexId};
use search::{Objective, Search, Verdict};

/// A pebbling number: finite, or infinite when some configuration of every
/// size is unsolvable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedCount {
    Finite(u64),
    Infinite,
}

impl ExtendedCount {
    pub fn finite(self) -> Option<u64> {
        match self {
            ExtendedCount::Finite(t) => Some(t),
            ExtendedCount::Infinite => None,
        }
    }
}

impl fmt::Display for ExtendedCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedCount::Finite(t) => write!(f, "{t}"),
            ExtendedCount::Infinite => f.write_str("infinite"),
        }
    }
}

/// Serialized as a JSON number, or the string `"infinite"`.
impl Serialize for ExtendedCount {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedCount::Finite(t) => s.serialize_u64(*t),
            ExtendedCount::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub solvable: bool,
    /// A winning move sequence, present iff `solvable`.
    pub witness: Option<Vec<Move>>,
    pub states_explored: u64,
}

struct Goal {
    target: usize,
    mode: GoalMode,
}

impl Objective for Goal {
    #[inline]
    fn classify(&mut self, state: &[u32]) -> Verdict {
        if self.mode.accepts(state[self.target]) {
            Verdict::Win
        } else {
            Verdict::Expand
        }
    }
}

/// Exhaustive search: is there a (possibly empty) sequence of legal moves
/// after which the target satisfies `mode`?
///
/// Moves are tried in ascending (source, destination) order, so the witness
/// is the first winning line in that order. No pruning is applied; this is
/// the reference the pruned paths are checked against.
pub fn solvable(
    g: &Graph,
    c: &Configuration,
    target: VertexId,
    mode: GoalMode,
) -> Result<SolveResult> {
    c.check_graph(g)?;
    g.check_vertex(target)?;
    let mut goal = Goal {
        target: target.0,
        mode,
    };
    let mut search = Search::ascending(g);
    let solvable = search.run(c.counts(), &mut goal);
    let witness = solvable.then(|| search.witness(c.counts(), &mut goal));
    Ok(SolveResult {
        solvable,
        witness,
        states_explored: search.explored(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::replay;

    fn cfg(c: &[u32]) -> Configuration {
        Configuration::new(c.to_vec()).unwrap()
    }

    fn check(g: &Graph, c: &[u32], target: usize, mode: GoalMode) -> SolveResult {
        let c = cfg(c);
        let r = solvable(g, &c, VertexId(target), mode).unwrap();
        if let Some(w) = &r.witness {
            let end = replay(g, &c, w).unwrap();
            assert!(mode.accepts(end.counts()[target]));
        }
        assert_eq!(r.solvable, r.witness.is_some());
        r
    }

    #[test]
    fn solve_examples() {
        let k2 = Graph::complete(2).unwrap();
        let p3 = Graph::path(3).unwrap();
        let r = check(&k2, &[0, 2], 0, GoalMode::AtLeastOne);
        assert_eq!(r.witness, Some(vec![Move::new(1, 0)]));
        assert!(!check(&k2, &[2, 0], 0, GoalMode::ExactlyOne).solvable);
        let r = check(&p3, &[0, 0, 4], 0, GoalMode::AtLeastOne);
        // two moves onto vertex 1 are needed before one can continue to 0
        assert_eq!(
            r.witness,
            Some(vec![Move::new(2, 1), Move::new(2, 1), Move::new(1, 0)])
        );
        assert!(check(&k2, &[4, 0], 0, GoalMode::ExactlyOne).solvable);
    }

    #[test]
    fn degenerate_inputs() {
        let k1 = Graph::complete(1).unwrap();
        for mode in [GoalMode::AtLeastOne, GoalMode::ExactlyOne] {
            assert!(!check(&k1, &[0], 0, mode).solvable);
            assert!(check(&k1, &[1], 0, mode).solvable);
            assert!(!check(&Graph::path(3).unwrap(), &[0, 0, 0], 1, mode).solvable);
        }
        let r = check(&k1, &[1], 0, GoalMode::ExactlyOne);
        assert_eq!(r.witness, Some(vec![]));
        assert!(!check(&k1, &[6], 0, GoalMode::ExactlyOne).solvable);
    }

    #[test]
    fn size_mismatch_is_a_usage_error() {
        let k2 = Graph::complete(2).unwrap();
        assert!(solvable(&k2, &cfg(&[1, 1, 1]), VertexId(0), GoalMode::AtLeastOne).is_err());
        assert!(solvable(&k2, &cfg(&[1, 1]), VertexId(2), GoalMode::AtLeastOne).is_err());
    }

    #[test]
    fn large_totals_do_not_exhaust_the_stack() {
        let p3 = Graph::path(3).unwrap();
        let r = check(&p3, &[0, 0, 60_000], 0, GoalMode::ExactlyOne);
        assert!(r.solvable);
    }

    #[test]
    fn extended_count_serializes() {
        assert_eq!(
            serde_json::to_string(&ExtendedCount::Finite(4)).unwrap(),
            "4"
        );
        assert_eq!(
            serde_json::to_string(&ExtendedCount::Infinite).unwrap(),
            "\"infinite\""
        );
        assert!(ExtendedCount::Finite(1_000_000) < ExtendedCount::Infinite);
    }
}
