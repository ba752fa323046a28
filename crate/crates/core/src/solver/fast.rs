//! Pruned solver used for parameter computations.
//!
//! At-least-one searches are cut off with the classical potential bound:
//! weighting a pebble at distance `d` from the target by `2^-d`, no move
//! raises the total weight, and a pebble on the target weighs 1.
//!
//! Exactly-one questions are answered by case analysis on the target's
//! count. One pebble is already a win. Three or more (with a neighbor to
//! spill onto) is always a win. With none, the first pebble to arrive makes
//! exactly one, so the at-least-one search decides it. Only a count of two
//! needs a search of its own, and that search classifies every child state
//! with the same case analysis.

use super::search::{Objective, Search, Verdict};
use crate::error::Result;
use crate::game::Configuration;
use crate::graph::{bits, Graph, VertexId};

/// Memo entries kept per search before the cache is recycled.
const MEMO_LIMIT: usize = 1 << 22;

/// Integer form of the potential: vertex weights `2^(D - d)` against a
/// threshold of `2^D`, where `D` is the eccentricity of the target.
#[derive(Debug, Clone)]
pub(crate) struct Potential {
    weights: Vec<u128>,
    threshold: u128,
}

impl Potential {
    pub(crate) fn new(g: &Graph, target: usize) -> Result<Potential> {
        let dist = g.distances_from(VertexId(target))?;
        let depth = dist.iter().flatten().copied().max().unwrap_or(0);
        let weights = dist
            .iter()
            .map(|d| d.map_or(0, |d| 1u128 << (depth - d)))
            .collect();
        Ok(Potential {
            weights,
            threshold: 1u128 << depth,
        })
    }

    #[inline]
    pub(crate) fn insufficient(&self, state: &[u32]) -> bool {
        let total: u128 = state
            .iter()
            .zip(&self.weights)
            .map(|(&c, &w)| u128::from(c) * w)
            .sum();
        total < self.threshold
    }
}

struct AtLeastOne<'a> {
    target: usize,
    potential: &'a Potential,
}

impl Objective for AtLeastOne<'_> {
    #[inline]
    fn classify(&mut self, state: &[u32]) -> Verdict {
        if state[self.target] >= 1 {
            Verdict::Win
        } else if self.potential.insufficient(state) {
            Verdict::Lose
        } else {
            Verdict::Expand
        }
    }
}

struct ExactlyOne<'a> {
    target: usize,
    potential: &'a Potential,
    reach: &'a mut Search,
}

impl Objective for ExactlyOne<'_> {
    fn classify(&mut self, state: &[u32]) -> Verdict {
        match state[self.target] {
            1 | 3.. => Verdict::Win,
            2 => Verdict::Expand,
            _ => {
                let mut reach = AtLeastOne {
                    target: self.target,
                    potential: self.potential,
                };
                if self.reach.run(state, &mut reach) {
                    Verdict::Win
                } else {
                    Verdict::Lose
                }
            }
        }
    }
}

/// Pruned solver for one graph and target, with caches that persist across
/// queries.
pub struct FastSolver {
    target: usize,
    isolated: bool,
    potential: Potential,
    reach: Search,
    exact: Search,
}

impl FastSolver {
    pub fn new(g: &Graph, target: VertexId) -> Result<FastSolver> {
        let potential = Potential::new(g, target.0)?;
        let dist = g.distances_from(target)?;
        // moves toward the target first
        let mut arcs: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|u| bits(g.neighbor_mask(u)).map(move |v| (u, v)))
            .collect();
        let d = |x: usize| dist[x].map_or(0, i64::from);
        arcs.sort_by_key(|&(u, v)| (d(v) - d(u), u, v));
        Ok(FastSolver {
            target: target.0,
            isolated: g.is_isolated(target.0),
            potential,
            reach: Search::with_arcs(arcs.clone()).memo_limit(MEMO_LIMIT),
            exact: Search::with_arcs(arcs).memo_limit(MEMO_LIMIT),
        })
    }

    pub fn target(&self) -> VertexId {
        VertexId(self.target)
    }

    pub fn at_least_one(&mut self, counts: &[u32]) -> bool {
        let mut objective = AtLeastOne {
            target: self.target,
            potential: &self.potential,
        };
        self.reach.run(counts, &mut objective)
    }

    pub fn exactly_one(&mut self, counts: &[u32]) -> bool {
        if self.isolated {
            return counts[self.target] == 1;
        }
        let FastSolver {
            target,
            potential,
            reach,
            exact,
            ..
        } = self;
        let mut objective = ExactlyOne {
            target: *target,
            potential,
            reach,
        };
        exact.run(counts, &mut objective)
    }

    /// States expanded across both caches so far.
    pub fn explored(&self) -> u64 {
        self.reach.explored() + self.exact.explored()
    }
}

/// True only when the potential bound already rules out reaching the target:
/// the weighted sum of pebbles, each scaled by `2^-distance`, is below 1.
/// Vertices in other components weigh nothing.
pub fn weight_prune(g: &Graph, c: &Configuration, target: VertexId) -> Result<bool> {
    c.check_graph(g)?;
    g.check_vertex(target)?;
    Ok(Potential::new(g, target.0)?.insufficient(c.counts()))
}

/// Exactly-one solvability by case analysis on the target's count.
pub fn solvable_exactly_one_fast(g: &Graph, c: &Configuration, target: VertexId) -> Result<bool> {
    c.check_graph(g)?;
    g.check_vertex(target)?;
    Ok(FastSolver::new(g, target)?.exactly_one(c.counts()))
}
