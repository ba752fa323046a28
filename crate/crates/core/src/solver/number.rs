//! Exact pebbling numbers by ascending search over the configuration size.
//!
//! For the classical number only configurations with no pebble on the target
//! need checking; the rest are solved before any move. For the singular
//! number a size `t` is settled for every larger size at once: counts of one
//! and of three or more on a non-isolated target always win, and the classes
//! with zero or two pebbles on the target stay solvable when pebbles are
//! added elsewhere (the same moves still work). So it suffices to check the
//! zero class for reachability and the two class with the exactly-one
//! search at size `t` alone.

use std::sync::Mutex;

use rayon::prelude::*;

use super::{ExtendedCount, FastSolver};
use crate::error::{Error, Result};
use crate::game::{enumerate_configurations, Configuration, GoalMode};
use crate::graph::{Graph, VertexId};

/// Configurations handed to the thread pool at a time.
const CHUNK: usize = 1 << 12;

/// Largest size the ascending searches will try on `n` vertices: `4^n`.
pub fn t_search_cap(n: usize) -> u64 {
    4u64.saturating_pow(n as u32).min(u64::from(u32::MAX))
}

/// Solvers for one target, reused across chunks and sizes so their memo
/// tables keep paying off.
struct SolverPool<'g> {
    graph: &'g Graph,
    target: VertexId,
    idle: Mutex<Vec<FastSolver>>,
}

struct Lease<'p, 'g> {
    pool: &'p SolverPool<'g>,
    solver: Option<FastSolver>,
}

impl Drop for Lease<'_, '_> {
    fn drop(&mut self) {
        if let Some(s) = self.solver.take() {
            self.pool.idle.lock().expect("solver pool poisoned").push(s);
        }
    }
}

impl<'g> SolverPool<'g> {
    fn new(graph: &'g Graph, target: VertexId) -> Result<SolverPool<'g>> {
        let first = FastSolver::new(graph, target)?;
        Ok(SolverPool {
            graph,
            target,
            idle: Mutex::new(vec![first]),
        })
    }

    fn lease(&self) -> Lease<'_, 'g> {
        let reused = self.idle.lock().expect("solver pool poisoned").pop();
        let solver = reused.unwrap_or_else(|| {
            FastSolver::new(self.graph, self.target).expect("target validated at pool creation")
        });
        Lease {
            pool: self,
            solver: Some(solver),
        }
    }

    /// First configuration, in iteration order, for which `check` fails.
    fn first_failure<I, F>(&self, configs: I, check: F) -> Option<Configuration>
    where
        I: Iterator<Item = Configuration>,
        F: Fn(&mut FastSolver, &[u32]) -> bool + Sync,
    {
        let mut configs = configs;
        loop {
            let chunk: Vec<Configuration> = configs.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                return None;
            }
            let hit = chunk
                .par_iter()
                .with_min_len(64)
                .map_init(
                    || self.lease(),
                    |lease, c| check(lease.solver.as_mut().expect("leased"), c.counts()),
                )
                .position_first(|solved| !solved);
            if let Some(i) = hit {
                return Some(chunk[i].clone());
            }
        }
    }
}

fn size(t: u64) -> u32 {
    u32::try_from(t).expect("sizes are capped below u32::MAX")
}

fn pools(g: &Graph) -> Result<Vec<SolverPool<'_>>> {
    g.vertices().map(|v| SolverPool::new(g, v)).collect()
}

/// Least `t` such that every configuration of `t` pebbles can put at least
/// one pebble on any chosen target. Infinite for disconnected graphs.
pub fn pebbling_number(g: &Graph) -> Result<ExtendedCount> {
    let n = g.order();
    if n >= 2 && !g.is_connected() {
        return Ok(ExtendedCount::Infinite);
    }
    let pools = pools(g)?;
    let cap = t_search_cap(n);
    for t in 1..=cap {
        let blocked = pools.iter().any(|pool| {
            let configs = enumerate_configurations(n, size(t), Some((pool.target, 0)));
            pool.first_failure(configs, |s, c| s.at_least_one(c))
                .is_some()
        });
        if !blocked {
            return Ok(ExtendedCount::Finite(t));
        }
    }
    Err(Error::LimitExceeded { cap })
}

/// Least `t` such that every configuration of at least `t` pebbles can end
/// with exactly one pebble on any chosen target. Infinite for `K1` and for
/// disconnected graphs.
pub fn singular_pebbling_number(g: &Graph) -> Result<ExtendedCount> {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return Ok(ExtendedCount::Infinite);
    }
    let pools = pools(g)?;
    let cap = t_search_cap(n);
    for t in 1..=cap {
        let blocked = pools.iter().any(|pool| {
            let empty = enumerate_configurations(n, size(t), Some((pool.target, 0)));
            if pool
                .first_failure(empty, |s, c| s.at_least_one(c))
                .is_some()
            {
                return true;
            }
            let pair = enumerate_configurations(n, size(t), Some((pool.target, 2)));
            pool.first_failure(pair, |s, c| s.exactly_one(c)).is_some()
        });
        if !blocked {
            return Ok(ExtendedCount::Finite(t));
        }
    }
    Err(Error::LimitExceeded { cap })
}

/// The first configuration of size `t` and target, in (target, descending
/// lexicographic configuration) order, that cannot meet `mode`.
pub fn find_unsolvable_witness(
    g: &Graph,
    t: u64,
    mode: GoalMode,
) -> Result<Option<(Configuration, VertexId)>> {
    let t = u32::try_from(t).map_err(|_| crate::error::usage(format!("size {t} is too large")))?;
    for pool in pools(g)? {
        let configs = enumerate_configurations(g.order(), t, None);
        let hit = match mode {
            GoalMode::AtLeastOne => pool.first_failure(configs, |s, c| s.at_least_one(c)),
            GoalMode::ExactlyOne => pool.first_failure(configs, |s, c| s.exactly_one(c)),
        };
        if let Some(c) = hit {
            return Ok(Some((c, pool.target)));
        }
    }
    Ok(None)
}
