//! Exhaustive checks of the structural claims the fast paths rely on, and the
//! sweep comparing both pebbling numbers over all small connected graphs.
//!
//! Every check here decides solvability with the unpruned search in
//! [`solvable`], never with [`FastSolver`], so the fast paths are validated
//! against an independent route.

use std::time::Instant;

use rayon::prelude::*;

use super::search::{Objective, Search, Verdict};
use super::{
    find_unsolvable_witness, pebbling_number, singular_pebbling_number, solvable, weight_prune,
    ExtendedCount, FastSolver,
};
use crate::error::{usage, Result};
use crate::game::{enumerate_configurations, Configuration, GoalMode};
use crate::graph::{enumerate_connected_graphs, Graph, VertexId, MAX_ENUMERATION_ORDER};
use crate::report::{CheckReport, GraphRecord, VerificationReport};

fn direct(g: &Graph, c: &Configuration, target: VertexId, mode: GoalMode) -> Result<bool> {
    Ok(solvable(g, c, target, mode)?.solvable)
}

fn describe(g: &Graph, c: &Configuration, target: VertexId) -> String {
    format!("graph {g} target {target} config {c}")
}

fn sizes(n: usize, t_max: u32) -> impl Iterator<Item = Configuration> {
    (0..=t_max).flat_map(move |t| enumerate_configurations(n, t, None))
}

/// Every configuration holding at least three pebbles on a target that has a
/// neighbor can finish with exactly one pebble there.
pub fn verify_crowded_target(g: &Graph, t_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("crowded-target", format!("graph {g}, t <= {t_max}"));
    for target in g.vertices().filter(|v| !g.is_isolated(v.0)) {
        for c in sizes(g.order(), t_max).filter(|c| c.get(target) >= 3) {
            report.cases += 1;
            if !direct(g, &c, target, GoalMode::ExactlyOne)? {
                report.fail(describe(g, &c, target));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// Wins as soon as any neighbor of the target holds a pebble.
struct NeighborHit {
    mask: u64,
}

impl Objective for NeighborHit {
    fn classify(&mut self, state: &[u32]) -> Verdict {
        let hit = crate::graph::bits(self.mask).any(|v| state[v] > 0);
        if hit {
            Verdict::Win
        } else {
            Verdict::Expand
        }
    }
}

/// With two pebbles on the target: if moves that leave the target alone can
/// put a pebble on one of its neighbors, the configuration is exactly-one
/// solvable. Moving the target's own pebbles off does not count as such a
/// move.
pub fn verify_exposed_neighbor(g: &Graph, t_max: u32) -> Result<CheckReport> {
    if g.order() < 2 || !g.is_connected() {
        return Err(usage(
            "exposed-neighbor check needs a connected graph on 2+ vertices",
        ));
    }
    let mut report = CheckReport::new("exposed-neighbor", format!("graph {g}, t <= {t_max}"));
    for target in g.vertices() {
        let t = target.0;
        let arcs = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| u != t && v != t)
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect();
        let mut away_from_target = Search::with_arcs(arcs);
        let mut hit = NeighborHit {
            mask: g.neighbor_mask(t),
        };
        for size in 2..=t_max {
            for c in enumerate_configurations(g.order(), size, Some((target, 2))) {
                if !away_from_target.run(c.counts(), &mut hit) {
                    continue;
                }
                report.cases += 1;
                if !direct(g, &c, target, GoalMode::ExactlyOne)? {
                    report.fail(describe(g, &c, target));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// With no pebble on the target, reaching it at all and reaching it with
/// exactly one pebble are the same question: each move delivers one pebble.
pub fn verify_first_arrival(g: &Graph, t_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("first-arrival", format!("graph {g}, t <= {t_max}"));
    for target in g.vertices() {
        for size in 0..=t_max {
            for c in enumerate_configurations(g.order(), size, Some((target, 0))) {
                report.cases += 1;
                let some = direct(g, &c, target, GoalMode::AtLeastOne)?;
                let one = direct(g, &c, target, GoalMode::ExactlyOne)?;
                if some != one {
                    report.fail(format!(
                        "{}: at-least-one {some}, exactly-one {one}",
                        describe(g, &c, target)
                    ));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

/// Differential test on one graph: the fast solver agrees with the direct
/// search in both modes, and the potential prune never fires on a solvable
/// instance.
pub fn crosscheck_graph(g: &Graph, t_max: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("fast-path-crosscheck", format!("graph {g}, t <= {t_max}"));
    for target in g.vertices() {
        let mut fast = FastSolver::new(g, target)?;
        for c in sizes(g.order(), t_max) {
            report.cases += 1;
            let exact = direct(g, &c, target, GoalMode::ExactlyOne)?;
            let reach = direct(g, &c, target, GoalMode::AtLeastOne)?;
            let problem = if fast.exactly_one(c.counts()) != exact {
                Some(format!("exactly-one fast path disagrees (direct: {exact})"))
            } else if fast.at_least_one(c.counts()) != reach {
                Some(format!(
                    "at-least-one fast path disagrees (direct: {reach})"
                ))
            } else if reach && weight_prune(g, &c, target)? {
                Some("weight prune fired on a solvable configuration".to_string())
            } else {
                None
            };
            if let Some(p) = problem {
                report.fail(format!("{}: {p}", describe(g, &c, target)));
                return Ok(report);
            }
        }
    }
    Ok(report)
}

/// [`crosscheck_graph`] over every connected graph with `n <= n_max`.
pub fn crosscheck_fast_path(n_max: usize, t_max: u32) -> Result<CheckReport> {
    let graphs = connected_graphs(1, n_max)?;
    let scope = format!("connected graphs, n <= {n_max}, t <= {t_max}");
    sweep("fast-path-crosscheck", scope, &graphs, |g| {
        crosscheck_graph(g, t_max)
    })
}

/// Checks the reduced singular pebbling number against brute force: every
/// configuration of every size in `[t, t + window]` is exactly-one solvable
/// for every target, and some configuration of size `t - 1` is not. For an
/// infinite value, every size in `[2, 2 + window]` must have an unsolvable
/// configuration.
pub fn validate_window(g: &Graph, window: u32) -> Result<CheckReport> {
    let mut report = CheckReport::new("singular-window", format!("graph {g}, window {window}"));
    let reduced = singular_pebbling_number(g)?;
    let unsolvable_at = |size: u32| -> Result<Option<(Configuration, VertexId)>> {
        for target in g.vertices() {
            for c in enumerate_configurations(g.order(), size, None) {
                if !direct(g, &c, target, GoalMode::ExactlyOne)? {
                    return Ok(Some((c, target)));
                }
            }
        }
        Ok(None)
    };
    match reduced {
        ExtendedCount::Finite(t) => {
            let t = u32::try_from(t).map_err(|_| usage("pebbling number too large to window"))?;
            for size in t..=t + window {
                report.cases += 1;
                if let Some((c, target)) = unsolvable_at(size)? {
                    report.fail(format!(
                        "reduced value {t}, but {} is unsolvable",
                        describe(g, &c, target)
                    ));
                    return Ok(report);
                }
            }
            report.cases += 1;
            if t > 0 && unsolvable_at(t - 1)?.is_none() {
                report.fail(format!(
                    "graph {g}: reduced value {t}, but size {} is all solvable",
                    t - 1
                ));
            }
        }
        ExtendedCount::Infinite => {
            for size in 2..=2 + window {
                report.cases += 1;
                if unsolvable_at(size)?.is_none() {
                    report.fail(format!(
                        "graph {g}: value infinite, but size {size} is all solvable"
                    ));
                    return Ok(report);
                }
            }
        }
    }
    Ok(report)
}

fn connected_graphs(n_min: usize, n_max: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in n_min..=n_max {
        out.extend(enumerate_connected_graphs(n)?);
    }
    Ok(out)
}

/// Runs `check` on every graph in parallel and merges the results in graph
/// order.
fn sweep<F>(name: &str, scope: String, graphs: &[Graph], check: F) -> Result<CheckReport>
where
    F: Fn(&Graph) -> Result<CheckReport> + Sync + Send,
{
    let parts: Vec<CheckReport> = graphs.par_iter().map(check).collect::<Result<_>>()?;
    let mut report = CheckReport::new(name, scope);
    for p in parts {
        report.absorb(p);
    }
    Ok(report)
}

fn elapsed_ms(start: Instant, timing: bool) -> Option<u64> {
    timing.then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX))
}

/// Computes both numbers for `g` and confirms each blocking configuration
/// with the direct search.
pub fn graph_record(g: &Graph, timing: bool) -> GraphRecord {
    let start = Instant::now();
    let mut problems = Vec::new();
    let pi = pebbling_number(g)
        .map_err(|e| problems.push(format!("pi: {e}")))
        .ok();
    let pi_s = singular_pebbling_number(g)
        .map_err(|e| problems.push(format!("pi_s: {e}")))
        .ok();

    let mut witness = None;
    if let Some(ExtendedCount::Finite(t)) = pi {
        match find_unsolvable_witness(g, t - 1, GoalMode::AtLeastOne) {
            Ok(Some(w)) => witness = Some(w),
            Ok(None) => problems.push(format!("no blocking configuration of size {}", t - 1)),
            Err(e) => problems.push(e.to_string()),
        }
    }
    if let Some((c, target)) = &witness {
        match direct(g, c, *target, GoalMode::AtLeastOne) {
            Ok(false) => {}
            Ok(true) => problems.push(format!("blocking configuration {c} is solvable")),
            Err(e) => problems.push(e.to_string()),
        }
    }
    if let Some(ExtendedCount::Finite(t)) = pi_s {
        match find_unsolvable_witness(g, t - 1, GoalMode::ExactlyOne) {
            Ok(Some((c, target))) => match direct(g, &c, target, GoalMode::ExactlyOne) {
                Ok(false) => {}
                Ok(true) => {
                    problems.push(format!("singular blocking configuration {c} is solvable"))
                }
                Err(e) => problems.push(e.to_string()),
            },
            Ok(None) => problems.push(format!(
                "no singular blocking configuration of size {}",
                t - 1
            )),
            Err(e) => problems.push(e.to_string()),
        }
    }

    let expected_exception = g.order() == 2 && g.edge_count() == 1;
    let (witness_config, witness_target) = witness.unzip();
    GraphRecord {
        graph6: g.to_string(),
        n: g.order(),
        pi,
        pi_s,
        equal: pi.is_some() && pi == pi_s,
        witness_config,
        witness_target,
        elapsed_ms: elapsed_ms(start, timing),
        expected_exception,
        problems,
    }
}

/// Compares `pi` and `pi_s` on every connected class with `3 <= n <= n_max`,
/// plus the two graphs on two vertices: the edgeless one (both infinite) and
/// `K2`, whose values are expected to differ.
pub fn verify_theorem(n_max: usize, timing: bool) -> Result<VerificationReport> {
    if !(3..=MAX_ENUMERATION_ORDER).contains(&n_max) {
        return Err(usage(format!(
            "n-max must be between 3 and {MAX_ENUMERATION_ORDER}, got {n_max}"
        )));
    }
    let start = Instant::now();
    let mut graphs = vec![Graph::empty(2)?, Graph::complete(2)?];
    graphs.extend(connected_graphs(3, n_max)?);
    let records = graphs.par_iter().map(|g| graph_record(g, timing)).collect();
    let mut report = VerificationReport {
        scope: format!("pi vs pi_s on connected graphs with 3 <= n <= {n_max}, plus n = 2"),
        pass: false,
        records,
        checks: Vec::new(),
        failures: Vec::new(),
        elapsed_ms: elapsed_ms(start, timing),
    };
    report.finalize();
    Ok(report)
}

/// Options for [`run_verification`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Largest graph order in the theorem sweep and the structural checks.
    pub n_max: usize,
    /// Largest configuration size in the structural checks and crosscheck.
    pub t_max: u32,
    /// Extra sizes above the singular pebbling number to brute-force.
    pub window: u32,
    /// Largest graph order for the crosscheck and window validation.
    pub exhaustive_n_max: usize,
    pub timing: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 5,
            t_max: 8,
            window: 4,
            exhaustive_n_max: 4,
            timing: false,
        }
    }
}

/// The full verification run: the theorem sweep, the fast-path crosscheck,
/// the structural checks and the window validation.
pub fn run_verification(opts: &VerifyOptions) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = verify_theorem(opts.n_max, opts.timing)?;
    let small = opts.n_max.min(opts.exhaustive_n_max);
    let structural = connected_graphs(2, opts.n_max)?;
    let t_max = opts.t_max;
    let scope = |what: &str| format!("{what}, t <= {t_max}");

    report.checks.push(crosscheck_fast_path(small, t_max)?);
    report.checks.push(sweep(
        "crowded-target",
        scope(&format!("connected graphs, 2 <= n <= {}", opts.n_max)),
        &structural,
        |g| verify_crowded_target(g, t_max),
    )?);
    report.checks.push(sweep(
        "exposed-neighbor",
        scope(&format!("connected graphs, 2 <= n <= {}", opts.n_max)),
        &structural,
        |g| verify_exposed_neighbor(g, t_max),
    )?);
    report.checks.push(sweep(
        "first-arrival",
        scope(&format!("connected graphs, 2 <= n <= {}", opts.n_max)),
        &structural,
        |g| verify_first_arrival(g, t_max),
    )?);

    let mut windowed = vec![Graph::empty(2)?];
    windowed.extend(connected_graphs(1, small)?);
    report.checks.push(sweep(
        "singular-window",
        format!(
            "connected graphs with n <= {small} and the edgeless pair, window {}",
            opts.window
        ),
        &windowed,
        |g| validate_window(g, opts.window),
    )?);

    report.scope = format!(
        "pi vs pi_s for 3 <= n <= {}; structural checks t <= {}; crosscheck and window n <= {}",
        opts.n_max, opts.t_max, small
    );
    report.elapsed_ms = elapsed_ms(start, opts.timing);
    report.finalize();
    Ok(report)
}
