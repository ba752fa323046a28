//! Pebble configurations and the pebbling move.
//!
//! A move takes two pebbles off a vertex holding at least two, puts one on
//! an adjacent vertex and discards the other, so every move lowers the total
//! by exactly one.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{usage, Error, Result};
use crate::graph::{bits, Graph, VertexId};

/// Default per-vertex pebble cap.
pub const DEFAULT_PEBBLE_CAP: u32 = 1 << 16;

/// Pebble counts per vertex. A value type: moves produce new configurations.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    counts: Vec<u32>,
    total: u64,
}

impl Configuration {
    /// Counts checked against [`DEFAULT_PEBBLE_CAP`].
    pub fn new(counts: Vec<u32>) -> Result<Configuration> {
        Configuration::with_cap(counts, DEFAULT_PEBBLE_CAP)
    }

    pub fn with_cap(counts: Vec<u32>, cap: u32) -> Result<Configuration> {
        if counts.is_empty() {
            return Err(usage("a configuration needs at least one vertex"));
        }
        if let Some((vertex, &count)) = counts.iter().enumerate().find(|(_, &c)| c > cap) {
            return Err(Error::Overflow {
                vertex,
                count: count.into(),
                cap,
            });
        }
        let total = counts.iter().map(|&c| u64::from(c)).sum();
        Ok(Configuration { counts, total })
    }

    pub(crate) fn from_counts_unchecked(counts: Vec<u32>) -> Configuration {
        let total = counts.iter().map(|&c| u64::from(c)).sum();
        Configuration { counts, total }
    }

    /// All-zero configuration on `n` vertices.
    pub fn zeros(n: usize) -> Configuration {
        Configuration {
            counts: vec![0; n],
            total: 0,
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<u32> {
        self.counts
    }

    /// Number of vertices this configuration covers.
    pub fn order(&self) -> usize {
        self.counts.len()
    }

    /// Total pebbles (the configuration's size).
    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn get(&self, v: VertexId) -> u32 {
        self.counts[v.0]
    }

    /// A copy with one more pebble on `v`.
    pub fn with_added(&self, v: VertexId) -> Result<Configuration> {
        let mut counts = self.counts.clone();
        counts[v.0] += 1;
        Configuration::new(counts)
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.counts.len() == g.order() {
            Ok(())
        } else {
            Err(usage(format!(
                "configuration has {} entries but the graph has {} vertices",
                self.counts.len(),
                g.order()
            )))
        }
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// Comma-separated counts, e.g. `0,4,0`.
impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Configuration> {
        let counts = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("expected a pebble count, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        let cap = DEFAULT_PEBBLE_CAP;
        let counts = counts
            .into_iter()
            .enumerate()
            .map(|(vertex, c)| {
                u32::try_from(c)
                    .ok()
                    .filter(|&c| c <= cap)
                    .ok_or(Error::Overflow {
                        vertex,
                        count: c,
                        cap,
                    })
            })
            .collect::<Result<Vec<u32>>>()?;
        Configuration::new(counts)
    }
}

impl Serialize for Configuration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One pebbling move from `source` to the adjacent `destination`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move {
    pub source: VertexId,
    pub destination: VertexId,
}

impl Move {
    pub fn new(source: usize, destination: usize) -> Move {
        Move {
            source: VertexId(source),
            destination: VertexId(destination),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}→{})", self.source, self.destination)
    }
}

/// What the mover must achieve on the target vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GoalMode {
    /// At least one pebble on the target (classical pebbling).
    AtLeastOne,
    /// Exactly one pebble on the target (singular pebbling).
    ExactlyOne,
}

impl GoalMode {
    #[inline]
    pub fn accepts(self, on_target: u32) -> bool {
        match self {
            GoalMode::AtLeastOne => on_target >= 1,
            GoalMode::ExactlyOne => on_target == 1,
        }
    }
}

impl fmt::Display for GoalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GoalMode::AtLeastOne => "at-least-one",
            GoalMode::ExactlyOne => "exactly-one",
        })
    }
}

impl FromStr for GoalMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<GoalMode> {
        match s {
            "at-least-one" => Ok(GoalMode::AtLeastOne),
            "exactly-one" => Ok(GoalMode::ExactlyOne),
            _ => Err(usage(format!(
                "unknown mode {s:?} (expected at-least-one or exactly-one)"
            ))),
        }
    }
}

/// Legal moves in ascending (source, destination) order.
pub fn legal_moves(g: &Graph, c: &Configuration) -> Result<Vec<Move>> {
    c.check_graph(g)?;
    let mut moves = Vec::new();
    for (u, &count) in c.counts.iter().enumerate() {
        if count >= 2 {
            moves.extend(bits(g.neighbor_mask(u)).map(|v| Move::new(u, v)));
        }
    }
    Ok(moves)
}

pub fn apply_move(g: &Graph, c: &Configuration, m: Move) -> Result<Configuration> {
    c.check_graph(g)?;
    let (u, v) = (m.source.0, m.destination.0);
    if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
        return Err(usage(format!(
            "illegal move {m}: vertices are not adjacent"
        )));
    }
    if c.counts[u] < 2 {
        return Err(usage(format!(
            "illegal move {m}: vertex {u} holds {} pebble(s)",
            c.counts[u]
        )));
    }
    if c.counts[v] >= DEFAULT_PEBBLE_CAP {
        return Err(Error::Overflow {
            vertex: v,
            count: u64::from(c.counts[v]) + 1,
            cap: DEFAULT_PEBBLE_CAP,
        });
    }
    let mut counts = c.counts.clone();
    counts[u] -= 2;
    counts[v] += 1;
    Ok(Configuration {
        counts,
        total: c.total - 1,
    })
}

pub fn is_goal(c: &Configuration, target: VertexId, mode: GoalMode) -> bool {
    mode.accepts(c.counts[target.0])
}

/// Replays `moves` from `start`, failing on the first illegal step.
pub fn replay(g: &Graph, start: &Configuration, moves: &[Move]) -> Result<Configuration> {
    moves
        .iter()
        .try_fold(start.clone(), |c, &m| apply_move(g, &c, m))
}

/// Every way to place `total` pebbles on `n` vertices, optionally with
/// `fixed = (vertex, count)` pinned, in descending lexicographic order
/// (`[t, 0, ...]` first).
#[derive(Debug, Clone)]
pub struct Compositions {
    current: Option<Vec<u32>>,
    fixed: Option<usize>,
}

impl Compositions {
    pub fn new(n: usize, total: u32, fixed: Option<(VertexId, u32)>) -> Compositions {
        assert!(n >= 1, "compositions need at least one part");
        let current = match fixed {
            Some((v, _)) if v.0 >= n => None,
            Some((_, k)) if k > total => None,
            Some((_, k)) if n == 1 && k != total => None,
            _ => {
                let mut first = vec![0; n];
                let free = total - fixed.map_or(0, |(_, k)| k);
                if let Some((v, k)) = fixed {
                    first[v.0] = k;
                }
                let lead = (0..n).find(|&i| Some(i) != fixed.map(|(v, _)| v.0));
                if let Some(i) = lead {
                    first[i] = free;
                }
                Some(first)
            }
        };
        Compositions {
            current,
            fixed: fixed.map(|(v, _)| v.0),
        }
    }

    /// Advances to the lexicographic predecessor among free positions.
    fn step(&mut self) {
        let Some(c) = self.current.as_mut() else {
            return;
        };
        let free: Vec<usize> = (0..c.len()).filter(|&i| Some(i) != self.fixed).collect();
        let Some((&last, rest)) = free.split_last() else {
            self.current = None;
            return;
        };
        // rightmost free position (other than the last) holding a pebble
        let Some(&pivot) = rest.iter().rev().find(|&&i| c[i] > 0) else {
            self.current = None;
            return;
        };
        let tail: u32 = free.iter().filter(|&&i| i > pivot).map(|&i| c[i]).sum();
        for &i in free.iter().filter(|&&i| i > pivot) {
            c[i] = 0;
        }
        c[pivot] -= 1;
        let next = *free.iter().find(|&&i| i > pivot).unwrap_or(&last);
        c[next] = tail + 1;
    }
}

impl Iterator for Compositions {
    type Item = Configuration;

    fn next(&mut self) -> Option<Configuration> {
        let out = self.current.clone()?;
        self.step();
        Some(Configuration::from_counts_unchecked(out))
    }
}

/// Configurations of exactly `total` pebbles on `n` vertices; see [`Compositions`].
pub fn enumerate_configurations(
    n: usize,
    total: u32,
    fixed: Option<(VertexId, u32)>,
) -> Compositions {
    Compositions::new(n, total, fixed)
}

/// `C(total + n - 1, n - 1)`, the number of unconstrained configurations.
pub fn configuration_count(n: usize, total: u32) -> u128 {
    let k = (n - 1) as u128;
    let m = u128::from(total) + k;
    (0..k).fold(1u128, |acc, i| acc * (m - i) / (i + 1))
}
