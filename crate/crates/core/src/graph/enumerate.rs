//! Isomorph-free enumeration of small connected graphs.
//!
//! Every graph is reduced to a canonical code: the largest graph6-ordered
//! adjacency bit string over all relabelings that list vertices by
//! non-increasing degree. Isomorphic graphs admit the same set of such
//! relabelings, so they share a code. Graphs on `k + 1` vertices are grown
//! from every class on `k` vertices by attaching a new vertex to each subset
//! of the old ones, and deduplicated by code.

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{usage, Result};

/// Largest `n` accepted by [`enumerate_connected_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 7;

const MAX_CODE_ORDER: usize = 11;

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Canonical code of `g`; equal codes iff isomorphic graphs. Supports n <= 11.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    assert!(
        n <= MAX_CODE_ORDER,
        "canonical codes support n <= {MAX_CODE_ORDER}"
    );
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let slot_degree: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    let mut search = CanonSearch {
        g,
        total_bits: pair_count(n),
        slot_degree,
        perm: Vec::with_capacity(n),
        used: 0,
        best: None,
    };
    search.extend(0);
    search.best.unwrap_or(0)
}

struct CanonSearch<'a> {
    g: &'a Graph,
    total_bits: usize,
    slot_degree: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    best: Option<u64>,
}

impl CanonSearch<'_> {
    fn extend(&mut self, code: u64) {
        let j = self.perm.len();
        let n = self.g.order();
        if j == n {
            if self.best.is_none_or(|b| code > b) {
                self.best = Some(code);
            }
            return;
        }
        for v in 0..n {
            if self.used >> v & 1 == 1 || self.g.degree(v) != self.slot_degree[j] {
                continue;
            }
            // column j of the relabeled matrix: bits x(i, j) for i < j
            let mut next = code;
            for (i, &u) in self.perm.iter().enumerate() {
                if self.g.has_edge(u, v) {
                    next |= 1 << (self.total_bits - 1 - (pair_count(j) + i));
                }
            }
            if let Some(best) = self.best {
                let shift = self.total_bits - pair_count(j + 1);
                if next >> shift < best >> shift {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.extend(next);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = pair_count(n);
    let mut g = Graph::from_rows(n, vec![0; n]);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - k) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    g
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by canonical code.
fn all_classes(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::from_rows(1, vec![0])];
    for k in 1..n {
        let mut codes = BTreeSet::new();
        for base in &level {
            for mask in 0u64..1 << k {
                let mut rows = base.adj.clone();
                rows.push(mask);
                for (u, row) in rows.iter_mut().enumerate().take(k) {
                    *row |= (mask >> u & 1) << k;
                }
                codes.insert(canonical_code(&Graph::from_rows(k + 1, rows)));
            }
        }
        level = codes
            .into_iter()
            .map(|c| graph_from_code(k + 1, c))
            .collect();
    }
    level
}

/// Connected graphs on `n` vertices, one per isomorphism class, in a fixed
/// order (ascending canonical code).
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(usage(format!(
            "connected-graph enumeration supports 1 <= n <= {MAX_ENUMERATION_ORDER}, got {n}"
        )));
    }
    Ok(all_classes(n).into_iter().filter(Graph::is_connected))
}
