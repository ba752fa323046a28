//! Simple undirected graphs on at most 64 labeled vertices.
//!
//! Adjacency is stored as one bitmask row per vertex, which keeps neighbor
//! iteration, connectivity and relabeling cheap at the sizes this crate
//! works with.

mod edge_list;
mod enumerate;
mod graph6;

pub use edge_list::{encode_edge_list, parse_edge_list};
pub use enumerate::{canonical_code, enumerate_connected_graphs, MAX_ENUMERATION_ORDER};
pub use graph6::{encode_graph6, parse_graph6, MAX_GRAPH6_ORDER};

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::error::{usage, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A vertex label, a 0-based index into its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

/// A simple undirected graph: no loops, no parallel edges, at least one vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(usage("a graph needs at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(usage(format!(
                "{n} vertices requested, at most {MAX_VERTICES} are supported"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Loops and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(usage(format!("edge {u}-{v} out of range for n = {n}")));
            }
            if u == v {
                return Err(usage(format!("self-loop on vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(usage(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge_unchecked(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub(crate) fn from_rows(n: usize, adj: Vec<u64>) -> Graph {
        debug_assert_eq!(adj.len(), n);
        Graph { n, adj }
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.n).map(VertexId)
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.n {
            Ok(())
        } else {
            Err(usage(format!(
                "vertex {} out of range for a graph on {} vertices",
                v.0, self.n
            )))
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.has_edge(u.0, v.0)
    }

    /// Bitmask of the neighbors of `v`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        Ok(bits(self.adj[v.0]).map(VertexId).collect())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum valency over all vertices.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn is_isolated(&self, v: usize) -> bool {
        self.adj[v] == 0
    }

    /// True iff every vertex is reachable from vertex 0. `K1` is connected.
    pub fn is_connected(&self) -> bool {
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    /// Breadth-first edge distances from `source`; `None` marks vertices in
    /// other components.
    pub fn distances_from(&self, source: VertexId) -> Result<Vec<Option<u32>>> {
        self.check_vertex(source)?;
        let mut dist = vec![None; self.n];
        dist[source.0] = Some(0);
        let mut queue = VecDeque::from([source.0]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for w in bits(self.adj[u]) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(dist)
    }

    /// The graph with vertex `perm[i]` of `self` relabeled as `i`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph {
            n: self.n,
            adj: vec![0; self.n],
        };
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    /// Path with edges `i - (i+1)`.
    pub fn path(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for i in 1..n {
            g.add_edge_unchecked(i - 1, i);
        }
        Ok(g)
    }

    /// Cycle on `n >= 3` vertices: the path plus the edge `(n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(usage(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        let mut g = Graph::path(n)?;
        g.add_edge_unchecked(n - 1, 0);
        Ok(g)
    }

    /// Star on `n >= 2` vertices centered at 0.
    pub fn star(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(usage(format!("a star needs at least 2 vertices, got {n}")));
        }
        let mut g = Graph::empty(n)?;
        for leaf in 1..n {
            g.add_edge_unchecked(0, leaf);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

/// Indices of the set bits of `mask`, ascending.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
