use std::collections::HashSet;

use proptest::prelude::*;

use pebbling::game::{
    apply_move, configuration_count, enumerate_configurations, legal_moves, replay,
};
use pebbling::graph::{
    canonical_code, encode_edge_list, encode_graph6, parse_edge_list, parse_graph6,
};
use pebbling::solver::{solvable, solvable_exactly_one_fast, weight_prune, FastSolver};
use pebbling::{Configuration, GoalMode, Graph, VertexId};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// A random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1),
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, extra)| {
                let g = graph_from_bits(n, &extra);
                let mut edges = g.edges();
                for (i, p) in parents.iter().enumerate() {
                    let (v, u) = (i + 1, p.index(i + 1));
                    if !g.has_edge(u, v) {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
    })
}

/// `total` pebbles dropped one at a time onto random vertices.
fn configuration(n: usize, max_total: u32) -> impl Strategy<Value = Configuration> {
    proptest::collection::vec(0..n, 0..=max_total as usize).prop_map(move |drops| {
        let mut counts = vec![0u32; n];
        for v in drops {
            counts[v] += 1;
        }
        Configuration::new(counts).unwrap()
    })
}

/// A graph, a configuration on it with at most `max_total` pebbles, and a target.
fn instance(
    max_n: usize,
    max_total: u32,
) -> impl Strategy<Value = (Graph, Configuration, VertexId)> {
    any_graph(max_n).prop_flat_map(move |g| {
        let n = g.order();
        (
            Just(g),
            configuration(n, max_total),
            (0..n).prop_map(VertexId),
        )
    })
}

fn mode() -> impl Strategy<Value = GoalMode> {
    prop_oneof![Just(GoalMode::AtLeastOne), Just(GoalMode::ExactlyOne)]
}

fn is_solvable(g: &Graph, c: &Configuration, target: VertexId, mode: GoalMode) -> bool {
    solvable(g, c, target, mode).unwrap().solvable
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn graph6_round_trips(g in any_graph(20)) {
        let text = encode_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g.clone());
        prop_assert_eq!(g.to_string(), text);
    }

    #[test]
    fn edge_list_round_trips(g in any_graph(12)) {
        prop_assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn canonical_code_ignores_labels(g in any_graph(7), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&g.relabel(&perm)), canonical_code(&g));
    }

    #[test]
    fn distances_step_by_at_most_one(g in any_graph(10), s in 0usize..10) {
        let source = VertexId(s % g.order());
        let d = g.distances_from(source).unwrap();
        prop_assert_eq!(d[source.0], Some(0));
        for (u, v) in g.edges() {
            match (d[u], d[v]) {
                (Some(a), Some(b)) => prop_assert!(a.abs_diff(b) <= 1),
                (None, None) => {}
                _ => prop_assert!(false, "edge {}-{} crosses components", u, v),
            }
        }
        for v in g.vertices() {
            if let Some(k) = d[v.0].filter(|&k| k > 0) {
                let closer = g.neighbors(v).unwrap().into_iter().any(|w| d[w.0] == Some(k - 1));
                prop_assert!(closer);
            }
        }
    }

    #[test]
    fn moves_remove_exactly_one_pebble((g, c, _) in instance(6, 12)) {
        for m in legal_moves(&g, &c).unwrap() {
            let next = apply_move(&g, &c, m).unwrap();
            prop_assert_eq!(next.total() + 1, c.total());
            prop_assert_eq!(next.get(m.source) + 2, c.get(m.source));
            prop_assert_eq!(next.get(m.destination), c.get(m.destination) + 1);
        }
    }

    #[test]
    fn witnesses_replay_to_the_goal((g, c, target) in instance(5, 9), mode in mode()) {
        let r = solvable(&g, &c, target, mode).unwrap();
        prop_assert_eq!(r.solvable, r.witness.is_some());
        if let Some(w) = r.witness {
            let end = replay(&g, &c, &w).unwrap();
            prop_assert!(mode.accepts(end.get(target)));
        }
    }

    #[test]
    fn extra_pebble_off_target_never_hurts(
        (g, c, target) in instance(5, 8).prop_filter("needs a second vertex", |(g, _, _)| g.order() >= 2),
        mode in mode(),
        shift in 1usize..5,
    ) {
        let v = VertexId((target.0 + 1 + shift % (g.order() - 1)) % g.order());
        if is_solvable(&g, &c, target, mode) {
            prop_assert!(is_solvable(&g, &c.with_added(v).unwrap(), target, mode));
        }
    }

    #[test]
    fn extra_pebble_anywhere_never_hurts_classical((g, c, target) in instance(5, 8), v in 0usize..5) {
        let v = VertexId(v % g.order());
        if is_solvable(&g, &c, target, GoalMode::AtLeastOne) {
            prop_assert!(is_solvable(&g, &c.with_added(v).unwrap(), target, GoalMode::AtLeastOne));
        }
    }

    #[test]
    fn empty_target_modes_agree((g, c, target) in instance(5, 9)) {
        let mut counts = c.into_counts();
        counts[target.0] = 0;
        let c = Configuration::new(counts).unwrap();
        prop_assert_eq!(
            is_solvable(&g, &c, target, GoalMode::AtLeastOne),
            is_solvable(&g, &c, target, GoalMode::ExactlyOne)
        );
    }

    #[test]
    fn fast_paths_agree_with_direct_search((g, c, target) in instance(6, 11)) {
        let al = is_solvable(&g, &c, target, GoalMode::AtLeastOne);
        let eo = is_solvable(&g, &c, target, GoalMode::ExactlyOne);
        let mut fast = FastSolver::new(&g, target).unwrap();
        prop_assert_eq!(fast.at_least_one(c.counts()), al);
        prop_assert_eq!(fast.exactly_one(c.counts()), eo);
        prop_assert_eq!(solvable_exactly_one_fast(&g, &c, target).unwrap(), eo);
        if weight_prune(&g, &c, target).unwrap() {
            prop_assert!(!al);
        }
    }

    #[test]
    fn crowded_target_is_solvable(g in connected_graph(6), t in 0usize..6, extra in 0u32..4, spread in proptest::collection::vec(0u32..3, 6)) {
        let target = t % g.order();
        let mut counts: Vec<u32> = spread[..g.order()].to_vec();
        counts[target] = 3 + extra;
        let c = Configuration::new(counts).unwrap();
        prop_assert!(is_solvable(&g, &c, VertexId(target), GoalMode::ExactlyOne));
    }
}

#[test]
fn compositions_are_complete_and_distinct() {
    for n in 1..=5 {
        for t in 0..=10u32 {
            let all: Vec<Configuration> = enumerate_configurations(n, t, None).collect();
            assert_eq!(
                all.len() as u128,
                configuration_count(n, t),
                "n = {n}, t = {t}"
            );
            assert!(all
                .iter()
                .all(|c| c.total() == u64::from(t) && c.order() == n));
            let distinct: HashSet<Vec<u32>> = all.iter().map(|c| c.counts().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
            assert!(all.windows(2).all(|w| w[0].counts() > w[1].counts()));
        }
    }
}

#[test]
fn pinned_compositions_match_a_filter() {
    for n in 1..=4 {
        for t in 0..=7u32 {
            for v in 0..n {
                for k in 0..=t {
                    let pinned: Vec<Vec<u32>> =
                        enumerate_configurations(n, t, Some((VertexId(v), k)))
                            .map(Configuration::into_counts)
                            .collect();
                    let filtered: Vec<Vec<u32>> = enumerate_configurations(n, t, None)
                        .map(Configuration::into_counts)
                        .filter(|c| c[v] == k)
                        .collect();
                    assert_eq!(pinned, filtered, "n = {n}, t = {t}, v = {v}, k = {k}");
                }
            }
        }
    }
}
