//! Property-based invariants over randomly generated graphs.

use hamdec_core::digraph::{BipartiteDigraph, Edge, EdgeSet, Side, VertexId, VertexSet};
use hamdec_core::generators::{complete_bipartite, ham_decompose_complete, ham_paths_complete};
use hamdec_core::matching::{extract_matching_collection, max_matching, BipartiteView, MatchingThresholds};
use hamdec_core::pathcover::{build_path_covers, PathCoverConfig};
use hamdec_core::verify;

use proptest::prelude::*;
use std::collections::BTreeMap;

/// Random bipartite digraph on sides of size `n_a`, `n_b` from an edge
/// inclusion mask.
fn graph_strategy(max_side: usize) -> impl Strategy<Value = BipartiteDigraph> {
    (1..=max_side, 1..=max_side)
        .prop_flat_map(|(na, nb)| {
            let universe = 2 * na * nb;
            (
                Just(na),
                Just(nb),
                proptest::collection::vec(proptest::bool::ANY, universe),
            )
        })
        .prop_map(|(na, nb, mask)| {
            let mut g = hamdec_core::digraph::GraphBuilder::new(na, nb);
            let mut at = 0;
            for i in 0..na {
                for j in 0..nb {
                    if mask[at] {
                        g.add_edge(VertexId::a(i), VertexId::b(j)).unwrap();
                    }
                    at += 1;
                    if mask[at] {
                        g.add_edge(VertexId::b(j), VertexId::a(i)).unwrap();
                    }
                    at += 1;
                }
            }
            g.build()
        })
}

proptest! {
    #[test]
    fn degree_sums_count_edges(g in graph_strategy(6)) {
        let out_a: usize = (0..g.n_a()).map(|i| g.out_degree(VertexId::a(i))).sum();
        let in_b: usize = (0..g.n_b()).map(|j| g.in_degree(VertexId::b(j))).sum();
        let ab_edges = g.edges().filter(|e| e.from.side == Side::A).count();
        prop_assert_eq!(out_a, ab_edges);
        prop_assert_eq!(in_b, ab_edges);

        let out_b: usize = (0..g.n_b()).map(|j| g.out_degree(VertexId::b(j))).sum();
        prop_assert_eq!(ab_edges + out_b, g.edge_count());
    }

    #[test]
    fn induced_mapping_reproduces_inside_edges(
        g in graph_strategy(6),
        bits in proptest::collection::vec(proptest::bool::ANY, 12),
    ) {
        let mut s = VertexSet::new(g.n_a(), g.n_b());
        for (pos, v) in g.vertices().enumerate() {
            if bits[pos % bits.len()] {
                s.insert(v);
            }
        }
        let induced = g.induced(&s);
        let via_mapping: EdgeSet = induced.parent_edges().collect();
        let direct: EdgeSet = g
            .edges()
            .filter(|e| s.contains(e.from) && s.contains(e.to))
            .collect();
        prop_assert_eq!(via_mapping, direct);
    }

    #[test]
    fn remove_then_readd_round_trips(g in graph_strategy(6), selector in any::<u64>()) {
        // Remove a pseudo-random subset of edges, then re-add them.
        let all: Vec<Edge> = g.edges().collect();
        let removed: EdgeSet = all
            .iter()
            .enumerate()
            .filter(|(i, _)| selector >> (i % 64) & 1 == 1)
            .map(|(_, e)| *e)
            .collect();
        let stripped = g.remove_edges(&removed).unwrap();
        prop_assert_eq!(stripped.edge_count() + removed.len(), g.edge_count());

        let mut rebuilt: EdgeSet = stripped.edges().collect();
        for e in &removed {
            rebuilt.insert(*e);
        }
        let original: EdgeSet = g.edges().collect();
        prop_assert_eq!(rebuilt, original);
    }

    #[test]
    fn shift_decomposition_is_exact_partition(n in 1usize..24) {
        let cycles = ham_decompose_complete(n);
        prop_assert_eq!(cycles.len(), n);
        let mut counts: BTreeMap<Edge, usize> = BTreeMap::new();
        for c in &cycles {
            for e in c.edges() {
                *counts.entry(e).or_default() += 1;
            }
        }
        prop_assert_eq!(counts.len(), 2 * n * n);
        prop_assert!(counts.values().all(|&k| k == 1));

        let host = complete_bipartite(n);
        for c in &cycles {
            prop_assert!(verify::is_ham_cycle(&host, c).pass());
        }
    }

    #[test]
    fn path_family_members_validate(n in 2usize..12, seed in any::<u64>()) {
        let host = complete_bipartite(n);
        let paths = ham_paths_complete(n, seed).unwrap();
        prop_assert_eq!(paths.len(), n);
        let mut seen = EdgeSet::new();
        for p in &paths {
            prop_assert!(verify::is_ham_path(&host, p).pass());
            prop_assert_eq!(p.start().side, Side::B);
            for e in p.edges() {
                prop_assert!(seen.insert(e), "paths share an edge");
            }
        }
    }

    #[test]
    fn matching_is_vertex_disjoint_and_maximal_on_views(g in graph_strategy(6)) {
        let tails: Vec<VertexId> = (0..g.n_a()).map(VertexId::a).collect();
        let heads: Vec<VertexId> = (0..g.n_b()).map(VertexId::b).collect();
        let view = BipartiteView::from_graph(&g, tails, heads);
        let m = max_matching(&view);
        let mut froms: Vec<VertexId> = m.edges().iter().map(|e| e.from).collect();
        let mut tos: Vec<VertexId> = m.edges().iter().map(|e| e.to).collect();
        froms.sort_unstable();
        froms.dedup();
        tos.sort_unstable();
        tos.dedup();
        prop_assert_eq!(froms.len(), m.len());
        prop_assert_eq!(tos.len(), m.len());
        // No augmenting edge between two unmatched vertices may remain.
        for e in g.edges().filter(|e| e.from.side == Side::A) {
            let from_free = !m.edges().iter().any(|me| me.from == e.from);
            let to_free = !m.edges().iter().any(|me| me.to == e.to);
            prop_assert!(!(from_free && to_free), "matching not maximal at {}", e);
        }
    }

    #[test]
    fn extraction_usage_counters_match_union_degrees(seed in any::<u64>(), d in 1usize..5) {
        let n = 6;
        let g = hamdec_core::generators::random_regular_bipartite_digraph(n, d, seed).unwrap();
        let view = BipartiteView::from_graph(
            &g,
            (0..n).map(VertexId::a).collect(),
            (0..n).map(VertexId::b).collect(),
        );
        let coll =
            extract_matching_collection(&view, d, n, &MatchingThresholds::practical()).unwrap();
        prop_assert!(coll.pairwise_edge_disjoint());
        // usage counter equals the union-graph degree at every vertex.
        let mut union_deg: BTreeMap<VertexId, usize> = BTreeMap::new();
        for m in &coll.matchings {
            for e in m.edges() {
                *union_deg.entry(e.from).or_default() += 1;
                *union_deg.entry(e.to).or_default() += 1;
            }
        }
        for (v, &u) in &coll.usage {
            prop_assert_eq!(union_deg.get(v).copied().unwrap_or(0), u);
        }
    }

    #[test]
    fn covers_partition_vertices(seed in any::<u64>(), d in 2usize..6) {
        let n = 8;
        let h = hamdec_core::generators::random_regular_bipartite_digraph(n, d, seed).unwrap();
        let cfg = PathCoverConfig::practical(2);
        let (covers, stats) = build_path_covers(&h, d, &cfg, seed ^ 0x5eed).unwrap();
        prop_assert!(stats.pairwise_edge_disjoint);
        for cover in &covers {
            let mut hits: BTreeMap<VertexId, usize> = BTreeMap::new();
            for path in cover.paths() {
                for &v in path.iter() {
                    *hits.entry(v).or_default() += 1;
                }
            }
            prop_assert_eq!(hits.len(), h.vertex_count());
            prop_assert!(hits.values().all(|&k| k == 1));
            prop_assert_eq!(cover.size(), 2 * n - cover.edge_count());
        }
    }
}

#[test]
fn cell_degree_deviations_concentrate_over_thirty_seeds() {
    // Statistical invariant of the equipartition sampling: the degree of
    // a vertex into a combined cell deviates from its mean d|S|/2n by far
    // less than 2√(s·ln n) on average, with at least 95% of all samples
    // inside the bound.
    use hamdec_core::bitset::Bitset;
    use hamdec_core::digraph::Direction;
    use hamdec_core::partition::random_equipartitions;

    let n = 200;
    let d = 120;
    let g = hamdec_core::generators::random_regular_bipartite_digraph(n, d, 77).unwrap();
    let k = 2usize;
    let s = n as f64 / (k * k) as f64;
    let bound = 2.0 * (s * (n as f64).ln()).sqrt();

    let mut total = 0usize;
    let mut within = 0usize;
    let mut dev_sum = 0.0f64;
    for seed in 0..30u64 {
        let equi = random_equipartitions(n, k, seed).unwrap();
        for (pa, pb) in equi.parts_a.iter().zip(&equi.parts_b) {
            for (cell_a, cell_b) in pa.iter().zip(pb) {
                let set_a = Bitset::from_indices(n, cell_a.iter().copied());
                let set_b = Bitset::from_indices(n, cell_b.iter().copied());
                let cell_size = (cell_a.len() + cell_b.len()) as f64;
                let mean = d as f64 * cell_size / (2.0 * n as f64);
                for v in g.vertices() {
                    let opposite = match v.side {
                        Side::A => &set_b,
                        Side::B => &set_a,
                    };
                    for dir in [Direction::Out, Direction::In] {
                        let deg = g.row(v, dir).intersection_count(opposite) as f64;
                        let dev = (deg - mean).abs();
                        total += 1;
                        dev_sum += dev;
                        if dev <= bound {
                            within += 1;
                        }
                    }
                }
            }
        }
    }
    let mean_dev = dev_sum / total as f64;
    assert!(
        within as f64 >= 0.95 * total as f64,
        "only {within}/{total} samples within the bound"
    );
    assert!(
        mean_dev < bound / 2.0,
        "mean deviation {mean_dev:.2} not well below bound {bound:.2}"
    );
}

#[test]
fn greedy_never_beats_the_oracle_on_small_instances() {
    // Oracle consistency: on every instance small enough to brute force,
    // greedy reports at most the oracle's maximum.
    use hamdec_core::pipeline::{decompose, DecompositionConfig, Mode};
    for seed in 0..6u64 {
        let g = hamdec_core::generators::diregular_tournament(4, seed).unwrap();
        let (max, _) = verify::brute_force_max_disjoint_ham_cycles(&g, None).unwrap();
        let result = decompose(&g, &DecompositionConfig::new(Mode::Greedy, seed)).unwrap();
        assert!(result.cycles.len() <= max);
        assert_eq!(result.cycles.len(), max, "greedy should reach 2 here");
    }
    for n in [1usize, 2, 3] {
        let g = complete_bipartite(n);
        let (max, _) = verify::brute_force_max_disjoint_ham_cycles(&g, None).unwrap();
        assert_eq!(max, n);
        let result = decompose(&g, &DecompositionConfig::new(Mode::Greedy, 9)).unwrap();
        assert!(result.cycles.len() <= max);
    }
}
