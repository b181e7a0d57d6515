//! End-to-end runs of the decomposition pipeline on mid-size inputs,
//! checking soundness of everything emitted.

use hamdec_core::digraph::EdgeSet;
use hamdec_core::generators::{
    complete_bipartite, diregular_tournament, random_regular_bipartite_digraph,
};
use hamdec_core::pipeline::{decompose, DecompositionConfig, Mode};
use hamdec_core::verify::{is_ham_cycle, pairwise_edge_disjoint};
use hamdec_core::BipartiteDigraph;

fn assert_sound(g: &BipartiteDigraph, result: &hamdec_core::DecompositionResult) {
    for cycle in &result.cycles {
        let report = is_ham_cycle(g, cycle);
        assert!(report.pass(), "{report}");
    }
    assert!(pairwise_edge_disjoint(&result.cycles).pass());
    // Accounting identity via strict removal.
    let used: EdgeSet = result.cycles.iter().flat_map(|c| c.edges()).collect();
    let residual = g.remove_edges(&used).unwrap();
    assert_eq!(residual.edge_count(), result.leftover_edges());
    assert_eq!(
        result.cycles.len() * 2 * g.n_a() + result.leftover_edges(),
        g.edge_count()
    );
}

#[test]
fn greedy_full_decomposition_of_complete_graph() {
    let g = complete_bipartite(8);
    let cfg = DecompositionConfig::new(Mode::Greedy, 42);
    let result = decompose(&g, &cfg).unwrap();
    assert_sound(&g, &result);
    // Dense complete inputs should decompose fully or nearly so.
    assert!(
        result.cycles.len() >= 6,
        "greedy found only {} of 8",
        result.cycles.len()
    );
}

#[test]
fn greedy_on_tournament_peels_many_cycles() {
    let g = diregular_tournament(16, 5).unwrap();
    let cfg = DecompositionConfig::new(Mode::Greedy, 5);
    let result = decompose(&g, &cfg).unwrap();
    assert_sound(&g, &result);
    assert!(
        result.cycles.len() >= 4,
        "only {} cycles from d = 8",
        result.cycles.len()
    );
    // Residual regularity: after k removals every semidegree is d - k.
    let used: EdgeSet = result.cycles.iter().flat_map(|c| c.edges()).collect();
    let residual = g.remove_edges(&used).unwrap();
    let d_left = 8 - result.cycles.len();
    assert_eq!(residual.min_max_semidegree(), (d_left, d_left));
}

#[test]
fn practical_mode_on_regular_input_is_sound_and_reports() {
    let g = random_regular_bipartite_digraph(40, 24, 7).unwrap();
    let mut cfg = DecompositionConfig::new(Mode::Practical, 7);
    cfg.k = Some(2);
    let result = decompose(&g, &cfg).unwrap();
    assert_sound(&g, &result);

    let stats = &result.stats;
    assert_eq!(stats.n, 40);
    assert_eq!(stats.d, 24);
    assert!(stats.plan_report.is_some());
    let plan = stats.plan_report.as_ref().unwrap();
    assert!(plan.structural_pass(), "{plan:#?}");
    assert_eq!(stats.cover_stats.len(), stats.per_subgraph.len());
    assert_eq!(stats.stitch_attempts, stats.stitch_successes + stats.stitch_failures);
    assert!(stats.achieved_fraction >= 0.0 && stats.achieved_fraction <= 1.0);
}

#[test]
fn strict_mode_on_tournament_is_sound_and_explains_itself() {
    let g = diregular_tournament(20, 1).unwrap();
    let cfg = DecompositionConfig::new(Mode::Strict, 1);
    let result = decompose(&g, &cfg).unwrap();
    assert_sound(&g, &result);
    // c = 1/2 sits outside the structured hypothesis.
    assert!(!result.stats.hypothesis_ok);
    if result.cycles.is_empty() {
        assert!(result.stats.failure.is_some());
    }
}

#[test]
fn seeds_are_reproducible() {
    let g = random_regular_bipartite_digraph(20, 12, 3).unwrap();
    let cfg = DecompositionConfig::new(Mode::Greedy, 11);
    let a = decompose(&g, &cfg).unwrap();
    let b = decompose(&g, &cfg).unwrap();
    assert_eq!(a.cycles, b.cycles);
}
