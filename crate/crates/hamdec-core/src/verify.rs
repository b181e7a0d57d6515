//! Independent validation and brute-force oracles.
//!
//! Everything here recomputes from raw edge sets and never trusts producer
//! bookkeeping; these checks are the artifact's ground truth. The
//! exhaustive oracles have hard size caps and error out above them rather
//! than silently sampling.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::digraph::{BipartiteDigraph, Digraph, Edge, Side, VertexId};
use crate::error::{Error, Result};
use crate::generators::{HamCycle, HamPath};

/// Hard vertex cap for exhaustive Hamilton-cycle enumeration.
pub const CYCLE_ORACLE_CAP: usize = 12;
/// Hard vertex cap for exhaustive s-t Hamilton-path counting.
pub const PATH_ORACLE_CAP: usize = 14;

/// Concrete counterexample attached to a failing check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Vertex(VertexId),
    Edge(Edge),
    Count { expected: usize, actual: usize },
}

impl core::fmt::Display for Witness {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Witness::Vertex(v) => write!(f, "vertex {v}"),
            Witness::Edge(e) => write!(f, "edge {e}"),
            Witness::Count { expected, actual } => {
                write!(f, "expected {expected}, got {actual}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<Witness>,
}

/// Per-check pass/fail report; a failing check always carries a witness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.pass)
    }

    fn ok(&mut self, name: &'static str) {
        self.checks.push(CheckResult {
            name,
            pass: true,
            witness: None,
        });
    }

    fn fail(&mut self, name: &'static str, witness: Witness) {
        self.checks.push(CheckResult {
            name,
            pass: false,
            witness: Some(witness),
        });
    }

    fn check(&mut self, name: &'static str, failure: Option<Witness>) {
        match failure {
            None => self.ok(name),
            Some(w) => self.fail(name, w),
        }
    }
}

impl core::fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for c in &self.checks {
            match (&c.pass, &c.witness) {
                (true, _) => writeln!(f, "  {}: pass", c.name)?,
                (false, Some(w)) => writeln!(f, "  {}: FAIL ({w})", c.name)?,
                (false, None) => writeln!(f, "  {}: FAIL", c.name)?,
            }
        }
        Ok(())
    }
}

fn coverage_failure(g: &BipartiteDigraph, seq: &[VertexId]) -> Option<Witness> {
    if seq.len() != g.vertex_count() {
        return Some(Witness::Count {
            expected: g.vertex_count(),
            actual: seq.len(),
        });
    }
    let mut seen_a = Bitset::new(g.n_a());
    let mut seen_b = Bitset::new(g.n_b());
    for &v in seq {
        if !g.contains_vertex(v) {
            return Some(Witness::Vertex(v));
        }
        let fresh = match v.side {
            Side::A => seen_a.insert(v.index),
            Side::B => seen_b.insert(v.index),
        };
        if !fresh {
            return Some(Witness::Vertex(v));
        }
    }
    None
}

fn alternation_failure(seq: &[VertexId], wrap: bool) -> Option<Witness> {
    for w in seq.windows(2) {
        if w[0].side == w[1].side {
            return Some(Witness::Vertex(w[1]));
        }
    }
    if wrap && seq.len() >= 2 && seq[0].side == seq[seq.len() - 1].side {
        return Some(Witness::Vertex(seq[0]));
    }
    None
}

fn edges_failure(g: &BipartiteDigraph, seq: &[VertexId], wrap: bool) -> Option<Witness> {
    let pairs = seq.len() - if wrap { 0 } else { 1 };
    for i in 0..pairs {
        let from = seq[i];
        let to = seq[(i + 1) % seq.len()];
        if !g.has_edge(from, to) {
            return Some(Witness::Edge(Edge::new(from, to)));
        }
    }
    None
}

/// Passes iff `cycle` visits every vertex of `g` exactly once, sides
/// alternate, and every consecutive (wrapping) pair is an edge of `g`.
pub fn is_ham_cycle(g: &BipartiteDigraph, cycle: &HamCycle) -> VerificationReport {
    let seq = cycle.vertices();
    let mut report = VerificationReport::default();
    report.check("covers-every-vertex-once", coverage_failure(g, seq));
    report.check("sides-alternate", alternation_failure(seq, true));
    if report.pass() {
        report.check("edges-present", edges_failure(g, seq, true));
    }
    report
}

/// Passes iff `path` visits every vertex of `g` exactly once with all
/// consecutive pairs present as edges.
pub fn is_ham_path(g: &BipartiteDigraph, path: &HamPath) -> VerificationReport {
    let seq = path.vertices();
    let mut report = VerificationReport::default();
    report.check("covers-every-vertex-once", coverage_failure(g, seq));
    report.check("sides-alternate", alternation_failure(seq, false));
    if report.pass() {
        report.check("edges-present", edges_failure(g, seq, false));
    }
    report
}

/// General-digraph variant: `order` must visit every vertex of `d` exactly
/// once with all consecutive (wrapping) edges present.
pub fn is_ham_cycle_general(d: &Digraph, order: &[usize]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let n = d.vertex_count();

    let coverage = if order.len() != n {
        Some(Witness::Count {
            expected: n,
            actual: order.len(),
        })
    } else {
        let mut seen = Bitset::new(n);
        order
            .iter()
            .find(|&&v| v >= n || !seen.insert(v))
            .map(|&v| Witness::Count {
                expected: 1,
                actual: v,
            })
    };
    report.check("covers-every-vertex-once", coverage);

    if report.pass() && n >= 2 {
        let missing = (0..n).find(|&i| !d.has_edge(order[i], order[(i + 1) % n]));
        report.check(
            "edges-present",
            missing.map(|i| Witness::Count {
                expected: order[i],
                actual: order[(i + 1) % n],
            }),
        );
    } else if n < 2 {
        report.fail(
            "edges-present",
            Witness::Count {
                expected: 2,
                actual: n,
            },
        );
    }
    report
}

/// Passes iff no directed edge appears in two of the given cycles; the
/// witness is the first duplicated edge. An empty list passes vacuously.
pub fn pairwise_edge_disjoint(cycles: &[HamCycle]) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut seen = crate::digraph::EdgeSet::new();
    let mut duplicate = None;
    'outer: for c in cycles {
        for e in c.edges() {
            if !seen.insert(e) {
                duplicate = Some(Witness::Edge(e));
                break 'outer;
            }
        }
    }
    report.check("pairwise-edge-disjoint", duplicate);
    report
}

/// Every Hamilton cycle of `g`, each reported once (sequences are rotated
/// to start at `A0`). Exhaustive backtracking; hard-capped.
pub fn all_ham_cycles(g: &BipartiteDigraph) -> Result<Vec<HamCycle>> {
    if g.vertex_count() > CYCLE_ORACLE_CAP {
        return Err(Error::OracleCapExceeded {
            vertices: g.vertex_count(),
            cap: CYCLE_ORACLE_CAP,
        });
    }
    if !g.is_balanced() || g.n_a() == 0 {
        return Ok(Vec::new());
    }
    let start = VertexId::a(0);
    let mut path = vec![start];
    let mut seen_a = Bitset::new(g.n_a());
    let mut seen_b = Bitset::new(g.n_b());
    seen_a.insert(0);
    let mut out = Vec::new();
    cycle_backtrack(g, start, &mut path, &mut seen_a, &mut seen_b, &mut out);
    Ok(out)
}

fn cycle_backtrack(
    g: &BipartiteDigraph,
    start: VertexId,
    path: &mut Vec<VertexId>,
    seen_a: &mut Bitset,
    seen_b: &mut Bitset,
    out: &mut Vec<HamCycle>,
) {
    let last = *path.last().unwrap();
    if path.len() == g.vertex_count() {
        if g.has_edge(last, start) {
            out.push(HamCycle::new(path.clone()).expect("backtracker builds valid sequences"));
        }
        return;
    }
    for next in g.neighbors(last, crate::digraph::Direction::Out) {
        let seen = match next.side {
            Side::A => &mut *seen_a,
            Side::B => &mut *seen_b,
        };
        if seen.contains(next.index) {
            continue;
        }
        seen.insert(next.index);
        path.push(next);
        cycle_backtrack(g, start, path, seen_a, seen_b, out);
        path.pop();
        match next.side {
            Side::A => seen_a.remove(next.index),
            Side::B => seen_b.remove(next.index),
        };
    }
}

/// Exhaustively computes the largest family of pairwise edge-disjoint
/// Hamilton cycles of `g`, returning its size and one witness family.
///
/// `stop_at` cuts the branch-and-bound short as soon as a family of that
/// size is found (the result is then a lower-bound witness rather than the
/// exact maximum). Pass `None` for the exact maximum.
pub fn brute_force_max_disjoint_ham_cycles(
    g: &BipartiteDigraph,
    stop_at: Option<usize>,
) -> Result<(usize, Vec<HamCycle>)> {
    let cycles = all_ham_cycles(g)?;
    if cycles.is_empty() {
        return Ok((0, Vec::new()));
    }
    let n = g.n_a();

    // Edge masks over a flat universe: A→B edges first, then B→A.
    let universe = 2 * n * n;
    let mask_of = |e: &Edge| -> usize {
        match e.from.side {
            Side::A => e.from.index * n + e.to.index,
            Side::B => n * n + e.from.index * n + e.to.index,
        }
    };
    let masks: Vec<Bitset> = cycles
        .iter()
        .map(|c| {
            let mut m = Bitset::new(universe);
            for e in c.edges() {
                m.insert(mask_of(&e));
            }
            m
        })
        .collect();

    // No family can exceed the minimum semidegree: every cycle consumes one
    // out-edge at every vertex.
    let degree_bound = g.min_max_semidegree().0;
    let target = stop_at.unwrap_or(usize::MAX).min(degree_bound);

    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut used = Bitset::new(universe);
    disjoint_family_search(&masks, 0, &mut used, &mut chosen, &mut best, target);

    let family = best.iter().map(|&i| cycles[i].clone()).collect();
    Ok((best.len(), family))
}

fn disjoint_family_search(
    masks: &[Bitset],
    from: usize,
    used: &mut Bitset,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
    target: usize,
) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    if best.len() >= target {
        return;
    }
    for i in from..masks.len() {
        // Bound: even taking every remaining cycle cannot beat the best.
        if chosen.len() + (masks.len() - i) <= best.len() {
            return;
        }
        if used.intersection_count(&masks[i]) == 0 {
            let mut next_used = used.clone();
            next_used.union_with(&masks[i]);
            chosen.push(i);
            disjoint_family_search(masks, i + 1, &mut next_used, chosen, best, target);
            chosen.pop();
            if best.len() >= target {
                return;
            }
        }
    }
}

/// Exact count of Hamilton s-t paths in `f` by backtracking; hard-capped.
pub fn enumerate_ham_st_paths(f: &BipartiteDigraph, s: VertexId, t: VertexId) -> Result<usize> {
    if f.vertex_count() > PATH_ORACLE_CAP {
        return Err(Error::OracleCapExceeded {
            vertices: f.vertex_count(),
            cap: PATH_ORACLE_CAP,
        });
    }
    f.check_vertex(s)?;
    f.check_vertex(t)?;
    if f.vertex_count() == 1 {
        return Ok(usize::from(s == t));
    }
    if s == t {
        return Ok(0);
    }
    let mut seen_a = Bitset::new(f.n_a());
    let mut seen_b = Bitset::new(f.n_b());
    match s.side {
        Side::A => seen_a.insert(s.index),
        Side::B => seen_b.insert(s.index),
    };
    let mut count = 0;
    path_count_backtrack(f, s, t, 1, &mut seen_a, &mut seen_b, &mut count);
    Ok(count)
}

fn path_count_backtrack(
    f: &BipartiteDigraph,
    current: VertexId,
    t: VertexId,
    depth: usize,
    seen_a: &mut Bitset,
    seen_b: &mut Bitset,
    count: &mut usize,
) {
    if depth == f.vertex_count() {
        if current == t {
            *count += 1;
        }
        return;
    }
    for next in f.neighbors(current, crate::digraph::Direction::Out) {
        // The sink is only allowed as the final vertex.
        if next == t && depth + 1 != f.vertex_count() {
            continue;
        }
        let seen = match next.side {
            Side::A => &mut *seen_a,
            Side::B => &mut *seen_b,
        };
        if seen.contains(next.index) {
            continue;
        }
        seen.insert(next.index);
        path_count_backtrack(f, next, t, depth + 1, seen_a, seen_b, count);
        match next.side {
            Side::A => seen_a.remove(next.index),
            Side::B => seen_b.remove(next.index),
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::GraphBuilder;
    use crate::generators::{complete_bipartite, diregular_tournament, ham_decompose_complete};

    fn four_cycle() -> BipartiteDigraph {
        BipartiteDigraph::from_edges(
            2,
            2,
            [
                Edge::new(VertexId::a(0), VertexId::b(0)),
                Edge::new(VertexId::b(0), VertexId::a(1)),
                Edge::new(VertexId::a(1), VertexId::b(1)),
                Edge::new(VertexId::b(1), VertexId::a(0)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn four_cycle_is_its_own_ham_cycle() {
        let g = four_cycle();
        let c = HamCycle::new(vec![
            VertexId::a(0),
            VertexId::b(0),
            VertexId::a(1),
            VertexId::b(1),
        ])
        .unwrap();
        assert!(is_ham_cycle(&g, &c).pass());
    }

    #[test]
    fn repeated_vertex_fails_with_witness() {
        // HamCycle::new rejects repeated vertices up front; check the
        // rejection carries the vertex.
        let err = HamCycle::new(vec![
            VertexId::a(0),
            VertexId::b(0),
            VertexId::a(0),
            VertexId::b(1),
        ])
        .unwrap_err();
        let msg = alloc::format!("{err}");
        assert!(msg.contains("A0"), "message should carry the witness: {msg}");

        // A structurally fine cycle over the wrong graph fails with the
        // missing edge as witness.
        let c = HamCycle::new(vec![
            VertexId::a(0),
            VertexId::b(0),
            VertexId::a(1),
            VertexId::b(1),
        ])
        .unwrap();
        let report = is_ham_cycle(&four_cycle(), &c);
        assert!(report.pass());
        let mut wrong = four_cycle();
        wrong.delete_edge(Edge::new(VertexId::b(1), VertexId::a(0)));
        let report = is_ham_cycle(&wrong, &c);
        assert!(!report.pass());
        assert_eq!(
            report.first_failure().unwrap().witness,
            Some(Witness::Edge(Edge::new(VertexId::b(1), VertexId::a(0))))
        );
    }

    #[test]
    fn shift_cycle_passes_on_complete_graph() {
        let g = complete_bipartite(3);
        let cycles = ham_decompose_complete(3);
        assert!(is_ham_cycle(&g, &cycles[1]).pass());
    }

    #[test]
    fn disjointness_checks() {
        let cycles = ham_decompose_complete(4);
        assert!(pairwise_edge_disjoint(&cycles).pass());

        let doubled = vec![cycles[0].clone(), cycles[0].clone()];
        let report = pairwise_edge_disjoint(&doubled);
        assert!(!report.pass());
        assert!(report.first_failure().unwrap().witness.is_some());

        assert!(pairwise_edge_disjoint(&[]).pass());
    }

    #[test]
    fn oracle_four_cycle() {
        let (count, family) = brute_force_max_disjoint_ham_cycles(&four_cycle(), None).unwrap();
        assert_eq!(count, 1);
        assert_eq!(family.len(), 1);
    }

    #[test]
    fn oracle_complete_two() {
        let g = complete_bipartite(2);
        let (count, family) = brute_force_max_disjoint_ham_cycles(&g, None).unwrap();
        assert_eq!(count, 2);
        assert!(pairwise_edge_disjoint(&family).pass());
        for c in &family {
            assert!(is_ham_cycle(&g, c).pass());
        }
    }

    #[test]
    fn oracle_tournament_n4() {
        let g = diregular_tournament(4, 3).unwrap();
        let (count, _) = brute_force_max_disjoint_ham_cycles(&g, None).unwrap();
        assert_eq!(count, 2);
    }

    #[test]
    fn oracle_cap_is_enforced() {
        let g = complete_bipartite(7);
        assert!(matches!(
            brute_force_max_disjoint_ham_cycles(&g, None),
            Err(Error::OracleCapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_ham_st_paths(&complete_bipartite(8), VertexId::a(0), VertexId::b(0)),
            Err(Error::OracleCapExceeded { .. })
        ));
    }

    #[test]
    fn path_count_single_pair() {
        let g = complete_bipartite(1);
        assert_eq!(
            enumerate_ham_st_paths(&g, VertexId::a(0), VertexId::b(0)).unwrap(),
            1
        );
    }

    #[test]
    fn path_count_complete_two() {
        let g = complete_bipartite(2);
        let count = enumerate_ham_st_paths(&g, VertexId::a(0), VertexId::b(1)).unwrap();
        // a0 b0 a1 b1 is the only alternating order from a0 to b1.
        assert_eq!(count, 1);
        assert!(count >= 1);
    }

    #[test]
    fn path_count_detects_absence() {
        // D_{2,2} minus (b0, a1): the single candidate ordering
        // a0 b0 a1 b1 is broken, so no a0-to-b1 Hamilton path remains.
        let mut b = GraphBuilder::new(2, 2);
        for (f, t) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            b.add_edge(VertexId::a(f), VertexId::b(t)).unwrap();
        }
        b.add_edge(VertexId::b(0), VertexId::a(0)).unwrap();
        b.add_edge(VertexId::b(1), VertexId::a(0)).unwrap();
        b.add_edge(VertexId::b(1), VertexId::a(1)).unwrap();
        let g = b.build();
        assert_eq!(
            enumerate_ham_st_paths(&g, VertexId::a(0), VertexId::b(1)).unwrap(),
            0
        );
    }

    #[test]
    fn general_cycle_check() {
        let mut d = Digraph::new(3);
        d.insert_edge(0, 1);
        d.insert_edge(1, 2);
        d.insert_edge(2, 0);
        assert!(is_ham_cycle_general(&d, &[0, 1, 2]).pass());
        assert!(!is_ham_cycle_general(&d, &[0, 2, 1]).pass());
        assert!(!is_ham_cycle_general(&d, &[0, 1]).pass());
    }
}
