//! Bipartite maximum matching and edge-disjoint matching-collection
//! extraction.
//!
//! A [`BipartiteView`] is a one-directional slice of a host graph: all
//! edges run from a block of tails to a block of heads on the opposite
//! side. The path-cover stage repeatedly extracts near-perfect matchings
//! from such views and chains them into path covers.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::digraph::{BipartiteDigraph, Direction, Edge, VertexId};
use crate::error::{Error, Result};

const UNMATCHED: usize = usize::MAX;

/// Directed edge set from a block of tail vertices to a block of head
/// vertices on the opposite side, stored over block-local indices.
#[derive(Debug, Clone)]
pub struct BipartiteView {
    tails: Vec<VertexId>,
    heads: Vec<VertexId>,
    adj: Vec<Bitset>,
}

impl BipartiteView {
    /// Empty view over the given blocks. All tails must share one side and
    /// all heads the other.
    pub fn new(tails: Vec<VertexId>, heads: Vec<VertexId>) -> Self {
        if let (Some(t0), Some(h0)) = (tails.first(), heads.first()) {
            assert!(t0.side != h0.side, "tails and heads must be on opposite sides");
        }
        debug_assert!(tails.windows(2).all(|w| w[0].side == w[1].side));
        debug_assert!(heads.windows(2).all(|w| w[0].side == w[1].side));
        let adj = vec![Bitset::new(heads.len()); tails.len()];
        BipartiteView { tails, heads, adj }
    }

    /// The edges of `g` running from `tails` into `heads`.
    pub fn from_graph(g: &BipartiteDigraph, tails: Vec<VertexId>, heads: Vec<VertexId>) -> Self {
        let mut view = BipartiteView::new(tails, heads);
        let mut head_local = BTreeMap::new();
        for (hi, &h) in view.heads.iter().enumerate() {
            head_local.insert(h, hi);
        }
        for ti in 0..view.tails.len() {
            let t = view.tails[ti];
            for nb in g.neighbors(t, Direction::Out) {
                if let Some(&hi) = head_local.get(&nb) {
                    view.adj[ti].insert(hi);
                }
            }
        }
        view
    }

    pub fn add_edge_local(&mut self, tail: usize, head: usize) -> bool {
        self.adj[tail].insert(head)
    }

    pub fn tails(&self) -> &[VertexId] {
        &self.tails
    }

    pub fn heads(&self) -> &[VertexId] {
        &self.heads
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Bitset::count).sum()
    }

    pub fn tail_degree(&self, tail: usize) -> usize {
        self.adj[tail].count()
    }

    pub fn head_degree(&self, head: usize) -> usize {
        self.adj.iter().filter(|row| row.contains(head)).count()
    }

    /// `(δ, Δ)` over all block vertices, degrees taken in the view.
    pub fn degree_range(&self) -> (usize, usize) {
        let mut lo = usize::MAX;
        let mut hi = 0;
        for t in 0..self.tails.len() {
            let d = self.tail_degree(t);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        let mut head_deg = vec![0usize; self.heads.len()];
        for row in &self.adj {
            for h in row.iter() {
                head_deg[h] += 1;
            }
        }
        for &d in &head_deg {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        if lo == usize::MAX {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

}

/// A set of same-direction, vertex-disjoint edges between two blocks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Pairwise edge-disjoint matchings over one block pair, with per-vertex
/// usage counters (`usage[v]` = number of matchings containing `v`).
#[derive(Debug, Clone)]
pub struct MatchingCollection {
    pub matchings: Vec<Matching>,
    pub usage: BTreeMap<VertexId, usize>,
    /// Set when the collection misses its size/count/degree targets.
    pub degraded: bool,
    pub diagnostic: Option<String>,
}

impl MatchingCollection {
    /// Minimum usage counter over the given block vertices; vertices in no
    /// matching count as zero. Because the matchings are edge-disjoint this
    /// equals the minimum degree of the union graph.
    pub fn union_min_degree(&self, block: &[VertexId]) -> usize {
        block
            .iter()
            .map(|v| self.usage.get(v).copied().unwrap_or(0))
            .min()
            .unwrap_or(0)
    }

    /// Re-checks pairwise edge-disjointness from the raw edge lists.
    pub fn pairwise_edge_disjoint(&self) -> bool {
        let mut seen = crate::digraph::EdgeSet::new();
        self.matchings
            .iter()
            .flat_map(|m| m.edges())
            .all(|e| seen.insert(*e))
    }
}

/// Slack exponents controlling the extraction targets. A slack term with
/// exponent `e > 0` evaluates to `m^e`; exponent `0` means no slack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingThresholds {
    pub count_slack_exp: f64,
    pub size_slack_exp: f64,
    pub degree_slack_exp: f64,
    /// Exponent of the max-degree window `Δ ≤ r + r^w` checked on entry.
    pub window_slack_exp: f64,
    /// When false the degree window is recorded but not enforced.
    pub enforce_window: bool,
}

impl MatchingThresholds {
    /// The asymptotic defaults: slacks `m^{24/25}`, `m^{7/8}`, `m^{5/6}`.
    pub fn paper() -> Self {
        MatchingThresholds {
            count_slack_exp: 24.0 / 25.0,
            size_slack_exp: 7.0 / 8.0,
            degree_slack_exp: 5.0 / 6.0,
            window_slack_exp: 2.0 / 3.0,
            enforce_window: true,
        }
    }

    /// Zero slack everywhere: demands `r` matchings of size `m` with union
    /// degree `r`. Only regular complete-ish blocks meet this.
    pub fn exact() -> Self {
        MatchingThresholds {
            count_slack_exp: 0.0,
            size_slack_exp: 0.0,
            degree_slack_exp: 0.0,
            window_slack_exp: 2.0 / 3.0,
            enforce_window: true,
        }
    }

    /// Paper slacks with the entry window recorded instead of enforced;
    /// what the pipeline's practical mode uses on rough random blocks.
    pub fn practical() -> Self {
        MatchingThresholds {
            enforce_window: false,
            ..MatchingThresholds::paper()
        }
    }

    fn slack(base: f64, exp: f64) -> f64 {
        if exp <= 0.0 {
            0.0
        } else {
            libm::pow(base, exp)
        }
    }

    /// `(count, size, union-degree)` targets for parameters `(r, m)`.
    pub fn targets(&self, r: usize, m: usize) -> (f64, f64, f64) {
        let (r, m) = (r as f64, m as f64);
        let count = r - Self::slack(m, self.count_slack_exp);
        let size = m - Self::slack(m, self.size_slack_exp);
        let degree =
            r - Self::slack(m, self.count_slack_exp) - 2.0 * Self::slack(m, self.degree_slack_exp);
        (count, size, degree)
    }
}

/// Maximum-cardinality matching of the view (Hopcroft–Karp).
pub fn max_matching(view: &BipartiteView) -> Matching {
    let match_of_tail = hopcroft_karp(&view.adj, view.heads.len());
    matching_from_assignment(view, &match_of_tail)
}

/// Maximum matching with seeded-random augmentation order, for callers
/// that need to sample several distinct maximum matchings.
pub fn random_max_matching(view: &BipartiteView, rng: &mut impl rand::Rng) -> Matching {
    let n_tails = view.tails.len();
    let n_heads = view.heads.len();
    let mut match_t = vec![UNMATCHED; n_tails];
    let mut match_h = vec![UNMATCHED; n_heads];
    let mut order: Vec<usize> = (0..n_tails).collect();
    rand::seq::SliceRandom::shuffle(order.as_mut_slice(), rng);
    for &t in &order {
        let mut visited = Bitset::new(n_heads);
        kuhn_random(t, &view.adj, &mut visited, &mut match_t, &mut match_h, rng);
    }
    matching_from_assignment(view, &match_t)
}

fn kuhn_random(
    t: usize,
    adj: &[Bitset],
    visited: &mut Bitset,
    match_t: &mut [usize],
    match_h: &mut [usize],
    rng: &mut impl rand::Rng,
) -> bool {
    let mut heads: Vec<usize> = adj[t].iter().filter(|&h| !visited.contains(h)).collect();
    rand::seq::SliceRandom::shuffle(heads.as_mut_slice(), rng);
    for h in heads {
        visited.insert(h);
        let t2 = match_h[h];
        if t2 == UNMATCHED || kuhn_random(t2, adj, visited, match_t, match_h, rng) {
            match_t[t] = h;
            match_h[h] = t;
            return true;
        }
    }
    false
}

fn matching_from_assignment(view: &BipartiteView, match_of_tail: &[usize]) -> Matching {
    let edges = match_of_tail
        .iter()
        .enumerate()
        .filter(|&(_, &h)| h != UNMATCHED)
        .map(|(t, &h)| Edge::new(view.tails[t], view.heads[h]))
        .collect();
    Matching { edges }
}

/// Layered BFS/DFS phases; `adj` maps tail index to head-index bitset.
/// Returns the matched head of each tail (or `UNMATCHED`).
fn hopcroft_karp(adj: &[Bitset], n_heads: usize) -> Vec<usize> {
    let n_tails = adj.len();
    let mut match_t = vec![UNMATCHED; n_tails];
    let mut match_h = vec![UNMATCHED; n_heads];

    loop {
        // BFS: layer tails by shortest alternating distance from any free tail.
        let mut dist = vec![usize::MAX; n_tails];
        let mut queue: alloc::collections::VecDeque<usize> = alloc::collections::VecDeque::new();
        for t in 0..n_tails {
            if match_t[t] == UNMATCHED {
                dist[t] = 0;
                queue.push_back(t);
            }
        }
        let mut reachable_free_head = false;
        while let Some(t) = queue.pop_front() {
            for h in adj[t].iter() {
                match match_h[h] {
                    UNMATCHED => reachable_free_head = true,
                    t2 => {
                        if dist[t2] == usize::MAX {
                            dist[t2] = dist[t] + 1;
                            queue.push_back(t2);
                        }
                    }
                }
            }
        }
        if !reachable_free_head {
            return match_t;
        }

        for t in 0..n_tails {
            if match_t[t] == UNMATCHED {
                hk_dfs(t, adj, &mut dist, &mut match_t, &mut match_h);
            }
        }
    }
}

fn hk_dfs(
    t: usize,
    adj: &[Bitset],
    dist: &mut [usize],
    match_t: &mut [usize],
    match_h: &mut [usize],
) -> bool {
    let d = dist[t];
    dist[t] = usize::MAX;
    for h in adj[t].iter() {
        let t2 = match_h[h];
        if t2 == UNMATCHED || (dist[t2] == d + 1 && hk_dfs(t2, adj, dist, match_t, match_h)) {
            match_t[t] = h;
            match_h[h] = t;
            return true;
        }
    }
    false
}

/// A set `X' ⊆ tails` with `|N(X')| < |X'|`, iff no matching saturates the
/// tails. Extracted from the final failed augmenting frontier: the tails
/// reachable from an unmatched tail by alternating paths have all their
/// neighbours matched back into the same set.
pub fn hall_violator(view: &BipartiteView) -> Option<Vec<VertexId>> {
    let match_of_tail = hopcroft_karp(&view.adj, view.heads.len());
    if match_of_tail.iter().all(|&h| h != UNMATCHED) {
        return None;
    }
    let mut match_of_head = vec![UNMATCHED; view.heads.len()];
    for (t, &h) in match_of_tail.iter().enumerate() {
        if h != UNMATCHED {
            match_of_head[h] = t;
        }
    }

    let mut in_x = Bitset::new(view.tails.len());
    let mut stack: Vec<usize> = (0..view.tails.len())
        .filter(|&t| match_of_tail[t] == UNMATCHED)
        .collect();
    for &t in &stack {
        in_x.insert(t);
    }
    let mut seen_heads = Bitset::new(view.heads.len());
    while let Some(t) = stack.pop() {
        for h in view.adj[t].iter() {
            if seen_heads.insert(h) {
                let t2 = match_of_head[h];
                debug_assert!(t2 != UNMATCHED, "free head reachable from free tail");
                if in_x.insert(t2) {
                    stack.push(t2);
                }
            }
        }
    }
    debug_assert!(seen_heads.count() < in_x.count());
    Some(in_x.iter().map(|t| view.tails[t]).collect())
}

/// Repeatedly extracts maximum matchings from the residual view until they
/// fall below the size target, yielding a collection of pairwise
/// edge-disjoint matchings.
///
/// `r` is the recorded degree floor of the view and `m` the nominal block
/// size; the targets derive from `thresholds.targets(r, m)`. Nearly
/// balanced views (sides differing by one) are handled by adding an
/// auxiliary vertex on the small side, adjacent to the min-degree-many
/// lowest-index vertices opposite, and stripping its edges from every
/// output matching.
///
/// A collection that misses its targets is returned flagged `degraded`
/// with a diagnostic rather than discarded; callers re-verify end to end.
pub fn extract_matching_collection(
    view: &BipartiteView,
    r: usize,
    m: usize,
    thresholds: &MatchingThresholds,
) -> Result<MatchingCollection> {
    let (delta, max_deg) = view.degree_range();
    let window_hi =
        r as f64 + MatchingThresholds::slack(r as f64, thresholds.window_slack_exp.max(0.0));
    let mut window_note = None;
    if delta < r || (max_deg as f64) > window_hi + 1e-9 {
        let (vertex, degree) = worst_window_offender(view, r, window_hi);
        if thresholds.enforce_window {
            return Err(Error::DegreeWindow {
                vertex,
                degree,
                low: r,
                high: libm::floor(window_hi) as usize,
            });
        }
        window_note = Some(format!(
            "degree window [{r}, {window_hi:.1}] not met (vertex {vertex} has degree {degree})"
        ));
    }

    let imbalance = view.tails.len() as isize - view.heads.len() as isize;
    if imbalance.abs() > 1 {
        return Err(Error::Domain(format!(
            "view blocks differ by {} vertices; only balanced or nearly balanced blocks are supported",
            imbalance.abs()
        )));
    }

    // Auxiliary padding for nearly balanced blocks. The auxiliary vertex
    // exists only as an extra local index; it never maps to a VertexId and
    // its edges are stripped from every output matching.
    let mut rows: Vec<Bitset> = view.adj.clone();
    let mut head_count = view.heads.len();
    let aux_head = if imbalance == 1 {
        let aux = head_count;
        head_count += 1;
        for row in &mut rows {
            *row = grow_universe(row, head_count);
        }
        for row in rows.iter_mut().take(delta) {
            row.insert(aux);
        }
        Some(aux)
    } else {
        None
    };
    let aux_tail = if imbalance == -1 {
        let mut row = Bitset::new(head_count);
        for h in 0..delta.min(head_count) {
            row.insert(h);
        }
        rows.push(row);
        Some(rows.len() - 1)
    } else {
        None
    };

    let (count_target, size_target, degree_target) = thresholds.targets(r, m);
    let size_floor = size_target.max(1.0);

    let mut matchings: Vec<Matching> = Vec::new();
    loop {
        let assignment = hopcroft_karp(&rows, head_count);
        let real_size = assignment
            .iter()
            .enumerate()
            .filter(|&(t, &h)| h != UNMATCHED && Some(h) != aux_head && Some(t) != aux_tail)
            .count();
        if (real_size as f64) < size_floor {
            break;
        }
        for (t, &h) in assignment.iter().enumerate() {
            if h != UNMATCHED {
                rows[t].remove(h);
            }
        }

        let edges: Vec<Edge> = assignment
            .iter()
            .enumerate()
            .filter(|&(t, &h)| h != UNMATCHED && Some(h) != aux_head && Some(t) != aux_tail)
            .map(|(t, &h)| Edge::new(view.tails[t], view.heads[h]))
            .collect();
        matchings.push(Matching { edges });
    }

    let mut usage: BTreeMap<VertexId, usize> = BTreeMap::new();
    for matching in &matchings {
        for e in matching.edges() {
            *usage.entry(e.from).or_default() += 1;
            *usage.entry(e.to).or_default() += 1;
        }
    }

    let block: Vec<VertexId> = view.tails.iter().chain(&view.heads).copied().collect();
    let union_delta = block
        .iter()
        .map(|v| usage.get(v).copied().unwrap_or(0))
        .min()
        .unwrap_or(0);

    let mut problems: Vec<String> = window_note.into_iter().collect();
    if (matchings.len() as f64) < count_target {
        problems.push(format!(
            "{} matchings, target {count_target:.2}",
            matchings.len()
        ));
    }
    if (union_delta as f64) < degree_target {
        problems.push(format!(
            "union min degree {union_delta}, target {degree_target:.2}"
        ));
    }

    Ok(MatchingCollection {
        matchings,
        usage,
        degraded: !problems.is_empty(),
        diagnostic: if problems.is_empty() {
            None
        } else {
            Some(problems.join("; "))
        },
    })
}

fn grow_universe(row: &Bitset, new_len: usize) -> Bitset {
    let mut grown = Bitset::new(new_len);
    for i in row.iter() {
        grown.insert(i);
    }
    grown
}

fn worst_window_offender(view: &BipartiteView, r: usize, hi: f64) -> (VertexId, usize) {
    let mut worst = (view.tails.first().copied().unwrap_or(VertexId::a(0)), 0usize);
    let mut worst_gap = f64::MIN;
    let mut consider = |v: VertexId, d: usize| {
        let gap = if d < r {
            r as f64 - d as f64
        } else {
            d as f64 - hi
        };
        if gap > worst_gap {
            worst_gap = gap;
            worst = (v, d);
        }
    };
    for (t, &v) in view.tails.iter().enumerate() {
        consider(v, view.tail_degree(t));
    }
    for (h, &v) in view.heads.iter().enumerate() {
        consider(v, view.head_degree(h));
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::random_regular_bipartite_digraph;
    use crate::VertexId;

    fn complete_view(nt: usize, nh: usize) -> BipartiteView {
        let tails = (0..nt).map(VertexId::a).collect();
        let heads = (0..nh).map(VertexId::b).collect();
        let mut view = BipartiteView::new(tails, heads);
        for t in 0..nt {
            for h in 0..nh {
                view.add_edge_local(t, h);
            }
        }
        view
    }

    fn regular_view(n: usize, d: usize, seed: u64) -> BipartiteView {
        let g = random_regular_bipartite_digraph(n, d, seed).unwrap();
        BipartiteView::from_graph(
            &g,
            (0..n).map(VertexId::a).collect(),
            (0..n).map(VertexId::b).collect(),
        )
    }

    /// Exhaustive Hall check: every tail subset has enough neighbours.
    fn hall_holds(view: &BipartiteView) -> bool {
        let nt = view.tails().len();
        assert!(nt <= 16);
        (1u32..(1 << nt)).all(|mask| {
            let mut nbhd = Bitset::new(view.heads().len());
            let mut size = 0;
            for t in 0..nt {
                if mask & (1 << t) != 0 {
                    size += 1;
                    nbhd.union_with(&view.adj[t]);
                }
            }
            nbhd.count() >= size
        })
    }

    #[test]
    fn matching_on_complete_two_by_two() {
        assert_eq!(max_matching(&complete_view(2, 2)).len(), 2);
    }

    #[test]
    fn matching_on_star() {
        let mut view = BipartiteView::new(
            vec![VertexId::a(0)],
            vec![VertexId::b(0), VertexId::b(1), VertexId::b(2)],
        );
        for h in 0..3 {
            view.add_edge_local(0, h);
        }
        assert_eq!(max_matching(&view).len(), 1);
    }

    #[test]
    fn regular_block_has_perfect_matching() {
        let view = regular_view(6, 3, 9);
        assert!(hall_holds(&view), "regular bipartite blocks satisfy Hall");
        let m = max_matching(&view);
        assert_eq!(m.len(), 6);
        // Vertex-disjointness of the returned edges.
        let mut tails_seen = crate::digraph::EdgeSet::new();
        for e in m.edges() {
            assert!(tails_seen.insert(*e));
        }
    }

    #[test]
    fn no_violator_on_complete_or_regular_blocks() {
        assert!(hall_violator(&complete_view(3, 3)).is_none());
        let view = regular_view(5, 3, 21);
        assert!(hall_holds(&view));
        assert!(hall_violator(&view).is_none());
    }

    #[test]
    fn violator_when_two_tails_share_one_head() {
        let mut view = BipartiteView::new(
            vec![VertexId::a(0), VertexId::a(1)],
            vec![VertexId::b(0), VertexId::b(1)],
        );
        view.add_edge_local(0, 0);
        view.add_edge_local(1, 0);
        let violator = hall_violator(&view).unwrap();
        assert_eq!(violator.len(), 2);
        // Re-verify the certificate: N(X') is just b0.
        let mut nbhd = Bitset::new(2);
        for v in &violator {
            nbhd.union_with(&view.adj[v.index]);
        }
        assert!(nbhd.count() < violator.len());
    }

    #[test]
    fn extraction_partitions_complete_block() {
        let view = complete_view(4, 4);
        let coll = extract_matching_collection(&view, 4, 4, &MatchingThresholds::exact()).unwrap();
        assert!(!coll.degraded, "{:?}", coll.diagnostic);
        assert_eq!(coll.matchings.len(), 4);
        assert!(coll.matchings.iter().all(|m| m.len() == 4));
        assert!(coll.pairwise_edge_disjoint());
        let total: usize = coll.matchings.iter().map(Matching::len).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn extraction_of_single_perfect_matching() {
        let view = regular_view(5, 1, 2);
        let coll = extract_matching_collection(&view, 1, 5, &MatchingThresholds::exact()).unwrap();
        assert_eq!(coll.matchings.len(), 1);
        assert_eq!(coll.matchings[0].len(), 5);
    }

    #[test]
    fn extraction_on_regular_blocks_matches_koenig() {
        // d-regular blocks decompose into exactly d perfect matchings.
        for (m, d, seed) in [(4, 2, 0), (6, 3, 1), (8, 5, 2), (8, 8, 3)] {
            let view = regular_view(m, d, seed);
            let coll =
                extract_matching_collection(&view, d, m, &MatchingThresholds::exact()).unwrap();
            assert!(!coll.degraded, "{:?}", coll.diagnostic);
            assert_eq!(coll.matchings.len(), d);
            assert!(coll.matchings.iter().all(|mm| mm.len() == m));
            assert!(coll.pairwise_edge_disjoint());
            let total: usize = coll.matchings.iter().map(Matching::len).sum();
            assert_eq!(total, view.edge_count());
            // Union min degree agrees with the usage counters.
            let block: Vec<VertexId> =
                view.tails().iter().chain(view.heads()).copied().collect();
            assert_eq!(coll.union_min_degree(&block), d);
        }
    }

    #[test]
    fn extraction_flags_shortfalls_as_degraded() {
        // A path tail0-head0-tail1: max matching size 1, far below m.
        let mut view = BipartiteView::new(
            vec![VertexId::a(0), VertexId::a(1)],
            vec![VertexId::b(0), VertexId::b(1)],
        );
        view.add_edge_local(0, 0);
        view.add_edge_local(1, 0);
        let coll =
            extract_matching_collection(&view, 1, 2, &MatchingThresholds::practical()).unwrap();
        assert!(coll.degraded);
        assert!(coll.diagnostic.is_some());
    }

    #[test]
    fn extraction_enforces_window_when_asked() {
        let view = complete_view(3, 3);
        let err = extract_matching_collection(&view, 5, 3, &MatchingThresholds::paper());
        assert!(matches!(err, Err(Error::DegreeWindow { .. })));
    }

    #[test]
    fn nearly_balanced_block_strips_auxiliary_vertex() {
        // 9 tails, 8 heads: tail i points at heads (i+k) mod 8 for k < 3.
        let tails: Vec<VertexId> = (0..9).map(VertexId::a).collect();
        let heads: Vec<VertexId> = (0..8).map(VertexId::b).collect();
        let mut view = BipartiteView::new(tails, heads);
        for t in 0..9 {
            for k in 0..3 {
                view.add_edge_local(t, (t + k) % 8);
            }
        }
        let (delta, _) = view.degree_range();
        assert_eq!(delta, 3);
        let coll =
            extract_matching_collection(&view, 3, 9, &MatchingThresholds::practical()).unwrap();
        let size_floor = (8.0 - libm::pow(8.0, 7.0 / 8.0)).ceil().max(1.0) as usize;
        assert!(coll.matchings.len() >= 2, "got {}", coll.matchings.len());
        for m in &coll.matchings {
            assert!(m.len() >= size_floor);
            for e in m.edges() {
                assert!(e.to.index < 8, "auxiliary vertex leaked into {e}");
            }
        }
        assert!(coll.pairwise_edge_disjoint());
    }
}
