//! Constructive classical subroutines: Hamilton cycles under the
//! Ghouila-Houri degree condition, and Hamilton s-t paths in balanced
//! bipartite digraphs via a matching plus an auxiliary digraph.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{BipartiteDigraph, Digraph, Direction, VertexId, VertexSet};
use crate::error::{Error, Result};
use crate::generators::HamPath;
use crate::matching::{max_matching, random_max_matching, BipartiteView};
use crate::search::{exact_hamilton_cycle, hamilton_cycle_search, SearchBudget};

/// Graphs up to this order fall back to exhaustive search if the
/// randomized engine somehow fails; beyond it a failure is reported as an
/// invariant violation.
const EXACT_FALLBACK_CAP: usize = 14;

/// Auxiliary digraph of the s-t path construction.
///
/// Vertices `z_1..z_{m'}` stand for matched pairs `(v_i, w_i)` of the host
/// digraph (plus the pair `(y, x)` of the requested endpoints); `(z_i,
/// z_j)` is an edge iff `(w_i, v_j)` is an edge of the host. A Hamilton
/// cycle of the auxiliary digraph expands to a Hamilton x-y path.
///
/// A pair whose host edge `(w_i, v_i)` exists would give `z_i` a loop;
/// the digraph stored here is loopless, but the loop positions are kept so
/// that loop-inclusive degrees — the quantity that inherits the host's
/// semidegrees exactly — remain available.
#[derive(Debug)]
pub struct AuxDigraph {
    digraph: Digraph,
    loops: crate::bitset::Bitset,
    /// `w_i`: the vertex on the side of the path's start.
    w: Vec<VertexId>,
    /// `v_i`: the vertex on the side of the path's end.
    v: Vec<VertexId>,
}

impl AuxDigraph {
    /// Builds the auxiliary digraph from the defining vertex lists and
    /// checks the edge rule for every pair.
    pub fn new(host: &BipartiteDigraph, w: Vec<VertexId>, v: Vec<VertexId>) -> Result<Self> {
        if w.len() != v.len() || w.is_empty() {
            return Err(Error::Domain(
                "auxiliary digraph needs equally many w- and v-vertices, at least one".into(),
            ));
        }
        let m = w.len();
        let mut digraph = Digraph::new(m);
        let mut loops = crate::bitset::Bitset::new(m);
        for i in 0..m {
            host.check_vertex(w[i])?;
            host.check_vertex(v[i])?;
            for j in 0..m {
                if !host.has_edge(w[i], v[j]) {
                    continue;
                }
                if i == j {
                    loops.insert(i);
                } else {
                    digraph.insert_edge(i, j);
                }
            }
        }
        let aux = AuxDigraph {
            digraph,
            loops,
            w,
            v,
        };
        debug_assert!(aux.edge_rule_holds(host));
        Ok(aux)
    }

    fn edge_rule_holds(&self, host: &BipartiteDigraph) -> bool {
        let m = self.w.len();
        (0..m).all(|i| {
            (0..m).all(|j| {
                let present = if i == j {
                    self.loops.contains(i)
                } else {
                    self.digraph.has_edge(i, j)
                };
                present == host.has_edge(self.w[i], self.v[j])
            })
        })
    }

    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn order(&self) -> usize {
        self.w.len()
    }

    /// `δ⁺ + δ⁻` with loops counted into both degrees of their vertex;
    /// in this accounting the sum inherits the host's semidegree sum.
    pub fn loop_inclusive_degree_sum(&self) -> usize {
        let n = self.order();
        let d_out = (0..n)
            .map(|i| self.digraph.out_degree(i) + usize::from(self.loops.contains(i)))
            .min()
            .unwrap_or(0);
        let d_in = (0..n)
            .map(|i| self.digraph.in_degree(i) + usize::from(self.loops.contains(i)))
            .min()
            .unwrap_or(0);
        d_out + d_in
    }

    /// Expands a Hamilton cycle of the auxiliary digraph into the Hamilton
    /// path from `w_last` to `v_last` of the host: each aux edge `(z_i,
    /// z_j)` becomes `(w_i, v_j)` followed by `(v_j, w_j)`, the latter
    /// omitted at the terminal pair.
    fn expand_cycle(&self, cycle: &[usize]) -> Result<HamPath> {
        let m = self.w.len();
        let last = m - 1;
        let start_pos = cycle
            .iter()
            .position(|&z| z == last)
            .ok_or_else(|| Error::InvariantViolation("aux cycle misses the endpoint pair".into()))?;

        let mut seq = Vec::with_capacity(2 * m);
        seq.push(self.w[last]);
        for step in 1..=cycle.len() {
            let z = cycle[(start_pos + step) % cycle.len()];
            seq.push(self.v[z]);
            if z != last {
                seq.push(self.w[z]);
            }
        }
        HamPath::new(seq)
    }
}

/// A Hamilton cycle of a strongly connected digraph with
/// `δ⁺(g) + δ⁻(g) ≥ v(g)` (in particular of any digraph with
/// `δ⁰ ≥ v(g)/2`, which implies both hypotheses).
///
/// Rotation–extension with closure and absorption; the degree condition
/// guarantees a closure at every stuck path and strong connectivity an
/// absorption at every non-spanning cycle, so the randomized engine
/// converges quickly on conforming inputs. Tiny graphs additionally fall
/// back to exhaustive search, making a failure under valid preconditions
/// an invariant violation.
pub fn ghouila_houri_cycle(g: &Digraph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Domain(alloc::format!(
            "a Hamilton cycle needs at least 2 vertices, got {n}"
        )));
    }
    let (d_out, d_in) = g.min_out_in_degree();
    if d_out + d_in < n {
        return Err(Error::Domain(alloc::format!(
            "degree condition failed: min out-degree {d_out} + min in-degree {d_in} < {n} vertices"
        )));
    }
    if !g.is_strongly_connected() {
        return Err(Error::Domain("digraph is not strongly connected".into()));
    }

    // Deterministic: the seed is fixed, randomness only drives the
    // internal restarts.
    let mut rng = crate::seeded_rng(0x4748_4331);
    if let Some(cycle) = hamilton_cycle_search(g, &mut rng, SearchBudget::for_order(n)) {
        return Ok(cycle);
    }
    if n <= EXACT_FALLBACK_CAP {
        if let Some(cycle) = exact_hamilton_cycle(g) {
            return Ok(cycle);
        }
    }
    Err(Error::InvariantViolation(
        "no Hamilton cycle found although the degree and connectivity conditions hold".into(),
    ))
}

/// A Hamilton path from `x` to `y` in a balanced bipartite digraph with
/// `δ⁰ ≥ (m'+1)/2`, where `m'` is the common class size and `x`, `y` lie
/// in different classes.
///
/// Construction: match the remaining `y`-side vertices to the remaining
/// `x`-side vertices through reversed edges (Hall's condition follows from
/// the degree bound), append the pair `(y, x)`, build the auxiliary
/// digraph on the pairs and close it with [`ghouila_houri_cycle`]; the
/// cycle expands to the requested path.
pub fn ham_st_path_cross(f: &BipartiteDigraph, x: VertexId, y: VertexId) -> Result<HamPath> {
    f.check_vertex(x)?;
    f.check_vertex(y)?;
    if x.side == y.side {
        return Err(Error::Domain(alloc::format!(
            "endpoints {x} and {y} must lie in different classes"
        )));
    }
    if !f.is_balanced() {
        return Err(Error::Unbalanced {
            n_a: f.n_a(),
            n_b: f.n_b(),
        });
    }
    let m = f.n_a();
    let (delta, _) = f.min_max_semidegree();
    if 2 * delta < m + 1 {
        return Err(Error::Domain(alloc::format!(
            "need minimum semidegree at least (m'+1)/2 = {:.1}, have {delta}",
            (m as f64 + 1.0) / 2.0
        )));
    }
    if m == 1 {
        // Only one candidate path; the degree bound forces its edge.
        debug_assert!(f.has_edge(x, y));
        return HamPath::new(vec![x, y]);
    }

    // Undirected graph on (X-side minus x) and (Y-side minus y) with
    // `a ~ b` iff `(b, a)` is an edge of `f`; a perfect matching in it
    // gives the directed pairs (v_i, w_i).
    let x_side: Vec<VertexId> = (0..m)
        .map(|i| VertexId::new(x.side, i))
        .filter(|&v| v != x)
        .collect();
    let y_side: Vec<VertexId> = (0..m)
        .map(|i| VertexId::new(y.side, i))
        .filter(|&v| v != y)
        .collect();
    let mut reversed = BipartiteView::new(x_side.clone(), y_side.clone());
    for (ti, &a) in x_side.iter().enumerate() {
        for (hi, &b) in y_side.iter().enumerate() {
            if f.has_edge(b, a) {
                reversed.add_edge_local(ti, hi);
            }
        }
    }

    // A matched pair whose reverse edge also exists shows up as a dropped
    // loop of the auxiliary digraph, which can leave its loopless degree
    // sum one short of the Hamilton guarantee right at the density
    // threshold; for some matchings the auxiliary digraph then genuinely
    // has no Hamilton cycle. Every Hamilton x-y path induces a perfect
    // matching whose auxiliary digraph works, so resampling the matching
    // finds one.
    let mut rng = crate::seeded_rng(0x4155_5843);
    let attempts = 12 + m;
    for attempt in 0..attempts {
        let matching = if attempt == 0 {
            max_matching(&reversed)
        } else {
            random_max_matching(&reversed, &mut rng)
        };
        if matching.len() != m - 1 {
            return Err(Error::InvariantViolation(alloc::format!(
                "matching of size {} found where Hall guarantees {}",
                matching.len(),
                m - 1
            )));
        }

        // Pairs (v_i, w_i): v_i on y's side, w_i on x's side; the matching
        // edges run w_i -> v_i in the view, i.e. (v_i, w_i) in f.
        let mut w: Vec<VertexId> = matching.edges().iter().map(|e| e.from).collect();
        let mut v: Vec<VertexId> = matching.edges().iter().map(|e| e.to).collect();
        w.push(x);
        v.push(y);

        let aux = AuxDigraph::new(f, w, v)?;
        assert!(
            aux.loop_inclusive_degree_sum() >= aux.order(),
            "aux degree sum must inherit the host's"
        );
        if let Some(cycle) = aux_cycle(&aux, &mut rng) {
            let path = aux.expand_cycle(&cycle)?;
            debug_assert!(crate::verify::is_ham_path(f, &path).pass());
            return Ok(path);
        }
    }

    // Tiny hosts get an exhaustive answer rather than a flaky one. The
    // degree threshold is NOT sufficient at the boundary: for odd class
    // sizes with δ⁰ exactly (m'+1)/2 there are instances without the
    // path (the matched-pair construction loses one unit of degree to
    // every pair whose reverse edge also exists), so proven absence is a
    // search outcome here, not a bug.
    if f.vertex_count() <= EXACT_FALLBACK_CAP {
        match exact_ham_st_path(f, x, y) {
            Some(seq) => {
                let path = HamPath::new(seq)?;
                debug_assert!(crate::verify::is_ham_path(f, &path).pass());
                return Ok(path);
            }
            None => {
                return Err(Error::SearchExhausted(alloc::format!(
                    "no Hamilton path from {x} to {y} exists; the density threshold has boundary instances without one"
                )))
            }
        }
    }
    Err(Error::InvariantViolation(
        "no auxiliary matching led to a Hamilton cycle".into(),
    ))
}

/// Hamilton cycle of the loopless auxiliary digraph, if the search finds
/// one. The Ghouila-Houri route is taken whenever its preconditions hold;
/// otherwise (the dropped-loop corner) the same engine runs ungated.
fn aux_cycle(aux: &AuxDigraph, rng: &mut rand_chacha::ChaCha8Rng) -> Option<Vec<usize>> {
    match ghouila_houri_cycle(aux.digraph()) {
        Ok(cycle) => Some(cycle),
        Err(_) => {
            let n = aux.order();
            if let Some(cycle) =
                hamilton_cycle_search(aux.digraph(), rng, SearchBudget::for_order(n))
            {
                return Some(cycle);
            }
            if n <= EXACT_FALLBACK_CAP {
                exact_hamilton_cycle(aux.digraph())
            } else {
                None
            }
        }
    }
}

/// First Hamilton x-y path by direct backtracking; last-resort fallback
/// for tiny hosts, independent of the verification oracles.
fn exact_ham_st_path(
    f: &BipartiteDigraph,
    x: VertexId,
    y: VertexId,
) -> Option<Vec<VertexId>> {
    fn go(
        f: &BipartiteDigraph,
        y: VertexId,
        seq: &mut Vec<VertexId>,
        used: &mut VertexSet,
    ) -> bool {
        let at = *seq.last().unwrap();
        if seq.len() == f.vertex_count() {
            return at == y;
        }
        for next in f.neighbors(at, Direction::Out) {
            if used.contains(next) || (next == y && seq.len() + 1 != f.vertex_count()) {
                continue;
            }
            used.insert(next);
            seq.push(next);
            if go(f, y, seq, used) {
                return true;
            }
            seq.pop();
            used.remove(next);
        }
        false
    }
    let mut seq = vec![x];
    let mut used = VertexSet::new(f.n_a(), f.n_b());
    used.insert(x);
    go(f, y, &mut seq, &mut used).then_some(seq)
}

/// A Hamilton path from `s` to `t` under the balance rule: endpoints in
/// different classes need `|A| = |B|`; both endpoints in one class `S`
/// need `|S| = |other| + 1`. Requires `δ⁰ ≥ (m'+3)/2` with
/// `m' = min(|A|, |B|)`.
///
/// The cross-side case delegates to [`ham_st_path_cross`]. The same-side
/// case removes `s`, finds a cross path from an out-neighbour `u` of `s`
/// to `t`, and prepends `(s, u)`; out-neighbours are tried in index order.
pub fn ham_st_path(f: &BipartiteDigraph, s: VertexId, t: VertexId) -> Result<HamPath> {
    f.check_vertex(s)?;
    f.check_vertex(t)?;
    if s == t {
        return Err(Error::Domain("endpoints must be distinct".into()));
    }
    let m_prime = f.n_a().min(f.n_b());
    // (m'+3)/2, capped at the largest semidegree the smaller class can
    // support — for m' < 3 the literal bound exceeds it, yet complete
    // instances are forced to work.
    let required = (m_prime + 3).min(2 * m_prime);
    let (delta, _) = f.min_max_semidegree();
    if 2 * delta < required {
        return Err(Error::Domain(alloc::format!(
            "need minimum semidegree at least {:.1}, have {delta}",
            required as f64 / 2.0
        )));
    }

    if s.side != t.side {
        if !f.is_balanced() {
            return Err(Error::Unbalanced {
                n_a: f.n_a(),
                n_b: f.n_b(),
            });
        }
        return ham_st_path_cross(f, s, t);
    }

    // Same-side case: the endpoint class must be one larger.
    let own = f.side_size(s.side);
    let other = f.side_size(s.side.opposite());
    if own != other + 1 {
        return Err(Error::Domain(alloc::format!(
            "same-side endpoints need |{}| = |{}| + 1, have {own} and {other}",
            s.side,
            s.side.opposite()
        )));
    }

    let mut keep = VertexSet::new(f.n_a(), f.n_b());
    for v in f.vertices() {
        if v != s {
            keep.insert(v);
        }
    }
    let without_s = f.induced(&keep);
    let t_local = without_s
        .from_parent(t)
        .ok_or_else(|| Error::InvariantViolation("endpoint lost in induced subgraph".into()))?;

    let out_neighbours: Vec<VertexId> = f.neighbors(s, Direction::Out).collect();
    for u in out_neighbours {
        let u_local = match without_s.from_parent(u) {
            Some(v) => v,
            None => continue,
        };
        match ham_st_path_cross(&without_s.graph, u_local, t_local) {
            Ok(sub) => {
                let mut seq = Vec::with_capacity(sub.len() + 1);
                seq.push(s);
                seq.extend(sub.vertices().iter().map(|&v| without_s.to_parent(v)));
                let path = HamPath::new(seq)?;
                debug_assert!(crate::verify::is_ham_path(f, &path).pass());
                return Ok(path);
            }
            Err(Error::Domain(_)) | Err(Error::InvariantViolation(_)) => continue,
            Err(other) => return Err(other),
        }
    }
    Err(Error::SearchExhausted(alloc::format!(
        "no out-neighbour of {s} admits a Hamilton path to {t} after removing {s}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::GraphBuilder;
    use crate::generators::complete_bipartite;
    use crate::verify::{enumerate_ham_st_paths, is_ham_cycle_general, is_ham_path};
    use rand::Rng;

    #[test]
    fn two_cycle() {
        let mut d = Digraph::new(2);
        d.insert_edge(0, 1);
        d.insert_edge(1, 0);
        let cycle = ghouila_houri_cycle(&d).unwrap();
        assert!(is_ham_cycle_general(&d, &cycle).pass());
    }

    #[test]
    fn diregular_four_cycle_fails_degree_condition() {
        // Strongly connected and 1-diregular, but the degree sum 2 < 4.
        let mut d = Digraph::new(4);
        for i in 0..4 {
            d.insert_edge(i, (i + 1) % 4);
        }
        assert!(matches!(ghouila_houri_cycle(&d), Err(Error::Domain(_))));
    }

    #[test]
    fn disconnected_dense_graph_rejected() {
        // Two complete halves: high degrees, not strongly connected.
        let mut d = Digraph::new(4);
        d.insert_edge(0, 1);
        d.insert_edge(1, 0);
        d.insert_edge(2, 3);
        d.insert_edge(3, 2);
        assert!(matches!(ghouila_houri_cycle(&d), Err(Error::Domain(_))));
    }

    #[test]
    fn random_dense_digraphs_all_hamiltonian() {
        let mut rng = crate::seeded_rng(99);
        for case in 0..60 {
            let n = 4 + (case % 9);
            let g = random_digraph_with_min_semidegree(n, (n + 1) / 2, &mut rng);
            let cycle = ghouila_houri_cycle(&g).unwrap();
            assert!(is_ham_cycle_general(&g, &cycle).pass());
        }
    }

    fn random_digraph_with_min_semidegree(
        n: usize,
        floor: usize,
        rng: &mut impl Rng,
    ) -> Digraph {
        loop {
            let mut g = Digraph::new(n);
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.75) {
                        g.insert_edge(u, v);
                    }
                }
            }
            if g.min_semidegree() >= floor {
                return g;
            }
        }
    }

    #[test]
    fn cross_path_m1() {
        let f = complete_bipartite(1);
        let p = ham_st_path_cross(&f, VertexId::a(0), VertexId::b(0)).unwrap();
        assert_eq!(p.vertices(), &[VertexId::a(0), VertexId::b(0)]);
    }

    #[test]
    fn cross_path_complete_two() {
        let f = complete_bipartite(2);
        let p = ham_st_path_cross(&f, VertexId::a(0), VertexId::b(1)).unwrap();
        assert!(is_ham_path(&f, &p).pass());
        assert_eq!(p.start(), VertexId::a(0));
        assert_eq!(p.end(), VertexId::b(1));
        // The oracle agrees a path exists.
        assert!(enumerate_ham_st_paths(&f, VertexId::a(0), VertexId::b(1)).unwrap() >= 1);
    }

    #[test]
    fn cross_path_rejects_same_side_or_low_degree() {
        let f = complete_bipartite(2);
        assert!(ham_st_path_cross(&f, VertexId::a(0), VertexId::a(1)).is_err());

        // D_{3,3} minus enough edges to push δ⁰ below 2.
        let mut g = complete_bipartite(3);
        g.delete_edge(crate::digraph::Edge::new(VertexId::a(0), VertexId::b(0)));
        g.delete_edge(crate::digraph::Edge::new(VertexId::a(0), VertexId::b(1)));
        assert!(matches!(
            ham_st_path_cross(&g, VertexId::a(1), VertexId::b(0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn cross_path_works_both_orientations() {
        let f = complete_bipartite(3);
        let p = ham_st_path_cross(&f, VertexId::b(2), VertexId::a(0)).unwrap();
        assert!(is_ham_path(&f, &p).pass());
        assert_eq!(p.start(), VertexId::b(2));
        assert_eq!(p.end(), VertexId::a(0));
    }

    #[test]
    fn cross_path_agrees_with_oracle_at_m3_threshold() {
        // At m' = 3 the threshold δ⁰ ≥ 2 is the exact boundary: most
        // instances have a Hamilton path for every pair, but not all (see
        // `threshold_is_not_sufficient_at_m3` below). What must hold
        // unconditionally: the routine finds a path exactly when one
        // exists, and every returned path validates.
        let mut rng = crate::seeded_rng(5);
        for _ in 0..40 {
            let f = random_balanced_bipartite(3, 2, 0.7, &mut rng);
            for xi in 0..3 {
                for yi in 0..3 {
                    let (x, y) = (VertexId::a(xi), VertexId::b(yi));
                    let exists = enumerate_ham_st_paths(&f, x, y).unwrap() >= 1;
                    match ham_st_path_cross(&f, x, y) {
                        Ok(p) => {
                            assert!(exists, "returned a path the oracle excludes");
                            assert!(is_ham_path(&f, &p).pass());
                            assert_eq!((p.start(), p.end()), (x, y));
                        }
                        Err(Error::SearchExhausted(_)) => {
                            assert!(!exists, "missed an existing path");
                        }
                        Err(other) => panic!("unexpected error {other}"),
                    }
                }
            }
        }
    }

    #[test]
    fn threshold_is_not_sufficient_at_m3() {
        // Pinned boundary instance: δ⁰ = 2 = (m'+1)/2 with m' = 3, yet no
        // Hamilton path from a1 to b2 exists — the matched-pair
        // construction loses a degree unit to every pair whose reverse
        // edge is present, and here that closes every route. The oracle
        // proves absence; the construction must report it rather than
        // fabricate anything.
        let mut b = GraphBuilder::new(3, 3);
        let ab = [(0, 0), (0, 2), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)];
        let ba = [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 1),
            (1, 2),
            (2, 0),
            (2, 1),
            (2, 2),
        ];
        for (i, j) in ab {
            b.add_edge(VertexId::a(i), VertexId::b(j)).unwrap();
        }
        for (j, i) in ba {
            b.add_edge(VertexId::b(j), VertexId::a(i)).unwrap();
        }
        let f = b.build();
        assert_eq!(f.min_max_semidegree().0, 2);
        assert_eq!(
            enumerate_ham_st_paths(&f, VertexId::a(1), VertexId::b(2)).unwrap(),
            0
        );
        assert!(matches!(
            ham_st_path_cross(&f, VertexId::a(1), VertexId::b(2)),
            Err(Error::SearchExhausted(_))
        ));
    }

    #[test]
    fn cross_paths_always_exist_one_degree_above_threshold() {
        // One extra degree unit restores the guarantee: with δ⁰ ≥
        // (m'+3)/2 every pair admits a path (this is the margin the
        // stitching stage actually supplies).
        let mut rng = crate::seeded_rng(17);
        for _ in 0..25 {
            let f = random_balanced_bipartite(5, 4, 0.9, &mut rng);
            for xi in 0..5 {
                for yi in 0..5 {
                    let (x, y) = (VertexId::a(xi), VertexId::b(yi));
                    let p = ham_st_path_cross(&f, x, y).unwrap();
                    assert!(is_ham_path(&f, &p).pass());
                }
            }
        }
    }

    fn random_balanced_bipartite(
        m: usize,
        floor: usize,
        density: f64,
        rng: &mut impl Rng,
    ) -> BipartiteDigraph {
        loop {
            let mut b = GraphBuilder::new(m, m);
            for i in 0..m {
                for j in 0..m {
                    if rng.gen_bool(density) {
                        b.add_edge(VertexId::a(i), VertexId::b(j)).unwrap();
                    }
                    if rng.gen_bool(density) {
                        b.add_edge(VertexId::b(j), VertexId::a(i)).unwrap();
                    }
                }
            }
            let g = b.build();
            if g.min_max_semidegree().0 >= floor {
                return g;
            }
        }
    }

    #[test]
    fn same_side_forced_instance() {
        // |A| = 2, |B| = 1, complete: the only path is a0 b0 a1.
        let mut b = GraphBuilder::new(2, 1);
        for i in 0..2 {
            b.add_edge(VertexId::a(i), VertexId::b(0)).unwrap();
            b.add_edge(VertexId::b(0), VertexId::a(i)).unwrap();
        }
        let f = b.build();
        let p = ham_st_path(&f, VertexId::a(0), VertexId::a(1)).unwrap();
        assert_eq!(
            p.vertices(),
            &[VertexId::a(0), VertexId::b(0), VertexId::a(1)]
        );
    }

    #[test]
    fn cross_case_via_lemma_level_entry() {
        let f = complete_bipartite(3);
        let p = ham_st_path(&f, VertexId::a(0), VertexId::b(2)).unwrap();
        assert!(is_ham_path(&f, &p).pass());
    }

    #[test]
    fn same_side_with_balanced_classes_is_rejected() {
        let f = complete_bipartite(3);
        assert!(matches!(
            ham_st_path(&f, VertexId::a(0), VertexId::a(1)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn same_side_on_larger_class() {
        // |A| = 4, |B| = 3, complete; δ⁰ = 3 = (3+3)/2.
        let mut b = GraphBuilder::new(4, 3);
        for i in 0..4 {
            for j in 0..3 {
                b.add_edge(VertexId::a(i), VertexId::b(j)).unwrap();
                b.add_edge(VertexId::b(j), VertexId::a(i)).unwrap();
            }
        }
        let f = b.build();
        let p = ham_st_path(&f, VertexId::a(1), VertexId::a(3)).unwrap();
        assert!(is_ham_path(&f, &p).pass());
        assert_eq!((p.start(), p.end()), (VertexId::a(1), VertexId::a(3)));
    }

    #[test]
    fn aux_digraph_checks_lists() {
        let f = complete_bipartite(2);
        assert!(AuxDigraph::new(&f, vec![], vec![]).is_err());
        assert!(AuxDigraph::new(&f, vec![VertexId::a(0)], vec![]).is_err());
    }
}
