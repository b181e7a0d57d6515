//! Input-class generators and the exact Hamilton decomposition of the
//! complete balanced bipartite digraph.
//!
//! `D_{n,n}` denotes the complete balanced bipartite digraph: both classes
//! have size `n` and all `2n²` cross edges are present.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bitset::Bitset;
use crate::digraph::{BipartiteDigraph, Edge, Side, VertexId};
use crate::error::{Error, Result};
use crate::seeded_rng;

/// Default number of joint resamples in [`ham_paths_complete`].
pub const DEFAULT_ENDPOINT_RETRY_BUDGET: usize = 1000;

/// A directed cycle visiting every vertex of its host graph exactly once.
///
/// Stored as the cyclic vertex sequence; edge existence against a host
/// graph is the verifier's job ([`crate::verify::is_ham_cycle`]), the
/// constructor only enforces the host-independent shape: even length,
/// strictly alternating sides, no repeated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamCycle {
    seq: Vec<VertexId>,
}

impl HamCycle {
    pub fn new(seq: Vec<VertexId>) -> Result<Self> {
        if seq.len() < 2 || seq.len() % 2 != 0 {
            return Err(Error::Domain(alloc::format!(
                "a Hamilton cycle needs an even number of vertices, at least 2, got {}",
                seq.len()
            )));
        }
        check_alternation_and_distinctness(&seq, true)?;
        Ok(HamCycle { seq })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The cycle's edges, including the wrap-around edge.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.seq.len()).map(move |i| {
            Edge::new(self.seq[i], self.seq[(i + 1) % self.seq.len()])
        })
    }
}

/// A directed path visiting every vertex of its host graph exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamPath {
    seq: Vec<VertexId>,
}

impl HamPath {
    pub fn new(seq: Vec<VertexId>) -> Result<Self> {
        if seq.is_empty() {
            return Err(Error::Domain("a Hamilton path cannot be empty".into()));
        }
        check_alternation_and_distinctness(&seq, false)?;
        Ok(HamPath { seq })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.seq
    }

    pub fn start(&self) -> VertexId {
        self.seq[0]
    }

    pub fn end(&self) -> VertexId {
        *self.seq.last().unwrap()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.seq.windows(2).map(|w| Edge::new(w[0], w[1]))
    }
}

fn check_alternation_and_distinctness(seq: &[VertexId], wrap: bool) -> Result<()> {
    for w in seq.windows(2) {
        if w[0].side == w[1].side {
            return Err(Error::Domain(alloc::format!(
                "sides must alternate, found {} followed by {}",
                w[0],
                w[1]
            )));
        }
    }
    if wrap && seq.len() >= 2 && seq[0].side == seq[seq.len() - 1].side {
        return Err(Error::Domain(
            "sides must alternate across the wrap-around".into(),
        ));
    }
    let mut sorted: Vec<VertexId> = seq.to_vec();
    sorted.sort_unstable();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(Error::Domain(alloc::format!("vertex {} repeats", w[0])));
        }
    }
    Ok(())
}

/// `D_{n,n}`: every vertex has out- and in-degree `n`.
pub fn complete_bipartite(n: usize) -> BipartiteDigraph {
    let mut g = BipartiteDigraph::empty(n, n);
    for i in 0..n {
        for j in 0..n {
            g.insert_edge(Edge::new(VertexId::a(i), VertexId::b(j)));
            g.insert_edge(Edge::new(VertexId::b(j), VertexId::a(i)));
        }
    }
    g
}

/// An orientation of the complete bipartite graph `K_{n,n}` in which every
/// vertex has in- and out-degree `n/2` (a diregular bipartite tournament).
///
/// Built by orienting the edges along an Eulerian circuit of `K_{n,n}`:
/// every vertex has even degree `n`, and following the circuit consumes one
/// incoming and one outgoing edge per visit, which forces in = out at every
/// vertex with no rejection sampling. The seed shuffles the circuit's
/// exploration order.
pub fn diregular_tournament(n: usize, seed: u64) -> Result<BipartiteDigraph> {
    if n % 2 != 0 {
        return Err(Error::Domain(alloc::format!(
            "a diregular bipartite tournament needs even n (each semidegree is n/2), got {n}"
        )));
    }
    let mut g = BipartiteDigraph::empty(n, n);
    if n == 0 {
        return Ok(g);
    }
    let mut rng = seeded_rng(seed);

    // Remaining undirected K_{n,n} edges, one bitset row per vertex.
    let mut rem_a = vec![Bitset::full(n); n];
    let mut rem_b = vec![Bitset::full(n); n];

    // Hierholzer with a vertex stack; a popped vertex joins the circuit.
    let mut stack: Vec<VertexId> = vec![VertexId::a(0)];
    let mut circuit: Vec<VertexId> = Vec::with_capacity(n * n + 1);
    while let Some(&v) = stack.last() {
        let row = match v.side {
            Side::A => &rem_a[v.index],
            Side::B => &rem_b[v.index],
        };
        let remaining = row.count();
        if remaining == 0 {
            circuit.push(v);
            stack.pop();
        } else {
            let pick = row.nth(rng.gen_range(0..remaining)).unwrap();
            let (ai, bi) = match v.side {
                Side::A => (v.index, pick),
                Side::B => (pick, v.index),
            };
            rem_a[ai].remove(bi);
            rem_b[bi].remove(ai);
            stack.push(VertexId::new(v.side.opposite(), pick));
        }
    }
    debug_assert_eq!(circuit.len(), n * n + 1);

    for w in circuit.windows(2) {
        g.insert_edge(Edge::new(w[0], w[1]));
    }
    Ok(g)
}

/// A balanced bipartite digraph on `2n` vertices in which every vertex has
/// out- and in-degree exactly `d`.
///
/// The `A→B` edges come from the rows of a seeded random `d×n` Latin
/// rectangle (row `r`, column `i`: edge `a_i → b_{L[r][i]}`); the `B→A`
/// edges from an independently sampled rectangle. Row/column distinctness
/// of the rectangle is exactly `d`-regularity. The construction does not
/// sample uniformly over all `d`-regular digraphs.
pub fn random_regular_bipartite_digraph(n: usize, d: usize, seed: u64) -> Result<BipartiteDigraph> {
    if d < 1 || d > n {
        return Err(Error::Domain(alloc::format!(
            "regular degree must satisfy 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    if d == n {
        // Forced: the only n-regular graph on A, B of size n is D_{n,n}.
        return Ok(complete_bipartite(n));
    }
    let mut rng = seeded_rng(seed);
    let ab = latin_rectangle(n, d, &mut rng);
    let ba = latin_rectangle(n, d, &mut rng);

    let mut g = BipartiteDigraph::empty(n, n);
    for row in &ab {
        for (i, &j) in row.iter().enumerate() {
            g.insert_edge(Edge::new(VertexId::a(i), VertexId::b(j)));
        }
    }
    for row in &ba {
        for (j, &i) in row.iter().enumerate() {
            g.insert_edge(Edge::new(VertexId::b(j), VertexId::a(i)));
        }
    }
    Ok(g)
}

/// A random `d×n` Latin rectangle: `d` rows, each a permutation of `0..n`,
/// no symbol repeated within a column.
///
/// Rows are sampled one at a time as a random perfect matching between
/// columns and still-available symbols. The availability graph after `r`
/// rows is `(n-r)`-regular, so a perfect matching always exists and the
/// augmenting search below cannot fail.
fn latin_rectangle(n: usize, d: usize, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    let mut used = vec![Bitset::new(n); n]; // per column: symbols already taken
    let mut rows = Vec::with_capacity(d);
    for _ in 0..d {
        let avail: Vec<Bitset> = used
            .iter()
            .map(|u| {
                let mut a = Bitset::full(n);
                a.difference_with(u);
                a
            })
            .collect();
        let mut col_of_symbol = vec![usize::MAX; n];
        let mut cols: Vec<usize> = (0..n).collect();
        cols.shuffle(rng);
        for &c in &cols {
            let mut visited = Bitset::new(n);
            let ok = kuhn_augment(c, &avail, &mut visited, &mut col_of_symbol, rng);
            debug_assert!(ok, "regular availability graph must admit a matching");
        }
        let mut row = vec![usize::MAX; n];
        for (s, &c) in col_of_symbol.iter().enumerate() {
            if c != usize::MAX {
                row[c] = s;
            }
        }
        for (c, &s) in row.iter().enumerate() {
            used[c].insert(s);
        }
        rows.push(row);
    }
    rows
}

fn kuhn_augment(
    col: usize,
    avail: &[Bitset],
    visited: &mut Bitset,
    col_of_symbol: &mut [usize],
    rng: &mut impl Rng,
) -> bool {
    let mut symbols: Vec<usize> = avail[col].iter().filter(|&s| !visited.contains(s)).collect();
    symbols.shuffle(rng);
    for s in symbols {
        visited.insert(s);
        if col_of_symbol[s] == usize::MAX
            || kuhn_augment(col_of_symbol[s], avail, visited, col_of_symbol, rng)
        {
            col_of_symbol[s] = col;
            return true;
        }
    }
    false
}

/// The shift decomposition of `D_{n,n}` into `n` Hamilton cycles whose
/// edge sets partition all `2n²` edges.
///
/// Cycle `k` visits `a_0, b_k, a_1, b_{k+1}, …, a_{n-1}, b_{k+n-1}`
/// (indices mod `n`) and closes back to `a_0`; ranging over `k` hits every
/// `A→B` edge `(a_i, b_j)` at `k = j-i` and every `B→A` edge `(b_j, a_l)`
/// at `k = j-l+1`, each exactly once.
pub fn ham_decompose_complete(n: usize) -> Vec<HamCycle> {
    (0..n)
        .map(|k| HamCycle::new(shift_cycle_seq(n, k)).expect("shift cycle is structurally valid"))
        .collect()
}

fn shift_cycle_seq(n: usize, k: usize) -> Vec<VertexId> {
    let mut seq = Vec::with_capacity(2 * n);
    for i in 0..n {
        seq.push(VertexId::a(i));
        seq.push(VertexId::b((i + k) % n));
    }
    seq
}

/// The largest endpoint multiplicity tolerated by [`ham_paths_complete`]:
/// `⌊2·√(ln n)⌋`, floored at 2 because below three cycles the removed
/// edges cannot avoid sharing an endpoint.
pub fn endpoint_multiplicity_bound(n: usize) -> usize {
    let raw = libm::floor(2.0 * libm::sqrt(libm::log(n as f64))) as usize;
    raw.max(2)
}

/// `n` edge-disjoint Hamilton paths of `D_{n,n}`, all starting in class B.
///
/// Each path is a shift cycle minus one uniformly chosen `A→B` edge
/// `(a_i, b_j)`; the path then runs from `b_j` around to `a_i`. The whole
/// family of removed edges is resampled jointly until no vertex is an
/// endpoint of more than [`endpoint_multiplicity_bound`] paths, which a
/// single sample achieves with positive probability.
pub fn ham_paths_complete(n: usize, seed: u64) -> Result<Vec<HamPath>> {
    ham_paths_complete_with_budget(n, seed, DEFAULT_ENDPOINT_RETRY_BUDGET)
}

/// [`ham_paths_complete`] with an explicit resampling budget.
pub fn ham_paths_complete_with_budget(
    n: usize,
    seed: u64,
    budget: usize,
) -> Result<Vec<HamPath>> {
    if n < 2 {
        return Err(Error::Domain(alloc::format!(
            "the Hamilton path family needs n >= 2, got {n}"
        )));
    }
    let bound = endpoint_multiplicity_bound(n);
    let mut rng = seeded_rng(seed);
    let mut best_achieved = usize::MAX;

    for _ in 0..budget {
        // Removed edge of cycle k: (a_{i_k}, b_{i_k + k}).
        let picks: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();

        // A vertex is a path endpoint exactly as often as it is incident to
        // a removed edge: a_i ends the path of every cycle whose removed
        // edge leaves a_i, and b_j starts the path of every cycle whose
        // removed edge enters b_j.
        let mut out_mult = vec![0usize; n];
        let mut in_mult = vec![0usize; n];
        for (k, &i) in picks.iter().enumerate() {
            out_mult[i] += 1;
            in_mult[(i + k) % n] += 1;
        }
        let achieved = out_mult.iter().chain(&in_mult).copied().max().unwrap_or(0);
        best_achieved = best_achieved.min(achieved);
        if achieved > bound {
            continue;
        }

        let paths = picks
            .iter()
            .enumerate()
            .map(|(k, &i)| {
                let cycle = shift_cycle_seq(n, k);
                // Removed edge is the pair (cycle[2i], cycle[2i+1]); the
                // path starts right after it.
                let mut seq = Vec::with_capacity(2 * n);
                seq.extend_from_slice(&cycle[2 * i + 1..]);
                seq.extend_from_slice(&cycle[..2 * i + 1]);
                HamPath::new(seq).expect("rotated shift cycle is a valid path")
            })
            .collect();
        return Ok(paths);
    }

    Err(Error::EndpointBoundExhausted {
        budget,
        bound,
        achieved: best_achieved,
    })
}
