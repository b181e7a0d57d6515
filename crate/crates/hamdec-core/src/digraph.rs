//! Core bipartite-digraph representation.
//!
//! A [`BipartiteDigraph`] has two vertex classes `A` and `B`; every edge
//! crosses between them, in either direction. Adjacency is stored as one
//! bitset row per vertex per direction (the `A→B` relation and the `B→A`
//! relation, each with its transpose kept in sync), so neighbourhood
//! intersections cost `O(n / 64)`.
//!
//! Vertices carry their side as part of [`VertexId`] instead of being
//! numbered globally; mixing up the two classes then fails to type-check or
//! trips a bounds check instead of silently reading the wrong row.
//!
//! Graphs are immutable through the public API: mutation happens through
//! [`GraphBuilder`] or through operations returning new values. Within the
//! crate, algorithms that own a graph exclusively may edit it in place.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// The two vertex classes of the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl core::fmt::Display for Side {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Side::A => write!(f, "A"),
            Side::B => write!(f, "B"),
        }
    }
}

/// A vertex: a side tag plus an index local to that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub fn new(side: Side, index: usize) -> Self {
        VertexId { side, index }
    }

    pub fn a(index: usize) -> Self {
        VertexId {
            side: Side::A,
            index,
        }
    }

    pub fn b(index: usize) -> Self {
        VertexId {
            side: Side::B,
            index,
        }
    }
}

impl core::fmt::Display for VertexId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

/// Edge direction selector for degree queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Out,
    In,
}

/// A directed edge crossing the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
}

impl Edge {
    /// Panics if both endpoints are on the same side; such an edge cannot
    /// exist in any bipartite digraph and constructing one is a bug.
    pub fn new(from: VertexId, to: VertexId) -> Self {
        assert!(
            from.side != to.side,
            "edge {from}->{to} does not cross the bipartition"
        );
        Edge { from, to }
    }
}

impl core::fmt::Display for Edge {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}->{}", self.from, self.to)
    }
}

/// A duplicate-free set of cross-side directed edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeSet {
    edges: BTreeSet<Edge>,
}

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    /// Returns `false` if the edge was already present.
    pub fn insert(&mut self, e: Edge) -> bool {
        self.edges.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.edges.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.edges.contains(e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<T: IntoIterator<Item = Edge>>(iter: T) -> Self {
        EdgeSet {
            edges: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = alloc::collections::btree_set::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.edges.iter()
    }
}

/// A set of vertices that may span both classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    a: Bitset,
    b: Bitset,
}

impl VertexSet {
    pub fn new(n_a: usize, n_b: usize) -> Self {
        VertexSet {
            a: Bitset::new(n_a),
            b: Bitset::new(n_b),
        }
    }

    pub fn from_vertices(
        n_a: usize,
        n_b: usize,
        vertices: impl IntoIterator<Item = VertexId>,
    ) -> Self {
        let mut set = VertexSet::new(n_a, n_b);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn insert(&mut self, v: VertexId) -> bool {
        self.side_mut(v.side).insert(v.index)
    }

    pub fn remove(&mut self, v: VertexId) -> bool {
        self.side_mut(v.side).remove(v.index)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.side(v.side).contains(v.index)
    }

    pub fn side(&self, side: Side) -> &Bitset {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    fn side_mut(&mut self, side: Side) -> &mut Bitset {
        match side {
            Side::A => &mut self.a,
            Side::B => &mut self.b,
        }
    }

    pub fn len(&self) -> usize {
        self.a.count() + self.b.count()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    pub fn count_side(&self, side: Side) -> usize {
        self.side(side).count()
    }

    /// `|S ∩ A| == |S ∩ B|`.
    pub fn is_balanced(&self) -> bool {
        self.a.count() == self.b.count()
    }

    /// Vertices of `S`, A-side first, indices increasing.
    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.a
            .iter()
            .map(VertexId::a)
            .chain(self.b.iter().map(VertexId::b))
    }

    /// Complement within universes of the given sizes.
    pub fn complement(&self) -> VertexSet {
        let mut a = Bitset::full(self.a.universe());
        a.difference_with(&self.a);
        let mut b = Bitset::full(self.b.universe());
        b.difference_with(&self.b);
        VertexSet { a, b }
    }
}

/// Loopless digraph on two vertex classes with all edges crossing classes.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteDigraph {
    n_a: usize,
    n_b: usize,
    /// Out-neighbours in `B` of each `A`-vertex.
    out_a: Vec<Bitset>,
    /// Out-neighbours in `A` of each `B`-vertex.
    out_b: Vec<Bitset>,
    /// In-neighbours in `B` of each `A`-vertex (transpose of `out_b`).
    in_a: Vec<Bitset>,
    /// In-neighbours in `A` of each `B`-vertex (transpose of `out_a`).
    in_b: Vec<Bitset>,
    edge_count: usize,
}

impl BipartiteDigraph {
    pub fn empty(n_a: usize, n_b: usize) -> Self {
        BipartiteDigraph {
            n_a,
            n_b,
            out_a: vec![Bitset::new(n_b); n_a],
            out_b: vec![Bitset::new(n_a); n_b],
            in_a: vec![Bitset::new(n_b); n_a],
            in_b: vec![Bitset::new(n_a); n_b],
            edge_count: 0,
        }
    }

    pub fn from_edges(
        n_a: usize,
        n_b: usize,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut builder = GraphBuilder::new(n_a, n_b);
        for e in edges {
            builder.add_edge(e.from, e.to)?;
        }
        Ok(builder.build())
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn side_size(&self, side: Side) -> usize {
        match side {
            Side::A => self.n_a,
            Side::B => self.n_b,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n_a + self.n_b
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_balanced(&self) -> bool {
        self.n_a == self.n_b
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        v.index < self.side_size(v.side)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n_a: self.n_a,
                n_b: self.n_b,
            })
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.n_a)
            .map(VertexId::a)
            .chain((0..self.n_b).map(VertexId::b))
    }

    /// The full vertex set as a [`VertexSet`].
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet {
            a: Bitset::full(self.n_a),
            b: Bitset::full(self.n_b),
        }
    }

    pub fn has_edge(&self, from: VertexId, to: VertexId) -> bool {
        if from.side == to.side || !self.contains_vertex(from) || !self.contains_vertex(to) {
            return false;
        }
        self.row(from, Direction::Out).contains(to.index)
    }

    /// Adjacency row of `v`: the opposite-side neighbours in the given
    /// direction, as a bitset over that side's indices.
    pub fn row(&self, v: VertexId, dir: Direction) -> &Bitset {
        match (v.side, dir) {
            (Side::A, Direction::Out) => &self.out_a[v.index],
            (Side::B, Direction::Out) => &self.out_b[v.index],
            (Side::A, Direction::In) => &self.in_a[v.index],
            (Side::B, Direction::In) => &self.in_b[v.index],
        }
    }

    pub fn neighbors(&self, v: VertexId, dir: Direction) -> impl Iterator<Item = VertexId> + '_ {
        let side = v.side.opposite();
        self.row(v, dir).iter().map(move |i| VertexId::new(side, i))
    }

    /// `|N^dir(v) ∩ restrict|`, or the full degree when `restrict` is
    /// absent. `restrict` is read on the side opposite to `v`.
    pub fn degree(&self, v: VertexId, dir: Direction, restrict: Option<&VertexSet>) -> Result<usize> {
        self.check_vertex(v)?;
        let row = self.row(v, dir);
        Ok(match restrict {
            None => row.count(),
            Some(set) => row.intersection_count(set.side(v.side.opposite())),
        })
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.row(v, Direction::Out).count()
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        self.row(v, Direction::In).count()
    }

    /// `(δ⁰, Δ⁰)`: minimum and maximum semidegree over all vertices.
    /// By convention the empty graph has `(0, 0)`.
    pub fn min_max_semidegree(&self) -> (usize, usize) {
        let mut min = usize::MAX;
        let mut max = 0usize;
        for v in self.vertices() {
            let (o, i) = (self.out_degree(v), self.in_degree(v));
            min = min.min(o.min(i));
            max = max.max(o.max(i));
        }
        if min == usize::MAX {
            (0, 0)
        } else {
            (min, max)
        }
    }

    /// If every vertex has out- and in-degree exactly `d`, returns `d`.
    pub fn regularity(&self) -> Option<usize> {
        let (lo, hi) = self.min_max_semidegree();
        (lo == hi).then_some(lo)
    }

    /// Error with the first offending vertex unless the graph is balanced
    /// and regular; returns the common degree.
    pub fn ensure_regular_balanced(&self) -> Result<usize> {
        if !self.is_balanced() {
            return Err(Error::Unbalanced {
                n_a: self.n_a,
                n_b: self.n_b,
            });
        }
        let expected = if self.vertex_count() == 0 {
            0
        } else {
            self.out_degree(VertexId::a(0))
        };
        for v in self.vertices() {
            let (o, i) = (self.out_degree(v), self.in_degree(v));
            if o != expected || i != expected {
                return Err(Error::NotRegular {
                    vertex: v,
                    out_degree: o,
                    in_degree: i,
                    expected,
                });
            }
        }
        Ok(expected)
    }

    /// All edges, `A→B` rows first, in index order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let ab = self.out_a.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .map(move |j| Edge::new(VertexId::a(i), VertexId::b(j)))
        });
        let ba = self.out_b.iter().enumerate().flat_map(|(j, row)| {
            row.iter()
                .map(move |i| Edge::new(VertexId::b(j), VertexId::a(i)))
        });
        ab.chain(ba)
    }

    /// Subgraph induced on `s`, re-indexed, with the mapping back retained.
    ///
    /// `s` must be a vertex set over this graph's side sizes.
    pub fn induced(&self, s: &VertexSet) -> InducedSubgraph {
        assert_eq!(s.side(Side::A).universe(), self.n_a, "vertex set universe mismatch");
        assert_eq!(s.side(Side::B).universe(), self.n_b, "vertex set universe mismatch");

        let to_parent_a: Vec<usize> = s.side(Side::A).iter().collect();
        let to_parent_b: Vec<usize> = s.side(Side::B).iter().collect();
        let mut from_parent_a = vec![usize::MAX; self.n_a];
        let mut from_parent_b = vec![usize::MAX; self.n_b];
        for (local, &parent) in to_parent_a.iter().enumerate() {
            from_parent_a[parent] = local;
        }
        for (local, &parent) in to_parent_b.iter().enumerate() {
            from_parent_b[parent] = local;
        }

        let mut graph = BipartiteDigraph::empty(to_parent_a.len(), to_parent_b.len());
        for (local_a, &parent_a) in to_parent_a.iter().enumerate() {
            let mut out = self.out_a[parent_a].clone();
            out.intersect_with(s.side(Side::B));
            for parent_b in out.iter() {
                graph.insert_edge(Edge::new(
                    VertexId::a(local_a),
                    VertexId::b(from_parent_b[parent_b]),
                ));
            }
            let mut inn = self.in_a[parent_a].clone();
            inn.intersect_with(s.side(Side::B));
            for parent_b in inn.iter() {
                graph.insert_edge(Edge::new(
                    VertexId::b(from_parent_b[parent_b]),
                    VertexId::a(local_a),
                ));
            }
        }

        InducedSubgraph {
            graph,
            to_parent_a,
            to_parent_b,
            from_parent_a,
            from_parent_b,
        }
    }

    /// New graph with exactly the edges of `es` removed.
    ///
    /// Removing an absent edge is an error: the decomposition pipeline's
    /// correctness hinges on edge-disjointness, and tolerating double
    /// removal would mask double use.
    pub fn remove_edges(&self, es: &EdgeSet) -> Result<Self> {
        let mut g = self.clone();
        for e in es {
            g.check_vertex(e.from)?;
            g.check_vertex(e.to)?;
            if !g.delete_edge(*e) {
                return Err(Error::MissingEdge(*e));
            }
        }
        Ok(g)
    }

    /// Flattens to a general digraph; index `i < n_a` is `A i`, index
    /// `n_a + j` is `B j`. Returns the index-to-vertex table.
    pub fn to_digraph(&self) -> (Digraph, Vec<VertexId>) {
        let n = self.vertex_count();
        let mut d = Digraph::new(n);
        for e in self.edges() {
            d.insert_edge(self.flat_index(e.from), self.flat_index(e.to));
        }
        let table = self.vertices().collect();
        (d, table)
    }

    pub fn flat_index(&self, v: VertexId) -> usize {
        match v.side {
            Side::A => v.index,
            Side::B => self.n_a + v.index,
        }
    }

    /// Inserts an edge, returning `false` if it was already present.
    pub(crate) fn insert_edge(&mut self, e: Edge) -> bool {
        debug_assert!(self.contains_vertex(e.from) && self.contains_vertex(e.to));
        let fresh = match e.from.side {
            Side::A => {
                let fresh = self.out_a[e.from.index].insert(e.to.index);
                self.in_b[e.to.index].insert(e.from.index);
                fresh
            }
            Side::B => {
                let fresh = self.out_b[e.from.index].insert(e.to.index);
                self.in_a[e.to.index].insert(e.from.index);
                fresh
            }
        };
        if fresh {
            self.edge_count += 1;
        }
        fresh
    }

    /// Deletes an edge, returning `false` if it was not present.
    pub(crate) fn delete_edge(&mut self, e: Edge) -> bool {
        debug_assert!(self.contains_vertex(e.from) && self.contains_vertex(e.to));
        let had = match e.from.side {
            Side::A => {
                let had = self.out_a[e.from.index].remove(e.to.index);
                self.in_b[e.to.index].remove(e.from.index);
                had
            }
            Side::B => {
                let had = self.out_b[e.from.index].remove(e.to.index);
                self.in_a[e.to.index].remove(e.from.index);
                had
            }
        };
        if had {
            self.edge_count -= 1;
        }
        had
    }
}

impl core::fmt::Debug for BipartiteDigraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "BipartiteDigraph(nA={}, nB={}, edges={})",
            self.n_a, self.n_b, self.edge_count
        )
    }
}

/// Exclusively-owned builder; the only public mutation path.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    graph: BipartiteDigraph,
}

impl GraphBuilder {
    pub fn new(n_a: usize, n_b: usize) -> Self {
        GraphBuilder {
            graph: BipartiteDigraph::empty(n_a, n_b),
        }
    }

    pub fn add_edge(&mut self, from: VertexId, to: VertexId) -> Result<&mut Self> {
        if from.side == to.side {
            return Err(Error::SameSideEdge { from, to });
        }
        self.graph.check_vertex(from)?;
        self.graph.check_vertex(to)?;
        let e = Edge::new(from, to);
        if !self.graph.insert_edge(e) {
            return Err(Error::DuplicateEdge(e));
        }
        Ok(self)
    }

    pub fn build(self) -> BipartiteDigraph {
        self.graph
    }
}

/// Result of [`BipartiteDigraph::induced`]: the re-indexed subgraph plus
/// the mapping back to the parent graph.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: BipartiteDigraph,
    to_parent_a: Vec<usize>,
    to_parent_b: Vec<usize>,
    from_parent_a: Vec<usize>,
    from_parent_b: Vec<usize>,
}

impl InducedSubgraph {
    /// Maps a vertex of the induced subgraph back to the parent graph.
    pub fn to_parent(&self, v: VertexId) -> VertexId {
        match v.side {
            Side::A => VertexId::a(self.to_parent_a[v.index]),
            Side::B => VertexId::b(self.to_parent_b[v.index]),
        }
    }

    /// Maps a parent-graph vertex into the subgraph, if it was selected.
    pub fn from_parent(&self, v: VertexId) -> Option<VertexId> {
        let table = match v.side {
            Side::A => &self.from_parent_a,
            Side::B => &self.from_parent_b,
        };
        match table.get(v.index) {
            Some(&local) if local != usize::MAX => Some(VertexId::new(v.side, local)),
            _ => None,
        }
    }

    /// The parent edges of the subgraph, i.e. exactly the parent edges with
    /// both endpoints in the inducing set.
    pub fn parent_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.graph
            .edges()
            .map(|e| Edge::new(self.to_parent(e.from), self.to_parent(e.to)))
    }
}

/// A plain loopless digraph on `0..n`, used for the classical subroutines
/// that are not bipartite-specific.
#[derive(Clone)]
pub struct Digraph {
    n: usize,
    out: Vec<Bitset>,
    inn: Vec<Bitset>,
    edge_count: usize,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            out: vec![Bitset::new(n); n],
            inn: vec![Bitset::new(n); n],
            edge_count: 0,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Inserts `(u, v)`. Loops are rejected with a panic; duplicate
    /// insertion is a no-op returning `false`.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u != v, "loops are not allowed");
        assert!(u < self.n && v < self.n);
        let fresh = self.out[u].insert(v);
        self.inn[v].insert(u);
        if fresh {
            self.edge_count += 1;
        }
        fresh
    }

    pub fn delete_edge(&mut self, u: usize, v: usize) -> bool {
        let had = self.out[u].remove(v);
        self.inn[v].remove(u);
        if had {
            self.edge_count -= 1;
        }
        had
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(v)
    }

    pub fn out_row(&self, u: usize) -> &Bitset {
        &self.out[u]
    }

    pub fn in_row(&self, u: usize) -> &Bitset {
        &self.inn[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].count()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.inn[u].count()
    }

    /// `(δ⁺, δ⁻)`; `(0, 0)` for the empty graph.
    pub fn min_out_in_degree(&self) -> (usize, usize) {
        if self.n == 0 {
            return (0, 0);
        }
        let d_out = (0..self.n).map(|u| self.out_degree(u)).min().unwrap();
        let d_in = (0..self.n).map(|u| self.in_degree(u)).min().unwrap();
        (d_out, d_in)
    }

    /// Minimum semidegree `δ⁰ = min(δ⁺, δ⁻)`.
    pub fn min_semidegree(&self) -> usize {
        let (o, i) = self.min_out_in_degree();
        o.min(i)
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reaches_all(0, Direction::Out) && self.reaches_all(0, Direction::In)
    }

    fn reaches_all(&self, start: usize, dir: Direction) -> bool {
        let mut seen = Bitset::new(self.n);
        seen.insert(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            let row = match dir {
                Direction::Out => &self.out[u],
                Direction::In => &self.inn[u],
            };
            for v in row.iter() {
                if seen.insert(v) {
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }
}

impl core::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "Digraph(n={}, edges={})", self.n, self.edge_count)
    }
}
