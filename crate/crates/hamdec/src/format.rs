//! Text formats: the bipartite edge-list graph format and cycle files.
//!
//! Graph format: a header line `bipartite-digraph <nA> <nB>` followed by
//! one directed edge per line, `A<i> B<j>` or `B<j> A<i>`, meaning an edge
//! from the first vertex to the second. Blank lines and `#` comments are
//! skipped. In-side edges, duplicate edges and out-of-range indices are
//! rejected.
//!
//! Cycle format: the vertex sequence of one Hamilton cycle, one vertex
//! token per line.

use anyhow::{bail, Context, Result};

use hamdec_core::digraph::{BipartiteDigraph, GraphBuilder, Side, VertexId};
use hamdec_core::generators::HamCycle;

pub const GRAPH_HEADER: &str = "bipartite-digraph";

pub fn parse_vertex(token: &str) -> Result<VertexId> {
    let (side, index) = token.split_at(1);
    let side = match side {
        "A" => Side::A,
        "B" => Side::B,
        other => bail!("vertex token must start with A or B, got {other:?}"),
    };
    let index: usize = index
        .parse()
        .with_context(|| format!("bad vertex index in token {token:?}"))?;
    Ok(VertexId::new(side, index))
}

pub fn write_vertex(v: VertexId) -> String {
    format!("{v}")
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(no, line)| (no + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty())
}

pub fn parse_graph(text: &str) -> Result<BipartiteDigraph> {
    let mut lines = content_lines(text);
    let (_, header) = lines.next().context("empty graph file")?;
    let mut parts = header.split_whitespace();
    match parts.next() {
        Some(GRAPH_HEADER) => {}
        other => bail!("expected header {GRAPH_HEADER:?}, got {other:?}"),
    }
    let n_a: usize = parts
        .next()
        .context("header missing nA")?
        .parse()
        .context("bad nA in header")?;
    let n_b: usize = parts
        .next()
        .context("header missing nB")?
        .parse()
        .context("bad nB in header")?;
    if parts.next().is_some() {
        bail!("trailing tokens in header");
    }

    let mut builder = GraphBuilder::new(n_a, n_b);
    for (no, line) in lines {
        let mut tokens = line.split_whitespace();
        let from = parse_vertex(tokens.next().with_context(|| format!("line {no}: missing from-vertex"))?)
            .with_context(|| format!("line {no}"))?;
        let to = parse_vertex(tokens.next().with_context(|| format!("line {no}: missing to-vertex"))?)
            .with_context(|| format!("line {no}"))?;
        if tokens.next().is_some() {
            bail!("line {no}: trailing tokens");
        }
        builder
            .add_edge(from, to)
            .with_context(|| format!("line {no}: edge {from}->{to} rejected"))?;
    }
    Ok(builder.build())
}

pub fn write_graph(g: &BipartiteDigraph) -> String {
    let mut out = format!("{GRAPH_HEADER} {} {}\n", g.n_a(), g.n_b());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.from, e.to));
    }
    out
}

pub fn parse_cycle(text: &str) -> Result<HamCycle> {
    let mut seq = Vec::new();
    for (no, line) in content_lines(text) {
        seq.push(parse_vertex(line).with_context(|| format!("line {no}"))?);
    }
    HamCycle::new(seq).map_err(|e| anyhow::anyhow!("not a valid cycle sequence: {e}"))
}

pub fn write_cycle(cycle: &HamCycle) -> String {
    let mut out = String::new();
    for &v in cycle.vertices() {
        out.push_str(&format!("{v}\n"));
    }
    out
}
