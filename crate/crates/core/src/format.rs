//! Plain-text graph and tree files.
//!
//! Graphs: a `p ecg <n> <m>` header followed by `m` lines `e <u> <v> <c>`.
//! Trees: a `t <order>` header followed by `e <u> <v> <c>` lines, or a single
//! `v <id>` line for a one-vertex tree. Vertices are 1-indexed in files and
//! 0-indexed in memory; `#` starts a comment line. Writers sort edges by
//! endpoints.

use std::collections::HashSet;

use crate::error::FormatError;
use crate::graph::{Color, EdgeColoredGraph, VertexId};
use crate::tree::{ColoredTree, TreeMode};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !line.starts_with('#')).then(|| (i + 1, line.split_whitespace().collect()))
    })
}

fn number<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T, FormatError> {
    tok.parse()
        .map_err(|_| FormatError::new(line, format!("bad {what} {tok:?}")))
}

fn vertex(line: usize, tok: &str, n: usize) -> Result<VertexId, FormatError> {
    let v: usize = number(line, tok, "vertex")?;
    if v == 0 || v > n {
        return Err(FormatError::new(line, format!("vertex {v} outside 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<EdgeColoredGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| FormatError::new(0, "empty graph file"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "ecg" {
        return Err(FormatError::new(hline, "expected `p ecg <n> <m>`"));
    }
    let n: usize = number(hline, header[2], "vertex count")?;
    let m: usize = number(hline, header[3], "edge count")?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, toks) in lines {
        last_line = line;
        if toks.len() != 4 || toks[0] != "e" {
            return Err(FormatError::new(line, "expected `e <u> <v> <c>`"));
        }
        let u = vertex(line, toks[1], n)?;
        let v = vertex(line, toks[2], n)?;
        let c: Color = number(line, toks[3], "color")?;
        edges.push((line, u, v, c));
    }
    if edges.len() != m {
        return Err(FormatError::new(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let mut seen = HashSet::new();
    for &(line, u, v, c) in &edges {
        if u == v {
            return Err(FormatError::new(line, format!("loop at vertex {}", u + 1)));
        }
        if c == 0 {
            return Err(FormatError::new(line, "colors must be positive"));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(FormatError::new(line, format!("parallel edge {}-{}", u + 1, v + 1)));
        }
    }
    EdgeColoredGraph::new(n, edges.into_iter().map(|(_, u, v, c)| (u, v, c)))
        .map_err(|e| FormatError::new(0, e.to_string()))
}

pub fn write_graph(graph: &EdgeColoredGraph) -> String {
    let mut edges: Vec<_> = graph.edges().to_vec();
    edges.sort_by_key(|e| (e.u, e.v));
    let mut out = format!("p ecg {} {}\n", graph.n(), graph.m());
    for e in edges {
        out.push_str(&format!("e {} {} {}\n", e.u + 1, e.v + 1, e.color));
    }
    out
}

pub fn parse_tree(graph: &EdgeColoredGraph, text: &str, mode: TreeMode) -> Result<ColoredTree, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| FormatError::new(0, "empty tree file"))?;
    if header.len() != 2 || header[0] != "t" {
        return Err(FormatError::new(hline, "expected `t <order>`"));
    }
    let order: usize = number(hline, header[1], "order")?;
    let mut edges = Vec::new();
    let mut single = None;
    for (line, toks) in lines {
        match toks.as_slice() {
            ["v", v] if order == 1 && single.is_none() => single = Some(vertex(line, v, graph.n())?),
            ["e", u, v, c] => {
                let (u, v) = (vertex(line, u, graph.n())?, vertex(line, v, graph.n())?);
                let c: Color = number(line, c, "color")?;
                let e = graph
                    .edge_between(u, v)
                    .ok_or_else(|| FormatError::new(line, format!("no edge {}-{} in graph", u + 1, v + 1)))?;
                if graph.color(e) != c {
                    return Err(FormatError::new(
                        line,
                        format!("edge {}-{} has color {}, not {c}", u + 1, v + 1, graph.color(e)),
                    ));
                }
                edges.push(e);
            }
            _ => return Err(FormatError::new(line, "expected `e <u> <v> <c>` or `v <id>`")),
        }
    }
    let tree = match single {
        Some(v) => ColoredTree::single(v, mode),
        None if edges.is_empty() => return Err(FormatError::new(hline, "tree lists no vertices")),
        None => ColoredTree::from_edges(graph, edges, mode),
    };
    if tree.order() != order {
        return Err(FormatError::new(
            hline,
            format!("header declares order {order}, edges span {}", tree.order()),
        ));
    }
    Ok(tree)
}

pub fn write_tree(graph: &EdgeColoredGraph, tree: &ColoredTree) -> String {
    let mut out = format!("t {}\n", tree.order());
    if tree.edges.is_empty() {
        if let Some(v) = tree.vertices.first() {
            out.push_str(&format!("v {}\n", v + 1));
        }
        return out;
    }
    let mut edges: Vec<_> = tree.edges.iter().map(|&e| graph.edge(e)).collect();
    edges.sort_by_key(|e| (e.u, e.v));
    for e in edges {
        out.push_str(&format!("e {} {} {}\n", e.u + 1, e.v + 1, e.color));
    }
    out
}
