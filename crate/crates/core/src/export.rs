//! Text exports of a circulant graph. Edges are always emitted once, as
//! `(u, v)` with `u < v`, in ascending order, so output is byte-stable.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;

use crate::circulant::CirculantGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    EdgeList,
    Json,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Self::Dot),
            "edge-list" => Ok(Self::EdgeList),
            "json" => Ok(Self::Json),
            other => Err(Error::Parse(format!("unknown graph format {other:?}"))),
        }
    }
}

#[derive(Debug, Deserialize)]
struct GraphDoc {
    n: usize,
    connection: Vec<usize>,
    edges: Vec<[usize; 2]>,
}

pub fn export_graph(graph: &CirculantGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(graph),
        GraphFormat::EdgeList => {
            let mut out = String::with_capacity(graph.edge_count() * 10);
            let mut buf = itoa::Buffer::new();
            for (u, v) in graph.edges() {
                out.push_str(buf.format(u));
                out.push(' ');
                out.push_str(buf.format(v));
                out.push('\n');
            }
            out
        }
        GraphFormat::Json => to_json(graph),
    }
}

/// Same layout `serde_json::to_string` gives for [`GraphDoc`], written directly
/// because graphs with 10^5+ edges are exported in bulk.
fn to_json(graph: &CirculantGraph) -> String {
    let mut buf = itoa::Buffer::new();
    let mut out = String::with_capacity(graph.edge_count() * 12 + 64);
    out.push_str("{\"n\":");
    out.push_str(buf.format(graph.n()));
    out.push_str(",\"connection\":[");
    for (i, &s) in graph.connection().members().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(buf.format(s));
    }
    out.push_str("],\"edges\":[");
    for (i, (u, v)) in graph.edges().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('[');
        out.push_str(buf.format(u));
        out.push(',');
        out.push_str(buf.format(v));
        out.push(']');
    }
    out.push_str("]}\n");
    out
}

fn to_dot(graph: &CirculantGraph) -> String {
    let name = match graph.k_param() {
        Some(k) => format!("andrasfai_{k}"),
        None => format!("circulant_{}", graph.n()),
    };
    let mut out = format!("graph {name} {{\n");
    for v in 0..graph.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Parses `u v` lines; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Vec<(usize, usize)>> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim_ascii().is_empty())
        .map(|(i, line)| {
            let mut fields = line.split_ascii_whitespace().map(str::parse::<usize>);
            match (fields.next(), fields.next(), fields.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => Ok((u, v)),
                _ => Err(Error::Parse(format!("line {}: expected \"u v\", got {line:?}", i + 1))),
            }
        })
        .collect()
}

/// Rebuilds a graph from the JSON export, checking that its edges agree with its connection set.
pub fn parse_graph_json(text: &str) -> Result<CirculantGraph> {
    let doc: GraphDoc = serde_json::from_str(text)?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, v]| (u, v)).collect();
    let graph = CirculantGraph::from_edges(doc.n, &edges)?;
    if graph.connection().members() != doc.connection.as_slice() {
        return Err(Error::NotCirculant("edges disagree with the stated connection set".into()));
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{andrasfai, build_circulant};

    #[test]
    fn k2_edge_list() {
        assert_eq!(export_graph(&andrasfai(1).unwrap(), GraphFormat::EdgeList), "0 1\n");
    }

    #[test]
    fn and3_edge_count() {
        let text = export_graph(&andrasfai(3).unwrap(), GraphFormat::EdgeList);
        assert_eq!(text.lines().count(), 12);
        assert_eq!(text.lines().next(), Some("0 1"));
    }

    #[test]
    fn five_cycle_dot() {
        let dot = export_graph(&build_circulant(5, &[1, 4]).unwrap(), GraphFormat::Dot);
        assert_eq!(
            dot,
            "graph circulant_5 {\n  0;\n  1;\n  2;\n  3;\n  4;\n  0 -- 1;\n  0 -- 4;\n  1 -- 2;\n  2 -- 3;\n  3 -- 4;\n}\n"
        );
    }

    #[test]
    fn and4_dot_header_and_edges() {
        let dot = export_graph(&andrasfai(4).unwrap(), GraphFormat::Dot);
        assert!(dot.starts_with("graph andrasfai_4 {\n"));
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 22);
    }

    #[test]
    fn json_schema() {
        let json = export_graph(&andrasfai(2).unwrap(), GraphFormat::Json);
        assert_eq!(json, "{\"n\":5,\"connection\":[1,4],\"edges\":[[0,1],[0,4],[1,2],[2,3],[3,4]]}\n");
        let back = parse_graph_json(&json).unwrap();
        assert_eq!(back.connection().members(), &[1, 4]);
    }

    #[test]
    fn edge_list_round_trip() {
        for k in 1..=30 {
            let g = andrasfai(k).unwrap();
            let edges = parse_edge_list(&export_graph(&g, GraphFormat::EdgeList)).unwrap();
            let back = CirculantGraph::from_edges(g.n(), &edges).unwrap();
            assert_eq!(back.connection(), g.connection());
        }
    }

    #[test]
    fn malformed_edge_list() {
        assert!(parse_edge_list("0 1\n2\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("a b\n").is_err());
        assert_eq!(parse_edge_list("\n0 1\n\n").unwrap(), vec![(0, 1)]);
    }

    #[test]
    fn format_names() {
        assert_eq!("dot".parse::<GraphFormat>().unwrap(), GraphFormat::Dot);
        assert_eq!("edge-list".parse::<GraphFormat>().unwrap(), GraphFormat::EdgeList);
        assert!("png".parse::<GraphFormat>().is_err());
    }
}
