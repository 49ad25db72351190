//! DIMACS `col` and JSON serialisation of [`Graph`].
//!
//! DIMACS files are 1-based. Vertex labels travel in comment lines of the
//! form `c label <v> <text>`, again with a 1-based `v`. The JSON form is
//! 0-based: `{"n": 3, "edges": [[0, 1]], "labels": {"0": "u"}}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Graph, GraphBuilder, Vertex};

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    for (v, label) in g.labels() {
        writeln!(out, "c label {} {}", v + 1, label).unwrap();
    }
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse::<usize>().map_err(|_| {
        parse_err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

/// Parses DIMACS `col` text. Rejects a missing or repeated `p` line, edges
/// before the header, out-of-range indices, duplicate edges, self-loops and
/// an edge count that disagrees with the header.
pub fn from_dimacs(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize, GraphBuilder)> = None;
    let mut labels: Vec<(usize, usize, String)> = Vec::new();
    let mut seen_edges = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("c") => {
                if toks.next() == Some("label") {
                    let v = parse_index(toks.next(), line_no, "label vertex")?;
                    let rest = line
                        .splitn(4, char::is_whitespace)
                        .nth(3)
                        .map(str::trim)
                        .unwrap_or("");
                    labels.push((line_no, v, rest.to_string()));
                }
            }
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "repeated problem line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            line_no,
                            format!(
                                "expected `p edge n m`, found format {:?}",
                                other.unwrap_or("")
                            ),
                        ))
                    }
                }
                let n = parse_index(toks.next(), line_no, "vertex count")?;
                let m = parse_index(toks.next(), line_no, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line_no, "trailing tokens on problem line"));
                }
                header = Some((n, m, GraphBuilder::new(n)));
            }
            Some("e") => {
                let (n, _, b) = header
                    .as_mut()
                    .ok_or_else(|| parse_err(line_no, "edge line before problem line"))?;
                let u = parse_index(toks.next(), line_no, "edge endpoint")?;
                let v = parse_index(toks.next(), line_no, "edge endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > *n {
                        return Err(parse_err(
                            line_no,
                            format!("vertex index {w} out of range 1..={n}"),
                        ));
                    }
                }
                match b.add_edge(u - 1, v - 1) {
                    Ok(true) => seen_edges += 1,
                    Ok(false) => return Err(parse_err(line_no, format!("duplicate edge {u} {v}"))),
                    Err(GraphError::SelfLoop(_)) => {
                        return Err(parse_err(line_no, format!("self-loop at {u}")))
                    }
                    Err(e) => return Err(e),
                }
            }
            Some(other) => {
                return Err(parse_err(line_no, format!("unknown line type `{other}`")));
            }
            None => {}
        }
    }

    let (n, m, mut b) = header.ok_or_else(|| parse_err(0, "missing problem line `p edge n m`"))?;
    if seen_edges != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges but {seen_edges} were listed"),
        ));
    }
    for (line_no, v, text) in labels {
        if v == 0 || v > n {
            return Err(parse_err(
                line_no,
                format!("label vertex {v} out of range 1..={n}"),
            ));
        }
        b.set_label(v - 1, text);
    }
    Ok(b.build())
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Graph, GraphError> {
    from_dimacs(&std::fs::read_to_string(path)?)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>) -> Result<(), GraphError> {
    std::fs::write(path, to_dimacs(g))?;
    Ok(())
}

/// JSON shape of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[Vertex; 2]>,
    #[serde(default)]
    pub labels: BTreeMap<Vertex, String>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            labels: g.labels().clone(),
        }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(j: GraphJson) -> Result<Self, Self::Error> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))?.with_labels(j.labels)
    }
}

pub fn to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphJson::from(g)).expect("graph json is always serialisable")
}

pub fn from_json(text: &str) -> Result<Graph, GraphError> {
    let j: GraphJson = serde_json::from_str(text)?;
    Graph::try_from(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = from_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn triangle_round_trip_with_labels() {
        let mut labels = BTreeMap::new();
        labels.insert(0, "u".to_string());
        labels.insert(2, "x_{1,2}".to_string());
        let k3 = Graph::complete(3).with_labels(labels).unwrap();
        let back = from_dimacs(&to_dimacs(&k3)).unwrap();
        assert_eq!(back, k3);
        assert_eq!(back.label(2), Some("x_{1,2}"));
    }

    #[test]
    fn rejects_out_of_range() {
        let err = from_dimacs("p edge 2 1\ne 1 3\n").unwrap_err();
        assert!(err.to_string().contains("out of range"), "{err}");
    }

    #[test]
    fn rejects_duplicates_and_bad_headers() {
        assert!(from_dimacs("p edge 2 2\ne 1 2\ne 2 1\n")
            .unwrap_err()
            .to_string()
            .contains("duplicate"));
        assert!(from_dimacs("e 1 2\n").is_err());
        assert!(from_dimacs("p edge two 1\n").is_err());
        assert!(from_dimacs("p edge 2 1\np edge 2 1\ne 1 2\n").is_err());
        assert!(from_dimacs("p edge 3 2\ne 1 2\n").is_err());
        assert!(from_dimacs("").is_err());
        assert!(from_dimacs("p edge 2 1\ne 1 1\n").is_err());
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(5);
        let text = to_json(&g).to_string();
        assert_eq!(from_json(&text).unwrap(), g);
    }
}
