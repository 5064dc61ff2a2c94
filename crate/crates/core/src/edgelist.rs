//! Plain-text edge-list format.
//!
//! A graph is one `p <vertex_count> <edge_count>` header line followed by
//! one `e <u> <v>` line per edge with 1-based vertex ids. Blank lines and
//! lines starting with `c` are ignored. Writing always emits edges in
//! lexicographic order, so output is canonical.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("missing `p <vertex_count> <edge_count>` header")]
    MissingHeader,
    #[error("header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Parses the edge-list format into a graph.
pub fn parse_edge_list(input: &str) -> Result<Graph, EdgeListError> {
    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Graph> = None;
    let mut edges_seen = 0usize;

    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(syntax(line_no, "duplicate `p` header"));
                }
                let n: usize = tokens
                    .next()
                    .ok_or_else(|| syntax(line_no, "missing vertex count"))?
                    .parse()
                    .map_err(|_| syntax(line_no, "vertex count is not a number"))?;
                let m: usize = tokens
                    .next()
                    .ok_or_else(|| syntax(line_no, "missing edge count"))?
                    .parse()
                    .map_err(|_| syntax(line_no, "edge count is not a number"))?;
                if tokens.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after header"));
                }
                header = Some((n, m));
                graph = Some(Graph::empty(n));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(syntax(line_no, "edge before `p` header"));
                };
                let u: usize = tokens
                    .next()
                    .ok_or_else(|| syntax(line_no, "missing first endpoint"))?
                    .parse()
                    .map_err(|_| syntax(line_no, "first endpoint is not a number"))?;
                let v: usize = tokens
                    .next()
                    .ok_or_else(|| syntax(line_no, "missing second endpoint"))?
                    .parse()
                    .map_err(|_| syntax(line_no, "second endpoint is not a number"))?;
                if tokens.next().is_some() {
                    return Err(syntax(line_no, "trailing tokens after edge"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(
                        line_no,
                        format!("endpoint out of range 1..={n}"),
                    ));
                }
                graph
                    .as_mut()
                    .expect("graph exists once header is read")
                    .insert_edge(u - 1, v - 1)
                    .map_err(|source| EdgeListError::Graph {
                        line: line_no,
                        source,
                    })?;
                edges_seen += 1;
            }
            Some(other) => {
                return Err(syntax(line_no, format!("unknown record `{other}`")));
            }
            None => unreachable!("blank lines are skipped"),
        }
    }

    let (_, declared) = header.ok_or(EdgeListError::MissingHeader)?;
    if declared != edges_seen {
        return Err(EdgeListError::EdgeCountMismatch {
            declared,
            found: edges_seen,
        });
    }
    Ok(graph.expect("graph exists once header is read"))
}

/// Writes a graph in the edge-list format, edges sorted lexicographically.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}
