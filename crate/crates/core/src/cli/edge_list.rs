//! Plain-text edge lists: a vertex count, then one `u v` pair per line.
//! Labels are 1-based, blank lines are skipped and `#` starts a comment.
//!
//! ```text
//! # path on six vertices
//! 6
//! 1 2
//! 2 3
//! ```

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Comment text, without the leading `#`, in input order.
    pub comments: Vec<String>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_label(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected a vertex label, found {tok:?}")))
}

/// Parses and validates an edge list.
pub fn parse_edge_list(text: &str) -> Result<EdgeListDocument> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut comments = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = match raw.split_once('#') {
            Some((body, comment)) => {
                comments.push(comment.trim().to_string());
                body
            }
            None => raw,
        };
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        let Some(n) = n else {
            if toks.len() != 1 {
                return Err(parse_err(line, "expected the vertex count on its own line"));
            }
            let count = parse_label(toks[0], line)?;
            if count > MAX_VERTICES {
                return Err(parse_err(
                    line,
                    format!("vertex count {count} exceeds {MAX_VERTICES}"),
                ));
            }
            n = Some(count);
            continue;
        };
        let [u, v] = toks[..] else {
            return Err(parse_err(line, "expected an edge \"u v\""));
        };
        let (u, v) = (parse_label(u, line)?, parse_label(v, line)?);
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(parse_err(
                    line,
                    format!("vertex {w} is out of range 1..={n}"),
                ));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    let n = n.ok_or_else(|| parse_err(text.lines().count().max(1), "missing vertex count"))?;
    Ok(EdgeListDocument { n, edges, comments })
}

impl EdgeListDocument {
    pub fn from_graph(g: &Graph) -> Self {
        EdgeListDocument {
            n: g.n(),
            edges: g.edges(),
            comments: Vec::new(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, self.edges.iter().copied())
    }

    /// Comments first, then the vertex count and the sorted, deduplicated
    /// edges with `u < v`.
    pub fn to_text(&self) -> String {
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let mut out = String::new();
        for c in &self.comments {
            out.push_str(&format!("# {c}\n"));
        }
        out.push_str(&format!("{}\n", self.n));
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}
