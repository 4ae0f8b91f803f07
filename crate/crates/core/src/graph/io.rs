//! Plain-text graph interchange: edge lists and Graphviz DOT.
//!
//! Edge-list format: a header line `n m`, then `m` lines `u v`. Blank lines
//! and `#` comments are permitted anywhere.

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected two integers, got {:?}", line),
            });
        }
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("not a non-negative integer: {:?}", s),
            })
        };
        let (a, b) = (parse(fields[0])?, parse(fields[1])?);
        match header {
            None => header = Some((a, b)),
            Some(_) => edges.push((a, b)),
        }
    }
    let (n, m) = header.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing `n m` header line".to_string(),
    })?;
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("header declares {} edges, found {}", m, edges.len()),
        });
    }
    Graph::build(n, &edges)
}

/// Canonical edge-list text: header plus edges sorted with `u < v`.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

/// Graphviz DOT form. Every vertex gets a node statement so isolated
/// vertices survive a round through other tools; labels become `label`
/// attributes when present.
pub fn render_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {} [label=\"{}\"];\n", v, escape(l))),
            None => out.push_str(&format!("  {};\n", v)),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", u, v));
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
