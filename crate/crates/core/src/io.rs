//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v
//! ...
//! ```
//!
//! Ids are 0-based and whitespace separated. Exactly `m` edge lines must
//! follow the header; duplicate pairs collapse as in [`Graph::from_edges`].

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let a = parse_field(fields.next(), line_no)?;
        let b = parse_field(fields.next(), line_no)?;
        if fields.next().is_some() {
            return Err(parse_err(line_no, "expected exactly two fields"));
        }
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(parse_err(line_no, format!("vertex out of range 0..{n}")));
                }
                if a == b {
                    return Err(parse_err(line_no, format!("loop edge at {a}")));
                }
                edges.push((a, b));
            }
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing \"n m\" header"))?;
    if edges.len() != m {
        return Err(parse_err(
            0,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::from_edges(n, &edges)
}

fn parse_field(field: Option<&str>, line: usize) -> Result<usize> {
    let field = field.ok_or_else(|| parse_err(line, "expected two fields"))?;
    field
        .parse()
        .map_err(|_| parse_err(line, format!("not a nonnegative integer: {field:?}")))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Serializes `g`, writing each entry of `comments` as a `# ` line first.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3), (1, 3)]).unwrap();
        let text = write_edge_list(&g, &["hello".into()]);
        assert!(text.starts_with("# hello\n4 3\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_edge_list("# x\n\n3 1\n# mid\n0   2\n").unwrap();
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            "",
            "3\n",
            "3 1\n0 5\n",
            "3 2\n0 1\n",
            "3 1\n1 1\n",
            "3 1\n0 x\n",
            "2 1\n0 1 1\n",
        ] {
            assert!(matches!(parse_edge_list(text), Err(Error::Parse { .. })), "{text:?}");
        }
    }
}
