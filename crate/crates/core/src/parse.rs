//! Line-oriented graph text format.
//!
//! ```text
//! n <count>
//! edge <u> <v>        # repeated; 0-based; u != v
//! order <p0> <p1> ... # optional; a permutation of 0..n-1
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Errors carry the 1-based
//! line number they were raised on.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Graph, LinearOrder};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: malformed line: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex index {index} out of range (n = {n})")]
    OutOfRange { line: usize, index: usize, n: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: self-loop at vertex {0}", .vertex)]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: order is not a permutation of 0..{n}")]
    NotAPermutation { line: usize, n: usize },
}

fn malformed(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError::Malformed { line, reason: reason.into() }
}

fn parse_index(line: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| malformed(line, format!("expected {what}, got {tok:?}")))
}

/// Parses the graph text format. Returns the graph and the spine order if an
/// `order` line is present.
pub fn parse_graph(text: &str) -> Result<(Graph, Option<LinearOrder>), ParseError> {
    let mut n: Option<(usize, usize)> = None; // (count, line declared on)
    let mut edges: Vec<(usize, usize, usize)> = Vec::new(); // (u, v, line)
    let mut order: Option<(Vec<usize>, usize)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        let mut toks = body.split_whitespace();
        let Some(head) = toks.next() else { continue };
        match head {
            "n" => {
                if n.is_some() {
                    return Err(malformed(line, "repeated n line"));
                }
                let count = parse_index(line, toks.next().ok_or_else(|| malformed(line, "n needs a count"))?, "a vertex count")?;
                if toks.next().is_some() {
                    return Err(malformed(line, "trailing tokens after n <count>"));
                }
                n = Some((count, line));
            }
            "edge" => {
                let u = parse_index(line, toks.next().ok_or_else(|| malformed(line, "edge needs two endpoints"))?, "a vertex index")?;
                let v = parse_index(line, toks.next().ok_or_else(|| malformed(line, "edge needs two endpoints"))?, "a vertex index")?;
                if toks.next().is_some() {
                    return Err(malformed(line, "trailing tokens after edge <u> <v>"));
                }
                edges.push((u, v, line));
            }
            "order" => {
                if order.is_some() {
                    return Err(malformed(line, "repeated order line"));
                }
                let perm = toks
                    .map(|t| parse_index(line, t, "a vertex index"))
                    .collect::<Result<Vec<_>, _>>()?;
                order = Some((perm, line));
            }
            other => return Err(malformed(line, format!("unknown directive {other:?}"))),
        }
    }

    let Some((n, _)) = n else {
        let line = text.lines().count() + 1;
        return Err(malformed(line, "missing n line"));
    };

    let mut seen = std::collections::BTreeSet::new();
    for &(u, v, line) in &edges {
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::OutOfRange { line, index: x, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge { line, u: u.min(v), v: u.max(v) });
        }
    }
    let g = Graph::new(n, edges.iter().map(|&(u, v, _)| (u, v)))
        .unwrap_or_else(|e| unreachable!("edges pre-checked: {e}"));

    let order = match order {
        None => None,
        Some((perm, line)) => {
            for &x in &perm {
                if x >= n {
                    return Err(ParseError::OutOfRange { line, index: x, n });
                }
            }
            match LinearOrder::new(perm) {
                Ok(o) if o.len() == n => Some(o),
                _ => return Err(ParseError::NotAPermutation { line, n }),
            }
        }
    };

    Ok((g, order))
}

/// Writes a graph (and optional order) back out in the same text format.
pub fn format_graph(g: &Graph, order: Option<&LinearOrder>) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", g.n()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "edge {u} {v}").unwrap();
    }
    if let Some(o) = order {
        out.push_str("order");
        for &v in o.perm() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_nonempty() {
        let (g, o) = parse_graph("n 2\nedge 0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
        assert!(o.is_none());
    }

    #[test]
    fn with_order() {
        let (g, o) = parse_graph("n 3\nedge 0 1\nedge 1 2\norder 2 0 1").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(o.unwrap().perm(), &[2, 0, 1]);
    }

    #[test]
    fn out_of_range_reports_line() {
        let err = parse_graph("n 2\nedge 0 2").unwrap_err();
        assert_eq!(err, ParseError::OutOfRange { line: 2, index: 2, n: 2 });
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# a triangle\nn 3\n\nedge 0 1  # first\nedge 1 2\nedge 0 2\n";
        let (g, o) = parse_graph(text).unwrap();
        assert_eq!(g.m(), 3);
        assert!(o.is_none());
    }

    #[test]
    fn error_cases() {
        assert!(matches!(parse_graph(""), Err(ParseError::Malformed { .. })));
        assert!(matches!(parse_graph("n 2\nn 3"), Err(ParseError::Malformed { line: 2, .. })));
        assert_eq!(
            parse_graph("n 3\nedge 1 1"),
            Err(ParseError::SelfLoop { line: 2, vertex: 1 })
        );
        assert_eq!(
            parse_graph("n 3\nedge 0 1\nedge 1 0"),
            Err(ParseError::DuplicateEdge { line: 3, u: 0, v: 1 })
        );
        assert_eq!(
            parse_graph("n 3\norder 0 1"),
            Err(ParseError::NotAPermutation { line: 2, n: 3 })
        );
        assert_eq!(
            parse_graph("n 3\norder 0 1 1"),
            Err(ParseError::NotAPermutation { line: 2, n: 3 })
        );
        assert!(matches!(parse_graph("n 3\nwat 1"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("n 3\nedge 0"), Err(ParseError::Malformed { line: 2, .. })));
        assert!(matches!(parse_graph("n x"), Err(ParseError::Malformed { line: 1, .. })));
    }

    #[test]
    fn roundtrip() {
        let text = "n 4\nedge 0 1\nedge 0 3\nedge 2 3\norder 3 1 0 2\n";
        let (g, o) = parse_graph(text).unwrap();
        assert_eq!(format_graph(&g, o.as_ref()), text);
        let (g2, o2) = parse_graph(&format_graph(&g, o.as_ref())).unwrap();
        assert_eq!(g, g2);
        assert_eq!(o, o2);
    }

    #[test]
    fn isolated_vertices_allowed() {
        let (g, _) = parse_graph("n 5\nedge 1 3").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(0), 0);
    }
}
