//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is `n m`; exactly `m` lines `u v` follow
//! (0-indexed, whitespace separated). Blank lines are ignored and the final
//! newline is optional. Repeated edges are merged, so the parsed graph may have
//! fewer than `m` edges.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} edges declared in the header"),
            });
        }
        let (u, v) = parse_pair(line, content)?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {vertex} out of range for n = {n}"),
                });
            }
        }
        if u == v {
            return Err(Error::Parse {
                line,
                message: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize)> {
    let mut fields = content.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        field.parse().map_err(|_| Error::Parse {
            line,
            message: format!("`{field}` is not a non-negative integer"),
        })
    };
    let pair = (next("first field")?, next("second field")?);
    if let Some(extra) = fields.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected trailing field `{extra}`"),
        });
    }
    Ok(pair)
}

/// Serialises `g` with edges as `u v`, `u < v`, in lexicographic order.
pub fn write(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::random_connected;
    use proptest::prelude::*;

    #[test]
    fn comments_blank_lines_and_no_trailing_newline() {
        let g = parse("# a path\n\n4 3\n0 1\n# middle\n1 2\n2 3").unwrap();
        assert_eq!(g, Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap());
    }

    #[test]
    fn writes_header_and_sorted_edges() {
        let g = Graph::from_edges(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(write(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = |text: &str| match parse(text) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("# only comments\n"), 0);
        assert_eq!(err("3\n"), 1);
        assert_eq!(err("3 1\n0 x\n"), 2);
        assert_eq!(err("3 1\n0 3\n"), 2);
        assert_eq!(err("3 1\n\n1 1\n"), 3);
        assert_eq!(err("3 1\n0 1\n1 2\n"), 3);
        assert_eq!(err("3 2\n0 1\n"), 2);
        assert_eq!(err("3 1\n0 1 2\n"), 2);
    }

    proptest! {
        #[test]
        fn round_trip(n in 2usize..15, percent in 0u32..60, seed in any::<u64>()) {
            let g = random_connected(n, percent as f64 / 100.0, seed).unwrap();
            prop_assert_eq!(parse(&write(&g)).unwrap(), g);
        }
    }
}
