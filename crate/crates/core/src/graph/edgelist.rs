//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! n m
//! u v      (m lines, 0 <= u < v < n)
//! ```

use super::Graph;
use crate::error::{Error, Result};
use std::collections::HashSet;
use std::fmt::Write;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
        line: 1,
        message: "missing header \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = parse_pair(line, l)?;
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} declared edges"),
            });
        }
        if v >= n {
            return Err(Error::Parse {
                line,
                message: format!("vertex {v} out of range for n = {n}"),
            });
        }
        if u >= v {
            let message = if u == v {
                format!("self-loop at {u}")
            } else {
                format!("expected u < v, got {u} {v}")
            };
            return Err(Error::Parse { line, message });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {u} {v}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("declared {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, got {:?}", text),
        });
    }
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            message: format!("not a non-negative integer: {s:?}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n# middle\n1 2\n0 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(write_edge_list(&g), "3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("3 2\n0 1\n1 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 3, message: "self-loop at 1".into() });

        let err = parse_edge_list("3 2\n0 1\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");

        let err = parse_edge_list("3 1\n0 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = parse_edge_list("3 1\n0 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn empty_edge_set() {
        let g = parse_edge_list("4 0\n").unwrap();
        assert_eq!((g.n(), g.m()), (4, 0));
    }
}
