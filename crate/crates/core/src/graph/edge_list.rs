//! Plain-text edge lists:
//!
//! ```text
//! n 3
//! 0 1
//! 1 2
//! ```
//!
//! Vertices are 0-based. Blank lines are ignored; loops and repeated edges
//! (in either orientation) are rejected.

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| err(line, format!("expected a vertex index, found {token:?}")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing \"n <count>\" header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let n = match fields.as_slice() {
        ["n", count] => parse_index(count, header_line)?,
        _ => {
            return Err(err(
                header_line,
                format!("expected \"n <count>\", found {header:?}"),
            ))
        }
    };
    let mut g = Graph::empty(n).map_err(|e| err(header_line, e.to_string()))?;

    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let [u, v] = fields.as_slice() else {
            return Err(err(line, format!("expected \"u v\", found {text:?}")));
        };
        let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
        if u >= n || v >= n {
            return Err(err(
                line,
                format!("vertex out of range in {u} {v} (n = {n})"),
            ));
        }
        if u == v {
            return Err(err(line, format!("self-loop on vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge_unchecked(u, v);
    }
    Ok(g)
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_path() {
        let g = parse_edge_list("n 3\n0 1\n\n1   2\n").unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn single_vertex_needs_no_edges() {
        assert_eq!(parse_edge_list("n 1").unwrap(), Graph::complete(1).unwrap());
    }

    #[test]
    fn rejects_malformed_lines() {
        let line = |s: &str| match parse_edge_list(s) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected a parse error for {s:?}, got {other:?}"),
        };
        assert_eq!(line(""), 1);
        assert_eq!(line("3\n0 1"), 1);
        assert_eq!(line("n 0"), 1);
        assert_eq!(line("n 3\n0 1\n1 0"), 3);
        assert_eq!(line("n 3\n2 2"), 2);
        assert_eq!(line("n 3\n0 3"), 2);
        assert_eq!(line("n 3\n0 1 2"), 2);
        assert_eq!(line("n 3\n0 x"), 2);
    }
}
