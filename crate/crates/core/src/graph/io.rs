//! Edge-list text format.
//!
//! ```text
//! # comment
//! n m
//! i j        (m lines, 1-based vertex indices)
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Loops, duplicate
//! edges, and out-of-range indices are rejected with the offending line.

use std::fmt::Write as _;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_error(
            line_no,
            format!("expected two integers, found '{line}'"),
        ));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_error(line_no, format!("'{s}' is not a non-negative integer")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing 'n m' header"))?;
    let (n, m) = two_numbers(header_line, header)?;
    if n > MAX_VERTICES {
        return Err(parse_error(
            header_line,
            format!("{n} vertices exceeds the cap of {MAX_VERTICES}"),
        ));
    }

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if edges.len() == m {
            return Err(parse_error(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        let (i, j) = two_numbers(line_no, line)?;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(parse_error(
                line_no,
                format!("vertex index out of range 1..={n}"),
            ));
        }
        if i == j {
            return Err(parse_error(line_no, format!("self-loop at vertex {i}")));
        }
        let edge = (i.min(j) - 1, i.max(j) - 1);
        if edges.contains(&edge) {
            return Err(parse_error(line_no, format!("duplicate edge {i} {j}")));
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(parse_error(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (i, j) in g.edges() {
        writeln!(out, "{} {}", i + 1, j + 1).unwrap();
    }
    out
}
