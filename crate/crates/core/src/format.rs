//! Text formats for digraphs.
//!
//! * Matrix: `n` lines of `n` whitespace-separated `0`/`1` tokens.
//! * Arc list: a header `n <order>`, then one `u w` pair per line.
//!
//! Blank lines and lines starting with `#` are ignored in both. A file whose
//! first content line starts with `n` is read as an arc list.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::matrix::ZeroOneMatrix;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn number<T: std::str::FromStr>(line: usize, token: &str) -> Result<T> {
    token
        .parse()
        .or_else(|_| parse_err(line, format!("expected a number, got {token:?}")))
}

/// Reads a 0-1 matrix; entries other than 0 and 1 and ragged rows are errors.
pub fn parse_matrix(text: &str) -> Result<ZeroOneMatrix> {
    let mut rows = Vec::new();
    for (line, l) in content_lines(text) {
        let row = l
            .split_whitespace()
            .map(|t| number::<u64>(line, t))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    ZeroOneMatrix::from_rows(&rows)
}

pub fn parse_arc_list(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(Error::EmptyOrder);
    };
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", order] => number::<usize>(line, order)?,
        _ => return parse_err(line, "expected header \"n <order>\""),
    };
    let mut d = Digraph::new_empty(n)?;
    for (line, l) in lines {
        let (u, w) = match l.split_whitespace().collect::<Vec<_>>()[..] {
            [u, w] => (number(line, u)?, number(line, w)?),
            _ => return parse_err(line, "expected an arc \"u w\""),
        };
        d.add_arc(u, w).or_else(|e| parse_err(line, e.to_string()))?;
    }
    Ok(d)
}

/// Either format, decided by the first content line. A matrix with a 1 on the
/// diagonal is rejected with [`Error::NonzeroTrace`].
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let arc_list = content_lines(text)
        .next()
        .is_some_and(|(_, l)| l.split_whitespace().next() == Some("n"));
    if arc_list {
        parse_arc_list(text)
    } else {
        Digraph::from_matrix(&parse_matrix(text)?)
    }
}

pub fn write_matrix(d: &Digraph) -> String {
    write_rows(&d.to_matrix().rows())
}

/// One row per line, entries separated by single spaces.
pub fn write_rows(rows: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

pub fn write_arc_list(d: &Digraph) -> String {
    let mut out = format!("n {}\n", d.order());
    for (u, w) in d.arcs() {
        let _ = writeln!(out, "{u} {w}");
    }
    out
}

pub fn write_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, w) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {w};");
    }
    out.push_str("}\n");
    out
}
