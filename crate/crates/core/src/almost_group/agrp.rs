//! Line-oriented `.agrp` definition files.
//!
//! ```text
//! # Z/2
//! elements 0 1
//! row 0 : 0 1
//! row 1 : 1 0
//! i 0 1
//! J 0
//! ```

use std::fmt::Write;

use super::{AlmostGroup, AlmostGroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: expected {0}")]
    Eof(String),
    #[error(transparent)]
    Structure(#[from] AlmostGroupError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Non-blank, comment-stripped lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

pub fn parse_agrp(text: &str) -> Result<AlmostGroup, ParseError> {
    let mut lines = content_lines(text);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| ParseError::Eof(what.to_string()))
    };

    let (ln, line) = next("`elements` line")?;
    let mut words = line.split_whitespace();
    if words.next() != Some("elements") {
        return Err(syntax(ln, "expected `elements <label> ...`"));
    }
    let elements: Vec<String> = words.map(str::to_string).collect();
    if elements.is_empty() {
        return Err(syntax(ln, "no elements listed"));
    }
    let lookup = |ln: usize, label: &str| {
        elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| syntax(ln, format!("unknown element `{label}`")))
    };

    let mut mul = Vec::with_capacity(elements.len());
    for expected in &elements {
        let (ln, line) = next(&format!("`row {expected} : ...`"))?;
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| syntax(ln, "row line needs `:`"))?;
        let mut head = head.split_whitespace();
        if head.next() != Some("row") {
            return Err(syntax(ln, "expected `row <label> : ...`"));
        }
        match (head.next(), head.next()) {
            (Some(l), None) if l == expected => {}
            (Some(l), None) => {
                return Err(syntax(
                    ln,
                    format!("expected row `{expected}`, found `{l}`"),
                ));
            }
            _ => return Err(syntax(ln, "malformed row header")),
        }
        let row = body
            .split_whitespace()
            .map(|w| lookup(ln, w))
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != elements.len() {
            return Err(syntax(
                ln,
                format!("row has {} entries, expected {}", row.len(), elements.len()),
            ));
        }
        mul.push(row);
    }

    let (ln, line) = next("`i` line")?;
    let mut words = line.split_whitespace();
    if words.next() != Some("i") {
        return Err(syntax(ln, "expected `i <label> ...`"));
    }
    let inv = words
        .map(|w| lookup(ln, w))
        .collect::<Result<Vec<_>, _>>()?;
    if inv.len() != elements.len() {
        return Err(syntax(ln, "i line must list one image per element"));
    }

    let (ln, line) = next("`J` line")?;
    let mut words = line.split_whitespace();
    if words.next() != Some("J") {
        return Err(syntax(ln, "expected `J <label> ...`"));
    }
    let j = words
        .map(|w| lookup(ln, w))
        .collect::<Result<Vec<_>, _>>()?;

    if let Ok((ln, _)) = next("") {
        return Err(syntax(ln, "trailing content after `J` line"));
    }
    Ok(AlmostGroup::build(elements.clone(), mul, inv, j)?)
}

pub fn format_agrp(g: &AlmostGroup) -> String {
    let mut out = String::new();
    let l = g.labels();
    writeln!(out, "elements {}", l.join(" ")).unwrap();
    for x in 0..g.len() {
        let row: Vec<&str> = (0..g.len()).map(|y| l[g.m(x, y)].as_str()).collect();
        writeln!(out, "row {} : {}", l[x], row.join(" ")).unwrap();
    }
    let inv: Vec<&str> = (0..g.len()).map(|x| l[g.inv(x)].as_str()).collect();
    writeln!(out, "i {}", inv.join(" ")).unwrap();
    let j: Vec<&str> = g.j_elements().iter().map(|&x| l[x].as_str()).collect();
    writeln!(out, "J {}", j.join(" ")).unwrap();
    out
}
