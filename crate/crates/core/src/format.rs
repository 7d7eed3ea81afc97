//! The Cayley-table text format.
//!
//! ```text
//! # optional comment lines
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Lines starting with `#` are ignored. The first remaining line is the
//! order `n`; the next `n` lines hold `n` indices separated by single spaces.
//! The file must end with a newline and contain nothing after the table
//! except comments.

use std::path::Path;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};

#[derive(Error, Debug)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid group table: {0}")]
    Group(#[from] GroupError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn parse_err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Parse { line, message: message.into() }
}

fn parse_index(tok: &str, line: usize) -> Result<usize, FormatError> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(parse_err(line, format!("expected a decimal index, found {tok:?}")));
    }
    tok.parse().map_err(|_| parse_err(line, format!("index {tok:?} does not fit")))
}

pub fn parse_group(text: &str) -> Result<FiniteGroup, FormatError> {
    if !text.is_ascii() {
        let line = text[..text.find(|c: char| !c.is_ascii()).unwrap()].matches('\n').count() + 1;
        return Err(parse_err(line, "non-ASCII character"));
    }
    let Some(body) = text.strip_suffix('\n') else {
        let line = text.matches('\n').count() + 1;
        return Err(parse_err(line, "missing trailing newline"));
    };
    let mut lines = body.split('\n').enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or_else(|| parse_err(1, "missing order line"))?;
    let order = parse_index(header, line_no)?;
    if order == 0 {
        return Err(parse_err(line_no, "order must be positive"));
    }
    if order > crate::group::MAX_ORDER {
        return Err(parse_err(line_no, format!("order {order} exceeds the cap")));
    }

    let mut table = Vec::with_capacity(order * order);
    let mut last_line = line_no;
    for row in 0..order {
        let (line_no, l) =
            lines.next().ok_or_else(|| parse_err(last_line + 1, format!("expected row {row}, found end of file")))?;
        last_line = line_no;
        let mut count = 0;
        for tok in l.split(' ') {
            let v = parse_index(tok, line_no)?;
            if v >= order {
                return Err(parse_err(line_no, format!("index {v} out of range 0..{order}")));
            }
            table.push(v as u32);
            count += 1;
        }
        if count != order {
            return Err(parse_err(line_no, format!("expected {order} entries, found {count}")));
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, "unexpected content after the table"));
    }
    Ok(FiniteGroup::from_flat(order, table)?)
}

pub fn write_group(g: &FiniteGroup) -> String {
    let mut out = String::with_capacity(g.order() * g.order() * 3 + 8);
    out.push_str(&g.order().to_string());
    out.push('\n');
    for i in g.elements() {
        let mut first = true;
        for v in g.row(i) {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&v.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn read_group_file(path: impl AsRef<Path>) -> Result<FiniteGroup, FormatError> {
    let path = path.as_ref();
    let text =
        std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse_group(&text)
}

pub fn write_group_file(path: impl AsRef<Path>, g: &FiniteGroup) -> Result<(), FormatError> {
    let path = path.as_ref();
    std::fs::write(path, write_group(g)).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}
