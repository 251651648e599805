//! Text formats: `sand-config v1`, `sand-rule v1` and the ASCII renderer.
//!
//! Both file formats are line based. Blank lines and lines starting with `#`
//! are skipped; the first remaining line must be the version header.

mod config;
mod render;
mod rule;

use thiserror::Error;

use crate::config::ParseHeightError;

pub use config::{emit_config, parse_config};
pub use render::{parse_dump, render_ascii, RenderOptions};
pub use rule::{emit_rule, parse_rule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected header `{0}`")]
    Header(&'static str),
    #[error("unexpected end of input")]
    Eof,
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("duplicate key `{0}`")]
    Duplicate(String),
    #[error("missing `{0}`")]
    Missing(&'static str),
    #[error("unknown kind `{0}` (expected finite, periodic, affine or general)")]
    UnknownKind(String),
    #[error("`{key}` is not allowed for kind {kind}")]
    WrongKind { key: String, kind: &'static str },
    #[error(transparent)]
    Height(#[from] ParseHeightError),
    #[error("invalid integer `{0}`")]
    Integer(String),
    #[error("empty period")]
    EmptyPeriod,
    #[error("column {0} set twice")]
    DuplicateColumn(i64),
    #[error("slope must be finite")]
    InfiniteSlope,
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("arity {found}, expected {expected}")]
    Arity { expected: usize, found: usize },
    #[error("{0}")]
    Range(String),
    #[error("malformed line: {0}")]
    Syntax(String),
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_int(line: usize, s: &str) -> Result<i64, ParseError> {
    s.trim()
        .parse()
        .map_err(|_| err(line, ParseErrorKind::Integer(s.trim().to_string())))
}

fn key_value(line: usize, l: &str) -> Result<(&str, &str), ParseError> {
    l.split_once(':')
        .map(|(k, v)| (k.trim(), v.trim()))
        .ok_or_else(|| err(line, ParseErrorKind::Syntax(l.to_string())))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &'static str,
) -> Result<(), ParseError> {
    match lines.next() {
        Some((_, l)) if l.split_whitespace().eq(header.split_whitespace()) => Ok(()),
        Some((n, _)) => Err(err(n, ParseErrorKind::Header(header))),
        None => Err(err(1, ParseErrorKind::Header(header))),
    }
}

#[cfg(test)]
mod tests;
