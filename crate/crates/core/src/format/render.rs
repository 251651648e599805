//! Columns are drawn as stacks of `#` above (positive) or below (negative) a
//! `-` baseline. `+inf` columns fill the upper half with `^`, `-inf` columns
//! the lower half with `v`. Stacks taller than `max_rows` are clipped and
//! marked with `+` at the cut. The optional dump block carries the exact
//! window values so a render can be read back.

use std::fmt::Write;

use super::{content_lines, err, parse_int, ParseError, ParseErrorKind};
use crate::config::{Finite, NegInf, PosInf};
use crate::{Config, Height};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    pub max_rows: u64,
    pub dump: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            max_rows: 16,
            dump: false,
        }
    }
}

fn cell(v: Height, level: i64, clip: bool) -> char {
    match v {
        PosInf if level > 0 => '^',
        NegInf if level < 0 => 'v',
        Finite(h) if level > 0 && h >= level => {
            if clip && h > level {
                '+'
            } else {
                '#'
            }
        }
        Finite(h) if level < 0 && h <= level => {
            if clip && h < level {
                '+'
            } else {
                '#'
            }
        }
        _ => ' ',
    }
}

/// Renders columns `lo..=hi` of `c`.
pub fn render_ascii(c: &Config, lo: i64, hi: i64, opts: &RenderOptions) -> String {
    let values = c.window(lo, hi);
    let cap = opts.max_rows.max(1) as i64;
    let reach =
        |pick: fn(Height) -> i64| values.iter().map(|&v| pick(v)).max().unwrap_or(0).min(cap);
    let top = reach(|v| match v {
        PosInf => 1,
        Finite(h) => h.max(0),
        NegInf => 0,
    });
    let bottom = reach(|v| match v {
        NegInf => 1,
        Finite(h) => h.saturating_neg().max(0),
        PosInf => 0,
    });
    let mut out = String::new();
    let row = |out: &mut String, level: i64, clip: bool| {
        let line: String = values.iter().map(|&v| cell(v, level, clip)).collect();
        writeln!(out, "{}", line.trim_end()).unwrap();
    };
    for level in (1..=top).rev() {
        row(&mut out, level, level == cap);
    }
    writeln!(out, "{}", "-".repeat(values.len())).unwrap();
    for level in 1..=bottom {
        row(&mut out, -level, level == cap);
    }
    if opts.dump {
        let vals: Vec<_> = values.iter().map(|v| v.to_string()).collect();
        writeln!(out, "dump {lo} {hi}\n{}\nend", vals.join(" ")).unwrap();
    }
    out
}

/// Reads back the dump block of a render: the first column and the values.
pub fn parse_dump(text: &str) -> Result<(i64, Vec<Height>), ParseError> {
    let mut lines = content_lines(text).skip_while(|(_, l)| !l.starts_with("dump "));
    let Some((n, head)) = lines.next() else {
        return Err(err(1, ParseErrorKind::Missing("dump")));
    };
    let mut parts = head.split_whitespace().skip(1);
    let (Some(lo), Some(hi), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(err(n, ParseErrorKind::Syntax(head.to_string())));
    };
    let (lo, hi) = (parse_int(n, lo)?, parse_int(n, hi)?);
    let (n, body) = lines.next().ok_or_else(|| err(n, ParseErrorKind::Eof))?;
    let values = body
        .split_whitespace()
        .map(|t| t.parse().map_err(|e| err(n, ParseErrorKind::Height(e))))
        .collect::<Result<Vec<Height>, _>>()?;
    let expected = (hi - lo + 1).max(0) as usize;
    if values.len() != expected {
        return Err(err(
            n,
            ParseErrorKind::Arity {
                expected,
                found: values.len(),
            },
        ));
    }
    match lines.next() {
        Some((_, "end")) => Ok((lo, values)),
        Some((m, other)) => Err(err(m, ParseErrorKind::Syntax(other.to_string()))),
        None => Err(err(n, ParseErrorKind::Eof)),
    }
}
