use std::collections::BTreeMap;
use std::fmt::Write;

use super::{content_lines, err, expect_header, key_value, parse_int, ParseError, ParseErrorKind};
use crate::config::{Finite, Tail};
use crate::{Config, Height};

const HEADER: &str = "sand-config v1";

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Finite,
    Periodic,
    Affine,
    General,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Finite => "finite",
            Kind::Periodic => "periodic",
            Kind::Affine => "affine",
            Kind::General => "general",
        }
    }

    fn allows(self, key: &str) -> bool {
        match self {
            Kind::Finite => key == "at",
            Kind::Periodic => key == "period",
            Kind::Affine => matches!(key, "period" | "slope"),
            Kind::General => matches!(
                key,
                "core-start"
                    | "core"
                    | "left-period"
                    | "left-slope"
                    | "right-period"
                    | "right-slope"
            ),
        }
    }
}

fn heights(line: usize, s: &str) -> Result<Vec<Height>, ParseError> {
    s.split_whitespace()
        .map(|t| t.parse().map_err(|e| err(line, ParseErrorKind::Height(e))))
        .collect()
}

fn period(line: usize, s: &str) -> Result<Vec<Height>, ParseError> {
    let p = heights(line, s)?;
    if p.is_empty() {
        return Err(err(line, ParseErrorKind::EmptyPeriod));
    }
    Ok(p)
}

fn slope(line: usize, s: &str) -> Result<i64, ParseError> {
    match s.parse::<Height>() {
        Ok(Finite(v)) => Ok(v),
        Ok(_) => Err(err(line, ParseErrorKind::InfiniteSlope)),
        Err(e) => Err(err(line, ParseErrorKind::Height(e))),
    }
}

/// Parses a `sand-config v1` document.
pub fn parse_config(text: &str) -> Result<Config, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, HEADER)?;
    let mut kind = None;
    let mut fields: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut columns: BTreeMap<i64, Height> = BTreeMap::new();
    let mut at_lines = Vec::new();
    let mut last = 1;
    for (n, l) in lines {
        last = n;
        if let Some(rest) = l.strip_prefix("at ") {
            let mut parts = rest.split_whitespace();
            let (Some(i), Some(v), None) = (parts.next(), parts.next(), parts.next()) else {
                return Err(err(n, ParseErrorKind::Syntax(l.to_string())));
            };
            let i = parse_int(n, i)?;
            let v = v.parse().map_err(|e| err(n, ParseErrorKind::Height(e)))?;
            if columns.insert(i, v).is_some() {
                return Err(err(n, ParseErrorKind::DuplicateColumn(i)));
            }
            at_lines.push(n);
            continue;
        }
        let (k, v) = key_value(n, l)?;
        if k == "kind" {
            if kind.is_some() {
                return Err(err(n, ParseErrorKind::Duplicate(k.into())));
            }
            kind = Some(match v {
                "finite" => Kind::Finite,
                "periodic" => Kind::Periodic,
                "affine" => Kind::Affine,
                "general" => Kind::General,
                other => return Err(err(n, ParseErrorKind::UnknownKind(other.into()))),
            });
            continue;
        }
        if !Kind::General.allows(k) && !Kind::Affine.allows(k) {
            return Err(err(n, ParseErrorKind::UnknownKey(k.into())));
        }
        if fields.insert(k.into(), (n, v.into())).is_some() {
            return Err(err(n, ParseErrorKind::Duplicate(k.into())));
        }
    }
    let kind = kind.ok_or_else(|| err(last, ParseErrorKind::Missing("kind")))?;
    for (k, (n, _)) in &fields {
        if !kind.allows(k) {
            return Err(err(
                *n,
                ParseErrorKind::WrongKind {
                    key: k.clone(),
                    kind: kind.name(),
                },
            ));
        }
    }
    if let (false, Some(&n)) = (kind.allows("at"), at_lines.first()) {
        return Err(err(
            n,
            ParseErrorKind::WrongKind {
                key: "at".into(),
                kind: kind.name(),
            },
        ));
    }
    let required = |key: &'static str| {
        fields
            .get(key)
            .map(|(n, v)| (*n, v.as_str()))
            .ok_or_else(|| err(last, ParseErrorKind::Missing(key)))
    };
    let optional = |key: &str| fields.get(key).map(|(n, v)| (*n, v.as_str()));
    Ok(match kind {
        Kind::Finite => Config::finite_extended(columns),
        Kind::Periodic => {
            let (n, p) = required("period")?;
            Config::periodic_at(0, period(n, p)?)
        }
        Kind::Affine => {
            let (n, p) = required("period")?;
            let p = period(n, p)?;
            let (n, s) = required("slope")?;
            Config::affine_at(0, p, slope(n, s)?)
        }
        Kind::General => {
            let start = match optional("core-start") {
                Some((n, v)) => parse_int(n, v)?,
                None => 0,
            };
            let core = match optional("core") {
                Some((n, v)) => heights(n, v)?,
                None => Vec::new(),
            };
            let tail = |side: &'static str, slope_key: &str| -> Result<Tail<i64>, ParseError> {
                let (n, p) = required(side)?;
                let p = period(n, p)?;
                let s = match optional(slope_key) {
                    Some((n, v)) => slope(n, v)?,
                    None => 0,
                };
                Ok(Tail::new(p, s).expect("period checked nonempty"))
            };
            let left = tail("left-period", "left-slope")?;
            let right = tail("right-period", "right-slope")?;
            Config::general(start, core, left, right)
        }
    })
}

fn join(values: &[Height]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn is_pure(c: &Config) -> bool {
    let right = c.right_tail();
    c.core().is_empty() && Config::affine_at(0, right.period().to_vec(), right.slope()) == *c
}

/// Emits the most specific kind that describes `c` exactly.
pub fn emit_config(c: &Config) -> String {
    let mut out = format!("{HEADER}\n");
    if c.is_finite_class() {
        out.push_str("kind: finite\n");
        for (k, v) in c.core().iter().enumerate() {
            if !v.is_zero() {
                writeln!(out, "at {} {}", c.core_start() + k as i64, v).unwrap();
            }
        }
    } else if is_pure(c) {
        let right = c.right_tail();
        if right.slope() == 0 {
            writeln!(out, "kind: periodic\nperiod: {}", join(right.period())).unwrap();
        } else {
            writeln!(
                out,
                "kind: affine\nperiod: {}\nslope: {}",
                join(right.period()),
                right.slope()
            )
            .unwrap();
        }
    } else {
        let (l, r) = (c.left_tail(), c.right_tail());
        writeln!(out, "kind: general\ncore-start: {}", c.core_start()).unwrap();
        if !c.core().is_empty() {
            writeln!(out, "core: {}", join(c.core())).unwrap();
        }
        writeln!(
            out,
            "left-period: {}\nleft-slope: {}",
            join(l.period()),
            l.slope()
        )
        .unwrap();
        writeln!(
            out,
            "right-period: {}\nright-slope: {}",
            join(r.period()),
            r.slope()
        )
        .unwrap();
    }
    out
}
