use std::fmt::Write;

use super::{content_lines, err, expect_header, key_value, parse_int, ParseError, ParseErrorKind};
use crate::automaton::{PatternAtom, Rule, RuleError, SandAutomaton};

const HEADER: &str = "sand-rule v1";

fn atom(line: usize, s: &str) -> Result<PatternAtom, ParseError> {
    match s {
        "*" => Ok(PatternAtom::Any),
        "pos" => Ok(PatternAtom::Pos),
        "neg" => Ok(PatternAtom::Neg),
        _ => s
            .parse()
            .map(PatternAtom::Exact)
            .map_err(|_| err(line, ParseErrorKind::UnknownAtom(s.to_string()))),
    }
}

fn rule_body(line: usize, body: &str, radius: usize) -> Result<Rule, ParseError> {
    let syntax = || err(line, ParseErrorKind::Syntax(body.to_string()));
    let (pattern, delta) = body.split_once("->").ok_or_else(syntax)?;
    let pattern = pattern
        .trim()
        .strip_prefix('(')
        .and_then(|p| p.strip_suffix(')'))
        .ok_or_else(syntax)?;
    let atoms = pattern
        .split(',')
        .map(str::trim)
        .filter(|a| !a.is_empty())
        .map(|a| atom(line, a))
        .collect::<Result<Vec<_>, _>>()?;
    if atoms.len() != 2 * radius {
        return Err(err(
            line,
            ParseErrorKind::Arity {
                expected: 2 * radius,
                found: atoms.len(),
            },
        ));
    }
    Ok(Rule::new(atoms, parse_int(line, delta)?))
}

/// Parses a `sand-rule v1` document. `radius:` must precede the rules.
pub fn parse_rule(text: &str) -> Result<SandAutomaton, ParseError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, HEADER)?;
    let mut radius: Option<usize> = None;
    let mut default = None;
    let mut rules = Vec::new();
    let mut rule_lines = Vec::new();
    let mut last = 1;
    for (n, l) in lines {
        last = n;
        let (k, v) = key_value(n, l)?;
        match k {
            "radius" => {
                if radius.is_some() {
                    return Err(err(n, ParseErrorKind::Duplicate(k.into())));
                }
                let r = parse_int(n, v)?;
                if r < 1 {
                    return Err(err(
                        n,
                        ParseErrorKind::Range(RuleError::RadiusTooSmall.to_string()),
                    ));
                }
                radius = Some(r as usize);
            }
            "default" => {
                if default.is_some() {
                    return Err(err(n, ParseErrorKind::Duplicate(k.into())));
                }
                default = Some((n, parse_int(n, v)?));
            }
            "rule" => {
                let r = radius.ok_or_else(|| err(n, ParseErrorKind::Missing("radius")))?;
                rules.push(rule_body(n, v, r)?);
                rule_lines.push(n);
            }
            other => return Err(err(n, ParseErrorKind::UnknownKey(other.into()))),
        }
    }
    let radius = radius.ok_or_else(|| err(last, ParseErrorKind::Missing("radius")))?;
    let (default_line, default) =
        default.ok_or_else(|| err(last, ParseErrorKind::Missing("default")))?;
    SandAutomaton::new(radius, rules, default).map_err(|e| {
        let line = match &e {
            RuleError::Arity { rule, .. }
            | RuleError::DeltaOutOfRange { rule, .. }
            | RuleError::AtomOutOfRange { rule, .. } => rule_lines[*rule],
            RuleError::DefaultOutOfRange { .. } => default_line,
            RuleError::RadiusTooSmall => 1,
        };
        err(line, ParseErrorKind::Range(e.to_string()))
    })
}

pub fn emit_rule(a: &SandAutomaton) -> String {
    let mut out = format!(
        "{HEADER}\nradius: {}\ndefault: {}\n",
        a.radius(),
        a.default_delta()
    );
    for rule in a.rules() {
        let atoms: Vec<_> = rule.pattern.iter().map(|p| p.to_string()).collect();
        writeln!(out, "rule: ({}) -> {}", atoms.join(", "), rule.delta).unwrap();
    }
    out
}
