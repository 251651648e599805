#![allow(dead_code)]

use sandlab_core::automaton::SandAutomaton;
use sandlab_core::config::{Finite, NegInf, PosInf};
use sandlab_core::metric::beta;
use sandlab_core::zoo::ZooName;
use sandlab_core::{Config, Height, Tail};

pub fn zoo() -> Vec<(ZooName, SandAutomaton)> {
    ZooName::ALL.iter().map(|&n| (n, n.automaton())).collect()
}

/// `c` with the listed columns replaced.
pub fn overlay(c: &Config, edits: &[(i64, Height)]) -> Config {
    let lo = edits
        .iter()
        .map(|e| e.0)
        .chain([c.core_start()])
        .min()
        .unwrap();
    let hi = edits
        .iter()
        .map(|e| e.0 + 1)
        .chain([c.core_end()])
        .max()
        .unwrap();
    let mut core = c.window(lo, hi - 1);
    for &(i, v) in edits {
        core[(i - lo) as usize] = v;
    }
    let pl = c.left_tail().len() as i64;
    let pr = c.right_tail().len() as i64;
    let left = Tail::new(c.window(lo - pl, lo - 1), c.left_tail().slope()).unwrap();
    let right = Tail::new(c.window(hi, hi + pr - 1), c.right_tail().slope()).unwrap();
    Config::general(lo, core, left, right)
}

/// Column `i` of `f(c)`, computed straight from the definition.
pub fn oracle(a: &SandAutomaton, c: &Config, i: i64) -> Height {
    let center = c.get(i);
    let Finite(m) = center else {
        return center;
    };
    let r = a.radius() as i64;
    let diffs: Vec<Height> = (i - r..=i + r)
        .filter(|&j| j != i)
        .map(|j| beta(r as u64, m, c.get(j)))
        .collect();
    let delta = a
        .rules()
        .iter()
        .find(|rule| rule.pattern.iter().zip(&diffs).all(|(p, &d)| p.matches(d)))
        .map_or(a.default_delta(), |rule| rule.delta);
    Finite(m + delta)
}

pub fn same_infinity(a: Height, b: Height) -> bool {
    matches!(
        (a, b),
        (PosInf, PosInf) | (NegInf, NegInf) | (Finite(_), Finite(_))
    )
}
