//! The named example automata and the constructions built on them.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::automaton::{PatternAtom, Rule, SandAutomaton};
use crate::config::{Configuration, ExtendedHeight, Finite, NegInf, PosInf, Tail};
use crate::scalar::Scalar;

use PatternAtom::{Any, Neg, Pos};

const PLUS: PatternAtom = PatternAtom::Exact(PosInf);
const MINUS: PatternAtom = PatternAtom::Exact(NegInf);

fn at(v: i64) -> PatternAtom {
    PatternAtom::Exact(Finite(v))
}

/// Sandpile rule: a grain falls to the right down any cliff of height 2 or more.
pub fn make_s() -> SandAutomaton {
    SandAutomaton::new(
        1,
        vec![
            Rule::new([PLUS, MINUS], 0),
            Rule::new([PLUS, Any], 1),
            Rule::new([Any, MINUS], -1),
        ],
        0,
    )
    .unwrap()
}

/// Mirror of [`make_s`]: grains climb the cliffs.
pub fn make_sr() -> SandAutomaton {
    SandAutomaton::new(
        1,
        vec![
            Rule::new([PLUS, MINUS], 0),
            Rule::new([PLUS, Any], -1),
            Rule::new([Any, MINUS], 1),
        ],
        0,
    )
    .unwrap()
}

/// Each column moves one grain toward the height of its left neighbor.
pub fn make_l() -> SandAutomaton {
    SandAutomaton::new(
        1,
        vec![Rule::new([Neg, Any], -1), Rule::new([Pos, Any], 1)],
        0,
    )
    .unwrap()
}

/// Radius 2, reading only the two left neighbors.
pub fn make_x() -> SandAutomaton {
    let rules = [
        [PLUS, Any],
        [at(2), Any],
        [at(1), at(-1)],
        [at(1), at(-2)],
        [at(1), MINUS],
        [at(0), at(-2)],
        [at(0), MINUS],
    ]
    .into_iter()
    .map(|[a, b]| Rule::new([a, b, Any, Any], -1))
    .collect();
    SandAutomaton::new(2, rules, 0).unwrap()
}

/// Radius 2; a column drops unless its second left neighbor is at least one
/// grain lower (the exception being a left neighbor more than 2 below).
pub fn make_y() -> SandAutomaton {
    let rules = [
        [PLUS, Any],
        [at(2), Any],
        [at(1), Any],
        [at(0), Any],
        [at(-1), MINUS],
    ]
    .into_iter()
    .map(|[a, b]| Rule::new([a, b, Any, Any], -1))
    .collect();
    SandAutomaton::new(2, rules, 0).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ZooName {
    S,
    Sr,
    L,
    X,
    Y,
}

impl ZooName {
    pub const ALL: [ZooName; 5] = [ZooName::S, ZooName::Sr, ZooName::L, ZooName::X, ZooName::Y];

    pub fn automaton(self) -> SandAutomaton {
        match self {
            ZooName::S => make_s(),
            ZooName::Sr => make_sr(),
            ZooName::L => make_l(),
            ZooName::X => make_x(),
            ZooName::Y => make_y(),
        }
    }

    /// Recognizes a zoo automaton by its rule table.
    pub fn identify(a: &SandAutomaton) -> Option<ZooName> {
        Self::ALL.into_iter().find(|n| n.automaton() == *a)
    }
}

impl fmt::Display for ZooName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZooName::S => "S",
            ZooName::Sr => "Sr",
            ZooName::L => "L",
            ZooName::X => "X",
            ZooName::Y => "Y",
        })
    }
}

impl FromStr for ZooName {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|n| n.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown automaton `{s}` (expected S, Sr, L, X or Y)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("column {0} is infinite")]
    InfiniteColumn(i64),
    #[error("input {0} is not a finite configuration")]
    NotFinite(u8),
    #[error("inputs are equal")]
    EqualInputs,
    #[error("inputs have different images")]
    ImagesDiffer,
    #[error("{0} is not a period of the target")]
    NotAPeriod(i64),
    #[error("configuration is not a pre-image of the target")]
    NotPreimage,
    #[error("no repeated window among {0} period multiples")]
    WindowBoundExceeded(u64),
    #[error("construction produced an invalid result: {0}")]
    Internal(&'static str),
}

/// Pre-image of `c` under [`make_l`].
///
/// Wherever `c` steps (`c[j] != c[j-1]`) the pre-image starts alternating
/// `+1, -1, +1, ...` on top of `c` (signs flipped after a downward step) and
/// keeps alternating until the next step, or forever after the last one.
/// Left of the first step the pre-image copies `c`. Applying `L` undoes the
/// alternation column by column.
pub fn build_l_preimage<H: Scalar>(
    c: &Configuration<H>,
) -> Result<Configuration<H>, ConstructionError> {
    if let Some(i) = c.first_infinite_column() {
        return Err(ConstructionError::InfiniteColumn(i));
    }
    let (a, b) = (c.core_start(), c.core_end());
    let pl = c.left_tail().len() as i64;
    let pr = c.right_tail().len() as i64;
    let step_sign = |j: i64| c.get(j).signum_vs(c.get(j - 1));

    // last step at or before the sweep start; a left tail without a step in a
    // full period is constant and has none
    let lo = a - pl;
    let mut last = (lo - pl..=lo)
        .rev()
        .find(|&j| step_sign(j) != 0)
        .map(|j| (j, step_sign(j)));
    let hi = b + 3 * pr;
    let mut out = Vec::with_capacity((hi - lo) as usize);
    for i in lo..hi {
        if i > lo && step_sign(i) != 0 {
            last = Some((i, step_sign(i)));
        }
        let offset = match last {
            None => 0,
            Some((j, s)) if (i - j) % 2 == 0 => s,
            Some((_, s)) => -s,
        };
        out.push(c.get(i).plus(H::from_i64(offset)));
    }
    let value = |i: i64| out[(i - lo) as usize];
    // left of `a` the offsets repeat with the left period; right of `b + pr`
    // with twice the right period (alternation after the last step)
    let left = Tail::new((a - pl..a).map(value).collect(), c.left_tail().slope()).unwrap();
    let right = Tail::new(
        (b + pr..b + 3 * pr).map(value).collect(),
        c.right_tail().slope() + c.right_tail().slope(),
    )
    .unwrap();
    Ok(Configuration::general(
        a,
        (a..b + pr).map(value).collect(),
        left,
        right,
    ))
}

trait StepSign {
    fn signum_vs(self, prev: Self) -> i64;
}

impl<H: Scalar> StepSign for ExtendedHeight<H> {
    fn signum_vs(self, prev: Self) -> i64 {
        match self.cmp(&prev) {
            std::cmp::Ordering::Less => -1,
            std::cmp::Ordering::Equal => 0,
            std::cmp::Ordering::Greater => 1,
        }
    }
}

/// Embeds two colliding finite configurations into periodic ones.
///
/// With `k` the larger support radius and `r` the automaton radius, each
/// input's window `[-k, k]` is padded with `r` zero columns on both sides and
/// repeated with period `2k + 2r + 1`. Every column then sees what it saw in
/// the finite input, so the images still coincide.
pub fn crown_lift<H: Scalar>(
    c1: &Configuration<H>,
    c2: &Configuration<H>,
    a: &SandAutomaton,
) -> Result<(Configuration<H>, Configuration<H>), ConstructionError> {
    if !c1.is_finite_class() {
        return Err(ConstructionError::NotFinite(1));
    }
    if !c2.is_finite_class() {
        return Err(ConstructionError::NotFinite(2));
    }
    if c1 == c2 {
        return Err(ConstructionError::EqualInputs);
    }
    if a.apply(c1) != a.apply(c2) {
        return Err(ConstructionError::ImagesDiffer);
    }
    let k = c1
        .support_radius()
        .unwrap_or(0)
        .max(c2.support_radius().unwrap_or(0)) as i64;
    let edge = k + a.radius() as i64;
    let lift = |c: &Configuration<H>| Configuration::periodic_at(-edge, c.window(-edge, edge));
    let (d1, d2) = (lift(c1), lift(c2));
    if d1 == d2 || a.apply(&d1) != a.apply(&d2) {
        return Err(ConstructionError::Internal("crown lift lost the collision"));
    }
    Ok((d1, d2))
}

/// Result of [`periodic_splice`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(bound = "H: Scalar")]
pub struct Splice<H> {
    pub config: Configuration<H>,
    /// Matching window positions `k1 < k2`, both multiples of the period.
    pub k1: i64,
    pub k2: i64,
    /// Period multiples inspected, `0..=k2/p`.
    pub multiples_scanned: u64,
}

/// Upper bound on period multiples to inspect before two `2r`-windows repeat.
///
/// Around each multiple of `p` the pre-image stays within `r` of the
/// `p`-periodic target, so its windows take at most `(2r+1)^(2r)` values.
pub fn splice_window_bound(radius: usize) -> u64 {
    (2 * radius as u64 + 1)
        .saturating_pow(2 * radius as u32)
        .saturating_add(1)
}

/// Periodic pre-image of a `p`-periodic `target`, cut out of any pre-image `c`.
///
/// Scans the windows `c[k-r .. k+r-1]` at `k = 0, p, 2p, ...`; at the first
/// repeat `k1 < k2` the block `c[k1 .. k2)` repeated with period `k2 - k1`
/// sees, column by column, the same neighborhoods as `c`.
pub fn periodic_splice<H: Scalar>(
    a: &SandAutomaton,
    c: &Configuration<H>,
    target: &Configuration<H>,
    p: u64,
) -> Result<Splice<H>, ConstructionError> {
    let p_i = p as i64;
    if p == 0 || target.shift(p_i) != *target {
        return Err(ConstructionError::NotAPeriod(p_i));
    }
    if let Some(i) = c.first_infinite_column() {
        return Err(ConstructionError::InfiniteColumn(i));
    }
    if a.apply(c) != *target {
        return Err(ConstructionError::NotPreimage);
    }
    let r = a.radius() as i64;
    let bound = splice_window_bound(a.radius());
    let mut seen: HashMap<Vec<ExtendedHeight<H>>, i64> = HashMap::new();
    for alpha in 0..bound as i64 {
        let k = alpha * p_i;
        let window = c.window(k - r, k + r - 1);
        if let Some(&k1) = seen.get(&window) {
            let config = Configuration::periodic_at(k1, c.window(k1, k - 1));
            if a.apply(&config) != *target {
                return Err(ConstructionError::Internal(
                    "spliced configuration is not a pre-image",
                ));
            }
            return Ok(Splice {
                config,
                k1,
                k2: k,
                multiples_scanned: alpha as u64 + 1,
            });
        }
        seen.insert(window, k);
    }
    Err(ConstructionError::WindowBoundExceeded(bound))
}
