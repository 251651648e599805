//! Sand automata `<r, λ>` and their global maps.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::config::{Configuration, ExtendedHeight, Finite, NegInf, PosInf, Tail};
use crate::metric::DifferenceVector;
use crate::scalar::Scalar;

/// One slot of a rule pattern, matched against a gauged difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PatternAtom {
    Exact(ExtendedHeight<i64>),
    Any,
    /// Strictly above 0, `+inf` included.
    Pos,
    /// Strictly below 0, `-inf` included.
    Neg,
}

impl PatternAtom {
    pub fn matches<H: Scalar>(&self, v: ExtendedHeight<H>) -> bool {
        match *self {
            PatternAtom::Any => true,
            PatternAtom::Pos => v.signum() > 0,
            PatternAtom::Neg => v.signum() < 0,
            PatternAtom::Exact(e) => match (e, v) {
                (NegInf, NegInf) | (PosInf, PosInf) => true,
                (Finite(a), Finite(b)) => b.to_i64() == Some(a),
                _ => false,
            },
        }
    }
}

impl From<i64> for PatternAtom {
    fn from(v: i64) -> Self {
        PatternAtom::Exact(Finite(v))
    }
}

impl fmt::Display for PatternAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternAtom::Exact(e) => write!(f, "{e}"),
            PatternAtom::Any => f.write_str("*"),
            PatternAtom::Pos => f.write_str("pos"),
            PatternAtom::Neg => f.write_str("neg"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Rule {
    pub pattern: Vec<PatternAtom>,
    pub delta: i64,
}

impl Rule {
    pub fn new(pattern: impl IntoIterator<Item = PatternAtom>, delta: i64) -> Self {
        Rule {
            pattern: pattern.into_iter().collect(),
            delta,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RuleError {
    #[error("radius must be at least 1")]
    RadiusTooSmall,
    #[error("rule {rule}: arity {found}, expected {expected}")]
    Arity {
        rule: usize,
        expected: usize,
        found: usize,
    },
    #[error("rule {rule}: delta out of range: {delta} not in [-{radius}, {radius}]")]
    DeltaOutOfRange {
        rule: usize,
        delta: i64,
        radius: usize,
    },
    #[error("default: delta out of range: {delta} not in [-{radius}, {radius}]")]
    DefaultOutOfRange { delta: i64, radius: usize },
    #[error("rule {rule}: atom {atom} can never match at radius {radius}")]
    AtomOutOfRange {
        rule: usize,
        atom: i64,
        radius: usize,
    },
}

/// A sand automaton: radius `r` and a first-match rule list realizing `λ`.
///
/// Pattern slot `k` reads the gauged difference of column `i - r + k` for
/// `k < r` and of column `i - r + k + 1` otherwise, i.e. the slots run over
/// `i-r, ..., i-1, i+1, ..., i+r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SandAutomaton {
    radius: usize,
    rules: Vec<Rule>,
    default_delta: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IterateLimits {
    /// Largest core (in columns) an intermediate configuration may have.
    pub max_core: usize,
}

impl Default for IterateLimits {
    fn default() -> Self {
        IterateLimits { max_core: 1 << 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("core grew to {len} columns at step {step} (cap {cap})")]
pub struct CoreGrowthError {
    pub step: u64,
    pub len: usize,
    pub cap: usize,
}

impl SandAutomaton {
    pub fn new(radius: usize, rules: Vec<Rule>, default_delta: i64) -> Result<Self, RuleError> {
        if radius < 1 {
            return Err(RuleError::RadiusTooSmall);
        }
        let r = radius as i64;
        for (idx, rule) in rules.iter().enumerate() {
            if rule.pattern.len() != 2 * radius {
                return Err(RuleError::Arity {
                    rule: idx,
                    expected: 2 * radius,
                    found: rule.pattern.len(),
                });
            }
            if rule.delta.abs() > r {
                return Err(RuleError::DeltaOutOfRange {
                    rule: idx,
                    delta: rule.delta,
                    radius,
                });
            }
            for atom in &rule.pattern {
                if let PatternAtom::Exact(Finite(v)) = *atom {
                    if v.abs() > r {
                        return Err(RuleError::AtomOutOfRange {
                            rule: idx,
                            atom: v,
                            radius,
                        });
                    }
                }
            }
        }
        if default_delta.abs() > r {
            return Err(RuleError::DefaultOutOfRange {
                delta: default_delta,
                radius,
            });
        }
        Ok(SandAutomaton {
            radius,
            rules,
            default_delta,
        })
    }

    /// `λ ≡ 0`: every configuration is a fixed point.
    pub fn identity(radius: usize) -> Self {
        Self::new(radius.max(1), Vec::new(), 0).unwrap()
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn default_delta(&self) -> i64 {
        self.default_delta
    }

    /// `λ(d)`.
    ///
    /// # Panics
    /// If `d` was measured with a size other than the radius.
    pub fn local_delta<H: Scalar>(&self, d: &DifferenceVector<H>) -> i64 {
        assert_eq!(
            d.size(),
            self.radius as u64,
            "difference vector size does not match the radius"
        );
        self.lookup(d.entries())
    }

    fn lookup<H: Scalar>(&self, entries: &[ExtendedHeight<H>]) -> i64 {
        self.rules
            .iter()
            .find(|rule| rule.pattern.iter().zip(entries).all(|(a, &v)| a.matches(v)))
            .map_or(self.default_delta, |rule| rule.delta)
    }

    /// New height of a column given its height and its neighbors by offset.
    pub fn step_column<H: Scalar>(
        &self,
        center: ExtendedHeight<H>,
        neighbor: impl Fn(i64) -> ExtendedHeight<H>,
    ) -> ExtendedHeight<H> {
        if center.is_infinite() {
            return center;
        }
        let d = DifferenceVector::from_fn(self.radius as u64, center, neighbor);
        center.plus(H::from_i64(self.lookup(d.entries())))
    }

    /// `f_A(c)_i`.
    pub fn apply_at<H: Scalar>(&self, c: &Configuration<H>, i: i64) -> ExtendedHeight<H> {
        self.step_column(c.get(i), |k| c.get(i + k))
    }

    /// The global map `f_A`.
    ///
    /// Columns farther than `r` from the core see a window lying entirely in
    /// one tail. There the rule sees the same gauged differences one period
    /// later (the tail repeats up to a uniform raise), so one period of image
    /// columns describes the whole image tail, with the same slope.
    pub fn apply<H: Scalar>(&self, c: &Configuration<H>) -> Configuration<H> {
        let r = self.radius as i64;
        let (a, b) = (c.core_start(), c.core_end());
        let pl = c.left_tail().len() as i64;
        let pr = c.right_tail().len() as i64;
        let image = |lo: i64, hi: i64| (lo..hi).map(|i| self.apply_at(c, i)).collect::<Vec<_>>();
        let left = Tail::new(image(a - r - pl, a - r), c.left_tail().slope()).unwrap();
        let right = Tail::new(image(b + r, b + r + pr), c.right_tail().slope()).unwrap();
        Configuration::general(a - r, image(a - r, b + r), left, right)
    }

    /// `f_A^n(c)`.
    pub fn iterate<H: Scalar>(
        &self,
        c: &Configuration<H>,
        n: u64,
        limits: &IterateLimits,
    ) -> Result<Configuration<H>, CoreGrowthError> {
        let mut cur = c.clone();
        for step in 1..=n {
            cur = self.apply(&cur);
            if cur.core().len() > limits.max_core {
                return Err(CoreGrowthError {
                    step,
                    len: cur.core().len(),
                    cap: limits.max_core,
                });
            }
        }
        Ok(cur)
    }
}
