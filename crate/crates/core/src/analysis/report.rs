use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::Config;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    WitnessFound,
    ExhaustedNoWitness,
    BoundExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::WitnessFound => "WITNESS_FOUND",
            Verdict::ExhaustedNoWitness => "EXHAUSTED_NO_WITNESS",
            Verdict::BoundExceeded => "BOUND_EXCEEDED",
        })
    }
}

/// How much an exhaustion verdict is worth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Grade {
    /// Backed by a known theorem about this automaton.
    Proof,
    /// Bounded search only.
    Evidence,
}

/// Configuration class searched by a bounded check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SearchClass {
    /// Zero outside `[-n, n]`.
    F,
    /// Periodic with period at most the bound.
    P,
    /// Constant outside `[-n, n]`, with independent left and right backgrounds.
    EC,
}

impl fmt::Display for SearchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchClass::F => "F",
            SearchClass::P => "P",
            SearchClass::EC => "EC",
        })
    }
}

impl FromStr for SearchClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "F" => Ok(SearchClass::F),
            "P" => Ok(SearchClass::P),
            "EC" => Ok(SearchClass::EC),
            _ => Err(format!("unknown class `{s}` (expected F, P or EC)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Distinct configurations with the same image.
    Pair { first: Config, second: Config },
    /// A configuration mapping onto the target.
    Preimage { config: Config },
    /// The configuration reaches the zero configuration at this step.
    ZeroAt { step: u64 },
    /// A configuration on which an identity fails.
    Counterexample { config: Config },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<SearchClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub steps: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub bounds: Bounds,
    /// Candidates fully examined.
    pub candidates: u64,
    /// Set for exhaustion verdicts.
    pub grade: Option<Grade>,
    pub note: String,
}

impl WitnessReport {
    pub fn is_witness(&self) -> bool {
        self.verdict == Verdict::WitnessFound
    }

    pub fn pair(&self) -> Option<(&Config, &Config)> {
        match &self.witness {
            Some(Witness::Pair { first, second }) => Some((first, second)),
            _ => None,
        }
    }
}
