//! Bounded decision procedures and witness re-verification.
//!
//! Every search here is bounded; an exhaustion verdict is evidence about the
//! searched window unless [`Grade::Proof`] says a known result covers it.

mod facts;
mod report;
pub mod sampler;
mod search;

pub use report::{Bounds, Grade, SearchClass, Verdict, Witness, WitnessReport};
pub use sampler::{ConfigSampler, Lcg64, SampleClass};
pub use search::{check_injective_bounded, check_preimage_bounded};

use thiserror::Error;

use crate::automaton::{CoreGrowthError, IterateLimits, SandAutomaton};
use crate::zoo::ZooName;
use crate::Config;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("bounds must be at least 1")]
    ZeroBound,
    #[error("{base}^{digits} candidates exceed the limit of {limit}")]
    TooManyCandidates { base: u64, digits: u64, limit: u64 },
    #[error("search visited more than {0} candidates")]
    SearchLimit(u64),
    #[error("class {0} is not supported by this check")]
    UnsupportedClass(SearchClass),
    #[error(transparent)]
    CoreGrowth(#[from] CoreGrowthError),
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Include `+inf` and `-inf` among enumerated heights.
    pub with_infinities: bool,
    pub max_candidates: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            with_infinities: false,
            max_candidates: 5_000_000,
        }
    }
}

/// Iterates up to `steps` times looking for the zero configuration.
///
/// Only a semi-decision: nilpotency of sand automata is undecidable on finite
/// and on periodic configurations, so running out of steps proves nothing.
pub fn check_nilpotent_bounded(
    a: &SandAutomaton,
    c: &Config,
    steps: u64,
    limits: &IterateLimits,
) -> Result<WitnessReport, AnalysisError> {
    let zero = Config::zero();
    let bounds = Bounds {
        steps: Some(steps),
        ..Bounds::default()
    };
    let mut cur = c.clone();
    for n in 0..=steps {
        if cur == zero {
            let note = if n == 0 {
                "the input is already the zero configuration (n = 0, trivially)".to_string()
            } else {
                format!("reaches the zero configuration after {n} steps")
            };
            return Ok(WitnessReport {
                verdict: Verdict::WitnessFound,
                witness: Some(Witness::ZeroAt { step: n }),
                bounds,
                candidates: n,
                grade: None,
                note,
            });
        }
        if n < steps {
            cur = a
                .iterate(&cur, 1, limits)
                .map_err(|e| CoreGrowthError { step: n + 1, ..e })?;
        }
    }
    Ok(WitnessReport {
        verdict: Verdict::BoundExceeded,
        witness: None,
        bounds,
        candidates: steps,
        grade: None,
        note: "zero not reached within the step bound; nilpotency is undecidable, so this is not a refutation"
            .into(),
    })
}

/// Distinct inputs with equal images.
pub fn verify_witness_pair(a: &SandAutomaton, c1: &Config, c2: &Config) -> bool {
    c1 != c2 && a.apply(c1) == a.apply(c2)
}

/// Tests `A(B(c)) = c` on `samples` seeded configurations of every class.
pub fn verify_right_inverse(
    a: &SandAutomaton,
    b: &SandAutomaton,
    samples: u64,
    seed: u64,
    sampler: &ConfigSampler,
) -> WitnessReport {
    let mut rng = Lcg64::new(seed);
    let bounds = Bounds {
        samples: Some(samples),
        seed: Some(seed),
        height: Some(sampler.height as u64),
        ..Bounds::default()
    };
    for k in 0..samples {
        let c = sampler.sample(&mut rng);
        if a.apply(&b.apply(&c)) != c {
            return WitnessReport {
                verdict: Verdict::WitnessFound,
                witness: Some(Witness::Counterexample { config: c }),
                bounds,
                candidates: k + 1,
                grade: None,
                note: "A(B(c)) differs from c".into(),
            };
        }
    }
    let known =
        (ZooName::identify(a), ZooName::identify(b)) == (Some(ZooName::S), Some(ZooName::Sr));
    WitnessReport {
        verdict: Verdict::ExhaustedNoWitness,
        witness: None,
        bounds,
        candidates: samples,
        grade: Some(if known { Grade::Proof } else { Grade::Evidence }),
        note: if known {
            "S undoes Sr on every configuration".into()
        } else {
            "A(B(c)) = c on every sample".into()
        },
    }
}

#[cfg(test)]
mod tests;
