//! Known injectivity and surjectivity results for the zoo automata.
//!
//! An exhaustion verdict is reported as proof-grade only when one of these
//! results settles the question for the searched class.

use super::report::SearchClass;
use crate::zoo::ZooName;
use crate::Config;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fact {
    pub holds: bool,
    pub note: &'static str,
}

/// Whether the zoo automaton is injective on the class.
pub(crate) fn injectivity(name: Option<ZooName>, class: SearchClass) -> Option<Fact> {
    use SearchClass::*;
    use ZooName::*;
    let (holds, note) = match (name?, class) {
        (Sr, _) => (
            true,
            "Sr has S as a left inverse, so it is injective on every class",
        ),
        (S, _) => (
            false,
            "S is not injective: a lone 1,-1 pair collapses to the flat configuration",
        ),
        (X, F) => (true, "X is injective on finite configurations"),
        (X, P) => (false, "X is not injective on periodic configurations"),
        (Y, F) => (true, "Y is injective on finite configurations"),
        (Y, P) => (true, "Y is injective on periodic configurations"),
        _ => return None,
    };
    Some(Fact { holds, note })
}

/// A certificate that `target` has no pre-image in the class.
pub(crate) fn no_preimage(
    name: Option<ZooName>,
    target: &Config,
    class: SearchClass,
) -> Option<&'static str> {
    let spike = Config::finite(&[(0, 2)]);
    let spikes = Config::periodic(&[0, 2, 0, 0]);
    match name? {
        ZooName::Sr if *target == spike => {
            Some("a single column of height 2 on a flat background has no pre-image under Sr")
        }
        ZooName::Sr if *target == spikes.shift(target_offset(target, &spikes)?) => {
            Some("height-2 columns every 4 columns have no pre-image under Sr")
        }
        ZooName::L if *target == spike && class == SearchClass::F => {
            Some("a single column of height 2 has no finite pre-image under L")
        }
        _ => None,
    }
}

fn target_offset(target: &Config, base: &Config) -> Option<i64> {
    (0..4).find(|&k| base.shift(k) == *target)
}
