//! Bounded exhaustive searches for collisions and pre-images.

use std::collections::HashMap;

use rayon::prelude::*;

use super::report::{Bounds, Grade, SearchClass, Verdict, Witness, WitnessReport};
use super::{facts, AnalysisError, SearchOptions};
use crate::automaton::SandAutomaton;
use crate::config::{Finite, NegInf, PosInf, Tail};
use crate::{Config, Height};

/// Height symbols in enumeration order: `0, 1, -1, ..., h, -h`, then the
/// infinities when requested.
pub(crate) fn alphabet(h: u64, with_infinities: bool) -> Vec<Height> {
    let h = h as i64;
    let mut out = vec![Finite(0)];
    for v in 1..=h {
        out.push(Finite(v));
        out.push(Finite(-v));
    }
    if with_infinities {
        out.extend([PosInf, NegInf]);
    }
    out
}

fn checked_count(base: u64, digits: u64, limit: u64) -> Result<u64, AnalysisError> {
    let count = u32::try_from(digits)
        .ok()
        .and_then(|d| base.checked_pow(d))
        .filter(|&c| c <= limit);
    count.ok_or(AnalysisError::TooManyCandidates {
        base,
        digits,
        limit,
    })
}

/// Digits of `idx` in base `alphabet.len()`, most significant first.
fn decode(idx: u64, alphabet: &[Height], len: usize) -> Vec<Height> {
    let base = alphabet.len() as u64;
    let mut out = vec![Finite(0); len];
    let mut rest = idx;
    for slot in out.iter_mut().rev() {
        *slot = alphabet[(rest % base) as usize];
        rest /= base;
    }
    out
}

const CHUNK: u64 = 1 << 14;

/// First pair of candidates (in index order) with equal images.
///
/// Images are computed in parallel per chunk and merged sequentially, so the
/// reported pair is the same as a sequential scan would give.
fn first_collision(
    a: &SandAutomaton,
    count: u64,
    candidate: impl Fn(u64) -> Option<Config> + Sync,
) -> (u64, Option<(Config, Config)>) {
    let mut seen: HashMap<Config, Config> = HashMap::new();
    let mut visited = 0;
    let mut lo = 0;
    while lo < count {
        let hi = (lo + CHUNK).min(count);
        let images: Vec<Option<(Config, Config)>> = (lo..hi)
            .into_par_iter()
            .map(|idx| candidate(idx).map(|c| (a.apply(&c), c)))
            .collect();
        for (image, c) in images.into_iter().flatten() {
            visited += 1;
            if let Some(prev) = seen.get(&image) {
                return (visited, Some((prev.clone(), c)));
            }
            seen.insert(image, c);
        }
        lo = hi;
    }
    (visited, None)
}

pub fn check_injective_bounded(
    a: &SandAutomaton,
    class: SearchClass,
    bound: u64,
    h: u64,
    opts: &SearchOptions,
) -> Result<WitnessReport, AnalysisError> {
    if bound == 0 || h == 0 {
        return Err(AnalysisError::ZeroBound);
    }
    let symbols = alphabet(h, opts.with_infinities);
    let base = symbols.len() as u64;
    let mut bounds = Bounds {
        class: Some(class),
        height: Some(h),
        ..Bounds::default()
    };
    let (visited, collision) = match class {
        SearchClass::F => {
            bounds.window = Some(bound);
            let len = 2 * bound as usize + 1;
            let count = checked_count(base, len as u64, opts.max_candidates)?;
            let start = -(bound as i64);
            first_collision(a, count, |idx| {
                Some(Config::from_window(start, decode(idx, &symbols, len)))
            })
        }
        SearchClass::P => {
            bounds.period = Some(bound);
            let mut offsets = vec![0u64];
            for q in 1..=bound {
                let n = checked_count(base, q, opts.max_candidates)?;
                offsets.push(offsets[q as usize - 1] + n);
            }
            let total = *offsets.last().unwrap();
            if total > opts.max_candidates {
                return Err(AnalysisError::TooManyCandidates {
                    base,
                    digits: bound,
                    limit: opts.max_candidates,
                });
            }
            // a tuple whose minimal period is shorter was already seen
            let (n, hit) = first_collision(a, total, |idx| {
                let q = offsets.partition_point(|&o| o <= idx);
                let values = decode(idx - offsets[q - 1], &symbols, q);
                let c = Config::periodic_at(0, values);
                (c.period() == Some(q)).then_some(c)
            });
            (if hit.is_some() { n } else { total }, hit)
        }
        SearchClass::EC => return Err(AnalysisError::UnsupportedClass(class)),
    };
    let name = crate::zoo::ZooName::identify(a);
    Ok(match collision {
        Some((first, second)) => WitnessReport {
            verdict: Verdict::WitnessFound,
            witness: Some(Witness::Pair { first, second }),
            bounds,
            candidates: visited,
            grade: None,
            note: match facts::injectivity(name, class) {
                Some(f) if !f.holds => f.note.into(),
                _ => "distinct configurations with equal images".into(),
            },
        },
        None => {
            let fact = facts::injectivity(name, class);
            let proof = fact.is_some_and(|f| f.holds);
            WitnessReport {
                verdict: Verdict::ExhaustedNoWitness,
                witness: None,
                bounds,
                candidates: visited,
                grade: Some(if proof { Grade::Proof } else { Grade::Evidence }),
                note: match fact {
                    Some(f) => f.note.into(),
                    None => "no collision within bounds; not a proof of injectivity".into(),
                },
            }
        }
    })
}

/// Depth-first search for a pre-image.
///
/// Each candidate column stays within `r` of the target column, since a
/// rule moves a column by at most `r`; infinite target columns force the
/// same infinity. A column's image is checked as soon as its whole window is
/// assigned. Complete candidates are verified with `apply`.
struct PreimageSearch<'a> {
    a: &'a SandAutomaton,
    target: &'a Config,
    h: i64,
    visited: u64,
    limit: u64,
}

impl PreimageSearch<'_> {
    fn choices(&self, t: Height) -> Vec<Height> {
        let r = self.a.radius() as i64;
        match t {
            Finite(t) => (t - r..=t + r)
                .filter(|v| v.abs() <= self.h)
                .map(Finite)
                .collect(),
            inf => vec![inf],
        }
    }

    /// Candidates zero-or-background outside `[lo, hi]`.
    fn windowed(
        &mut self,
        lo: i64,
        hi: i64,
        bg: (Height, Height),
    ) -> Result<Option<Config>, AnalysisError> {
        let mut values: Vec<Height> = Vec::with_capacity((hi - lo + 1) as usize);
        self.extend_windowed(lo, hi, bg, &mut values)
    }

    fn value(lo: i64, bg: (Height, Height), values: &[Height], i: i64) -> Height {
        if i < lo {
            bg.0
        } else if i - lo < values.len() as i64 {
            values[(i - lo) as usize]
        } else {
            bg.1
        }
    }

    fn extend_windowed(
        &mut self,
        lo: i64,
        hi: i64,
        bg: (Height, Height),
        values: &mut Vec<Height>,
    ) -> Result<Option<Config>, AnalysisError> {
        let r = self.a.radius() as i64;
        let k = lo + values.len() as i64;
        if k > hi {
            self.visited += 1;
            if self.visited > self.limit {
                return Err(AnalysisError::SearchLimit(self.limit));
            }
            let c = Config::general(
                lo,
                values.clone(),
                Tail::constant(bg.0),
                Tail::constant(bg.1),
            );
            return Ok((self.a.apply(&c) == *self.target).then_some(c));
        }
        for v in self.choices(self.target.get(k)) {
            values.push(v);
            // columns whose window just became fully known
            let cols = if k < hi { k - r..=k - r } else { k - r..=k + r };
            let ok = cols.into_iter().all(|j| {
                let img = self.a.step_column(Self::value(lo, bg, values, j), |o| {
                    Self::value(lo, bg, values, j + o)
                });
                img == self.target.get(j)
            });
            if ok {
                if let Some(found) = self.extend_windowed(lo, hi, bg, values)? {
                    return Ok(Some(found));
                }
            }
            values.pop();
        }
        Ok(None)
    }

    fn periodic(&mut self, q: usize) -> Result<Option<Config>, AnalysisError> {
        let mut values = Vec::with_capacity(q);
        self.extend_periodic(q, &mut values)
    }

    fn extend_periodic(
        &mut self,
        q: usize,
        values: &mut Vec<Height>,
    ) -> Result<Option<Config>, AnalysisError> {
        let r = self.a.radius() as i64;
        let k = values.len() as i64;
        if values.len() == q {
            self.visited += 1;
            if self.visited > self.limit {
                return Err(AnalysisError::SearchLimit(self.limit));
            }
            let c = Config::periodic_at(0, values.clone());
            return Ok((self.a.apply(&c) == *self.target).then_some(c));
        }
        for v in self.choices(self.target.get(k)) {
            values.push(v);
            let j = k - r;
            let ok = j < r || {
                let img = self
                    .a
                    .step_column(values[j as usize], |o| values[(j + o) as usize]);
                img == self.target.get(j)
            };
            if ok {
                if let Some(found) = self.extend_periodic(q, values)? {
                    return Ok(Some(found));
                }
            }
            values.pop();
        }
        Ok(None)
    }
}

fn constant_tails(c: &Config) -> Option<(Height, Height)> {
    let (l, r) = (c.left_tail(), c.right_tail());
    (l.len() == 1 && r.len() == 1 && l.slope() == 0 && r.slope() == 0)
        .then(|| (l.period()[0], r.period()[0]))
}

pub fn check_preimage_bounded(
    a: &SandAutomaton,
    target: &Config,
    class: SearchClass,
    n: u64,
    h: u64,
    opts: &SearchOptions,
) -> Result<WitnessReport, AnalysisError> {
    if n == 0 || h == 0 {
        return Err(AnalysisError::ZeroBound);
    }
    let mut search = PreimageSearch {
        a,
        target,
        h: h as i64,
        visited: 0,
        limit: opts.max_candidates,
    };
    let mut bounds = Bounds {
        class: Some(class),
        height: Some(h),
        ..Bounds::default()
    };
    let zero_image = a.step_column(Finite(0i64), |_| Finite(0));
    let found = match class {
        SearchClass::F => {
            bounds.window = Some(n);
            // the image of a finite configuration has background λ(0, ..., 0)
            match constant_tails(target) {
                Some((l, rt)) if l == zero_image && rt == zero_image => {
                    search.windowed(-(n as i64), n as i64, (Finite(0), Finite(0)))?
                }
                _ => None,
            }
        }
        SearchClass::EC => {
            bounds.window = Some(n);
            let mut hit = None;
            if let Some((tl, tr)) = constant_tails(target) {
                'outer: for bl in search.choices(tl) {
                    for br in search.choices(tr) {
                        let bg_l = a.step_column(bl, |_| bl);
                        let bg_r = a.step_column(br, |_| br);
                        if bg_l != tl || bg_r != tr {
                            continue;
                        }
                        if let Some(c) = search.windowed(-(n as i64), n as i64, (bl, br))? {
                            hit = Some(c);
                            break 'outer;
                        }
                    }
                }
            }
            hit
        }
        SearchClass::P => {
            bounds.period = Some(n);
            let mut hit = None;
            if let Some(p) = target.period() {
                for q in (p as u64..=n).step_by(p) {
                    if let Some(c) = search.periodic(q as usize)? {
                        hit = Some(c);
                        break;
                    }
                }
            }
            hit
        }
    };
    let name = crate::zoo::ZooName::identify(a);
    Ok(match found {
        Some(config) => WitnessReport {
            verdict: Verdict::WitnessFound,
            witness: Some(Witness::Preimage { config }),
            bounds,
            candidates: search.visited,
            grade: None,
            note: "pre-image found and verified by apply".into(),
        },
        None => {
            let fact = facts::no_preimage(name, target, class);
            WitnessReport {
                verdict: Verdict::ExhaustedNoWitness,
                witness: None,
                bounds,
                candidates: search.visited,
                grade: Some(if fact.is_some() {
                    Grade::Proof
                } else {
                    Grade::Evidence
                }),
                note: fact.map_or(
                    "no pre-image within bounds; not a proof of nonexistence".into(),
                    str::to_string,
                ),
            }
        }
    })
}
