//! Bi-infinite column configurations over `Z ∪ {-inf, +inf}`.
//!
//! A [`Configuration`] is an explicit core window `[start, start + core.len())`
//! flanked by two affine-periodic tails. Every constructor returns the
//! canonical form, so structural equality (`==`, `Hash`) coincides with
//! column-wise equality of the underlying sequences.
//!
//! Canonical form:
//! * both tail laws are primitive (shortest period, matching slope);
//! * the right tail starts at the leftmost column from which its law holds;
//! * the left tail ends at the rightmost column (not past the right tail start)
//!   up to which its law holds;
//! * a sequence that is affine-periodic on the whole line has an empty core
//!   anchored at column 0, with `right.period` holding columns `0..p`.

mod height;
mod tail;

pub use height::{ExtendedHeight, Finite, NegInf, ParseHeightError, PosInf};
pub use tail::Tail;

pub(crate) use tail::lcm;

use serde::Serialize;
use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("tail period must be nonempty")]
    EmptyPeriod,
    #[error("configuration is not finite (nonzero tails)")]
    NotFinite,
    #[error("column {0} is infinite")]
    InfiniteColumn(i64),
    #[error("grain count overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound = "H: Scalar")]
pub struct Configuration<H> {
    start: i64,
    core: Vec<ExtendedHeight<H>>,
    left: Tail<H>,
    right: Tail<H>,
}

impl<H: Scalar> Configuration<H> {
    /// Builds a configuration from a core window and two tails.
    ///
    /// `left.period` lists the `p` columns immediately left of `start`, in
    /// increasing index order; `right.period` lists the `p` columns starting
    /// right after the core. Both tails satisfy `c[i + p] = c[i] + slope`.
    pub fn general(
        start: i64,
        core: Vec<ExtendedHeight<H>>,
        left: Tail<H>,
        right: Tail<H>,
    ) -> Self {
        canonicalize_parts(start, core, left, right)
    }

    pub fn zero() -> Self {
        Self::constant(ExtendedHeight::zero())
    }

    pub fn constant(h: ExtendedHeight<H>) -> Self {
        Self::general(0, Vec::new(), Tail::constant(h), Tail::constant(h))
    }

    /// Zero background with the listed columns set.
    pub fn finite(columns: &[(i64, H)]) -> Self {
        Self::finite_extended(columns.iter().map(|&(i, v)| (i, Finite(v))))
    }

    pub fn finite_extended(columns: impl IntoIterator<Item = (i64, ExtendedHeight<H>)>) -> Self {
        let columns: Vec<_> = columns.into_iter().collect();
        let Some(lo) = columns.iter().map(|&(i, _)| i).min() else {
            return Self::zero();
        };
        let hi = columns.iter().map(|&(i, _)| i).max().unwrap();
        let mut core = vec![ExtendedHeight::zero(); (hi - lo + 1) as usize];
        for (i, v) in columns {
            core[(i - lo) as usize] = v;
        }
        Self::from_window(lo, core)
    }

    /// Zero background with `values` placed at columns `start..`.
    pub fn from_window(start: i64, values: Vec<ExtendedHeight<H>>) -> Self {
        let zero = Tail::constant(ExtendedHeight::zero());
        Self::general(start, values, zero.clone(), zero)
    }

    /// `c[i] = values[i mod p]`.
    ///
    /// # Panics
    /// If `values` is empty.
    pub fn periodic(values: &[H]) -> Self {
        Self::affine(values, H::zero())
    }

    /// `c[i] = values[(i - start) mod p] + slope * floor((i - start) / p)`.
    pub fn affine(values: &[H], slope: H) -> Self {
        Self::affine_at(0, values.iter().copied().map(Finite).collect(), slope)
    }

    pub fn periodic_at(start: i64, values: Vec<ExtendedHeight<H>>) -> Self {
        Self::affine_at(start, values, H::zero())
    }

    pub fn affine_at(start: i64, values: Vec<ExtendedHeight<H>>, slope: H) -> Self {
        let right = Tail::new(values, slope).expect("period must be nonempty");
        // the left tail ends where the right one starts, one slope step lower
        let left = right.map(|v| v.plus(-right.slope()));
        Self::general(start, Vec::new(), left, right)
    }

    pub fn core_start(&self) -> i64 {
        self.start
    }

    /// One past the last core column.
    pub fn core_end(&self) -> i64 {
        self.start + self.core.len() as i64
    }

    pub fn core(&self) -> &[ExtendedHeight<H>] {
        &self.core
    }

    pub fn left_tail(&self) -> &Tail<H> {
        &self.left
    }

    pub fn right_tail(&self) -> &Tail<H> {
        &self.right
    }

    /// The height of column `i`.
    pub fn get(&self, i: i64) -> ExtendedHeight<H> {
        if i < self.start {
            self.left.eval(self.start - self.left.len() as i64, i)
        } else if i < self.core_end() {
            self.core[(i - self.start) as usize]
        } else {
            self.right.eval(self.core_end(), i)
        }
    }

    /// Columns `lo..=hi`.
    pub fn window(&self, lo: i64, hi: i64) -> Vec<ExtendedHeight<H>> {
        (lo..=hi).map(|i| self.get(i)).collect()
    }

    /// `shift(c, k)[i] = c[i + k]`.
    pub fn shift(&self, k: i64) -> Self {
        Self::general(
            self.start - k,
            self.core.clone(),
            self.left.clone(),
            self.right.clone(),
        )
    }

    /// Adds `k` grains to every finite column.
    pub fn raise(&self, k: H) -> Self {
        let up = |v: ExtendedHeight<H>| v.plus(k);
        Self::general(
            self.start,
            self.core.iter().copied().map(up).collect(),
            self.left.map(up),
            self.right.map(up),
        )
    }

    /// Column-wise equality of the two sequences.
    pub fn equals(&self, other: &Self) -> bool {
        self == other
    }

    /// Recomputes the canonical form. Constructors already canonicalize, so
    /// this is the identity on any value of this type.
    pub fn canonicalize(&self) -> Self {
        canonicalize_parts(
            self.start,
            self.core.clone(),
            self.left.clone(),
            self.right.clone(),
        )
    }

    /// Zero outside a bounded window.
    pub fn is_finite_class(&self) -> bool {
        let zero = Tail::constant(ExtendedHeight::zero());
        self.left == zero && self.right == zero
    }

    /// Affine-periodic on the whole line (slope may be nonzero).
    pub fn is_affine_periodic(&self) -> bool {
        self.core.is_empty()
            && self.start == 0
            && self.left.same_law(&self.right)
            && self.left_matches_right()
    }

    /// Invariant under some horizontal shift.
    pub fn is_periodic(&self) -> bool {
        self.is_affine_periodic() && self.right.slope().is_zero()
    }

    fn left_matches_right(&self) -> bool {
        let p = self.right.len() as i64;
        (-p..0).all(|i| self.left.eval(-p, i) == self.right.eval(0, i))
    }

    /// Shortest `p` with `c[i + p] = c[i]` for all `i`, when periodic.
    pub fn period(&self) -> Option<usize> {
        self.is_periodic().then(|| self.right.len())
    }

    pub fn has_infinity(&self) -> bool {
        self.core.iter().any(|v| v.is_infinite())
            || self.left.has_infinity()
            || self.right.has_infinity()
    }

    /// First infinite column in the core, or a representative tail column.
    pub fn first_infinite_column(&self) -> Option<i64> {
        let lo = self.start - self.left.len() as i64;
        let hi = self.core_end() + self.right.len() as i64;
        (lo..hi).find(|&i| self.get(i).is_infinite())
    }

    /// Smallest `k` with `c[i] = 0` whenever `|i| > k`; `None` for the zero
    /// configuration or non-finite configurations.
    pub fn support_radius(&self) -> Option<u64> {
        if !self.is_finite_class() || self.core.is_empty() {
            return None;
        }
        Some(
            self.start
                .unsigned_abs()
                .max((self.core_end() - 1).unsigned_abs()),
        )
    }

    /// Total number of grains of a finite, infinity-free configuration.
    pub fn sum_grains(&self) -> Result<H, ConfigError> {
        if !self.is_finite_class() {
            return Err(ConfigError::NotFinite);
        }
        let mut total = H::zero();
        for (k, v) in self.core.iter().enumerate() {
            let h = v
                .finite()
                .ok_or(ConfigError::InfiniteColumn(self.start + k as i64))?;
            total = total.checked_add(&h).ok_or(ConfigError::Overflow)?;
        }
        Ok(total)
    }
}

fn canonicalize_parts<H: Scalar>(
    start: i64,
    core: Vec<ExtendedHeight<H>>,
    left: Tail<H>,
    right: Tail<H>,
) -> Configuration<H> {
    let left = left.primitive(true);
    let right = right.primitive(false);
    let pl = left.len() as i64;
    let pr = right.len() as i64;
    let a = start;
    let b = start + core.len() as i64;
    let raw = |i: i64| {
        if i < a {
            left.eval(a - pl, i)
        } else if i < b {
            core[(i - a) as usize]
        } else {
            right.eval(b, i)
        }
    };
    let right_ext = |i: i64| right.eval(b, i);
    let left_ext = |i: i64| left.eval(a - pl, i);

    if left.same_law(&right) && (a - pl..b).all(|i| raw(i) == right_ext(i)) {
        return Configuration {
            start: 0,
            core: Vec::new(),
            left: Tail::new((-pr..0).map(right_ext).collect(), right.slope()).unwrap(),
            right: Tail::new((0..pr).map(right_ext).collect(), right.slope()).unwrap(),
        };
    }

    // Two distinct primitive laws agree on at most lcm(pl, pr) consecutive
    // columns, which bounds how far the right law can reach into the left tail.
    let limit = a - lcm(pl as usize, pr as usize) as i64 - 1;
    let mut hi = b;
    while raw(hi - 1) == right_ext(hi - 1) {
        hi -= 1;
        assert!(hi >= limit, "canonicalization failed to separate tail laws");
    }
    let mut lo = a.min(hi);
    while lo < hi && raw(lo) == left_ext(lo) {
        lo += 1;
    }
    Configuration {
        start: lo,
        core: (lo..hi).map(raw).collect(),
        left: Tail::new((lo - pl..lo).map(left_ext).collect(), left.slope()).unwrap(),
        right: Tail::new((hi..hi + pr).map(right_ext).collect(), right.slope()).unwrap(),
    }
}

#[cfg(test)]
mod tests;
