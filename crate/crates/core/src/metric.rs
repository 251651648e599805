//! Measuring device, difference vectors and the ultrametric distance.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::config::{lcm, Configuration, ExtendedHeight, Finite, NegInf, PosInf};
use crate::scalar::Scalar;

/// Saturating gauge of size `l` at reference height `m`.
pub fn beta<H: Scalar>(l: u64, m: H, n: ExtendedHeight<H>) -> ExtendedHeight<H> {
    let n = match n {
        Finite(n) => n,
        inf => return inf,
    };
    let Some(diff) = n.checked_sub(&m) else {
        return if n > m { PosInf } else { NegInf };
    };
    match <H as num_traits::NumCast>::from(l) {
        // l wider than the scalar: nothing saturates
        None => Finite(diff),
        Some(l) if diff > l => PosInf,
        Some(l) if diff < -l => NegInf,
        Some(_) => Finite(diff),
    }
}

/// The `2l` gauged neighbor differences around one column.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound = "H: Scalar")]
pub struct DifferenceVector<H> {
    size: u64,
    entries: Vec<ExtendedHeight<H>>,
    reference: H,
}

impl<H: Scalar> DifferenceVector<H> {
    /// Builds the vector for a column of height `center` whose neighbor at
    /// offset `k` is `neighbor(k)`, for `k` in `-l..=l` without 0.
    pub fn from_fn(
        l: u64,
        center: ExtendedHeight<H>,
        neighbor: impl Fn(i64) -> ExtendedHeight<H>,
    ) -> Self {
        let reference = center.finite().unwrap_or_else(H::zero);
        if l == 0 {
            return DifferenceVector {
                size: 0,
                entries: vec![center],
                reference,
            };
        }
        let l_i = l as i64;
        let entries = (-l_i..=l_i)
            .filter(|&k| k != 0)
            .map(|k| beta(l, reference, neighbor(k)))
            .collect();
        DifferenceVector {
            size: l,
            entries,
            reference,
        }
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn entries(&self) -> &[ExtendedHeight<H>] {
        &self.entries
    }

    /// The height used as `m`: the column itself, or 0 for an infinite column.
    pub fn reference(&self) -> H {
        self.reference
    }
}

/// `d_l^i(c)`: column `i`'s neighborhood of size `l`, gauged at `c_i`.
pub fn diff_vector<H: Scalar>(c: &Configuration<H>, i: i64, l: u64) -> DifferenceVector<H> {
    DifferenceVector::from_fn(l, c.get(i), |k| c.get(i + k))
}

/// Exact distance `0` or `2^-l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Distance {
    Zero,
    /// `2^-l`
    Dyadic(u64),
}

impl Distance {
    pub fn exponent(&self) -> Option<u64> {
        match *self {
            Distance::Zero => None,
            Distance::Dyadic(l) => Some(l),
        }
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Zero, Distance::Zero) => Ordering::Equal,
            (Distance::Zero, _) => Ordering::Less,
            (_, Distance::Zero) => Ordering::Greater,
            (Distance::Dyadic(a), Distance::Dyadic(b)) => b.cmp(a),
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Zero => f.write_str("0"),
            Distance::Dyadic(l) => write!(f, "2^-{l}"),
        }
    }
}

/// Extended integer used by the closed-form search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Ext {
    Neg,
    Fin(i128),
    Pos,
}

impl Ext {
    fn of<H: Scalar>(v: ExtendedHeight<H>) -> Self {
        match v {
            NegInf => Ext::Neg,
            PosInf => Ext::Pos,
            Finite(h) => Ext::Fin(h.to_i128_lossless()),
        }
    }
}

/// Smallest gauge size at which column values `x != y` are told apart, with
/// reference `m`: `beta` hides the difference only while both saturate on the
/// same side.
fn separation(x: Ext, y: Ext, m: i128) -> i128 {
    let (lo, hi) = if x < y { (x, y) } else { (y, x) };
    let mut t = 0;
    if let Ext::Fin(lo) = lo {
        t = t.max(lo - m);
    }
    if let Ext::Fin(hi) = hi {
        t = t.max(m - hi);
    }
    t
}

/// A column sequence along one tail residue: `value(q) = base + q * growth`.
#[derive(Clone, Copy)]
struct Ray {
    base: Ext,
    growth: i128,
}

impl Ray {
    fn at(&self, q: i128) -> Ext {
        match self.base {
            Ext::Fin(v) => Ext::Fin(v + q * self.growth),
            inf => inf,
        }
    }
}

/// Minimal `max(|j|, separation)` over `q >= 0` along one residue class whose
/// column index satisfies `|j| = dist0 + q * step`.
fn ray_minimum(dist0: i128, step: i128, x: Ray, y: Ray, m: i128) -> Option<i128> {
    let level = |q: i128| -> Option<i128> {
        let (xv, yv) = (x.at(q), y.at(q));
        (xv != yv).then(|| (dist0 + q * step).max(separation(xv, yv, m)))
    };
    // lines (intercept, slope) whose pairwise crossings bound the linear pieces
    let mut lines = vec![(dist0, step), (0, 0)];
    for r in [x, y] {
        if let Ext::Fin(v) = r.base {
            lines.push((v - m, r.growth));
            lines.push((m - v, -r.growth));
        }
    }
    let mut candidates = vec![0i128];
    for (a, &(c1, s1)) in lines.iter().enumerate() {
        for &(c2, s2) in &lines[a + 1..] {
            if s1 != s2 {
                let num = c2 - c1;
                let den = s1 - s2;
                let fl = num.div_euclid(den);
                candidates.extend([fl - 1, fl, fl + 1, fl + 2]);
            }
        }
    }
    let mut best: Option<i128> = None;
    for q in candidates.into_iter().filter(|&q| q >= 0) {
        if let Some(l) = level(q) {
            best = Some(best.map_or(l, |b| b.min(l)));
        }
    }
    best
}

/// `d(x, y)`: `0` when equal, else `2^-l` for the least `l` with
/// `d_l^0(x) != d_l^0(y)`.
///
/// The least `l` is computed without scanning `l`: every column `j != 0`
/// where the sequences differ becomes visible at `max(|j|, s_j)` with `s_j`
/// the saturation margin, so `l` is the minimum of that quantity. The core
/// columns are handled one by one and each tail residue class in closed form.
pub fn distance<H: Scalar>(x: &Configuration<H>, y: &Configuration<H>) -> Distance {
    if x == y {
        return Distance::Zero;
    }
    let (x0, y0) = (x.get(0), y.get(0));
    if x0 != y0 {
        return Distance::Dyadic(0);
    }
    let m = x0.finite().map_or(0, |h| h.to_i128_lossless());

    let lo = x.core_start().min(y.core_start()).min(-1);
    let hi = x.core_end().max(y.core_end()).max(2);
    let mut best: Option<i128> = None;
    let mut keep = |l: Option<i128>| {
        if let Some(l) = l {
            best = Some(best.map_or(l, |b: i128| b.min(l)));
        }
    };
    for j in lo..hi {
        let (xv, yv) = (Ext::of(x.get(j)), Ext::of(y.get(j)));
        if j != 0 && xv != yv {
            keep(Some((j.unsigned_abs() as i128).max(separation(xv, yv, m))));
        }
    }

    let (xr, yr) = (x.right_tail(), y.right_tail());
    let block = lcm(xr.len(), yr.len());
    let gx = xr.slope().to_i128_lossless() * (block / xr.len()) as i128;
    let gy = yr.slope().to_i128_lossless() * (block / yr.len()) as i128;
    for t in 0..block as i64 {
        let j = hi + t;
        let rx = Ray {
            base: Ext::of(x.get(j)),
            growth: gx,
        };
        let ry = Ray {
            base: Ext::of(y.get(j)),
            growth: gy,
        };
        keep(ray_minimum(j as i128, block as i128, rx, ry, m));
    }

    let (xl, yl) = (x.left_tail(), y.left_tail());
    let block = lcm(xl.len(), yl.len());
    let gx = -xl.slope().to_i128_lossless() * (block / xl.len()) as i128;
    let gy = -yl.slope().to_i128_lossless() * (block / yl.len()) as i128;
    for t in 0..block as i64 {
        let j = lo - 1 - t;
        let rx = Ray {
            base: Ext::of(x.get(j)),
            growth: gx,
        };
        let ry = Ray {
            base: Ext::of(y.get(j)),
            growth: gy,
        };
        keep(ray_minimum(-(j as i128), block as i128, rx, ry, m));
    }

    let l = best.expect("unequal configurations differ at some column");
    Distance::Dyadic(u64::try_from(l).unwrap_or(u64::MAX))
}
