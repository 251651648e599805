use serde::Serialize;

use super::height::ExtendedHeight;
use crate::scalar::Scalar;

/// An affine-periodic law `v(i + p) = v(i) + slope` for a half-line of columns.
///
/// `period` lists `p` consecutive column values starting at the law's origin.
/// The slope only moves finite entries; infinite entries repeat unchanged.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(bound = "H: Scalar")]
pub struct Tail<H> {
    period: Vec<ExtendedHeight<H>>,
    slope: H,
}

impl<H: Scalar> Tail<H> {
    /// Returns `None` for an empty period.
    pub fn new(period: Vec<ExtendedHeight<H>>, slope: H) -> Option<Self> {
        if period.is_empty() {
            return None;
        }
        let slope = if period.iter().all(|v| v.is_infinite()) {
            H::zero()
        } else {
            slope
        };
        Some(Tail { period, slope })
    }

    pub fn constant(h: ExtendedHeight<H>) -> Self {
        Tail::new(vec![h], H::zero()).unwrap()
    }

    pub fn period(&self) -> &[ExtendedHeight<H>] {
        &self.period
    }

    pub fn slope(&self) -> H {
        self.slope
    }

    pub fn len(&self) -> usize {
        self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value at column `i` when `period[0]` sits at column `origin`.
    pub(crate) fn eval(&self, origin: i64, i: i64) -> ExtendedHeight<H> {
        let p = self.period.len() as i64;
        let j = i - origin;
        let q = j.div_euclid(p);
        let v = self.period[j.rem_euclid(p) as usize];
        if q == 0 || self.slope.is_zero() {
            v
        } else {
            v.plus(self.slope * H::from_i64(q))
        }
    }

    pub(crate) fn same_law(&self, other: &Self) -> bool {
        self.period.len() == other.period.len() && self.slope == other.slope
    }

    pub(crate) fn map(&self, f: impl Fn(ExtendedHeight<H>) -> ExtendedHeight<H>) -> Self {
        Tail {
            period: self.period.iter().copied().map(f).collect(),
            slope: self.slope,
        }
    }

    pub(crate) fn has_infinity(&self) -> bool {
        self.period.iter().any(|v| v.is_infinite())
    }

    /// Reduces the period to its shortest length describing the same sequence.
    ///
    /// A right tail is anchored at its first column and keeps the leading
    /// entries; a left tail (`anchored_at_end`) keeps the trailing ones.
    pub(crate) fn primitive(&self, anchored_at_end: bool) -> Self {
        let p = self.period.len();
        let any_finite = self.period.iter().any(|v| v.is_finite());
        for q in (1..p).filter(|q| p.is_multiple_of(*q)) {
            let sub_slope = if any_finite {
                let reps = H::from_i64((p / q) as i64);
                if self.slope % reps != H::zero() {
                    continue;
                }
                self.slope / reps
            } else {
                H::zero()
            };
            let consistent =
                (0..p - q).all(|t| self.period[t + q] == self.period[t].plus(sub_slope));
            if consistent {
                let kept = if anchored_at_end {
                    &self.period[p - q..]
                } else {
                    &self.period[..q]
                };
                return Tail {
                    period: kept.to_vec(),
                    slope: sub_slope,
                };
            }
        }
        self.clone()
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::height::{Finite, PosInf};

    fn fin(v: &[i64]) -> Vec<ExtendedHeight<i64>> {
        v.iter().copied().map(Finite).collect()
    }

    #[test]
    fn eval_with_slope() {
        let t = Tail::new(fin(&[0, 2]), 1).unwrap();
        assert_eq!(t.eval(0, 5), Finite(4));
        assert_eq!(t.eval(0, -1), Finite(1));
        assert_eq!(t.eval(0, -2), Finite(-1));
    }

    #[test]
    fn primitive_reduction() {
        let t = Tail::new(fin(&[0, 1, 0, 1]), 0).unwrap();
        assert_eq!(t.primitive(false).period(), &fin(&[0, 1])[..]);
        let t = Tail::new(fin(&[0, 1, 2, 3]), 4).unwrap();
        let p = t.primitive(false);
        assert_eq!((p.period(), p.slope()), (&fin(&[0])[..], 1));
        let p = t.primitive(true);
        assert_eq!((p.period(), p.slope()), (&fin(&[3])[..], 1));
        // slope 1 over two columns cannot split into integer steps
        let t = Tail::new(fin(&[0, 0]), 1).unwrap();
        assert_eq!(t.primitive(false).len(), 2);
    }

    #[test]
    fn infinite_entries_ignore_slope() {
        let t = Tail::new(vec![PosInf, Finite(0)], 3).unwrap();
        assert_eq!(t.eval(0, 4), PosInf);
        assert_eq!(t.eval(0, 5), Finite(6));
        let all_inf = Tail::<i64>::new(vec![PosInf, PosInf], 5).unwrap();
        assert_eq!(all_inf.slope(), 0);
        assert_eq!(all_inf.primitive(false).len(), 1);
    }
}
