use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::scalar::Scalar;

/// A column height: a finite grain count or one of the two infinities.
///
/// Variant order gives the extended total order
/// `NegInf < Finite(_) < PosInf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedHeight<H> {
    NegInf,
    Finite(H),
    PosInf,
}

pub use ExtendedHeight::{Finite, NegInf, PosInf};

impl<H: Scalar> ExtendedHeight<H> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Finite(_))
    }

    pub fn is_infinite(&self) -> bool {
        !self.is_finite()
    }

    pub fn finite(&self) -> Option<H> {
        match *self {
            Finite(h) => Some(h),
            _ => None,
        }
    }

    /// Adds a finite amount; infinities absorb it.
    pub fn plus(self, delta: H) -> Self {
        match self {
            Finite(h) => Finite(h + delta),
            inf => inf,
        }
    }

    pub fn zero() -> Self {
        Finite(H::zero())
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::zero()
    }

    /// Sign of the value in the extended order, as -1, 0 or 1.
    pub fn signum(&self) -> i8 {
        match self.cmp(&Self::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Converts between scalar widths. Panics if a finite value does not fit.
    pub fn cast<G: Scalar>(self) -> ExtendedHeight<G> {
        match self {
            NegInf => NegInf,
            PosInf => PosInf,
            Finite(h) => Finite(<G as num_traits::NumCast>::from(h).expect("height overflow")),
        }
    }
}

impl<H: Scalar> From<H> for ExtendedHeight<H> {
    fn from(h: H) -> Self {
        Finite(h)
    }
}

impl<H: Scalar> fmt::Display for ExtendedHeight<H> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NegInf => f.write_str("-inf"),
            PosInf => f.write_str("+inf"),
            Finite(h) => write!(f, "{h}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid height `{0}` (expected an integer, `+inf` or `-inf`)")]
pub struct ParseHeightError(pub String);

impl<H: Scalar> FromStr for ExtendedHeight<H> {
    type Err = ParseHeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+inf" | "inf" => Ok(PosInf),
            "-inf" => Ok(NegInf),
            t => t
                .parse::<H>()
                .map(Finite)
                .map_err(|_| ParseHeightError(s.to_string())),
        }
    }
}

impl<H: Scalar> Serialize for ExtendedHeight<H> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Finite(h) => h.serialize(serializer),
            NegInf => serializer.serialize_str("-inf"),
            PosInf => serializer.serialize_str("+inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type H = ExtendedHeight<i64>;

    #[test]
    fn extended_order() {
        assert!(H::NegInf < Finite(i64::MIN));
        assert!(Finite(i64::MAX) < H::PosInf);
        assert!(Finite(-1i64) < Finite(0));
    }

    #[test]
    fn infinities_absorb_addition() {
        assert_eq!(H::PosInf.plus(-7), PosInf);
        assert_eq!(H::NegInf.plus(7), NegInf);
        assert_eq!(Finite(3i64).plus(-7), Finite(-4));
    }

    #[test]
    fn parse_and_display() {
        for s in ["+inf", "-inf", "0", "-12", "40"] {
            let h: H = s.parse().unwrap();
            assert_eq!(h.to_string(), s);
        }
        assert!("pos".parse::<H>().is_err());
    }

    #[test]
    fn cast_between_widths() {
        let h: ExtendedHeight<i32> = Finite(-5i64).cast();
        assert_eq!(h, Finite(-5i32));
        assert_eq!(H::PosInf.cast::<i8>(), PosInf);
    }
}
