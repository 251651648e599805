//! Integer scalar abstraction for column heights.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{PrimInt, Signed};
use serde::Serialize;

/// Signed primitive integer usable as a grain count.
///
/// Everything in [`crate::config`], [`crate::metric`] and [`crate::automaton`]
/// is generic over this trait; the crate root fixes `i64` through the
/// [`crate::Height`] and [`crate::Config`] aliases.
pub trait Scalar:
    PrimInt + Signed + Hash + Debug + Display + FromStr + Serialize + Send + Sync + 'static
{
    /// Converts a small machine integer (a delta, a period count) into the scalar.
    ///
    /// Panics when the value does not fit; heights leaving the scalar range is
    /// an overflow of the simulated system, not a recoverable condition.
    fn from_i64(v: i64) -> Self {
        <Self as num_traits::NumCast>::from(v).expect("height overflow")
    }

    fn to_i128_lossless(self) -> i128 {
        self.to_i128().expect("scalar wider than i128")
    }
}

impl<T> Scalar for T where
    T: PrimInt + Signed + Hash + Debug + Display + FromStr + Serialize + Send + Sync + 'static
{
}
