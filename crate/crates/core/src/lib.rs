//! Exact simulation and bounded verification of one-dimensional sand automata.

pub mod analysis;
pub mod automaton;
pub mod config;
pub mod format;
pub mod metric;
pub mod scalar;
pub mod zoo;

pub use config::{Configuration, ExtendedHeight, Tail};
pub use scalar::Scalar;

/// Default column height: `i64` grains or an infinity.
pub type Height = ExtendedHeight<i64>;
/// Default configuration type.
pub type Config = Configuration<i64>;
