//! Linear extension diameter of finite posets.
//!
//! The crate covers four areas:
//!
//! * [`order`]: the poset representation and structural predicates (critical
//!   pairs, modules, twins, chain substitution, minimum chain partitions).
//! * [`linext`]: exhaustive machinery over linear extensions: enumeration,
//!   reversal distances, the linear extension graph, diameters and the
//!   reversal predicates on diametral extensions.
//! * [`width3`]: a polynomial dynamic program over the downset lattice for
//!   posets of width at most three.
//! * [`family`] and [`gadget`]: generators for the poset families used in the
//!   structural results, interval-order recognition, and the hardness gadget.
//!
//! Weighted computations are generic over the [`Weight`] scalar; the aliases
//! below fix the common choices.

pub mod error;
pub mod family;
pub mod gadget;
pub mod linext;
pub mod matching;
pub mod order;
pub mod weight;
pub mod width3;

pub use error::{Error, Result};
pub use linext::{LinearExtension, DEFAULT_CAP};
pub use order::{ChainDecomposition, CriticalPair, Poset, WeightedPoset};
pub use weight::Weight;

/// Weighted poset with 64-bit weights; enough for every desk-scale instance.
pub type WeightedPoset64 = WeightedPoset<u64>;

/// Weighted poset with 128-bit weights, for gadget instances with long chains.
pub type WeightedPoset128 = WeightedPoset<u128>;

/// Diameter result with 64-bit distances.
pub type Diameter64 = linext::Diameter<u64>;
