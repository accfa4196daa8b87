//! Scalar type used for element weights and weighted distances.
//!
//! Weighted distances are sums of products of element weights, so the scalar
//! must be an exact unsigned integer. `u64` covers every desk-scale instance;
//! `u128` is available for the large chain lengths of the hardness gadget.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{PrimInt, Unsigned};

/// Exact unsigned integer scalar for weights and weighted distances.
pub trait Weight: PrimInt + Unsigned + Sum + Default + Debug + Display + Send + Sync + 'static {
    /// Converts a count, panicking only if the count does not fit the scalar.
    fn from_count(count: usize) -> Self {
        <Self as num_traits::NumCast>::from(count).expect("count does not fit weight type")
    }

    fn is_unit(self) -> bool {
        self == Self::one()
    }
}

impl<T> Weight for T where T: PrimInt + Unsigned + Sum + Default + Debug + Display + Send + Sync + 'static {}
