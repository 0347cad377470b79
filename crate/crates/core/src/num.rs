use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Signed integer backend for every computation in the crate.
///
/// `BigInt` is the production choice; `i64` and `i128` work as long as the
/// values involved stay in range (fixed-width overflow panics in debug builds).
pub trait Int:
    Integer + Signed + Clone + FromPrimitive + ToPrimitive + FromStr + Display + Debug + Send + Sync
{
}

impl<T> Int for T where
    T: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + FromStr
        + Display
        + Debug
        + Send
        + Sync
{
}

/// Lossless conversion from a small constant.
pub(crate) fn int<T: Int>(v: i64) -> T {
    T::from_i64(v).expect("small constant fits every backend")
}

pub(crate) fn from_u64<T: Int>(v: u64) -> T {
    T::from_u64(v).expect("u64 value fits the integer backend")
}
