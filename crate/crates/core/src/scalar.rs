use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating point type a coordinate can be stored in: `f32` or `f64`.
///
/// `Display` must print the shortest decimal that round-trips and never use
/// exponent notation; link rendering rounds that decimal string.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Parses a plain decimal literal (`-?digits[.digits]`).
    fn parse_decimal(s: &str) -> Option<Self> {
        Self::from_str_radix(s, 10).ok()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
