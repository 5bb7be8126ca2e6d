//! Coefficient field abstraction.
//!
//! Everything in this crate computes over an exact field of characteristic
//! zero. [`Scalar`] collects the `num-traits` bounds the algorithms need;
//! [`num_rational::BigRational`] is the reference instance and
//! [`num_rational::Rational64`] works for small inputs that do not overflow.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, Signed};

/// An exact coefficient field.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + FromStr + Send + Sync + 'static
{
    /// Embeds a machine integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer embeds into every scalar field")
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + Display + PartialEq + Num + Signed + FromPrimitive + FromStr + Send + Sync + 'static
{
}

/// Parses a `p/q` or integer literal.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    match text.split_once('/') {
        Some((num, den)) => {
            let num = S::from_str(num.trim()).ok()?;
            let den = S::from_str(den.trim()).ok()?;
            if den.is_zero() {
                None
            } else {
                Some(num / den)
            }
        }
        None => S::from_str(text).ok(),
    }
}
