//! The field abstraction every exact algorithm in this crate is generic over.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{FromPrimitive, NumOps, One, Zero};

/// An exact field element.
///
/// Equality must be exact and decidable, which rules out `f32`/`f64`: the
/// elimination and gcd routines branch on `is_zero()` and would silently
/// produce garbage under rounding. [`GaussRat`](crate::GaussRat) and
/// `num_rational::BigRational` both qualify.
pub trait Scalar:
    Clone
    + Eq
    + Debug
    + Display
    + FromStr
    + Zero
    + One
    + NumOps
    + std::ops::Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn from_int(k: i64) -> Self {
        Self::from_i64(k).expect("every exact field contains the integers")
    }
}

impl<T> Scalar for T where
    T: Clone
        + Eq
        + Debug
        + Display
        + FromStr
        + Zero
        + One
        + NumOps
        + std::ops::Neg<Output = T>
        + FromPrimitive
        + Send
        + Sync
{
}
