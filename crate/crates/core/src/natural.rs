//! The scalar abstraction every counting and ranking routine is generic over.
//!
//! Closed forms in this crate only ever add, subtract, multiply, divide and
//! compare non-negative integers, so anything that behaves like an unsigned
//! integer can be plugged in. [`BigUint`] is the production choice; the
//! fixed-width primitives are useful for quick bounded checks, and
//! [`Counted`](crate::instrument::Counted) wraps another natural to count the
//! arithmetic it performs.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// An unsigned integer type usable as index, level and tuple component.
///
/// Fixed-width implementations panic on overflow in debug builds. Indices grow
/// like the cube of the digit values involved, so only [`BigUint`] is safe for
/// unbounded input.
pub trait Natural:
    Clone + Ord + Hash + fmt::Debug + fmt::Display + Num + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Number of significant bits; zero for zero.
    fn bit_length(&self) -> u64;

    fn shl_bits(&self, bits: u32) -> Self;

    fn shr_bits(&self, bits: u32) -> Self;

    /// Parses a non-empty string of ASCII decimal digits. `None` when the value
    /// does not fit.
    fn from_decimal_digits(digits: &str) -> Option<Self> {
        Self::from_str_radix(digits, 10).ok()
    }
}

macro_rules! impl_natural_for_primitive {
    ($($t:ty),*) => {$(
        impl Natural for $t {
            fn bit_length(&self) -> u64 {
                u64::from(<$t>::BITS - self.leading_zeros())
            }

            fn shl_bits(&self, bits: u32) -> Self {
                self << bits
            }

            fn shr_bits(&self, bits: u32) -> Self {
                self.checked_shr(bits).unwrap_or(0)
            }
        }
    )*};
}

impl_natural_for_primitive!(u32, u64, u128);

impl Natural for BigUint {
    fn bit_length(&self) -> u64 {
        self.bits()
    }

    fn shl_bits(&self, bits: u32) -> Self {
        self << bits
    }

    fn shr_bits(&self, bits: u32) -> Self {
        self >> bits
    }
}

/// Small constant lifted into any natural type.
pub(crate) fn lit<N: Natural>(value: u32) -> N {
    N::from_u32(value).expect("small literal fits every natural type")
}

pub(crate) fn is_even<N: Natural>(value: &N) -> bool {
    (value.clone() % lit(2)).is_zero()
}
