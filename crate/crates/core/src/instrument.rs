//! Arithmetic instrumentation.
//!
//! [`Counted`] wraps a [`Natural`] and bumps a thread-local tally on every
//! arithmetic operator it evaluates. Running `encode`/`decode` over
//! `Counted<BigUint>` therefore reports exactly how many big-integer
//! operations a call performs.

use std::cell::Cell;
use std::fmt;
use std::ops::{Add, Div, Mul, Rem, Sub};

use num_traits::{FromPrimitive, Num, One, ToPrimitive, Zero};

use crate::natural::Natural;

/// Operation tallies for the current thread.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct OpCounts {
    pub add: u64,
    pub sub: u64,
    pub mul: u64,
    pub div: u64,
    pub rem: u64,
}

impl OpCounts {
    /// Multiplications plus divisions plus remainders.
    pub fn mul_div(&self) -> u64 {
        self.mul + self.div + self.rem
    }

    pub fn total(&self) -> u64 {
        self.add + self.sub + self.mul_div()
    }
}

impl fmt::Display for OpCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "add={} sub={} mul={} div={} rem={}",
            self.add, self.sub, self.mul, self.div, self.rem
        )
    }
}

thread_local! {
    static COUNTS: Cell<OpCounts> = Cell::new(OpCounts::default());
}

fn bump(f: impl FnOnce(&mut OpCounts)) {
    COUNTS.with(|c| {
        let mut counts = c.get();
        f(&mut counts);
        c.set(counts);
    });
}

pub fn reset_op_counts() {
    COUNTS.with(|c| c.set(OpCounts::default()));
}

pub fn op_counts() -> OpCounts {
    COUNTS.with(Cell::get)
}

/// Runs `f` with fresh counters and returns its result with the tally.
pub fn measure<R>(f: impl FnOnce() -> R) -> (R, OpCounts) {
    let saved = op_counts();
    reset_op_counts();
    let out = f();
    let counts = op_counts();
    COUNTS.with(|c| c.set(saved));
    (out, counts)
}

/// A natural number that counts the arithmetic performed on it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Counted<N>(pub N);

impl<N> Counted<N> {
    pub fn into_inner(self) -> N {
        self.0
    }
}

impl<N: fmt::Display> fmt::Display for Counted<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

macro_rules! counted_op {
    ($tr:ident, $method:ident, $field:ident) => {
        impl<N: $tr<Output = N>> $tr for Counted<N> {
            type Output = Counted<N>;

            fn $method(self, rhs: Self) -> Self {
                bump(|c| c.$field += 1);
                Counted(self.0.$method(rhs.0))
            }
        }
    };
}

counted_op!(Add, add, add);
counted_op!(Sub, sub, sub);
counted_op!(Mul, mul, mul);
counted_op!(Div, div, div);
counted_op!(Rem, rem, rem);

impl<N: Natural> Zero for Counted<N> {
    fn zero() -> Self {
        Counted(N::zero())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl<N: Natural> One for Counted<N> {
    fn one() -> Self {
        Counted(N::one())
    }
}

impl<N: Natural> Num for Counted<N> {
    type FromStrRadixErr = N::FromStrRadixErr;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        N::from_str_radix(s, radix).map(Counted)
    }
}

impl<N: Natural> FromPrimitive for Counted<N> {
    fn from_i64(n: i64) -> Option<Self> {
        N::from_i64(n).map(Counted)
    }

    fn from_u64(n: u64) -> Option<Self> {
        N::from_u64(n).map(Counted)
    }

    fn from_u128(n: u128) -> Option<Self> {
        N::from_u128(n).map(Counted)
    }

    fn from_f64(n: f64) -> Option<Self> {
        N::from_f64(n).map(Counted)
    }
}

impl<N: Natural> ToPrimitive for Counted<N> {
    fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }

    fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl<N: Natural> Natural for Counted<N> {
    fn bit_length(&self) -> u64 {
        self.0.bit_length()
    }

    fn shl_bits(&self, bits: u32) -> Self {
        Counted(self.0.shl_bits(bits))
    }

    fn shr_bits(&self, bits: u32) -> Self {
        Counted(self.0.shr_bits(bits))
    }
}
