//! Exact bijection between finite decimal numbers and the natural numbers.
//!
//! A decimal is split into a canonical tuple `(sign, n1, n2, n3)`: the
//! integer part, the number of zeros right after the decimal point, and the
//! remaining fractional digits read as an integer. Tuples are enumerated by
//! complexity `n1 + n2 + n3`, lexicographically by `(n1, n2)` inside a level,
//! positive before negative. Closed-form counts rank and unrank a tuple with a
//! fixed number of big-integer operations.
//!
//! Everything numeric is generic over [`Natural`]. The aliases below fix the
//! scalar to [`BigUint`], which is what callers normally want:
//!
//! ```
//! use decindex::{decode_text, encode_text, BigIndex, Mode, DEFAULT_MAX_RENDER_DIGITS};
//!
//! let index: BigIndex = encode_text("1.0002", Mode::Tuple).unwrap();
//! assert_eq!(index.to_string(), "100");
//! assert_eq!(decode_text(&index, Mode::Tuple, DEFAULT_MAX_RENDER_DIGITS).unwrap(), "1.0002");
//! ```

pub mod bijection;
pub mod counting;
pub mod decimal;
mod error;
pub mod instrument;
pub mod natural;
pub mod oracle;
pub mod positioning;
pub mod roots;

pub use num_bigint::BigUint;

pub use bijection::{
    decode, decode_text, encode, encode_text, enumerate, locate, strict_decode, strict_encode,
    strict_locate, EnumerationRecord, Enumerator, Index, Mode,
};
pub use counting::{
    cumulative_before, cumulative_upto, level_count, level_of_index, strict_cumulative_before,
    strict_cumulative_upto, strict_level_count, strict_level_of_index,
};
pub use decimal::{
    canonicalize, complexity, parse_decimal, reconstruct, CanonicalTuple, ExactDecimal, Sign,
    DEFAULT_MAX_RENDER_DIGITS,
};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use instrument::{Counted, OpCounts};
pub use natural::Natural;
pub use oracle::{oracle_index_of, oracle_stream, OracleConfig};
pub use positioning::{
    position_within, strict_position_within, strict_tuple_at, tuple_at, LevelPosition,
};

pub type BigTuple = CanonicalTuple<BigUint>;
pub type BigIndex = Index<BigUint>;
pub type BigRecord = EnumerationRecord<BigUint>;
pub type BigLevelPosition = LevelPosition<BigUint>;

/// Instrumented scalar for counting big-integer operations.
pub type CountedBig = Counted<BigUint>;
