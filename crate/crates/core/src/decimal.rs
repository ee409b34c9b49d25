//! Exact decimal text, canonical 4-tuples, and the conversions between them.
//!
//! Nothing here touches binary floating point. Text is parsed into explicit
//! base-10 digit strings so leading fractional zeros can be counted before any
//! numeric conversion, and tuples are rendered back by plain concatenation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::natural::{lit, Natural};

/// Default cap on the length of rendered decimal text.
pub const DEFAULT_MAX_RENDER_DIGITS: usize = 1_000_000;

/// Exponents beyond this magnitude are refused at parse time; honouring them
/// would materialise more digits than the default render budget.
pub const MAX_EXPONENT: u64 = DEFAULT_MAX_RENDER_DIGITS as u64;

/// A decimal value held as sign plus integer and fractional digit strings.
///
/// `integer_digits` never has a leading zero except for the single digit
/// `"0"`; `fraction_digits` is kept verbatim (trailing zeros included).
/// Zero is never negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactDecimal {
    negative: bool,
    integer_digits: String,
    fraction_digits: String,
}

impl ExactDecimal {
    pub fn negative(&self) -> bool {
        self.negative
    }

    pub fn integer_digits(&self) -> &str {
        &self.integer_digits
    }

    pub fn fraction_digits(&self) -> &str {
        &self.fraction_digits
    }

    pub fn is_zero(&self) -> bool {
        self.integer_digits == "0" && self.fraction_digits.bytes().all(|b| b == b'0')
    }

    /// Fraction digits with trailing zeros removed.
    pub fn significant_fraction(&self) -> &str {
        self.fraction_digits.trim_end_matches('0')
    }

    fn from_parts(negative: bool, integer: &str, fraction: String) -> Self {
        let trimmed = integer.trim_start_matches('0');
        let integer_digits = if trimmed.is_empty() { "0" } else { trimmed }.to_string();
        let mut value = ExactDecimal {
            negative,
            integer_digits,
            fraction_digits: fraction,
        };
        if value.is_zero() {
            value.negative = false;
        }
        value
    }

    /// True when both decimals denote the same number.
    pub fn same_value(&self, other: &ExactDecimal) -> bool {
        self.negative == other.negative
            && self.integer_digits == other.integer_digits
            && self.significant_fraction() == other.significant_fraction()
    }
}

impl fmt::Display for ExactDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        f.write_str(&self.integer_digits)?;
        if !self.fraction_digits.is_empty() {
            write!(f, ".{}", self.fraction_digits)?;
        }
        Ok(())
    }
}

impl FromStr for ExactDecimal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_decimal(s)
    }
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    offset: usize,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next().map(|(_, c)| c);
        if c.is_some() {
            self.offset += 1;
        }
        c
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            out.push(c);
            self.bump();
        }
        out
    }

    fn sign(&mut self) -> bool {
        match self.peek() {
            Some('-') => {
                self.bump();
                true
            }
            Some('+') => {
                self.bump();
                false
            }
            _ => false,
        }
    }

    fn error(&mut self, kind: ParseErrorKind) -> ParseError {
        ParseError {
            position: self.offset,
            kind,
        }
    }

    fn unexpected(&mut self) -> ParseError {
        match self.peek() {
            Some('.') => self.error(ParseErrorKind::SecondDecimalPoint),
            Some(c) => self.error(ParseErrorKind::UnexpectedChar(c)),
            None => self.error(ParseErrorKind::MissingDigits),
        }
    }
}

/// Parses `[+|-] digits [. digits] [(e|E) [+|-] digits]` or
/// `[+|-] . digits [exponent]` into an exact value. Exponents shift the
/// decimal point; nothing is rounded.
pub fn parse_decimal(text: &str) -> Result<ExactDecimal, ParseError> {
    if text.is_empty() {
        return Err(ParseError {
            position: 0,
            kind: ParseErrorKind::Empty,
        });
    }
    let mut cur = Cursor {
        chars: text.char_indices().peekable(),
        offset: 0,
    };

    let negative = cur.sign();
    let integer = cur.digits();
    let mut fraction = String::new();
    if cur.peek() == Some('.') {
        cur.bump();
        fraction = cur.digits();
        if fraction.is_empty() {
            return Err(cur.unexpected());
        }
    } else if integer.is_empty() {
        return Err(cur.unexpected());
    }

    let mut exponent: i64 = 0;
    if matches!(cur.peek(), Some('e' | 'E')) {
        cur.bump();
        let start = cur.offset;
        let exp_negative = cur.sign();
        let digits = cur.digits();
        if digits.is_empty() {
            return Err(cur.unexpected());
        }
        let magnitude = digits
            .trim_start_matches('0')
            .parse::<u64>()
            .unwrap_or(if digits.bytes().all(|b| b == b'0') { 0 } else { u64::MAX });
        if magnitude > MAX_EXPONENT {
            return Err(ParseError {
                position: start,
                kind: ParseErrorKind::ExponentTooLarge,
            });
        }
        exponent = if exp_negative {
            -(magnitude as i64)
        } else {
            magnitude as i64
        };
    }
    if cur.peek().is_some() {
        return Err(cur.unexpected());
    }

    Ok(shift_point(negative, &integer, &fraction, exponent))
}

fn shift_point(negative: bool, integer: &str, fraction: &str, exponent: i64) -> ExactDecimal {
    if exponent == 0 {
        return ExactDecimal::from_parts(negative, integer, fraction.to_string());
    }
    let mut all = String::with_capacity(integer.len() + fraction.len());
    all.push_str(integer);
    all.push_str(fraction);
    let point = integer.len() as i64 + exponent;
    if point <= 0 {
        let mut frac = "0".repeat((-point) as usize);
        frac.push_str(&all);
        ExactDecimal::from_parts(negative, "0", frac)
    } else if point as usize >= all.len() {
        let pad = point as usize - all.len();
        all.push_str(&"0".repeat(pad));
        ExactDecimal::from_parts(negative, &all, String::new())
    } else {
        let (int, frac) = all.split_at(point as usize);
        ExactDecimal::from_parts(negative, int, frac.to_string())
    }
}

/// Sign of a canonical tuple. Zero is always [`Sign::Positive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+1",
            Sign::Negative => "-1",
        })
    }
}

/// `(sign, n1, n2, n3)`: integer part, count of leading fractional zeros,
/// and the remaining fractional digits read as an integer.
///
/// Construction enforces `n3 = 0 ⇒ n2 = 0` and a positive sign for zero.
/// Whether `n3` may end in a zero is a property of the tuple
/// ([`is_strict_canonical`](Self::is_strict_canonical)), not a construction
/// rule, because the tuple-mode enumeration includes such tuples.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalTuple<N> {
    sign: Sign,
    n1: N,
    n2: N,
    n3: N,
}

impl<N: Natural> CanonicalTuple<N> {
    pub fn new(sign: Sign, n1: N, n2: N, n3: N) -> Result<Self> {
        if n3.is_zero() && !n2.is_zero() {
            return Err(Error::InvalidTuple("n2 must be 0 when n3 is 0"));
        }
        if sign == Sign::Negative && n1.is_zero() && n3.is_zero() {
            return Err(Error::InvalidTuple("zero must carry a positive sign"));
        }
        Ok(CanonicalTuple { sign, n1, n2, n3 })
    }

    pub fn zero() -> Self {
        CanonicalTuple {
            sign: Sign::Positive,
            n1: N::zero(),
            n2: N::zero(),
            n3: N::zero(),
        }
    }

    /// Built from components already known to satisfy the invariants.
    pub(crate) fn from_parts(sign: Sign, n1: N, n2: N, n3: N) -> Self {
        debug_assert!(!(n3.is_zero() && !n2.is_zero()));
        debug_assert!(!(sign == Sign::Negative && n1.is_zero() && n3.is_zero()));
        CanonicalTuple { sign, n1, n2, n3 }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn n1(&self) -> &N {
        &self.n1
    }

    pub fn n2(&self) -> &N {
        &self.n2
    }

    pub fn n3(&self) -> &N {
        &self.n3
    }

    pub fn is_zero(&self) -> bool {
        self.n1.is_zero() && self.n3.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.n3.is_zero()
    }

    /// `n3` has no trailing zero (or is zero), so the tuple is the one
    /// [`canonicalize`] would produce for its value.
    pub fn is_strict_canonical(&self) -> bool {
        self.n3.is_zero() || !(self.n3.clone() % lit(10)).is_zero()
    }

    /// Same tuple over another natural type.
    pub fn convert<M: Natural>(&self) -> Option<CanonicalTuple<M>> {
        let conv = |v: &N| M::from_decimal_digits(&v.to_string());
        Some(CanonicalTuple {
            sign: self.sign,
            n1: conv(&self.n1)?,
            n2: conv(&self.n2)?,
            n3: conv(&self.n3)?,
        })
    }
}

impl<N: fmt::Display> fmt::Display for CanonicalTuple<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.sign, self.n1, self.n2, self.n3)
    }
}

fn digits_to<N: Natural>(digits: &str) -> Result<N> {
    if digits.is_empty() {
        return Ok(N::zero());
    }
    N::from_decimal_digits(digits).ok_or_else(|| Error::Overflow(digits.to_string()))
}

/// Canonical tuple of an exact decimal. Trailing fractional zeros are
/// dropped, so value-equal inputs land on the same tuple.
///
/// Only fails with [`Error::Overflow`] when `N` is a fixed-width type too
/// small for the digits.
pub fn canonicalize<N: Natural>(value: &ExactDecimal) -> Result<CanonicalTuple<N>> {
    if value.is_zero() {
        return Ok(CanonicalTuple::zero());
    }
    let significant = value.significant_fraction();
    let body = significant.trim_start_matches('0');
    let leading_zeros = if body.is_empty() {
        0
    } else {
        significant.len() - body.len()
    };
    let n2 = N::from_usize(leading_zeros).ok_or_else(|| Error::Overflow(leading_zeros.to_string()))?;
    let sign = if value.negative() {
        Sign::Negative
    } else {
        Sign::Positive
    };
    Ok(CanonicalTuple::from_parts(
        sign,
        digits_to(value.integer_digits())?,
        n2,
        digits_to(body)?,
    ))
}

/// Renders a tuple as decimal text: `"0"` for zero, an unpointed integer
/// when `n3 = 0`, otherwise `n1 "." (n2 zeros) n3`, with a leading `-` for
/// negative tuples.
///
/// Refuses with [`Error::RenderBudgetExceeded`] rather than truncating when
/// the text would be longer than `max_render_digits` characters.
pub fn reconstruct<N: Natural>(tuple: &CanonicalTuple<N>, max_render_digits: usize) -> Result<String> {
    let n1 = tuple.n1.to_string();
    let sign_len = usize::from(tuple.sign == Sign::Negative);
    if tuple.is_integer() {
        let needed = sign_len + n1.len();
        if needed > max_render_digits {
            return Err(Error::RenderBudgetExceeded {
                needed: needed.to_string(),
                budget: max_render_digits,
            });
        }
        let mut out = String::with_capacity(needed);
        if sign_len == 1 {
            out.push('-');
        }
        out.push_str(&n1);
        return Ok(out);
    }

    let n3 = tuple.n3.to_string();
    let fixed = sign_len + n1.len() + 1 + n3.len();
    let zeros = tuple.n2.to_usize().filter(|z| z.checked_add(fixed).is_some_and(|t| t <= max_render_digits));
    let Some(zeros) = zeros else {
        return Err(Error::RenderBudgetExceeded {
            needed: (tuple.n2.clone() + N::from_usize(fixed).expect("length fits")).to_string(),
            budget: max_render_digits,
        });
    };
    let mut out = String::with_capacity(fixed + zeros);
    if sign_len == 1 {
        out.push('-');
    }
    out.push_str(&n1);
    out.push('.');
    out.extend(std::iter::repeat_n('0', zeros));
    out.push_str(&n3);
    Ok(out)
}

/// `K = n1 + n2 + n3`.
pub fn complexity<N: Natural>(tuple: &CanonicalTuple<N>) -> N {
    tuple.n1.clone() + tuple.n2.clone() + tuple.n3.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    type T = CanonicalTuple<BigUint>;

    fn tuple(sign: i8, n1: u64, n2: u64, n3: u64) -> T {
        CanonicalTuple::new(
            Sign::from_i8(sign).unwrap(),
            BigUint::from(n1),
            BigUint::from(n2),
            BigUint::from(n3),
        )
        .unwrap()
    }

    fn canon(text: &str) -> T {
        canonicalize(&parse_decimal(text).unwrap()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let d = parse_decimal("-42.500").unwrap();
        assert!(d.negative());
        assert_eq!(d.integer_digits(), "42");
        assert_eq!(d.fraction_digits(), "500");

        let z = parse_decimal("0").unwrap();
        assert!(!z.negative());
        assert_eq!((z.integer_digits(), z.fraction_digits()), ("0", ""));

        let e = parse_decimal("2.2E-10").unwrap();
        assert!(!e.negative());
        assert_eq!((e.integer_digits(), e.fraction_digits()), ("0", "00000000022"));
    }

    #[test]
    fn parse_accepts_grammar_variants() {
        assert_eq!(parse_decimal(".5").unwrap().to_string(), "0.5");
        assert_eq!(parse_decimal("+7").unwrap().to_string(), "7");
        assert_eq!(parse_decimal("-.25e1").unwrap().to_string(), "-2.5");
        assert_eq!(parse_decimal("1.5e3").unwrap().to_string(), "1500");
        assert_eq!(parse_decimal("15e-1").unwrap().to_string(), "1.5");
        assert_eq!(parse_decimal("0007.10").unwrap().to_string(), "7.10");
        assert_eq!(parse_decimal("1E+0").unwrap().to_string(), "1");
        assert_eq!(parse_decimal("-0.0").unwrap().to_string(), "0.0");
        assert!(!parse_decimal("-0.0").unwrap().negative());
    }

    #[test]
    fn parse_errors_name_position() {
        let cases = [
            ("", 0, ParseErrorKind::Empty),
            ("1.2.3", 3, ParseErrorKind::SecondDecimalPoint),
            ("-", 1, ParseErrorKind::MissingDigits),
            (".", 1, ParseErrorKind::MissingDigits),
            ("5.", 2, ParseErrorKind::MissingDigits),
            ("12a4", 2, ParseErrorKind::UnexpectedChar('a')),
            ("1e", 2, ParseErrorKind::MissingDigits),
            ("1e+", 3, ParseErrorKind::MissingDigits),
            ("--1", 1, ParseErrorKind::UnexpectedChar('-')),
            (" 1", 0, ParseErrorKind::UnexpectedChar(' ')),
            ("1e99999999999999999999", 2, ParseErrorKind::ExponentTooLarge),
        ];
        for (text, position, kind) in cases {
            let err = parse_decimal(text).unwrap_err();
            assert_eq!(err, ParseError { position, kind }, "input {text:?}");
        }
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(canon("-3.14159"), tuple(-1, 3, 0, 14159));
        assert_eq!(canon("0.007"), tuple(1, 0, 2, 7));
        assert_eq!(canon("-0.0"), T::zero());
        assert_eq!(canon("-42.500"), tuple(-1, 42, 0, 5));
        assert_eq!(canon("1000.0"), tuple(1, 1000, 0, 0));
        assert_eq!(canon("-0.00001"), tuple(-1, 0, 4, 1));
        assert_eq!(canon("3.14"), canon("3.1400"));
        assert_eq!(canon("141.000001"), canon("141.0000010000"));
        assert_eq!(canon("0.001000"), tuple(1, 0, 2, 1));
        assert_eq!(canon("999999999.0"), tuple(1, 999_999_999, 0, 0));
    }

    #[test]
    fn reconstruct_examples() {
        let r = |t: &T| reconstruct(t, DEFAULT_MAX_RENDER_DIGITS).unwrap();
        assert_eq!(r(&tuple(1, 3, 2, 14159)), "3.0014159");
        assert_eq!(r(&tuple(-1, 0, 4, 1)), "-0.00001");
        assert_eq!(r(&tuple(1, 1000, 0, 0)), "1000");
        assert_eq!(r(&T::zero()), "0");
        assert_eq!(r(&tuple(-1, 2, 0, 0)), "-2");
        assert_eq!(r(&tuple(1, 0, 0, 10)), "0.10");
    }

    #[test]
    fn reconstruct_refuses_over_budget() {
        let t = tuple(-1, 12, 5, 34);
        assert_eq!(reconstruct(&t, 11).unwrap(), "-12.0000034");
        assert!(matches!(
            reconstruct(&t, 10),
            Err(Error::RenderBudgetExceeded { budget: 10, .. })
        ));
        let huge = CanonicalTuple::new(
            Sign::Positive,
            BigUint::from(1u32),
            "100000000000000000000000000000".parse().unwrap(),
            BigUint::from(1u32),
        )
        .unwrap();
        let err = reconstruct(&huge, DEFAULT_MAX_RENDER_DIGITS).unwrap_err();
        assert_eq!(
            err,
            Error::RenderBudgetExceeded {
                needed: "100000000000000000000000000003".into(),
                budget: DEFAULT_MAX_RENDER_DIGITS
            }
        );
        assert!(reconstruct(&tuple(1, 123, 0, 0), 2).is_err());
    }

    #[test]
    fn complexity_examples() {
        assert_eq!(complexity(&tuple(-1, 47, 8, 11)), BigUint::from(66u32));
        assert_eq!(complexity(&T::zero()), BigUint::from(0u32));
        assert_eq!(complexity(&tuple(1, 1, 0, 1)), BigUint::from(2u32));
    }

    #[test]
    fn tuple_invariants_enforced() {
        let one = || BigUint::from(1u32);
        let zero = || BigUint::from(0u32);
        assert!(CanonicalTuple::new(Sign::Positive, one(), one(), zero()).is_err());
        assert!(CanonicalTuple::new(Sign::Negative, zero(), zero(), zero()).is_err());
        assert!(CanonicalTuple::new(Sign::Negative, zero(), zero(), one()).is_ok());
        assert!(!tuple(1, 0, 0, 10).is_strict_canonical());
        assert!(tuple(1, 0, 0, 11).is_strict_canonical());
        assert!(tuple(1, 5, 0, 0).is_strict_canonical());
    }

    #[test]
    fn fixed_width_overflow_is_reported() {
        let d = parse_decimal("99999999999.5").unwrap();
        assert!(matches!(canonicalize::<u32>(&d), Err(Error::Overflow(_))));
        assert!(canonicalize::<u64>(&d).is_ok());
    }

    fn strict_tuple() -> impl Strategy<Value = T> {
        (any::<bool>(), 0u64..100_000, 0u64..40, 0u64..1_000_000).prop_filter_map(
            "strict-canonical",
            |(neg, n1, n2, n3)| {
                let n2 = if n3 == 0 { 0 } else { n2 };
                if n3 % 10 == 0 && n3 != 0 {
                    return None;
                }
                let sign = if neg && (n1 != 0 || n3 != 0) {
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                CanonicalTuple::new(sign, n1.into(), n2.into(), n3.into()).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn strict_tuples_round_trip_through_text(t in strict_tuple()) {
            let text = reconstruct(&t, DEFAULT_MAX_RENDER_DIGITS).unwrap();
            prop_assert_eq!(canon(&text), t);
        }

        #[test]
        fn text_round_trip_preserves_value(text in "[+-]?[0-9]{1,12}(\\.[0-9]{1,12})?([eE][+-]?[0-9]{1,2})?") {
            let parsed = parse_decimal(&text).unwrap();
            let t: T = canonicalize(&parsed).unwrap();
            let back = parse_decimal(&reconstruct(&t, DEFAULT_MAX_RENDER_DIGITS).unwrap()).unwrap();
            prop_assert!(back.same_value(&parsed));
            prop_assert!(t.is_strict_canonical());
            prop_assert!(!(t.n2() > &BigUint::from(0u32) && t.n3() == &BigUint::from(0u32)));
            if t.is_zero() {
                prop_assert_eq!(t.sign(), Sign::Positive);
            }
        }
    }
}
