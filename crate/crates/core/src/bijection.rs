//! The index maps between canonical tuples and the natural numbers.
//!
//! [`Mode::Tuple`] enumerates every composition tuple, including ones whose
//! `n3` ends in zero; those render to the same value as a shorter tuple, so
//! the map is a bijection on tuples but not on decimal values from level 10
//! upward. [`Mode::Strict`] skips them and is a bijection on values.

use std::fmt;

use crate::counting::{
    cumulative_before, level_of_index, strict_cumulative_before, strict_level_of_index,
};
use crate::decimal::{canonicalize, complexity, parse_decimal, reconstruct, CanonicalTuple};
use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::positioning::{
    position_within, strict_position_within, strict_tuple_at, tuple_at, LevelPosition,
};

/// Which enumeration to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Tuple,
    Strict,
}

/// A one-based position in the enumeration. Index 1 is zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index<N>(N);

impl<N: Natural> Index<N> {
    pub fn new(value: N) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::IndexOutOfDomain(value.to_string()));
        }
        Ok(Index(value))
    }

    pub fn first() -> Self {
        Index(N::one())
    }

    pub fn get(&self) -> &N {
        &self.0
    }

    pub fn into_inner(self) -> N {
        self.0
    }

    pub fn next(&self) -> Self {
        Index(self.0.clone() + N::one())
    }
}

impl<N: fmt::Display> fmt::Display for Index<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Tuple-mode index of a tuple: `cumulative_before(K) + position + 1`.
pub fn encode<N: Natural>(tuple: &CanonicalTuple<N>) -> Index<N> {
    if tuple.is_zero() {
        return Index::first();
    }
    let level = complexity(tuple);
    let position = position_within(&level, tuple).expect("level is the tuple's complexity");
    Index(cumulative_before(&level) + position + N::one())
}

/// Level and in-level rank for a tuple-mode index.
pub fn locate<N: Natural>(index: &Index<N>) -> LevelPosition<N> {
    let level = level_of_index(index.get()).expect("index is at least one");
    let position = index.get().clone() - N::one() - cumulative_before(&level);
    LevelPosition { level, position }
}

/// Tuple-mode tuple at `index`.
pub fn decode<N: Natural>(index: &Index<N>) -> CanonicalTuple<N> {
    if index.get().is_one() {
        return CanonicalTuple::zero();
    }
    let LevelPosition { level, position } = locate(index);
    tuple_at(&level, &position).expect("position lies inside its level")
}

/// Strict-mode index; fails for tuples whose `n3` ends in zero.
pub fn strict_encode<N: Natural>(tuple: &CanonicalTuple<N>) -> Result<Index<N>> {
    if tuple.is_zero() {
        return Ok(Index::first());
    }
    let level = complexity(tuple);
    let position = strict_position_within(&level, tuple)?;
    Ok(Index(strict_cumulative_before(&level) + position + N::one()))
}

pub fn strict_locate<N: Natural>(index: &Index<N>) -> LevelPosition<N> {
    let level = strict_level_of_index(index.get()).expect("index is at least one");
    let position = index.get().clone() - N::one() - strict_cumulative_before(&level);
    LevelPosition { level, position }
}

/// Strict-mode tuple at `index`; always strict-canonical.
pub fn strict_decode<N: Natural>(index: &Index<N>) -> CanonicalTuple<N> {
    if index.get().is_one() {
        return CanonicalTuple::zero();
    }
    let LevelPosition { level, position } = strict_locate(index);
    strict_tuple_at(&level, &position).expect("position lies inside its level")
}

impl Mode {
    pub fn encode<N: Natural>(self, tuple: &CanonicalTuple<N>) -> Result<Index<N>> {
        match self {
            Mode::Tuple => Ok(encode(tuple)),
            Mode::Strict => strict_encode(tuple),
        }
    }

    pub fn decode<N: Natural>(self, index: &Index<N>) -> CanonicalTuple<N> {
        match self {
            Mode::Tuple => decode(index),
            Mode::Strict => strict_decode(index),
        }
    }

    pub fn locate<N: Natural>(self, index: &Index<N>) -> LevelPosition<N> {
        match self {
            Mode::Tuple => locate(index),
            Mode::Strict => strict_locate(index),
        }
    }
}

/// Index of decimal text. Value-equal spellings share an index.
pub fn encode_text<N: Natural>(text: &str, mode: Mode) -> Result<Index<N>> {
    let tuple = canonicalize(&parse_decimal(text)?)?;
    mode.encode(&tuple)
}

/// Canonical decimal text at `index`.
pub fn decode_text<N: Natural>(index: &Index<N>, mode: Mode, max_render_digits: usize) -> Result<String> {
    reconstruct(&mode.decode(index), max_render_digits)
}

/// One enumerated entry. `text` is `None` when rendering would exceed the
/// render budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRecord<N> {
    pub index: Index<N>,
    pub tuple: CanonicalTuple<N>,
    pub text: Option<String>,
    pub strict_canonical: bool,
}

impl<N: Natural> EnumerationRecord<N> {
    pub fn new(index: Index<N>, tuple: CanonicalTuple<N>, max_render_digits: usize) -> Self {
        let text = reconstruct(&tuple, max_render_digits).ok();
        let strict_canonical = tuple.is_strict_canonical();
        EnumerationRecord {
            index,
            tuple,
            text,
            strict_canonical,
        }
    }
}

/// Lazy ascending walk over an inclusive index range. Each step decodes its
/// index directly, so memory does not depend on the range width.
#[derive(Clone, Debug)]
pub struct Enumerator<N> {
    next: Index<N>,
    last: Index<N>,
    mode: Mode,
    max_render_digits: usize,
    done: bool,
}

impl<N: Natural> Iterator for Enumerator<N> {
    type Item = EnumerationRecord<N>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let index = self.next.clone();
        if index == self.last {
            self.done = true;
        } else {
            self.next = index.next();
        }
        let tuple = self.mode.decode(&index);
        Some(EnumerationRecord::new(index, tuple, self.max_render_digits))
    }
}

/// Records for every index in `from..=to`.
pub fn enumerate<N: Natural>(
    from: Index<N>,
    to: Index<N>,
    mode: Mode,
    max_render_digits: usize,
) -> Result<Enumerator<N>> {
    if from > to {
        return Err(Error::EmptyRange {
            from: from.to_string(),
            to: to.to_string(),
        });
    }
    Ok(Enumerator {
        next: from,
        last: to,
        mode,
        max_render_digits,
        done: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decimal::{Sign, DEFAULT_MAX_RENDER_DIGITS};
    use num_bigint::BigUint;

    type T = CanonicalTuple<BigUint>;

    fn idx(v: u64) -> Index<BigUint> {
        Index::new(BigUint::from(v)).unwrap()
    }

    fn t(sign: i8, n1: u64, n2: u64, n3: u64) -> T {
        CanonicalTuple::new(Sign::from_i8(sign).unwrap(), n1.into(), n2.into(), n3.into()).unwrap()
    }

    fn enc(text: &str) -> BigUint {
        encode_text::<BigUint>(text, Mode::Tuple).unwrap().into_inner()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(encode(&T::zero()), idx(1));
        assert_eq!(enc("1.0002"), BigUint::from(100u32));
        assert_eq!(enc("-1.1"), BigUint::from(11u32));
        assert_eq!(enc("0"), BigUint::from(1u32));
        assert_eq!(enc("-0.0"), BigUint::from(1u32));
        assert_eq!(enc("-47.0000000011"), BigUint::from(100_001u32));
        assert_eq!(enc("3.14"), enc("3.1400"));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(decode(&idx(13)), t(-1, 2, 0, 0));
        assert_eq!(decode(&idx(10_000)), t(1, 0, 9, 22));
        assert_eq!(decode(&idx(1_000)), t(1, 2, 4, 8));
        assert_eq!(decode_text(&idx(12), Mode::Tuple, DEFAULT_MAX_RENDER_DIGITS).unwrap(), "2");
        assert_eq!(decode_text(&idx(100), Mode::Tuple, DEFAULT_MAX_RENDER_DIGITS).unwrap(), "1.0002");
    }

    #[test]
    fn index_domain() {
        assert!(matches!(Index::new(BigUint::from(0u32)), Err(Error::IndexOutOfDomain(_))));
    }

    #[test]
    fn strict_examples() {
        assert_eq!(strict_encode(&T::zero()).unwrap(), idx(1));
        assert!(matches!(strict_encode(&t(1, 0, 0, 10)), Err(Error::NotStrictCanonical { .. })));
        let first_of_ten = cumulative_before(&BigUint::from(10u32)) + 1u32;
        let first = Index::new(first_of_ten).unwrap();
        assert_eq!(decode(&first), t(1, 0, 0, 10));
        assert_eq!(strict_decode(&first), t(1, 0, 1, 9));
    }

    #[test]
    fn modes_coincide_through_level_nine() {
        let last = crate::counting::cumulative_upto(&9u64);
        for n in 1..=last {
            let i = Index::new(n).unwrap();
            assert_eq!(decode(&i), strict_decode(&i));
        }
    }

    #[test]
    fn tuple_round_trip_prefix() {
        for n in 1..=20_000u64 {
            let i = Index::new(n).unwrap();
            assert_eq!(encode(&decode(&i)), i);
            assert_eq!(strict_encode(&strict_decode(&i)).unwrap(), i);
        }
    }

    #[test]
    fn encode_is_monotone_in_complexity() {
        let mut prev_level = 0u64;
        let mut prev_max = 1u64;
        for n in 2..=5_000u64 {
            let tuple = decode(&Index::new(n).unwrap());
            let level = complexity(&tuple);
            if level > prev_level {
                assert!(n > prev_max);
                prev_level = level;
            }
            prev_max = prev_max.max(n);
        }
    }

    #[test]
    fn enumerate_prefix() {
        let records: Vec<_> = enumerate(idx(1), idx(13), Mode::Tuple, DEFAULT_MAX_RENDER_DIGITS)
            .unwrap()
            .collect();
        let texts: Vec<_> = records.iter().map(|r| r.text.clone().unwrap()).collect();
        assert_eq!(
            texts,
            ["0", "0.1", "-0.1", "1", "-1", "0.2", "-0.2", "0.01", "-0.01", "1.1", "-1.1", "2", "-2"]
        );
        assert!(records[5..].iter().all(|r| complexity(&r.tuple) == BigUint::from(2u32)));
        assert_eq!(
            enumerate(idx(1), idx(1), Mode::Tuple, 10).unwrap().count(),
            1
        );
        assert!(matches!(
            enumerate(idx(5), idx(4), Mode::Tuple, 10),
            Err(Error::EmptyRange { .. })
        ));
    }

    #[test]
    fn enumerator_marks_budget_overflow() {
        let rec = enumerate(idx(100), idx(100), Mode::Tuple, 3).unwrap().next().unwrap();
        assert_eq!(rec.text, None);
        assert_eq!(rec.tuple, t(1, 1, 3, 2));
    }
}
