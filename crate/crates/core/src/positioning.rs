//! Ranking and unranking inside one complexity level.
//!
//! Within level `K`, compositions are ordered lexicographically by `(n1, n2)`
//! with the pure integer `(K, 0, 0)` last, and each composition occupies two
//! consecutive slots: positive sign first, then negative. A composition's
//! slot pair starts at `2·base`, where `base` counts the compositions before
//! it:
//!
//! ```text
//! base(n1, n2) = Σ_{m<n1} (K − m) + n2 = n1·K − n1(n1 − 1)/2 + n2
//! base(K, 0)   = K(K + 1)/2
//! ```

use crate::counting::{level_count, strict_fraction_slots, strict_level_count};
use crate::decimal::{complexity, CanonicalTuple, Sign};
use crate::error::{Error, Result};
use crate::natural::{is_even, lit, Natural};
use crate::roots::root_seed;

/// A level and the zero-based rank inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelPosition<N> {
    pub level: N,
    pub position: N,
}

fn check_level<N: Natural>(level: &N, tuple: &CanonicalTuple<N>) -> Result<()> {
    let actual = complexity(tuple);
    if actual != *level {
        return Err(Error::LevelMismatch {
            tuple: tuple.to_string(),
            expected: level.to_string(),
            actual: actual.to_string(),
        });
    }
    Ok(())
}

fn sign_offset<N: Natural>(sign: Sign) -> N {
    match sign {
        Sign::Positive => N::zero(),
        Sign::Negative => N::one(),
    }
}

fn sign_of_position<N: Natural>(position: &N) -> Sign {
    if is_even(position) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Compositions with first component below `n1`: `n1(2K + 1 − n1)/2`.
fn slots_before<N: Natural>(level: &N, n1: &N) -> N {
    n1.clone() * (lit::<N>(2) * level.clone() + N::one() - n1.clone()) / lit(2)
}

fn fraction_total<N: Natural>(level: &N) -> N {
    level.clone() * (level.clone() + N::one()) / lit(2)
}

fn out_of_range<N: Natural>(level: &N, position: &N, size: &N) -> Error {
    Error::PositionOutOfRange {
        level: level.to_string(),
        position: position.to_string(),
        size: size.to_string(),
    }
}

/// Zero-based rank of `tuple` inside `level`.
pub fn position_within<N: Natural>(level: &N, tuple: &CanonicalTuple<N>) -> Result<N> {
    check_level(level, tuple)?;
    let base = if tuple.is_integer() {
        fraction_total(level)
    } else {
        slots_before(level, tuple.n1()) + tuple.n2().clone()
    };
    Ok(lit::<N>(2) * base + sign_offset(tuple.sign()))
}

/// Largest `n1` in `[0, level)` with `slots_before(n1) ≤ base`.
///
/// `slots_before(x) ≤ base` holds below the smaller root of
/// `x² − (2K+1)x + 2·base = 0`; the integer square root of the discriminant
/// seeds a fixed six-wide window that is then checked exactly.
fn first_component<N: Natural>(level: &N, base: &N) -> N {
    let width = lit::<N>(2) * level.clone() + N::one();
    let discriminant = width.clone() * width.clone() - lit::<N>(8) * base.clone();
    let root = root_seed(&discriminant, 2);
    let seed = if root < width {
        (width - root) / lit(2)
    } else {
        N::zero()
    };
    let two: N = lit(2);
    let mut candidate = if seed >= two { seed - two } else { N::zero() };
    let mut bounds = Vec::with_capacity(6);
    for _ in 0..6 {
        let c = if candidate > *level { level.clone() } else { candidate.clone() };
        bounds.push((c.clone(), slots_before(level, &c)));
        candidate = candidate + N::one();
    }
    let mut found = None;
    for pair in bounds.windows(2) {
        let ((c, t), (next, t_next)) = (&pair[0], &pair[1]);
        let consecutive = *next == c.clone() + N::one();
        if found.is_none() && consecutive && *t <= *base && *base < *t_next {
            found = Some(c.clone());
        }
    }
    found.unwrap_or_else(|| {
        // Binary search on the monotone prefix count; not expected to run.
        let (mut lo, mut hi) = (N::zero(), level.clone());
        while hi.clone() - lo.clone() > N::one() {
            let mid = (lo.clone() + hi.clone()) / lit(2);
            if slots_before(level, &mid) <= *base {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    })
}

/// The tuple at zero-based `position` inside `level`; inverse of
/// [`position_within`].
pub fn tuple_at<N: Natural>(level: &N, position: &N) -> Result<CanonicalTuple<N>> {
    let size = level_count(level);
    if *position >= size {
        return Err(out_of_range(level, position, &size));
    }
    if level.is_zero() {
        return Ok(CanonicalTuple::zero());
    }
    let sign = sign_of_position(position);
    let base = position.clone() / lit(2);
    if base == fraction_total(level) {
        return Ok(CanonicalTuple::from_parts(sign, level.clone(), N::zero(), N::zero()));
    }
    let n1 = first_component(level, &base);
    let n2 = base - slots_before(level, &n1);
    let n3 = level.clone() - n1.clone() - n2.clone();
    assert!(!n3.is_zero(), "fractional slot must leave n3 ≥ 1");
    Ok(CanonicalTuple::from_parts(sign, n1, n2, n3))
}

/// Strict compositions with first component below `n1`:
/// `H(K) − H(K − n1)`.
fn strict_slots_before<N: Natural>(level: &N, n1: &N) -> N {
    strict_fraction_slots(level) - strict_fraction_slots(&(level.clone() - n1.clone()))
}

/// Multiples of ten among `n3` values in `(remaining − n2, remaining]`.
fn skipped_below<N: Natural>(remaining: &N, n2: &N) -> N {
    let ten: N = lit(10);
    remaining.clone() / ten.clone() - (remaining.clone() - n2.clone()) / ten
}

/// Strict-mode [`position_within`]; rejects tuples whose `n3` ends in zero.
pub fn strict_position_within<N: Natural>(level: &N, tuple: &CanonicalTuple<N>) -> Result<N> {
    if !tuple.is_strict_canonical() {
        return Err(Error::NotStrictCanonical {
            tuple: tuple.to_string(),
        });
    }
    check_level(level, tuple)?;
    let base = if tuple.is_integer() {
        strict_fraction_slots(level)
    } else {
        let remaining = level.clone() - tuple.n1().clone();
        strict_slots_before(level, tuple.n1()) + tuple.n2().clone()
            - skipped_below(&remaining, tuple.n2())
    };
    Ok(lit::<N>(2) * base + sign_offset(tuple.sign()))
}

/// Strict-mode [`tuple_at`]; every result is strict-canonical.
pub fn strict_tuple_at<N: Natural>(level: &N, position: &N) -> Result<CanonicalTuple<N>> {
    let size = strict_level_count(level);
    if *position >= size {
        return Err(out_of_range(level, position, &size));
    }
    if level.is_zero() {
        return Ok(CanonicalTuple::zero());
    }
    let sign = sign_of_position(position);
    let base = position.clone() / lit(2);
    let total = strict_fraction_slots(level);
    if base == total {
        return Ok(CanonicalTuple::from_parts(sign, level.clone(), N::zero(), N::zero()));
    }

    // Smallest remainder r = K − n1 with H(r) ≥ H(K) − base. H(r) ≈ 0.45 r².
    let target = total - base.clone();
    let mut remaining = root_seed(&(lit::<N>(20) * target.clone() / lit(9)), 2);
    if remaining.is_zero() {
        remaining = N::one();
    }
    if remaining > *level {
        remaining = level.clone();
    }
    while remaining > N::one() && strict_fraction_slots(&(remaining.clone() - N::one())) >= target {
        remaining = remaining - N::one();
    }
    while strict_fraction_slots(&remaining) < target {
        remaining = remaining + N::one();
    }

    let n1 = level.clone() - remaining.clone();
    let offset = base - strict_slots_before(level, &n1);
    // Valid n3 values descend from `remaining`, skipping multiples of ten.
    // The j-th valid value in ascending order is j + ⌊(j − 1)/9⌋.
    let valid = remaining.clone() - remaining.clone() / lit(10);
    let rank = valid - offset;
    let n3 = rank.clone() + (rank - N::one()) / lit(9);
    let n2 = remaining - n3.clone();
    Ok(CanonicalTuple::from_parts(sign, n1, n2, n3))
}
