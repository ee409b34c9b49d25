//! Brute-force reference enumeration.
//!
//! Walks the ordering definition with nested loops over small machine
//! integers and converts each emitted tuple into the caller's natural type.
//! It deliberately shares no arithmetic with `counting` or `positioning`, so
//! agreement between the two is evidence rather than a tautology.

use std::iter;

use num_traits::ToPrimitive;

use crate::bijection::{Index, Mode};
use crate::decimal::{CanonicalTuple, Sign};
use crate::error::{Error, Result};
use crate::natural::Natural;

pub const DEFAULT_MAX_LEVEL: u64 = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_level: u64,
    pub mode: Mode,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_level: DEFAULT_MAX_LEVEL,
            mode: Mode::Tuple,
        }
    }
}

impl OracleConfig {
    pub fn new(max_level: u64, mode: Mode) -> Self {
        OracleConfig { max_level, mode }
    }
}

type Triple = (u64, u64, u64);

fn compositions(level: u64, mode: Mode) -> Box<dyn Iterator<Item = Triple>> {
    if level == 0 {
        return Box::new(iter::once((0, 0, 0)));
    }
    let fractional = (0..level).flat_map(move |n1| {
        (0..level - n1).filter_map(move |n2| {
            let n3 = level - n1 - n2;
            let skip = mode == Mode::Strict && n3.is_multiple_of(10);
            (!skip).then_some((n1, n2, n3))
        })
    });
    Box::new(fractional.chain(iter::once((level, 0, 0))))
}

fn signed(triple: Triple) -> impl Iterator<Item = (Sign, Triple)> {
    let zero = triple == (0, 0, 0);
    iter::once((Sign::Positive, triple)).chain((!zero).then_some((Sign::Negative, triple)))
}

/// Tuples of levels `0..=max_level` in enumeration order.
pub fn oracle_stream<N: Natural>(cfg: OracleConfig) -> impl Iterator<Item = CanonicalTuple<N>> {
    let mode = cfg.mode;
    (0..=cfg.max_level)
        .flat_map(move |level| compositions(level, mode))
        .flat_map(signed)
        .map(|(sign, (n1, n2, n3))| {
            let lift = |v: u64| N::from_u64(v).expect("oracle levels fit the natural type");
            CanonicalTuple::new(sign, lift(n1), lift(n2), lift(n3))
                .expect("oracle emits only valid tuples")
        })
}

/// One-based position of `tuple` in [`oracle_stream`], by linear scan.
pub fn oracle_index_of<N: Natural>(tuple: &CanonicalTuple<N>, cfg: OracleConfig) -> Result<Index<N>> {
    let components = [tuple.n1(), tuple.n2(), tuple.n3()].map(ToPrimitive::to_u64);
    let level = match components {
        [Some(a), Some(b), Some(c)] => a.checked_add(b).and_then(|s| s.checked_add(c)),
        _ => None,
    };
    let beyond = || Error::BeyondOracle {
        complexity: (tuple.n1().clone() + tuple.n2().clone() + tuple.n3().clone()).to_string(),
        max_level: cfg.max_level,
    };
    match level {
        Some(level) if level <= cfg.max_level => {}
        _ => return Err(beyond()),
    }
    let mut count: u64 = 0;
    for candidate in oracle_stream::<N>(cfg) {
        count += 1;
        if candidate == *tuple {
            let n = N::from_u64(count).ok_or_else(|| Error::Overflow(count.to_string()))?;
            return Index::new(n);
        }
    }
    Err(Error::NotStrictCanonical {
        tuple: tuple.to_string(),
    })
}
