//! How many tuples live at each complexity level, cumulative totals, and the
//! inverse lookup from an index to its level.
//!
//! Tuple mode counts every composition `n1 + n2 + n3 = K` with `n3 ≥ 1` or a
//! pure integer. Strict mode drops compositions whose `n3` is a positive
//! multiple of ten, since those render to the same value as a shorter tuple.
//! Both are closed forms; no routine here loops over levels.

use crate::error::{Error, Result};
use crate::natural::{lit, Natural};
use crate::roots::root_seed;

/// `C(K)`: 1 at level 0, `K(K+1) + 2` above.
pub fn level_count<N: Natural>(level: &N) -> N {
    if level.is_zero() {
        return N::one();
    }
    level.clone() * (level.clone() + N::one()) + lit(2)
}

/// Tuples with complexity strictly below `level`.
pub fn cumulative_before<N: Natural>(level: &N) -> N {
    if level.is_zero() {
        return N::zero();
    }
    let k = level.clone();
    let km1 = k.clone() - N::one();
    km1.clone() * k.clone() * (k + N::one()) / lit(3) + lit::<N>(2) * km1 + N::one()
}

/// Tuples with complexity at most `level`.
pub fn cumulative_upto<N: Natural>(level: &N) -> N {
    if level.is_zero() {
        return N::one();
    }
    let k = level.clone();
    k.clone() * (k.clone() + N::one()) * (k.clone() + lit(2)) / lit(3) + lit::<N>(2) * k + N::one()
}

fn check_index<N: Natural>(index: &N) -> Result<()> {
    if index.is_zero() {
        return Err(Error::IndexOutOfDomain(index.to_string()));
    }
    Ok(())
}

/// Finds `K` in `window` with `before(K) < index ≤ before(K + 1)`.
///
/// Every candidate's bound is evaluated, so the arithmetic performed does not
/// depend on which one matches.
fn pick_level<N: Natural>(index: &N, window: &[N], before: impl Fn(&N) -> N) -> Option<N> {
    let bounds: Vec<N> = window.iter().map(&before).collect();
    let mut found = None;
    for (i, k) in window.iter().enumerate() {
        let upper = match window.get(i + 1) {
            Some(next) if *next == k.clone() + N::one() => bounds[i + 1].clone(),
            _ => continue,
        };
        if found.is_none() && bounds[i] < *index && *index <= upper {
            found = Some(k.clone());
        }
    }
    found
}

/// Six consecutive candidates starting two below `seed`, saturating at zero.
fn window_around<N: Natural>(seed: &N) -> Vec<N> {
    let two: N = lit(2);
    let start = if *seed >= two { seed.clone() - two } else { N::zero() };
    let mut out = Vec::with_capacity(6);
    let mut k = start;
    for _ in 0..6 {
        out.push(k.clone());
        k = k + N::one();
    }
    out
}

/// Exponential then binary search for the level containing `index`. Only
/// reached if a seed lands outside its correction window.
fn search_level<N: Natural>(index: &N, before: impl Fn(&N) -> N) -> N {
    let mut hi = N::one();
    while before(&hi) < *index {
        hi = hi * lit(2);
    }
    // before(hi) ≥ index; the level is the largest K with before(K) < index.
    let mut lo = N::zero();
    while hi.clone() - lo.clone() > N::one() {
        let mid = (lo.clone() + hi.clone()) / lit(2);
        if before(&mid) < *index {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// The level `K` holding one-based `index`: `cumulative_before(K) < index ≤
/// cumulative_upto(K)`.
///
/// Seeds with `∛(3(index − 1))`, which is never below the true level and at
/// most one above it, then settles the answer with the defining inequality.
pub fn level_of_index<N: Natural>(index: &N) -> Result<N> {
    check_index(index)?;
    let seed = root_seed(&(lit::<N>(3) * (index.clone() - N::one())), 3);
    let window = window_around(&seed);
    Ok(pick_level(index, &window, cumulative_before)
        .unwrap_or_else(|| search_level(index, cumulative_before)))
}

/// `Σ_{m=1..x} ⌊m/10⌋`.
pub(crate) fn tenths_sum<N: Natural>(x: &N) -> N {
    let ten: N = lit(10);
    let q = x.clone() / ten.clone();
    let r = x.clone() % ten;
    if q.is_zero() {
        return N::zero();
    }
    lit::<N>(5) * q.clone() * (q.clone() - N::one()) + q * (r + N::one())
}

/// `Σ_{j=0..x} tenths_sum(j)`, grouped into full blocks of ten plus a tail.
pub(crate) fn tenths_sum_cumulative<N: Natural>(x: &N) -> N {
    let ten: N = lit(10);
    let q = x.clone() / ten.clone();
    let r = x.clone() % ten;
    if q.is_zero() {
        return N::zero();
    }
    let qm1 = q.clone() - N::one();
    // Block b (b < q) contributes 50b² + 5b.
    let squares = qm1.clone() * q.clone() * (lit::<N>(2) * q.clone() - N::one()) / lit(6);
    let linear = q.clone() * qm1.clone() / lit(2);
    let full = lit::<N>(50) * squares + lit::<N>(5) * linear;
    // Tail block q, offsets 0..=r: each term is 5q(q-1) + q(offset+1).
    let r1 = r + N::one();
    let tail = r1.clone() * lit(5) * q.clone() * qm1
        + q * r1.clone() * (r1 + N::one()) / lit(2);
    full + tail
}

/// Number of `(n2, n3)` slots with `n2 + n3 = r`, `1 ≤ r ≤ x`, and `n3` not a
/// multiple of ten. `H(x) = x(x+1)/2 − Σ⌊m/10⌋`.
pub(crate) fn strict_fraction_slots<N: Natural>(x: &N) -> N {
    x.clone() * (x.clone() + N::one()) / lit(2) - tenths_sum(x)
}

/// Strict-mode `C(K)`: 1 at level 0, else `2(1 + Σ_{m=1..K}(m − ⌊m/10⌋))`.
pub fn strict_level_count<N: Natural>(level: &N) -> N {
    if level.is_zero() {
        return N::one();
    }
    lit::<N>(2) * (strict_fraction_slots(level) + N::one())
}

/// Strict tuples with complexity strictly below `level`.
pub fn strict_cumulative_before<N: Natural>(level: &N) -> N {
    if level.is_zero() {
        return N::zero();
    }
    let km1 = level.clone() - N::one();
    cumulative_before(level) - lit::<N>(2) * tenths_sum_cumulative(&km1)
}

pub fn strict_cumulative_upto<N: Natural>(level: &N) -> N {
    strict_cumulative_before(level) + strict_level_count(level)
}

/// Strict-mode [`level_of_index`]. Strict totals grow like `0.3 K³`, so the
/// seed is `∛(10(index − 1)/3)`; the lower-order terms shift it by a bounded
/// amount that a short scan absorbs.
pub fn strict_level_of_index<N: Natural>(index: &N) -> Result<N> {
    check_index(index)?;
    let scaled = lit::<N>(10) * (index.clone() - N::one()) / lit(3);
    let mut k = root_seed(&scaled, 3);
    for _ in 0..16 {
        if strict_cumulative_before(&k) >= *index {
            k = k - N::one();
        } else if strict_cumulative_upto(&k) < *index {
            k = k + N::one();
        } else {
            return Ok(k);
        }
    }
    Ok(search_level(index, strict_cumulative_before))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    // Independent tallies: count compositions by nested loops.
    fn brute_level_count(k: u64, strict: bool) -> u64 {
        if k == 0 {
            return 1;
        }
        let mut count = 2; // (±K, 0, 0)
        for n1 in 0..k {
            for n2 in 0..(k - n1) {
                let n3 = k - n1 - n2;
                if strict && n3.is_multiple_of(10) {
                    continue;
                }
                count += 2;
            }
        }
        count
    }

    #[test]
    fn level_count_examples() {
        assert_eq!(level_count(&0u64), 1);
        assert_eq!(level_count(&2u64), 8);
        assert_eq!(level_count(&7u64), 58);
        let table: Vec<u64> = (1..=7u64).map(|k| level_count(&k)).collect();
        assert_eq!(table, [4, 8, 14, 22, 32, 44, 58]);
    }

    #[test]
    fn cumulative_examples() {
        assert_eq!(cumulative_before(&0u64), 0);
        assert_eq!(cumulative_before(&1u64), 1);
        assert_eq!(cumulative_before(&2u64), 5);
        assert_eq!(cumulative_before(&66u64), 95_941);
        assert_eq!(cumulative_upto(&0u64), 1);
        assert_eq!(cumulative_upto(&1u64), 5);
        assert_eq!(cumulative_upto(&7u64), 183);
    }

    #[test]
    fn counts_agree_with_brute_force() {
        let mut running = 0u64;
        let mut strict_running = 0u64;
        for k in 0..=40u64 {
            assert_eq!(level_count(&k), brute_level_count(k, false), "K={k}");
            assert_eq!(strict_level_count(&k), brute_level_count(k, true), "strict K={k}");
            assert_eq!(cumulative_before(&k), running);
            assert_eq!(strict_cumulative_before(&k), strict_running, "strict before K={k}");
            running += brute_level_count(k, false);
            strict_running += brute_level_count(k, true);
            assert_eq!(cumulative_upto(&k), running);
            assert_eq!(strict_cumulative_upto(&k), strict_running);
        }
    }

    #[test]
    fn tenths_sums_agree_with_loops() {
        let mut f = 0u64;
        let mut g = 0u64;
        for x in 0..500u64 {
            f += x / 10;
            g += f;
            assert_eq!(tenths_sum(&x), f, "x={x}");
            assert_eq!(tenths_sum_cumulative(&x), g, "x={x}");
        }
    }

    #[test]
    fn strict_examples() {
        assert_eq!(strict_level_count(&7u64), 58);
        assert_eq!(strict_level_count(&10u64), 110);
        assert_eq!(strict_level_count(&0u64), 1);
        assert_eq!(strict_cumulative_before(&10u64), cumulative_before(&10u64));
        assert_eq!(strict_cumulative_before(&0u64), 0);
        assert_eq!(strict_level_of_index(&1u64).unwrap(), 0);
    }

    #[test]
    fn level_of_index_examples() {
        assert_eq!(level_of_index(&1u64).unwrap(), 0);
        assert_eq!(level_of_index(&6u64).unwrap(), 2);
        assert_eq!(level_of_index(&10_000u64).unwrap(), 31);
        assert_eq!(level_of_index(&500_000u64).unwrap(), 114);
        assert!(matches!(level_of_index(&0u64), Err(Error::IndexOutOfDomain(_))));
        assert!(strict_level_of_index(&0u64).is_err());
    }

    #[test]
    fn level_boundaries_up_to_one_thousand() {
        for k in 0..=1000u64 {
            let first = cumulative_before(&k) + 1;
            let last = cumulative_upto(&k);
            assert_eq!(level_of_index(&first).unwrap(), k);
            assert_eq!(level_of_index(&last).unwrap(), k);
            let sfirst = strict_cumulative_before(&k) + 1;
            let slast = strict_cumulative_upto(&k);
            assert_eq!(strict_level_of_index(&sfirst).unwrap(), k);
            assert_eq!(strict_level_of_index(&slast).unwrap(), k);
        }
    }

    #[test]
    fn upto_minus_before_is_level_count() {
        for k in 0..=10_000u64 {
            let k = BigUint::from(k);
            assert_eq!(cumulative_upto(&k) - cumulative_before(&k), level_count(&k));
        }
    }

    #[test]
    fn growth_ratios() {
        for k in [100u64, 1_000, 10_000] {
            let kf = k as f64;
            let c = level_count(&k) as f64 / (kf * kf);
            assert!((c - 1.0).abs() < 2.0 / kf, "C(K)/K² at {k} = {c}");
            let cu = cumulative_upto(&k) as f64 / (kf * kf * kf / 3.0);
            assert!((cu - 1.0).abs() < 4.0 / kf, "cumulative/(K³/3) at {k} = {cu}");
        }
    }

    #[test]
    fn huge_levels_round_trip() {
        let k: BigUint = "123456789012345678901234567890".parse().unwrap();
        for idx in [cumulative_before(&k) + 1u32, cumulative_upto(&k)] {
            assert_eq!(level_of_index(&idx).unwrap(), k);
        }
        for idx in [strict_cumulative_before(&k) + 1u32, strict_cumulative_upto(&k)] {
            assert_eq!(strict_level_of_index(&idx).unwrap(), k);
        }
    }

    #[test]
    fn search_fallback_agrees() {
        for n in 1..2_000u64 {
            assert_eq!(search_level(&n, cumulative_before), level_of_index(&n).unwrap());
        }
    }
}
