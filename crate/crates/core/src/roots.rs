//! Integer square and cube roots.
//!
//! [`root_seed`] is what the inverse-counting routines use: a floating seed
//! computed from the top 64 bits, refined by integer Newton steps only when
//! the radicand is too wide for `f64` to pin the answer. The result is within
//! one of the exact floor root, and callers finish with an exact inequality
//! check. [`iroot`] adds that final fix-up and returns the exact floor root.

use crate::natural::{lit, Natural};

fn pow<N: Natural>(x: &N, degree: u32) -> N {
    (1..degree).fold(x.clone(), |acc, _| acc * x.clone())
}

fn float_root(x: f64, degree: u32) -> f64 {
    match degree {
        2 => x.sqrt(),
        3 => x.cbrt(),
        d => x.powf(1.0 / f64::from(d)),
    }
}

/// Approximate `floor(radicand^(1/degree))`, off by at most one.
///
/// # Panics
///
/// If `degree` is zero.
pub fn root_seed<N: Natural>(radicand: &N, degree: u32) -> N {
    assert!(degree > 0, "root of degree zero");
    if degree == 1 || radicand.is_zero() {
        return radicand.clone();
    }
    let bits = radicand.bit_length();
    if bits <= 64 {
        let x = radicand.to_f64().expect("64-bit value converts to f64");
        return N::from_f64(float_root(x, degree).floor()).unwrap_or_else(N::zero);
    }

    let d = u64::from(degree);
    let shift = (bits - 64).div_ceil(d) * d;
    let shift = u32::try_from(shift).expect("radicand bit length fits in u32");
    let top = radicand.shr_bits(shift).to_f64().expect("64-bit value converts to f64");
    let top_root = N::from_f64(float_root(top, degree).floor()).unwrap_or_else(N::zero);

    // (floor(root(top)) + 3) << shift/d bounds the true root from above, so
    // the Newton sequence decreases monotonically onto the floor root.
    let mut x = (top_root + lit(3)).shl_bits(shift / degree);
    let degree_n: N = lit(degree);
    let below: N = lit(degree - 1);
    loop {
        let y = (below.clone() * x.clone() + radicand.clone() / pow(&x, degree - 1))
            / degree_n.clone();
        if y >= x {
            return x;
        }
        x = y;
    }
}

/// Exact `floor(radicand^(1/degree))`.
pub fn iroot<N: Natural>(radicand: &N, degree: u32) -> N {
    let mut x = root_seed(radicand, degree);
    while pow(&(x.clone() + N::one()), degree) <= *radicand {
        x = x + N::one();
    }
    while pow(&x, degree) > *radicand {
        x = x - N::one();
    }
    x
}

pub fn isqrt<N: Natural>(radicand: &N) -> N {
    iroot(radicand, 2)
}

pub fn icbrt<N: Natural>(radicand: &N) -> N {
    iroot(radicand, 3)
}
