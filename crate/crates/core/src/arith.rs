//! Exact integer helpers shared by the geometry modules.

use num_integer::Integer;

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

pub(crate) fn floor_div(a: i128, b: i128) -> i128 {
    Integer::div_floor(&a, &b)
}

pub(crate) fn ceil_div(a: i128, b: i128) -> i128 {
    -Integer::div_floor(&-a, &b)
}

/// Smallest `c >= 0` with `c * c >= n`.
pub(crate) fn isqrt_ceil(n: u64) -> u64 {
    let r = num_integer::Roots::sqrt(&n);
    if r * r == n {
        r
    } else {
        r + 1
    }
}

/// `(g, x, y)` with `a*x + b*y = g = gcd(a, b) >= 0`.
pub(crate) fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}
