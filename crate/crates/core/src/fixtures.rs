//! The three worked example sets on the real line: `K(A1)` realizing
//! `{2, 5}`, `K(A2)` realizing `{6, 10, 15}` and `K(A3)` realizing
//! `{18, 28, 63}`.

use crate::exact::{canonicalize, int, ratio, IntervalSet, Rational};

fn shifted(b: i64, lo: Rational, hi: Rational) -> (Rational, Rational) {
    (int(b) + lo, int(b) + hi)
}

/// `[0, 1/3] ∪ [2 + 1/3, 2 + 2/3] ∪ [4 + 2/3, 5]`.
pub fn k_a1() -> IntervalSet {
    canonicalize(&[
        shifted(0, int(0), ratio(1, 3)),
        shifted(2, ratio(1, 3), ratio(2, 3)),
        shifted(4, ratio(2, 3), int(1)),
    ])
    .unwrap()
}

/// `[0, 1/3] ∪ [15 + 1/3, 15 + 2/3] ∪ [9 + 2/3, 10]`.
pub fn k_a2() -> IntervalSet {
    canonicalize(&[
        shifted(0, int(0), ratio(1, 3)),
        shifted(15, ratio(1, 3), ratio(2, 3)),
        shifted(9, ratio(2, 3), int(1)),
    ])
    .unwrap()
}

/// Ten blocks `[-18i + i/13, -18i + (i+1)/13]` for `i = 0..9`, followed by
/// `[-99 + 10/13, -99 + 11/13]`, `[-36 + 11/13, -36 + 12/13]` and
/// `[27 + 12/13, 28]`.
pub fn k_a3() -> IntervalSet {
    let mut raw: Vec<(Rational, Rational)> = (0..10)
        .map(|i| shifted(-18 * i, ratio(i, 13), ratio(i + 1, 13)))
        .collect();
    raw.push(shifted(-99, ratio(10, 13), ratio(11, 13)));
    raw.push(shifted(-36, ratio(11, 13), ratio(12, 13)));
    raw.push(shifted(27, ratio(12, 13), int(1)));
    canonicalize(&raw).unwrap()
}
