//! Frozen values cross-checked against brute-force oracles that share no
//! code path with the library routines they check.

use nset_core::exact::{int, ratio};
use nset_core::*;
use num_traits::{Signed, ToPrimitive, Zero};

fn ints(v: &[u64]) -> PositiveIntegerSet {
    PositiveIntegerSet::from_u64s(v)
}

/// Every point of `k` on the grid `(1/den) Z`.
fn grid_points(k: &IntervalSet, den: i64) -> Vec<Rational> {
    let mut out = Vec::new();
    for iv in k.intervals() {
        let lo = (iv.lo() * Rational::from_integer(den.into())).ceil().to_integer();
        let hi = (iv.hi() * Rational::from_integer(den.into())).floor().to_integer();
        let (lo, hi) = (lo.to_i64().unwrap(), hi.to_i64().unwrap());
        out.extend((lo..=hi).map(|n| ratio(n, den)));
    }
    out
}

/// Pairs `{x, y}` of grid points of `k` with `x - y` a nonzero integer.
fn grid_pairs(k: &IntervalSet, den: i64) -> Vec<(Rational, Rational)> {
    let pts = grid_points(k, den);
    let mut out = Vec::new();
    for (i, x) in pts.iter().enumerate() {
        for y in &pts[..i] {
            let d = x - y;
            if d.is_integer() && !d.is_zero() {
                out.push((y.clone(), x.clone()));
            }
        }
    }
    out
}

#[test]
fn a3_structure() {
    let k = fixtures::k_a3();
    // 13 listed blocks, none merge.
    assert_eq!(k.components(), 13);
    let iv = k.intervals();
    assert!(iv.windows(2).all(|w| w[0].hi() < w[1].lo()));
    // The listed endpoints: the far left block is i = 9.
    assert_eq!(k.bounds(), (int(-162) + ratio(9, 13), int(28)));
}

#[test]
fn a3_pair_count_matches_grid_oracle() {
    let k = fixtures::k_a3();
    // Every endpoint lies on (1/13)Z; a continuum of pairs would also show
    // up at half-grid points, so counting on (1/26)Z is exact here.
    let pairs = grid_pairs(&k, 26);
    assert_eq!(pairs.len(), 13);
    assert_eq!(matched_pair_count(&k), PairCount::Finite(pairs.len()));

    let mut listed = matched_pairs(&k).unwrap();
    let mut oracle = pairs;
    listed.sort();
    oracle.sort();
    assert_eq!(listed, oracle);
}

#[test]
fn a1_a2_pairs_match_grid_oracle() {
    for k in [fixtures::k_a1(), fixtures::k_a2()] {
        assert_eq!(grid_pairs(&k, 6).len(), 3);
        assert_eq!(matched_pair_count(&k), PairCount::Finite(3));
    }
}

#[test]
fn witnessed_pairs_split_into_parts() {
    // Each witnessed pair has equal fractional parts and integer parts
    // differing by the shift.
    let k = fixtures::k_a3();
    for a in integer_differences(&k).values() {
        let w = witnesses(&k, a).unwrap().unwrap();
        for iv in w.intervals() {
            let x = iv.lo().clone();
            let y = &x - Rational::from_integer(a.clone());
            assert!(k.contains(&x) && k.contains(&y));
            assert_eq!(fractional_part(&x), fractional_part(&y));
            assert_eq!(integer_part(&x) - integer_part(&y), a.clone());
        }
    }
}

/// All coefficient vectors with `Σ max(|x_i|, 1) <= cap`, by enumerating the
/// whole box `[-cap, cap]^n`.
fn brute_force_min(set: &[i64], cap: i64) -> Option<(i64, Vec<i64>)> {
    let n = set.len();
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut x = vec![-cap; n];
    let key = |x: &[i64]| -> Vec<(i64, i64)> { x.iter().map(|&v| (v.abs(), v.signum())).collect() };
    loop {
        let weight: i64 = x.iter().map(|v| v.abs().max(1)).sum();
        let value: i64 = x.iter().zip(set).map(|(a, b)| a * b).sum();
        if weight <= cap && value == 1 {
            let better = match &best {
                None => true,
                Some((w, bx)) => weight < *w || (weight == *w && key(&x) < key(bx)),
            };
            if better {
                best = Some((weight, x.clone()));
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return best;
            }
            x[i] += 1;
            if x[i] <= cap {
                break;
            }
            x[i] = -cap;
            i += 1;
        }
    }
}

#[test]
fn representations_match_brute_force() {
    let cases: &[&[i64]] = &[
        &[1],
        &[2, 5],
        &[6, 10, 15],
        &[18, 28, 63],
        &[1, 2, 3],
        &[2, 4, 5],
        &[3, 7],
        &[4, 9, 11],
        &[5, 8, 12, 13],
        &[1, 2, 3, 4, 5],
    ];
    for set in cases {
        let (weight, x) = brute_force_min(set, 8).expect("weight <= 8 for these sets");
        let r = represent_one(&ints(&set.iter().map(|&v| v as u64).collect::<Vec<_>>())).unwrap();
        assert_eq!(r.weight() as i64, weight, "{set:?}");
        let got: Vec<i64> = r.coefficients().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(got, x, "{set:?}");
    }
}

#[test]
fn frozen_minimal_weights() {
    // The brute-force oracle above agrees: nothing lighter exists.
    assert_eq!(brute_force_min(&[2, 5], 2), None);
    assert_eq!(brute_force_min(&[6, 10, 15], 3).unwrap().1, vec![1, 1, -1]);
    assert_eq!(brute_force_min(&[18, 28, 63], 3), None);
    assert_eq!(brute_force_min(&[18, 28, 63], 4).unwrap().1, vec![2, 1, -1]);
    assert_eq!(add_weight(&ints(&[2, 5])).unwrap(), 3);
    assert_eq!(add_weight(&ints(&[6, 10, 15])).unwrap(), 3);
    assert_eq!(add_weight(&ints(&[18, 28, 63])).unwrap(), 4);
}

#[test]
fn single_interval_oracle_for_geo_one() {
    // [0, L] over L on a fine grid realizes exactly {1..⌊L⌋} once L >= 1.
    for num in 1..=40i64 {
        let k = canonicalize(&[(int(0), ratio(num, 4))]).unwrap();
        let d = integer_differences(&k);
        assert_eq!(is_nset(&k), num >= 4);
        assert!(d.is_empty() || geo_is_interval(&d));
    }
}

#[test]
fn rational_fixture_differences() {
    let k = canonicalize(&[(int(0), ratio(1, 2)), (ratio(7, 2), int(4))]).unwrap();
    let d: Vec<i64> = integer_differences(&k)
        .values()
        .iter()
        .map(|v| v.to_i64().unwrap())
        .collect();
    assert_eq!(d, vec![3, 4]);
    assert!(is_nset(&k));
    assert!(d.iter().all(|a| a.is_positive()));
}

#[test]
fn two_box_example_against_pointwise_oracle() {
    let k = BoxSet::new(
        2,
        vec![
            vec![(int(0), ratio(1, 2)), (int(0), int(1))],
            vec![(ratio(5, 2), int(3)), (int(2), int(3))],
        ],
    )
    .unwrap();
    let got = box_differences(&k);
    // Pointwise: v is a difference iff some half-grid point x has x and x - v in K.
    let mut oracle = Vec::new();
    for vx in -4i64..=4 {
        for vy in -4i64..=4 {
            let hit = (-2..=8).any(|i| {
                (-2..=8).any(|j| {
                    let x = [ratio(i, 2), ratio(j, 2)];
                    let y = [&x[0] - int(vx), &x[1] - int(vy)];
                    k.contains(&x) && k.contains(&y)
                })
            });
            if hit {
                oracle.push(vec![BigInt::from(vx), BigInt::from(vy)]);
            }
        }
    }
    assert_eq!(got.vectors(), oracle.as_slice());
    // (3, 2) row: x-ranges [2, 3] and y-ranges [1, 3].
    assert!(got.contains(&[BigInt::from(3), BigInt::from(3)]));
    assert!(got.contains(&[BigInt::from(-2), BigInt::from(-1)]));
    assert!(!got.contains(&[BigInt::from(1), BigInt::from(0)]));
}
