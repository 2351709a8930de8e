//! Seeded randomized property suites, shared by `nset selftest` and the
//! acceptance tests.

use nset_core::exact::ratio;
use nset_core::{
    add_weight, canonicalize, geo_search, geo_upper, integer_differences, is_nset, is_nset_nd,
    proper_bound_check, theorem4_check, validate_roundtrip, BoxSet, IntervalSet,
    PositiveIntegerSet,
};
use num_traits::One;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub samples: usize,
    pub passed: usize,
}

impl SuiteResult {
    pub fn ok(&self) -> bool {
        self.passed == self.samples
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform nonempty subset of `[1, max]` with at most `max_len` elements,
/// redrawn until relatively prime.
pub fn random_coprime_set(rng: &mut impl Rng, max: u64, max_len: usize) -> PositiveIntegerSet {
    loop {
        let len = rng.gen_range(1..=max_len);
        let values: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=max)).collect();
        let set = PositiveIntegerSet::from_u64s(&values);
        if set.is_relatively_prime() {
            return set;
        }
    }
}

/// `⋃_j [s_j + j/D, s_j + (j+1)/D]` with random `D <= max_grid` and shifts
/// in `[-max_shift, max_shift]`; always an N-set.
pub fn random_tiling_1d(rng: &mut impl Rng, max_grid: i64, max_shift: i64) -> IntervalSet {
    let d = rng.gen_range(1..=max_grid);
    let pairs: Vec<_> = (0..d)
        .map(|j| {
            let s = rng.gen_range(-max_shift..=max_shift);
            (ratio(s * d + j, d), ratio(s * d + j + 1, d))
        })
        .collect();
    canonicalize(&pairs).unwrap()
}

/// Planar analogue of [`random_tiling_1d`]: one shifted copy of every cell
/// of the `D × D` grid, plus up to two extra shifted cells.
pub fn random_tiling_2d(rng: &mut impl Rng, max_grid: i64, max_shift: i64) -> BoxSet {
    let d = rng.gen_range(1..=max_grid);
    let cell = |rng: &mut dyn rand::RngCore, i: i64, j: i64| {
        let sx = rng.gen_range(-max_shift..=max_shift);
        let sy = rng.gen_range(-max_shift..=max_shift);
        vec![
            (ratio(sx * d + i, d), ratio(sx * d + i + 1, d)),
            (ratio(sy * d + j, d), ratio(sy * d + j + 1, d)),
        ]
    };
    let mut boxes = Vec::new();
    for j in 0..d {
        for i in 0..d {
            boxes.push(cell(rng, i, j));
        }
    }
    for _ in 0..rng.gen_range(0..=2) {
        let (i, j) = (rng.gen_range(0..d), rng.gen_range(0..d));
        boxes.push(cell(rng, i, j));
    }
    BoxSet::new(2, boxes).unwrap()
}

/// Construction round trip on random relatively prime subsets of `[1, 50]`
/// with at most four elements.
pub fn roundtrip(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = rng(seed);
    let passed = (0..samples)
        .filter(|_| {
            let set = random_coprime_set(&mut rng, 50, 4);
            validate_roundtrip(&set) == Ok(true)
        })
        .count();
    SuiteResult {
        name: "roundtrip",
        samples,
        passed,
    }
}

/// Random one-dimensional N-sets have nonempty, relatively prime integer
/// difference sets.
pub fn forward_1d(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = rng(seed);
    let passed = (0..samples)
        .filter(|_| {
            let k = random_tiling_1d(&mut rng, 6, 10);
            let d = integer_differences(&k);
            is_nset(&k) && !d.is_empty() && d.gcd().is_one()
        })
        .count();
    SuiteResult {
        name: "forward-1d",
        samples,
        passed,
    }
}

/// Search parameters for the geometric-weight comparison: one and two
/// components on a half-integer grid.
pub const GEO_BOUND_SEARCH: (usize, u64, u64) = (2, 2, 3);

/// `geo_upper = add_weight`, and any grid-search hit is no larger.
pub fn geo_bound(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = rng(seed);
    let (m, d, b) = GEO_BOUND_SEARCH;
    let passed = (0..samples)
        .filter(|_| {
            let set = random_coprime_set(&mut rng, 50, 4);
            let (Ok(upper), Ok(add)) = (geo_upper(&set), add_weight(&set)) else {
                return false;
            };
            let search = match geo_search(&set, m, d, b) {
                Ok(hit) => hit.map(|h| h.components),
                Err(_) => return false,
            };
            upper as u64 == add && search.is_none_or(|c| c <= upper)
        })
        .count();
    SuiteResult {
        name: "geo-bound",
        samples,
        passed,
    }
}

/// Random planar N-sets: generation of `Z^2` and the `|v| < 2r` bound.
pub fn forward_2d(seed: u64, samples: usize) -> SuiteResult {
    let mut rng = rng(seed);
    let passed = (0..samples)
        .filter(|_| {
            let k = random_tiling_2d(&mut rng, 3, 4);
            is_nset_nd(&k) && theorem4_check(&k) == Ok(true) && proper_bound_check(&k)
        })
        .count();
    SuiteResult {
        name: "forward-2d",
        samples,
        passed,
    }
}

pub fn run_all(seed: u64, samples: usize) -> Vec<SuiteResult> {
    vec![
        roundtrip(seed, samples),
        forward_1d(seed, samples),
        geo_bound(seed, samples),
        forward_2d(seed, samples),
    ]
}
