//! Integer difference sets `(K - K) ∩ N` of interval sets, and the pairs of
//! points with equal fractional parts that realize them.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{IntervalSet, Rational};

/// A finite set of positive integers, strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PositiveIntegerSet {
    values: Vec<BigInt>,
}

impl PositiveIntegerSet {
    /// Sorts and deduplicates; every element must be at least 1.
    pub fn new(values: impl IntoIterator<Item = BigInt>) -> Result<Self> {
        let mut values: Vec<BigInt> = values.into_iter().collect();
        if let Some(bad) = values.iter().find(|v| !v.is_positive()) {
            return Err(Error::NonPositiveElement(bad.clone()));
        }
        values.sort();
        values.dedup();
        Ok(PositiveIntegerSet { values })
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        Self::new(values.iter().map(|&v| BigInt::from(v))).expect("u64 values must be nonzero")
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, v: &BigInt) -> bool {
        self.values.binary_search(v).is_ok()
    }

    /// Greatest common divisor of the elements; `0` for the empty set.
    pub fn gcd(&self) -> BigInt {
        self.values.iter().fold(BigInt::zero(), |g, v| g.gcd(v))
    }

    /// Nonempty with no common factor greater than 1.
    pub fn is_relatively_prime(&self) -> bool {
        !self.is_empty() && self.gcd().is_one()
    }

    /// Errors unless the set is nonempty and relatively prime.
    pub fn require_relatively_prime(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptySet)
        } else if !self.gcd().is_one() {
            Err(Error::NotRelativelyPrime)
        } else {
            Ok(())
        }
    }

    /// `true` iff the set is `{1, 2, ..., n}` for some `n >= 1`.
    pub fn is_initial_segment(&self) -> bool {
        !self.is_empty()
            && self
                .values
                .iter()
                .enumerate()
                .all(|(i, v)| *v == BigInt::from(i + 1))
    }
}

impl fmt::Display for PositiveIntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// All positive integers `a` with `K ∩ (a + K)` nonempty.
///
/// Each ordered pair of components `(I, J)` contributes the integers of the
/// range `[I.lo - J.hi, I.hi - J.lo]`.
pub fn integer_differences(k: &IntervalSet) -> PositiveIntegerSet {
    let mut found = BTreeSet::new();
    let one = Rational::one();
    for i in k.intervals() {
        for j in k.intervals() {
            let range = i.difference_range(j);
            if range.hi() < &one {
                continue;
            }
            found.extend(range.integers().filter(|a| a.is_positive()));
        }
    }
    PositiveIntegerSet {
        values: found.into_iter().collect(),
    }
}

/// `K ∩ (a + K)`: the upper points `x` of every pair `{x - a, x}` inside
/// `K`. `None` iff `a` is not a difference.
pub fn witnesses(k: &IntervalSet, a: &BigInt) -> Result<Option<IntervalSet>> {
    if a.is_negative() {
        return Err(Error::NegativeShift(a.clone()));
    }
    let shifted = k.translate(&Rational::from_integer(a.clone()));
    Ok(k.intersection(&shifted))
}

/// Number of two-element subsets `{x, y}` of a set with `(x) = (y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairCount {
    Finite(usize),
    Infinite,
}

impl fmt::Display for PairCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairCount::Finite(n) => write!(f, "{n}"),
            PairCount::Infinite => write!(f, "infinite"),
        }
    }
}

/// Count pairs of distinct points with equal fractional part. Two such
/// points differ by a nonzero integer, so this sums the witness counts over
/// all positive differences.
///
/// On `K(A3)` this reports 13: twelve pairs between consecutive blocks plus
/// the wrap-around pair `{0, 28}`.
pub fn matched_pair_count(k: &IntervalSet) -> PairCount {
    match matched_pairs(k) {
        Some(pairs) => PairCount::Finite(pairs.len()),
        None => PairCount::Infinite,
    }
}

/// Every pair `(x - a, x)` with `a >= 1` and both points in `K`, ordered by
/// `a` then `x`. `None` if there are infinitely many.
pub fn matched_pairs(k: &IntervalSet) -> Option<Vec<(Rational, Rational)>> {
    let mut out = Vec::new();
    for a in integer_differences(k).values() {
        let w = witnesses(k, a).expect("differences are positive")?;
        w.point_count()?;
        let shift = Rational::from_integer(a.clone());
        out.extend(w.intervals().iter().map(|iv| (iv.lo() - &shift, iv.lo().clone())));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{canonicalize, int, ratio};
    use crate::fixtures;

    fn ints(v: &[u64]) -> PositiveIntegerSet {
        PositiveIntegerSet::from_u64s(v)
    }

    #[test]
    fn new_sorts_and_rejects_nonpositive() {
        let s = PositiveIntegerSet::new([5, 2, 5].map(BigInt::from)).unwrap();
        assert_eq!(s, ints(&[2, 5]));
        assert_eq!(
            PositiveIntegerSet::new([BigInt::from(0)]),
            Err(Error::NonPositiveElement(BigInt::from(0)))
        );
    }

    #[test]
    fn fixture_differences() {
        assert_eq!(integer_differences(&fixtures::k_a1()), ints(&[2, 5]));
        assert_eq!(integer_differences(&fixtures::k_a2()), ints(&[6, 10, 15]));
        assert_eq!(integer_differences(&fixtures::k_a3()), ints(&[18, 28, 63]));
    }

    #[test]
    fn interval_differences() {
        let k = canonicalize(&[(int(0), int(4))]).unwrap();
        assert_eq!(integer_differences(&k), ints(&[1, 2, 3, 4]));
        let p = canonicalize(&[(int(3), int(3))]).unwrap();
        assert!(integer_differences(&p).is_empty());
    }

    #[test]
    fn two_halves() {
        // Cross ranges [3, 4] and [-4, -3], self ranges [-1/2, 1/2].
        let k = canonicalize(&[(int(0), ratio(1, 2)), (ratio(7, 2), int(4))]).unwrap();
        assert_eq!(integer_differences(&k), ints(&[3, 4]));
    }

    #[test]
    fn witness_points() {
        let k = fixtures::k_a1();
        let w2 = witnesses(&k, &BigInt::from(2)).unwrap().unwrap();
        assert_eq!(
            w2.to_pairs(),
            vec![(ratio(7, 3), ratio(7, 3)), (ratio(14, 3), ratio(14, 3))]
        );
        let w5 = witnesses(&k, &BigInt::from(5)).unwrap().unwrap();
        assert_eq!(w5.to_pairs(), vec![(int(5), int(5))]);
        assert_eq!(witnesses(&k, &BigInt::from(3)).unwrap(), None);
        assert_eq!(witnesses(&k, &BigInt::from(0)).unwrap(), Some(k.clone()));
        assert_eq!(
            witnesses(&k, &BigInt::from(-2)),
            Err(Error::NegativeShift(BigInt::from(-2)))
        );
    }

    #[test]
    fn pair_counts() {
        assert_eq!(matched_pair_count(&fixtures::k_a1()), PairCount::Finite(3));
        assert_eq!(matched_pair_count(&fixtures::k_a2()), PairCount::Finite(3));
        let long = canonicalize(&[(int(0), int(2))]).unwrap();
        assert_eq!(matched_pair_count(&long), PairCount::Infinite);
    }

    #[test]
    fn a1_pairs_listed() {
        let pairs = matched_pairs(&fixtures::k_a1()).unwrap();
        assert_eq!(
            pairs,
            vec![
                (ratio(1, 3), ratio(7, 3)),
                (ratio(8, 3), ratio(14, 3)),
                (int(0), int(5)),
            ]
        );
    }

    #[test]
    fn gcd_and_segments() {
        assert_eq!(ints(&[6, 10, 15]).gcd(), BigInt::from(1));
        assert_eq!(ints(&[4, 6]).gcd(), BigInt::from(2));
        assert!(ints(&[1, 2, 3]).is_initial_segment());
        assert!(!ints(&[1, 3]).is_initial_segment());
        assert_eq!(ints(&[]).require_relatively_prime(), Err(Error::EmptySet));
        assert_eq!(
            ints(&[4, 6]).require_relatively_prime(),
            Err(Error::NotRelativelyPrime)
        );
    }
}
