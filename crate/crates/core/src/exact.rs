//! Exact rational scalars and canonical finite unions of closed intervals.
//!
//! An [`IntervalSet`] is the model of a compact subset of the real line used
//! throughout the crate: finitely many closed intervals with rational
//! endpoints, sorted, pairwise separated by gaps of positive length.
//! Degenerate intervals `[x, x]` are isolated points.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// `n / d` as a [`Rational`]. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Integer part `[x]`, the largest integer not exceeding `x`.
pub fn integer_part(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Fractional part `(x) = x - [x]`, in `[0, 1)`.
pub fn fractional_part(x: &Rational) -> Rational {
    x - Rational::from_integer(integer_part(x))
}

/// Smallest integer not below `x`.
pub fn ceil_int(x: &Rational) -> BigInt {
    x.numer().div_ceil(x.denom())
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::ReversedEndpoints { lo: Box::new(lo), hi: Box::new(hi) });
        }
        Ok(Interval { lo, hi })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn translate(&self, by: &Rational) -> Interval {
        Interval {
            lo: &self.lo + by,
            hi: &self.hi + by,
        }
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// The interval `{x - y : x in self, y in other}`.
    pub fn difference_range(&self, other: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
        }
    }

    /// Integers contained in the interval, ascending.
    pub fn integers(&self) -> impl Iterator<Item = BigInt> {
        let mut next = ceil_int(&self.lo);
        let last = integer_part(&self.hi);
        std::iter::from_fn(move || {
            if next > last {
                return None;
            }
            let out = next.clone();
            next += 1;
            Some(out)
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Canonical finite union of closed intervals: sorted by `lo`, with a
/// strictly positive gap between consecutive members. Never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

/// Sort and merge; touching or overlapping intervals become one.
fn merge(mut raw: Vec<Interval>) -> Vec<Interval> {
    raw.sort();
    let mut out: Vec<Interval> = Vec::with_capacity(raw.len());
    for iv in raw {
        match out.last_mut() {
            Some(last) if iv.lo <= last.hi => {
                if iv.hi > last.hi {
                    last.hi = iv.hi;
                }
            }
            _ => out.push(iv),
        }
    }
    out
}

/// Build the canonical set covering exactly the union of the given
/// `(lo, hi)` pairs.
pub fn canonicalize(raw: &[(Rational, Rational)]) -> Result<IntervalSet> {
    let intervals = raw
        .iter()
        .map(|(lo, hi)| Interval::new(lo.clone(), hi.clone()))
        .collect::<Result<Vec<_>>>()?;
    IntervalSet::from_intervals(intervals)
}

impl IntervalSet {
    pub fn from_intervals(intervals: Vec<Interval>) -> Result<Self> {
        if intervals.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(IntervalSet {
            intervals: merge(intervals),
        })
    }

    /// Like [`IntervalSet::from_intervals`] but maps an empty list to `None`.
    pub fn try_from_intervals(intervals: Vec<Interval>) -> Option<Self> {
        Self::from_intervals(intervals).ok()
    }

    pub fn single(lo: Rational, hi: Rational) -> Result<Self> {
        Ok(IntervalSet {
            intervals: vec![Interval::new(lo, hi)?],
        })
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Number of connected components; intervals and isolated points each
    /// count once.
    pub fn components(&self) -> usize {
        self.intervals.len()
    }

    /// `(min lo, max hi)`.
    pub fn bounds(&self) -> (Rational, Rational) {
        let first = &self.intervals[0];
        let last = &self.intervals[self.intervals.len() - 1];
        (first.lo.clone(), last.hi.clone())
    }

    pub fn contains(&self, x: &Rational) -> bool {
        // Sorted and disjoint: the candidate is the last interval with lo <= x.
        let idx = self.intervals.partition_point(|iv| &iv.lo <= x);
        idx > 0 && self.intervals[idx - 1].contains(x)
    }

    pub fn translate(&self, by: &Rational) -> IntervalSet {
        IntervalSet {
            intervals: self.intervals.iter().map(|iv| iv.translate(by)).collect(),
        }
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        let all = self
            .intervals
            .iter()
            .chain(other.intervals.iter())
            .cloned()
            .collect();
        IntervalSet { intervals: merge(all) }
    }

    /// `self ∩ other`, or `None` when the two are disjoint.
    pub fn intersection(&self, other: &IntervalSet) -> Option<IntervalSet> {
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < self.intervals.len() && j < other.intervals.len() {
            let a = &self.intervals[i];
            let b = &other.intervals[j];
            if let Some(piece) = a.intersect(b) {
                out.push(piece);
            }
            if a.hi < b.hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        // Pieces of two canonical sets are already sorted and separated.
        (!out.is_empty()).then_some(IntervalSet { intervals: out })
    }

    /// Sum of component lengths.
    pub fn total_length(&self) -> Rational {
        self.intervals
            .iter()
            .fold(Rational::zero(), |acc, iv| acc + iv.length())
    }

    /// Number of points, or `None` when some component has positive length.
    pub fn point_count(&self) -> Option<usize> {
        self.intervals
            .iter()
            .all(Interval::is_point)
            .then_some(self.intervals.len())
    }

    /// Raw endpoint pairs, in canonical order.
    pub fn to_pairs(&self) -> Vec<(Rational, Rational)> {
        self.intervals
            .iter()
            .map(|iv| (iv.lo.clone(), iv.hi.clone()))
            .collect()
    }

    /// Largest absolute value of any point of the set.
    pub fn max_abs(&self) -> Rational {
        let (lo, hi) = self.bounds();
        lo.abs().max(hi.abs())
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

/// `true` iff `x` is an integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}
