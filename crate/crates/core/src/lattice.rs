//! Finite unions of axis-aligned boxes in `R^n` and their lattice
//! difference sets `(K - K) ∩ Z^n`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{Interval, IntervalSet, Rational};
use crate::hnf::spans_full_lattice;
use crate::torus::is_nset_nd;

/// One axis-aligned closed box: a side interval per axis.
pub type Cuboid = Vec<Interval>;

/// Finite union of closed boxes of a common dimension. Canonical form drops
/// boxes contained in other boxes and sorts the rest.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxSet {
    dimension: usize,
    boxes: Vec<Cuboid>,
}

fn contains_box(outer: &Cuboid, inner: &Cuboid) -> bool {
    outer.iter().zip(inner).all(|(o, i)| o.contains_interval(i))
}

impl BoxSet {
    pub fn new(dimension: usize, boxes: Vec<Vec<(Rational, Rational)>>) -> Result<Self> {
        let boxes = boxes
            .into_iter()
            .map(|b| {
                if b.len() != dimension {
                    return Err(Error::DimensionMismatch {
                        expected: dimension,
                        found: b.len(),
                    });
                }
                b.into_iter().map(|(lo, hi)| Interval::new(lo, hi)).collect()
            })
            .collect::<Result<Vec<Cuboid>>>()?;
        Self::from_cuboids(dimension, boxes)
    }

    pub fn from_cuboids(dimension: usize, mut boxes: Vec<Cuboid>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidParams("dimension must be at least 1".into()));
        }
        if boxes.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(b) = boxes.iter().find(|b| b.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: b.len(),
            });
        }
        boxes.sort();
        boxes.dedup();
        let kept: Vec<Cuboid> = boxes
            .iter()
            .enumerate()
            .filter(|(i, b)| {
                !boxes
                    .iter()
                    .enumerate()
                    .any(|(j, o)| j != *i && contains_box(o, b))
            })
            .map(|(_, b)| b.clone())
            .collect();
        Ok(BoxSet {
            dimension,
            boxes: kept,
        })
    }

    /// The one-dimensional box set with the same components as `k`.
    pub fn from_interval_set(k: &IntervalSet) -> Self {
        BoxSet {
            dimension: 1,
            boxes: k.intervals().iter().map(|iv| vec![iv.clone()]).collect(),
        }
    }

    /// Cartesian product `a × b` of two one-dimensional sets.
    pub fn product(a: &IntervalSet, b: &IntervalSet) -> Self {
        let boxes = a
            .intervals()
            .iter()
            .flat_map(|x| b.intervals().iter().map(move |y| vec![x.clone(), y.clone()]))
            .collect();
        BoxSet::from_cuboids(2, boxes).expect("products of nonempty sets are nonempty")
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn boxes(&self) -> &[Cuboid] {
        &self.boxes
    }

    pub fn contains(&self, point: &[Rational]) -> bool {
        self.boxes
            .iter()
            .any(|b| b.iter().zip(point).all(|(side, x)| side.contains(x)))
    }

    pub fn to_pairs(&self) -> Vec<Vec<(Rational, Rational)>> {
        self.boxes
            .iter()
            .map(|b| b.iter().map(|s| (s.lo().clone(), s.hi().clone())).collect())
            .collect()
    }

    /// A rational `r` with `|x| < r` for every point `x`: the largest corner
    /// 1-norm plus one. The 1-norm dominates the Euclidean norm, and on a box
    /// the norm peaks at a corner.
    pub fn radius_bound(&self) -> Rational {
        self.boxes
            .iter()
            .map(|b| {
                b.iter()
                    .map(|s| s.lo().abs().max(s.hi().abs()))
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .max()
            .unwrap()
            + Rational::one()
    }

    /// Largest squared Euclidean norm of any point.
    pub fn max_norm_squared(&self) -> Rational {
        self.boxes
            .iter()
            .map(|b| {
                b.iter()
                    .map(|s| {
                        let m = s.lo().abs().max(s.hi().abs());
                        &m * &m
                    })
                    .fold(Rational::zero(), |acc, x| acc + x)
            })
            .max()
            .unwrap()
    }
}

impl fmt::Display for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.boxes.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            for (j, s) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, "×")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

/// Finite set of integer vectors, lexicographically sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeSet {
    dimension: usize,
    vectors: Vec<Vec<BigInt>>,
}

impl LatticeSet {
    pub fn new(dimension: usize, vectors: Vec<Vec<BigInt>>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::InvalidParams("dimension must be at least 1".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != dimension) {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                found: v.len(),
            });
        }
        let vectors: BTreeSet<Vec<BigInt>> = vectors.into_iter().collect();
        Ok(LatticeSet {
            dimension,
            vectors: vectors.into_iter().collect(),
        })
    }

    pub fn from_i64s(dimension: usize, vectors: &[&[i64]]) -> Result<Self> {
        Self::new(
            dimension,
            vectors
                .iter()
                .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.vectors.binary_search_by(|x| x.as_slice().cmp(v)).is_ok()
    }

    pub fn contains_zero(&self) -> bool {
        self.contains(&vec![BigInt::zero(); self.dimension])
    }

    /// `v ∈ S ⇔ -v ∈ S`.
    pub fn is_symmetric(&self) -> bool {
        self.vectors.iter().all(|v| {
            let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
            self.contains(&neg)
        })
    }

    /// For `n = 1`: the positive members as integers.
    pub fn positive_integers(&self) -> Vec<BigInt> {
        self.vectors
            .iter()
            .filter(|v| self.dimension == 1 && v[0].is_positive())
            .map(|v| v[0].clone())
            .collect()
    }
}

/// All `v ∈ Z^n` with `K ∩ (v + K)` nonempty.
pub fn box_differences(k: &BoxSet) -> LatticeSet {
    let mut found: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for p in k.boxes() {
        for q in k.boxes() {
            let axes: Vec<Vec<BigInt>> = p
                .iter()
                .zip(q)
                .map(|(ps, qs)| ps.difference_range(qs).integers().collect())
                .collect();
            if axes.iter().any(Vec::is_empty) {
                continue;
            }
            let mut idx = vec![0usize; axes.len()];
            'odometer: loop {
                found.insert(idx.iter().zip(&axes).map(|(&i, a)| a[i].clone()).collect());
                for axis in 0..axes.len() {
                    idx[axis] += 1;
                    if idx[axis] < axes[axis].len() {
                        continue 'odometer;
                    }
                    idx[axis] = 0;
                }
                break;
            }
        }
    }
    LatticeSet {
        dimension: k.dimension(),
        vectors: found.into_iter().collect(),
    }
}

/// `true` iff the vectors generate `Z^n` as a group.
pub fn generates(s: &LatticeSet) -> Result<bool> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(spans_full_lattice(s.vectors(), s.dimension()))
}

/// Every lattice vector `v` moving `K` onto itself has `|v| < 2r`, with `r`
/// from [`BoxSet::radius_bound`].
pub fn proper_bound_check(k: &BoxSet) -> bool {
    let r = k.radius_bound();
    bound_holds(k, &r)
}

/// [`proper_bound_check`] with a caller-chosen radius, which must strictly
/// bound the norm of every point of `K`.
pub fn proper_bound_check_with_radius(k: &BoxSet, r: &Rational) -> Result<bool> {
    if !r.is_positive() || k.max_norm_squared() >= r * r {
        return Err(Error::InvalidParams(format!("{r} does not bound the set strictly")));
    }
    Ok(bound_holds(k, r))
}

fn bound_holds(k: &BoxSet, r: &Rational) -> bool {
    let limit = Rational::from_integer(BigInt::from(4)) * r * r;
    box_differences(k).vectors().iter().all(|v| {
        let norm2: BigInt = v.iter().map(|x| x * x).sum();
        Rational::from_integer(norm2) < limit
    })
}

/// For an N-set `K`, whether `(K - K) ∩ Z^n` generates `Z^n`.
pub fn theorem4_check(k: &BoxSet) -> Result<bool> {
    if !is_nset_nd(k) {
        return Err(Error::NotAnNSet);
    }
    generates(&box_differences(k))
}
