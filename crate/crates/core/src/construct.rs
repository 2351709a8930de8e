//! Constructing N-sets with a prescribed integer difference set.
//!
//! [`chain_build`] lays `w` closed blocks `[b_k + λ_k, b_k + λ_{k+1}]` end to
//! end around the circle; the only pairs with equal fractional parts are the
//! shared breakpoints of consecutive blocks plus the wrap-around pair, so the
//! difference set is read off the shifts. [`theorem2_build`] chooses the
//! shifts from a representation of 1 so that the blocks realize the used
//! elements, then attaches one isolated point per unused element.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diffset::{integer_differences, PositiveIntegerSet};
use crate::error::{ChainViolation, Error, Result};
use crate::exact::{Interval, IntervalSet, Rational};
use crate::torus::is_nset;
use crate::weights::{represent_one_capped, ReprOfOne, Sign};

/// Shifts `b_0..b_{w-1}` and breakpoints `λ_0 < ... < λ_w = λ_0 + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainSpec {
    pub b: Vec<BigInt>,
    pub lambda: Vec<Rational>,
}

impl ChainSpec {
    pub fn new(b: Vec<BigInt>, lambda: Vec<Rational>) -> Result<Self> {
        let spec = ChainSpec { b, lambda };
        spec.validate()?;
        Ok(spec)
    }

    pub fn blocks(&self) -> usize {
        self.b.len()
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |v| Err(Error::InvalidChainSpec(v));
        let w = self.b.len();
        if w == 0 {
            return fail(ChainViolation::NoBlocks);
        }
        if self.lambda.len() != w + 1 {
            return fail(ChainViolation::LambdaLength {
                blocks: w,
                breakpoints: self.lambda.len(),
            });
        }
        if let Some(k) = (1..=w).find(|&k| self.lambda[k - 1] >= self.lambda[k]) {
            return fail(ChainViolation::NotIncreasing { k });
        }
        if self.lambda[w] != &self.lambda[0] + Rational::one() {
            return fail(ChainViolation::NotUnitPeriod);
        }
        if let Some(k) = (1..w).find(|&k| self.b[k - 1] == self.b[k]) {
            return fail(ChainViolation::RepeatedShift { k });
        }
        if &self.b[w - 1] + BigInt::one() == self.b[0] {
            return fail(ChainViolation::WrapCollision);
        }
        Ok(())
    }

    /// `{|b_k - b_{k-1}| : 1 <= k < w} ∪ {|1 + b_{w-1} - b_0|}`.
    pub fn predicted_differences(&self) -> PositiveIntegerSet {
        let w = self.b.len();
        let steps = self.b.windows(2).map(|p| (&p[1] - &p[0]).abs());
        let wrap = (&self.b[w - 1] + BigInt::one() - &self.b[0]).abs();
        PositiveIntegerSet::new(steps.chain(std::iter::once(wrap)))
            .expect("chain hypotheses make every difference nonzero")
    }
}

/// The union of blocks `[b_k + λ_k, b_k + λ_{k+1}]` and its predicted
/// difference set.
pub fn chain_build(spec: &ChainSpec) -> Result<(IntervalSet, PositiveIntegerSet)> {
    spec.validate()?;
    let blocks = spec
        .b
        .iter()
        .zip(spec.lambda.windows(2))
        .map(|(b, lam)| {
            let shift = Rational::from_integer(b.clone());
            Interval::new(&shift + &lam[0], &shift + &lam[1])
        })
        .collect::<Result<Vec<_>>>()?;
    let k = IntervalSet::from_intervals(blocks)?;
    Ok((k, spec.predicted_differences()))
}

/// Everything [`theorem2_build`] derived on the way to its set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub repr: ReprOfOne,
    /// `ã_1..ã_w`: `w_i` copies of `-ε_i a_i` per used element, ascending.
    pub a_tilde: Vec<BigInt>,
    /// Partial sums `b_0..b_w`; `b_0 = 0` and `b_w = -1`.
    pub b: Vec<BigInt>,
    /// `(a_{h+i} + i / (w (ℓ - h + 1)), a_{h+i})` for each unused element.
    pub attached_points: Vec<(Rational, BigInt)>,
}

impl ConstructionTrace {
    /// Number of blocks `w`.
    pub fn blocks(&self) -> usize {
        self.a_tilde.len()
    }
}

/// Build an N-set `K` with `(K - K) ∩ N = A` from a minimal-weight
/// representation of 1.
pub fn theorem2_build(set: &PositiveIntegerSet) -> Result<(IntervalSet, ConstructionTrace)> {
    theorem2_build_capped(set, None)
}

/// [`theorem2_build`] with a cap on the representation search.
pub fn theorem2_build_capped(
    set: &PositiveIntegerSet,
    max_weight: Option<u64>,
) -> Result<(IntervalSet, ConstructionTrace)> {
    let repr = represent_one_capped(set, max_weight)?;
    build_from_repr(set, repr)
}

/// Construct from a caller-supplied representation of 1 over `set`.
pub fn build_from_repr(
    set: &PositiveIntegerSet,
    repr: ReprOfOne,
) -> Result<(IntervalSet, ConstructionTrace)> {
    set.require_relatively_prime()?;
    let mut a_tilde = Vec::new();
    for t in repr.terms() {
        let step = match t.sign {
            Sign::Plus => -t.element.clone(),
            Sign::Minus => t.element.clone(),
        };
        a_tilde.extend(std::iter::repeat_n(step, t.multiplicity as usize));
    }
    let w = a_tilde.len();
    let mut b = Vec::with_capacity(w + 1);
    b.push(BigInt::zero());
    for step in &a_tilde {
        let next = b.last().unwrap() + step;
        b.push(next);
    }
    debug_assert_eq!(b[w], BigInt::from(-1));

    let w_big = BigInt::from(w);
    let lambda = (0..=w)
        .map(|k| Rational::new(BigInt::from(k), w_big.clone()))
        .collect();
    let spec = ChainSpec {
        b: b[..w].to_vec(),
        lambda,
    };
    let (chain, _) = chain_build(&spec)?;

    let unused = repr.unused();
    let denom = &w_big * BigInt::from(unused.len() + 1);
    let attached_points: Vec<(Rational, BigInt)> = unused
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let x = Rational::from_integer(a.clone()) + Rational::new(BigInt::from(i + 1), denom.clone());
            (x, a.clone())
        })
        .collect();
    let mut pieces = chain.intervals().to_vec();
    pieces.extend(attached_points.iter().map(|(x, _)| Interval::point(x.clone())));
    let k = IntervalSet::from_intervals(pieces)?;

    Ok((
        k,
        ConstructionTrace {
            repr,
            a_tilde,
            b,
            attached_points,
        },
    ))
}

/// `true` iff the constructed set is an N-set whose positive integer
/// differences are exactly `A`.
pub fn validate_roundtrip(set: &PositiveIntegerSet) -> Result<bool> {
    let (k, _) = theorem2_build(set)?;
    Ok(is_nset(&k) && &integer_differences(&k) == set)
}
