//! Additive weight of a relatively prime set, and bounds on its geometric
//! weight.
//!
//! A representation of 1 by elements of `A` is an integer vector `x` with
//! `Σ x_i a_i = 1`. Its weight is `Σ_{x_i ≠ 0} |x_i| + #{i : x_i = 0}`, which
//! is the same as `Σ max(|x_i|, 1)`. The additive weight `Add(A)` is the
//! least weight of any representation.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::construct::theorem2_build;
use crate::diffset::{integer_differences, PositiveIntegerSet};
use crate::error::{Error, Result};
use crate::exact::{IntervalSet, Rational};
use crate::torus::is_nset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

/// One summand `sign * multiplicity * element` of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub element: BigInt,
    pub sign: Sign,
    pub multiplicity: u64,
}

impl Term {
    pub fn coefficient(&self) -> BigInt {
        BigInt::from(self.sign.as_i64()) * BigInt::from(self.multiplicity)
    }
}

/// `Σ ε_i w_i a_i = 1` over distinct used elements, plus the elements of
/// `A` that do not appear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReprOfOne {
    terms: Vec<Term>,
    unused: Vec<BigInt>,
    weight: u64,
}

impl ReprOfOne {
    /// Builds a representation from a coefficient vector aligned with the
    /// ascending elements of `set`. Fails unless the combination equals 1.
    pub fn from_coefficients(set: &PositiveIntegerSet, coefficients: &[BigInt]) -> Result<Self> {
        if coefficients.len() != set.len() {
            return Err(Error::DimensionMismatch {
                expected: set.len(),
                found: coefficients.len(),
            });
        }
        let mut terms = Vec::new();
        let mut unused = Vec::new();
        let mut weight = 0u64;
        let mut total = BigInt::zero();
        for (a, x) in set.values().iter().zip(coefficients) {
            total += a * x;
            if x.is_zero() {
                unused.push(a.clone());
                weight += 1;
            } else {
                let multiplicity = x
                    .abs()
                    .to_u64()
                    .ok_or_else(|| Error::InvalidParams(format!("coefficient {x} too large")))?;
                weight += multiplicity;
                terms.push(Term {
                    element: a.clone(),
                    sign: if x.is_negative() { Sign::Minus } else { Sign::Plus },
                    multiplicity,
                });
            }
        }
        if !total.is_one() {
            return Err(Error::InvalidParams(format!(
                "coefficients combine to {total}, not 1"
            )));
        }
        Ok(ReprOfOne {
            terms,
            unused,
            weight,
        })
    }

    /// Used elements in ascending order. `h` is `terms().len()`.
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn unused(&self) -> &[BigInt] {
        &self.unused
    }

    /// `Σ w_i + (ℓ - h)`.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Recomputes `Σ ε_i w_i a_i`.
    pub fn value(&self) -> BigInt {
        self.terms
            .iter()
            .map(|t| t.coefficient() * &t.element)
            .sum()
    }

    /// The coefficient vector aligned with the ascending elements of the
    /// represented set.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut all: Vec<(BigInt, BigInt)> = self
            .terms
            .iter()
            .map(|t| (t.element.clone(), t.coefficient()))
            .chain(self.unused.iter().map(|a| (a.clone(), BigInt::zero())))
            .collect();
        all.sort();
        all.into_iter().map(|(_, x)| x).collect()
    }

    /// Human-readable identity such as `2·18+28−63=1`.
    pub fn certificate(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            match (i, t.sign) {
                (_, Sign::Minus) => out.push('−'),
                (0, Sign::Plus) => {}
                (_, Sign::Plus) => out.push('+'),
            }
            if t.multiplicity != 1 {
                out.push_str(&format!("{}·", t.multiplicity));
            }
            out.push_str(&t.element.to_string());
        }
        out.push_str("=1");
        out
    }
}

impl fmt::Display for ReprOfOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (weight {})", self.certificate(), self.weight)
    }
}

/// Minimal-weight representation of 1. Among minimal representations the
/// one with lexicographically least `(|x_1|, sign x_1, |x_2|, ...)` over the
/// ascending elements is returned, negative signs ordering first.
pub fn represent_one(set: &PositiveIntegerSet) -> Result<ReprOfOne> {
    represent_one_capped(set, None)
}

/// [`represent_one`] that gives up once the weight would exceed `max_weight`.
pub fn represent_one_capped(set: &PositiveIntegerSet, max_weight: Option<u64>) -> Result<ReprOfOne> {
    set.require_relatively_prime()?;
    let small = set.values().iter().all(|a| a.bits() < 48) && set.len() < 64;
    let coefficients: Vec<BigInt> = if small {
        let elems: Vec<i128> = set.values().iter().map(|a| a.to_i128().unwrap()).collect();
        deepen(&elems, max_weight)?
            .into_iter()
            .map(BigInt::from)
            .collect()
    } else {
        deepen(set.values(), max_weight)?
    };
    ReprOfOne::from_coefficients(set, &coefficients)
}

trait Scalar: Integer + Signed + Clone + FromPrimitive {}
impl<T: Integer + Signed + Clone + FromPrimitive> Scalar for T {}

fn from_u64<T: Scalar>(v: u64) -> T {
    T::from_u64(v).expect("weights fit the scalar type")
}

/// Iterative deepening on the total weight, starting at `|A|`.
fn deepen<T: Scalar>(elems: &[T], max_weight: Option<u64>) -> Result<Vec<T>> {
    let n = elems.len() as u64;
    // suffix_max[i] = max(elems[i..])
    let mut suffix_max = vec![T::zero(); elems.len() + 1];
    for i in (0..elems.len()).rev() {
        suffix_max[i] = elems[i].clone().max(suffix_max[i + 1].clone());
    }
    let mut weight = n;
    loop {
        if let Some(cap) = max_weight {
            if weight > cap {
                return Err(Error::WeightCapExceeded(cap));
            }
        }
        let mut x = Vec::with_capacity(elems.len());
        if exact_weight(elems, &suffix_max, 0, weight, T::one(), &mut x) {
            return Ok(x);
        }
        weight += 1;
    }
}

/// Depth-first search, in tie-break order, for coefficients `x[i..]` with
/// `Σ max(|x_j|, 1) = budget` and `Σ x_j a_j = residual`.
fn exact_weight<T: Scalar>(
    elems: &[T],
    suffix_max: &[T],
    i: usize,
    budget: u64,
    residual: T,
    x: &mut Vec<T>,
) -> bool {
    let rest = (elems.len() - i - 1) as u64;
    if rest == 0 {
        // Last coefficient is forced.
        let a = &elems[i];
        if residual.is_zero() {
            if budget == 1 {
                x.push(T::zero());
                return true;
            }
            return false;
        }
        let (q, r) = residual.div_rem(a);
        if r.is_zero() && q.abs() == from_u64::<T>(budget) {
            x.push(q);
            return true;
        }
        return false;
    }
    let a = &elems[i];
    let rest_max = &suffix_max[i + 1];
    for abs in 0..=(budget - rest) {
        let cost = abs.max(1);
        let rest_budget = budget - cost;
        if rest_budget < rest {
            break;
        }
        let step: T = from_u64::<T>(abs) * a.clone();
        // |residual - ±step| >= step - |residual| grows with abs; once the
        // remaining elements cannot absorb it, no larger abs can either.
        let reach = from_u64::<T>(rest_budget) * rest_max.clone();
        if step.clone() - residual.abs() > reach {
            break;
        }
        let signs: &[i64] = if abs == 0 { &[1] } else { &[-1, 1] };
        for &s in signs {
            let xi = if s < 0 { -from_u64::<T>(abs) } else { from_u64::<T>(abs) };
            let next = residual.clone() - xi.clone() * a.clone();
            if next.abs() > reach {
                continue;
            }
            x.push(xi);
            if exact_weight(elems, suffix_max, i + 1, rest_budget, next, x) {
                return true;
            }
            x.pop();
        }
    }
    false
}

/// `Add(A)`.
pub fn add_weight(set: &PositiveIntegerSet) -> Result<u64> {
    Ok(represent_one(set)?.weight())
}

/// Component count of the set [`theorem2_build`] constructs for `A`: an
/// upper bound on the geometric weight `Geo(A)`.
pub fn geo_upper(set: &PositiveIntegerSet) -> Result<usize> {
    Ok(theorem2_build(set)?.0.components())
}

/// `true` iff `A = {1, ..., n}`, which is exactly when a single closed
/// interval realizes `A`: the interval `[c, d]` covers the circle iff
/// `d - c >= 1`, and then its positive integer differences are `1..=⌊d-c⌋`.
pub fn geo_is_interval(set: &PositiveIntegerSet) -> bool {
    set.is_initial_segment()
}

/// A set found by [`geo_search`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeoHit {
    pub components: usize,
    pub set: IntervalSet,
}

/// Search for an N-set with few components realizing `A`.
///
/// The family searched is every union of cells `[s + j/D, s + (j+1)/D]`
/// with `0 <= j < D` and integer shift `s` in `[-B, B]`. Equivalently these
/// are finite unions of closed intervals of positive length with endpoints in
/// `(1/D)Z ∩ [-B, B + 1]`. Components are counted after merging, so runs of
/// touching cells are one component. Tries `m = 1, 2, ..., max_components`
/// and returns the first `m` with a solution.
///
/// A hit bounds `Geo(A)` from above; `None` says nothing about sets outside
/// the family.
pub fn geo_search(
    set: &PositiveIntegerSet,
    max_components: usize,
    grid_denominator: u64,
    offset_bound: u64,
) -> Result<Option<GeoHit>> {
    set.require_relatively_prime()?;
    if max_components == 0 || grid_denominator == 0 || offset_bound == 0 {
        return Err(Error::InvalidParams(
            "max_components, grid_denominator and offset_bound must be >= 1".into(),
        ));
    }
    let d = i64::try_from(grid_denominator)
        .ok()
        .filter(|&d| d <= 1 << 16)
        .ok_or_else(|| Error::InvalidParams("grid_denominator too large".into()))?;
    let b = i64::try_from(offset_bound)
        .ok()
        .filter(|&b| b <= 1 << 16)
        .ok_or_else(|| Error::InvalidParams("offset_bound too large".into()))?;
    let span = 2 * b + 1;
    // No difference inside [-B, B + 1] exceeds 2B + 1.
    if set.values().last().unwrap() > &BigInt::from(span) {
        return Ok(None);
    }
    let mut allowed = vec![false; span as usize + 1];
    for a in set.values() {
        allowed[a.to_usize().unwrap()] = true;
    }
    let mut search = GridSearch {
        d,
        lo: -b * d,
        hi: (b + 1) * d,
        allowed,
        hits: vec![0; span as usize + 1],
        chosen: Vec::new(),
        target: set.len(),
    };
    for m in 1..=max_components {
        for p in search.lo..search.lo + d {
            if search.extend(p, m) {
                let k = search.to_interval_set();
                debug_assert!(is_nset(&k));
                debug_assert_eq!(&integer_differences(&k), set);
                return Ok(Some(GeoHit { components: m, set: k }));
            }
        }
    }
    Ok(None)
}

/// Intervals are `[p/D, q/D]` stored by their integer numerators.
struct GridSearch {
    d: i64,
    lo: i64,
    hi: i64,
    allowed: Vec<bool>,
    hits: Vec<u32>,
    chosen: Vec<(i64, i64)>,
    target: usize,
}

impl GridSearch {
    /// Positive differences contributed by a new rightmost interval `[p, q]`.
    fn new_differences(&self, p: i64, q: i64) -> Vec<usize> {
        let mut out: Vec<usize> = (1..=(q - p) / self.d).map(|a| a as usize).collect();
        for &(p0, q0) in &self.chosen {
            // range [p - q0, q - p0], all positive since p > q0
            let first = (p - q0 + self.d - 1).div_euclid(self.d);
            let last = (q - p0).div_euclid(self.d);
            out.extend((first..=last).map(|a| a as usize));
        }
        out
    }

    /// Place intervals starting at `p` until `m` are chosen.
    fn extend(&mut self, p: i64, m: usize) -> bool {
        for q in p + 1..=self.hi {
            let diffs = self.new_differences(p, q);
            // Differences only grow with q.
            if diffs.iter().any(|&a| a >= self.allowed.len() || !self.allowed[a]) {
                break;
            }
            for &a in &diffs {
                self.hits[a] += 1;
            }
            self.chosen.push((p, q));
            let found = if self.chosen.len() == m {
                self.complete()
            } else {
                (q + 1..self.hi).any(|next| self.extend(next, m))
            };
            if found {
                return true;
            }
            self.chosen.pop();
            for &a in &diffs {
                self.hits[a] -= 1;
            }
        }
        false
    }

    fn complete(&self) -> bool {
        let realized = self.hits.iter().filter(|&&h| h > 0).count();
        if realized != self.target {
            return false;
        }
        let mut covered = vec![false; self.d as usize];
        for &(p, q) in &self.chosen {
            for c in p..q.min(p + self.d) {
                covered[c.rem_euclid(self.d) as usize] = true;
            }
        }
        covered.iter().all(|&c| c)
    }

    fn to_interval_set(&self) -> IntervalSet {
        let d = BigInt::from(self.d);
        let pairs: Vec<(Rational, Rational)> = self
            .chosen
            .iter()
            .map(|&(p, q)| {
                (
                    Rational::new(BigInt::from(p), d.clone()),
                    Rational::new(BigInt::from(q), d.clone()),
                )
            })
            .collect();
        crate::exact::canonicalize(&pairs).unwrap()
    }
}
