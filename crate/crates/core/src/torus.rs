//! Deciding whether a compact set meets every residue class modulo the
//! integer lattice, i.e. whether its projection covers the torus.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{integer_part, Interval, IntervalSet, Rational};
use crate::lattice::BoxSet;

/// Image of a set on the circle `R / Z`, as closed arcs of `[0, 1]` where
/// `0` and `1` are the same point. Arcs are sorted and merged as subsets of
/// `[0, 1]`; an arc starting at `0` and one ending at `1` are joined through
/// the gluing point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleCover {
    arcs: Vec<Interval>,
}

impl CircleCover {
    pub fn arcs(&self) -> &[Interval] {
        &self.arcs
    }

    /// `true` iff every point of the circle is covered.
    pub fn is_full(&self) -> bool {
        self.arcs.len() == 1 && self.arcs[0].lo().is_zero() && self.arcs[0].hi().is_one()
    }

    /// Connected pieces on the circle, counting the wrap at `0 ~ 1`.
    pub fn arc_components(&self) -> usize {
        let n = self.arcs.len();
        let wraps = n > 1 && self.arcs[0].lo().is_zero() && self.arcs[n - 1].hi().is_one();
        if wraps {
            n - 1
        } else {
            n
        }
    }

    pub fn measure(&self) -> Rational {
        self.arcs
            .iter()
            .fold(Rational::zero(), |acc, a| acc + a.length())
    }
}

/// Pieces of `[0, 1]` covered by `x - [x]` as `x` ranges over `iv`. A piece
/// that ends exactly at an integer contributes the endpoint `1`.
pub(crate) fn project_interval(iv: &Interval) -> Vec<Interval> {
    let one = Rational::one();
    if iv.length() >= one {
        return vec![Interval::new(Rational::zero(), one).unwrap()];
    }
    let shift = Rational::from_integer(integer_part(iv.lo()));
    let lo = iv.lo() - &shift;
    let hi = iv.hi() - &shift;
    if hi <= one {
        vec![Interval::new(lo, hi).unwrap()]
    } else {
        vec![
            Interval::new(lo, one.clone()).unwrap(),
            Interval::new(Rational::zero(), hi - one).unwrap(),
        ]
    }
}

pub fn circle_project(k: &IntervalSet) -> CircleCover {
    let pieces: Vec<Interval> = k.intervals().iter().flat_map(project_interval).collect();
    let merged = IntervalSet::from_intervals(pieces).expect("interval sets are nonempty");
    CircleCover {
        arcs: merged.intervals().to_vec(),
    }
}

/// `true` iff every real number is congruent mod 1 to a point of `k`.
pub fn is_nset(k: &IntervalSet) -> bool {
    circle_project(k).is_full()
}

/// Total length of `k`, i.e. the arc length of its projection counted with
/// multiplicity.
pub fn projected_length(k: &IntervalSet) -> Rational {
    k.total_length()
}

/// `true` iff the boxes of `k`, reduced mod `Z^n`, cover `[0, 1]^n`.
///
/// Each box reduces to at most `2^n` boxes inside the unit cube. The union
/// of those covers the cube iff every elementary cell of the grid spanned by
/// all their per-axis endpoints lies inside one of them: the reduced boxes
/// are unions of grid cells, so a cell is either inside a box or meets it in
/// a null set.
pub fn is_nset_nd(k: &BoxSet) -> bool {
    let n = k.dimension();
    let reduced: Vec<Vec<Interval>> = k.boxes().iter().flat_map(|b| reduce_box(b)).collect();

    let mut grids: Vec<Vec<Rational>> = vec![vec![Rational::zero(), Rational::one()]; n];
    for b in &reduced {
        for (axis, side) in b.iter().enumerate() {
            grids[axis].push(side.lo().clone());
            grids[axis].push(side.hi().clone());
        }
    }
    for g in grids.iter_mut() {
        g.sort();
        g.dedup();
    }

    let solid: Vec<&Vec<Interval>> = reduced
        .iter()
        .filter(|b| b.iter().all(|side| !side.is_point()))
        .collect();

    // Odometer over cell indices.
    let mut idx = vec![0usize; n];
    loop {
        let covered = solid.iter().any(|b| {
            b.iter().enumerate().all(|(axis, side)| {
                side.lo() <= &grids[axis][idx[axis]] && &grids[axis][idx[axis] + 1] <= side.hi()
            })
        });
        if !covered {
            return false;
        }
        let mut axis = 0;
        loop {
            if axis == n {
                return true;
            }
            idx[axis] += 1;
            if idx[axis] + 1 < grids[axis].len() {
                break;
            }
            idx[axis] = 0;
            axis += 1;
        }
    }
}

/// Checked variant of [`is_nset_nd`] for callers that expect a dimension.
pub fn is_nset_nd_checked(k: &BoxSet, dimension: usize) -> Result<bool> {
    if k.dimension() != dimension {
        return Err(Error::DimensionMismatch {
            expected: dimension,
            found: k.dimension(),
        });
    }
    Ok(is_nset_nd(k))
}

fn reduce_box(b: &[Interval]) -> Vec<Vec<Interval>> {
    let mut out: Vec<Vec<Interval>> = vec![Vec::with_capacity(b.len())];
    for side in b {
        let pieces = project_interval(side);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |p| {
                    let mut next = prefix.clone();
                    next.push(p.clone());
                    next
                })
            })
            .collect();
    }
    out
}
