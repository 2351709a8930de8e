//! Witness search for planar lattice sets of the form `(K - K) ∩ Z^2`.
//!
//! The torus is cut into the `D²` cells `[i/D, (i+1)/D] × [j/D, (j+1)/D]`
//! and each cell gets one integer shift `v ∈ [-B, B]²`. The union of the
//! shifted cells always covers the torus, so every complete assignment is an
//! N-set. Only witnesses are produced: exhausting the family does not show
//! that a target is unrealizable.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::lattice::{box_differences, generates, BoxSet, LatticeSet};
use crate::torus::is_nset_nd;

/// Shifts in `[-B, B]²` ordered by 1-norm, then lexicographically.
fn shift_order(bound: i64) -> Vec<(i64, i64)> {
    let mut shifts: Vec<(i64, i64)> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| (x, y)))
        .collect();
    shifts.sort_by_key(|&(x, y)| (x.abs() + y.abs(), x, y));
    shifts
}

/// Checks the target preconditions: planar, contains 0, symmetric,
/// generating.
pub fn validate_target(target: &LatticeSet) -> Result<()> {
    if target.dimension() != 2 {
        return Err(Error::InvalidTarget(format!(
            "dimension {} (expected 2)",
            target.dimension()
        )));
    }
    if !target.contains_zero() {
        return Err(Error::InvalidTarget("does not contain 0".into()));
    }
    if !target.is_symmetric() {
        return Err(Error::InvalidTarget("not symmetric".into()));
    }
    if !generates(target)? {
        return Err(Error::InvalidTarget("does not generate Z^2".into()));
    }
    Ok(())
}

/// First cell-tiling N-set `K` (cells row-major, shifts in [`shift_order`])
/// with `(K - K) ∩ Z^2` equal to `target`, if the family contains one.
pub fn explore2d(target: &LatticeSet, grid_denominator: u64, shift_bound: u64) -> Result<Option<BoxSet>> {
    validate_target(target)?;
    if grid_denominator == 0 || grid_denominator > 64 || shift_bound > 1 << 16 {
        return Err(Error::InvalidParams(
            "grid must be in 1..=64 and shift bound at most 65536".into(),
        ));
    }
    let d = grid_denominator as i64;
    let b = shift_bound as i64;

    // Boxes lie in [-B, B + 1]², so no difference exceeds 2B + 1.
    let reach = 2 * b + 1;
    let mut index = HashMap::new();
    for v in target.vectors() {
        let coords: Option<Vec<i64>> = v.iter().map(|x| x.to_i64().filter(|c| c.abs() <= reach)).collect();
        match coords {
            Some(c) => {
                index.insert((c[0], c[1]), index.len());
            }
            None => return Ok(None),
        }
    }

    let cells: Vec<(i64, i64)> = (0..d).flat_map(|j| (0..d).map(move |i| (i, j))).collect();
    let mut search = CellSearch {
        d,
        cells,
        shifts: shift_order(b),
        index,
        hits: vec![0; target.len()],
        placed: Vec::new(),
        target,
    };
    Ok(search.run())
}

struct CellSearch<'a> {
    d: i64,
    cells: Vec<(i64, i64)>,
    shifts: Vec<(i64, i64)>,
    index: HashMap<(i64, i64), usize>,
    hits: Vec<u32>,
    /// Lower corners of placed cells, scaled by `D`.
    placed: Vec<(i64, i64)>,
    target: &'a LatticeSet,
}

impl CellSearch<'_> {
    fn run(&mut self) -> Option<BoxSet> {
        if self.placed.len() == self.cells.len() {
            return self.accept();
        }
        let (i, j) = self.cells[self.placed.len()];
        for s in 0..self.shifts.len() {
            let (vx, vy) = self.shifts[s];
            let corner = (i + self.d * vx, j + self.d * vy);
            let Some(new) = self.differences_with(corner) else {
                continue;
            };
            for &t in &new {
                self.hits[t] += 1;
            }
            self.placed.push(corner);
            if let Some(k) = self.run() {
                return Some(k);
            }
            self.placed.pop();
            for &t in &new {
                self.hits[t] -= 1;
            }
        }
        None
    }

    /// Target indices of the differences a new cell forms with itself and
    /// with every placed cell, or `None` if one falls outside the target.
    fn differences_with(&self, corner: (i64, i64)) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for &other in self.placed.iter().chain(std::iter::once(&corner)) {
            let xs = self.axis_range(corner.0, other.0);
            let ys = self.axis_range(corner.1, other.1);
            for &x in &xs {
                for &y in &ys {
                    out.push(*self.index.get(&(x, y))?);
                    out.push(*self.index.get(&(-x, -y))?);
                }
            }
        }
        Some(out)
    }

    /// Integers `a` with `D a` in `[p - q - 1, p - q + 1]`, the range of
    /// differences of two unit-scaled cells with lower corners `p`, `q`.
    fn axis_range(&self, p: i64, q: i64) -> Vec<i64> {
        let lo = p - q - 1;
        let hi = p - q + 1;
        let first = (lo + self.d - 1).div_euclid(self.d);
        let last = hi.div_euclid(self.d);
        (first..=last).collect()
    }

    fn accept(&self) -> Option<BoxSet> {
        if self.hits.contains(&0) {
            return None;
        }
        let d = BigInt::from(self.d);
        let r = |n: i64| Rational::new(BigInt::from(n), d.clone());
        let boxes = self
            .placed
            .iter()
            .map(|&(x, y)| vec![(r(x), r(x + 1)), (r(y), r(y + 1))])
            .collect();
        let k = BoxSet::new(2, boxes).ok()?;
        (is_nset_nd(&k) && &box_differences(&k) == self.target).then_some(k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn square_target() -> LatticeSet {
        let v: Vec<Vec<i64>> = (-1..=1).flat_map(|x| (-1..=1).map(move |y| vec![x, y])).collect();
        let refs: Vec<&[i64]> = v.iter().map(Vec::as_slice).collect();
        LatticeSet::from_i64s(2, &refs).unwrap()
    }

    #[test]
    fn unit_square_is_found() {
        let k = explore2d(&square_target(), 1, 1).unwrap().unwrap();
        assert_eq!(
            k,
            BoxSet::new(2, vec![vec![(int(0), int(1)), (int(0), int(1))]]).unwrap()
        );
    }

    #[test]
    fn invalid_targets() {
        let t = LatticeSet::from_i64s(2, &[&[1, 0]]).unwrap();
        assert!(matches!(explore2d(&t, 1, 1), Err(Error::InvalidTarget(_))));
        let t = LatticeSet::from_i64s(2, &[&[0, 0], &[2, 0], &[-2, 0], &[0, 1], &[0, -1]]).unwrap();
        assert!(matches!(explore2d(&t, 1, 1), Err(Error::InvalidTarget(_))));
        let t = LatticeSet::from_i64s(2, &[&[0, 0], &[1, 0], &[0, 1], &[0, -1]]).unwrap();
        assert!(matches!(explore2d(&t, 1, 1), Err(Error::InvalidTarget(_))));
    }

    #[test]
    fn shift_order_starts_at_origin() {
        let s = shift_order(1);
        assert_eq!(&s[..5], &[(0, 0), (-1, 0), (0, -1), (0, 1), (1, 0)]);
    }

    #[test]
    fn far_target_is_out_of_reach() {
        let t = LatticeSet::from_i64s(
            2,
            &[&[0, 0], &[1, 0], &[-1, 0], &[0, 1], &[0, -1], &[9, 0], &[-9, 0]],
        )
        .unwrap();
        assert_eq!(explore2d(&t, 2, 1).unwrap(), None);
    }
}
