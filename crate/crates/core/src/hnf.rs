//! Row-style Hermite normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Hermite normal form of the lattice spanned by `rows`, each of length
/// `n`. The returned rows form a basis in row echelon form with positive
/// pivots and entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivot_row = 0;
    for col in 0..n {
        if pivot_row == m.len() {
            break;
        }
        // Euclid on the column until a single nonzero entry remains.
        loop {
            let best = (pivot_row..m.len())
                .filter(|&r| !m[r][col].is_zero())
                .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let Some(best) = best else { break };
            m.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..m.len() {
                if m[r][col].is_zero() {
                    continue;
                }
                let q = m[r][col].div_floor(&m[pivot_row][col]);
                let pivot = m[pivot_row].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot) {
                    *x -= &q * p;
                }
                if !m[r][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[pivot_row][col].is_zero() {
            continue;
        }
        if m[pivot_row][col].is_negative() {
            for x in m[pivot_row].iter_mut() {
                *x = -x.clone();
            }
        }
        let pivot = m[pivot_row].clone();
        for row in &mut m[..pivot_row] {
            let q = row[col].div_floor(&pivot[col]);
            if !q.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &q * p;
                }
            }
        }
        pivot_row += 1;
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    m.truncate(pivot_row);
    m
}

/// `true` iff the rows generate all of `Z^n`.
pub fn spans_full_lattice(rows: &[Vec<BigInt>], n: usize) -> bool {
    let h = hermite_normal_form(rows, n);
    h.len() == n && (0..n).all(|i| h[i][i].is_one())
}
