//! Exact Gaussian elimination over the rationals.

use num_traits::{One, Zero};

use crate::exact::Rational;

/// Rank of the matrix whose rows are `rows`. Rows may have different
/// lengths; missing entries are zero.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            let mut r = r.clone();
            r.resize(width, Rational::zero());
            r
        })
        .collect();
    echelonize(&mut m, width)
}

/// Reduces `m` in place to row echelon form over its first `cols` columns
/// and returns the number of pivots.
fn echelonize(m: &mut [Vec<Rational>], cols: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = m[pivot_row][col].recip();
        for x in m[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == m.len() {
            break;
        }
    }
    pivot_row
}

/// A nontrivial vector `c` with `Σ c_i rows[i] = 0`, if the rows are
/// linearly dependent.
pub fn row_dependency(rows: &[Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = rows.len();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.resize(width, Rational::zero());
            row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    let r = echelonize(&mut m, width);
    m.get(r).map(|row| row[width..].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&ints(&[&[0, 0], &[0]])), 0);
        assert_eq!(rank(&ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&ints(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4], &[0, 0, 5]])), 3);
    }

    #[test]
    fn dependency_vector_annihilates() {
        let rows = ints(&[&[1, 2, 3], &[0, 1, 1], &[1, 3, 4]]);
        let c = row_dependency(&rows).unwrap();
        assert!(c.iter().any(|x| !x.is_zero()));
        for col in 0..3 {
            let s: Rational = rows.iter().zip(&c).map(|(r, ci)| &r[col] * ci).sum();
            assert!(s.is_zero());
        }
        assert!(row_dependency(&ints(&[&[1, 0], &[0, 1]])).is_none());
    }
}
