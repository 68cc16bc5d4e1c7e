//! Exact Gauss-Jordan elimination over the rationals.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Which columns elimination prefers as pivots.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    /// Scan columns left to right (textbook reduced row echelon form).
    Leading,
    /// Scan columns right to left, so the leading columns become the free
    /// parameters of the nullspace.
    Trailing,
}

/// Reduced row echelon form, pivoting in the given column order.
///
/// Returns the reduced rows (zero rows dropped) and the pivot column of each
/// row.
pub fn rref(rows: &[Vec<Rational>], order: PivotOrder) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let columns: Vec<usize> = match order {
        PivotOrder::Leading => (0..ncols).collect(),
        PivotOrder::Trailing => (0..ncols).rev().collect(),
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for &c in &columns {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][c];
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &factor * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    rref(rows, PivotOrder::Leading).1.len()
}

/// Nullspace basis. Each vector has a one at its own free column and zeros
/// at the other free columns; vectors are ordered by ascending free column.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize, order: PivotOrder) -> Vec<Vec<Rational>> {
    let (reduced, pivots) = rref(rows, order);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = alloc::vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// True when `v` is a linear combination of `rows`.
pub fn in_row_space(rows: &[Vec<Rational>], v: &[Rational]) -> bool {
    let mut extended = rows.to_vec();
    extended.push(v.to_vec());
    rank(&extended) == rank(rows)
}

pub fn mat_vec(rows: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    rows.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).fold(Rational::zero(), |acc, x| acc + x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn leading_rref() {
        let a = m(&[&[1, 2, 3], &[2, 4, 7]]);
        let (r, p) = rref(&a, PivotOrder::Leading);
        assert_eq!(p, alloc::vec![0, 2]);
        assert_eq!(r, m(&[&[1, 2, 0], &[0, 0, 1]]));
    }

    #[test]
    fn nullspace_orders() {
        let a = m(&[&[1, 1, 1]]);
        let lead = nullspace(&a, 3, PivotOrder::Leading);
        assert_eq!(lead, m(&[&[-1, 1, 0], &[-1, 0, 1]]));
        let trail = nullspace(&a, 3, PivotOrder::Trailing);
        assert_eq!(trail, m(&[&[1, 0, -1], &[0, 1, -1]]));
        for v in lead.iter().chain(&trail) {
            assert!(mat_vec(&a, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn empty_nullspace() {
        let a = m(&[&[1, 0], &[0, 1]]);
        assert!(nullspace(&a, 2, PivotOrder::Leading).is_empty());
    }

    #[test]
    fn row_space_membership() {
        let a = alloc::vec![alloc::vec![rat(1, 2), int(1)], alloc::vec![int(0), int(0)]];
        assert!(in_row_space(&a, &[int(1), int(2)]));
        assert!(!in_row_space(&a, &[int(1), int(0)]));
        assert_eq!(rank(&a), 1);
    }
}
