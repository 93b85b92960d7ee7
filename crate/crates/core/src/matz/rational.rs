use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matz::Matrix;

/// Reduced row echelon form of `[M | b]` over `Q`; returns the pivot columns.
fn echelon(rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            let (head, tail) = rows.split_at_mut(r.max(i));
            let (src, dst) = if i < r {
                (&tail[0], &mut head[i])
            } else {
                (&head[r], &mut tail[0])
            };
            for (d, s) in dst.iter_mut().zip(src) {
                *d -= &f * s;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

fn to_rational_rows(m: &Matrix, extra: Option<&[BigInt]>) -> Vec<Vec<BigRational>> {
    (0..m.rows())
        .map(|i| {
            let mut row: Vec<BigRational> = m
                .row(i)
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect();
            if let Some(b) = extra {
                row.push(BigRational::from_integer(b[i].clone()));
            }
            row
        })
        .collect()
}

/// Rank over `Q` by exact Gaussian elimination.
pub fn rank_rational(m: &Matrix) -> usize {
    let mut rows = to_rational_rows(m, None);
    echelon(&mut rows, m.cols()).len()
}

/// Some `x in Q^cols` with `M x = b`, or `None` when the system is inconsistent.
///
/// Free variables are set to zero.
pub fn solve_rational(m: &Matrix, b: &[BigInt]) -> Result<Option<Vec<BigRational>>> {
    if b.len() != m.rows() {
        return Err(Error::DimensionMismatch("right-hand side length".into()));
    }
    let mut rows = to_rational_rows(m, Some(b));
    let pivots = echelon(&mut rows, m.cols() + 1);
    if pivots.last() == Some(&m.cols()) {
        return Ok(None);
    }
    let mut x = alloc::vec![BigRational::zero(); m.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][m.cols()].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matz::{power_stack, IntMatrix};

    #[test]
    fn rank_of_power_stack() {
        let a = IntMatrix::diagonal_i64(&[4, 16, 32]);
        assert_eq!(rank_rational(&power_stack(&a, 3).unwrap()), 3);
        assert_eq!(rank_rational(&power_stack(&a, 4).unwrap()), 3);
        assert_eq!(
            rank_rational(&power_stack(&IntMatrix::identity(3), 3).unwrap()),
            1
        );
    }

    #[test]
    fn solves_and_detects_inconsistency() {
        let m = Matrix::from_i64_rows(&[&[2, 1], &[4, 2]]).unwrap();
        let x = solve_rational(&m, &[BigInt::from(3), BigInt::from(6)])
            .unwrap()
            .unwrap();
        assert_eq!(
            x[0].clone() * BigInt::from(2) + x[1].clone(),
            BigRational::from_integer(3.into())
        );
        assert!(solve_rational(&m, &[BigInt::from(3), BigInt::from(7)])
            .unwrap()
            .is_none());
    }
}
