use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::matz::Matrix;

/// `U * M * V = diag(divisors)` with `U`, `V` unimodular and
/// `d_1 | d_2 | ...`, every `d_i >= 0`.
///
/// `divisors` has `min(rows, cols)` entries; zeros trail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: Matrix,
    pub v: Matrix,
    pub divisors: Vec<BigInt>,
}

impl SmithForm {
    /// Number of nonzero elementary divisors.
    pub fn rank(&self) -> usize {
        self.divisors.iter().filter(|d| !d.is_zero()).count()
    }

    /// The diagonal matrix `U * M * V` as stored.
    pub fn diagonal_matrix(&self) -> Matrix {
        let mut d = Matrix::zeros(self.u.rows(), self.v.cols());
        for (i, v) in self.divisors.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }
}

/// Smith normal form over `Z` with minimal-absolute-value pivoting.
///
/// The result is verified against the input before it is returned.
pub fn smith_normal_form(m: &Matrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = Matrix::identity(rows);
    let mut v = Matrix::identity(cols);
    let steps = rows.min(cols);

    'outer: for t in 0..steps {
        loop {
            let Some((pi, pj)) = min_abs_entry(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&a[(i, t)] / &pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&a[(t, j)] / &pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }

    let divisors = (0..steps).map(|i| a[(i, i)].clone()).collect();
    let snf = SmithForm { u, v, divisors };
    let check = snf
        .u
        .checked_mul(m)
        .and_then(|um| um.checked_mul(&snf.v))
        .expect("shapes agree");
    assert_eq!(check, snf.diagonal_matrix(), "Smith form self-check failed");
    snf
}

fn min_abs_entry(a: &Matrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_traits::One;
    use proptest::prelude::*;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Determinant by cofactor expansion, small matrices only.
    fn det(m: &Matrix) -> BigInt {
        let n = m.rows();
        if n == 1 {
            return m[(0, 0)].clone();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = (1..n)
                .map(|i| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| m[(i, c)].clone())
                        .collect()
                })
                .collect();
            let term = &m[(0, j)] * det(&Matrix::from_rows(minor).unwrap());
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn examples() {
        let m = Matrix::from_i64_rows(&[&[4, 0], &[0, 6]]).unwrap();
        assert_eq!(smith_normal_form(&m).divisors, vec![z(2), z(12)]);
        let m = Matrix::zeros(2, 2);
        assert_eq!(smith_normal_form(&m).divisors, vec![z(0), z(0)]);
        let m = Matrix::identity(2);
        assert_eq!(smith_normal_form(&m).divisors, vec![z(1), z(1)]);
    }

    #[test]
    fn rectangular() {
        let m =
            Matrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16], &[1, 1, 1]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(s.divisors.len(), 3);
        assert!(s
            .divisors
            .windows(2)
            .all(|w| w[0].is_zero() && w[1].is_zero()
                || (!w[0].is_zero() && w[1].is_multiple_of(&w[0]))));
    }

    proptest! {
        #[test]
        fn self_check_and_unimodularity(
            r in 1usize..5, c in 1usize..5,
            seed in prop::collection::vec(-9i64..=9, 16)
        ) {
            let data: Vec<BigInt> = seed.iter().take(r * c).map(|&v| z(v)).collect();
            prop_assume!(data.len() == r * c);
            let m = Matrix::from_row_major(r, c, data).unwrap();
            let s = smith_normal_form(&m);
            prop_assert_eq!(
                s.u.checked_mul(&m).unwrap().checked_mul(&s.v).unwrap(),
                s.diagonal_matrix()
            );
            prop_assert!(det(&s.u).abs().is_one());
            prop_assert!(det(&s.v).abs().is_one());
            for w in s.divisors.windows(2) {
                prop_assert!(!w[0].is_negative());
                if w[0].is_zero() {
                    prop_assert!(w[1].is_zero());
                } else {
                    prop_assert!(w[1].is_multiple_of(&w[0]));
                }
            }
        }
    }
}
