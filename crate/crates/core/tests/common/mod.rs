#![allow(dead_code)]

use nullideal_core::IntMatrix;
use num_bigint::BigInt;

pub fn z(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn example() -> IntMatrix {
    IntMatrix::diagonal_i64(&[4, 16, 32])
}

/// Twenty fixed 2x2 and 3x3 matrices with entries in `[-4, 4]`.
pub fn corpus() -> Vec<IntMatrix> {
    let rows: [&[&[i64]]; 20] = [
        &[&[1, 2], &[3, 4]],
        &[&[0, 1], &[-1, 0]],
        &[&[2, 0], &[0, -2]],
        &[&[4, 0], &[0, 0]],
        &[&[1, 1], &[0, 1]],
        &[&[3, -4], &[2, -3]],
        &[&[-4, 4], &[4, -4]],
        &[&[2, 1], &[0, 2]],
        &[&[1, -1], &[1, 1]],
        &[&[-3, 0], &[0, 1]],
        &[&[0, 2], &[2, 0]],
        &[&[4, -2], &[3, -1]],
        &[&[1, 0, 0], &[0, -1, 0], &[0, 0, 3]],
        &[&[0, 0, 0], &[0, 2, 0], &[0, 0, 4]],
        &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]],
        &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]],
        &[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]],
        &[&[0, 1, 0], &[0, 0, 1], &[4, -4, 1]],
        &[&[1, 2, 3], &[0, -2, 4], &[0, 0, 3]],
        &[&[-4, 1, 0], &[1, -4, 1], &[0, 1, -4]],
    ];
    rows.iter()
        .map(|r| IntMatrix::from_i64_rows(r).expect("square"))
        .collect()
}
