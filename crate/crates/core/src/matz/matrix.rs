use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ringcore::IntPolynomial;

/// Dense rectangular integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_row_major(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(nrows: usize, columns: &[Vec<BigInt>]) -> Result<Self> {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(Error::DimensionMismatch("column length".into()));
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn checked_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn reduce_mod(&self, m: &BigInt) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.mod_floor(m)).collect(),
        }
    }

    pub fn all_divisible_by(&self, m: &BigInt) -> bool {
        self.data.iter().all(|v| v.is_multiple_of(m))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += factor * row[src]`.
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// `col[dst] += factor * col[src]`.
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -core::mem::take(v);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            f.write_str("[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// Square integer matrix, `n >= 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix(Matrix);

impl IntMatrix {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if matrix.rows != matrix.cols || matrix.rows == 0 {
            return Err(Error::DimensionMismatch(format!(
                "expected a square matrix with n >= 1, got {}x{}",
                matrix.rows, matrix.cols
            )));
        }
        Ok(IntMatrix(matrix))
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        Self::new(Matrix::from_rows(rows)?)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(Matrix::from_i64_rows(rows)?)
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        IntMatrix(Matrix::identity(n))
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        assert!(!entries.is_empty(), "matrix dimension must be at least 1");
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        IntMatrix(m)
    }

    pub fn diagonal_i64(entries: &[i64]) -> Self {
        Self::diagonal(&entries.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>())
    }

    /// Companion matrix of a monic polynomial of degree at least 1.
    pub fn companion(f: &IntPolynomial) -> Result<Self> {
        let d = match f.degree() {
            Some(d) if d >= 1 && f.is_monic() => d,
            _ => {
                return Err(Error::InvalidArgument(
                    "companion matrix needs a monic polynomial of degree >= 1".into(),
                ))
            }
        };
        let mut m = Matrix::zeros(d, d);
        for i in 1..d {
            m[(i, i - 1)] = BigInt::one();
        }
        for i in 0..d {
            m[(i, d - 1)] = -f.coeff(i);
        }
        Ok(IntMatrix(m))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Row-major flattening, the canonical `vec(.)`.
    pub fn vec(&self) -> &[BigInt] {
        &self.0.data
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Diagonal entries if the matrix is diagonal.
    pub fn diagonal_entries(&self) -> Option<Vec<BigInt>> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.0[(i, j)].is_zero() {
                    return None;
                }
            }
        }
        Some((0..n).map(|i| self.0[(i, i)].clone()).collect())
    }

    pub fn max_entry_bits(&self) -> u64 {
        crate::ringcore::max_bit_length(self.0.data.iter())
    }

    /// `f(A)` by Horner's rule.
    pub fn evaluate(&self, f: &IntPolynomial) -> IntMatrix {
        let n = self.dim();
        let mut acc = Matrix::zeros(n, n);
        for c in f.coeffs().iter().rev() {
            acc = acc
                .checked_mul(&self.0)
                .expect("square matrices of equal size");
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        IntMatrix(acc)
    }

    /// Whether every entry of `f(A)` is divisible by `m`.
    pub fn annihilated_mod(&self, f: &IntPolynomial, m: &BigInt) -> bool {
        self.evaluate(f).0.all_divisible_by(m)
    }

    pub fn reduce_mod(&self, m: &BigInt) -> IntMatrix {
        IntMatrix(self.0.reduce_mod(m))
    }

    /// Exact entrywise division, `None` if some entry is not divisible.
    pub fn divide_exact(&self, d: &BigInt) -> Option<IntMatrix> {
        let mut data = Vec::with_capacity(self.0.data.len());
        for v in &self.0.data {
            let (q, r) = v.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            data.push(q);
        }
        Some(IntMatrix(Matrix {
            rows: self.0.rows,
            cols: self.0.cols,
            data,
        }))
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, idx: (usize, usize)) -> &BigInt {
        &self.0[idx]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix(
            self.0
                .checked_mul(&rhs.0)
                .expect("square matrices of equal size"),
        )
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `A^0, ..., A^(count-1)`, each computed from the previous one.
pub fn powers(a: &IntMatrix, count: usize) -> Vec<IntMatrix> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(IntMatrix::identity(a.dim()));
    for k in 1..count {
        let next = &out[k - 1] * a;
        out.push(next);
    }
    out
}

/// The `n^2 x d` matrix with columns `vec(A^0), ..., vec(A^(d-1))`.
pub fn power_stack(a: &IntMatrix, d: usize) -> Result<Matrix> {
    if d == 0 {
        return Err(Error::InvalidArgument("power stack needs d >= 1".into()));
    }
    Ok(stack_of(&powers(a, d)))
}

pub(crate) fn stack_of(pows: &[IntMatrix]) -> Matrix {
    let rows = pows.first().map_or(0, |p| p.vec().len());
    let cols: Vec<Vec<BigInt>> = pows.iter().map(|p| p.vec().to_vec()).collect();
    Matrix::from_columns(rows, &cols).expect("powers share a dimension")
}
