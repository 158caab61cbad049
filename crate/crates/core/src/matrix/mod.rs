//! Dense exact matrices over the scalar tower.
//!
//! Elimination pivots on the first nonzero entry of each column; there is no
//! tolerance anywhere. Inversion uses left row operations only, so it is valid
//! over the quaternions as well as over the commutative scalars.

mod cayley;
mod json;
mod structured;

pub use cayley::{cayley_sample, cayley_sample_gram, cayley_transform, Pairing, DEFAULT_HEIGHT};
pub use json::{AnyMatrix, MatrixJson};
pub use structured::{
    build_structured, quaternionic_structure, root_signature_matrix, signature_matrix, StructuredKind,
};

use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::{Commutative, GaussRational, Scalar};
use crate::rng::Lcg64;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    /// Row-major constructor.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::dim("new", "positive dimensions", format!("{rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::dim("new", rows * cols, data.len()));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::dim("from_rows", "rows of equal length", "ragged rows"));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m.data[i * n + i] = e;
        }
        m
    }

    /// Entries drawn from `T::sample`.
    pub fn random(rows: usize, cols: usize, rng: &mut Lcg64, height: u32) -> Self {
        let data = (0..rows * cols).map(|_| T::sample(rng, height)).collect();
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Entrywise involution (`M̄`, or `σ(M)` over the quaternions).
    pub fn conj(&self) -> Self {
        self.map(T::conj)
    }

    /// Conjugate transpose `M̄^t`; `σ(M)^t` over the quaternions, `M^t` over `ℚ`.
    pub fn star(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    /// Left scalar multiplication `s·M`.
    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| s.clone() * x)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.rows)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).collect()
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::dim(
                "mul",
                format!("{} rows", self.cols),
                format!("{} rows", rhs.rows),
            ));
        }
        let mut out = Matrix::<T>::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = out.data[idx].clone() + a.clone() * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "add", |a, b| a.clone() + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, "sub", |a, b| a.clone() - b)
    }

    fn zip_with(&self, rhs: &Self, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::dim(
                op,
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", rhs.rows, rhs.cols),
            ));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::dim(op, "square matrix", format!("{}x{}", self.rows, self.cols)))
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row_dst += s · row_src` (left multiplication by `s`).
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, s: &T) {
        for j in 0..self.cols {
            let v = s.clone() * self.get(src, j);
            let idx = dst * self.cols + j;
            self.data[idx] = self.data[idx].clone() + v;
        }
    }

    /// `col_dst += col_src · s` (right multiplication by `s`).
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, s: &T) {
        for i in 0..self.rows {
            let v = self.get(i, src).clone() * s;
            let idx = i * self.cols + dst;
            self.data[idx] = self.data[idx].clone() + v;
        }
    }

    /// Exact Gauss-Jordan inverse by left row operations.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.require_square("inverse")?;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for k in 0..n {
            let pivot = (k..n).find(|&r| !a.get(r, k).is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(k, pivot);
            inv.swap_rows(k, pivot);
            let p_inv = a.get(k, k).inv().ok_or(Error::Singular)?;
            for j in 0..n {
                let idx = k * n + j;
                a.data[idx] = p_inv.clone() * &a.data[idx];
                inv.data[idx] = p_inv.clone() * &inv.data[idx];
            }
            for r in 0..n {
                if r == k || a.get(r, k).is_zero() {
                    continue;
                }
                let f = -a.get(r, k).clone();
                a.add_row_multiple(r, k, &f);
                inv.add_row_multiple(r, k, &f);
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Row rank by left elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a.get(r, col).is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let p_inv = a.get(rank, col).inv().unwrap();
            for r in rank + 1..self.rows {
                if a.get(r, col).is_zero() {
                    continue;
                }
                let f = -(a.get(r, col).clone() * &p_inv);
                a.add_row_multiple(r, rank, &f);
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Matrix::identity(self.rows), |acc, _| &acc * self)
    }
}

impl<T: Commutative> Matrix<T> {
    /// Exact determinant by pivoted elimination.
    pub fn det(&self) -> Result<T> {
        let n = self.require_square("det")?;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap_rows(k, p);
                det = -det;
            }
            let pivot = a.get(k, k).clone();
            let p_inv = pivot.inv().unwrap();
            for r in k + 1..n {
                if a.get(r, k).is_zero() {
                    continue;
                }
                let f = -(a.get(r, k).clone() * &p_inv);
                a.add_row_multiple(r, k, &f);
            }
            det = det * pivot;
        }
        Ok(det)
    }
}

/// Determinant of a square matrix over a commutative scalar.
pub fn exact_det<T: Commutative>(m: &Matrix<T>) -> Result<T> {
    m.det()
}

/// Conjugate transpose of a matrix over `k̄`.
pub fn star(m: &Matrix<GaussRational>) -> Matrix<GaussRational> {
    m.star()
}

/// Panics on dimension mismatch; use [`Matrix::try_mul`] for a checked product.
impl<'b, T: Scalar> Mul<&'b Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl<'b, T: Scalar> Add<&'b Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        self.try_add(rhs).expect("matrix sum dimension mismatch")
    }
}

impl<'b, T: Scalar> Sub<&'b Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        self.try_sub(rhs).expect("matrix difference dimension mismatch")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

/// Promotes a rational matrix into any scalar of the tower.
pub fn promote<T: Scalar>(m: &Matrix<crate::Rational>) -> Matrix<T> {
    m.map(|x| T::from_rational(x.clone()))
}
