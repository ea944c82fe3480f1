//! Dense linear algebra for the small systems used here: LU with partial
//! pivoting for affine solves and Householder QR for collocation matrices.

#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [T] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Maximum absolute column sum.
    pub fn norm_1(&self) -> T {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self[(i, j)].abs()).sum::<T>())
            .fold(T::zero(), T::max)
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(x).map(|(&a, &b)| a * b).sum())
            .collect()
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

/// LU factorization `PA = LU` of a square matrix.
#[derive(Debug, Clone)]
pub struct Lu<T> {
    lu: Matrix<T>,
    perm: Vec<usize>,
    sign: T,
}

impl<T: Scalar> Lu<T> {
    pub fn new(mut a: Matrix<T>) -> Self {
        assert_eq!(a.rows, a.cols, "LU needs a square matrix");
        let n = a.rows;
        let mut perm: Vec<usize> = (0..n).collect();
        let mut sign = T::one();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&i, &j| a[(i, k)].abs().partial_cmp(&a[(j, k)].abs()).unwrap())
                .unwrap();
            if p != k {
                for j in 0..n {
                    a.data.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
                sign = -sign;
            }
            let pivot = a[(k, k)];
            if pivot == T::zero() {
                continue;
            }
            for i in k + 1..n {
                let f = a[(i, k)] / pivot;
                a[(i, k)] = f;
                for j in k + 1..n {
                    let akj = a[(k, j)];
                    a[(i, j)] -= f * akj;
                }
            }
        }
        Self { lu: a, perm, sign }
    }

    pub fn det(&self) -> T {
        (0..self.lu.rows).fold(self.sign, |acc, i| acc * self.lu[(i, i)])
    }

    pub fn solve(&self, b: &[T]) -> Vec<T> {
        let n = self.lu.rows;
        let mut x: Vec<T> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.lu[(i, j)];
                x[i] = x[i] - l * x[j];
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.lu[(i, j)];
                x[i] = x[i] - u * x[j];
            }
            x[i] /= self.lu[(i, i)];
        }
        x
    }
}

/// Householder QR factorization of a square matrix.
#[derive(Debug, Clone)]
pub struct Qr<T> {
    /// `R` in the upper triangle, Householder vectors below the diagonal.
    qr: Matrix<T>,
    /// Householder scalars `tau_k`.
    tau: Vec<T>,
    r_diag: Vec<T>,
}

impl<T: Scalar> Qr<T> {
    pub fn new(mut a: Matrix<T>) -> Self {
        assert_eq!(a.rows, a.cols, "QR here is for square matrices");
        let n = a.rows;
        let mut tau = vec![T::zero(); n];
        let mut r_diag = vec![T::zero(); n];
        for k in 0..n {
            let norm = (k..n).map(|i| a[(i, k)] * a[(i, k)]).sum::<T>().sqrt();
            if norm == T::zero() {
                continue;
            }
            let alpha = if a[(k, k)] > T::zero() { -norm } else { norm };
            // v = x - alpha e_1, normalised so v_k = 1
            let v0 = a[(k, k)] - alpha;
            for i in k + 1..n {
                a[(i, k)] /= v0;
            }
            let t = -v0 / alpha;
            tau[k] = t;
            r_diag[k] = alpha;
            a[(k, k)] = alpha;
            for j in k + 1..n {
                let mut s = a[(k, j)];
                for i in k + 1..n {
                    s += a[(i, k)] * a[(i, j)];
                }
                s *= t;
                a[(k, j)] -= s;
                for i in k + 1..n {
                    let vik = a[(i, k)];
                    a[(i, j)] -= s * vik;
                }
            }
        }
        Self { qr: a, tau, r_diag }
    }

    pub fn dim(&self) -> usize {
        self.qr.rows
    }

    /// `log |det A|`, or `-inf` for a singular matrix.
    pub fn log_abs_det(&self) -> T {
        self.r_diag.iter().map(|r| r.abs().ln()).sum()
    }

    /// Ratio of the largest to the smallest `|R_kk|`; a cheap lower bound on the condition number.
    pub fn diag_ratio(&self) -> T {
        let max = self.r_diag.iter().fold(T::zero(), |m, r| m.max(r.abs()));
        let min = self.r_diag.iter().fold(T::infinity(), |m, r| m.min(r.abs()));
        max / min
    }

    /// Applies `Q^T` in place.
    fn apply_qt(&self, b: &mut [T]) {
        let n = self.qr.rows;
        for k in 0..n {
            if self.tau[k] == T::zero() {
                continue;
            }
            let mut s = b[k];
            for i in k + 1..n {
                s += self.qr[(i, k)] * b[i];
            }
            s *= self.tau[k];
            b[k] -= s;
            for i in k + 1..n {
                b[i] -= s * self.qr[(i, k)];
            }
        }
    }

    fn back_substitute(&self, b: &mut [T]) -> Result<()> {
        let n = self.qr.rows;
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s -= self.qr[(i, j)] * b[j];
            }
            let r = self.r_diag[i];
            if r == T::zero() {
                return Err(Error::NotUnisolvent { condition: f64::INFINITY });
            }
            b[i] = s / r;
        }
        Ok(())
    }

    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        let mut x = b.to_vec();
        self.apply_qt(&mut x);
        self.back_substitute(&mut x)?;
        Ok(x)
    }

    /// Explicit inverse, column by column.
    pub fn inverse(&self) -> Result<Matrix<T>> {
        let n = self.qr.rows;
        let mut inv = Matrix::zeros(n, n);
        let mut e = vec![T::zero(); n];
        for j in 0..n {
            e.iter_mut().for_each(|v| *v = T::zero());
            e[j] = T::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Matrix<f64> {
        Matrix::from_rows(&[
            vec![2.0, -1.0, 0.5],
            vec![1.0, 3.0, -2.0],
            vec![0.0, 4.0, 1.0],
        ])
    }

    #[test]
    fn lu_solves_and_determinant() {
        let a = sample();
        let lu = Lu::new(a.clone());
        // det by cofactor expansion: 2(3+8) + 1(1-0) + 0.5(4-0) = 25
        assert!((lu.det() - 25.0).abs() < 1e-12);
        let x = lu.solve(&[1.0, 2.0, 3.0]);
        let r = a.mul_vec(&x);
        for (ri, bi) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((ri - bi).abs() < 1e-13);
        }
    }

    #[test]
    fn qr_inverse_and_log_det() {
        let a = sample();
        let qr = Qr::new(a.clone());
        assert!((qr.log_abs_det() - 25f64.ln()).abs() < 1e-12);
        let inv = qr.inverse().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let v: f64 = (0..3).map(|k| a[(i, k)] * inv[(k, j)]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((v - want).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn qr_flags_singular() {
        let a = Matrix::from_rows(&[vec![1.0, 2.0], vec![2.0, 4.0]]);
        let qr = Qr::new(a);
        assert!(qr.diag_ratio() > 1e12 || qr.solve(&[1.0, 0.0]).is_err());
    }
}
