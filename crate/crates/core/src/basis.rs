//! A fixed basis of `Π_n[R^d]` written in barycentric coordinates: the
//! orthogonal simplex polynomials (Dubiner on triangles, Koornwinder on
//! tetrahedra), built level by level from homogenized Jacobi polynomials.
//!
//! With partial sums `S_k = λ_1 + ⋯ + λ_k`, the function with exponents
//! `(a_1, …, a_d)` is `Π_k S_{k+1}^{a_k} P_{a_k}^{(γ_k, 0)}((λ_{k+1} - S_k) / S_{k+1})`
//! where `γ_k = 2(a_1 + ⋯ + a_{k-1}) + k - 1`. Each factor is a polynomial, so
//! nothing blows up where `S_{k+1}` vanishes.
//!
//! Because the basis lives in barycentric coordinates it is independent of the
//! simplex geometry; an affine change of simplex leaves every collocation
//! matrix unchanged.

use crate::linalg::{Matrix, Qr};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct TotalDegreeBasis {
    dim: usize,
    degree: usize,
    exponents: Vec<Vec<u32>>,
}

impl TotalDegreeBasis {
    pub fn new(dim: usize, degree: usize) -> Self {
        let mut exponents = Vec::new();
        for total in 0..=degree {
            let mut buf = Vec::with_capacity(dim);
            push_exponents(total as u32, dim, &mut buf, &mut exponents);
        }
        Self { dim, degree, exponents }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Scratch length needed by [`eval`](Self::eval).
    pub fn scratch_len(&self) -> usize {
        let m = self.degree + 1;
        self.dim * m * m
    }

    /// Evaluates every basis function at barycentric `lambda` (length `d + 1`).
    pub fn eval<T: Scalar>(&self, lambda: &[T], out: &mut [T], scratch: &mut [T]) {
        let m = self.degree + 1;
        // scratch[(k·m + j)·m + a] = H_a^{(γ)} at level k with γ = 2j + k
        let mut s = lambda[0];
        for k in 0..self.dim {
            let y = s + lambda[k + 1];
            let x = lambda[k + 1] - s;
            for j in 0..m {
                let gamma = 2 * j + k;
                let base = (k * m + j) * m;
                homogeneous_jacobi(gamma, x, y, &mut scratch[base..base + m - j]);
            }
            s = y;
        }
        for (o, e) in out.iter_mut().zip(&self.exponents) {
            let mut v = T::one();
            let mut partial = 0usize;
            for (k, &a) in e.iter().enumerate() {
                v *= scratch[(k * m + partial) * m + a as usize];
                partial += a as usize;
            }
            *o = v;
        }
    }

    /// Collocation matrix: row `a` holds the basis evaluated at node `a`.
    pub fn collocation<'a, T, I>(&self, nodes: I) -> Matrix<T>
    where
        T: Scalar,
        I: IntoIterator<Item = &'a [T]>,
    {
        let mut scratch = vec![T::zero(); self.scratch_len()];
        let rows: Vec<Vec<T>> = nodes
            .into_iter()
            .map(|lambda| {
                let mut row = vec![T::zero(); self.len()];
                self.eval(lambda, &mut row, &mut scratch);
                row
            })
            .collect();
        Matrix::from_rows(&rows)
    }

    /// `log |det V|` of the collocation (Vandermonde) matrix at `nodes`.
    pub fn log_abs_vandermonde<'a, T, I>(&self, nodes: I) -> T
    where
        T: Scalar,
        I: IntoIterator<Item = &'a [T]>,
    {
        let v = self.collocation(nodes);
        if v.rows() != v.cols() {
            return T::neg_infinity();
        }
        Qr::new(v).log_abs_det()
    }
}

/// `y^a P_a^{(γ,0)}(x/y)` for `a = 0..out.len()`, via the three-term recurrence.
fn homogeneous_jacobi<T: Scalar>(gamma: usize, x: T, y: T, out: &mut [T]) {
    if out.is_empty() {
        return;
    }
    out[0] = T::one();
    if out.len() == 1 {
        return;
    }
    let g = T::from_usize_lossy(gamma);
    let two = T::lit(2.0);
    out[1] = ((g + two) * x + g * y) / two;
    for a in 1..out.len() - 1 {
        let aa = T::from_usize_lossy(a);
        let c = two * aa + g;
        let lead = two * (aa + T::one()) * (aa + g + T::one()) * c;
        let p = (c + T::one()) * ((c + two) * c * x + g * g * y);
        let q = two * aa * (aa + g) * (c + two) * y * y;
        out[a + 1] = (p * out[a] - q * out[a - 1]) / lead;
    }
}

fn push_exponents(remaining: u32, slots: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slots == 1 {
        prefix.push(remaining);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for a in (0..=remaining).rev() {
        prefix.push(a);
        push_exponents(remaining - a, slots - 1, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::binomial;

    #[test]
    fn basis_dimension() {
        for d in 1..4 {
            for n in 0..10 {
                assert_eq!(TotalDegreeBasis::new(d, n).len(), binomial(n + d, d));
            }
        }
    }

    fn jacobi(a: usize, g: f64, t: f64) -> f64 {
        // explicit sum for P_a^{(g,0)}
        let binom = |n: f64, k: usize| (0..k).fold(1.0, |p, i| p * (n - i as f64) / (i as f64 + 1.0));
        (0..=a).map(|s| binom(a as f64 + g, a - s) * binom(a as f64, s) * ((t - 1.0) / 2.0).powi(s as i32) * ((t + 1.0) / 2.0).powi((a - s) as i32)).sum()
    }

    #[test]
    fn evaluation_matches_definition() {
        let b = TotalDegreeBasis::new(2, 5);
        let lambda = [0.2f64, 0.3, 0.5];
        let mut out = vec![0.0; b.len()];
        let mut scratch = vec![0.0; b.scratch_len()];
        b.eval(&lambda, &mut out, &mut scratch);
        let s2 = lambda[0] + lambda[1];
        for (e, v) in b.exponents.iter().zip(&out) {
            let (a1, a2) = (e[0] as usize, e[1] as usize);
            let want = s2.powi(a1 as i32)
                * jacobi(a1, 0.0, (lambda[1] - lambda[0]) / s2)
                * jacobi(a2, (2 * a1 + 1) as f64, lambda[2] - s2);
            assert!((v - want).abs() < 1e-13, "{e:?}: {v} vs {want}");
        }
    }

    #[test]
    fn triangle_basis_is_orthogonal() {
        // midpoint rule on a fine lattice of the unit triangle
        let b = TotalDegreeBasis::new(2, 3);
        let m = 400;
        let mut gram = vec![0.0f64; b.len() * b.len()];
        let mut out = vec![0.0; b.len()];
        let mut scratch = vec![0.0; b.scratch_len()];
        for i in 0..m {
            for j in 0..m - i {
                for (di, dj) in [(1.0 / 3.0, 1.0 / 3.0), (2.0 / 3.0, 2.0 / 3.0)] {
                    let (u, v) = ((i as f64 + di) / m as f64, (j as f64 + dj) / m as f64);
                    if u + v >= 1.0 {
                        continue;
                    }
                    b.eval(&[u, v, 1.0 - u - v], &mut out, &mut scratch);
                    for p in 0..b.len() {
                        for q in 0..b.len() {
                            gram[p * b.len() + q] += out[p] * out[q];
                        }
                    }
                }
            }
        }
        let n = b.len();
        for p in 0..n {
            for q in 0..n {
                if p != q {
                    let r = gram[p * n + q] / (gram[p * n + p] * gram[q * n + q]).sqrt();
                    assert!(r.abs() < 1e-3, "({p}, {q}): {r}");
                }
            }
        }
    }

    #[test]
    fn tetrahedron_basis_spans_polynomials() {
        // random points give a nonsingular collocation matrix
        let b = TotalDegreeBasis::new(3, 4);
        let nodes: Vec<Vec<f64>> = (0..b.len())
            .map(|k| {
                let t = k as f64;
                let raw = [(t * 0.37).sin().abs() + 0.1, (t * 1.13).cos().abs() + 0.1, (t * 0.71).sin().abs() + 0.1, 0.3];
                let s: f64 = raw.iter().sum();
                raw.iter().map(|v| v / s).collect()
            })
            .collect();
        let v = b.log_abs_vandermonde(nodes.iter().map(|n| n.as_slice()));
        assert!(v.is_finite());
    }
}
