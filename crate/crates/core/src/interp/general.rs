//! Polynomial cardinal functions for an arbitrary unisolvent node set.
//!
//! With collocation matrix `A_{αk} = b_k(x_α)`, the cardinals satisfy
//! `ℓ(x)ᵀ = b(x)ᵀ A⁻¹`. The inverse is formed once through a Householder QR of
//! `A`, after which each evaluation is a basis evaluation plus one
//! matrix-vector product. Columns of `A` are scaled to unit 2-norm first, so the
//! condition estimate measures the nodes rather than the basis normalization.

use crate::basis::TotalDegreeBasis;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Qr};
use crate::points::NodeFamily;
use crate::scalar::Scalar;

use super::{CardinalEval, Cardinals};

/// Largest acceptable 1-norm condition number of the collocation matrix.
pub const MAX_CONDITION: f64 = 1e12;

#[derive(Debug, Clone)]
pub struct GeneralCardinals<T> {
    basis: TotalDegreeBasis,
    /// `A⁻¹`, row `k` holding the coefficients of basis function `k`.
    inverse: Matrix<T>,
    condition: T,
}

impl<T: Scalar> GeneralCardinals<T> {
    pub fn new(nodes: &NodeFamily<T>) -> Result<Self> {
        let d = nodes.dim();
        let basis = TotalDegreeBasis::new(d, nodes.degree);
        if basis.len() != nodes.len() {
            return Err(Error::NotUnisolvent { condition: f64::INFINITY });
        }
        let mut a = basis.collocation(nodes.barycentrics());
        let scale: Vec<T> = (0..a.cols())
            .map(|k| {
                let norm = (0..a.rows()).map(|r| a[(r, k)] * a[(r, k)]).sum::<T>().sqrt();
                if norm > T::zero() { T::one() / norm } else { T::one() }
            })
            .collect();
        for r in 0..a.rows() {
            for (v, &s) in a.row_mut(r).iter_mut().zip(&scale) {
                *v *= s;
            }
        }
        let norm_a = a.norm_1();
        let qr = Qr::new(a);
        let limit = T::lit(MAX_CONDITION);
        let quick = qr.diag_ratio();
        if !(quick <= limit) {
            return Err(Error::NotUnisolvent { condition: quick.to_f64_lossy() });
        }
        let mut inverse = qr.inverse()?;
        let condition = norm_a * inverse.norm_1();
        if !(condition <= limit) {
            return Err(Error::NotUnisolvent { condition: condition.to_f64_lossy() });
        }
        // undo the column scaling: A⁻¹ = S (AS)⁻¹
        for (k, &s) in scale.iter().enumerate() {
            inverse.row_mut(k).iter_mut().for_each(|v| *v *= s);
        }
        Ok(Self { basis, inverse, condition })
    }

    /// 1-norm condition number of the column-equilibrated collocation matrix.
    pub fn condition(&self) -> T {
        self.condition
    }
}

impl<T: Scalar> Cardinals<T> for GeneralCardinals<T> {
    fn len(&self) -> usize {
        self.basis.len()
    }

    fn dim(&self) -> usize {
        self.basis.dim()
    }

    fn scratch_len(&self) -> usize {
        self.basis.len() + self.basis.scratch_len()
    }

    fn eval_barycentric(&self, lambda: &[T], out: &mut [T], scratch: &mut [T]) -> Result<()> {
        let n = self.basis.len();
        let (b, rest) = scratch.split_at_mut(n);
        self.basis.eval(lambda, b, rest);
        out.iter_mut().for_each(|v| *v = T::zero());
        // axpy over rows keeps the inner loop contiguous and vectorizable
        for (k, &bk) in b.iter().enumerate() {
            for (o, &c) in out.iter_mut().zip(self.inverse.row(k)) {
                *o += bk * c;
            }
        }
        Ok(())
    }
}

/// Cardinal values of the polynomial interpolant on `nodes`, at Cartesian `x`.
pub fn general_cardinals<T: Scalar>(nodes: &NodeFamily<T>, x: &[T]) -> Result<CardinalEval<T>> {
    let set = GeneralCardinals::new(nodes)?;
    let lambda = nodes.simplex.to_barycentric(x)?;
    set.eval(lambda.coords())
}
