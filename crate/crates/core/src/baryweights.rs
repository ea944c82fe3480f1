//! Baryweight coordinates.
//!
//! A point `θ` of the standard simplex `T_d` maps to barycentric coordinates
//! `λ_j = w(θ_j) + (1 - Σ_i w(θ_i)) / (d+1)`. Inverting means finding the
//! shift `c` with `H(c) = Σ_j w⁻¹(λ_j + c) = 1`; `H` is continuous and strictly
//! increasing, so bisection on `[-min λ, 1 - max λ]` always converges when a
//! solution exists.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::simplex::{Barycentric, Simplex};
use crate::weights::Weight;

/// Bisection steps on `H`; 60 halvings of a unit bracket reach `1e-18`.
const H_BISECTION_STEPS: usize = 60;

#[derive(Debug, Clone)]
pub struct BaryweightChart<T> {
    simplex: Simplex<T>,
    weight: Weight<T>,
    root_tol: T,
    centred: bool,
}

/// Result of inverting the chart.
#[derive(Debug, Clone, PartialEq)]
pub struct ChartInverse<T> {
    pub theta: Vec<T>,
    /// The shift `c` with `w(θ_j) = λ_j + c`.
    pub shift: T,
}

/// The sums `Σw(θ_j)` and `Σw⁻¹(θ_j)` with their bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumBounds<T> {
    pub sum_w: T,
    pub sum_winv: T,
    /// `(d+1) w(1/(d+1))`.
    pub lower_w: T,
    /// `(d+1) w⁻¹(1/(d+1))`.
    pub upper_winv: T,
}

impl<T: Scalar> BaryweightChart<T> {
    pub fn new(simplex: Simplex<T>, weight: Weight<T>) -> Self {
        let centred = simplex.is_centred();
        Self { simplex, weight, root_tol: T::default_tol(), centred }
    }

    pub fn with_root_tol(mut self, tol: T) -> Self {
        self.root_tol = tol;
        self
    }

    pub fn simplex(&self) -> &Simplex<T> {
        &self.simplex
    }

    pub fn weight(&self) -> &Weight<T> {
        &self.weight
    }

    pub fn dim(&self) -> usize {
        self.simplex.dim()
    }

    pub fn is_centred(&self) -> bool {
        self.centred
    }

    /// True when every point of the simplex is known to have baryweights.
    pub fn is_total(&self) -> bool {
        self.dim() <= 2 && self.weight.is_complementary()
    }

    fn check_theta(&self, theta: &[T]) -> Result<()> {
        let d = self.dim();
        if theta.len() != d + 1 {
            return Err(Error::DimensionMismatch { expected: d + 1, got: theta.len() });
        }
        let tol = T::tol(1e-10);
        let sum: T = theta.iter().copied().sum();
        if theta.iter().any(|&t| !(t >= -tol)) || (sum - T::one()).abs() > tol {
            return Err(Error::Domain(format!("θ = {theta:?} is not a point of T_{d}")));
        }
        Ok(())
    }

    /// `λ_j = w(θ_j) + (1 - Σ w(θ_i)) / (d+1)`.
    pub fn forward(&self, theta: &[T]) -> Result<Barycentric<T>> {
        self.check_theta(theta)?;
        let ws: Vec<T> = theta.iter().map(|&t| self.weight.value(t)).collect();
        let defect = (T::one() - ws.iter().copied().sum::<T>()) / T::from_usize_lossy(ws.len());
        Ok(Barycentric(ws.into_iter().map(|v| v + defect).collect()))
    }

    /// Cartesian point with baryweights `w(θ_j)`.
    pub fn forward_point(&self, theta: &[T]) -> Result<Vec<T>> {
        let lambda = self.forward(theta)?;
        self.simplex.from_barycentric(&lambda)
    }

    /// `H(c) = Σ_j w⁻¹(λ_j + c)`, arguments clamped to `[0, 1]`.
    pub fn h(&self, lambda: &[T], c: T) -> T {
        lambda.iter().map(|&l| self.weight.inverse_value(l + c)).sum()
    }

    /// Baryweight coordinates `θ` of the point with barycentrics `λ`.
    pub fn invert(&self, lambda: &Barycentric<T>) -> Result<ChartInverse<T>> {
        let d = self.dim();
        let l = lambda.coords();
        if l.len() != d + 1 {
            return Err(Error::DimensionMismatch { expected: d + 1, got: l.len() });
        }
        if !lambda.is_inside() {
            return Err(Error::Domain(format!("λ = {l:?} outside the simplex")));
        }
        let min = l.iter().copied().fold(T::infinity(), T::min);
        let max = l.iter().copied().fold(T::neg_infinity(), T::max);
        let (mut lo, mut hi) = (-min, T::one() - max);
        let h_lo = self.h(l, lo);
        let slack = T::tol(1e-12);
        if h_lo > T::one() + slack {
            return Err(Error::NotInImage { h_at_lower: h_lo.to_f64_lossy() });
        }
        if hi < lo {
            hi = lo;
        }
        for _ in 0..H_BISECTION_STEPS {
            if hi - lo <= self.root_tol * T::lit(1e-4) {
                break;
            }
            let mid = (lo + hi) * T::lit(0.5);
            if self.h(l, mid) < T::one() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let shift = (lo + hi) * T::lit(0.5);
        let theta = l.iter().map(|&v| self.weight.inverse_value(v + shift)).collect();
        Ok(ChartInverse { theta, shift })
    }

    /// Inverts a Cartesian point.
    pub fn invert_point(&self, x: &[T]) -> Result<ChartInverse<T>> {
        let lambda = self.simplex.to_barycentric(x)?;
        self.invert(&lambda)
    }
}

/// Evaluates the sum bounds `(d+1) w(1/(d+1)) ≤ Σ w(θ_j) ≤ 1` and
/// `1 ≤ Σ w⁻¹(θ_j) ≤ (d+1) w⁻¹(1/(d+1))`, failing if either is violated.
pub fn sum_bounds_check<T: Scalar>(w: &Weight<T>, theta: &[T]) -> Result<SumBounds<T>> {
    let tol = T::tol(1e-10);
    let sum: T = theta.iter().copied().sum();
    if theta.len() < 2 || theta.iter().any(|&t| !(t >= -tol)) || (sum - T::one()).abs() > tol {
        return Err(Error::Domain(format!("θ = {theta:?} is not a point of the standard simplex")));
    }
    let k = T::from_usize_lossy(theta.len());
    let bary = T::one() / k;
    let bounds = SumBounds {
        sum_w: theta.iter().map(|&t| w.value(t)).sum(),
        sum_winv: theta.iter().map(|&t| w.inverse_value(t)).sum(),
        lower_w: k * w.value(bary),
        upper_winv: k * w.inverse_value(bary),
    };
    let slack = T::tol(1e-12);
    if bounds.sum_w < bounds.lower_w - slack || bounds.sum_w > T::one() + slack {
        return Err(Error::PropertyViolation(format!(
            "Σw(θ) = {} outside [{}, 1]",
            bounds.sum_w, bounds.lower_w
        )));
    }
    if bounds.sum_winv < T::one() - slack || bounds.sum_winv > bounds.upper_winv + slack {
        return Err(Error::PropertyViolation(format!(
            "Σw⁻¹(θ) = {} outside [1, {}]",
            bounds.sum_winv, bounds.upper_winv
        )));
    }
    Ok(bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chart(w: Weight<f64>) -> BaryweightChart<f64> {
        BaryweightChart::new(Simplex::equilateral_2d(), w)
    }

    #[test]
    fn forward_examples() {
        let c = chart(Weight::cosine());
        assert_eq!(c.forward(&[1.0, 0.0, 0.0]).unwrap().0, vec![1.0, 0.0, 0.0]);
        let b = c.forward(&[1.0 / 3.0; 3]).unwrap();
        assert!(b.0.iter().all(|v| (v - 1.0 / 3.0).abs() < 1e-15));
        let m = c.forward(&[0.5, 0.5, 0.0]).unwrap();
        assert!((m.0[0] - 0.5).abs() < 1e-15 && (m.0[1] - 0.5).abs() < 1e-15 && m.0[2].abs() < 1e-15);
        assert!(c.forward(&[0.5, 0.6, 0.0]).is_err());
    }

    #[test]
    fn invert_examples() {
        let c = chart(Weight::cosine());
        let inv = c.invert(&Barycentric(vec![0.0, 1.0, 0.0])).unwrap();
        assert!((inv.theta[1] - 1.0).abs() < 1e-12 && inv.theta[0].abs() < 1e-12);
        let inv = c.invert(&Barycentric::barycentre(2)).unwrap();
        assert!(inv.theta.iter().all(|t| (t - 1.0 / 3.0).abs() < 1e-10));
        let w = Weight::<f64>::cosine();
        assert!((inv.shift - (w.value(1.0 / 3.0) - 1.0 / 3.0)).abs() < 1e-12);

        let lambda = Barycentric(vec![0.1, 0.2, 0.7]);
        let inv = c.invert(&lambda).unwrap();
        assert!((c.h(&lambda.0, inv.shift) - 1.0).abs() < 1e-12);
        let back = c.forward(&inv.theta).unwrap();
        for (a, b) in back.0.iter().zip(&lambda.0) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn not_in_image_is_reported_in_three_dimensions() {
        // the centroid of a face of the tetrahedron lies outside the image of the cosine chart
        let c = BaryweightChart::new(Simplex::<f64>::centred_3d(), Weight::cosine());
        let err = c.invert(&Barycentric(vec![1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.0])).unwrap_err();
        match err {
            Error::NotInImage { h_at_lower } => assert!(h_at_lower > 1.0),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn sum_bounds_examples() {
        let w = Weight::<f64>::cosine();
        let v = sum_bounds_check(&w, &[0.0, 1.0, 0.0]).unwrap();
        assert!((v.sum_w - 1.0).abs() < 1e-15 && (v.sum_winv - 1.0).abs() < 1e-15);
        let v = sum_bounds_check(&w, &[1.0 / 3.0; 3]).unwrap();
        assert!((v.sum_w - v.lower_w).abs() < 1e-15);
        assert!((v.sum_winv - v.upper_winv).abs() < 1e-15);
        let v = sum_bounds_check(&w, &[0.5, 0.3, 0.2]).unwrap();
        assert!((v.lower_w - 0.75).abs() < 1e-15);
        assert!((v.sum_w - 0.801599).abs() < 1e-6);
        assert!(sum_bounds_check(&w, &[0.5, 0.6]).is_err());
    }
}
