//! Allowable weight functions `w: [0,1] -> [0,1]`.
//!
//! A weight is built either in closed form (identity, cosine, piecewise
//! quadratic), from a non-decreasing density `F` on `[0, 1/2]` through
//! `w(x) = ∫_0^x F̃` with the symmetric extension `F̃(t) = F(1 - t)` on
//! `(1/2, 1]`, or as a convex combination of two weights.
//!
//! Density-backed weights cache a cubic Hermite spline of the antiderivative
//! on 4097 Chebyshev-spaced nodes of `[0, 1/2]`; the Hermite slopes are the
//! exact density values. For `x > 1/2` the value is `1 - w(1 - x)`, which is
//! what the symmetric extension integrates to when `∫_0^{1/2} F = 1/2`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numeric::{adaptive_simpson, hermite, hermite_derivative, newton_bracketed};
use crate::scalar::Scalar;

/// Number of spline intervals used for density-backed weights.
const SPLINE_INTERVALS: usize = 4096;

/// Absolute tolerance for the adaptive quadrature of densities.
const QUADRATURE_TOL: f64 = 1e-12;

/// Maximum tolerated `|∫_0^{1/2} F - 1/2|` before a density is rejected.
const NORMALIZATION_TOL: f64 = 1e-8;

/// A non-negative, non-decreasing density on `[0, 1/2]`.
#[derive(Clone)]
pub struct Density<T> {
    f: Arc<dyn Fn(T) -> T + Send + Sync>,
    scale: T,
    label: String,
}

impl<T: fmt::Debug> fmt::Debug for Density<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Density").field("label", &self.label).field("scale", &self.scale).finish()
    }
}

impl<T: Scalar> Density<T> {
    /// Wraps a density function. With `normalize` the function is rescaled so
    /// that `∫_0^{1/2} F = 1/2`; otherwise a mismatch beyond `1e-8` is an error.
    pub fn from_fn<F>(f: F, normalize: bool) -> Result<Self>
    where
        F: Fn(T) -> T + Send + Sync + 'static,
    {
        Self::build(Arc::new(f), normalize, "density".to_string())
    }

    /// Piecewise-linear density through the samples `(t_k, F(t_k))`.
    ///
    /// Samples must be sorted, start at `t = 0` and end at `t = 1/2`.
    pub fn from_samples(ts: Vec<T>, fs: Vec<T>, normalize: bool) -> Result<Self> {
        if ts.len() != fs.len() || ts.len() < 2 {
            return Err(Error::InvalidDensity("need at least two (t, F) samples of equal length".into()));
        }
        let tol = T::tol(1e-12);
        if ts[0].abs() > tol || (ts[ts.len() - 1] - T::lit(0.5)).abs() > tol {
            return Err(Error::InvalidDensity("samples must span exactly [0, 1/2]".into()));
        }
        if ts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidDensity("sample abscissae must be strictly increasing".into()));
        }
        if fs.iter().any(|&v| v < T::zero() || !v.is_finite()) {
            return Err(Error::InvalidDensity("density must be finite and non-negative".into()));
        }
        if fs.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::InvalidDensity("density must be non-decreasing".into()));
        }
        let f = move |t: T| {
            let k = ts.partition_point(|&x| x <= t).clamp(1, ts.len() - 1);
            let (t0, t1) = (ts[k - 1], ts[k]);
            let s = ((t - t0) / (t1 - t0)).max(T::zero()).min(T::one());
            fs[k - 1] + (fs[k] - fs[k - 1]) * s
        };
        Self::build(Arc::new(f), normalize, "samples".to_string())
    }

    fn build(f: Arc<dyn Fn(T) -> T + Send + Sync>, normalize: bool, label: String) -> Result<Self> {
        let probe = |t: T| f(t);
        let integral = adaptive_simpson(&probe, T::zero(), T::lit(0.5), T::tol(QUADRATURE_TOL));
        let half = T::lit(0.5);
        let scale = if normalize {
            if !(integral > T::zero()) {
                return Err(Error::InvalidDensity("density integrates to zero".into()));
            }
            half / integral
        } else {
            if (integral - half).abs() > T::tol(NORMALIZATION_TOL) {
                return Err(Error::NotNormalized { integral: integral.to_f64_lossy() });
            }
            T::one()
        };
        Ok(Self { f, scale, label })
    }

    /// The (normalized) density at `t ∈ [0, 1/2]`.
    #[inline]
    pub fn value(&self, t: T) -> T {
        (self.f)(t) * self.scale
    }
}

/// Density-backed weight with its cached antiderivative spline.
#[derive(Debug)]
struct DensityWeight<T> {
    density: Density<T>,
    nodes: Vec<T>,
    values: Vec<T>,
    slopes: Vec<T>,
}

impl<T: Scalar> DensityWeight<T> {
    fn new(density: Density<T>) -> Result<Self> {
        let m = SPLINE_INTERVALS;
        let pi = T::PI();
        let quarter = T::lit(0.25);
        let nodes: Vec<T> = (0..=m)
            .map(|k| quarter * (T::one() - (pi * T::from_usize_lossy(k) / T::from_usize_lossy(m)).cos()))
            .collect();
        let slopes: Vec<T> = nodes.iter().map(|&t| density.value(t)).collect();
        if slopes.iter().any(|&v| v < T::zero() || !v.is_finite()) {
            return Err(Error::InvalidDensity("density must be finite and non-negative".into()));
        }
        if slopes.windows(2).any(|w| w[1] < w[0] - T::tol(1e-12) * w[0].abs().max(T::one())) {
            return Err(Error::InvalidDensity("density must be non-decreasing".into()));
        }
        let tol = T::tol(QUADRATURE_TOL) / T::from_usize_lossy(m);
        let g = |t: T| density.value(t);
        let mut values = Vec::with_capacity(m + 1);
        let mut acc = T::zero();
        values.push(acc);
        for k in 0..m {
            acc += adaptive_simpson(&g, nodes[k], nodes[k + 1], tol);
            values.push(acc);
        }
        Ok(Self { density, nodes, values, slopes })
    }

    /// `∫_0^x F` for `x ∈ [0, 1/2]`.
    fn half_eval(&self, x: T) -> T {
        let m = SPLINE_INTERVALS;
        let x = x.max(T::zero()).min(T::lit(0.5));
        // nodes are x_k = (1 - cos(kπ/m)) / 4
        let arg = (T::one() - T::lit(4.0) * x).max(-T::one()).min(T::one());
        let pos = arg.acos() / T::PI() * T::from_usize_lossy(m);
        let mut k = pos.floor().to_usize().unwrap_or(0).min(m - 1);
        while k > 0 && self.nodes[k] > x {
            k -= 1;
        }
        while k + 1 < m && self.nodes[k + 1] < x {
            k += 1;
        }
        hermite(
            x,
            self.nodes[k],
            self.nodes[k + 1],
            self.values[k],
            self.values[k + 1],
            self.slopes[k],
            self.slopes[k + 1],
        )
    }

    fn eval(&self, x: T) -> T {
        let half = T::lit(0.5);
        if x <= half {
            self.half_eval(x)
        } else {
            T::one() - self.half_eval(T::one() - x)
        }
    }

    /// `w⁻¹(y)`: binary search over the cached values, then bisection on one cubic piece.
    fn inverse(&self, y: T, tol: T) -> T {
        let half = T::lit(0.5);
        if y > half {
            return T::one() - self.inverse(T::one() - y, tol);
        }
        let m = SPLINE_INTERVALS;
        let k = self.values.partition_point(|&v| v < y).clamp(1, m) - 1;
        let piece = |x: T| {
            hermite(x, self.nodes[k], self.nodes[k + 1], self.values[k], self.values[k + 1], self.slopes[k], self.slopes[k + 1])
        };
        let slope = |x: T| {
            hermite_derivative(x, self.nodes[k], self.nodes[k + 1], self.values[k], self.values[k + 1], self.slopes[k], self.slopes[k + 1])
        };
        newton_bracketed(piece, slope, y, self.nodes[k], self.nodes[k + 1], tol, 200)
    }

    fn derivative(&self, x: T) -> T {
        let half = T::lit(0.5);
        if x <= half {
            self.density.value(x)
        } else {
            self.density.value(T::one() - x)
        }
    }
}

/// Which closed form or construction backs a [`Weight`].
#[derive(Debug, Clone)]
pub enum WeightKind<T> {
    /// `w(x) = x`; reproduces the uniform lattice.
    Identity,
    /// `w(x) = (1 - cos(πx)) / 2`; reproduces Chebyshev-Lobatto spacing on edges.
    Cosine,
    /// `2x²` on `[0, 1/2]`, `1 - 2(1-x)²` on `[1/2, 1]`; density `F(t) = 4t`.
    QuadraticPiecewise,
    /// `∫_0^x F̃` for a user density.
    FromDensity(Arc<DensityWeightHandle<T>>),
    /// `t·w1 + (1-t)·w0`.
    Convex { t: T, w0: Box<Weight<T>>, w1: Box<Weight<T>> },
}

/// Opaque handle to a density-backed weight and its spline cache.
#[derive(Debug)]
pub struct DensityWeightHandle<T>(DensityWeight<T>);

/// An allowable weight function on `[0, 1]`.
#[derive(Debug, Clone)]
pub struct Weight<T> {
    kind: WeightKind<T>,
    eval_tol: T,
}

impl<T: Scalar> Weight<T> {
    fn with_kind(kind: WeightKind<T>) -> Self {
        Self { kind, eval_tol: T::default_tol() }
    }

    pub fn identity() -> Self {
        Self::with_kind(WeightKind::Identity)
    }

    pub fn cosine() -> Self {
        Self::with_kind(WeightKind::Cosine)
    }

    pub fn quadratic() -> Self {
        Self::with_kind(WeightKind::QuadraticPiecewise)
    }

    pub fn from_density(density: Density<T>) -> Result<Self> {
        let dw = DensityWeight::new(density)?;
        Ok(Self::with_kind(WeightKind::FromDensity(Arc::new(DensityWeightHandle(dw)))))
    }

    /// `t·w1 + (1-t)·w0` for `t ∈ [0, 1]`.
    pub fn convex(t: T, w0: Weight<T>, w1: Weight<T>) -> Result<Self> {
        if !(t >= T::zero() && t <= T::one()) {
            return Err(Error::Domain(format!("convex parameter t = {t} outside [0, 1]")));
        }
        Ok(Self::with_kind(WeightKind::Convex { t, w0: Box::new(w0), w1: Box::new(w1) }))
    }

    pub fn with_tolerance(mut self, eval_tol: T) -> Self {
        self.eval_tol = eval_tol;
        self
    }

    pub fn kind(&self) -> &WeightKind<T> {
        &self.kind
    }

    pub fn eval_tol(&self) -> T {
        self.eval_tol
    }

    /// True for weights that satisfy `w(x) + w(1 - x) = 1` by construction.
    pub fn is_complementary(&self) -> bool {
        match &self.kind {
            WeightKind::Convex { w0, w1, .. } => w0.is_complementary() && w1.is_complementary(),
            _ => true,
        }
    }

    /// True for weights built from a density (closed forms included).
    pub fn is_density_constructed(&self) -> bool {
        !matches!(self.kind, WeightKind::Convex { .. })
    }

    /// Short name, also the CLI spelling for the built-ins.
    pub fn name(&self) -> String {
        match &self.kind {
            WeightKind::Identity => "identity".into(),
            WeightKind::Cosine => "cosine".into(),
            WeightKind::QuadraticPiecewise => "quad".into(),
            WeightKind::FromDensity(h) => format!("density:{}", h.0.density.label),
            WeightKind::Convex { t, w0, w1 } => format!("convex:t={t}:{}:{}", w0.name(), w1.name()),
        }
    }

    fn check_unit(&self, x: T, what: &str) -> Result<T> {
        if !(x >= -self.eval_tol && x <= T::one() + self.eval_tol) {
            return Err(Error::Domain(format!("{what} = {x} outside [0, 1]")));
        }
        Ok(x.max(T::zero()).min(T::one()))
    }

    /// `w(x)` with domain checking.
    pub fn eval(&self, x: T) -> Result<T> {
        let x = self.check_unit(x, "x")?;
        Ok(self.value(x))
    }

    /// `w(x)` for `x` already known to lie in `[0, 1]`; the argument is clamped.
    pub fn value(&self, x: T) -> T {
        let x = x.max(T::zero()).min(T::one());
        let half = T::lit(0.5);
        match &self.kind {
            WeightKind::Identity => x,
            WeightKind::Cosine => {
                // sin²(πx/2) is accurate near 0, the cosine form near 1
                if x <= half {
                    let s = (T::FRAC_PI_2() * x).sin();
                    s * s
                } else {
                    let c = (T::FRAC_PI_2() * (T::one() - x)).sin();
                    T::one() - c * c
                }
            }
            WeightKind::QuadraticPiecewise => {
                let two = T::lit(2.0);
                if x <= half {
                    two * x * x
                } else {
                    let y = T::one() - x;
                    T::one() - two * y * y
                }
            }
            WeightKind::FromDensity(h) => h.0.eval(x),
            WeightKind::Convex { t, w0, w1 } => *t * w1.value(x) + (T::one() - *t) * w0.value(x),
        }
    }

    /// `w⁻¹(y)` with domain checking.
    pub fn eval_inverse(&self, y: T) -> Result<T> {
        let y = self.check_unit(y, "y")?;
        Ok(self.inverse_value(y))
    }

    /// `w⁻¹(y)` for `y` already known to lie in `[0, 1]`; the argument is clamped.
    pub fn inverse_value(&self, y: T) -> T {
        let y = y.max(T::zero()).min(T::one());
        let half = T::lit(0.5);
        match &self.kind {
            WeightKind::Identity => y,
            WeightKind::Cosine => {
                // x = (2/π) asin(√y), mirrored for accuracy near 1
                if y <= half {
                    y.sqrt().asin() / T::FRAC_PI_2()
                } else {
                    T::one() - (T::one() - y).sqrt().asin() / T::FRAC_PI_2()
                }
            }
            WeightKind::QuadraticPiecewise => {
                if y <= half {
                    (y * half).sqrt()
                } else {
                    T::one() - ((T::one() - y) * half).sqrt()
                }
            }
            WeightKind::FromDensity(h) => h.0.inverse(y, self.eval_tol),
            _ => {
                if y == T::zero() {
                    return T::zero();
                }
                if y == T::one() {
                    return T::one();
                }
                newton_bracketed(|x| self.value(x), |x| self.derivative_value(x), y, T::zero(), T::one(), self.eval_tol, 200)
            }
        }
    }

    /// `w'(x)`; for density weights this is `F̃(x)`.
    pub fn eval_derivative(&self, x: T) -> Result<T> {
        let x = self.check_unit(x, "x")?;
        Ok(self.derivative_value(x))
    }

    fn derivative_value(&self, x: T) -> T {
        let half = T::lit(0.5);
        match &self.kind {
            WeightKind::Identity => T::one(),
            WeightKind::Cosine => T::FRAC_PI_2() * (T::PI() * x).sin(),
            WeightKind::QuadraticPiecewise => {
                let four = T::lit(4.0);
                if x <= half {
                    four * x
                } else {
                    four * (T::one() - x)
                }
            }
            WeightKind::FromDensity(h) => h.0.derivative(x),
            WeightKind::Convex { t, w0, w1 } => {
                *t * w1.derivative_value(x) + (T::one() - *t) * w0.derivative_value(x)
            }
        }
    }

    fn check_theta(&self, theta: &[T], exact_sum: bool) -> Result<T> {
        if theta.iter().any(|&t| !(t >= -self.eval_tol)) {
            return Err(Error::Domain("θ components must be non-negative".into()));
        }
        let sum: T = theta.iter().copied().sum();
        let bad = if exact_sum {
            (sum - T::one()).abs() > T::tol(1e-12).max(self.eval_tol)
        } else {
            sum > T::one() + self.eval_tol
        };
        if bad {
            return Err(Error::Domain(format!("Σθ = {sum} violates the simplex constraint")));
        }
        Ok(sum.min(T::one()))
    }

    /// `Σ w(θ_j) ≤ w(Σ θ_j)` for `θ_j ≥ 0`, `Σ θ_j ≤ 1`.
    pub fn check_superadditive(&self, theta: &[T]) -> Result<bool> {
        let sum = self.check_theta(theta, false)?;
        let lhs: T = theta.iter().map(|&t| self.value(t)).sum();
        Ok(lhs <= self.value(sum) + self.eval_tol)
    }

    /// The defining inequality of an allowable weight: `Σ w(θ_j) ≤ 1` on `Σ θ_j = 1`.
    pub fn check_partition_bound(&self, theta: &[T]) -> Result<bool> {
        self.check_theta(theta, true)?;
        let lhs: T = theta.iter().map(|&t| self.value(t)).sum();
        Ok(lhs <= T::one() + self.eval_tol)
    }

    /// `|w(x) + w(1 - x) - 1| ≤ tol`.
    pub fn check_complementary(&self, x: T, tol: T) -> Result<bool> {
        let x = self.check_unit(x, "x")?;
        Ok((self.value(x) + self.value(T::one() - x) - T::one()).abs() <= tol)
    }

    /// `w(x) ≤ x` on `[0, 1/2]` and `w(x) ≥ x` on `[1/2, 1]`.
    pub fn check_diagonal_bound(&self, x: T) -> Result<bool> {
        let x = self.check_unit(x, "x")?;
        let v = self.value(x);
        Ok(if x <= T::lit(0.5) { v <= x + self.eval_tol } else { v >= x - self.eval_tol })
    }
}
