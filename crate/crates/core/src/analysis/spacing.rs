//! Spacing of the spherical Waldron points.
//!
//! `X(θ) = (√w(θ_1), √w(θ_2), √w(θ_3)) / √W` with `W = Σ w(θ_i)` maps `T_2`
//! onto the positive octant of the sphere. Neighbouring spherical points
//! differ by roughly `D(θ)/n` where `D` is the length of the derivative of `X`
//! along the direction `(1, -1, 0)`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::points::{MultiIndex, SphericalSet};
use crate::scalar::Scalar;
use crate::simplex::great_circle;
use crate::weights::Weight;

/// Step of the central difference used for the direct value of `D²`.
pub const FD_STEP: f64 = 1e-6;

/// `(2√3 + 3) / 3`, the supremum of `D² / (π/2)²` for the cosine weight.
pub fn spacing_upper_bound() -> f64 {
    (2.0 * 3f64.sqrt() + 3.0) / 3.0
}

/// `D²` at one point, by closed form and by differencing `X`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpacingValue<T> {
    /// `(π/2)² (1 + w_3 (1 - w_1 - w_2)) / W²`; exact only for the cosine weight.
    pub closed_form: T,
    pub finite_difference: T,
}

impl<T: Scalar> SpacingValue<T> {
    pub fn relative_gap(&self) -> T {
        (self.closed_form - self.finite_difference).abs() / self.closed_form.abs()
    }
}

fn check_theta<T: Scalar>(theta: &[T]) -> Result<()> {
    let tol = T::tol(1e-10);
    let sum: T = theta.iter().copied().sum();
    if theta.len() != 3 || theta.iter().any(|&t| !(t >= -tol)) || (sum - T::one()).abs() > tol {
        return Err(Error::Domain(format!("θ = {theta:?} is not a point of T_2")));
    }
    Ok(())
}

/// `X(θ)` for `θ` with three non-negative entries.
pub fn sphere_map<T: Scalar>(w: &Weight<T>, theta: &[T]) -> Result<[T; 3]> {
    let ws = [w.value(theta[0]), w.value(theta[1]), w.value(theta[2])];
    let total = ws[0] + ws[1] + ws[2];
    if !(total > T::zero()) {
        return Err(Error::Domain(format!("Σw(θ) vanishes at θ = {theta:?}")));
    }
    let norm = total.sqrt();
    Ok(ws.map(|v| v.sqrt() / norm))
}

fn closed_form<T: Scalar>(w: &Weight<T>, theta: &[T]) -> Result<T> {
    let (w1, w2, w3) = (w.value(theta[0]), w.value(theta[1]), w.value(theta[2]));
    let total = w1 + w2 + w3;
    if !(total > T::zero()) {
        return Err(Error::Domain(format!("Σw(θ) vanishes at θ = {theta:?}")));
    }
    let q = T::FRAC_PI_2();
    Ok(q * q * (T::one() + w3 * (T::one() - w1 - w2)) / (total * total))
}

/// `D²(θ)` for `θ ∈ T_2`.
///
/// The difference quotient is one-sided at the edges `θ_1 = 0` or `θ_2 = 0`.
pub fn spacing_d<T: Scalar>(w: &Weight<T>, theta: &[T]) -> Result<SpacingValue<T>> {
    check_theta(theta)?;
    let cf = closed_form(w, theta)?;
    let h = T::lit(FD_STEP);
    let shifted = |s: T| [theta[0] + s, theta[1] - s, theta[2]];
    let plus_room = theta[1].min(h);
    let minus_room = theta[0].min(h);
    if plus_room + minus_room <= T::zero() {
        return Err(Error::Domain(format!("no room to differentiate at θ = {theta:?}")));
    }
    let a = sphere_map(w, &shifted(plus_room))?;
    let b = sphere_map(w, &shifted(-minus_room))?;
    let span = plus_room + minus_room;
    let fd: T = a.iter().zip(&b).map(|(&p, &m)| ((p - m) / span).powi(2)).sum();
    Ok(SpacingValue { closed_form: cf, finite_difference: fd })
}

/// Min/max of `D²/(π/2)²` over the lattice `β/M` of `T_2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacingExtrema<T> {
    pub grid: usize,
    pub min_ratio: T,
    pub max_ratio: T,
    pub argmin: [T; 3],
    pub argmax: [T; 3],
}

/// Spacing statistics of one weight: the `D` extrema and, when a point set
/// is supplied, its neighbour distances.
#[derive(Debug, Clone, PartialEq)]
pub struct SpacingReport<T> {
    pub n: Option<usize>,
    pub weight: String,
    pub extrema: Option<SpacingExtrema<T>>,
    pub neighbors: Option<NeighborSpacing<T>>,
}

/// Lattice scan of `D²/(π/2)²`, closed lattice including the edges.
pub fn spacing_extrema<T: Scalar>(w: &Weight<T>, m: usize) -> Result<SpacingExtrema<T>> {
    if m == 0 {
        return Err(Error::Domain("grid resolution must be at least 1".into()));
    }
    let q = T::lit(FRAC_PI_2 * FRAC_PI_2);
    let inv = T::one() / T::from_usize_lossy(m);
    let mut best = SpacingExtrema {
        grid: m,
        min_ratio: T::infinity(),
        max_ratio: T::neg_infinity(),
        argmin: [T::zero(); 3],
        argmax: [T::zero(); 3],
    };
    for i in 0..=m {
        for j in 0..=m - i {
            let theta = [
                T::from_usize_lossy(i) * inv,
                T::from_usize_lossy(j) * inv,
                T::from_usize_lossy(m - i - j) * inv,
            ];
            let r = closed_form(w, &theta)? / q;
            if r < best.min_ratio {
                best.min_ratio = r;
                best.argmin = theta;
            }
            if r > best.max_ratio {
                best.max_ratio = r;
                best.argmax = theta;
            }
        }
    }
    Ok(best)
}

/// Great-circle distances between neighbouring spherical points: indices that
/// differ by `+1` in one entry and `-1` in another.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborSpacing<T> {
    pub pairs: usize,
    pub min_distance: T,
    pub max_distance: T,
    /// Distances divided by `π/(2n)`.
    pub min_ratio: T,
    pub max_ratio: T,
    pub closest: (MultiIndex, MultiIndex),
    pub farthest: (MultiIndex, MultiIndex),
}

pub fn neighbor_spacing<T: Scalar>(set: &SphericalSet<T>) -> Result<NeighborSpacing<T>> {
    let n = set.degree;
    if n < 2 {
        return Err(Error::Domain("neighbour spacing needs degree n ≥ 2".into()));
    }
    let lookup: std::collections::HashMap<&[u32], usize> =
        set.points.iter().enumerate().map(|(k, p)| (p.index.entries(), k)).collect();
    let unit = T::FRAC_PI_2() / T::from_usize_lossy(n);
    let mut out: Option<NeighborSpacing<T>> = None;
    for p in &set.points {
        for i in 0..3 {
            for j in (i + 1)..3 {
                if p.index[j] == 0 {
                    continue;
                }
                let mut other = p.index.entries().to_vec();
                other[i] += 1;
                other[j] -= 1;
                let q = &set.points[lookup[other.as_slice()]];
                let dist = great_circle(&p.xyz, &q.xyz);
                let pair = (p.index.clone(), q.index.clone());
                match &mut out {
                    None => {
                        out = Some(NeighborSpacing {
                            pairs: 1,
                            min_distance: dist,
                            max_distance: dist,
                            min_ratio: dist / unit,
                            max_ratio: dist / unit,
                            closest: pair.clone(),
                            farthest: pair,
                        })
                    }
                    Some(s) => {
                        s.pairs += 1;
                        if dist < s.min_distance {
                            s.min_distance = dist;
                            s.min_ratio = dist / unit;
                            s.closest = pair.clone();
                        }
                        if dist > s.max_distance {
                            s.max_distance = dist;
                            s.max_ratio = dist / unit;
                            s.farthest = pair;
                        }
                    }
                }
            }
        }
    }
    out.ok_or_else(|| Error::Domain("no neighbouring pairs".into()))
}

/// Euclidean distance from every point to its nearest other point, in input order.
pub fn nearest_neighbor_distances<T: Scalar>(points: &[[T; 3]]) -> Vec<T> {
    points
        .iter()
        .enumerate()
        .map(|(a, p)| {
            points
                .iter()
                .enumerate()
                .filter(|&(b, _)| b != a)
                .map(|(_, q)| p.iter().zip(q).map(|(&x, &y)| (x - y) * (x - y)).sum::<T>().sqrt())
                .fold(T::infinity(), T::min)
        })
        .collect()
}

/// Full report for the cosine-style analysis at degree `n` and lattice `m`.
pub fn spacing_report<T: Scalar>(w: &Weight<T>, n: Option<usize>, m: usize) -> Result<SpacingReport<T>> {
    let extrema = Some(spacing_extrema(w, m)?);
    let neighbors = match n {
        Some(n) => Some(neighbor_spacing(&crate::points::spherical_waldron_points(n, w)?)?),
        None => None,
    };
    Ok(SpacingReport { n, weight: w.name(), extrema, neighbors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::spherical_waldron_points;

    #[test]
    fn edge_value_is_quarter_pi_squared() {
        let w = Weight::<f64>::cosine();
        for t in [0.1, 0.3, 0.5] {
            let v = spacing_d(&w, &[t, 1.0 - t, 0.0]).unwrap();
            assert!((v.closed_form - FRAC_PI_2 * FRAC_PI_2).abs() < 1e-12);
            assert!(v.relative_gap() < 1e-6);
        }
    }

    #[test]
    fn closed_form_matches_differences() {
        let w = Weight::<f64>::cosine();
        for theta in [[0.4, 0.4, 0.2], [0.2, 0.3, 0.5], [0.05, 0.05, 0.9], [1.0 / 3.0; 3]] {
            let v = spacing_d(&w, &theta).unwrap();
            assert!(v.relative_gap() < 1e-6, "{theta:?}: {v:?}");
        }
    }

    #[test]
    fn critical_point_attains_bound() {
        // √w(θ_3) = √3 - 1 with θ_1 = θ_2
        let w = Weight::<f64>::cosine();
        let t3 = w.inverse_value(4.0 - 2.0 * 3f64.sqrt());
        let theta = [(1.0 - t3) / 2.0, (1.0 - t3) / 2.0, t3];
        let v = spacing_d(&w, &theta).unwrap();
        assert!((v.closed_form / (FRAC_PI_2 * FRAC_PI_2) - spacing_upper_bound()).abs() < 1e-10);
    }

    #[test]
    fn extrema_on_coarse_grid() {
        let e = spacing_extrema(&Weight::<f64>::cosine(), 300).unwrap();
        assert!((e.min_ratio - 1.0).abs() < 1e-12);
        assert!(e.max_ratio <= spacing_upper_bound() + 1e-12);
        assert!(e.max_ratio > spacing_upper_bound() - 1e-2);
    }

    #[test]
    fn neighbor_examples() {
        let w = Weight::<f64>::cosine();
        let s = neighbor_spacing(&spherical_waldron_points(2, &w).unwrap()).unwrap();
        assert_eq!(s.pairs, 9);
        assert!((s.min_ratio - 1.0).abs() < 1e-12);
        let s = neighbor_spacing(&spherical_waldron_points(20, &w).unwrap()).unwrap();
        assert!(s.min_ratio >= 0.93 && s.max_ratio <= 1.55, "{s:?}");
        assert!(neighbor_spacing(&spherical_waldron_points(1, &w).unwrap()).is_err());
    }

    #[test]
    fn vertex_with_zero_weight_sum_rejected() {
        let w = Weight::<f64>::cosine();
        assert!(spacing_d(&w, &[0.0, 0.0, 0.0]).is_err());
    }
}
