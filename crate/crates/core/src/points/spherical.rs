//! Spherical Waldron points: square roots of the baryweights, normalized onto
//! the unit sphere in the positive octant, and their reflections.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::weights::Weight;

use super::{enumerate_indices, weight_levels, MultiIndex};

/// Components below this magnitude are treated as exact zeros when reflecting,
/// so octant-boundary points are not duplicated.
const DEDUP_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct SphericalPoint<T> {
    pub index: MultiIndex,
    pub xyz: [T; 3],
}

/// The positive-octant spherical Waldron points of one degree.
#[derive(Debug, Clone)]
pub struct SphericalSet<T> {
    pub degree: usize,
    pub points: Vec<SphericalPoint<T>>,
}

/// `(√w(α_1/n), √w(α_2/n), √w(α_3/n)) / √(Σ_i w(α_i/n))` for every `|α| = n`.
pub fn spherical_waldron_points<T: Scalar>(n: usize, w: &Weight<T>) -> Result<SphericalSet<T>> {
    if n == 0 {
        return Err(Error::Domain("spherical points need degree n ≥ 1".into()));
    }
    let levels = weight_levels(w, n);
    let points = enumerate_indices(n, 2)
        .into_iter()
        .map(|alpha| {
            let ws = [levels[alpha[0] as usize], levels[alpha[1] as usize], levels[alpha[2] as usize]];
            let norm = (ws[0] + ws[1] + ws[2]).sqrt();
            let xyz = ws.map(|v| v.sqrt() / norm);
            SphericalPoint { index: alpha, xyz }
        })
        .collect();
    Ok(SphericalSet { degree: n, points })
}

/// The octant set reflected through every sign pattern; `4n² + 2` points.
pub fn spherical_full_sphere<T: Scalar>(n: usize, w: &Weight<T>) -> Result<Vec<[T; 3]>> {
    let octant = spherical_waldron_points(n, w)?;
    let tol = T::lit(DEDUP_TOL);
    let mut out = Vec::with_capacity(4 * n * n + 2);
    for p in &octant.points {
        for signs in 0u8..8 {
            let mut q = p.xyz;
            let mut duplicate = false;
            for (axis, c) in q.iter_mut().enumerate() {
                if signs & (1 << axis) != 0 {
                    if c.abs() <= tol {
                        // flipping a zero component reproduces another pattern
                        duplicate = true;
                        break;
                    }
                    *c = -*c;
                }
            }
            if !duplicate {
                out.push(q);
            }
        }
    }
    Ok(out)
}
