//! Nelder-Mead simplex minimization for small, derivative-free problems.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy)]
pub struct NelderMeadOptions<T> {
    pub max_iterations: usize,
    /// Stop when every vertex is within `x_tol` of the best one (max norm).
    pub x_tol: T,
    /// ... and the objective spread is below `f_tol`.
    pub f_tol: T,
    /// Edge length of the initial simplex.
    pub initial_step: T,
    /// Restart from the best point until a restart no longer improves it.
    pub max_restarts: usize,
}

impl<T: Scalar> Default for NelderMeadOptions<T> {
    fn default() -> Self {
        Self {
            max_iterations: 20_000,
            x_tol: T::tol(1e-11),
            f_tol: T::tol(1e-15),
            initial_step: T::lit(0.05),
            max_restarts: 8,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimum<T> {
    pub x: Vec<T>,
    pub value: T,
    pub iterations: usize,
}

/// Minimizes `f` starting from `x0`. `f` may return `+inf` to reject points
/// (an extreme barrier for constraints).
pub fn nelder_mead<T, F>(f: F, x0: &[T], opts: &NelderMeadOptions<T>) -> Result<Minimum<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T,
{
    let mut best = run(&f, x0, opts.initial_step, opts)?;
    let mut step = opts.initial_step;
    for _ in 0..opts.max_restarts {
        step *= T::lit(0.25);
        let again = run(&f, &best.x, step.max(opts.x_tol * T::lit(100.0)), opts)?;
        let improved = again.value < best.value - opts.f_tol;
        let iterations = best.iterations + again.iterations;
        if again.value <= best.value {
            best = Minimum { iterations, ..again };
        } else {
            best.iterations = iterations;
        }
        if !improved {
            break;
        }
    }
    Ok(best)
}

fn run<T, F>(f: &F, x0: &[T], step: T, opts: &NelderMeadOptions<T>) -> Result<Minimum<T>>
where
    T: Scalar,
    F: Fn(&[T]) -> T,
{
    let n = x0.len();
    let (alpha, gamma, rho, sigma) = (T::one(), T::lit(2.0), T::lit(0.5), T::lit(0.5));
    let mut pts: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    pts.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        // step toward the interior keeps ordered-radius problems feasible
        p[i] -= step * T::lit(0.5);
        pts.push(p);
    }
    let mut vals: Vec<T> = pts.iter().map(|p| f(p)).collect();
    if !vals[0].is_finite() {
        return Err(Error::Domain("Nelder-Mead start point is infeasible".into()));
    }
    // infeasible initial vertices are pulled toward the start
    for i in 1..=n {
        let mut tries = 0;
        while !vals[i].is_finite() && tries < 60 {
            for j in 0..n {
                pts[i][j] = x0[j] + (pts[i][j] - x0[j]) * T::lit(0.5);
            }
            vals[i] = f(&pts[i]);
            tries += 1;
        }
    }

    let mut iterations = 0;
    loop {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| vals[a].partial_cmp(&vals[b]).unwrap_or(std::cmp::Ordering::Equal));
        pts = order.iter().map(|&i| pts[i].clone()).collect();
        vals = order.iter().map(|&i| vals[i]).collect();

        let spread_x = pts[1..]
            .iter()
            .flat_map(|p| p.iter().zip(&pts[0]).map(|(&a, &b)| (a - b).abs()))
            .fold(T::zero(), T::max);
        let spread_f = (vals[n] - vals[0]).abs();
        if spread_x <= opts.x_tol && spread_f <= opts.f_tol.max(vals[0].abs() * T::epsilon() * T::lit(4.0)) {
            return Ok(Minimum { x: pts[0].clone(), value: vals[0], iterations });
        }
        if spread_x <= opts.x_tol * T::lit(1e-3) {
            // collapsed simplex on a flat objective
            return Ok(Minimum { x: pts[0].clone(), value: vals[0], iterations });
        }
        if iterations >= opts.max_iterations {
            return Err(Error::NoConvergence {
                iterations,
                best: pts[0].iter().map(|v| v.to_f64_lossy()).collect(),
                objective: vals[0].to_f64_lossy(),
            });
        }
        iterations += 1;

        let inv_n = T::one() / T::from_usize_lossy(n);
        let centroid: Vec<T> =
            (0..n).map(|j| pts[..n].iter().map(|p| p[j]).sum::<T>() * inv_n).collect();
        let toward = |coef: T| -> Vec<T> {
            centroid.iter().zip(&pts[n]).map(|(&c, &w)| c + coef * (w - c)).collect()
        };

        let xr = toward(-alpha);
        let fr = f(&xr);
        if fr < vals[0] {
            let xe = toward(-alpha * gamma);
            let fe = f(&xe);
            if fe < fr {
                pts[n] = xe;
                vals[n] = fe;
            } else {
                pts[n] = xr;
                vals[n] = fr;
            }
            continue;
        }
        if fr < vals[n - 1] {
            pts[n] = xr;
            vals[n] = fr;
            continue;
        }
        let (xc, fc) = if fr < vals[n] {
            let xc = toward(-alpha * rho);
            let fc = f(&xc);
            (xc, fc)
        } else {
            let xc = toward(rho);
            let fc = f(&xc);
            (xc, fc)
        };
        if fc < vals[n].min(fr) {
            pts[n] = xc;
            vals[n] = fc;
            continue;
        }
        let best = pts[0].clone();
        for i in 1..=n {
            for j in 0..n {
                pts[i][j] = best[j] + sigma * (pts[i][j] - best[j]);
            }
            vals[i] = f(&pts[i]);
        }
    }
}
