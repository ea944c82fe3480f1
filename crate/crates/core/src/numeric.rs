//! Small one-dimensional numerical kernels: bisection, adaptive Simpson
//! quadrature and cubic Hermite evaluation.

use crate::scalar::Scalar;

/// Outcome of a bisection run on a monotone bracket.
#[derive(Debug, Clone, Copy)]
pub struct Bisection<T> {
    pub root: T,
    pub iterations: usize,
    /// Final bracket width.
    pub width: T,
}

/// Finds `x` in `[lo, hi]` with `f(x) = target` for a non-decreasing `f`.
///
/// Stops once the bracket is narrower than `tol` or after `max_iter` halvings.
/// If the target lies outside `[f(lo), f(hi)]` the nearer endpoint is returned.
pub fn bisect_increasing<T, F>(f: F, target: T, lo: T, hi: T, tol: T, max_iter: usize) -> Bisection<T>
where
    T: Scalar,
    F: Fn(T) -> T,
{
    let (mut a, mut b) = (lo, hi);
    let half = T::lit(0.5);
    let mut iterations = 0;
    while b - a > tol && iterations < max_iter {
        let mid = a + (b - a) * half;
        if mid <= a || mid >= b {
            break;
        }
        if f(mid) < target {
            a = mid;
        } else {
            b = mid;
        }
        iterations += 1;
    }
    Bisection { root: a + (b - a) * half, iterations, width: b - a }
}

/// Like [`bisect_increasing`] but takes Newton steps with `df` while they stay
/// inside the shrinking bracket, falling back to halving otherwise.
pub fn newton_bracketed<T, F, D>(f: F, df: D, target: T, lo: T, hi: T, tol: T, max_iter: usize) -> T
where
    T: Scalar,
    F: Fn(T) -> T,
    D: Fn(T) -> T,
{
    let (mut a, mut b) = (lo, hi);
    let half = T::lit(0.5);
    let mut x = a + (b - a) * half;
    for _ in 0..max_iter {
        let r = f(x) - target;
        if r == T::zero() {
            return x;
        }
        if r < T::zero() {
            a = x;
        } else {
            b = x;
        }
        if b - a <= tol {
            break;
        }
        let slope = df(x);
        let newton = x - r / slope;
        let next = if slope > T::zero() && newton > a && newton < b { newton } else { a + (b - a) * half };
        if (next - x).abs() <= tol * T::lit(0.5) {
            return next;
        }
        x = next;
    }
    a + (b - a) * half
}

/// Adaptive Simpson quadrature of `f` over `[a, b]` to absolute tolerance `tol`.
pub fn adaptive_simpson<T, F>(f: &F, a: T, b: T, tol: T) -> T
where
    T: Scalar,
    F: Fn(T) -> T + ?Sized,
{
    if a == b {
        return T::zero();
    }
    let fa = f(a);
    let fb = f(b);
    let m = (a + b) * T::lit(0.5);
    let fm = f(m);
    let whole = simpson(a, b, fa, fm, fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48)
}

#[inline]
fn simpson<T: Scalar>(a: T, b: T, fa: T, fm: T, fb: T) -> T {
    (b - a) / T::lit(6.0) * (fa + T::lit(4.0) * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<T, F>(f: &F, a: T, b: T, fa: T, fm: T, fb: T, whole: T, tol: T, depth: u32) -> T
where
    T: Scalar,
    F: Fn(T) -> T + ?Sized,
{
    let m = (a + b) * T::lit(0.5);
    let lm = (a + m) * T::lit(0.5);
    let rm = (m + b) * T::lit(0.5);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= T::lit(15.0) * tol || m <= a || m >= b {
        return left + right + delta / T::lit(15.0);
    }
    let half_tol = tol * T::lit(0.5);
    simpson_rec(f, a, m, fa, flm, fm, left, half_tol, depth - 1)
        + simpson_rec(f, m, b, fm, frm, fb, right, half_tol, depth - 1)
}

/// Cubic Hermite interpolation on `[x0, x1]` from values and slopes at both ends.
#[inline]
pub fn hermite<T: Scalar>(x: T, x0: T, x1: T, y0: T, y1: T, d0: T, d1: T) -> T {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let t3 = t2 * t;
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let h00 = two * t3 - three * t2 + T::one();
    let h10 = t3 - two * t2 + t;
    let h01 = three * t2 - two * t3;
    let h11 = t3 - t2;
    h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1
}

/// Derivative in `x` of [`hermite`].
pub fn hermite_derivative<T: Scalar>(x: T, x0: T, x1: T, y0: T, y1: T, d0: T, d1: T) -> T {
    let h = x1 - x0;
    let t = (x - x0) / h;
    let t2 = t * t;
    let six = T::lit(6.0);
    let (three, four) = (T::lit(3.0), T::lit(4.0));
    let dh00 = six * t2 - six * t;
    let dh10 = three * t2 - four * t + T::one();
    let dh11 = three * t2 - T::lit(2.0) * t;
    (dh00 * (y0 - y1)) / h + dh10 * d0 + dh11 * d1
}

/// Chebyshev polynomials `T_0(s) .. T_n(s)` written into `out`.
#[inline]
pub fn chebyshev_values<T: Scalar>(s: T, out: &mut [T]) {
    if out.is_empty() {
        return;
    }
    out[0] = T::one();
    if out.len() > 1 {
        out[1] = s;
    }
    let two_s = s + s;
    for k in 2..out.len() {
        out[k] = two_s * out[k - 1] - out[k - 2];
    }
}

/// The `m + 1` Legendre-Gauss-Lobatto nodes on `[-1, 1]`, ascending: the
/// endpoints and the roots of `P_m'`.
pub fn legendre_lobatto<T: Scalar>(m: usize) -> Vec<T> {
    if m == 0 {
        return vec![T::zero()];
    }
    let mm = T::from_usize_lossy(m);
    let mut nodes = Vec::with_capacity(m + 1);
    for k in 0..=m {
        // Chebyshev-Lobatto start, then Newton on x P_m - P_{m-1}
        let mut x = -(T::PI() * T::from_usize_lossy(k) / mm).cos();
        for _ in 0..100 {
            let (mut p0, mut p1) = (T::one(), x);
            for j in 1..m {
                let jj = T::from_usize_lossy(j);
                let p2 = ((jj + jj + T::one()) * x * p1 - jj * p0) / (jj + T::one());
                p0 = p1;
                p1 = p2;
            }
            let step = (x * p1 - p0) / ((mm + T::one()) * p1);
            x -= step;
            if step.abs() <= T::epsilon() {
                break;
            }
        }
        nodes.push(x);
    }
    nodes
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn newton_bracketed_matches_bisection() {
        let f = |x: f64| x * x * x + x;
        let df = |x: f64| 3.0 * x * x + 1.0;
        let a = newton_bracketed(f, df, 0.7, 0.0, 1.0, 1e-15, 100);
        let b = bisect_increasing(f, 0.7, 0.0, 1.0, 1e-15, 200).root;
        assert!((a - b).abs() < 1e-14);
        // flat start: derivative zero at the midpoint of a symmetric bracket
        let g = |x: f64| x.powi(3);
        let r = newton_bracketed(g, |x| 3.0 * x * x, 0.001, -1.0, 1.0, 1e-15, 200);
        assert!((r - 0.1).abs() < 1e-12);
    }

    #[test]
    fn legendre_lobatto_small_cases() {
        let x: Vec<f64> = legendre_lobatto(2);
        assert_eq!(x.len(), 3);
        assert!((x[0] + 1.0).abs() < 1e-15 && x[1].abs() < 1e-15 && (x[2] - 1.0).abs() < 1e-15);
        let x: Vec<f64> = legendre_lobatto(3);
        let r = 1.0 / 5f64.sqrt();
        assert!((x[1] + r).abs() < 1e-15 && (x[2] - r).abs() < 1e-15);
        let x: Vec<f64> = legendre_lobatto(4);
        let r = (3.0f64 / 7.0).sqrt();
        assert!((x[1] + r).abs() < 1e-15 && x[2].abs() < 1e-15 && (x[3] - r).abs() < 1e-15);
        let x: Vec<f64> = legendre_lobatto(12);
        assert!(x.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bisection_finds_square_root() {
        let r = bisect_increasing(|x: f64| x * x, 2.0, 0.0, 2.0, 1e-14, 100);
        assert!((r.root - 2f64.sqrt()).abs() < 1e-13);
        assert!(r.iterations <= 48);
    }

    #[test]
    fn simpson_integrates_sine() {
        let v = adaptive_simpson(&|t: f64| t.sin(), 0.0, std::f64::consts::PI, 1e-12);
        assert!((v - 2.0).abs() < 1e-11);
    }

    #[test]
    fn simpson_handles_kink() {
        let v = adaptive_simpson(&|t: f64| (t - 0.3).abs(), 0.0, 1.0, 1e-13);
        assert!((v - (0.09 + 0.49) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn hermite_reproduces_cubics() {
        let p = |x: f64| 1.0 - 2.0 * x + 0.5 * x * x * x;
        let dp = |x: f64| -2.0 + 1.5 * x * x;
        let (a, b) = (0.2, 0.9);
        for &x in &[0.2, 0.33, 0.6, 0.9] {
            let h = hermite(x, a, b, p(a), p(b), dp(a), dp(b));
            assert!((h - p(x)).abs() < 1e-14);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(18, 2), 153);
        assert_eq!(binomial(15, 3), 455);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn chebyshev_matches_cosine_definition() {
        let mut out = [0.0; 7];
        let theta: f64 = 0.7;
        chebyshev_values(theta.cos(), &mut out);
        for (k, v) in out.iter().enumerate() {
            assert!((v - (k as f64 * theta).cos()).abs() < 1e-14);
        }
    }
}
