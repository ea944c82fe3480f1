//! Closed-form cardinal functions: the uniform-lattice Lagrange polynomials and
//! the Waldron cardinal functions written in baryweight coordinates.

use crate::baryweights::BaryweightChart;
use crate::error::{Error, Result};
use crate::points::{enumerate_indices, weight_levels, MultiIndex};
use crate::scalar::Scalar;
use crate::simplex::Barycentric;

use super::Cardinals;

/// `ℓ_α(λ) = Π_i Π_{j<α_i} (nλ_i - j) / (α_i - j)`, the Lagrange polynomial of
/// the uniform lattice node `α / n`.
pub fn simplex_cardinal<T: Scalar>(n: usize, alpha: &MultiIndex, lambda: &[T]) -> T {
    let nn = T::from_usize_lossy(n);
    let mut v = T::one();
    for (&a, &l) in alpha.iter().zip(lambda) {
        for j in 0..a {
            let jj = T::from_usize_lossy(j as usize);
            v *= (nn * l - jj) / (T::from_usize_lossy(a as usize) - jj);
        }
    }
    v
}

/// All uniform-lattice cardinals of one degree, in node order.
#[derive(Debug, Clone)]
pub struct SimplexCardinals {
    degree: usize,
    dim: usize,
    indices: Vec<MultiIndex>,
}

impl SimplexCardinals {
    pub fn new(degree: usize, dim: usize) -> Self {
        let indices = if degree == 0 {
            vec![MultiIndex::new(vec![0; dim + 1])]
        } else {
            enumerate_indices(degree, dim)
        };
        Self { degree, dim, indices }
    }
}

impl<T: Scalar> Cardinals<T> for SimplexCardinals {
    fn len(&self) -> usize {
        self.indices.len()
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn scratch_len(&self) -> usize {
        (self.dim + 1) * (self.degree + 1)
    }

    fn eval_barycentric(&self, lambda: &[T], out: &mut [T], scratch: &mut [T]) -> Result<()> {
        let n = self.degree;
        let stride = n + 1;
        let nn = T::from_usize_lossy(n);
        // scratch[i][a] = Π_{j<a} (nλ_i - j) / (j + 1)
        for (i, &l) in lambda.iter().enumerate() {
            let row = &mut scratch[i * stride..(i + 1) * stride];
            row[0] = T::one();
            for a in 1..=n {
                let j = T::from_usize_lossy(a - 1);
                row[a] = row[a - 1] * (nn * l - j) / T::from_usize_lossy(a);
            }
        }
        for (o, alpha) in out.iter_mut().zip(&self.indices) {
            let mut v = T::one();
            for (i, &a) in alpha.iter().enumerate() {
                v *= scratch[i * stride + a as usize];
            }
            *o = v;
        }
        Ok(())
    }
}

/// Waldron cardinal functions `C_α Π_i Π_{j<α_i} (w(θ_i) - w(j/n))`, optionally
/// normalized by their sum (the rational scheme).
#[derive(Debug, Clone)]
pub struct WaldronCardinals<T> {
    chart: BaryweightChart<T>,
    degree: usize,
    indices: Vec<MultiIndex>,
    levels: Vec<T>,
    /// `Π_{j<a} (w(a/n) - w(j/n))` for `a = 0..=n`.
    denominators: Vec<T>,
    rational: bool,
}

impl<T: Scalar> WaldronCardinals<T> {
    /// Requires a centred triangle and a complementary weight, where every
    /// point has unique baryweights.
    pub fn new(chart: BaryweightChart<T>, degree: usize, rational: bool) -> Result<Self> {
        if chart.dim() != 2 {
            return Err(Error::Unsupported(format!(
                "explicit Waldron cardinals are defined on triangles, got dimension {}",
                chart.dim()
            )));
        }
        if !chart.is_centred() {
            return Err(Error::Unsupported("explicit Waldron cardinals need a centred triangle".into()));
        }
        if !chart.weight().is_complementary() {
            return Err(Error::Unsupported("explicit Waldron cardinals need a complementary weight".into()));
        }
        if degree == 0 {
            return Err(Error::Domain("Waldron cardinals need degree n ≥ 1".into()));
        }
        let levels = weight_levels(chart.weight(), degree);
        let denominators = (0..=degree)
            .map(|a| (0..a).map(|j| levels[a] - levels[j]).fold(T::one(), |p, f| p * f))
            .collect();
        Ok(Self { indices: enumerate_indices(degree, 2), chart, degree, levels, denominators, rational })
    }

    pub fn chart(&self) -> &BaryweightChart<T> {
        &self.chart
    }

    pub fn is_rational(&self) -> bool {
        self.rational
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Unnormalized cardinals given the baryweights `u_i = w(θ_i)`.
    fn products(&self, u: &[T], out: &mut [T], scratch: &mut [T]) {
        let n = self.degree;
        let stride = n + 1;
        for (i, &ui) in u.iter().enumerate() {
            let row = &mut scratch[i * stride..(i + 1) * stride];
            row[0] = T::one();
            for a in 1..=n {
                row[a] = row[a - 1] * (ui - self.levels[a - 1]);
            }
        }
        for (o, alpha) in out.iter_mut().zip(&self.indices) {
            let mut v = T::one();
            for (i, &a) in alpha.iter().enumerate() {
                v *= scratch[i * stride + a as usize] / self.denominators[a as usize];
            }
            *o = v;
        }
    }
}

/// Threshold below which the rational scheme's denominator is treated as a pole.
const POLE_TOL: f64 = 1e-12;

impl<T: Scalar> Cardinals<T> for WaldronCardinals<T> {
    fn len(&self) -> usize {
        self.indices.len()
    }

    fn dim(&self) -> usize {
        2
    }

    fn scratch_len(&self) -> usize {
        3 * (self.degree + 1)
    }

    fn eval_barycentric(&self, lambda: &[T], out: &mut [T], scratch: &mut [T]) -> Result<()> {
        let inv = self.chart.invert(&Barycentric(lambda.to_vec()))?;
        // w(θ_i) = λ_i + c by construction of the shift
        let u = [lambda[0] + inv.shift, lambda[1] + inv.shift, lambda[2] + inv.shift];
        self.products(&u, out, scratch);
        if self.rational {
            let sum: T = out.iter().copied().sum();
            if sum.abs() < T::lit(POLE_TOL) {
                let location = self
                    .chart
                    .simplex()
                    .combine(lambda)
                    .map(|x| x.iter().map(|v| v.to_f64_lossy()).collect())
                    .unwrap_or_default();
                return Err(Error::Pole { location, denominator: sum.to_f64_lossy() });
            }
            out.iter_mut().for_each(|v| *v /= sum);
        }
        Ok(())
    }
}

/// Value at Cartesian `x` of the Waldron cardinal function of node `α`.
pub fn waldron_cardinal<T: Scalar>(chart: &BaryweightChart<T>, n: usize, alpha: &MultiIndex, x: &[T]) -> Result<T> {
    single(chart, n, alpha, x, false)
}

/// Value at Cartesian `x` of the normalized (rational) Waldron cardinal of node `α`.
pub fn rational_cardinal<T: Scalar>(chart: &BaryweightChart<T>, n: usize, alpha: &MultiIndex, x: &[T]) -> Result<T> {
    single(chart, n, alpha, x, true)
}

fn single<T: Scalar>(chart: &BaryweightChart<T>, n: usize, alpha: &MultiIndex, x: &[T], rational: bool) -> Result<T> {
    if alpha.degree() != n || alpha.len() != 3 {
        return Err(Error::Domain(format!("multi-index {alpha} does not have degree {n} in three parts")));
    }
    let set = WaldronCardinals::new(chart.clone(), n, rational)?;
    let pos = set.indices.iter().position(|a| a == alpha).expect("index enumerated");
    let lambda = chart.simplex().to_barycentric(x)?;
    let mut out = vec![T::zero(); set.indices.len()];
    let mut scratch = vec![T::zero(); Cardinals::<T>::scratch_len(&set)];
    set.eval_barycentric(lambda.coords(), &mut out, &mut scratch)?;
    Ok(out[pos])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex::Simplex;
    use crate::weights::Weight;

    #[test]
    fn simplex_cardinal_examples() {
        // n=2 on an interval, α=(1,1) at λ=(3/4,1/4): 4·(3/4)(1/4) = 3/4
        let v: f64 = simplex_cardinal(2, &MultiIndex::new(vec![1, 1]), &[0.75, 0.25]);
        assert!((v - 0.75).abs() < 1e-15);
        // same value from the 1D Lagrange basis on {-1, 0, 1} at x = -1/2
        let x: f64 = -0.75 + 0.25 * 1.0;
        assert!((v - (1.0 - x * x)).abs() < 1e-15);
        let lambda = [0.2f64, 0.3, 0.5];
        for i in 0..3 {
            let mut a = vec![0; 3];
            a[i] = 1;
            assert!((simplex_cardinal(1, &MultiIndex::new(a), &lambda) - lambda[i]).abs() < 1e-15);
        }
    }

    #[test]
    fn batch_matches_single() {
        let set = SimplexCardinals::new(5, 2);
        let lambda = [0.13, 0.52, 0.35];
        let mut out = vec![0.0f64; 21];
        let mut scratch = vec![0.0; Cardinals::<f64>::scratch_len(&set)];
        set.eval_barycentric(&lambda, &mut out, &mut scratch).unwrap();
        for (v, a) in out.iter().zip(enumerate_indices(5, 2)) {
            assert!((v - simplex_cardinal(5, &a, &lambda)).abs() < 1e-13);
        }
    }

    #[test]
    fn waldron_cardinal_delta_at_nodes() {
        let s = Simplex::<f64>::equilateral_2d();
        let w = Weight::cosine();
        let chart = BaryweightChart::new(s.clone(), w.clone());
        let nodes = crate::points::waldron_points(&s, 3, &w).unwrap();
        let alphas = nodes.indices().unwrap();
        for (a, alpha) in alphas.iter().enumerate() {
            for (b, node) in nodes.nodes.iter().enumerate() {
                let v = waldron_cardinal(&chart, 3, alpha, &node.cartesian).unwrap();
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((v - want).abs() < 1e-10, "{alpha} at node {b}: {v}");
                let r = rational_cardinal(&chart, 3, alpha, &node.cartesian).unwrap();
                assert!((r - want).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn waldron_cardinals_require_supported_setting() {
        let skew = Simplex::new(vec![vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let c = BaryweightChart::new(skew, Weight::<f64>::cosine());
        assert!(matches!(WaldronCardinals::new(c, 3, false), Err(Error::Unsupported(_))));
        let c = BaryweightChart::new(Simplex::<f64>::centred_3d(), Weight::cosine());
        assert!(matches!(WaldronCardinals::new(c, 3, false), Err(Error::Unsupported(_))));
    }
}
