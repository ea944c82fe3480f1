//! Lebesgue functions and constants on barycentric lattices.
//!
//! The constant is the maximum of `Σ_α |ℓ_α|` over the lattice
//! `{β / M : |β| = M}`, a lower bound on the true constant that is
//! non-decreasing along the nested sequence `M, 2M, 4M, …`.
//!
//! When the node set is invariant under permutations of the barycentric
//! coordinates the Lebesgue function is too, and only the fundamental domain
//! `β_1 ≥ β_2 ≥ … ≥ β_{d+1}` is visited.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::interp::{CardinalSet, Cardinals, Scheme};
use crate::points::{FamilyKind, NodeFamily};
use crate::scalar::Scalar;

/// Relative change between successive doublings accepted as converged.
pub const AUTO_STABILITY: f64 = 0.005;

/// How many times `Grid::Auto` may double the starting resolution.
pub const AUTO_MAX_DOUBLINGS: u32 = 3;

/// Lattice resolution: subdivisions per edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grid {
    Fixed(usize),
    /// Start from the default resolution and double until stable.
    Auto,
}

/// Default starting resolution for degree `n` in dimension `d`.
pub fn default_resolution(n: usize, d: usize) -> usize {
    match d {
        1 => (100 * n).max(1000),
        2 => (50 * n).max(400),
        _ => (15 * n).max(120),
    }
}

#[derive(Debug, Clone)]
pub struct LebesgueReport<T> {
    pub family: String,
    pub scheme: Scheme,
    pub degree: usize,
    pub node_count: usize,
    /// Final lattice resolution `M`.
    pub grid: usize,
    pub constant: T,
    pub argmax: Vec<T>,
    pub argmax_barycentric: Vec<T>,
    /// Lattice points evaluated at the final resolution.
    pub evaluated: usize,
    /// Lattice points skipped because the rational denominator vanished.
    pub poles: usize,
    /// Whether the symmetric fundamental domain was used.
    pub symmetric: bool,
    /// For `Grid::Auto`: relative change of the last doubling was within tolerance.
    pub stable: bool,
    pub elapsed: f64,
}

/// Scheme used for the tabulated Lebesgue constants of a family: the
/// closed form for the uniform lattice, polynomial interpolation otherwise.
pub fn table_scheme<T>(family: &FamilyKind<T>) -> Scheme {
    match family {
        FamilyKind::Simplex => Scheme::SimplexExplicit,
        _ => Scheme::GeneralPolynomial,
    }
}

/// Lebesgue constant of `scheme` at `nodes`.
pub fn lebesgue_constant<T: Scalar>(nodes: &NodeFamily<T>, scheme: Scheme, grid: Grid) -> Result<LebesgueReport<T>> {
    let start = Instant::now();
    let cardinals = CardinalSet::build(scheme, nodes)?;
    let symmetric = nodes.is_permutation_invariant(T::tol(1e-11));
    let d = nodes.dim();
    let (m, best, stable) = match grid {
        Grid::Fixed(m) => {
            if m == 0 {
                return Err(Error::Domain("grid resolution must be at least 1".into()));
            }
            (m, lattice_max(&cardinals, d, m, symmetric)?, true)
        }
        Grid::Auto => {
            let mut m = default_resolution(nodes.degree, d);
            let mut best = lattice_max(&cardinals, d, m, symmetric)?;
            let mut stable = false;
            for _ in 0..AUTO_MAX_DOUBLINGS {
                let next = lattice_max(&cardinals, d, 2 * m, symmetric)?;
                let change = (next.value - best.value) / best.value;
                m *= 2;
                best = next;
                if change <= T::lit(AUTO_STABILITY) {
                    stable = true;
                    break;
                }
            }
            (m, best, stable)
        }
    };
    let argmax = nodes.simplex.combine(&best.lambda)?;
    Ok(LebesgueReport {
        family: nodes.family.name(),
        scheme,
        degree: nodes.degree,
        node_count: nodes.len(),
        grid: m,
        constant: best.value,
        argmax,
        argmax_barycentric: best.lambda,
        evaluated: best.evaluated,
        poles: best.poles,
        symmetric,
        stable,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// Maximum of the Lebesgue function over the lattice.
#[derive(Debug, Clone)]
pub struct LatticeMax<T> {
    pub value: T,
    pub lambda: Vec<T>,
    pub evaluated: usize,
    pub poles: usize,
}

impl<T: Scalar> LatticeMax<T> {
    fn empty() -> Self {
        Self { value: T::neg_infinity(), lambda: Vec::new(), evaluated: 0, poles: 0 }
    }

    /// Keeps the earlier maximum on ties so the reduction is order-stable.
    fn merge(mut self, other: Self) -> Self {
        let evaluated = self.evaluated + other.evaluated;
        let poles = self.poles + other.poles;
        if other.value > self.value {
            self = other;
        }
        self.evaluated = evaluated;
        self.poles = poles;
        self
    }
}

/// Largest `Σ|ℓ_α(β/M)|` over the lattice, optionally restricted to the
/// fundamental domain of the coordinate permutations.
pub fn lattice_max<T, C>(cardinals: &C, d: usize, m: usize, symmetric: bool) -> Result<LatticeMax<T>>
where
    T: Scalar,
    C: Cardinals<T> + ?Sized,
{
    let first_values: Vec<usize> = if symmetric { (m.div_ceil(d + 1)..=m).collect() } else { (0..=m).collect() };
    let chunks: Vec<Result<LatticeMax<T>>> = first_values
        .par_iter()
        .map(|&b1| {
            let mut state = Scan {
                cardinals,
                inv_m: T::one() / T::from_usize_lossy(m),
                out: vec![T::zero(); cardinals.len()],
                scratch: vec![T::zero(); cardinals.scratch_len()],
                beta: vec![0usize; d + 1],
                best: LatticeMax::empty(),
                symmetric,
            };
            state.beta[0] = b1;
            state.fill(1, m - b1, b1)?;
            Ok(state.best)
        })
        .collect();
    let mut best = LatticeMax::empty();
    for c in chunks {
        best = best.merge(c?);
    }
    if best.lambda.is_empty() {
        return Err(Error::Domain("no lattice point could be evaluated".into()));
    }
    Ok(best)
}

struct Scan<'a, T, C: ?Sized> {
    cardinals: &'a C,
    inv_m: T,
    out: Vec<T>,
    scratch: Vec<T>,
    beta: Vec<usize>,
    best: LatticeMax<T>,
    symmetric: bool,
}

impl<T: Scalar, C: Cardinals<T> + ?Sized> Scan<'_, T, C> {
    /// Assigns `beta[pos..]` summing to `remaining`, each at most `cap` when symmetric.
    fn fill(&mut self, pos: usize, remaining: usize, cap: usize) -> Result<()> {
        let last = self.beta.len() - 1;
        if pos == last {
            if self.symmetric && remaining > cap {
                return Ok(());
            }
            self.beta[pos] = remaining;
            return self.visit();
        }
        let parts_after = last - pos;
        let hi = if self.symmetric { remaining.min(cap) } else { remaining };
        for b in (0..=hi).rev() {
            if self.symmetric && remaining - b > parts_after * b {
                // the remaining parts could not stay below b
                break;
            }
            self.beta[pos] = b;
            self.fill(pos + 1, remaining - b, b)?;
        }
        Ok(())
    }

    fn visit(&mut self) -> Result<()> {
        let lambda: Vec<T> = self.beta.iter().map(|&b| T::from_usize_lossy(b) * self.inv_m).collect();
        match self.cardinals.eval_barycentric(&lambda, &mut self.out, &mut self.scratch) {
            Ok(()) => {}
            Err(Error::Pole { .. }) => {
                self.best.poles += 1;
                return Ok(());
            }
            Err(e) => return Err(e),
        }
        self.best.evaluated += 1;
        let value: T = self.out.iter().map(|v| v.abs()).sum();
        if value > self.best.value {
            self.best.value = value;
            self.best.lambda = lambda;
        }
        Ok(())
    }
}
