//! Cardinal functions and interpolants.

mod explicit;
mod general;

pub use explicit::{rational_cardinal, simplex_cardinal, waldron_cardinal, SimplexCardinals, WaldronCardinals};
pub use general::{general_cardinals, GeneralCardinals, MAX_CONDITION};

use crate::baryweights::BaryweightChart;
use crate::error::{Error, Result};
use crate::points::{FamilyKind, NodeFamily};
use crate::scalar::Scalar;

/// A complete set of cardinal functions evaluated in barycentric coordinates.
pub trait Cardinals<T: Scalar>: Send + Sync {
    /// Number of cardinal functions (equals the node count).
    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn dim(&self) -> usize;

    /// Length of the scratch buffer `eval_barycentric` expects.
    fn scratch_len(&self) -> usize;

    /// Writes `ℓ_α(λ)` for every node into `out`.
    fn eval_barycentric(&self, lambda: &[T], out: &mut [T], scratch: &mut [T]) -> Result<()>;

    /// Allocating convenience wrapper around [`eval_barycentric`](Self::eval_barycentric).
    fn eval(&self, lambda: &[T]) -> Result<CardinalEval<T>> {
        let mut values = vec![T::zero(); self.len()];
        let mut scratch = vec![T::zero(); self.scratch_len()];
        self.eval_barycentric(lambda, &mut values, &mut scratch)?;
        Ok(CardinalEval { values })
    }
}

/// Values `ℓ_α(x)` of all cardinal functions at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct CardinalEval<T> {
    pub values: Vec<T>,
}

impl<T: Scalar> CardinalEval<T> {
    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    /// Lebesgue function value `Σ |ℓ_α(x)|`.
    pub fn abs_sum(&self) -> T {
        self.values.iter().map(|v| v.abs()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// Closed-form Lagrange polynomials of the uniform lattice.
    SimplexExplicit,
    /// Closed-form Waldron cardinals (not a polynomial scheme).
    WaldronExplicit,
    /// Waldron cardinals divided by their sum.
    WaldronRational,
    /// Polynomial interpolation at any unisolvent node set.
    GeneralPolynomial,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::SimplexExplicit => "simplex-explicit",
            Scheme::WaldronExplicit => "waldron-explicit",
            Scheme::WaldronRational => "waldron-rational",
            Scheme::GeneralPolynomial => "polynomial",
        }
    }
}

/// Concrete cardinal set behind an [`Interpolant`].
#[derive(Debug, Clone)]
pub enum CardinalSet<T> {
    Simplex(SimplexCardinals),
    Waldron(WaldronCardinals<T>),
    General(GeneralCardinals<T>),
}

impl<T: Scalar> CardinalSet<T> {
    /// Builds the cardinal functions of `scheme` for `nodes`.
    pub fn build(scheme: Scheme, nodes: &NodeFamily<T>) -> Result<Self> {
        match scheme {
            Scheme::SimplexExplicit => match nodes.family {
                FamilyKind::Simplex => Ok(Self::Simplex(SimplexCardinals::new(nodes.degree, nodes.dim()))),
                _ => Err(Error::Unsupported("the explicit simplex scheme needs simplex points".into())),
            },
            Scheme::WaldronExplicit | Scheme::WaldronRational => match &nodes.family {
                FamilyKind::Waldron(w) => {
                    let chart = BaryweightChart::new(nodes.simplex.clone(), w.clone());
                    let rational = scheme == Scheme::WaldronRational;
                    Ok(Self::Waldron(WaldronCardinals::new(chart, nodes.degree, rational)?))
                }
                _ => Err(Error::Unsupported("Waldron schemes need Waldron points".into())),
            },
            Scheme::GeneralPolynomial => Ok(Self::General(GeneralCardinals::new(nodes)?)),
        }
    }

    fn inner(&self) -> &dyn Cardinals<T> {
        match self {
            Self::Simplex(c) => c,
            Self::Waldron(c) => c,
            Self::General(c) => c,
        }
    }
}

impl<T: Scalar> Cardinals<T> for CardinalSet<T> {
    fn len(&self) -> usize {
        self.inner().len()
    }

    fn dim(&self) -> usize {
        self.inner().dim()
    }

    fn scratch_len(&self) -> usize {
        self.inner().scratch_len()
    }

    fn eval_barycentric(&self, lambda: &[T], out: &mut [T], scratch: &mut [T]) -> Result<()> {
        self.inner().eval_barycentric(lambda, out, scratch)
    }
}

/// `q(x) = Σ_α y_α ℓ_α(x)` for one scheme and node family.
#[derive(Debug, Clone)]
pub struct Interpolant<T> {
    scheme: Scheme,
    nodes: NodeFamily<T>,
    values: Vec<T>,
    cardinals: CardinalSet<T>,
}

impl<T: Scalar> Interpolant<T> {
    /// `values[i]` is the datum at `nodes.nodes[i]`.
    pub fn new(scheme: Scheme, nodes: NodeFamily<T>, values: Vec<T>) -> Result<Self> {
        if values.len() != nodes.len() {
            return Err(Error::DimensionMismatch { expected: nodes.len(), got: values.len() });
        }
        let cardinals = CardinalSet::build(scheme, &nodes)?;
        Ok(Self { scheme, nodes, values, cardinals })
    }

    /// Samples `f` at the Cartesian nodes.
    pub fn from_fn<F: Fn(&[T]) -> T>(scheme: Scheme, nodes: NodeFamily<T>, f: F) -> Result<Self> {
        let values = nodes.nodes.iter().map(|n| f(&n.cartesian)).collect();
        Self::new(scheme, nodes, values)
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn nodes(&self) -> &NodeFamily<T> {
        &self.nodes
    }

    pub fn cardinals(&self) -> &CardinalSet<T> {
        &self.cardinals
    }

    pub fn eval_barycentric(&self, lambda: &[T]) -> Result<T> {
        let c = self.cardinals.eval(lambda)?;
        Ok(c.values.iter().zip(&self.values).map(|(&l, &y)| l * y).sum())
    }

    /// `q(x)` at a Cartesian point.
    pub fn eval(&self, x: &[T]) -> Result<T> {
        let lambda = self.nodes.simplex.to_barycentric(x)?;
        self.eval_barycentric(lambda.coords())
    }
}

/// `Σ_α y_α ℓ_α(x)` for a one-off evaluation.
pub fn interpolate<T: Scalar>(scheme: Scheme, nodes: &NodeFamily<T>, y: &[T], x: &[T]) -> Result<T> {
    Interpolant::new(scheme, nodes.clone(), y.to_vec())?.eval(x)
}
