//! Simplex geometry: barycentric transforms, the Baran distance and the
//! square-root lift of the simplex onto the positive orthant of the sphere.

use crate::error::{Error, Result};
use crate::linalg::{Lu, Matrix};
use crate::scalar::Scalar;

/// Barycentric coordinates `λ ∈ R^{d+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Barycentric<T>(pub Vec<T>);

impl<T: Scalar> Barycentric<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Self(coords)
    }

    /// The centroid `(1/(d+1), …, 1/(d+1))`.
    pub fn barycentre(dim: usize) -> Self {
        Self(vec![T::one() / T::from_usize_lossy(dim + 1); dim + 1])
    }

    /// The `i`-th vertex `e_i`.
    pub fn vertex(dim: usize, i: usize) -> Self {
        let mut v = vec![T::zero(); dim + 1];
        v[i] = T::one();
        Self(v)
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn sum(&self) -> T {
        self.0.iter().copied().sum()
    }

    /// All coordinates `≥ -1e-12`.
    pub fn is_inside(&self) -> bool {
        let tol = T::tol(1e-12);
        self.0.iter().all(|&l| l >= -tol)
    }
}

/// A non-degenerate simplex with `d + 1` vertices in `R^d`.
#[derive(Debug, Clone)]
pub struct Simplex<T> {
    vertices: Vec<Vec<T>>,
    lu: Lu<T>,
    scale: T,
}

impl<T: Scalar> Simplex<T> {
    pub fn new(vertices: Vec<Vec<T>>) -> Result<Self> {
        let d = vertices.len().checked_sub(1).filter(|&d| d >= 1).ok_or_else(|| {
            Error::Domain("a simplex needs at least two vertices".into())
        })?;
        for v in &vertices {
            if v.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: v.len() });
            }
        }
        let last = &vertices[d];
        let mut edges = Matrix::zeros(d, d);
        let mut scale = T::zero();
        for (j, v) in vertices[..d].iter().enumerate() {
            let mut len2 = T::zero();
            for i in 0..d {
                let e = v[i] - last[i];
                edges[(i, j)] = e;
                len2 += e * e;
            }
            scale = scale.max(len2.sqrt());
        }
        let lu = Lu::new(edges);
        let det = lu.det();
        if !(det.abs() > T::tol(1e-12) * scale.powi(d as i32)) {
            return Err(Error::DegenerateSimplex { det: det.to_f64_lossy() });
        }
        Ok(Self { vertices, lu, scale })
    }

    /// Equilateral triangle centred at the origin with vertices
    /// `(-√3/2, -1/2)`, `(√3/2, -1/2)`, `(0, 1)`.
    pub fn equilateral_2d() -> Self {
        let h = T::lit(3.0).sqrt() * T::lit(0.5);
        let half = T::lit(0.5);
        Self::new(vec![vec![-h, -half], vec![h, -half], vec![T::zero(), T::one()]])
            .expect("equilateral triangle is non-degenerate")
    }

    /// Regular tetrahedron centred at the origin with unit circumradius.
    pub fn centred_3d() -> Self {
        let s = T::one() / T::lit(3.0).sqrt();
        let raw = [[1.0, 1.0, 1.0], [1.0, -1.0, -1.0], [-1.0, 1.0, -1.0], [-1.0, -1.0, 1.0]];
        let vertices = raw.iter().map(|v| v.iter().map(|&c| T::lit(c) * s).collect()).collect();
        Self::new(vertices).expect("regular tetrahedron is non-degenerate")
    }

    /// Standard unit simplex: the origin followed by `e_1, …, e_d`.
    ///
    /// Vertex order puts the origin last so that `λ_i = x_i` for `i ≤ d`.
    pub fn unit(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        let mut vertices = Vec::with_capacity(dim + 1);
        for i in 0..dim {
            let mut v = vec![T::zero(); dim];
            v[i] = T::one();
            vertices.push(v);
        }
        vertices.push(vec![T::zero(); dim]);
        Self::new(vertices)
    }

    /// `[-1, 1]` as a one-dimensional simplex.
    pub fn interval() -> Self {
        Self::new(vec![vec![-T::one()], vec![T::one()]]).expect("interval is non-degenerate")
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn vertices(&self) -> &[Vec<T>] {
        &self.vertices
    }

    /// Longest edge from the last vertex.
    pub fn scale(&self) -> T {
        self.scale
    }

    /// Largest distance between two vertices.
    pub fn diameter(&self) -> T {
        let mut d = T::zero();
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                d = d.max(distance(a, b));
            }
        }
        d
    }

    /// `‖Σ V_i‖ ≤ 1e-12 · max ‖V_i‖`.
    pub fn is_centred(&self) -> bool {
        let d = self.dim();
        let mut max_norm = T::zero();
        let mut sum = vec![T::zero(); d];
        for v in &self.vertices {
            max_norm = max_norm.max(norm(v));
            for (s, &c) in sum.iter_mut().zip(v) {
                *s += c;
            }
        }
        norm(&sum) <= T::tol(1e-12) * max_norm
    }

    pub fn to_barycentric(&self, x: &[T]) -> Result<Barycentric<T>> {
        let d = self.dim();
        if x.len() != d {
            return Err(Error::DimensionMismatch { expected: d, got: x.len() });
        }
        let last = &self.vertices[d];
        let rhs: Vec<T> = x.iter().zip(last).map(|(&a, &b)| a - b).collect();
        let mut mu = self.lu.solve(&rhs);
        let tail = T::one() - mu.iter().copied().sum::<T>();
        mu.push(tail);
        Ok(Barycentric(mu))
    }

    pub fn from_barycentric(&self, lambda: &Barycentric<T>) -> Result<Vec<T>> {
        self.combine(lambda.coords())
    }

    /// `Σ c_i V_i` for arbitrary coefficients (no normalization assumed).
    pub fn combine(&self, coeffs: &[T]) -> Result<Vec<T>> {
        let d = self.dim();
        if coeffs.len() != d + 1 {
            return Err(Error::DimensionMismatch { expected: d + 1, got: coeffs.len() });
        }
        let mut x = vec![T::zero(); d];
        for (&c, v) in coeffs.iter().zip(&self.vertices) {
            for (xi, &vi) in x.iter_mut().zip(v) {
                *xi += c * vi;
            }
        }
        Ok(x)
    }
}

fn norm<T: Scalar>(v: &[T]) -> T {
    v.iter().map(|&c| c * c).sum::<T>().sqrt()
}

pub(crate) fn distance<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| (x - y) * (x - y)).sum::<T>().sqrt()
}

fn check_inside<T: Scalar>(lambda: &Barycentric<T>) -> Result<()> {
    if !lambda.is_inside() {
        return Err(Error::Domain(format!("barycentric coordinates {:?} outside the simplex", lambda.0)));
    }
    Ok(())
}

/// Baran distance `arccos(Σ √(a_i b_i))`, in `[0, π/2]`.
pub fn baran_distance<T: Scalar>(a: &Barycentric<T>, b: &Barycentric<T>) -> Result<T> {
    check_inside(a)?;
    check_inside(b)?;
    if a.0.len() != b.0.len() {
        return Err(Error::DimensionMismatch { expected: a.0.len(), got: b.0.len() });
    }
    let dot: T = a.0.iter().zip(&b.0).map(|(&x, &y)| (x.max(T::zero()) * y.max(T::zero())).sqrt()).sum();
    Ok(dot.max(-T::one()).min(T::one()).acos())
}

/// `(√λ_1, …, √λ_{d+1})`, a unit vector in the positive orthant.
pub fn sphere_lift<T: Scalar>(lambda: &Barycentric<T>) -> Result<Vec<T>> {
    check_inside(lambda)?;
    Ok(lambda.0.iter().map(|&l| l.max(T::zero()).sqrt()).collect())
}

/// Great-circle distance between two unit vectors.
pub fn great_circle<T: Scalar>(a: &[T], b: &[T]) -> T {
    let dot: T = a.iter().zip(b).map(|(&x, &y)| x * y).sum();
    dot.max(-T::one()).min(T::one()).acos()
}
