//! Warped lattice interpolation nodes on simplices.
//!
//! A weight `w` warps the uniform lattice `α/n` of a simplex into the Waldron
//! points. The crate builds these and the competing node families (uniform
//! and concentric triangle points), inverts the baryweight chart, evaluates
//! explicit, rational and general polynomial cardinal functions, and measures
//! node quality through Lebesgue constants and spherical spacing.
//!
//! Everything is generic over the scalar type (`f32` or `f64`); the `*64` and
//! `*32` aliases below fix it.
//!
//! ```
//! use waldron::{waldron_points, Simplex64, Weight64};
//!
//! let tri = Simplex64::equilateral_2d();
//! let nodes = waldron_points(&tri, 4, &Weight64::cosine()).unwrap();
//! assert_eq!(nodes.len(), 15);
//! ```

// `!(x > 0)` style checks are meant to reject NaN as well
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod baryweights;
pub mod basis;
pub mod error;
pub mod interp;
pub mod linalg;
pub mod numeric;
pub mod optimize;
pub mod points;
pub mod scalar;
pub mod simplex;
pub mod weights;

pub use analysis::{
    lebesgue_constant, lebesgue_table, neighbor_spacing, spacing_d, spacing_extrema, FamilySpec, Grid,
    LebesgueReport, LebesgueTable, SpacingReport,
};
pub use baryweights::{sum_bounds_check, BaryweightChart, ChartInverse, SumBounds};
pub use error::{Error, Result};
pub use interp::{
    general_cardinals, interpolate, rational_cardinal, simplex_cardinal, waldron_cardinal, CardinalEval, CardinalSet,
    Cardinals, GeneralCardinals, Interpolant, Scheme,
};
pub use points::{
    concentric_points, enumerate_indices, optimize_concentric_radii, simplex_points, spherical_full_sphere,
    spherical_waldron_points, waldron_points, waldron_points_modified_3d, FamilyKind, MultiIndex, Node, NodeFamily,
    NodeLabel,
};
pub use scalar::Scalar;
pub use simplex::{baran_distance, great_circle, sphere_lift, Barycentric, Simplex};
pub use weights::{Density, Weight, WeightKind};

pub type Weight64 = Weight<f64>;
pub type Simplex64 = Simplex<f64>;
pub type Barycentric64 = Barycentric<f64>;
pub type NodeFamily64 = NodeFamily<f64>;
pub type Interpolant64 = Interpolant<f64>;
pub type BaryweightChart64 = BaryweightChart<f64>;

pub type Weight32 = Weight<f32>;
pub type Simplex32 = Simplex<f32>;
pub type Barycentric32 = Barycentric<f32>;
pub type NodeFamily32 = NodeFamily<f32>;
pub type Interpolant32 = Interpolant<f32>;
pub type BaryweightChart32 = BaryweightChart<f32>;
