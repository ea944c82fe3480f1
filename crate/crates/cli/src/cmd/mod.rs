pub mod chart;
pub mod gen;
pub mod interp;
pub mod lebesgue;
pub mod radii;
pub mod repro;
pub mod spacing;

use anyhow::Result;
use waldron::points::{concentric_points_with, ConcentricLayout};
use waldron::{simplex_points, waldron_points, waldron_points_modified_3d, NodeFamily64, Simplex64, Weight64};

use crate::{usage, ConcentricArgs, FamilyArg};

/// Nodes of a simplex family; the concentric family lives on the equilateral triangle only.
pub fn build_nodes(
    family: FamilyArg,
    weight: &Weight64,
    degree: usize,
    simplex: Option<Simplex64>,
    concentric: &ConcentricArgs,
) -> Result<NodeFamily64> {
    let default = || if family == FamilyArg::Waldron3m { Simplex64::centred_3d() } else { Simplex64::equilateral_2d() };
    let nodes = match family {
        FamilyArg::Simplex => simplex_points(&simplex.unwrap_or_else(default), degree)?,
        FamilyArg::Waldron => waldron_points(&simplex.unwrap_or_else(default), degree, weight)?,
        FamilyArg::Waldron3m => waldron_points_modified_3d(&simplex.unwrap_or_else(default), degree, weight)?,
        FamilyArg::Concentric => {
            if simplex.is_some() {
                return usage("--simplex does not apply to the concentric family");
            }
            let radii = concentric.radii.as_ref().map(|inner| {
                let mut r = vec![1.0];
                r.extend_from_slice(inner);
                r
            });
            let layout = ConcentricLayout { outer: concentric.outer_edges.into(), inner: concentric.inner_edges.into() };
            concentric_points_with(degree, radii.as_deref(), layout)?
        }
        FamilyArg::Spherical => return usage("the spherical family is not a simplex node set"),
    };
    Ok(nodes)
}
