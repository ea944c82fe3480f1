//! Lebesgue constants, comparison tables and spherical spacing.

mod lebesgue;
mod spacing;
mod table;

pub use lebesgue::{
    default_resolution, lattice_max, lebesgue_constant, table_scheme, Grid, LatticeMax, LebesgueReport,
    AUTO_MAX_DOUBLINGS, AUTO_STABILITY,
};
pub use spacing::{
    nearest_neighbor_distances, neighbor_spacing, spacing_d, spacing_extrema, spacing_report, spacing_upper_bound,
    sphere_map, NeighborSpacing, SpacingExtrema, SpacingReport, SpacingValue, FD_STEP,
};
pub use table::{
    lebesgue_table, parse_weight, reference_simplex, reference_table_2d, reference_table_3d, FamilySpec,
    LebesgueTable, TableRow,
};
