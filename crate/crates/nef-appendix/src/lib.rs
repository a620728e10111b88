//! Laurent mirrors for complete intersections in G(2, k+2) from nef-partitions
//! of the toric degeneration P(2, k+2): the weight matrix, the torus chart
//! cutting out `F_m = 1`, and explicit birational maps for comparing the
//! results with other constructions.

mod chart;
mod error;
mod linalg;
mod maps;
mod matrix;
mod partition;

pub use chart::{
    appendix_x_change, column_terms, coordinate_vars, run_appendix, torus_chart_substitute,
    AppendixTrace,
};
pub use error::{AppendixError, Result};
pub use maps::{apply_birational_map, cubic_chain, identity_bindings, CubicChain};
pub use matrix::{build_weight_matrix, column_label, WeightMatrix};
pub use partition::NefPartition;
