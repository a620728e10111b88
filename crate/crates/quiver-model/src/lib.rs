//! Combinatorics of the ladder quiver for G(2, k+2).
//!
//! Vertices are `(row, col)` pairs with `(0,1)` and `(k,3)` as the extremal
//! vertices. Each hypersurface of a complete intersection consumes one block
//! of arrows; triplets carry the rational functions attached to the vertices
//! as blocks are eliminated, and block histories record which rows have been
//! consumed and how.

mod block;
mod error;
mod history;
mod quiver;
mod triplet;

pub use block::{
    basic_horizontal_arrows, basic_vertical_arrows, select_blocks, sort_degrees, Block,
    BlockKind, BlockSelection, SortedDegrees,
};
pub use error::{QuiverError, Result};
pub use history::{
    build_lambda_start, build_mwgamma_weighting, history_after_start, BlockHistory,
    WeightFunction,
};
pub use quiver::{build_quiver, ladder_arrows, ladder_vertices, Arrow, ArrowKind, Quiver, Vertex};
pub use triplet::{parse_var_name, sorted_names, var_name, Triplet, EXTREMAL_VAR};
