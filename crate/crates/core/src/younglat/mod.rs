//! The sublattice of Young's lattice with largest part at most 4, with edge
//! labels in `x`; the path matrices `M_n`; the injection `ψ` and the square
//! matrices `N_n` with their determinants.

mod lattice;
mod partition;
mod psi;

use thiserror::Error;

pub use lattice::{
    columns_in_previous_span, edge_label, edges_from, level, path_matrix, rank_at, LabeledEdge,
    PathMatrix, MAX_PART,
};
pub use partition::{partitions, Partition};
pub use psi::{
    build_nn, build_psi, det_poly, magenta_block, special_image, verify_det_factorization,
    DetReport, Factorization,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YoungError {
    #[error("N_n needs n >= 2 (got n={n})")]
    TooSmall { n: u32 },
    #[error("det N_{n} is identically zero")]
    ZeroDeterminant { n: u32 },
}
