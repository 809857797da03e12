//! Linear-algebra and special-function kernels.

mod eigen;
mod special;

pub use eigen::{eig_sym_dense, eig_sym_tridiag, EigenPairs, SymMatrix, SymTridiag, MAX_SWEEPS};
pub use special::{displacement_band, expi_weighted_sum, laguerre};
