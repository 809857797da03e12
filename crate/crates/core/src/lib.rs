//! Quantum Rabi model in the deep strong coupling regime.
//!
//! The qubit-oscillator Hamiltonian splits into two parity chains. Each chain
//! is a displaced harmonic oscillator perturbed by the qubit splitting, so the
//! dynamics can be followed exactly by diagonalizing a real symmetric
//! tridiagonal matrix. The crate provides
//!
//! * [`numerics`]: eigensolvers and special functions,
//! * [`model`]: Hamiltonians, parity chains, displacement operators,
//! * [`analytic`]: closed forms at `omega0 = 0`, perturbative levels and the
//!   two-mode approximation,
//! * [`dynamics`]: spectral propagation and observables,
//! * [`wigner`]: phase-space distributions of the chain mode.
//!
//! Units: `hbar = 1`, frequencies and energies share one unit, usually `omega = 1`.

pub mod analytic;
pub mod dynamics;
mod error;
pub mod model;
pub mod numerics;
mod par;
pub mod wigner;

pub use error::{Error, Result};
pub use model::{ChainState, ModelParams, Parity, Qubit, TensorState};
