//! Exact time evolution by spectral decomposition and the observables built on it.

mod propagator;
mod series;
mod tensor;

pub use propagator::{make_propagator, photon_statistics, quadrature_means, DetuningRow, DetuningTable, Propagator};
pub use series::{linspace, revival_peaks, RevivalPeak, TimeSeries, TruncationWarning, WARN_TAIL};
pub use tensor::{parity_expectation, sector_survival, SplitPropagator, TensorPropagator};
