//! Operators, Hamiltonians and states of the qubit-oscillator system.

mod displacement;
mod graph;
mod hamiltonian;
mod params;
mod state;

pub use displacement::{displace_amplitudes, displacement_element, displacement_matrix, DisplacementMatrix};
pub use graph::{
    build_coupling_graph, build_one_qubit_graph, build_two_qubit_graph, ChainGraph, CouplingKind, Edge, Vertex,
};
pub use hamiltonian::{
    build_chain_hamiltonian, build_tensor_hamiltonian, build_two_qubit_hamiltonian, parity_diagonal, two_qubit_index,
    two_qubit_parity,
};
pub use params::{ModelParams, DEFAULT_N_MAX, MIN_N_MAX};
pub use state::{
    chain_qubit, chain_to_tensor, parity_of, tensor_index, tensor_to_chain, ChainState, Parity, ParitySplit, Qubit,
    TensorState, NORM_TOL, TAIL_LEVELS, TAIL_TOL,
};
