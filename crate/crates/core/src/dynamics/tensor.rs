//! Evolution of states in the product basis `|q, n_a>`.
//!
//! [`SplitPropagator`] evolves each parity component on its own chain;
//! [`TensorPropagator`] diagonalizes the full `2 n_max` Hamiltonian without
//! using the parity structure, which makes it an independent route for
//! checking parity conservation.

use num_complex::Complex64;

use crate::dynamics::propagator::{make_propagator, Propagator};
use crate::error::Result;
use crate::model::{
    build_tensor_hamiltonian, chain_to_tensor, parity_diagonal, tensor_to_chain, ModelParams, Parity, ParitySplit,
    TensorState,
};
use crate::numerics::{eig_sym_dense, EigenPairs};

/// `<Pi>` of a product-basis state.
pub fn parity_expectation(s: &TensorState) -> f64 {
    let par = parity_diagonal(s.n_max());
    s.amps().iter().zip(par).map(|(a, p)| a.norm_sqr() * p).sum()
}

/// Sector-resolved survival probability
/// `sum_p |<psi0| P_p |psi(t)>|^2 / <psi0| P_p |psi0>`, with `P_p` the projector
/// on parity `p`. Parity superselection forbids interference between the
/// sectors, so this equals the weight-averaged per-chain survival.
pub fn sector_survival(psi0: &TensorState, psi_t: &TensorState) -> f64 {
    let par = parity_diagonal(psi0.n_max());
    Parity::BOTH
        .iter()
        .map(|&p| {
            let mut amp = Complex64::new(0.0, 0.0);
            let mut w = 0.0;
            for ((a0, at), &s) in psi0.amps().iter().zip(psi_t.amps()).zip(&par) {
                if s == p.sign() {
                    amp += a0.conj() * at;
                    w += a0.norm_sqr();
                }
            }
            if w > 0.0 {
                amp.norm_sqr() / w
            } else {
                0.0
            }
        })
        .sum()
}

/// Dense diagonalization of the full Hamiltonian.
#[derive(Clone, Debug)]
pub struct TensorPropagator {
    spectrum: EigenPairs,
    overlaps: Vec<Complex64>,
    psi0: TensorState,
}

impl TensorPropagator {
    pub fn new(params: &ModelParams, psi0: &TensorState) -> Result<Self> {
        params.validate()?;
        let spectrum = eig_sym_dense(&build_tensor_hamiltonian(params))?;
        let overlaps = spectrum
            .vectors()
            .map(|v| v.iter().zip(psi0.amps()).map(|(x, a)| a * x).sum())
            .collect();
        Ok(Self {
            spectrum,
            overlaps,
            psi0: psi0.clone(),
        })
    }

    pub fn evolve(&self, t: f64) -> TensorState {
        let n = self.psi0.amps().len();
        let mut amps = vec![Complex64::new(0.0, 0.0); n];
        for ((c, e), v) in self
            .overlaps
            .iter()
            .zip(self.spectrum.values())
            .zip(self.spectrum.vectors())
        {
            let coeff = c * Complex64::from_polar(1.0, -e * t);
            for (a, x) in amps.iter_mut().zip(v) {
                *a += coeff * x;
            }
        }
        TensorState::from_raw(amps)
    }

    pub fn initial_state(&self) -> &TensorState {
        &self.psi0
    }

    pub fn spectrum(&self) -> &EigenPairs {
        &self.spectrum
    }
}

/// Evolves each parity component on its chain.
#[derive(Clone, Debug)]
pub struct SplitPropagator {
    split: ParitySplit,
    chains: [Option<Propagator>; 2],
}

impl SplitPropagator {
    pub fn new(params: &ModelParams, psi0: &TensorState) -> Result<Self> {
        let split = tensor_to_chain(psi0);
        let mut chains = [None, None];
        for p in Parity::BOTH {
            if let Some(c) = split.chain(p) {
                chains[p.index()] = Some(make_propagator(params, p, c)?);
            }
        }
        Ok(Self { split, chains })
    }

    pub fn weight(&self, p: Parity) -> f64 {
        self.split.weight(p)
    }

    pub fn chain(&self, p: Parity) -> Option<&Propagator> {
        self.chains[p.index()].as_ref()
    }

    pub fn evolve(&self, t: f64) -> Result<TensorState> {
        let mut chains = [None, None];
        for p in Parity::BOTH {
            if let Some(prop) = self.chain(p) {
                chains[p.index()] = Some(prop.evolve(t));
            }
        }
        chain_to_tensor(&ParitySplit {
            chains,
            weights: self.split.weights,
        })
    }

    /// Per-chain survival probabilities, `None` for absent chains.
    pub fn chain_survival(&self, t: f64) -> [Option<f64>; 2] {
        Parity::BOTH.map(|p| self.chain(p).map(|c| c.revival_probability(t)))
    }

    /// `sum_p w_p P_p(t)`.
    pub fn combined_survival(&self, t: f64) -> f64 {
        Parity::BOTH
            .iter()
            .filter_map(|&p| self.chain(p).map(|c| self.weight(p) * c.revival_probability(t)))
            .sum()
    }

    /// `<Pi> = w_+ - w_-`, constant in time.
    pub fn parity_expectation(&self) -> f64 {
        self.weight(Parity::Plus) - self.weight(Parity::Minus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Qubit;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn routes_agree() {
        let params = ModelParams::new(1.0, 0.5, 1.0, 48).unwrap();
        let psi0 = TensorState::from_components(
            &[
                (Qubit::Ground, 0, c(1.0)),
                (Qubit::Excited, 0, c(1.0)),
                (Qubit::Ground, 1, Complex64::new(0.0, 0.5)),
            ],
            48,
        )
        .unwrap();
        let dense = TensorPropagator::new(&params, &psi0).unwrap();
        let split = SplitPropagator::new(&params, &psi0).unwrap();
        for &t in &[0.0, 0.7, 3.9, 8.0] {
            let a = dense.evolve(t);
            let b = split.evolve(t).unwrap();
            let dev = a
                .amps()
                .iter()
                .zip(b.amps())
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            assert!(dev < 1e-10, "t={t}: {dev}");
            assert!((sector_survival(&psi0, &a) - split.combined_survival(t)).abs() < 1e-12);
            assert!((parity_expectation(&a) - split.parity_expectation()).abs() < 1e-12);
        }
    }
}
