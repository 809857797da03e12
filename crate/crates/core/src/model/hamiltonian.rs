use crate::model::params::ModelParams;
use crate::model::state::{parity_of, tensor_index, Parity, Qubit};
use crate::numerics::{SymMatrix, SymTridiag};

/// Chain Hamiltonian `omega b^dag b + g (b + b^dag) - (omega0/2) (-1)^{b^dag b} p`
/// in the number basis of `b`.
pub fn build_chain_hamiltonian(params: &ModelParams, p: Parity) -> SymTridiag {
    let n_max = params.n_max;
    let diag = (0..n_max)
        .map(|n| {
            let alt = if n % 2 == 0 { 1.0 } else { -1.0 };
            params.omega * n as f64 - 0.5 * params.omega0 * p.sign() * alt
        })
        .collect();
    let offdiag = (0..n_max - 1).map(|n| params.g * ((n + 1) as f64).sqrt()).collect();
    SymTridiag::new(diag, offdiag).expect("chain hamiltonian is well formed for validated params")
}

/// Full Rabi Hamiltonian `(omega0/2) sigma_z + omega a^dag a + g sigma_x (a + a^dag)`
/// on the interleaved basis `(g,0), (e,0), (g,1), (e,1), ...`.
pub fn build_tensor_hamiltonian(params: &ModelParams) -> SymMatrix {
    let n_max = params.n_max;
    let mut h = SymMatrix::zeros(2 * n_max);
    for n in 0..n_max {
        for q in [Qubit::Ground, Qubit::Excited] {
            let i = tensor_index(q, n);
            h.set(i, i, params.omega * n as f64 + 0.5 * params.omega0 * q.sigma_z());
        }
        if n + 1 < n_max {
            let c = params.g * ((n + 1) as f64).sqrt();
            // sigma^+ a^dag: |g,n> -> |e,n+1>  (counter-rotating)
            h.set(tensor_index(Qubit::Ground, n), tensor_index(Qubit::Excited, n + 1), c);
            // sigma^- a^dag: |e,n> -> |g,n+1>  (rotating)
            h.set(tensor_index(Qubit::Excited, n), tensor_index(Qubit::Ground, n + 1), c);
        }
    }
    h
}

/// Diagonal of the parity operator in the interleaved product basis.
pub fn parity_diagonal(n_max: usize) -> Vec<f64> {
    (0..n_max)
        .flat_map(|n| [Qubit::Ground, Qubit::Excited].map(|q| parity_of(q, n).sign()))
        .collect()
}

/// Basis index for two qubits and a mode: `4 n + 2 q1 + q2`.
pub fn two_qubit_index(q1: Qubit, q2: Qubit, n: usize) -> usize {
    4 * n + 2 * q1.index() + q2.index()
}

/// Generalized parity `sigma_z^(1) sigma_z^(2) (-1)^n`.
pub fn two_qubit_parity(q1: Qubit, q2: Qubit, n: usize) -> Parity {
    let photon_sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    if q1.sigma_z() * q2.sigma_z() * photon_sign > 0.0 {
        Parity::Plus
    } else {
        Parity::Minus
    }
}

/// Two qubits with equal couplings to one mode:
/// `omega a^dag a + (omega0/2)(sz1 + sz2) + g (sx1 + sx2)(a + a^dag)`.
pub fn build_two_qubit_hamiltonian(params: &ModelParams) -> SymMatrix {
    let n_max = params.n_max;
    let qs = [Qubit::Ground, Qubit::Excited];
    let mut h = SymMatrix::zeros(4 * n_max);
    for n in 0..n_max {
        for q1 in qs {
            for q2 in qs {
                let i = two_qubit_index(q1, q2, n);
                h.set(
                    i,
                    i,
                    params.omega * n as f64 + 0.5 * params.omega0 * (q1.sigma_z() + q2.sigma_z()),
                );
                if n + 1 < n_max {
                    let c = params.g * ((n + 1) as f64).sqrt();
                    h.set(i, two_qubit_index(q1.flip(), q2, n + 1), c);
                    h.set(i, two_qubit_index(q1, q2.flip(), n + 1), c);
                }
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{eig_sym_dense, eig_sym_tridiag};

    fn params(omega0: f64, g: f64, n_max: usize) -> ModelParams {
        ModelParams::new(1.0, omega0, g, n_max).unwrap()
    }

    #[test]
    fn uncoupled_chain_is_bare_ladder() {
        let h = build_chain_hamiltonian(&params(0.0, 0.0, 16), Parity::Plus);
        for (n, d) in h.diag().iter().enumerate() {
            assert_eq!(*d, n as f64);
        }
        assert!(h.offdiag().iter().all(|&o| o == 0.0));
    }

    #[test]
    fn qubit_shift_sign_on_plus_chain() {
        let h = build_chain_hamiltonian(&params(0.5, 2.0, 16), Parity::Plus);
        assert_eq!(h.diag()[0], -0.25);
        assert_eq!(h.diag()[1], 1.25);
        let hm = build_chain_hamiltonian(&params(0.5, 2.0, 16), Parity::Minus);
        assert_eq!(hm.diag()[0], 0.25);
    }

    #[test]
    fn ladder_coupling() {
        let h = build_chain_hamiltonian(&params(0.0, 2.0, 16), Parity::Plus);
        assert!((h.offdiag()[3] - 4.0).abs() < 1e-15);
    }

    #[test]
    fn tensor_matrix_elements() {
        let g = 2.0_f64;
        let h = build_tensor_hamiltonian(&params(0.5, g, 16));
        let e3 = tensor_index(Qubit::Excited, 3);
        let g2 = tensor_index(Qubit::Ground, 2);
        let e1 = tensor_index(Qubit::Excited, 1);
        assert!((h.get(e3, g2) - g * 3f64.sqrt()).abs() < 1e-15);
        assert!((h.get(e1, g2) - g * 2f64.sqrt()).abs() < 1e-15);
        let g0 = tensor_index(Qubit::Ground, 0);
        assert_eq!(h.get(g0, g0), -0.25);
    }

    #[test]
    fn tensor_hamiltonian_never_mixes_parity() {
        let n_max = 24;
        let h = build_tensor_hamiltonian(&params(0.7, 1.3, n_max));
        let par = parity_diagonal(n_max);
        for i in 0..2 * n_max {
            for j in 0..2 * n_max {
                if par[i] != par[j] {
                    assert_eq!(h.get(i, j), 0.0);
                }
            }
        }
    }

    #[test]
    fn tensor_spectrum_is_union_of_chain_spectra() {
        let n_max = 64;
        let p = params(0.5, 2.0, n_max);
        let full = eig_sym_dense(&build_tensor_hamiltonian(&p)).unwrap();
        let keep = n_max - n_max / 10;
        let per_chain: Vec<Vec<f64>> = Parity::BOTH
            .iter()
            .map(|&par| eig_sym_tridiag(&build_chain_hamiltonian(&p, par)).unwrap().values()[..keep].to_vec())
            .collect();
        let cutoff = per_chain.iter().map(|v| v[keep - 1]).fold(f64::INFINITY, f64::min);
        let mut chains: Vec<f64> = per_chain.concat().into_iter().filter(|&v| v <= cutoff).collect();
        chains.sort_by(f64::total_cmp);
        let full_low: Vec<f64> = full.values().iter().copied().filter(|&v| v <= cutoff + 1e-9).collect();
        assert_eq!(full_low.len(), chains.len());
        for (a, b) in full_low.iter().zip(&chains) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
    }

    #[test]
    fn two_qubit_hamiltonian_conserves_generalized_parity() {
        let n_max = 10;
        let h = build_two_qubit_hamiltonian(&params(0.4, 1.5, n_max));
        let qs = [Qubit::Ground, Qubit::Excited];
        let mut labels = Vec::new();
        for n in 0..n_max {
            for a in qs {
                for b in qs {
                    labels.push((two_qubit_index(a, b, n), two_qubit_parity(a, b, n)));
                }
            }
        }
        for &(i, pi) in &labels {
            for &(j, pj) in &labels {
                if pi != pj {
                    assert_eq!(h.get(i, j), 0.0);
                }
            }
        }
    }
}
