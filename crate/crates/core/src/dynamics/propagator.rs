use num_complex::Complex64;

use crate::dynamics::series::{TimeSeries, TruncationWarning, WARN_TAIL};
use crate::error::{Error, Result};
use crate::model::{build_chain_hamiltonian, ChainState, ModelParams, Parity, TAIL_LEVELS};
use crate::numerics::{eig_sym_tridiag, expi_weighted_sum, EigenPairs};
use crate::par::par_map;

/// Spectral propagator of one parity chain: the chain Hamiltonian is
/// diagonalized once and any time is reached by phasing the eigencomponents.
#[derive(Clone, Debug)]
pub struct Propagator {
    params: ModelParams,
    parity: Parity,
    spectrum: EigenPairs,
    /// `<phi_l | psi(0)>`.
    overlaps: Vec<Complex64>,
    psi0: ChainState,
    tail_bound: f64,
}

pub fn make_propagator(params: &ModelParams, p: Parity, psi0: &ChainState) -> Result<Propagator> {
    params.validate()?;
    if psi0.parity() != p {
        return Err(Error::param(
            "psi0",
            format!("state lives on chain {} but chain {p} was requested", psi0.parity()),
        ));
    }
    if psi0.n_max() != params.n_max {
        return Err(Error::LengthMismatch {
            what: "psi0 vs n_max",
            left: psi0.n_max(),
            right: params.n_max,
        });
    }
    psi0.check_truncation("initial state")?;
    let h = build_chain_hamiltonian(params, p);
    let spectrum = eig_sym_tridiag(&h)?;
    let overlaps: Vec<Complex64> = spectrum
        .vectors()
        .map(|v| v.iter().zip(psi0.amps()).map(|(x, a)| a * x).sum())
        .collect();
    let n = params.n_max;
    let tail_start = n.saturating_sub(TAIL_LEVELS);
    // ||P_tail psi(t)|| <= sum_l |c_l| ||P_tail phi_l|| for every t
    let tail_bound: f64 = overlaps
        .iter()
        .zip(spectrum.vectors())
        .map(|(c, v)| c.norm() * v[tail_start..].iter().map(|x| x * x).sum::<f64>().sqrt())
        .sum();
    Ok(Propagator {
        params: *params,
        parity: p,
        spectrum,
        overlaps,
        psi0: psi0.clone(),
        tail_bound: tail_bound * tail_bound,
    })
}

impl Propagator {
    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn spectrum(&self) -> &EigenPairs {
        &self.spectrum
    }

    pub fn energies(&self) -> &[f64] {
        self.spectrum.values()
    }

    pub fn overlaps(&self) -> &[Complex64] {
        &self.overlaps
    }

    pub fn initial_state(&self) -> &ChainState {
        &self.psi0
    }

    /// `|<phi_l | psi(0)>|^2`.
    pub fn weights(&self) -> Vec<f64> {
        self.overlaps.iter().map(|c| c.norm_sqr()).collect()
    }

    /// Time-independent upper bound on the population of the top levels.
    pub fn tail_mass_bound(&self) -> f64 {
        self.tail_bound
    }

    fn warnings(&self) -> Vec<TruncationWarning> {
        if self.tail_bound > WARN_TAIL {
            vec![TruncationWarning {
                tail_mass_bound: self.tail_bound,
                n_max: self.params.n_max,
            }]
        } else {
            Vec::new()
        }
    }

    /// State at time `t`.
    pub fn evolve(&self, t: f64) -> ChainState {
        let n = self.params.n_max;
        let mut amps = vec![Complex64::new(0.0, 0.0); n];
        for ((c, e), v) in self.overlaps.iter().zip(self.energies()).zip(self.spectrum.vectors()) {
            if c.norm_sqr() == 0.0 {
                continue;
            }
            let coeff = c * Complex64::from_polar(1.0, -e * t);
            for (a, x) in amps.iter_mut().zip(v) {
                *a += coeff * x;
            }
        }
        ChainState::from_raw(self.parity, amps, t)
    }

    /// Survival amplitude `<psi(0)|psi(t)> = sum_l |c_l|^2 e^{-i E_l t}`.
    pub fn survival_amplitude(&self, t: f64) -> Complex64 {
        let w: Vec<Complex64> = self
            .overlaps
            .iter()
            .map(|c| Complex64::new(c.norm_sqr(), 0.0))
            .collect();
        expi_weighted_sum(&w, self.energies(), t).expect("one weight per level")
    }

    pub fn revival_probability(&self, t: f64) -> f64 {
        self.survival_amplitude(t).norm_sqr()
    }

    /// Survival probability of the initial state on a time grid, straight from
    /// the spectral weights.
    pub fn revival_series(&self, t_grid: &[f64]) -> Result<TimeSeries> {
        let values = par_map(t_grid, |&t| self.revival_probability(t));
        let mut s = TimeSeries::new("revival", t_grid.to_vec(), values)?;
        s.warnings = self.warnings();
        Ok(s)
    }

    /// `(x(t), p(t)) = <(b + b^dag, i b^dag - i b)/sqrt 2>`.
    pub fn trajectory(&self, t_grid: &[f64]) -> Result<(TimeSeries, TimeSeries)> {
        let pts = par_map(t_grid, |&t| quadrature_means(&self.evolve(t)));
        let (xs, ps): (Vec<f64>, Vec<f64>) = pts.into_iter().unzip();
        let mut x = TimeSeries::new("x", t_grid.to_vec(), xs)?;
        let mut p = TimeSeries::new("p", t_grid.to_vec(), ps)?;
        x.warnings = self.warnings();
        p.warnings = self.warnings();
        Ok((x, p))
    }

    /// Detuning of every eigenlevel from the equispaced ladder, in units of `omega0`.
    pub fn detuning_table(&self) -> Result<DetuningTable> {
        let omega0 = self.params.omega0;
        if omega0 == 0.0 {
            return Err(Error::param(
                "omega0",
                "detunings are measured in units of omega0, which is zero",
            ));
        }
        let omega = self.params.omega;
        let e_ref = -self.params.g * self.params.g / omega;
        let rows = self
            .energies()
            .iter()
            .zip(self.weights())
            .enumerate()
            .map(|(level, (&energy, weight))| DetuningRow {
                level,
                energy,
                delta: (omega * level as f64 - (energy - e_ref)) / omega0,
                weight,
            })
            .collect();
        Ok(DetuningTable {
            parity: self.parity,
            energy_offset: e_ref,
            rows,
        })
    }
}

/// Mean quadratures `(x, p)` of mode `b`; `x + i p = sqrt(2) <b>`.
pub fn quadrature_means(s: &ChainState) -> (f64, f64) {
    let b = s.mean_b() * std::f64::consts::SQRT_2;
    (b.re, b.im)
}

/// `P_n = |amps[n]|^2`.
pub fn photon_statistics(s: &ChainState) -> Vec<f64> {
    s.amps().iter().map(|a| a.norm_sqr()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DetuningRow {
    pub level: usize,
    pub energy: f64,
    pub delta: f64,
    pub weight: f64,
}

/// Eigenlevels of one chain with their detunings `(omega l - (E_l - E_ref)) / omega0`
/// and their weights in the initial state.
#[derive(Clone, Debug, PartialEq)]
pub struct DetuningTable {
    pub parity: Parity,
    /// `E_ref = -g^2/omega`, removed before forming the detuning.
    pub energy_offset: f64,
    pub rows: Vec<DetuningRow>,
}

impl DetuningTable {
    /// Rows sorted by descending weight, at most `n`.
    pub fn heaviest(&self, n: usize) -> Vec<DetuningRow> {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| b.weight.total_cmp(&a.weight).then(a.level.cmp(&b.level)));
        rows.truncate(n);
        rows
    }

    pub fn total_weight(&self) -> f64 {
        self.rows.iter().map(|r| r.weight).sum()
    }
}
