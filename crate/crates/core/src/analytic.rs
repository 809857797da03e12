//! Closed-form results: the exactly solvable `omega0 = 0` evolution, the
//! perturbative spectrum in `omega0/omega`, and the two-mode approximation
//! to the partial revivals.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::model::{displacement_element, ChainState, ModelParams, Parity};
use crate::numerics::expi_weighted_sum;

/// Levels below the truncation edge that must stay free when a perturbative
/// level is evaluated.
pub const LEVEL_MARGIN: usize = 16;

/// Coherent orbit of the `omega0 = 0` dynamics started from `|p, 0_b>`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherentOrbit {
    pub beta0: f64,
    pub omega: f64,
}

impl CoherentOrbit {
    pub fn new(params: &ModelParams) -> Self {
        Self {
            beta0: params.beta0(),
            omega: params.omega,
        }
    }

    /// `beta(t) = beta0 (e^{-i omega t} - 1)`.
    pub fn beta_at(&self, t: f64) -> Complex64 {
        beta_of_t(self.beta0, self.omega, t)
    }

    /// Global phase `(g^2/omega) t - beta0^2 sin(omega t)` multiplying `|beta(t)>`.
    pub fn phase_at(&self, t: f64) -> f64 {
        let b2 = self.beta0 * self.beta0;
        b2 * self.omega * t - b2 * (self.omega * t).sin()
    }
}

pub fn beta_of_t(beta0: f64, omega: f64, t: f64) -> Complex64 {
    beta0 * (Complex64::from_polar(1.0, -omega * t) - 1.0)
}

/// `|beta(t)|^2 = 4 beta0^2 sin^2(omega t / 2)`.
fn beta_sq(beta0: f64, omega: f64, t: f64) -> f64 {
    let s = (0.5 * omega * t).sin();
    4.0 * beta0 * beta0 * s * s
}

/// Survival probability of `|+, 0_b>` at `omega0 = 0`: `exp(-|beta(t)|^2)`.
pub fn revival_probability_w0_zero(beta0: f64, omega: f64, t: f64) -> f64 {
    (-beta_sq(beta0, omega, t)).exp()
}

/// Coherent-state amplitudes `e^{-|beta|^2/2} beta^n / sqrt(n!)`.
pub(crate) fn coherent_amplitudes(beta: Complex64, n_max: usize) -> Vec<Complex64> {
    let mut amps = Vec::with_capacity(n_max);
    let mut a = Complex64::new((-0.5 * beta.norm_sqr()).exp(), 0.0);
    for n in 0..n_max {
        if n > 0 {
            a *= beta / (n as f64).sqrt();
        }
        amps.push(a);
    }
    amps
}

/// Exact state at `omega0 = 0` starting from `|p, 0_b>`:
/// `e^{i (g^2/omega) t} e^{-i beta0^2 sin(omega t)} |beta(t)>` on chain `p`.
pub fn exact_state_w0_zero(params: &ModelParams, p: Parity, t: f64) -> Result<ChainState> {
    params.validate()?;
    if params.omega0 != 0.0 {
        return Err(Error::param("omega0", "the closed-form evolution requires omega0 = 0"));
    }
    let orbit = CoherentOrbit::new(params);
    let phase = Complex64::from_polar(1.0, orbit.phase_at(t));
    let amps: Vec<Complex64> = coherent_amplitudes(orbit.beta_at(t), params.n_max)
        .into_iter()
        .map(|a| a * phase)
        .collect();
    let norm_sq: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    let state = ChainState::from_raw(p, amps, t);
    state.check_truncation("coherent orbit")?;
    if (norm_sq - 1.0).abs() > 1e-10 {
        return Err(Error::TruncationOverflow {
            what: "coherent orbit",
            detail: format!("truncated norm^2 = {norm_sq}"),
            n_max: params.n_max,
        });
    }
    Ok(state)
}

/// `Delta_{nm} = <n| D(2 beta0) |m>`.
pub fn coupling_overlap(beta0: f64, n: usize, m: usize) -> f64 {
    displacement_element(2.0 * beta0, n, m)
}

/// First-order detuning `p (-1)^n Delta_{nn} / 2`, in units of `omega0`.
pub fn first_order_detuning(beta0: f64, p: Parity, n: usize) -> f64 {
    let alt = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    0.5 * p.sign() * alt * coupling_overlap(beta0, n, n)
}

/// Half-width of the second-order sum over `m`.
pub fn second_order_cutoff(beta0: f64) -> usize {
    (4.0 * beta0 * beta0).ceil() as usize + 20
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PerturbationOrder {
    Zeroth,
    First,
    Second,
}

impl PerturbationOrder {
    pub fn from_int(order: u8) -> Option<Self> {
        match order {
            0 => Some(Self::Zeroth),
            1 => Some(Self::First),
            2 => Some(Self::Second),
            _ => None,
        }
    }

    pub fn as_int(self) -> u8 {
        match self {
            Self::Zeroth => 0,
            Self::First => 1,
            Self::Second => 2,
        }
    }
}

/// A chain level in the perturbative expansion around the displaced oscillator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PerturbedLevel {
    pub n_b: usize,
    pub energy: f64,
    /// First-order detuning in units of `omega0`.
    pub delta: f64,
    pub order: PerturbationOrder,
}

/// Energy of level `n_b` on chain `p` to the requested order in `omega0/omega`.
pub fn perturbative_energy(
    params: &ModelParams,
    p: Parity,
    n_b: usize,
    order: PerturbationOrder,
) -> Result<PerturbedLevel> {
    params.validate()?;
    if n_b + LEVEL_MARGIN > params.n_max {
        return Err(Error::param(
            "n_b",
            format!("level {n_b} too close to the truncation edge n_max = {}", params.n_max),
        ));
    }
    let beta0 = params.beta0();
    let delta = first_order_detuning(beta0, p, n_b);
    let mut energy = params.omega * n_b as f64 - params.g * params.g / params.omega;
    if order != PerturbationOrder::Zeroth {
        energy -= params.omega0 * delta;
    }
    if order == PerturbationOrder::Second && params.omega0 != 0.0 {
        let cut = second_order_cutoff(beta0);
        let lo = n_b.saturating_sub(cut);
        let hi = n_b + cut;
        let pref = params.omega0 * params.omega0 / (4.0 * params.omega);
        let sum: f64 = (lo..=hi)
            .filter(|&m| m != n_b)
            .map(|m| {
                let d = coupling_overlap(beta0, n_b, m);
                d * d / (n_b as f64 - m as f64)
            })
            .sum();
        energy += pref * sum;
    }
    Ok(PerturbedLevel {
        n_b,
        energy,
        delta,
        order,
    })
}

/// Resonant level `[(g/omega)^2 + N_b]`, half-integers rounded up.
pub fn resonant_level(params: &ModelParams, initial_level: usize) -> usize {
    let x = params.beta0() * params.beta0() + initial_level as f64;
    (x + 0.5).floor() as usize
}

/// Phase convention for the resonant-level correction of the two-mode
/// approximation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TwoModeConvention {
    /// Resonant level picks up the first-order phase `omega0 delta t` in both the
    /// state and the revival formula.
    #[default]
    FirstOrderPhase,
    /// Revival formula with `cos(omega0 delta t / 2)` taken literally; the state
    /// uses the matching half phase.
    Printed,
}

impl TwoModeConvention {
    fn phase_rate(self, omega0: f64, delta: f64) -> f64 {
        match self {
            TwoModeConvention::FirstOrderPhase => omega0 * delta,
            TwoModeConvention::Printed => 0.5 * omega0 * delta,
        }
    }
}

/// `e^{-beta0^2} beta0^{2N} / N!`: population of level `N` of `D(-beta0)|n>` in the
/// initial vacuum.
fn poisson_weight(beta0: f64, level: usize) -> f64 {
    let mean = beta0 * beta0;
    let mut w = (-mean).exp();
    for j in 1..=level {
        w *= mean / j as f64;
    }
    w
}

/// Two-mode approximate state starting from `|+, 0_b>`: the `omega0 = 0`
/// solution plus a phase-slipped copy of the resonant eigencomponent, then
/// renormalized.
pub fn two_mode_state(params: &ModelParams, t: f64) -> Result<ChainState> {
    two_mode_state_with(params, t, TwoModeConvention::default())
}

pub fn two_mode_state_with(params: &ModelParams, t: f64, conv: TwoModeConvention) -> Result<ChainState> {
    params.validate()?;
    let beta0 = params.beta0();
    let core = exact_state_w0_zero(&params.with_omega0(0.0), Parity::Plus, t)?;
    let nr = resonant_level(params, 0);
    if nr + LEVEL_MARGIN > params.n_max {
        return Err(Error::TruncationOverflow {
            what: "two-mode state",
            detail: format!("resonant level {nr} too close to the edge"),
            n_max: params.n_max,
        });
    }
    let psi_nr = displacement_element(beta0, nr, 0);
    let delta = first_order_detuning(beta0, Parity::Plus, nr);
    let rate = conv.phase_rate(params.omega0, delta);
    // unperturbed phase of level N, on the same energy origin as the core state
    let e0 = params.omega * nr as f64 - params.g * params.g / params.omega;
    let coeff = psi_nr * Complex64::from_polar(1.0, -e0 * t) * (Complex64::from_polar(1.0, rate * t) - 1.0);
    let mut amps = core.amps().to_vec();
    if coeff != Complex64::new(0.0, 0.0) {
        for (n, a) in amps.iter_mut().enumerate() {
            *a += coeff * displacement_element(-beta0, n, nr);
        }
    }
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    amps.iter_mut().for_each(|a| *a /= norm);
    Ok(ChainState::from_raw(Parity::Plus, amps, t))
}

/// Two-mode estimate of the survival probability of `|+, 0_b>`:
/// `2 e^{-|beta|^2/2 - beta0^2} beta0^{2N}/N! [cos(phase) - 1] + e^{-|beta|^2}`.
/// Not clamped; see [`clamp_unit`] for reporting.
pub fn two_mode_revival(params: &ModelParams, t: f64) -> f64 {
    two_mode_revival_with(params, t, TwoModeConvention::default())
}

pub fn two_mode_revival_with(params: &ModelParams, t: f64, conv: TwoModeConvention) -> f64 {
    let beta0 = params.beta0();
    let nr = resonant_level(params, 0);
    let delta = first_order_detuning(beta0, Parity::Plus, nr);
    let b2 = beta_sq(beta0, params.omega, t);
    let pref = 2.0 * (-0.5 * b2).exp() * poisson_weight(beta0, nr);
    let osc = match conv {
        TwoModeConvention::FirstOrderPhase => (params.omega0 * delta * t).cos(),
        TwoModeConvention::Printed => (0.5 * params.omega0 * delta * t).cos(),
    };
    pref * (osc - 1.0) + (-b2).exp()
}

/// Clamps values into `[0, 1]`, returning how many were moved.
pub fn clamp_unit(values: &[f64]) -> (Vec<f64>, usize) {
    let mut events = 0;
    let out = values
        .iter()
        .map(|&v| {
            let c = v.clamp(0.0, 1.0);
            if c != v {
                events += 1;
            }
            c
        })
        .collect();
    (out, events)
}

/// Perturbative spectrum of one chain together with the displaced-basis
/// weights of an initial chain level, ready to evaluate the spectral revival
/// sum with approximate energies.
#[derive(Clone, Debug)]
pub struct PerturbativeSpectrum {
    pub levels: Vec<PerturbedLevel>,
    /// `|<n| D(beta0) |N_b>|^2` per level.
    pub weights: Vec<f64>,
}

impl PerturbativeSpectrum {
    pub fn new(params: &ModelParams, p: Parity, initial_level: usize, order: PerturbationOrder) -> Result<Self> {
        params.validate()?;
        let count = params.n_max - LEVEL_MARGIN;
        let beta0 = params.beta0();
        let levels = (0..count)
            .map(|n| perturbative_energy(params, p, n, order))
            .collect::<Result<Vec<_>>>()?;
        let weights = (0..count)
            .map(|n| {
                let d = displacement_element(beta0, n, initial_level);
                d * d
            })
            .collect();
        Ok(Self { levels, weights })
    }

    pub fn energies(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.energy).collect()
    }

    /// `|sum_n w_n e^{-i E_n t}|^2`.
    pub fn revival(&self, t: f64) -> f64 {
        let w: Vec<Complex64> = self.weights.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        expi_weighted_sum(&w, &self.energies(), t)
            .expect("lengths match")
            .norm_sqr()
    }
}
