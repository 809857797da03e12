use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Normalization tolerance shared by all state constructors.
pub const NORM_TOL: f64 = 1e-10;

/// Levels at the top of the truncated space whose population signals
/// truncation trouble.
pub const TAIL_LEVELS: usize = 8;

/// Tail mass above which a chain state is considered truncation-unhealthy.
pub const TAIL_TOL: f64 = 1e-10;

/// Eigenvalue of the parity operator `-sigma_z (-1)^{a^dag a}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Plus,
    Minus,
}

impl Parity {
    pub const BOTH: [Parity; 2] = [Parity::Plus, Parity::Minus];

    pub fn sign(self) -> f64 {
        match self {
            Parity::Plus => 1.0,
            Parity::Minus => -1.0,
        }
    }

    pub fn from_sign(s: i32) -> Option<Self> {
        match s {
            1 => Some(Parity::Plus),
            -1 => Some(Parity::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Parity::Plus => Parity::Minus,
            Parity::Minus => Parity::Plus,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Parity::Plus => 0,
            Parity::Minus => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Plus => "+1",
            Parity::Minus => "-1",
        })
    }
}

/// Qubit level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Qubit {
    Ground,
    Excited,
}

impl Qubit {
    /// Eigenvalue of `sigma_z`.
    pub fn sigma_z(self) -> f64 {
        match self {
            Qubit::Ground => -1.0,
            Qubit::Excited => 1.0,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Qubit::Ground => Qubit::Excited,
            Qubit::Excited => Qubit::Ground,
        }
    }

    pub(crate) fn index(self) -> usize {
        match self {
            Qubit::Ground => 0,
            Qubit::Excited => 1,
        }
    }

    pub fn label(self) -> char {
        match self {
            Qubit::Ground => 'g',
            Qubit::Excited => 'e',
        }
    }
}

fn norm_sq(amps: &[Complex64]) -> f64 {
    amps.iter().map(|a| a.norm_sqr()).sum()
}

fn check_norm(amps: &[Complex64]) -> Result<()> {
    let n2 = norm_sq(amps);
    if (n2 - 1.0).abs() > NORM_TOL || !n2.is_finite() {
        return Err(Error::NotNormalized { norm_sq: n2 });
    }
    Ok(())
}

/// Amplitudes over one parity chain `|p, n_b>`, `n_b = 0 .. n_max-1`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainState {
    parity: Parity,
    amps: Vec<Complex64>,
    time: f64,
}

impl ChainState {
    pub fn new(parity: Parity, amps: Vec<Complex64>, time: f64) -> Result<Self> {
        check_norm(&amps)?;
        Ok(Self { parity, amps, time })
    }

    /// `|p, level>` in a space of `n_max` levels.
    pub fn basis(parity: Parity, level: usize, n_max: usize) -> Result<Self> {
        if level >= n_max {
            return Err(Error::param(
                "level",
                format!("{level} outside truncated space of {n_max} levels"),
            ));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); n_max];
        amps[level] = Complex64::new(1.0, 0.0);
        Ok(Self {
            parity,
            amps,
            time: 0.0,
        })
    }

    /// Normalized finite superposition of chain basis vectors.
    pub fn from_components(parity: Parity, components: &[(usize, Complex64)], n_max: usize) -> Result<Self> {
        let mut amps = vec![Complex64::new(0.0, 0.0); n_max];
        for &(level, a) in components {
            if level >= n_max {
                return Err(Error::param(
                    "level",
                    format!("{level} outside truncated space of {n_max} levels"),
                ));
            }
            amps[level] += a;
        }
        let n2 = norm_sq(&amps);
        if n2 == 0.0 || !n2.is_finite() {
            return Err(Error::param("amplitudes", "superposition has zero or non-finite norm"));
        }
        let s = 1.0 / n2.sqrt();
        amps.iter_mut().for_each(|a| *a *= s);
        Ok(Self {
            parity,
            amps,
            time: 0.0,
        })
    }

    pub(crate) fn from_raw(parity: Parity, amps: Vec<Complex64>, time: f64) -> Self {
        Self { parity, amps, time }
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn n_max(&self) -> usize {
        self.amps.len()
    }

    /// Time at which this state is valid.
    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn norm_sq(&self) -> f64 {
        norm_sq(&self.amps)
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &ChainState) -> Complex64 {
        self.amps.iter().zip(&other.amps).map(|(a, b)| a.conj() * b).sum()
    }

    /// Population of the top `TAIL_LEVELS` levels.
    pub fn tail_mass(&self) -> f64 {
        let start = self.amps.len().saturating_sub(TAIL_LEVELS);
        norm_sq(&self.amps[start..])
    }

    pub fn check_truncation(&self, what: &'static str) -> Result<()> {
        let tail = self.tail_mass();
        if tail > TAIL_TOL {
            return Err(Error::TruncationOverflow {
                what,
                detail: format!("tail mass {tail:.3e} in the top {TAIL_LEVELS} levels"),
                n_max: self.n_max(),
            });
        }
        Ok(())
    }

    /// Applies the chain lowering operator `b`, `b|p,n> = sqrt(n)|p,n-1>`.
    pub fn lowered(&self) -> Vec<Complex64> {
        lower(&self.amps)
    }

    /// `<b>`.
    pub fn mean_b(&self) -> Complex64 {
        (1..self.amps.len())
            .map(|n| self.amps[n - 1].conj() * self.amps[n] * (n as f64).sqrt())
            .sum()
    }

    /// Index one past the last level with non-negligible amplitude.
    pub(crate) fn support(&self) -> usize {
        let mut tail = 0.0;
        for n in (0..self.amps.len()).rev() {
            tail += self.amps[n].norm_sqr();
            if tail > 1e-20 {
                return n + 1;
            }
        }
        0
    }
}

pub(crate) fn lower(amps: &[Complex64]) -> Vec<Complex64> {
    let n = amps.len();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for k in 1..n {
        out[k - 1] = amps[k] * (k as f64).sqrt();
    }
    out
}

/// State in the product basis `|q, n_a>`, stored interleaved: index `2 n_a + q`
/// with `q = 0` for ground and `1` for excited.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorState {
    amps: Vec<Complex64>,
}

impl TensorState {
    pub fn new(amps: Vec<Complex64>) -> Result<Self> {
        if !amps.len().is_multiple_of(2) || amps.is_empty() {
            return Err(Error::param(
                "amps",
                "tensor state length must be a positive multiple of 2",
            ));
        }
        check_norm(&amps)?;
        Ok(Self { amps })
    }

    pub fn basis(q: Qubit, n_a: usize, n_max: usize) -> Result<Self> {
        Self::from_components(&[(q, n_a, Complex64::new(1.0, 0.0))], n_max)
    }

    /// Normalized superposition of `|q, n_a>` components.
    pub fn from_components(components: &[(Qubit, usize, Complex64)], n_max: usize) -> Result<Self> {
        let mut amps = vec![Complex64::new(0.0, 0.0); 2 * n_max];
        for &(q, n, a) in components {
            if n >= n_max {
                return Err(Error::param(
                    "n_a",
                    format!("{n} outside truncated space of {n_max} levels"),
                ));
            }
            amps[tensor_index(q, n)] += a;
        }
        let n2 = norm_sq(&amps);
        if n2 == 0.0 || !n2.is_finite() {
            return Err(Error::param("amplitudes", "superposition has zero or non-finite norm"));
        }
        let s = 1.0 / n2.sqrt();
        amps.iter_mut().for_each(|a| *a *= s);
        Ok(Self { amps })
    }

    pub(crate) fn from_raw(amps: Vec<Complex64>) -> Self {
        Self { amps }
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn n_max(&self) -> usize {
        self.amps.len() / 2
    }

    pub fn amp(&self, q: Qubit, n_a: usize) -> Complex64 {
        self.amps[tensor_index(q, n_a)]
    }

    pub fn norm_sq(&self) -> f64 {
        norm_sq(&self.amps)
    }
}

pub fn tensor_index(q: Qubit, n_a: usize) -> usize {
    2 * n_a + q.index()
}

/// Parity `-sigma_z (-1)^{n_a}` of a product basis state.
pub fn parity_of(q: Qubit, n_a: usize) -> Parity {
    let photon_sign = if n_a.is_multiple_of(2) { 1.0 } else { -1.0 };
    if -q.sigma_z() * photon_sign > 0.0 {
        Parity::Plus
    } else {
        Parity::Minus
    }
}

/// Qubit level occupied at position `n_b` of chain `p`: chain `+1` runs
/// `g0, e1, g2, ...`, chain `-1` runs `e0, g1, e2, ...`.
pub fn chain_qubit(p: Parity, n_b: usize) -> Qubit {
    match (p, n_b.is_multiple_of(2)) {
        (Parity::Plus, true) | (Parity::Minus, false) => Qubit::Ground,
        _ => Qubit::Excited,
    }
}

/// A tensor state split into its two parity components.
#[derive(Clone, Debug, PartialEq)]
pub struct ParitySplit {
    /// Normalized chain states; `None` where the weight is exactly zero.
    pub chains: [Option<ChainState>; 2],
    /// Squared norm of each parity component; sums to one.
    pub weights: [f64; 2],
}

impl ParitySplit {
    pub fn chain(&self, p: Parity) -> Option<&ChainState> {
        self.chains[p.index()].as_ref()
    }

    pub fn weight(&self, p: Parity) -> f64 {
        self.weights[p.index()]
    }
}

/// Maps `|q, n_a>` amplitudes onto the two chains `|p, n_b>` (with `n_b = n_a`).
pub fn tensor_to_chain(s: &TensorState) -> ParitySplit {
    let n_max = s.n_max();
    let mut chains = [None, None];
    let mut weights = [0.0; 2];
    for p in Parity::BOTH {
        let amps: Vec<Complex64> = (0..n_max).map(|n| s.amp(chain_qubit(p, n), n)).collect();
        let w = norm_sq(&amps);
        weights[p.index()] = w;
        if w > 0.0 {
            let inv = 1.0 / w.sqrt();
            chains[p.index()] = Some(ChainState::from_raw(
                p,
                amps.into_iter().map(|a| a * inv).collect(),
                0.0,
            ));
        }
    }
    ParitySplit { chains, weights }
}

/// Inverse of [`tensor_to_chain`].
pub fn chain_to_tensor(split: &ParitySplit) -> Result<TensorState> {
    let n_max = split
        .chains
        .iter()
        .flatten()
        .map(|c| c.n_max())
        .next()
        .ok_or_else(|| Error::param("split", "no chain component present"))?;
    let mut amps = vec![Complex64::new(0.0, 0.0); 2 * n_max];
    for p in Parity::BOTH {
        if let Some(c) = split.chain(p) {
            if c.parity() != p || c.n_max() != n_max {
                return Err(Error::param("split", "chain parity or size inconsistent"));
            }
            let scale = split.weight(p).sqrt();
            for (n, a) in c.amps().iter().enumerate() {
                amps[tensor_index(chain_qubit(p, n), n)] = a * scale;
            }
        }
    }
    Ok(TensorState::from_raw(amps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn parity_labels() {
        assert_eq!(parity_of(Qubit::Ground, 0), Parity::Plus);
        assert_eq!(parity_of(Qubit::Excited, 0), Parity::Minus);
        assert_eq!(parity_of(Qubit::Ground, 2), Parity::Plus);
        assert_eq!(parity_of(Qubit::Excited, 1), Parity::Plus);
        assert_eq!(parity_of(Qubit::Ground, 1), Parity::Minus);
    }

    #[test]
    fn chain_positions_have_chain_parity() {
        for p in Parity::BOTH {
            for n in 0..20 {
                assert_eq!(parity_of(chain_qubit(p, n), n), p);
            }
        }
    }

    #[test]
    fn ground_vacuum_is_plus_chain_origin() {
        let s = TensorState::basis(Qubit::Ground, 0, 16).unwrap();
        let split = tensor_to_chain(&s);
        assert_eq!(split.weight(Parity::Plus), 1.0);
        assert_eq!(split.weight(Parity::Minus), 0.0);
        assert!(split.chain(Parity::Minus).is_none());
        assert_eq!(split.chain(Parity::Plus).unwrap().amps()[0], c(1.0));
    }

    #[test]
    fn g2_maps_to_plus_level_two() {
        let s = TensorState::basis(Qubit::Ground, 2, 16).unwrap();
        let split = tensor_to_chain(&s);
        assert_eq!(split.chain(Parity::Plus).unwrap().amps()[2], c(1.0));
    }

    #[test]
    fn cross_parity_superposition_weights() {
        let s = TensorState::from_components(&[(Qubit::Ground, 0, c(1.0)), (Qubit::Excited, 0, c(1.0))], 16).unwrap();
        let split = tensor_to_chain(&s);
        assert!((split.weight(Parity::Plus) - 0.5).abs() < 1e-15);
        assert!((split.weight(Parity::Minus) - 0.5).abs() < 1e-15);
        let back = chain_to_tensor(&split).unwrap();
        for (a, b) in back.amps().iter().zip(s.amps()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn normalization_enforced() {
        assert!(matches!(
            ChainState::new(Parity::Plus, vec![c(0.5)], 0.0),
            Err(Error::NotNormalized { .. })
        ));
        assert!(ChainState::basis(Parity::Plus, 16, 16).is_err());
        assert!(ChainState::from_components(Parity::Plus, &[(0, c(0.0))], 16).is_err());
    }

    #[test]
    fn tail_mass_flags_edge_population() {
        let healthy = ChainState::basis(Parity::Plus, 3, 32).unwrap();
        assert!(healthy.check_truncation("test").is_ok());
        let edge = ChainState::basis(Parity::Plus, 30, 32).unwrap();
        assert!(matches!(
            edge.check_truncation("test"),
            Err(Error::TruncationOverflow { .. })
        ));
    }

    #[test]
    fn lowering_operator() {
        for n in 1..10 {
            let s = ChainState::basis(Parity::Minus, n, 12).unwrap();
            let low = s.lowered();
            for (k, a) in low.iter().enumerate() {
                let expect = if k == n - 1 { (n as f64).sqrt() } else { 0.0 };
                assert!((a - c(expect)).norm() < 1e-15);
            }
        }
    }
}
