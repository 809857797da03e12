use crate::error::{Error, Result};

/// Default Fock truncation; keeps coherent amplitudes up to `2 g/omega` with
/// negligible tail mass for `g/omega <= 3`.
pub const DEFAULT_N_MAX: usize = 256;

/// Smallest admissible truncation.
pub const MIN_N_MAX: usize = 8;

/// Physical parameters of the Rabi Hamiltonian, with hbar = 1.
///
/// `omega` is the mode frequency, `omega0` the qubit splitting and `g` the
/// coupling; all three share the same frequency unit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    pub omega: f64,
    pub omega0: f64,
    pub g: f64,
    pub n_max: usize,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            omega: 1.0,
            omega0: 0.0,
            g: 2.0,
            n_max: DEFAULT_N_MAX,
        }
    }
}

impl ModelParams {
    pub fn new(omega: f64, omega0: f64, g: f64, n_max: usize) -> Result<Self> {
        let p = Self {
            omega,
            omega0,
            g,
            n_max,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega.is_finite() && self.omega > 0.0) {
            return Err(Error::param(
                "omega",
                format!("must be finite and > 0, got {}", self.omega),
            ));
        }
        if !(self.omega0.is_finite() && self.omega0 >= 0.0) {
            return Err(Error::param(
                "omega0",
                format!("must be finite and >= 0, got {}", self.omega0),
            ));
        }
        if !(self.g.is_finite() && self.g >= 0.0) {
            return Err(Error::param("g", format!("must be finite and >= 0, got {}", self.g)));
        }
        if self.n_max < MIN_N_MAX {
            return Err(Error::param(
                "n_max",
                format!("must be >= {MIN_N_MAX}, got {}", self.n_max),
            ));
        }
        Ok(())
    }

    /// Displacement scale `g / omega`.
    pub fn beta0(&self) -> f64 {
        self.g / self.omega
    }

    /// Revival period `2 pi / omega`.
    pub fn period(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.omega
    }

    pub fn with_omega0(mut self, omega0: f64) -> Self {
        self.omega0 = omega0;
        self
    }

    pub fn with_g(mut self, g: f64) -> Self {
        self.g = g;
        self
    }

    pub fn with_n_max(mut self, n_max: usize) -> Self {
        self.n_max = n_max;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(ModelParams::new(1.0, 0.5, 2.0, 128).is_ok());
        assert!(matches!(
            ModelParams::new(0.0, 0.5, 2.0, 128),
            Err(Error::InvalidParameter { field: "omega", .. })
        ));
        assert!(matches!(
            ModelParams::new(1.0, -0.1, 2.0, 128),
            Err(Error::InvalidParameter { field: "omega0", .. })
        ));
        assert!(matches!(
            ModelParams::new(1.0, 0.0, -1.0, 128),
            Err(Error::InvalidParameter { field: "g", .. })
        ));
        assert!(matches!(
            ModelParams::new(1.0, 0.0, 1.0, 4),
            Err(Error::InvalidParameter { field: "n_max", .. })
        ));
    }

    #[test]
    fn derived_quantities() {
        let p = ModelParams::new(2.0, 0.0, 3.0, 64).unwrap();
        assert_eq!(p.beta0(), 1.5);
        assert!((p.period() - std::f64::consts::PI).abs() < 1e-15);
    }
}
