//! Parsing and validation of run settings.

use std::fmt;

use num_complex::Complex64;
use rabi_dsc::model::chain_qubit;
use rabi_dsc::{ChainState, ModelParams, Parity, Qubit, TensorState};

use crate::error::{CliError, CliResult};

/// One term `amp |p, n_b>` of an initial state, as typed on the command line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InitialComponent {
    pub parity: Parity,
    pub level: usize,
    pub amp: Complex64,
}

impl fmt::Display for InitialComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = if self.parity == Parity::Plus { "+1" } else { "-1" };
        write!(f, "{p},{}:{},{}", self.level, self.amp.re, self.amp.im)
    }
}

fn parse_f64(field: &str, s: &str) -> CliResult<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| CliError::validation(field, format!("`{s}` is not a number")))?;
    if !v.is_finite() {
        return Err(CliError::validation(field, format!("`{s}` is not finite")));
    }
    Ok(v)
}

/// Parses `"<p>,<n>[:re,im];..."`, e.g. `"+1,0"` or `"+1,0:1,0;-1,0:0,1"`.
pub fn parse_initial(spec: &str) -> CliResult<Vec<InitialComponent>> {
    let field = "initial";
    let mut out = Vec::new();
    for item in spec.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (state, amp) = match item.split_once(':') {
            Some((s, a)) => (s, Some(a)),
            None => (item, None),
        };
        let (p, n) = state
            .split_once(',')
            .ok_or_else(|| CliError::validation(field, format!("`{item}` should look like <p>,<n>[:re,im]")))?;
        let parity = match p.trim() {
            "+1" | "1" | "+" => Parity::Plus,
            "-1" | "-" => Parity::Minus,
            other => {
                return Err(CliError::validation(
                    field,
                    format!("parity `{other}` must be +1 or -1"),
                ))
            }
        };
        let level: usize = n
            .trim()
            .parse()
            .map_err(|_| CliError::validation(field, format!("level `{n}` is not a count")))?;
        let amp = match amp {
            None => Complex64::new(1.0, 0.0),
            Some(a) => {
                let (re, im) = a
                    .split_once(',')
                    .ok_or_else(|| CliError::validation(field, format!("amplitude `{a}` should be re,im")))?;
                Complex64::new(parse_f64(field, re)?, parse_f64(field, im)?)
            }
        };
        if out
            .iter()
            .any(|c: &InitialComponent| c.parity == parity && c.level == level)
        {
            return Err(CliError::validation(
                field,
                format!("component {p},{level} given twice"),
            ));
        }
        out.push(InitialComponent { parity, level, amp });
    }
    if out.is_empty() {
        return Err(CliError::validation(field, "no components"));
    }
    if out.iter().map(|c| c.amp.norm_sqr()).sum::<f64>() == 0.0 {
        return Err(CliError::validation(field, "all amplitudes are zero"));
    }
    Ok(out)
}

pub fn format_initial(components: &[InitialComponent]) -> String {
    components.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

/// Square phase-space grid `min,max,points` used for both quadratures.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Grid {
    pub fn axis(&self) -> Vec<f64> {
        rabi_dsc::wigner::axis(self.min, self.max, self.points)
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.min, self.max, self.points)
    }
}

pub fn parse_grid(spec: &str) -> CliResult<Grid> {
    let parts: Vec<&str> = spec.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::validation(
            "grid",
            format!("`{spec}` should be min,max,points"),
        ));
    }
    let min = parse_f64("grid", parts[0])?;
    let max = parse_f64("grid", parts[1])?;
    let points: usize = parts[2]
        .trim()
        .parse()
        .map_err(|_| CliError::validation("grid", format!("`{}` is not a count", parts[2])))?;
    if max <= min {
        return Err(CliError::validation("grid", "max must exceed min"));
    }
    if points < 2 {
        return Err(CliError::validation("grid", "at least 2 points"));
    }
    Ok(Grid { min, max, points })
}

/// Everything a run needs, after defaults are applied.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub model: ModelParams,
    pub initial: Vec<InitialComponent>,
    /// Final time in units of `2 pi / omega`.
    pub t_max: f64,
    pub n_steps: usize,
}

impl RunConfig {
    pub fn validate(&self) -> CliResult<()> {
        self.model.validate()?;
        if !(self.t_max.is_finite() && self.t_max > 0.0) {
            return Err(CliError::validation("tmax", format!("must be > 0, got {}", self.t_max)));
        }
        if self.n_steps < 2 {
            return Err(CliError::validation(
                "steps",
                format!("must be >= 2, got {}", self.n_steps),
            ));
        }
        for c in &self.initial {
            if c.level >= self.model.n_max {
                return Err(CliError::validation(
                    "initial",
                    format!("level {} does not fit below --nmax {}", c.level, self.model.n_max),
                ));
            }
        }
        Ok(())
    }

    /// Sample times in natural units.
    pub fn times(&self) -> Vec<f64> {
        rabi_dsc::dynamics::linspace(0.0, self.t_max * self.model.period(), self.n_steps)
    }

    pub fn parities(&self) -> Vec<Parity> {
        Parity::BOTH
            .into_iter()
            .filter(|p| self.initial.iter().any(|c| c.parity == *p))
            .collect()
    }

    /// The initial state in the product basis `|q, n_a>`.
    pub fn tensor_state(&self) -> CliResult<TensorState> {
        let comps: Vec<(Qubit, usize, Complex64)> = self
            .initial
            .iter()
            .map(|c| (chain_qubit(c.parity, c.level), c.level, c.amp))
            .collect();
        Ok(TensorState::from_components(&comps, self.model.n_max)?)
    }

    /// The initial state when it lives on a single chain.
    pub fn single_chain(&self, command: &str) -> CliResult<ChainState> {
        let parities = self.parities();
        if parities.len() != 1 {
            return Err(CliError::validation(
                "initial",
                format!("{command} needs all components on one parity chain"),
            ));
        }
        let comps: Vec<(usize, Complex64)> = self.initial.iter().map(|c| (c.level, c.amp)).collect();
        Ok(ChainState::from_components(parities[0], &comps, self.model.n_max)?)
    }

    /// `Some((p, n))` when the initial state is the single basis state `|p, n_b>`.
    pub fn basis_state(&self) -> Option<(Parity, usize)> {
        match self.initial.as_slice() {
            [c] => Some((c.parity, c.level)),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_forms() {
        let v = parse_initial("+1,0").unwrap();
        assert_eq!(
            v,
            vec![InitialComponent {
                parity: Parity::Plus,
                level: 0,
                amp: Complex64::new(1.0, 0.0)
            }]
        );
        let v = parse_initial("+1,0:1,0; -1,3:0,-0.5").unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[1].parity, Parity::Minus);
        assert_eq!(v[1].amp, Complex64::new(0.0, -0.5));
        assert_eq!(parse_initial(&format_initial(&v)).unwrap(), v);
    }

    #[test]
    fn initial_errors_name_the_field() {
        for bad in ["", "2,0", "+1", "+1,x", "+1,0:1", "+1,0:a,b", "+1,0;+1,0", "+1,0:0,0"] {
            let err = parse_initial(bad).unwrap_err();
            assert!(err.message.contains("--initial"), "{bad}: {}", err.message);
            assert_eq!(err.exit_code(), 2);
        }
    }

    #[test]
    fn grid_forms() {
        assert_eq!(
            parse_grid("-6.5,6.5,201").unwrap(),
            Grid {
                min: -6.5,
                max: 6.5,
                points: 201
            }
        );
        assert!(parse_grid("1,0,10").is_err());
        assert!(parse_grid("0,1,1").is_err());
        assert!(parse_grid("0,1").is_err());
    }
}
