//! Wigner function of the chain mode `b` from the displaced-parity formula
//! `W(x, p) = (1/pi) <D(alpha) (-1)^{b^dag b} D(alpha)^dag>`, `alpha = (x + i p)/sqrt 2`.
//!
//! With this normalization `W` integrates to one over `dx dp` and the vacuum
//! is `exp(-x^2 - p^2)/pi`.

use std::f64::consts::{FRAC_1_PI, SQRT_2};

use num_complex::Complex64;

use crate::dynamics::quadrature_means;
use crate::error::{Error, Result};
use crate::model::ChainState;
use crate::numerics::displacement_band;
use crate::par::par_map;

pub const DEFAULT_EXTENT: f64 = 6.5;
pub const DEFAULT_POINTS: usize = 201;

/// `W(x, p)` sampled on a rectangular grid; `values[ix * p_axis.len() + ip]`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerGrid {
    pub x_axis: Vec<f64>,
    pub p_axis: Vec<f64>,
    pub values: Vec<f64>,
}

impl WignerGrid {
    pub fn get(&self, ix: usize, ip: usize) -> f64 {
        self.values[ix * self.p_axis.len() + ip]
    }

    fn cell_area(&self) -> f64 {
        spacing(&self.x_axis) * spacing(&self.p_axis)
    }

    /// Riemann sum of `W dx dp`.
    pub fn integral(&self) -> f64 {
        self.values.iter().sum::<f64>() * self.cell_area()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Grid point with the largest `W`.
    pub fn argmax(&self) -> (f64, f64) {
        let (i, _) =
            self.values.iter().enumerate().fold(
                (0, f64::NEG_INFINITY),
                |best, (i, &v)| if v > best.1 { (i, v) } else { best },
            );
        let np = self.p_axis.len();
        (self.x_axis[i / np], self.p_axis[i % np])
    }

    /// `(x, p, W)` triples in row order.
    pub fn points(&self) -> impl Iterator<Item = (f64, f64, f64)> + '_ {
        let np = self.p_axis.len();
        self.values
            .iter()
            .enumerate()
            .map(move |(i, &w)| (self.x_axis[i / np], self.p_axis[i % np], w))
    }
}

fn spacing(axis: &[f64]) -> f64 {
    if axis.len() < 2 {
        1.0
    } else {
        (axis[axis.len() - 1] - axis[0]) / (axis.len() - 1) as f64
    }
}

/// `n` evenly spaced points on `[min, max]`.
pub fn axis(min: f64, max: f64, n: usize) -> Vec<f64> {
    crate::dynamics::linspace(min, max, n)
}

/// The default `[-6.5, 6.5]` axis with 201 points.
pub fn default_axis() -> Vec<f64> {
    axis(-DEFAULT_EXTENT, DEFAULT_EXTENT, DEFAULT_POINTS)
}

/// Displaced-parity value at one phase-space point. Since
/// `Pi D(-alpha) = D(alpha) Pi`, `W = (1/pi) <s| D(2 alpha) Pi |s>`, a double sum
/// over the support of `s` only:
/// `sum_n |s_n|^2 (-1)^n d_0[n] + 2 Re sum_{k>0} e^{i k phi} sum_n (-1)^n d_k[n] s_{n+k}^* s_n`
/// with `d_k[n] = <n+k|D(|2 alpha|)|n>`.
fn wigner_point(amps: &[Complex64], x: f64, p: f64) -> f64 {
    let two_alpha = Complex64::new(x, p) * SQRT_2;
    let r = two_alpha.norm();
    let phase = if r > 0.0 {
        two_alpha / r
    } else {
        Complex64::new(1.0, 0.0)
    };
    let len = amps.len();
    let sign = |n: usize| if n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let band = displacement_band(r, 0, len);
    let mut total: f64 = (0..len).map(|n| sign(n) * band[n] * amps[n].norm_sqr()).sum();
    let mut ph = Complex64::new(1.0, 0.0);
    for k in 1..len {
        ph *= phase;
        let band = displacement_band(r, k, len - k);
        let inner: Complex64 = (0..len - k)
            .map(|n| sign(n) * band[n] * amps[n + k].conj() * amps[n])
            .sum();
        total += 2.0 * (ph * inner).re;
    }
    FRAC_1_PI * total
}

/// Wigner function of a chain state on the grid `x_axis` x `p_axis`.
///
/// The mean phase-space position of the state must lie inside the grid.
pub fn wigner(s: &ChainState, x_axis: &[f64], p_axis: &[f64]) -> Result<WignerGrid> {
    if x_axis.is_empty() || p_axis.is_empty() {
        return Err(Error::param("grid", "axes must be non-empty"));
    }
    let (xm, pm) = quadrature_means(s);
    let inside = |axis: &[f64], v: f64| {
        let lo = axis.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = axis.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        v >= lo && v <= hi
    };
    if !(inside(x_axis, xm) && inside(p_axis, pm)) {
        return Err(Error::Precondition(format!(
            "grid does not cover the state: mean quadratures ({xm:.3}, {pm:.3}) lie outside it"
        )));
    }
    let support = s.support().max(1);
    let amps = &s.amps()[..support];
    let cells: Vec<(f64, f64)> = x_axis
        .iter()
        .flat_map(|&x| p_axis.iter().map(move |&p| (x, p)))
        .collect();
    let values = par_map(&cells, |&(x, p)| wigner_point(amps, x, p));
    Ok(WignerGrid {
        x_axis: x_axis.to_vec(),
        p_axis: p_axis.to_vec(),
        values,
    })
}

/// `sum max(0, -W) dx dp`.
pub fn wigner_negativity(grid: &WignerGrid) -> f64 {
    grid.values.iter().map(|&w| (-w).max(0.0)).sum::<f64>() * grid.cell_area()
}

/// Quadrature covariances of a state, resolved along the circular orbit
/// centred at `-beta0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Squeezing {
    pub mean: (f64, f64),
    /// Variance along the orbit tangent.
    pub tangential: f64,
    /// Variance along the radius through the orbit centre.
    pub normal: f64,
    pub principal_min: f64,
    pub principal_max: f64,
}

/// Variances tangent and normal to the orbit about `(-sqrt(2) beta0, 0)`.
/// A state sitting exactly at the centre has no radial direction; the x axis
/// is taken as normal in that case.
pub fn squeezing_diagnostic(s: &ChainState, beta0: f64) -> Squeezing {
    let amps = s.amps();
    let mean_b = s.mean_b();
    let mean_b2: Complex64 = (2..amps.len())
        .map(|n| amps[n - 2].conj() * amps[n] * ((n * (n - 1)) as f64).sqrt())
        .sum();
    let mean_n: f64 = amps.iter().enumerate().map(|(n, a)| n as f64 * a.norm_sqr()).sum();
    let xm = SQRT_2 * mean_b.re;
    let pm = SQRT_2 * mean_b.im;
    let var_x = (2.0 * mean_b2.re + 2.0 * mean_n + 1.0) / 2.0 - xm * xm;
    let var_p = (-2.0 * mean_b2.re + 2.0 * mean_n + 1.0) / 2.0 - pm * pm;
    let cov = mean_b2.im - xm * pm;

    let (rx, ry) = (xm + SQRT_2 * beta0, pm);
    let r = rx.hypot(ry);
    let (nx, ny) = if r > 0.0 { (rx / r, ry / r) } else { (1.0, 0.0) };
    let (tx, ty) = (-ny, nx);
    let quad = |ux: f64, uy: f64| ux * ux * var_x + 2.0 * ux * uy * cov + uy * uy * var_p;
    let half_tr = 0.5 * (var_x + var_p);
    let disc = (0.25 * (var_x - var_p).powi(2) + cov * cov).sqrt();
    Squeezing {
        mean: (xm, pm),
        tangential: quad(tx, ty),
        normal: quad(nx, ny),
        principal_min: half_tr - disc,
        principal_max: half_tr + disc,
    }
}
