//! WebAssembly bindings behind the static demo page in `www/`.
//!
//! Each export starts from the chain basis state `|+1, level>` at `omega = 1`.
//! The plain functions in [`demo`] do the work and are usable natively; the
//! `#[wasm_bindgen]` wrappers only convert errors.

use wasm_bindgen::prelude::*;

pub mod demo {
    use rabi_dsc::analytic::{
        clamp_unit, revival_probability_w0_zero, two_mode_revival, PerturbationOrder, PerturbativeSpectrum,
    };
    use rabi_dsc::dynamics::{linspace, make_propagator, photon_statistics, quadrature_means, Propagator};
    use rabi_dsc::wigner::{axis, squeezing_diagnostic, wigner, wigner_negativity};
    use rabi_dsc::{ChainState, ModelParams, Parity};

    pub type DemoResult<T> = Result<T, String>;

    pub const MAX_STEPS: usize = 4001;
    pub const MAX_POINTS: usize = 201;

    fn propagator(g: f64, omega0: f64, n_max: usize, level: usize) -> DemoResult<Propagator> {
        let m = ModelParams::new(1.0, omega0, g, n_max).map_err(|e| e.to_string())?;
        let s = ChainState::basis(Parity::Plus, level, n_max).map_err(|e| e.to_string())?;
        make_propagator(&m, Parity::Plus, &s).map_err(|e| e.to_string())
    }

    /// Revival curves sampled on `[0, t_max]` periods.
    #[derive(Clone, Debug, PartialEq)]
    pub struct Curves {
        pub periods: Vec<f64>,
        pub exact: Vec<f64>,
        /// Spectral sum with first-order energies.
        pub first_order: Vec<f64>,
        /// Empty unless `level == 0` and `omega0 > 0`.
        pub two_mode: Vec<f64>,
        pub no_splitting: Vec<f64>,
        pub tail_mass_bound: f64,
    }

    pub fn revival_curves(
        g: f64,
        omega0: f64,
        n_max: usize,
        level: usize,
        t_max: f64,
        steps: usize,
    ) -> DemoResult<Curves> {
        if !(t_max.is_finite() && t_max > 0.0) {
            return Err(format!("t_max must be > 0, got {t_max}"));
        }
        if !(2..=MAX_STEPS).contains(&steps) {
            return Err(format!("steps must be in 2..={MAX_STEPS}, got {steps}"));
        }
        let prop = propagator(g, omega0, n_max, level)?;
        let m = *prop.params();
        let free = propagator(g, 0.0, n_max, level)?;
        let first =
            PerturbativeSpectrum::new(&m, Parity::Plus, level, PerturbationOrder::First).map_err(|e| e.to_string())?;
        let periods = linspace(0.0, t_max, steps);
        let times: Vec<f64> = periods.iter().map(|tp| tp * m.period()).collect();
        let no_splitting = if level == 0 {
            times
                .iter()
                .map(|&t| revival_probability_w0_zero(m.beta0(), m.omega, t))
                .collect()
        } else {
            times.iter().map(|&t| free.revival_probability(t)).collect()
        };
        let two_mode = if level == 0 && omega0 > 0.0 {
            clamp_unit(&times.iter().map(|&t| two_mode_revival(&m, t)).collect::<Vec<_>>()).0
        } else {
            Vec::new()
        };
        Ok(Curves {
            exact: times.iter().map(|&t| prop.revival_probability(t)).collect(),
            first_order: times.iter().map(|&t| first.revival(t)).collect(),
            two_mode,
            no_splitting,
            tail_mass_bound: prop.tail_mass_bound(),
            periods,
        })
    }

    /// Square Wigner grid; `values[ix * points + ip]`.
    #[derive(Clone, Debug, PartialEq)]
    pub struct WignerImage {
        pub axis: Vec<f64>,
        pub values: Vec<f64>,
        pub mean: (f64, f64),
        pub negativity: f64,
        pub tangential: f64,
        pub normal: f64,
    }

    #[allow(clippy::too_many_arguments)]
    pub fn wigner_image(
        g: f64,
        omega0: f64,
        n_max: usize,
        level: usize,
        time: f64,
        min: f64,
        max: f64,
        points: usize,
    ) -> DemoResult<WignerImage> {
        if !(time.is_finite() && time >= 0.0) {
            return Err(format!("time must be >= 0, got {time}"));
        }
        if !(min < max && (2..=MAX_POINTS).contains(&points)) {
            return Err(format!("grid needs min < max and 2..={MAX_POINTS} points"));
        }
        let prop = propagator(g, omega0, n_max, level)?;
        let s = prop.evolve(time * prop.params().period());
        let ax = axis(min, max, points);
        let w = wigner(&s, &ax, &ax).map_err(|e| e.to_string())?;
        let sq = squeezing_diagnostic(&s, prop.params().beta0());
        Ok(WignerImage {
            negativity: wigner_negativity(&w),
            values: w.values,
            axis: ax,
            mean: quadrature_means(&s),
            tangential: sq.tangential,
            normal: sq.normal,
        })
    }

    /// `P_n` for `n < rows` at `time` periods.
    pub fn photon_distribution(
        g: f64,
        omega0: f64,
        n_max: usize,
        level: usize,
        time: f64,
        rows: usize,
    ) -> DemoResult<Vec<f64>> {
        if !(time.is_finite() && time >= 0.0) {
            return Err(format!("time must be >= 0, got {time}"));
        }
        let prop = propagator(g, omega0, n_max, level)?;
        let mut p = photon_statistics(&prop.evolve(time * prop.params().period()));
        p.truncate(rows);
        Ok(p)
    }
}

fn js(e: String) -> JsError {
    JsError::new(&e)
}

#[wasm_bindgen]
pub struct RevivalCurves(demo::Curves);

#[wasm_bindgen]
impl RevivalCurves {
    #[wasm_bindgen(getter)]
    pub fn periods(&self) -> Vec<f64> {
        self.0.periods.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn exact(&self) -> Vec<f64> {
        self.0.exact.clone()
    }
    #[wasm_bindgen(getter, js_name = firstOrder)]
    pub fn first_order(&self) -> Vec<f64> {
        self.0.first_order.clone()
    }
    #[wasm_bindgen(getter, js_name = twoMode)]
    pub fn two_mode(&self) -> Vec<f64> {
        self.0.two_mode.clone()
    }
    #[wasm_bindgen(getter, js_name = noSplitting)]
    pub fn no_splitting(&self) -> Vec<f64> {
        self.0.no_splitting.clone()
    }
    #[wasm_bindgen(getter, js_name = tailMassBound)]
    pub fn tail_mass_bound(&self) -> f64 {
        self.0.tail_mass_bound
    }
}

#[wasm_bindgen(js_name = revivalCurves)]
pub fn revival_curves(
    g: f64,
    omega0: f64,
    n_max: usize,
    level: usize,
    t_max: f64,
    steps: usize,
) -> Result<RevivalCurves, JsError> {
    demo::revival_curves(g, omega0, n_max, level, t_max, steps)
        .map(RevivalCurves)
        .map_err(js)
}

#[wasm_bindgen]
pub struct Wigner(demo::WignerImage);

#[wasm_bindgen]
impl Wigner {
    #[wasm_bindgen(getter)]
    pub fn axis(&self) -> Vec<f64> {
        self.0.axis.clone()
    }
    #[wasm_bindgen(getter)]
    pub fn values(&self) -> Vec<f64> {
        self.0.values.clone()
    }
    #[wasm_bindgen(getter, js_name = meanX)]
    pub fn mean_x(&self) -> f64 {
        self.0.mean.0
    }
    #[wasm_bindgen(getter, js_name = meanP)]
    pub fn mean_p(&self) -> f64 {
        self.0.mean.1
    }
    #[wasm_bindgen(getter)]
    pub fn negativity(&self) -> f64 {
        self.0.negativity
    }
    #[wasm_bindgen(getter)]
    pub fn tangential(&self) -> f64 {
        self.0.tangential
    }
    #[wasm_bindgen(getter)]
    pub fn normal(&self) -> f64 {
        self.0.normal
    }
}

#[allow(clippy::too_many_arguments)]
#[wasm_bindgen(js_name = wignerImage)]
pub fn wigner_image(
    g: f64,
    omega0: f64,
    n_max: usize,
    level: usize,
    time: f64,
    min: f64,
    max: f64,
    points: usize,
) -> Result<Wigner, JsError> {
    demo::wigner_image(g, omega0, n_max, level, time, min, max, points)
        .map(Wigner)
        .map_err(js)
}

#[wasm_bindgen(js_name = photonDistribution)]
pub fn photon_distribution(
    g: f64,
    omega0: f64,
    n_max: usize,
    level: usize,
    time: f64,
    rows: usize,
) -> Result<Vec<f64>, JsError> {
    demo::photon_distribution(g, omega0, n_max, level, time, rows).map_err(js)
}
