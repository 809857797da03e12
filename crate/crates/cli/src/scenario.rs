//! Named scenarios with fixed parameter sets.

use rabi_dsc::analytic::{clamp_unit, two_mode_revival, PerturbationOrder, PerturbativeSpectrum};
use rabi_dsc::dynamics::{linspace, make_propagator, photon_statistics, quadrature_means, Propagator};
use rabi_dsc::model::DEFAULT_N_MAX;
use rabi_dsc::{ChainState, ModelParams, Parity};

use crate::args::ScenarioId;
use crate::commands::{detunings, graph2q, model_meta, truncation_meta, wigner_table};
use crate::config::{parse_initial, Grid};
use crate::error::CliResult;
use crate::job::{ScenarioOverrides, DEFAULT_GRAPH_LEVELS, DEFAULT_STEPS, DEFAULT_TMAX};
use crate::table::Table;

pub const SCENARIO_G: f64 = 2.0;
pub const PHOTON_ROWS: usize = 48;
pub const FIG1A_STEPS: usize = 201;
pub const FIG1A_TMAX: f64 = 2.0;
pub const FIG2A_TIMES: [f64; 6] = [0.0, 0.25, 0.5, 0.75, 1.0, 2.0];
pub const FIG3A_TIME: f64 = 0.5;
pub const FIG3BCD_TIMES: [f64; 3] = [0.5, 1.0, 5.0];
pub const FIG3BCD_TMAX: f64 = 5.0;
pub const SCENARIO_GRID: Grid = Grid {
    min: -9.0,
    max: 6.0,
    points: 151,
};

struct Setup<'a> {
    ov: &'a ScenarioOverrides,
}

impl Setup<'_> {
    fn model(&self, omega0: f64) -> CliResult<ModelParams> {
        let m = ModelParams {
            omega: 1.0,
            omega0,
            g: SCENARIO_G,
            n_max: self.ov.n_max.unwrap_or(DEFAULT_N_MAX),
        };
        m.validate()?;
        Ok(m)
    }

    fn propagator(&self, omega0: f64, p: Parity, level: usize) -> CliResult<Propagator> {
        let m = self.model(omega0)?;
        Ok(make_propagator(&m, p, &ChainState::basis(p, level, m.n_max)?)?)
    }

    /// Sample times in periods.
    fn periods(&self, t_max: f64, steps: usize) -> Vec<f64> {
        linspace(0.0, self.ov.t_max.unwrap_or(t_max), self.ov.steps.unwrap_or(steps))
    }

    fn grid(&self) -> Grid {
        self.ov.grid.unwrap_or(SCENARIO_GRID)
    }
}

fn file(id: ScenarioId, suffix: &str) -> String {
    if suffix.is_empty() {
        format!("{}.csv", id.as_str())
    } else {
        format!("{}_{suffix}.csv", id.as_str())
    }
}

/// Revival curve `(t_period, P)` of `|p, level>`.
fn revival(id: ScenarioId, s: &Setup, omega0: f64, level: usize) -> CliResult<Vec<Table>> {
    let prop = s.propagator(omega0, Parity::Plus, level)?;
    let period = prop.params().period();
    let mut t = Table::new(file(id, ""), &["t_period", "P"]);
    model_meta(&mut t, prop.params());
    t.meta("initial", format!("+1,{level}"));
    truncation_meta(&mut t, &prop);
    for tp in s.periods(DEFAULT_TMAX, DEFAULT_STEPS) {
        t.push(vec![tp.into(), prop.revival_probability(tp * period).into()]);
    }
    Ok(vec![t])
}

/// Long-format photon map `(t_period, n, P)`.
fn photon_map(id: ScenarioId, s: &Setup) -> CliResult<Vec<Table>> {
    let prop = s.propagator(0.0, Parity::Plus, 0)?;
    let period = prop.params().period();
    let rows = PHOTON_ROWS.min(prop.params().n_max);
    let mut t = Table::new(file(id, ""), &["t_period", "n", "P"]);
    model_meta(&mut t, prop.params());
    t.meta("initial", "+1,0").meta("photon_rows", rows);
    truncation_meta(&mut t, &prop);
    for tp in s.periods(FIG1A_TMAX, FIG1A_STEPS) {
        let stats = photon_statistics(&prop.evolve(tp * period));
        for (n, &pn) in stats.iter().take(rows).enumerate() {
            t.push(vec![tp.into(), n.into(), pn.into()]);
        }
    }
    Ok(vec![t])
}

fn photon_snapshots(id: ScenarioId, s: &Setup) -> CliResult<Vec<Table>> {
    let prop = s.propagator(0.5, Parity::Plus, 0)?;
    let period = prop.params().period();
    let rows = PHOTON_ROWS.min(prop.params().n_max);
    let mut header = vec!["n".to_string()];
    header.extend(FIG2A_TIMES.iter().map(|tp| format!("P_t{tp}")));
    let mut t = Table::with_header(file(id, ""), header);
    model_meta(&mut t, prop.params());
    t.meta("initial", "+1,0");
    truncation_meta(&mut t, &prop);
    let stats: Vec<Vec<f64>> = FIG2A_TIMES
        .iter()
        .map(|tp| photon_statistics(&prop.evolve(tp * period)))
        .collect();
    for n in 0..rows {
        let mut row = vec![n.into()];
        row.extend(stats.iter().map(|col| col[n].into()));
        t.push(row);
    }
    Ok(vec![t])
}

fn revival_comparison(id: ScenarioId, s: &Setup) -> CliResult<Vec<Table>> {
    let free = s.propagator(0.0, Parity::Plus, 0)?;
    let split = s.propagator(0.5, Parity::Plus, 0)?;
    let period = free.params().period();
    let mut t = Table::new(file(id, ""), &["t_period", "P_omega0_0", "P_omega0_0.5"]);
    t.meta_float("omega", 1.0)
        .meta_float("g", SCENARIO_G)
        .meta("n_max", free.params().n_max)
        .meta("initial", "+1,0");
    truncation_meta(&mut t, &split);
    for tp in s.periods(DEFAULT_TMAX, DEFAULT_STEPS) {
        let time = tp * period;
        t.push(vec![
            tp.into(),
            free.revival_probability(time).into(),
            split.revival_probability(time).into(),
        ]);
    }
    Ok(vec![t])
}

fn trajectory(id: ScenarioId, prop: &Propagator, periods: &[f64]) -> Table {
    let m = prop.params();
    let centre = -std::f64::consts::SQRT_2 * m.beta0();
    let mut t = Table::new(file(id, "trajectory"), &["t_period", "x", "p", "radius"]);
    model_meta(&mut t, m);
    t.meta("initial", "+1,0").meta_float("orbit_centre_x", centre);
    truncation_meta(&mut t, prop);
    for &tp in periods {
        let (x, p) = quadrature_means(&prop.evolve(tp * m.period()));
        t.push(vec![tp.into(), x.into(), p.into(), (x - centre).hypot(p).into()]);
    }
    t
}

fn phase_space(id: ScenarioId, s: &Setup, omega0: f64, t_max: f64, times: &[f64]) -> CliResult<Vec<Table>> {
    let prop = s.propagator(omega0, Parity::Plus, 0)?;
    let mut out = vec![trajectory(id, &prop, &s.periods(t_max, DEFAULT_STEPS))];
    for &tp in times {
        out.push(wigner_table(&file(id, &format!("wigner_t{tp}")), &prop, tp, &s.grid())?);
    }
    Ok(out)
}

fn approximations(id: ScenarioId, s: &Setup, omega0: f64) -> CliResult<Vec<Table>> {
    let prop = s.propagator(omega0, Parity::Plus, 0)?;
    let m = *prop.params();
    let first = PerturbativeSpectrum::new(&m, Parity::Plus, 0, PerturbationOrder::First)?;
    let periods = s.periods(DEFAULT_TMAX, DEFAULT_STEPS);
    let raw: Vec<f64> = periods.iter().map(|tp| two_mode_revival(&m, tp * m.period())).collect();
    let (two_mode, clamps) = clamp_unit(&raw);
    let mut t = Table::new(file(id, ""), &["t_period", "P_exact", "P_first_order", "P_two_mode"]);
    model_meta(&mut t, &m);
    t.meta("initial", "+1,0").meta("two_mode_clamp_events", clamps);
    truncation_meta(&mut t, &prop);
    for (tp, tm) in periods.iter().zip(two_mode) {
        let time = tp * m.period();
        t.push(vec![
            (*tp).into(),
            prop.revival_probability(time).into(),
            first.revival(time).into(),
            tm.into(),
        ]);
    }
    Ok(vec![t])
}

pub fn run_scenario(id: ScenarioId, ov: &ScenarioOverrides) -> CliResult<Vec<Table>> {
    let s = Setup { ov };
    match id {
        ScenarioId::Fig1a => photon_map(id, &s),
        ScenarioId::Fig1b => revival(id, &s, 0.0, 0),
        ScenarioId::Fig1c => revival(id, &s, 0.0, 2),
        ScenarioId::Fig2a => photon_snapshots(id, &s),
        ScenarioId::Fig2b => revival_comparison(id, &s),
        ScenarioId::Fig3a => phase_space(id, &s, 0.0, 1.0, &[FIG3A_TIME]),
        ScenarioId::Fig3bcd => phase_space(id, &s, 0.5, FIG3BCD_TMAX, &FIG3BCD_TIMES),
        ScenarioId::Fig4a => approximations(id, &s, 0.3),
        ScenarioId::Fig4b => approximations(id, &s, 0.5),
        ScenarioId::Fig4c => {
            let m = s.model(0.5)?;
            Ok(vec![detunings(&file(id, ""), &m, &parse_initial("+1,0")?)?])
        }
        ScenarioId::Fig5 => Ok(vec![graph2q(&file(id, ""), ov.n_max.unwrap_or(DEFAULT_GRAPH_LEVELS))?]),
    }
}
