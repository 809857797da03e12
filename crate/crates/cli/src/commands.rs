//! Table builders behind the subcommands.

use rabi_dsc::analytic::perturbative_energy;
use rabi_dsc::analytic::{
    clamp_unit, revival_probability_w0_zero, two_mode_revival, PerturbationOrder, PerturbativeSpectrum, LEVEL_MARGIN,
};
use rabi_dsc::dynamics::{
    make_propagator, parity_expectation, photon_statistics, quadrature_means, Propagator, SplitPropagator, WARN_TAIL,
};
use rabi_dsc::model::{build_chain_hamiltonian, build_two_qubit_graph};
use rabi_dsc::numerics::eig_sym_tridiag;
use rabi_dsc::wigner::{squeezing_diagnostic, wigner, wigner_negativity};
use rabi_dsc::{ChainState, ModelParams, Parity};

use crate::config::{format_initial, Grid, InitialComponent, RunConfig};
use crate::error::{CliError, CliResult};
use crate::table::{Cell, Table};

pub fn parity_label(p: Parity) -> &'static str {
    match p {
        Parity::Plus => "+1",
        Parity::Minus => "-1",
    }
}

pub fn model_meta(t: &mut Table, m: &ModelParams) {
    t.meta_float("omega", m.omega)
        .meta_float("omega0", m.omega0)
        .meta_float("g", m.g)
        .meta("n_max", m.n_max);
}

/// Records the truncation bound of a chain and warns on stderr when it is not negligible.
pub fn truncation_meta(t: &mut Table, prop: &Propagator) {
    let bound = prop.tail_mass_bound();
    t.meta_float(&format!("tail_mass_bound[{}]", parity_label(prop.parity())), bound);
    if bound > WARN_TAIL {
        eprintln!(
            "warning: chain {} keeps up to {bound:.2e} of its norm in the top levels; raise --nmax (now {})",
            parity_label(prop.parity()),
            prop.params().n_max
        );
    }
}

pub fn mean_photons(s: &ChainState) -> f64 {
    photon_statistics(s).iter().enumerate().map(|(n, p)| n as f64 * p).sum()
}

pub fn evolve(name: &str, cfg: &RunConfig, order: Option<PerturbationOrder>) -> CliResult<Table> {
    let m = cfg.model;
    let psi0 = cfg.tensor_state()?;
    let split = SplitPropagator::new(&m, &psi0)?;
    let parities = cfg.parities();
    let times = cfg.times();
    let period = m.period();

    let closed_form = matches!(cfg.basis_state(), Some((_, 0))) && m.omega0 == 0.0;
    let perturbative = match (order, cfg.basis_state()) {
        (Some(o), Some((p, n))) => Some((o, PerturbativeSpectrum::new(&m, p, n, o)?)),
        (Some(_), None) => {
            return Err(CliError::validation(
                "order",
                "perturbative curves need a single basis state as --initial",
            ))
        }
        _ => None,
    };
    let two_mode = cfg.basis_state() == Some((Parity::Plus, 0)) && m.omega0 > 0.0;

    let mut header = vec!["t_period".to_string(), "t".to_string()];
    for &p in &parities {
        let l = parity_label(p);
        header.extend([
            format!("P[{l}]"),
            format!("x[{l}]"),
            format!("p[{l}]"),
            format!("n[{l}]"),
        ]);
    }
    header.extend(["P_combined".to_string(), "parity".to_string()]);
    if closed_form {
        header.push("P_closed_form".into());
    }
    if let Some((o, _)) = &perturbative {
        header.push(format!("P_order{}", o.as_int()));
    }
    if two_mode {
        header.push("P_two_mode".into());
    }

    let mut table = Table::with_header(name, header);
    model_meta(&mut table, &m);
    table.meta("initial", format_initial(&cfg.initial));
    table.meta_float("t_max_periods", cfg.t_max).meta("steps", cfg.n_steps);
    for &p in &parities {
        table.meta_float(&format!("weight[{}]", parity_label(p)), split.weight(p));
        if let Some(prop) = split.chain(p) {
            truncation_meta(&mut table, prop);
        }
    }

    let two_mode_values: Vec<f64> = if two_mode {
        times.iter().map(|&t| two_mode_revival(&m, t)).collect()
    } else {
        Vec::new()
    };
    let (two_mode_clamped, clamp_events) = clamp_unit(&two_mode_values);
    if two_mode {
        table.meta("two_mode_clamp_events", clamp_events);
    }

    for (i, &t) in times.iter().enumerate() {
        let mut row: Vec<Cell> = vec![(t / period).into(), t.into()];
        for &p in &parities {
            let prop = split.chain(p).expect("chain present for every listed parity");
            let s = prop.evolve(t);
            let (x, q) = quadrature_means(&s);
            row.extend([
                prop.revival_probability(t).into(),
                x.into(),
                q.into(),
                mean_photons(&s).into(),
            ]);
        }
        row.push(split.combined_survival(t).into());
        row.push(parity_expectation(&split.evolve(t)?).into());
        if closed_form {
            row.push(revival_probability_w0_zero(m.beta0(), m.omega, t).into());
        }
        if let Some((_, spec)) = &perturbative {
            row.push(spec.revival(t).into());
        }
        if two_mode {
            row.push(two_mode_clamped[i].into());
        }
        table.push(row);
    }
    Ok(table)
}

pub fn spectrum(name: &str, m: &ModelParams, order: PerturbationOrder) -> CliResult<Table> {
    let mut table = Table::new(
        name,
        &["parity", "level", "E_exact", "E_perturbative", "delta_first_order"],
    );
    model_meta(&mut table, m);
    table
        .meta("order", order.as_int())
        .meta("levels_reported", m.n_max.saturating_sub(LEVEL_MARGIN));
    for p in Parity::BOTH {
        let exact = eig_sym_tridiag(&build_chain_hamiltonian(m, p))?;
        for level in 0..m.n_max.saturating_sub(LEVEL_MARGIN) {
            let pert = perturbative_energy(m, p, level, order)?;
            table.push(vec![
                parity_label(p).into(),
                level.into(),
                exact.values()[level].into(),
                pert.energy.into(),
                pert.delta.into(),
            ]);
        }
    }
    Ok(table)
}

pub fn single_chain_propagator(m: &ModelParams, initial: &[InitialComponent], command: &str) -> CliResult<Propagator> {
    let cfg = RunConfig {
        model: *m,
        initial: initial.to_vec(),
        t_max: 1.0,
        n_steps: 2,
    };
    let s = cfg.single_chain(command)?;
    Ok(make_propagator(m, s.parity(), &s)?)
}

/// Long-format `(x, p, W)` table of the evolved state at `time` periods.
pub fn wigner_table(name: &str, prop: &Propagator, time: f64, grid: &Grid) -> CliResult<Table> {
    let m = prop.params();
    let s = prop.evolve(time * m.period());
    let axis = grid.axis();
    let w = wigner(&s, &axis, &axis)?;
    let sq = squeezing_diagnostic(&s, m.beta0());
    let mut table = Table::new(name, &["x", "p", "W"]);
    model_meta(&mut table, m);
    table.meta("initial", format_initial_state(prop.initial_state()));
    table.meta_float("t_period", time).meta("grid", grid);
    truncation_meta(&mut table, prop);
    table
        .meta_float("mean_x", sq.mean.0)
        .meta_float("mean_p", sq.mean.1)
        .meta_float("variance_tangential", sq.tangential)
        .meta_float("variance_normal", sq.normal)
        .meta_float("integral", w.integral())
        .meta_float("negativity", wigner_negativity(&w));
    for (x, p, v) in w.points() {
        table.push(vec![x.into(), p.into(), v.into()]);
    }
    Ok(table)
}

/// `|p, n>` components of a chain state with non-zero amplitude.
fn format_initial_state(s: &ChainState) -> String {
    let comps: Vec<InitialComponent> = s
        .amps()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm_sqr() > 0.0)
        .map(|(level, &amp)| InitialComponent {
            parity: s.parity(),
            level,
            amp,
        })
        .collect();
    format_initial(&comps)
}

pub fn detunings(name: &str, m: &ModelParams, initial: &[InitialComponent]) -> CliResult<Table> {
    if m.omega0 == 0.0 {
        return Err(CliError::validation(
            "omega0",
            "detunings are measured in units of omega0, which must be > 0",
        ));
    }
    let prop = single_chain_propagator(m, initial, "detunings")?;
    let dt = prop.detuning_table()?;
    let mut table = Table::new(name, &["level", "E", "delta", "weight"]);
    model_meta(&mut table, m);
    table
        .meta("initial", format_initial(initial))
        .meta("parity", parity_label(dt.parity));
    table
        .meta_float("energy_offset", dt.energy_offset)
        .meta("levels_reported", m.n_max.saturating_sub(LEVEL_MARGIN));
    truncation_meta(&mut table, &prop);
    for row in dt.rows.iter().take(m.n_max.saturating_sub(LEVEL_MARGIN)) {
        table.push(vec![
            row.level.into(),
            row.energy.into(),
            row.delta.into(),
            row.weight.into(),
        ]);
    }
    Ok(table)
}

pub fn graph2q(name: &str, levels: usize) -> CliResult<Table> {
    let graph = build_two_qubit_graph(levels)?;
    let labels = graph.components();
    let mut table = Table::new(name, &["from", "to", "kind", "component"]);
    table
        .meta("photon_levels", levels)
        .meta("vertices", graph.vertices.len())
        .meta("edges", graph.edges.len())
        .meta("components", graph.component_count());
    for e in &graph.edges {
        table.push(vec![
            graph.vertices[e.a].to_string().into(),
            graph.vertices[e.b].to_string().into(),
            e.kind.as_str().into(),
            labels[e.a].into(),
        ]);
    }
    Ok(table)
}
