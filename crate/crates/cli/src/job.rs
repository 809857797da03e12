//! Command-line arguments resolved into fully explicit jobs.

use rabi_dsc::analytic::PerturbationOrder;
use rabi_dsc::model::DEFAULT_N_MAX;
use rabi_dsc::wigner::{DEFAULT_EXTENT, DEFAULT_POINTS};
use rabi_dsc::ModelParams;

use crate::args::{Command, ModelArgs, ScenarioId};
use crate::config::{format_initial, parse_grid, parse_initial, Grid, InitialComponent, RunConfig};
use crate::error::{CliError, CliResult};

pub const DEFAULT_G: f64 = 2.0;
pub const DEFAULT_TMAX: f64 = 3.0;
pub const DEFAULT_STEPS: usize = 2001;
pub const DEFAULT_INITIAL: &str = "+1,0";
pub const DEFAULT_GRAPH_LEVELS: usize = 4;

/// Settings a scenario accepts from the command line.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScenarioOverrides {
    pub n_max: Option<usize>,
    pub t_max: Option<f64>,
    pub steps: Option<usize>,
    pub grid: Option<Grid>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Job {
    Scenario {
        id: ScenarioId,
        overrides: ScenarioOverrides,
    },
    Evolve {
        cfg: RunConfig,
        order: Option<PerturbationOrder>,
    },
    Spectrum {
        model: ModelParams,
        order: PerturbationOrder,
    },
    Wigner {
        model: ModelParams,
        initial: Vec<InitialComponent>,
        time: f64,
        grid: Grid,
    },
    Detunings {
        model: ModelParams,
        initial: Vec<InitialComponent>,
    },
    Graph2q {
        levels: usize,
    },
}

fn model(args: &ModelArgs) -> CliResult<ModelParams> {
    let m = ModelParams {
        omega: args.omega.unwrap_or(1.0),
        omega0: args.omega0.unwrap_or(0.0),
        g: args.g.unwrap_or(DEFAULT_G),
        n_max: args.nmax.unwrap_or(DEFAULT_N_MAX),
    };
    m.validate()?;
    Ok(m)
}

fn order(raw: Option<u8>) -> CliResult<Option<PerturbationOrder>> {
    raw.map(|o| {
        PerturbationOrder::from_int(o).ok_or_else(|| CliError::validation("order", format!("{o} is not 0, 1 or 2")))
    })
    .transpose()
}

fn initial(raw: &Option<String>) -> CliResult<Vec<InitialComponent>> {
    parse_initial(raw.as_deref().unwrap_or(DEFAULT_INITIAL))
}

fn check_levels(model: &ModelParams, initial: &[InitialComponent]) -> CliResult<()> {
    match initial.iter().find(|c| c.level >= model.n_max) {
        Some(c) => Err(CliError::validation(
            "initial",
            format!("level {} does not fit below --nmax {}", c.level, model.n_max),
        )),
        None => Ok(()),
    }
}

/// Turns parsed arguments into a job. `Replay` is handled by the caller.
pub fn resolve(cmd: &Command) -> CliResult<Job> {
    let job = match cmd {
        Command::Scenario {
            id,
            nmax,
            tmax,
            steps,
            grid,
            ..
        } => {
            let overrides = ScenarioOverrides {
                n_max: *nmax,
                t_max: *tmax,
                steps: *steps,
                grid: grid.as_deref().map(parse_grid).transpose()?,
            };
            if let Some(t) = overrides.t_max {
                if !(t.is_finite() && t > 0.0) {
                    return Err(CliError::validation("tmax", format!("must be > 0, got {t}")));
                }
            }
            if let Some(s) = overrides.steps {
                if s < 2 {
                    return Err(CliError::validation("steps", format!("must be >= 2, got {s}")));
                }
            }
            Job::Scenario { id: *id, overrides }
        }
        Command::Evolve {
            model: m,
            initial: i,
            tmax,
            steps,
            order: o,
            ..
        } => {
            let cfg = RunConfig {
                model: model(m)?,
                initial: initial(&i.initial)?,
                t_max: tmax.unwrap_or(DEFAULT_TMAX),
                n_steps: steps.unwrap_or(DEFAULT_STEPS),
            };
            cfg.validate()?;
            Job::Evolve { cfg, order: order(*o)? }
        }
        Command::Spectrum { model: m, order: o, .. } => Job::Spectrum {
            model: model(m)?,
            order: order(*o)?.unwrap_or(PerturbationOrder::Second),
        },
        Command::Wigner {
            model: m,
            initial: i,
            time,
            grid,
            ..
        } => {
            let model = model(m)?;
            let initial = initial(&i.initial)?;
            check_levels(&model, &initial)?;
            let time = time.unwrap_or(0.0);
            if !(time.is_finite() && time >= 0.0) {
                return Err(CliError::validation("time", format!("must be >= 0, got {time}")));
            }
            let grid = match grid {
                Some(g) => parse_grid(g)?,
                None => Grid {
                    min: -DEFAULT_EXTENT,
                    max: DEFAULT_EXTENT,
                    points: DEFAULT_POINTS,
                },
            };
            Job::Wigner {
                model,
                initial,
                time,
                grid,
            }
        }
        Command::Detunings {
            model: m, initial: i, ..
        } => {
            let model = model(m)?;
            let initial = initial(&i.initial)?;
            check_levels(&model, &initial)?;
            Job::Detunings { model, initial }
        }
        Command::Graph2q { nmax, .. } => {
            let levels = nmax.unwrap_or(DEFAULT_GRAPH_LEVELS);
            if levels < 2 {
                return Err(CliError::validation(
                    "nmax",
                    "the two-qubit graph needs at least 2 photon levels",
                ));
            }
            Job::Graph2q { levels }
        }
        Command::Replay { .. } => unreachable!("replay is resolved by the caller"),
    };
    Ok(job)
}

fn model_argv(m: &ModelParams) -> Vec<String> {
    vec![
        format!("--g={}", m.g),
        format!("--omega={}", m.omega),
        format!("--omega0={}", m.omega0),
        format!("--nmax={}", m.n_max),
    ]
}

impl Job {
    /// Arguments that rebuild exactly this job; every default is spelled out.
    pub fn argv(&self) -> Vec<String> {
        let mut v = Vec::new();
        match self {
            Job::Scenario { id, overrides } => {
                v.push("scenario".into());
                v.push(id.as_str().into());
                if let Some(n) = overrides.n_max {
                    v.push(format!("--nmax={n}"));
                }
                if let Some(t) = overrides.t_max {
                    v.push(format!("--tmax={t}"));
                }
                if let Some(s) = overrides.steps {
                    v.push(format!("--steps={s}"));
                }
                if let Some(g) = overrides.grid {
                    v.push(format!("--grid={g}"));
                }
            }
            Job::Evolve { cfg, order } => {
                v.push("evolve".into());
                v.extend(model_argv(&cfg.model));
                v.push(format!("--initial={}", format_initial(&cfg.initial)));
                v.push(format!("--tmax={}", cfg.t_max));
                v.push(format!("--steps={}", cfg.n_steps));
                if let Some(o) = order {
                    v.push(format!("--order={}", o.as_int()));
                }
            }
            Job::Spectrum { model, order } => {
                v.push("spectrum".into());
                v.extend(model_argv(model));
                v.push(format!("--order={}", order.as_int()));
            }
            Job::Wigner {
                model,
                initial,
                time,
                grid,
            } => {
                v.push("wigner".into());
                v.extend(model_argv(model));
                v.push(format!("--initial={}", format_initial(initial)));
                v.push(format!("--time={time}"));
                v.push(format!("--grid={grid}"));
            }
            Job::Detunings { model, initial } => {
                v.push("detunings".into());
                v.extend(model_argv(model));
                v.push(format!("--initial={}", format_initial(initial)));
            }
            Job::Graph2q { levels } => {
                v.push("graph2q".into());
                v.push(format!("--nmax={levels}"));
            }
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::args::Cli;
    use clap::Parser;

    fn job(args: &[&str]) -> Job {
        let cli = Cli::try_parse_from(std::iter::once("rabi-dsc").chain(args.iter().copied())).unwrap();
        resolve(&cli.command).unwrap()
    }

    #[test]
    fn argv_round_trips() {
        let cases: &[&[&str]] = &[
            &["evolve"],
            &[
                "evolve",
                "--omega0",
                "0.3",
                "--initial=+1,0:0.6,0;-1,2:0,0.8",
                "--order",
                "1",
                "--tmax",
                "0.1",
            ],
            &["spectrum", "--g", "1.5", "--order", "0"],
            &["wigner", "--time", "0.25", "--grid=-3,3,11"],
            &["detunings", "--omega0", "0.5"],
            &["graph2q"],
            &["scenario", "fig3bcd", "--grid=-8,4,31", "--steps", "11"],
        ];
        for args in cases {
            let j = job(args);
            let again = job(&j.argv().iter().map(String::as_str).collect::<Vec<_>>());
            assert_eq!(j, again, "{args:?}");
        }
    }

    #[test]
    fn defaults_are_filled_in() {
        match job(&["evolve"]) {
            Job::Evolve { cfg, order } => {
                assert_eq!(cfg.model.g, DEFAULT_G);
                assert_eq!(cfg.model.n_max, DEFAULT_N_MAX);
                assert_eq!(cfg.n_steps, DEFAULT_STEPS);
                assert_eq!(order, None);
            }
            other => panic!("{other:?}"),
        }
    }
}
