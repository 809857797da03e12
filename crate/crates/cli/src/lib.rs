//! Command-line front end: every run resolves to a [`job::Job`], which
//! produces one or more CSV [`table::Table`]s.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod job;
pub mod scenario;
pub mod table;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, CliResult};
use job::Job;
use table::{read_meta, Table};

pub const TOOL: &str = "rabi-dsc";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Builds the tables of a job, each headed by the tool, version, argv and file name.
pub fn execute(job: &Job) -> CliResult<Vec<Table>> {
    let mut tables = match job {
        Job::Scenario { id, overrides } => scenario::run_scenario(*id, overrides)?,
        Job::Evolve { cfg, order } => vec![commands::evolve("evolve.csv", cfg, *order)?],
        Job::Spectrum { model, order } => vec![commands::spectrum("spectrum.csv", model, *order)?],
        Job::Wigner {
            model,
            initial,
            time,
            grid,
        } => {
            let prop = commands::single_chain_propagator(model, initial, "wigner")?;
            vec![commands::wigner_table("wigner.csv", &prop, *time, grid)?]
        }
        Job::Detunings { model, initial } => vec![commands::detunings("detunings.csv", model, initial)?],
        Job::Graph2q { levels } => vec![commands::graph2q("graph2q.csv", *levels)?],
    };
    let argv = job.argv().join(" ");
    for t in &mut tables {
        let common = [
            ("tool".to_string(), TOOL.to_string()),
            ("version".to_string(), VERSION.to_string()),
            ("argv".to_string(), argv.clone()),
            ("file".to_string(), t.name.clone()),
        ];
        t.prepend_meta(&common);
    }
    Ok(tables)
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| CliError::io(format!("writing {}", path.display()), e))
}

fn write_single(table: &Table, out: Option<&Path>) -> CliResult<()> {
    let text = table.render();
    match out {
        Some(path) => write_file(path, &text),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("writing stdout", e)),
    }
}

fn write_dir(tables: &[Table], dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(format!("creating {}", dir.display()), e))?;
    for t in tables {
        let path = dir.join(&t.name);
        write_file(&path, &t.render())?;
        eprintln!("wrote {} ({} rows)", path.display(), t.len());
    }
    Ok(())
}

/// Re-runs the command recorded in a file header and returns the table it names.
pub fn replay(file: &Path) -> CliResult<Table> {
    let text = fs::read_to_string(file).map_err(|e| CliError::io(format!("reading {}", file.display()), e))?;
    let missing = |key: &str| CliError::validation("file", format!("{} has no #{key}= header line", file.display()));
    let argv = read_meta(&text, "argv").ok_or_else(|| missing("argv"))?;
    let name = read_meta(&text, "file").ok_or_else(|| missing("file"))?;
    let tokens = std::iter::once(TOOL).chain(argv.split(' ').filter(|s| !s.is_empty()));
    let cli = Cli::try_parse_from(tokens)
        .map_err(|e| CliError::validation("file", format!("recorded argv does not parse: {}", e.kind())))?;
    if matches!(cli.command, Command::Replay { .. }) {
        return Err(CliError::validation("file", "recorded argv is itself a replay"));
    }
    let job = job::resolve(&cli.command)?;
    execute(&job)?
        .into_iter()
        .find(|t| t.name == name)
        .ok_or_else(|| CliError::validation("file", format!("the recorded command no longer produces {name}")))
}

pub fn run(cli: Cli) -> CliResult<()> {
    match &cli.command {
        Command::Replay { file, out } => write_single(&replay(file)?, out.out.as_deref()),
        Command::Scenario { out, .. } => {
            let tables = execute(&job::resolve(&cli.command)?)?;
            let dir = out.out.clone().unwrap_or_else(|| PathBuf::from("."));
            write_dir(&tables, &dir)
        }
        Command::Evolve { out, .. }
        | Command::Spectrum { out, .. }
        | Command::Wigner { out, .. }
        | Command::Detunings { out, .. }
        | Command::Graph2q { out, .. } => {
            let tables = execute(&job::resolve(&cli.command)?)?;
            write_single(&tables[0], out.out.as_deref())
        }
    }
}
