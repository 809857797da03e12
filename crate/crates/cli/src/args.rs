use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rabi-dsc",
    version,
    about = "Quantum Rabi model in the deep strong coupling regime: dynamics, spectra and Wigner functions as CSV"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct ModelArgs {
    /// Qubit-mode coupling g
    #[arg(long, allow_negative_numbers = true)]
    pub g: Option<f64>,
    /// Mode frequency
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    /// Qubit splitting
    #[arg(long, allow_negative_numbers = true)]
    pub omega0: Option<f64>,
    /// Fock levels kept per parity chain
    #[arg(long)]
    pub nmax: Option<usize>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct InitialArg {
    /// Initial state "<p>,<n>[:re,im];...", p = +1 or -1, n the level of b
    #[arg(long, allow_hyphen_values = true)]
    pub initial: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutArg {
    /// Output file (directory for `scenario`); stdout when absent
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a named scenario with fixed parameters, writing one CSV per table
    Scenario {
        id: ScenarioId,
        #[arg(long)]
        nmax: Option<usize>,
        /// Final time, in units of 2 pi / omega
        #[arg(long, allow_negative_numbers = true)]
        tmax: Option<f64>,
        #[arg(long)]
        steps: Option<usize>,
        /// Wigner grid "min,max,points", used for both quadratures
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Revival probability, mean quadratures and parity over time
    Evolve {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        initial: InitialArg,
        /// Final time, in units of 2 pi / omega
        #[arg(long, allow_negative_numbers = true)]
        tmax: Option<f64>,
        /// Number of time samples, endpoints included
        #[arg(long)]
        steps: Option<usize>,
        /// Add the revival curve rebuilt from perturbative energies of this order
        #[arg(long)]
        order: Option<u8>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Exact and perturbative eigenenergies of both chains
    Spectrum {
        #[command(flatten)]
        model: ModelArgs,
        /// Perturbative order 0, 1 or 2
        #[arg(long)]
        order: Option<u8>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Wigner function of the chain mode at one time
    Wigner {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        initial: InitialArg,
        /// Snapshot time, in units of 2 pi / omega
        #[arg(long, allow_negative_numbers = true)]
        time: Option<f64>,
        /// Grid "min,max,points", used for both quadratures
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Detunings of the eigenlevels and their weights in the initial state
    Detunings {
        #[command(flatten)]
        model: ModelArgs,
        #[command(flatten)]
        initial: InitialArg,
        #[command(flatten)]
        out: OutArg,
    },
    /// Coupling graph of two qubits and one mode, as an edge list
    Graph2q {
        /// Photon levels included
        #[arg(long)]
        nmax: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Regenerate a file from the command recorded in its header
    Replay {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScenarioId {
    Fig1a,
    Fig1b,
    Fig1c,
    Fig2a,
    Fig2b,
    Fig3a,
    Fig3bcd,
    Fig4a,
    Fig4b,
    Fig4c,
    Fig5,
}

impl ScenarioId {
    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioId::Fig1a => "fig1a",
            ScenarioId::Fig1b => "fig1b",
            ScenarioId::Fig1c => "fig1c",
            ScenarioId::Fig2a => "fig2a",
            ScenarioId::Fig2b => "fig2b",
            ScenarioId::Fig3a => "fig3a",
            ScenarioId::Fig3bcd => "fig3bcd",
            ScenarioId::Fig4a => "fig4a",
            ScenarioId::Fig4b => "fig4b",
            ScenarioId::Fig4c => "fig4c",
            ScenarioId::Fig5 => "fig5",
        }
    }
}
