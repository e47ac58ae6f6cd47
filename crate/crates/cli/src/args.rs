use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "qlat",
    version,
    about = "Subspace lattices and quantum propositional semantics"
)]
pub struct Cli {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Equality tolerance (overrides the 1e-9 default)
    #[arg(long, env = "QLAT_EPS", global = true)]
    pub eps: Option<f64>,

    /// Eigenvalue slack used for meets (overrides the 1e-8 default)
    #[arg(long, global = true)]
    pub eps_eig: Option<f64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the six qubit projectors as a projector file
    GenProjectors {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and check finite subspace lattices
    #[command(subcommand)]
    Lattice(LatticeCommand),
    /// Pseudo-complement and Heyting-algebra analysis
    #[command(subcommand)]
    Heyting(HeytingCommand),
    /// Boolean blocks of a projector collection
    Blocks {
        #[arg(long, default_value = "builtin:qubit")]
        projectors: String,
    },
    /// Evaluate a proposition about a prepared state
    Eval(EvalArgs),
    /// Scripted demonstrations with built-in assertions
    Demo(DemoArgs),
}

#[derive(Debug, Subcommand)]
pub enum LatticeCommand {
    Build {
        #[arg(long, default_value = "builtin:qubit")]
        projectors: String,
    },
    Check {
        #[arg(long, value_enum)]
        law: LawArg,
        #[arg(long, default_value = "builtin:qubit")]
        projectors: String,
        /// `holds=true|false`
        #[arg(long)]
        expect: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LawArg {
    Orthomodular,
    Distributive,
}

#[derive(Debug, Subcommand)]
pub enum HeytingCommand {
    Check {
        /// `builtin:qubit`, `builtin:block:P[m,R]` or a projector file
        #[arg(long, default_value = "builtin:qubit")]
        lattice: String,
        /// `feasible=true|false`
        #[arg(long)]
        expect: Vec<String>,
    },
}

#[derive(Debug, Clone, Args)]
pub struct EvalArgs {
    /// `builtin:psi[m,R]`, inline JSON, or a path to a state file
    #[arg(long)]
    pub state: String,
    #[arg(long)]
    pub formula: String,
    #[arg(long, value_enum)]
    pub semantics: SemanticsArg,
    /// Supervaluational mode only: give cross-block operations their
    /// full-lattice value instead of a gap
    #[arg(long)]
    pub counterfactual_joins: bool,
    /// Atoms to bind; defaults to the qubit family
    #[arg(long, default_value = "builtin:qubit")]
    pub projectors: String,
    /// `verdict=…`, `classification=…` or `degree=…`
    #[arg(long)]
    pub expect: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    Hilbert,
    Super,
    Mv,
}

#[derive(Debug, Clone, Args)]
pub struct DemoArgs {
    #[arg(value_enum)]
    pub name: DemoName,
    /// Preparation for the schroedinger demo
    #[arg(long, default_value = "builtin:psi[1,1]")]
    pub state: String,
    /// Semantics for the schroedinger demo
    #[arg(long, value_enum, default_value_t = SemanticsArg::Super)]
    pub semantics: SemanticsArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DemoName {
    Projectors,
    Lattice,
    PemFailure,
    Heyting,
    Super,
    Mv,
    Parser,
    Schroedinger,
    All,
}
