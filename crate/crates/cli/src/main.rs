//! `demkit`: build crystals, test subsets of tensor products for extremality
//! and Demazure decomposability, and run exhaustive sweeps.
//!
//! Exit codes: 0 success, 1 negative verdict, 2 usage or input error,
//! 3 a result contradicting the theory.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "demkit",
    version,
    about = "Demazure crystals and extremal subsets of tensor products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build B(lambda), or import and validate a crystal.
    Crystal(CrystalArgs),
    /// The Demazure subset B_w(lambda) of B(lambda).
    Demazure(DemazureArgs),
    /// The product B_w(lambda) ⊗ B_u(mu) inside B(lambda) ⊗ B(mu).
    Tensor(TensorArgs),
    /// Extremality, hinges, Kouno's criterion and decomposition of B_w(lambda) ⊗ B_u(mu).
    Analyze(AnalyzeArgs),
    /// Classify every (lambda, mu, w, u) on a grid.
    Sweep(SweepArgs),
    /// Demazure character pi_w(x^lambda).
    Char(CharArgs),
    /// Remove the edges into the broken hinges of B_{s1*s2}(rho)^{⊗2} in A2.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Tsv,
}

#[derive(Args, Debug)]
struct OutputArgs {
    /// File to write; stdout when absent.
    #[arg(long, visible_alias = "export")]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args, Debug)]
struct BudgetArgs {
    /// Largest number of product elements to construct.
    #[arg(long, env = "DEMKIT_BUDGET")]
    budget: Option<usize>,
}

#[derive(Args, Debug)]
struct CrystalArgs {
    /// Cartan type, e.g. A2.
    #[arg(long = "type", required_unless_present = "import")]
    ty: Option<String>,
    /// Highest weight in fundamental-weight coordinates, e.g. 1,1.
    #[arg(long, required_unless_present = "import", allow_hyphen_values = true)]
    weight: Option<String>,
    /// Read a crystal in canonical JSON instead of building one.
    #[arg(long, conflicts_with_all = ["ty", "weight"])]
    import: Option<PathBuf>,
    /// Check the crystal axioms and normality.
    #[arg(long)]
    validate: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct DemazureArgs {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    /// Weyl group element: id, w0, s1*s2 or 12.
    #[arg(long)]
    w: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct ProductArgs {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    #[arg(long, default_value = "w0")]
    w: String,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, default_value = "w0")]
    u: String,
}

#[derive(Args, Debug)]
struct TensorArgs {
    #[command(flatten)]
    product: ProductArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    product: ProductArgs,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long = "type")]
    ty: String,
    /// Use every dominant weight with coordinates at most this bound.
    #[arg(long, conflicts_with = "weights")]
    weight_bound: Option<i64>,
    /// Explicit weights separated by ';', e.g. "1,0;0,1".
    #[arg(long)]
    weights: Option<String>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct CharArgs {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long, default_value = "w0")]
    w: String,
    /// Compare with the character of the crystal subset, for every reduced word.
    #[arg(long)]
    check: bool,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    /// Report the product before any edge is removed.
    #[arg(long, conflicts_with = "single")]
    skip_removal: bool,
    /// Remove only the first of the two edges.
    #[arg(long)]
    single: bool,
    #[command(flatten)]
    output: OutputArgs,
}

/// The non-error outcomes of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Success,
    VerdictFalse,
    Falsified,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Crystal(a) => commands::crystal(a),
        Command::Demazure(a) => commands::demazure(a),
        Command::Tensor(a) => commands::tensor(a),
        Command::Analyze(a) => commands::analyze(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Char(a) => commands::character(a),
        Command::Experiment(a) => commands::experiment(a),
    };
    match result {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerdictFalse) => ExitCode::from(1),
        Ok(Outcome::Falsified) => ExitCode::from(3),
        Err(err) => {
            eprintln!("error: {err:#}");
            let falsified = matches!(
                err.downcast_ref::<demkit_core::Error>(),
                Some(demkit_core::Error::TheoremFalsified(_))
            );
            ExitCode::from(if falsified { 3 } else { 2 })
        }
    }
}
