//! `mfred`: weights, classification, size-two matrix factorizations, the L,
//! Δ and R reductions, and the singularity atlas from the command line.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "mfred",
    version,
    about = "Size-two matrix factorizations of invertible polynomial deformations"
)]
struct Cli {
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug, Default)]
pub struct PolyInput {
    /// Polynomial, e.g. "x^7 + y^3 + z^2"
    #[arg(allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// 1-based index of a catalog equation, used instead of a polynomial
    #[arg(long, conflicts_with = "poly")]
    pub row: Option<usize>,
    /// Comma-separated variable order (default: x, y, z, w, then the rest alphabetically)
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
}

#[derive(Args, Clone, Debug, Default)]
pub struct MfInput {
    /// First element of the regular sequence
    #[arg(long, allow_hyphen_values = true)]
    pub p1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p2: Option<String>,
    /// Cofactor of p1 in f = p1*h1 + p2*h2
    #[arg(long, allow_hyphen_values = true)]
    pub h1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub h2: Option<String>,
    /// Theorem case (I, II1a, ..., Vb) instead of explicit entries
    #[arg(long)]
    pub case: Option<String>,
    /// Exponents p1,p2,p3 of the case
    #[arg(long, value_delimiter = ',')]
    pub p: Option<Vec<u32>>,
    #[arg(long)]
    pub m: Option<u32>,
    /// λ₃,…,λ_{m+2} (default 1,2,…,m)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub lambdas: Option<Vec<String>>,
    /// Arm whose factor goes to the lower right corner
    #[arg(long)]
    pub arm: Option<usize>,
    /// Two-variable case "alpha,beta" for x^alpha*y^beta + y^3
    #[arg(long, value_delimiter = ',')]
    pub two_var: Option<Vec<u32>>,
    #[arg(long, value_delimiter = ',')]
    pub vars: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceKind {
    L,
    Delta,
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Reductions,
    Virtual,
    Adjacency,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Q0,
    Q1,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical and reduced weights, c, ε and the maximal grading
    Weights(PolyInput),
    /// Deformation type, p, m, λ and Dolgachev numbers
    Classify(PolyInput),
    /// Checks the embedding into the weighted projective line ring
    EmbedCheck {
        #[command(flatten)]
        input: PolyInput,
        /// Parameters of the target ring (default: those recovered by classification)
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambdas: Option<Vec<String>>,
    },
    /// Builds and verifies a size-two factorization
    Mf(MfInput),
    /// Complete intersection of a factorization
    Fq {
        #[command(flatten)]
        input: MfInput,
        #[arg(long, value_enum, default_value = "q1")]
        convention: ConventionArg,
    },
    /// L, Δ or R reduction
    Reduce {
        #[arg(long, value_enum)]
        kind: ReduceKind,
        /// Polynomial (Δ, R) or the two equations (L)
        #[arg(required = true, num_args = 1..=2, allow_hyphen_values = true)]
        input: Vec<String>,
        /// Variable eliminated by L, or the quadratic variable of Δ
        #[arg(long, default_value = "w")]
        var: String,
        /// New variable introduced by Δ
        #[arg(long, default_value = "z")]
        z: String,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Solutions of the case conditions in a box
    Enumerate {
        #[arg(long, default_value_t = 20)]
        pmax: u32,
        #[arg(long, default_value_t = 6)]
        mmax: u32,
    },
    /// Runs the embedding verification of one theorem case
    VerifyTheorem {
        #[arg(long)]
        case: String,
        #[arg(long, value_delimiter = ',', required = true)]
        p: Vec<u32>,
        #[arg(long)]
        m: u32,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambdas: Option<Vec<String>>,
        #[arg(long)]
        arm: Option<usize>,
    },
    /// Weight systems with ε = −1 and their equations
    Catalog,
    /// Graph export
    Pyramid {
        #[arg(long, value_enum, default_value = "reductions")]
        which: Which,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
    },
    /// Strange duality pairing
    Duality {
        /// Duality table replacing the bundled one
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Checks that reductions are dual to s-adjacencies
    VerifyCorollary {
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Weights(input) => commands::weights(&input),
        Command::Classify(input) => commands::classify(&input),
        Command::EmbedCheck { input, lambdas } => commands::embed_check(&input, lambdas.as_deref()),
        Command::Mf(input) => commands::mf(&input),
        Command::Fq { input, convention } => commands::fq(&input, convention),
        Command::Reduce {
            kind,
            input,
            var,
            z,
            vars,
        } => commands::reduce(kind, &input, &var, &z, vars.as_deref()),
        Command::Enumerate { pmax, mmax } => commands::enumerate(pmax, mmax),
        Command::VerifyTheorem {
            case,
            p,
            m,
            lambdas,
            arm,
        } => commands::verify_theorem(&case, &p, m, lambdas.as_deref(), arm),
        Command::Catalog => commands::catalog(),
        Command::Pyramid { which, format } => commands::pyramid(which, format),
        Command::Duality { table } => commands::duality(table.as_deref()),
        Command::VerifyCorollary { table } => commands::verify_corollary(table.as_deref()),
    };
    match result {
        Ok(out) => {
            let text = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&out.json).expect("json value")
                )
            } else {
                out.text
            };
            // a closed pipe is not an error for the command itself
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
