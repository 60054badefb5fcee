use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use qcgl::ncalg::{DEFAULT_NILPOTENCE_BOUND, DEFAULT_STEPS_BUDGET};
use qcgl::verify::DEFAULT_SEED;

/// Exact computation in CGL extensions and quantum matrices over Q(q).
///
/// The active algebra is chosen per invocation with `--algebra` or `--spec`;
/// `qcgl algebra ...` prints a spec file that `--spec` accepts.
#[derive(Debug, Parser)]
#[command(name = "qcgl", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Active algebra: `qmat:M,N`, `qplane` or `uq-sl3-plus`.
    #[arg(long, global = true, env = "QCGL_ALGEBRA", default_value = "qmat:2,2")]
    pub algebra: String,

    /// Load the active algebra from a spec file; takes precedence over `--algebra`.
    #[arg(long, global = true, value_name = "FILE")]
    pub spec: Option<PathBuf>,

    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest power of δ tried before giving up on nilpotence.
    #[arg(long, global = true, value_name = "B", default_value_t = DEFAULT_NILPOTENCE_BOUND)]
    pub nilpotence_bound: usize,

    /// Seed for randomized checks.
    #[arg(long, global = true, value_name = "S", env = "QCGL_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Maximum number of rewriting steps per normal form.
    #[arg(long, global = true, value_name = "K", default_value_t = DEFAULT_STEPS_BUDGET)]
    pub steps_budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a spec file for an algebra after checking its axioms.
    #[command(subcommand)]
    Algebra(AlgebraCmd),

    /// Normal form of an expression.
    Nf {
        expr: String,
        /// Evaluate in the localisation at the top generator `X`.
        #[arg(long)]
        laurent: bool,
    },

    /// Quantum minor with rows I and columns J, e.g. `minor 1,2 1,3`.
    Minor { rows: String, cols: String },

    /// Exponent s with ab = q^s ba, or `none`.
    Qcommute { a: String, b: String },

    /// q-commutation exponent against every generator.
    Normal { expr: String },

    /// Torus weight, or `inhomogeneous`.
    Weight { expr: String },

    /// Cauchon diagram combinatorics.
    Cauchon {
        #[arg(value_enum)]
        action: CauchonAction,
        m: usize,
        n: usize,
    },

    /// Image under the deleting-derivations map of the top variable.
    Theta {
        expr: String,
        /// Use the expansion with σ^{-n} applied after δ^n.
        #[arg(long)]
        alt: bool,
    },

    /// Run the verification suite.
    #[command(subcommand)]
    Verify(VerifyCmd),

    /// CGL axiom report for the active algebra.
    Axioms,
}

#[derive(Debug, Subcommand)]
pub enum AlgebraCmd {
    /// Generic quantum matrices O_q(M_{m,n}).
    Qmat { m: usize, n: usize },
    /// The quantum affine plane.
    Qplane,
    /// A bundled preset by name.
    Preset { name: String },
    /// A spec file.
    File { path: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CauchonAction {
    Count,
    List,
    Histogram,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// All nine acceptance checks.
    Paper {
        /// Restrict the size-dependent checks to one shape.
        #[arg(long, value_name = "M,N", value_parser = parse_size)]
        size: Option<(usize, usize)>,
    },
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    qcgl::presets::parse_size(s).map_err(|e| e.to_string())
}
