mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use loopbraid::GroupKind;

#[derive(Parser)]
#[command(name = "loopbraid", version, about = "Braid and loop braid group representations over cyclotomic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog representation and write it as JSON.
    Construct(ConstructArgs),
    /// Check the defining relations of a group exactly.
    Verify {
        file: PathBuf,
        #[arg(long, value_parser = parse_group)]
        group: GroupKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extend a B3 representation (or lift an LB3 one to VB3).
    Extend {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::Standard)]
        mode: Mode,
        /// Parameter z of the nonstandard 3-dimensional family.
        #[arg(long, allow_hyphen_values = true)]
        z: Option<String>,
        /// Scalar k with S = kAB; searched for when omitted.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Structural analysis: irreducibility, uniqueness system, SLB3 factoring.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        uniqueness: bool,
        #[arg(long)]
        slb3: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify that a B3 representation has no LB3 extension.
    Certify {
        file: PathBuf,
        #[command(flatten)]
        oracle: OracleArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check random draws of a family for standard extensions.
    Sweep {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 25)]
        draws: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Conductor of the field the parameters are drawn from.
        #[arg(long, default_value_t = 12)]
        conductor: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Standard,
    Nonstandard3,
    Vb3,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, default_value_t = 2000)]
    starts: usize,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    #[arg(long, default_value_t = 1e-6)]
    cluster_radius: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ConstructArgs {
    family: String,
    /// Eigenvalues (tw2..tw5, v1) or the binomial λ₀..λ_d; space or comma separated.
    #[arg(long, num_args = 1.., value_delimiter = ',', allow_negative_numbers = true)]
    lambda: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma2: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    /// tw2 family: reducible or irreducible.
    #[arg(long, default_value = "irreducible")]
    variant: String,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    sqrt_mu: Option<String>,
    /// abeq blocks: plain or capped (defaults follow the parity of n).
    #[arg(long)]
    a1: Option<String>,
    #[arg(long)]
    a2: Option<String>,
    #[arg(long, default_value = "plus")]
    sign: String,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_group(s: &str) -> Result<GroupKind, String> {
    s.parse().map_err(|e: loopbraid::Error| e.to_string())
}

fn run(cli: Cli) -> report::Outcome<()> {
    match cli.command {
        Command::Construct(args) => commands::construct(&args),
        Command::Verify { file, group, out } => commands::verify(&file, group, out.as_ref()),
        Command::Extend { file, mode, z, k, out } => {
            commands::extend(&file, mode, z.as_deref(), k.as_deref(), out.as_ref())
        }
        Command::Analyze { file, uniqueness, slb3, out } => commands::analyze(&file, uniqueness, slb3, out.as_ref()),
        Command::Certify { file, oracle, out } => commands::certify(&file, &oracle, out.as_ref()),
        Command::Sweep { family, draws, seed, conductor, out } => {
            commands::sweep(&family, draws, seed, conductor, out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("loopbraid: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
