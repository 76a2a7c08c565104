//! `theta`: tables, actions and checks for the theta-divisor basis of complex cobordism.

mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Outcome;

#[derive(Parser)]
#[command(name = "theta", version, about = "Theta-divisor calculus for complex cobordism")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
pub struct Weight {
    /// Truncation weight N.
    #[arg(long, env = "THETA_MAX_WEIGHT", default_value_t = theta_cobordism::DEFAULT_MAX_WEIGHT)]
    pub max_weight: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Coefficients of beta(z) = z + Σ t_n z^{n+1}/(n+1)!.
    Beta(Weight),
    /// Coefficients of the inverse series and the classes [CP^n].
    Logarithm(Weight),
    /// Dual class tables with their integrality multipliers.
    Classes {
        #[arg(value_enum)]
        family: Family,
        #[command(flatten)]
        weight: Weight,
    },
    /// Landweber-Novikov operations.
    Ln {
        #[command(subcommand)]
        action: LnAction,
    },
    /// Intersections of translated theta divisors.
    Theta {
        #[command(subcommand)]
        action: ThetaAction,
    },
    /// Value of a Hirzebruch genus.
    Genus {
        /// todd, l, euler, or file:PATH with {"coeffs": [...]}.
        #[arg(long, default_value = "todd")]
        name: String,
        /// theta:N or poly:EXPR.
        #[arg(long)]
        of: String,
    },
    /// Betti numbers, Euler number, signature and Chern numbers of Θ^n(k).
    Invariants {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Divisibility conditions on Chern numbers in one dimension.
    Congruences {
        #[arg(long)]
        n: u32,
        /// JSON file with a Chern vector to test.
        #[arg(long)]
        check: Option<std::path::PathBuf>,
    },
    /// Quantisation of an element of the theta ring.
    Quantize {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Also check that dequantisation returns the input.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Formal group law checks.
    Fgl {
        #[command(subcommand)]
        action: FglAction,
    },
    /// Floating-point checks on Weierstrass functions.
    Weierstrass {
        #[command(subcommand)]
        action: WeierstrassAction,
    },
    /// Runs the acceptance suite.
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    Vn,
    Wn,
    Cpn,
}

#[derive(Subcommand)]
enum LnAction {
    /// S_lambda applied to a polynomial.
    Apply {
        /// Parts separated by commas, e.g. "2,1".
        #[arg(long)]
        partition: String,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
    },
    /// [S_(1), S_(2)] on the generators a_1..a_n of the Diff_1 model.
    Commutator {
        #[arg(long, default_value_t = 6)]
        n: u32,
    },
}

#[derive(Subcommand)]
enum ThetaAction {
    /// The class of Θ_k^{n-k}.
    Intersect {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
}

#[derive(Subcommand)]
enum FglAction {
    /// Residuals of unit, symmetry, associativity and F(beta(z), beta(w)) = beta(z+w).
    Check {
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
}

#[derive(Subcommand)]
enum WeierstrassAction {
    Verify {
        /// Square lattice with omega_1 = 1, omega_2 = i.
        #[arg(long, conflicts_with_all = ["omega1", "omega2"])]
        lemniscatic: bool,
        #[arg(long, requires = "omega2", allow_hyphen_values = true)]
        omega1: Option<String>,
        #[arg(long, requires = "omega1", allow_hyphen_values = true)]
        omega2: Option<String>,
        /// Replaces every per-check tolerance.
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
}

fn run(cmd: Command) -> theta_cobordism::Result<Outcome> {
    use commands as c;
    match cmd {
        Command::Beta(w) => c::beta(w.max_weight),
        Command::Logarithm(w) => c::logarithm(w.max_weight),
        Command::Classes { family, weight } => c::classes(family, weight.max_weight),
        Command::Ln { action: LnAction::Apply { partition, expr } } => c::ln_apply(&partition, &expr),
        Command::Ln { action: LnAction::Commutator { n } } => c::commutator(n),
        Command::Theta { action: ThetaAction::Intersect { n, k } } => c::theta_intersect(n, k),
        Command::Genus { name, of } => c::genus(&name, &of),
        Command::Invariants { n, k } => c::invariants(n, k),
        Command::Congruences { n, check } => c::congruences(n, check.as_deref()),
        Command::Quantize { expr, roundtrip } => c::quantize(&expr, roundtrip),
        Command::Fgl { action: FglAction::Check { order } } => c::fgl_check(order),
        Command::Weierstrass { action: WeierstrassAction::Verify { lemniscatic, omega1, omega2, tol, points } } => {
            c::weierstrass_verify(lemniscatic, omega1.as_deref(), omega2.as_deref(), tol, points)
        }
        Command::Selftest => Ok(c::selftest()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.envelope()).expect("serialisable")),
            }
            ExitCode::from(out.status.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
