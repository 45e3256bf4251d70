mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mfg_core::Bounds;

use input::CliError;

#[derive(Parser, Debug)]
#[command(name = "mfg", version, about = "Exact computations with Markov shifts, their full groups and Cuntz-Krieger algebras")]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Sweep bounds: preperiod, period and depth (`6 4 8` or `6,4,8`).
    /// Defaults to $MFG_BOUNDS, then to 6,4,8.
    #[arg(long, global = true, num_args = 3, value_names = ["P", "Q", "D"])]
    bounds: Option<Vec<usize>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Shift spaces and admissible words.
    #[command(subcommand)]
    Shift(ShiftCmd),
    /// Prefix-exchange tables in the topological full group.
    #[command(subcommand)]
    Fg(FgCmd),
    /// Elements of the Cuntz-Krieger algebra.
    #[command(subcommand)]
    Ck(CkCmd),
    /// Orbit equivalences given as tail maps.
    #[command(subcommand)]
    Oe(OeCmd),
    /// Built-in verification suites.
    #[command(subcommand)]
    Suite(SuiteCmd),
}

/// Every JSON-valued option accepts inline JSON, a file path, or `-` for stdin.
#[derive(Args, Debug)]
pub struct MatrixArg {
    /// Matrix `[[1,1],[1,0]]`, `{"n":..,"rows":..}`, or a name (`F`, `A2`, ...).
    #[arg(long)]
    pub matrix: String,
}

#[derive(Subcommand, Debug)]
pub enum ShiftCmd {
    /// Whether the matrix satisfies condition (I).
    CheckI(MatrixArg),
    /// List the admissible words of length k.
    Words {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(short)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum FgCmd {
    /// Validate a table and print its canonical form.
    Validate {
        #[arg(long)]
        table: String,
    },
    /// Apply a table to an eventually periodic point `pre|period`.
    Apply {
        #[arg(long)]
        table: String,
        #[arg(long)]
        point: String,
    },
    /// The composite `left ∘ right`.
    Compose {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Invert {
        #[arg(long)]
        table: String,
    },
    /// The cocycle pair (k, l) of a table.
    Cocycles {
        #[arg(long)]
        table: String,
    },
    /// Whether every exchanged pair has equal lengths.
    IsAf {
        #[arg(long)]
        table: String,
    },
    /// The local shift piece attached to a word of length two.
    GenLemma32 {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        mu: String,
    },
    /// An element moving the point `x` to `j x`.
    GenLemma33 {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        point: String,
        #[arg(long)]
        symbol: u8,
    },
    /// The permutation element of the sets W_p(i); `perms` is a list of
    /// `{word: word}` objects, one per symbol.
    GenPerm {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(short)]
        p: usize,
        #[arg(long)]
        perms: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CkCmd {
    /// Check the defining relations of the generators.
    Relations {
        #[command(flatten)]
        m: MatrixArg,
        /// Order of the root of unity adjoined to the coefficients.
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    NormalForm {
        #[arg(long)]
        element: String,
    },
    Equals {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// The unitary u_τ of a table.
    UFromTable {
        #[arg(long)]
        table: String,
        #[arg(long, default_value_t = 4)]
        order: u32,
    },
    /// Split a normalizer as (phase, table).
    Decompose {
        #[arg(long)]
        element: String,
    },
    /// The conditional expectation onto the diagonal.
    Expectation {
        #[arg(long)]
        element: String,
    },
    /// The coefficients a_μ in a = Σ_μ S_μ a_μ over words μ of length n.
    StripPrefix {
        #[arg(long)]
        element: String,
        #[arg(short)]
        n: usize,
    },
    /// Apply the automorphism determined by the phase U(1).
    Lambda {
        #[arg(long)]
        phase: String,
        #[arg(long)]
        element: String,
    },
    /// Find v of the given depth with U(1) = v φ_A(v*).
    SolveCoboundary {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long)]
        phase: String,
        #[arg(long)]
        depth: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum OeCmd {
    /// Print the golden-mean to full-2-shift map with its cocycles.
    ExampleGoldenMean,
    Apply {
        /// A tail map, or `golden-mean`.
        #[arg(long)]
        map: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Check the orbit cocycle identities on the point sweep.
    Verify {
        #[arg(long)]
        map: String,
        /// Defaults to the built-in cocycles when `map` is `golden-mean`.
        #[arg(long)]
        cocycles: Option<String>,
    },
    /// The table of h ∘ τ ∘ h⁻¹.
    Conjugate {
        #[arg(long)]
        map: String,
        #[arg(long)]
        table: String,
    },
    /// Push a diagonal element forward along h.
    Transport {
        #[arg(long)]
        map: String,
        #[arg(long)]
        element: String,
    },
    /// Check the uniform identities with constants k1, k2.
    Uniform {
        #[arg(long)]
        map: String,
        #[arg(long)]
        k1: usize,
        #[arg(long)]
        k2: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum SuiteCmd {
    /// Run every acceptance criterion.
    Acceptance,
}

fn bounds(cli: &Cli) -> Result<Bounds, CliError> {
    match cli.bounds.as_deref() {
        None => Bounds::from_env().map_err(CliError::parse),
        Some(&[p, q, d]) => Bounds::new(p, q, d).map_err(CliError::parse),
        Some(_) => unreachable!("clap enforces three values"),
    }
}

/// Splits `--bounds 6,4,8` and `--bounds=6,4,8` into three arguments.
fn expand_bounds(args: impl Iterator<Item = String>) -> Vec<String> {
    let split = |v: &str| v.split(',').map(str::to_string).collect::<Vec<_>>();
    let mut out = Vec::new();
    let mut after_flag = false;
    for a in args {
        if let Some(v) = a.strip_prefix("--bounds=") {
            out.push("--bounds".to_string());
            out.extend(split(v));
        } else if after_flag {
            out.extend(split(&a));
        } else {
            out.push(a.clone());
        }
        after_flag = a == "--bounds";
    }
    out
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse_from(expand_bounds(std::env::args()));
    let result = bounds(&cli).and_then(|b| commands::run(&cli.command, b));
    match result {
        Ok(reply) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&reply.json).expect("serializable"));
            } else {
                emit(reply.human.trim_end());
            }
            ExitCode::from(if reply.ok { 0 } else { 1 })
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({ "error": { "code": e.code, "message": e.message } });
                emit(&serde_json::to_string_pretty(&v).expect("serializable"));
            }
            eprintln!("error[{}]: {}", e.code, e.message);
            ExitCode::from(e.exit)
        }
    }
}
