//! The `revpaste` command line.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use revpaste::{linalg, reversing_jordan, Axis, QMatrix, Rational};
use serde_json::{json, Value};

use crate::codec::{self, Operand, ParseError};
use crate::suite::{run_suite, ConfigError, SuiteConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "revpaste", version, about = "Exact reversing and pasting of vectors and matrices")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Io {
    /// Input file; standard input when omitted or "-".
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Output file; standard output when omitted.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reverse a vector, or the rows, columns or both of a matrix.
    Reverse {
        #[arg(long, value_enum, default_value_t = ReverseMode::Full)]
        mode: ReverseMode,
        #[command(flatten)]
        io: Io,
    },
    /// Paste two vectors, or two matrices side by side, stacked or block-diagonally.
    Paste {
        #[arg(long, value_enum, default_value_t = PasteMode::Rows)]
        mode: PasteMode,
        /// First operand.
        first: PathBuf,
        /// Second operand; standard input when omitted.
        second: Option<PathBuf>,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Split into palindromic and antipalindromic parts.
    Decompose {
        #[arg(long, value_enum, default_value_t = DecomposeMode::Full)]
        mode: DecomposeMode,
        #[command(flatten)]
        io: Io,
    },
    /// Characteristic polynomial det(λI − A), ascending coefficients.
    Charpoly {
        #[command(flatten)]
        io: Io,
    },
    /// Jordan form J and similarity P of the n×n reversing matrix.
    JordanReversing {
        #[arg(long)]
        n: usize,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run the seeded property suite and print its JSON report.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, default_value_t = 9)]
        bound: u64,
        /// Comma-separated property ids to run.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
        /// Also run the deliberately false identities.
        #[arg(long)]
        negative_controls: bool,
        /// Leave the elapsed time out of the report.
        #[arg(long)]
        no_timing: bool,
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReverseMode {
    Rows,
    Cols,
    Full,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PasteMode {
    Rows,
    Cols,
    Blocks,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecomposeMode {
    Vector,
    Rows,
    Cols,
    Full,
    Quad,
}

impl From<ReverseMode> for Axis {
    fn from(m: ReverseMode) -> Axis {
        match m {
            ReverseMode::Rows => Axis::Rows,
            ReverseMode::Cols => Axis::Cols,
            ReverseMode::Full => Axis::Full,
        }
    }
}

/// Everything that ends a command early.
#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Math(#[from] revpaste::Error),
    #[error("{0}")]
    Config(#[from] ConfigError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Streams<'_> {
    fn read(&mut self, path: Option<&PathBuf>) -> Result<(String, String), CliError> {
        match path.filter(|p| p.as_os_str() != "-") {
            Some(p) => {
                let name = p.display().to_string();
                fs::read_to_string(p).map(|t| (name.clone(), t)).map_err(|source| CliError::Io { path: name, source })
            }
            None => {
                let mut text = String::new();
                self.stdin.read_to_string(&mut text).map_err(|source| CliError::Io { path: "<stdin>".into(), source })?;
                Ok(("<stdin>".into(), text))
            }
        }
    }

    fn operand(&mut self, path: Option<&PathBuf>) -> Result<Operand, CliError> {
        let (name, text) = self.read(path)?;
        codec::parse_operand(&text).map_err(|source| CliError::Parse { path: name, source })
    }

    fn matrix(&mut self, path: Option<&PathBuf>) -> Result<QMatrix, CliError> {
        match self.operand(path)? {
            Operand::Matrix(a) => Ok(a),
            Operand::Vector(_) => Err(CliError::Usage("expected a matrix, got a vector".into())),
        }
    }

    fn write(&mut self, path: Option<&PathBuf>, value: &Value) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(value).expect("JSON values serialize") + "\n";
        match path {
            Some(p) => fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
            None => self.stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
        }
    }
}

fn parts(p: &Value, a: &Value) -> Value {
    json!({ "palindromic": p, "antipalindromic": a })
}

fn execute(cli: Cli, io: &mut Streams<'_>) -> Result<i32, CliError> {
    match cli.command {
        Command::Reverse { mode, io: files } => {
            let out = match io.operand(files.input.as_ref())? {
                Operand::Vector(v) => codec::vector_to_value(&v.reversed()),
                Operand::Matrix(a) => codec::matrix_to_value(&a.reverse(mode.into())),
            };
            io.write(files.output.as_ref(), &out)?;
        }
        Command::Paste { mode, first, second, output } => {
            let a = io.operand(Some(&first))?;
            let b = io.operand(second.as_ref())?;
            let out = match (a, b, mode) {
                (Operand::Vector(v), Operand::Vector(w), _) => codec::vector_to_value(&v.paste(&w)),
                (Operand::Matrix(a), Operand::Matrix(b), PasteMode::Rows) => codec::matrix_to_value(&a.paste_rows(&b)?),
                (Operand::Matrix(a), Operand::Matrix(b), PasteMode::Cols) => codec::matrix_to_value(&a.paste_cols(&b)?),
                (Operand::Matrix(a), Operand::Matrix(b), PasteMode::Blocks) => codec::matrix_to_value(&a.paste_blocks(&b)),
                _ => return Err(CliError::Usage("cannot paste a vector with a matrix".into())),
            };
            io.write(output.as_ref(), &out)?;
        }
        Command::Decompose { mode, io: files } => {
            let out = match (mode, io.operand(files.input.as_ref())?) {
                (DecomposeMode::Vector, Operand::Vector(v)) => {
                    parts(&codec::vector_to_value(&v.palindromic_part()), &codec::vector_to_value(&v.antipalindromic_part()))
                }
                (DecomposeMode::Vector, Operand::Matrix(_)) => {
                    return Err(CliError::Usage("--mode vector expects a vector".into()))
                }
                (_, Operand::Vector(_)) => return Err(CliError::Usage("only --mode vector accepts a vector".into())),
                (DecomposeMode::Quad, Operand::Matrix(a)) => {
                    let q = a.quad_decompose();
                    json!({
                        "pp": codec::matrix_to_value(&q.pp),
                        "pa": codec::matrix_to_value(&q.pa),
                        "ap": codec::matrix_to_value(&q.ap),
                        "aa": codec::matrix_to_value(&q.aa),
                    })
                }
                (mode, Operand::Matrix(a)) => {
                    let axis = match mode {
                        DecomposeMode::Rows => Axis::Rows,
                        DecomposeMode::Cols => Axis::Cols,
                        _ => Axis::Full,
                    };
                    parts(
                        &codec::matrix_to_value(&a.project_palindromic(axis)),
                        &codec::matrix_to_value(&a.project_antipalindromic(axis)),
                    )
                }
            };
            io.write(files.output.as_ref(), &out)?;
        }
        Command::Charpoly { io: files } => {
            let a = io.matrix(files.input.as_ref())?;
            io.write(files.output.as_ref(), &codec::polynomial_to_value(&linalg::charpoly(&a)?))?;
        }
        Command::JordanReversing { n, output } => {
            let pair = reversing_jordan::<Rational>(n)?;
            let out = json!({ "j": codec::matrix_to_value(&pair.j), "p": codec::matrix_to_value(&pair.p) });
            io.write(output.as_ref(), &out)?;
        }
        Command::Verify { seed, trials, max_dim, bound, only, negative_controls, no_timing, output } => {
            let cfg = SuiteConfig { seed, trials, max_dim, bound, only, negative_controls };
            let mut report = run_suite(&cfg)?;
            if no_timing {
                report = report.without_timing();
            }
            let value = serde_json::to_value(&report).expect("report serializes");
            io.write(output.as_ref(), &value)?;
            return Ok(if report.overall_pass { EXIT_OK } else { EXIT_FAILURE });
        }
    }
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli, &mut Streams { stdin, stdout }) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}
