//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the process exit code: 0 pass, 1 fail, 2 input error.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use commands::Outcome;

#[derive(Parser, Debug)]
#[command(name = "lie-ext", version, about = "Exact Lie bracket extensions over n copies of an algebra")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Zero threshold for floating-point spectra.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest admissible extension dimension n·d (and tensor size n).
    #[arg(long, global = true, default_value_t = 64)]
    pub cap: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    DirectSum,
    Circulant,
    Leibnitz,
    LeibnitzDeform,
    Truncate,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a W-tensor file from a named family.
    MakeW {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long)]
        n: Option<usize>,
        /// Comma-separated rationals, e.g. `1,0,-1/2`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Source tensor for `truncate`.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Write here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check symmetry and the quadratic condition of a W-tensor file.
    ValidateW { file: PathBuf },
    /// Count the copies of the base algebra in a circulant extension.
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Brute-force Jacobi check of the extension of an algebra by a W-tensor.
    Certify {
        file: PathBuf,
        /// Built-in name (sl2, so3, heisenberg3, so(p), gl(p), abelian(d)) or a constants file.
        #[arg(long)]
        algebra: String,
        /// Also report the center of the extension.
        #[arg(long)]
        center: bool,
        /// Also check the filtration support and the abelian filtration ideal.
        #[arg(long)]
        filtration: bool,
    },
    /// Basis of the center of an algebra.
    Center { algebra: String },
    /// Whether two Lie brackets on the same space are compatible.
    Compat { first: String, second: String },
    /// μ-spectrum of a circulant family and its diagonalized structure tensor.
    Spectrum {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Randomized checks of the block-circulant sandwich realization.
    SandwichCheck {
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: usize,
    },
    /// Lie–Poisson bracket of two polynomial files.
    PoissonBracket {
        #[arg(long)]
        algebra: String,
        f: PathBuf,
        g: PathBuf,
    },
}

/// Exit status of a command.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    InputError,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InputError => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::InputError => "input-error",
        }
    }

    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its report. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let format = cli.global.format;
    let outcome = commands::execute(&cli);
    emit(&outcome, format, out, err);
    outcome.status.code()
}

fn emit(o: &Outcome, format: Format, out: &mut dyn Write, err: &mut dyn Write) {
    if let Some(msg) = &o.error {
        let _ = writeln!(err, "error: {msg}");
        if format == Format::Json {
            let v = json!({ "status": o.status.label(), "error": msg });
            let _ = writeln!(out, "{}", pretty(&v));
        }
        return;
    }
    let _ = match format {
        Format::Text => write!(out, "{}", o.text),
        Format::Json => writeln!(out, "{}", o.json.as_deref().unwrap_or_default()),
    };
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}
