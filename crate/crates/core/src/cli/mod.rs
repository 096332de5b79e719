//! Command-line front end. Every command writes deterministic text: CSV
//! with `#` metadata lines, or a plain report for `verify`.

mod commands;
mod verify;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::hydrogen::AngularKind;

pub use commands::{cmd_angular, cmd_autocorr, cmd_coeffs, cmd_divergence, cmd_pn, cmd_surface};
pub use verify::{cmd_verify, Fault, SuiteOutcome, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ARGS: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

pub const MIN_DIGITS: u32 = 15;
pub const MAX_DIGITS: u32 = 200;
pub const MAX_N_MAX: u32 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Quad,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Regular,
    Pseudo,
}

impl From<Kind> for AngularKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Regular => AngularKind::Regular,
            Kind::Pseudo => AngularKind::Pseudo,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Overlap coefficients of the pseudo-state with every bound state up to --nmax
    Coeffs,
    /// P(N) table and the continuum lower bound
    Pn,
    /// |ξ_ℓ(θ)| against the regular polar factor
    Angular,
    /// (r, θ, density) grid for isosurface plots
    Surface,
    /// Run the invariant suites; exit 3 on any failure
    Verify,
    /// Point-spectrum autocorrelation over a time range
    Autocorr,
    /// Truncated angular integrals approaching the axis
    Divergence,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "hydroxi", version, about = "Hydrogen pseudo-eigenfunctions and their bound-state decomposition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, default_value_t = 1)]
    pub n: u32,
    #[arg(long = "l", global = true, default_value_t = 0)]
    pub ell: u32,
    #[arg(long, global = true, default_value_t = 0)]
    pub m: i32,
    #[arg(long = "nmax", global = true, default_value_t = 40)]
    pub n_max: u32,
    #[arg(long, global = true, default_value_t = 30)]
    pub digits: u32,
    /// θ samples for `angular` and `surface`
    #[arg(long, global = true, default_value_t = 181)]
    pub samples: usize,
    /// Radial samples for `surface`
    #[arg(long = "nr", global = true, default_value_t = 64)]
    pub n_r: usize,
    #[arg(long = "rmax", global = true, default_value_t = 10.0)]
    pub r_max: f64,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[arg(long, global = true, value_enum, default_value_t = Kind::Pseudo)]
    pub kind: Kind,
    #[arg(long = "t-max", global = true, default_value_t = 200.0)]
    pub t_max: f64,
    #[arg(long = "t-step", global = true, default_value_t = 0.5)]
    pub t_step: f64,
    #[arg(long = "inject-fault", global = true, hide = true)]
    pub inject_fault: bool,
}

/// Validated settings shared by every command.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub n: u32,
    pub ell: u32,
    pub m: i32,
    pub n_max: u32,
    pub digits: u32,
    pub samples: usize,
    pub n_r: usize,
    pub r_max: f64,
    pub output_path: Option<PathBuf>,
    pub mode: Mode,
    pub kind: Kind,
    pub t_max: f64,
    pub t_step: f64,
    pub fault: Option<Fault>,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, Error> {
        let bad = |msg: String| Err(Error::InvalidArgument(msg));
        let uses_n = matches!(cli.command, Command::Coeffs | Command::Pn | Command::Surface | Command::Autocorr);
        if uses_n && (cli.n == 0 || cli.ell >= cli.n) {
            return Err(Error::InvalidQuantumNumbers { n: cli.n as i64, ell: cli.ell as i64, m: cli.m as i64, reason: "need 0 <= l < n" });
        }
        if cli.command == Command::Divergence {
            if cli.m < 0 || cli.m.unsigned_abs() > cli.ell {
                return bad(format!("--m must be in [0, l], got {}", cli.m));
            }
        } else if cli.m != 0 {
            return bad(format!("only axial (m = 0) states are available for this command, got m = {}", cli.m));
        }
        if !(MIN_DIGITS..=MAX_DIGITS).contains(&cli.digits) {
            return bad(format!("--digits must be in [{MIN_DIGITS}, {MAX_DIGITS}], got {}", cli.digits));
        }
        if cli.n_max > MAX_N_MAX {
            return Err(Error::ResourceCap { n_max: cli.n_max, cap: MAX_N_MAX });
        }
        if cli.samples < 16 {
            return bad(format!("--samples must be at least 16, got {}", cli.samples));
        }
        if cli.n_r < 2 {
            return bad(format!("--nr must be at least 2, got {}", cli.n_r));
        }
        if !(cli.r_max > 0.0 && cli.r_max.is_finite()) {
            return bad(format!("--rmax must be positive, got {}", cli.r_max));
        }
        if !(cli.t_step > 0.0 && cli.t_max >= 0.0 && cli.t_max.is_finite()) {
            return bad("--t-step must be positive and --t-max nonnegative".into());
        }
        Ok(Self {
            command: cli.command,
            n: cli.n,
            ell: cli.ell,
            m: cli.m,
            n_max: cli.n_max,
            digits: cli.digits,
            samples: cli.samples,
            n_r: cli.n_r,
            r_max: cli.r_max,
            output_path: cli.out,
            mode: cli.mode,
            kind: cli.kind,
            t_max: cli.t_max,
            t_step: cli.t_step,
            fault: cli.inject_fault.then_some(Fault::FlipCoefficientSign),
        })
    }
}

impl fmt::Display for RunConfig {
    /// Echo used in the `#` provenance line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cmd = format!("{:?}", self.command).to_lowercase();
        let mode = format!("{:?}", self.mode).to_lowercase();
        let kind = format!("{:?}", self.kind).to_lowercase();
        write!(
            f,
            "hydroxi {} {cmd} n={} l={} m={} nmax={} digits={} samples={} nr={} rmax={} mode={mode} kind={kind} t_max={} t_step={}",
            env!("CARGO_PKG_VERSION"),
            self.n,
            self.ell,
            self.m,
            self.n_max,
            self.digits,
            self.samples,
            self.n_r,
            self.r_max,
            self.t_max,
            self.t_step
        )
    }
}

/// Output of one command: text to write and the exit code to report.
#[derive(Clone, Debug, PartialEq)]
pub struct CommandOutput {
    pub text: String,
    pub exit_code: i32,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        Self { text, exit_code: EXIT_OK }
    }
}

pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::Quadrature { .. } | Error::Numerical(_) | Error::DivisionByZero => EXIT_NUMERICAL,
        _ => EXIT_ARGS,
    }
}

pub fn execute(config: &RunConfig) -> Result<CommandOutput, Error> {
    match config.command {
        Command::Coeffs => cmd_coeffs(config).map(CommandOutput::ok),
        Command::Pn => cmd_pn(config).map(CommandOutput::ok),
        Command::Angular => cmd_angular(config).map(CommandOutput::ok),
        Command::Surface => cmd_surface(config).map(CommandOutput::ok),
        Command::Autocorr => cmd_autocorr(config).map(CommandOutput::ok),
        Command::Divergence => cmd_divergence(config).map(CommandOutput::ok),
        Command::Verify => {
            let report = cmd_verify(config);
            let exit_code = if report.passed() { EXIT_OK } else { EXIT_VERIFY };
            Ok(CommandOutput { text: report.to_string(), exit_code })
        }
    }
}

/// Parses `args`, runs the command and writes its output to `--out` or
/// `stdout`. Diagnostics go to `stderr`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_ARGS } else { EXIT_OK };
        }
    };
    let config = match RunConfig::from_cli(cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_ARGS;
        }
    };
    let output = match execute(&config) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let written = match &config.output_path {
        Some(path) => std::fs::write(path, &output.text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout.write_all(output.text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return EXIT_ARGS;
    }
    output.exit_code
}

/// Sizes the global rayon pool from `HYDROXI_THREADS` when set.
pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("HYDROXI_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().map_err(|_| format!("HYDROXI_THREADS must be a positive integer, got {raw:?}"))?;
    if threads == 0 {
        return Err("HYDROXI_THREADS must be positive".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("hydroxi").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn argument_errors_exit_one() {
        assert_eq!(run_capture(&["pn", "--n", "1", "--l", "1"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["pn", "--digits", "10"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["pn", "--nmax", "61"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["angular", "--samples", "8"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["bogus"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["pn", "--mode", "fast"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["divergence", "--l", "3", "--m", "1"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["coeffs", "--l", "1", "--n", "2", "--m", "1"]).0, EXIT_ARGS);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn provenance_line_echoes_config() {
        let (code, out, _) = run_capture(&["coeffs", "--nmax", "2"]);
        assert_eq!(code, 0);
        let first = out.lines().next().unwrap();
        assert!(first.starts_with("# hydroxi ") && first.contains("coeffs n=1 l=0") && first.contains("nmax=2"));
    }

    #[test]
    fn writes_to_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pn.csv");
        let (code, out, _) = run_capture(&["pn", "--nmax", "3", "--out", path.to_str().unwrap()]);
        assert_eq!(code, 0);
        assert!(out.is_empty());
        assert!(std::fs::read_to_string(path).unwrap().contains("N,P_squared_exact,P_float"));
    }
}
