use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sp6_cli::matrix_io::{format_charpoly, read_matrix};
use sp6_cli::report::{parse_sections, run_verify, VerifyConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use sp6_core::liealg::SpAlgebra;
use sp6_core::orbits::jordan_type;
use sp6_core::{Error, Exec, GaussRat, Matrix};

#[derive(Parser)]
#[command(name = "sp6", version, about = "Exact computations on nilpotent orbits of sp(6)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Command {
    /// Run the claim battery and print a report.
    Verify {
        /// Comma-separated section numbers (1-5); empty selects none.
        #[arg(long, default_value = "1,2,3,4,5")]
        sections: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Run claims one at a time.
        #[arg(long)]
        sequential: bool,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// Jordan type of a nilpotent matrix, and whether it lies in sp.
    JordanType { file: PathBuf },
    /// Characteristic polynomial det(λI - A).
    Charpoly { file: PathBuf },
    /// Whether AᵀJ + JA = 0 for the split form J.
    InSp { file: PathBuf },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Verify { sections, seed, samples, format, out, sequential, inject_failure } => {
            let sections = match parse_sections(&sections) {
                Ok(s) => s,
                Err(msg) => return usage(&msg),
            };
            let exec = if sequential { Exec::Sequential } else { Exec::Parallel };
            let config = VerifyConfig { sections, seed, samples, exec, inject_failure };
            let report = run_verify(&config);
            let text = match format {
                Format::Json => report.to_json(),
                Format::Md => report.to_markdown(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text + "\n") {
                        return usage(&format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => println!("{text}"),
            }
            ExitCode::from(if report.passed() { 0 } else { 1 })
        }
        Command::JordanType { file } => with_matrix(&file, |m| {
            let jt = jordan_type(m)?;
            println!("{jt}");
            println!("in-sp: {}", in_sp(m)?);
            Ok(())
        }),
        Command::Charpoly { file } => with_matrix(&file, |m| {
            println!("{}", format_charpoly(&m.charpoly()?));
            Ok(())
        }),
        Command::InSp { file } => with_matrix(&file, |m| {
            println!("{}", in_sp(m)?);
            Ok(())
        }),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn in_sp(m: &Matrix<GaussRat>) -> sp6_core::Result<bool> {
    if m.rows() != m.cols() {
        return Err(Error::NotSquare { rows: m.rows(), cols: m.cols() });
    }
    if m.rows() % 2 == 1 {
        return Ok(false);
    }
    SpAlgebra::split(m.rows() / 2).in_sp(m)
}

/// Parse errors exit 2; mathematical rejections (e.g. not nilpotent) exit 1.
fn with_matrix(path: &Path, f: impl FnOnce(&Matrix<GaussRat>) -> sp6_core::Result<()>) -> ExitCode {
    let m = match read_matrix(path) {
        Ok(m) => m,
        Err(e) => return usage(&e.to_string()),
    };
    match f(&m) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
