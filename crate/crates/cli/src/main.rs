use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use doodle_cli::commands::{self, Form};
use doodle_cli::output::Format;
use doodle_cli::{size_limit, CliError, Result, MAX_N_VAR};
use doodle_core::report::Sections;
use doodle_core::svg::{render_svg, SvgOptions};
use doodle_core::Symmetry;

#[derive(Parser, Debug)]
#[command(
    name = "doodle",
    version,
    about = "Canonical Gauss codes and the census of minimal virtual doodles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a normal form of a Gauss code (default: left canonical).
    #[command(group(ArgGroup::new("form").args(["lp", "lc", "unori"])))]
    Normalize {
        /// `1L 2R 2L 1R` or `(1, 4, 3, 2)`.
        code: String,
        #[arg(long)]
        lp: bool,
        #[arg(long)]
        lc: bool,
        #[arg(long)]
        unori: bool,
    },
    /// Report minimality, canonical forms, orbits and the class name.
    Classify {
        code: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate and classify every code on n letters.
    #[command(group(ArgGroup::new("view").args(["lp", "minimal", "oriented", "unoriented"])))]
    Enumerate {
        n: usize,
        /// All left preferred codes.
        #[arg(long)]
        lp: bool,
        /// Minimal codes with their class names.
        #[arg(long)]
        minimal: bool,
        /// Oriented classes.
        #[arg(long)]
        oriented: bool,
        /// Unoriented classes.
        #[arg(long)]
        unoriented: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Lift the size guard.
        #[arg(long)]
        force: bool,
    },
    /// Print the arrow diagram of a code.
    Arrow {
        code: String,
        /// Write the diagram as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Replace the diagram by its orbit minimum.
        #[arg(long, value_enum)]
        canonical: Option<Canonical>,
    },
    /// Cross-check the enumeration against the arrow-diagram classification.
    Verify {
        n: usize,
        #[arg(long)]
        force: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Canonical {
    Rot,
    Dihedral,
}

fn stdout_write(s: &str) -> Result<()> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::io("<stdout>", e))
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<()> {
    std::fs::write(path, bytes).map_err(|e| CliError::io(path, e))
}

fn run(cli: Cli) -> Result<()> {
    let env_max = std::env::var(MAX_N_VAR).ok();
    match cli.command {
        Command::Normalize {
            code, lp, unori, ..
        } => {
            let form = if lp {
                Form::Lp
            } else if unori {
                Form::Unori
            } else {
                Form::Lc
            };
            stdout_write(&commands::normalize(&code, form)?)
        }
        Command::Classify { code, json } => stdout_write(&commands::classify_code(&code, json)?),
        Command::Enumerate {
            n,
            lp,
            minimal,
            oriented,
            unoriented,
            format,
            out,
            force,
        } => {
            let sections = match (lp, minimal, oriented, unoriented) {
                (true, ..) => Sections::Lp,
                (_, true, ..) => Sections::Minimal,
                (_, _, true, _) => Sections::Oriented,
                (.., true) => Sections::Unoriented,
                _ => Sections::All,
            };
            let limit = size_limit(force, env_max.as_deref())?;
            limit.check(n)?;
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| CliError::io(&path, e))?;
                    let mut w = BufWriter::new(file);
                    commands::enumerate(&mut w, n, sections, format, limit)
                        .and_then(|_| w.flush().map_err(|e| CliError::io(&path, e)))
                        .map_err(|e| match e {
                            CliError::Io { source, .. } => CliError::io(&path, source),
                            e => e,
                        })
                }
                None => {
                    let mut w = BufWriter::new(io::stdout().lock());
                    commands::enumerate(&mut w, n, sections, format, limit)?;
                    w.flush().map_err(|e| CliError::io("<stdout>", e))
                }
            }
        }
        Command::Arrow {
            code,
            svg,
            canonical,
        } => {
            let sym = canonical.map(|c| match c {
                Canonical::Rot => Symmetry::RotationOnly,
                Canonical::Dihedral => Symmetry::RotationAndReflection,
            });
            let (text, diagram) = commands::arrow(&code, sym)?;
            if let Some(path) = svg {
                write_file(
                    &path,
                    render_svg(&diagram, &SvgOptions::default()).as_bytes(),
                )?;
            }
            stdout_write(&text)
        }
        Command::Verify { n, force } => {
            let limit = size_limit(force, env_max.as_deref())?;
            let outcome = commands::verify(n, limit)?;
            stdout_write(&outcome.report)?;
            if outcome.ok {
                Ok(())
            } else {
                Err(CliError::Mismatch(format!(
                    "verify {n} found a disagreement"
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("doodle: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
