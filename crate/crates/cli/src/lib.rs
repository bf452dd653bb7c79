//! Command-line front end for the `adorn` workbench.

mod commands;
mod input;
pub mod verify;

use std::path::PathBuf;

use adorn::alexander::AlexanderError;
use adorn::catalog::CatalogError;
use adorn::engine::{Budgets, EngineError, ProbeParams};
use adorn::finite::FiniteError;
use adorn::fpcore::FpError;
use adorn::intlin::IntLinError;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use commands::Report;
use input::{resolve, Source};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Presentation(#[from] FpError),
    #[error(transparent)]
    Matrix(#[from] IntLinError),
    #[error(transparent)]
    Finite(#[from] FiniteError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "adorn",
    version,
    about = "Derived series and degree of adorability of groups"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Number of derived quotients to explore before giving up.
    #[arg(long, default_value_t = 8, global = true)]
    pub max_depth: usize,
    /// Coset budget per derived step.
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub max_cosets: u64,
    /// Enumeration budget for finite groups.
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub max_order: u64,
    /// Seed for randomized commands.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

/// A group given inline, from a file, or by catalog name.
#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Presentation "< a, b | ... >" or generators "(0 1), (0 1 2)" / "mod 5: [[1,1],[0,1]]; ...".
    pub input: Option<String>,
    #[arg(long)]
    pub catalog: Option<String>,
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Degree of adorability.
    Doa(GroupArgs),
    /// Abelian invariants of G/[G, G].
    Abelianize(GroupArgs),
    /// Smith normal form of an integer matrix such as '[[2,4],[6,8]]'.
    Snf {
        matrix: Option<String>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Alexander polynomial and adorability verdict of a knot group.
    Alexander(GroupArgs),
    /// Derived series, with the successive abelian quotients.
    Series(GroupArgs),
    /// Derived-series exploration of random presentations.
    Explore {
        /// Number of samples.
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
        gens: u64,
        #[arg(long, default_value_t = 2)]
        rels: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
        max_len: u64,
    },
    /// Replay the published facts on catalog data.
    Verify,
    /// Named groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogAction {
    List,
    Show { name: String },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Cli {
    pub fn budgets(&self) -> Budgets {
        Budgets {
            max_depth: self.max_depth,
            max_cosets: usize::try_from(self.max_cosets).unwrap_or(usize::MAX),
            max_order: usize::try_from(self.max_order).unwrap_or(usize::MAX),
            ..Budgets::default()
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Doa(_) => "doa",
        Command::Abelianize(_) => "abelianize",
        Command::Snf { .. } => "snf",
        Command::Alexander(_) => "alexander",
        Command::Series(_) => "series",
        Command::Explore { .. } => "explore",
        Command::Verify => "verify",
        Command::Catalog {
            action: CatalogAction::List,
        } => "catalog list",
        Command::Catalog {
            action: CatalogAction::Show { .. },
        } => "catalog show",
    }
}

fn dispatch(cli: &Cli) -> Result<(Value, Report), CliError> {
    let budgets = cli.budgets();
    let group = |a: &GroupArgs| -> Result<(Value, input::GroupInput), CliError> {
        let src = Source::from_flags(a.input.clone(), a.catalog.clone(), a.file.clone())?;
        Ok((src.to_json(), resolve(&src, budgets.max_order)?))
    };
    Ok(match &cli.command {
        Command::Doa(a) => {
            let (src, g) = group(a)?;
            (src, commands::doa(&g, &budgets)?)
        }
        Command::Abelianize(a) => {
            let (src, g) = group(a)?;
            (src, commands::abelianize(&g)?)
        }
        Command::Alexander(a) => {
            let (src, g) = group(a)?;
            (src, commands::alexander(&g)?)
        }
        Command::Series(a) => {
            let (src, g) = group(a)?;
            (src, commands::series(&g, &budgets)?)
        }
        Command::Snf { matrix, file } => {
            let src = Source::from_flags(matrix.clone(), None, file.clone())?;
            let text = src.text()?.expect("inline or file");
            (src.to_json(), commands::snf(&text)?)
        }
        Command::Explore {
            count,
            gens,
            rels,
            max_len,
        } => {
            let params = ProbeParams {
                samples: *count,
                n_gens: *gens as usize,
                n_rels: *rels,
                max_len: *max_len as usize,
                seed: cli.seed,
                budgets,
            };
            let src = json!({ "count": count, "gens": gens, "rels": rels, "max_len": max_len, "seed": cli.seed });
            (src, commands::explore(&params))
        }
        Command::Verify => {
            let checks = verify::run_checks(&budgets);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut text = String::new();
            for c in &checks {
                text.push_str(&format!(
                    "{} {:<24} {}\n    {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.anchor,
                    c.detail
                ));
            }
            text.push_str(&format!("{} checks, {} failed\n", checks.len(), failed));
            let result = json!({
                "checks": checks.iter().map(verify::FactCheck::to_json).collect::<Vec<_>>(),
                "passed": checks.len() - failed,
                "failed": failed,
            });
            (
                Value::Null,
                Report {
                    result,
                    text,
                    exit: i32::from(failed > 0),
                },
            )
        }
        Command::Catalog {
            action: CatalogAction::List,
        } => (Value::Null, commands::catalog_list()?),
        Command::Catalog {
            action: CatalogAction::Show { name },
        } => (
            json!({ "source": "catalog", "name": name }),
            commands::catalog_show(name)?,
        ),
    })
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome {
                        stdout: rendered,
                        stderr: String::new(),
                        code: 0,
                    }
                }
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 1,
                },
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(&cli) {
        Ok((input, report)) => {
            let stdout = match cli.format {
                Format::Text => report.text,
                Format::Json => {
                    let envelope = json!({
                        "command": name,
                        "input": input,
                        "budgets": cli.budgets().to_json(),
                        "result": report.result,
                        "version": env!("CARGO_PKG_VERSION"),
                    });
                    serde_json::to_string_pretty(&envelope).expect("serializable") + "\n"
                }
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: report.exit,
            }
        }
        Err(e) => {
            let stdout = match cli.format {
                Format::Json => {
                    let envelope = json!({ "command": name, "error": e.to_string(), "version": env!("CARGO_PKG_VERSION") });
                    serde_json::to_string_pretty(&envelope).expect("serializable") + "\n"
                }
                Format::Text => String::new(),
            };
            Outcome {
                stdout,
                stderr: format!("error: {e}\n"),
                code: 1,
            }
        }
    }
}
