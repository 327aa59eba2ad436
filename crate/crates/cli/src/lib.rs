//! Batch front end for `igalois-core`: reads JSON documents, runs checks
//! and analyses, writes reports and new documents.

pub mod commands;
pub mod document;
pub mod error;
pub mod generate;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use igalois_core::assoc::SearchConfig;
use igalois_core::exactla::{Field, PrimeField, Rationals, ScalarField};

use commands::{Direction, Finished};
use document::{AnyLoaded, Loaded};
use error::{diagnostic_tag, CliError};

#[derive(Parser, Debug)]
#[command(name = "igalois", version, about = "Exact computations with Hopf comodule algebras")]
pub struct Cli {
    /// Seed for the randomized module searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Random trials before a splitting search gives up.
    #[arg(long, global = true, default_value_t = 200)]
    pub split_search_budget: usize,
    /// Where to write a generated document.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of every object in a document.
    Check { path: PathBuf },
    /// Full analysis of an I-Galois comodule algebra.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
    /// Pass between homogeneous comodule algebras and connected I-Galois objects.
    Correspond {
        path: PathBuf,
        #[arg(long, value_enum)]
        direction: DirectionArg,
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        object: Option<String>,
    },
    /// Write a bundled example document.
    Example {
        name: String,
        params: Vec<String>,
        #[arg(long, default_value = "Q")]
        field: String,
    },
    /// Meataxe or Wedderburn decomposition.
    Decompose {
        path: PathBuf,
        #[arg(long)]
        object: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    ToGalois,
    ToHomogeneous,
}

fn read(path: &Path) -> Result<AnyLoaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    document::load(&text)
}

fn write_document<K: Field>(doc: &Loaded<K>, path: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let text = doc.to_json();
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io { path: p.display().to_string(), source }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    }
}

fn execute<K: Field>(
    cli: &Cli,
    doc: Option<&Loaded<K>>,
    field: &K,
    report: &mut String,
    stdout: &mut dyn Write,
) -> Result<u8, CliError> {
    let cfg = SearchConfig { seed: cli.seed, split_search_budget: cli.split_search_budget };
    let doc = || doc.expect("document loaded for this command");
    let finished: Finished<K> = match &cli.command {
        Command::Check { .. } => commands::check(doc(), report)?,
        Command::Analyze { object, .. } => commands::analyze(doc(), object.as_deref(), report)?,
        Command::Correspond { direction, index, object, .. } => {
            if cli.output.is_none() {
                return Err(CliError::Usage("correspond needs --output".into()));
            }
            let dir = match direction {
                DirectionArg::ToGalois => Direction::ToGalois,
                DirectionArg::ToHomogeneous => Direction::ToHomogeneous,
            };
            commands::correspond(doc(), object.as_deref(), dir, *index, &cfg, report)?
        }
        Command::Decompose { object, .. } => commands::decompose(doc(), object.as_deref(), &cfg, report)?,
        Command::Example { name, params, .. } => {
            Finished { code: 0, document: Some(generate::example(field, name, params)?) }
        }
    };
    if let Some(out) = &finished.document {
        write_document(out, cli.output.as_deref(), stdout)?;
        if let Some(p) = &cli.output {
            report.push_str(&format!("wrote {}\n", p.display()));
        }
    }
    Ok(finished.code)
}

fn dispatch(cli: &Cli, report: &mut String, stdout: &mut dyn Write) -> Result<u8, CliError> {
    let path = match &cli.command {
        Command::Check { path } | Command::Analyze { path, .. } | Command::Correspond { path, .. } | Command::Decompose { path, .. } => {
            Some(path)
        }
        Command::Example { .. } => None,
    };
    match path {
        Some(p) => match read(p)? {
            AnyLoaded::Q(d) => execute(cli, Some(&d), &d.field.clone(), report, stdout),
            AnyLoaded::Fp(d) => execute(cli, Some(&d), &d.field.clone(), report, stdout),
        },
        None => {
            let Command::Example { field, .. } = &cli.command else { unreachable!() };
            let field: ScalarField = field.parse().map_err(|e: igalois_core::Error| CliError::Usage(e.to_string()))?;
            match field {
                ScalarField::Rationals => execute::<Rationals>(cli, None, &Rationals, report, stdout),
                ScalarField::PrimeField(p) => {
                    let k = PrimeField::new(p).map_err(|e| CliError::Usage(e.to_string()))?;
                    execute(cli, None, &k, report, stdout)
                }
            }
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut report = String::new();
    let result = dispatch(&cli, &mut report, stdout);
    // Reports go to stdout unless stdout carries the generated document.
    let doc_on_stdout = cli.output.is_none() && matches!(cli.command, Command::Example { .. });
    let sink: &mut dyn Write = if doc_on_stdout { stderr } else { stdout };
    let _ = sink.write_all(report.as_bytes());
    match result {
        Ok(code) => code,
        Err(e) => {
            let tag = match &e {
                CliError::Math(m) => diagnostic_tag(m),
                CliError::Io { .. } => "Io".into(),
                CliError::Syntax { .. } => "Syntax".into(),
                CliError::Schema(_) => "Schema".into(),
                CliError::Usage(_) => "Usage".into(),
            };
            let _ = writeln!(stderr, "error [{tag}]: {e}");
            e.exit_code()
        }
    }
}
