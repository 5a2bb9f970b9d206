use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ideal_graph::{cmd_classify, cmd_corpus, cmd_graph, cmd_ideals, cmd_verify, load_instance, CliError, Format, Which};

/// Intersection graphs of (graded) left ideals of finite rings.
#[derive(Parser)]
#[command(name = "ideal-graph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the left ideals of an instance.
    Ideals {
        instance: PathBuf,
        #[arg(long)]
        graded_only: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Export one of the intersection graphs.
    Graph {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "graded")]
        which: WhichArg,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
    },
    /// Summarise the ring, its grading and Gr.
    Classify {
        instance: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Evaluate registered checks; exit 1 if any FAILs.
    Verify {
        instance: PathBuf,
        /// Comma separated check ids, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        theorems: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Verify every *.json instance in a directory.
    Corpus {
        dir: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "all")]
        theorems: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Dot,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Dot => Format::Dot,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WhichArg {
    Graded,
    All,
    Identity,
    Quotient,
}

impl From<WhichArg> for Which {
    fn from(w: WhichArg) -> Self {
        match w {
            WhichArg::Graded => Which::Graded,
            WhichArg::All => Which::All,
            WhichArg::Identity => Which::Identity,
            WhichArg::Quotient => Which::Quotient,
        }
    }
}

/// Output text plus whether any check failed.
fn run(cmd: Command) -> Result<(String, bool), CliError> {
    match cmd {
        Command::Ideals { instance, graded_only, format } => {
            Ok((cmd_ideals(&load_instance(&instance)?, graded_only, format.into())?, false))
        }
        Command::Graph { instance, which, format } => {
            Ok((cmd_graph(&load_instance(&instance)?, which.into(), format.into())?, false))
        }
        Command::Classify { instance, format } => Ok((cmd_classify(&load_instance(&instance)?, format.into())?, false)),
        Command::Verify { instance, theorems, format } => {
            let out = cmd_verify(&load_instance(&instance)?, &theorems, format.into())?;
            let fail = out.any_fail();
            Ok((out.text, fail))
        }
        Command::Corpus { dir, theorems, format } => {
            let report = cmd_corpus(&dir, &theorems)?;
            Ok((report.render(format.into())?, report.any_fail() || !report.errors.is_empty()))
        }
    }
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io { path: p.display().to_string(), message: e.to_string() }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command).and_then(|(text, fail)| write_out(cli.out.as_deref(), &text).map(|()| fail));
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
