//! `ppforge check|construct|classify|roundtrip <file>`
//!
//! Exit codes: 0 pass, 1 usage or input error, 2 mathematical violation.

mod catalog;
mod commands;
mod document;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ppforge_core::linalg::parse_scalar;
use ppforge_core::{Error, Result, Scalar};

use commands::{Outcome, Style};
use document::{parse_document, Document};

#[derive(Parser)]
#[command(name = "ppforge", version, about = "Exact checks and constructions for pre-Poisson structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Document path, `-` for stdin.
    file: Option<String>,
    /// Use a built-in document instead of a file.
    #[arg(long)]
    catalog: Option<String>,
    /// Weight, as `p/q` or an integer.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, conflicts_with = "text")]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks, or the defaults for the document kind.
    Check {
        #[command(flatten)]
        input: Input,
        #[arg(long = "check", value_name = "NAME")]
        checks: Vec<String>,
    },
    /// Build a new document and print it canonically.
    Construct {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        target: String,
    },
    /// Print the r-matrix flags and the supports of Z(r) and S(r).
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// r to quadratic Rota-Baxter data and back, compared exactly.
    Roundtrip {
        #[command(flatten)]
        input: Input,
    },
    /// List catalog names, or print one entry canonically.
    Catalog {
        name: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
}

impl Input {
    fn lambda(&self) -> Result<Option<Scalar>> {
        self.lambda.as_deref().map(parse_scalar).transpose()
    }

    fn style(&self) -> Style {
        Style {
            json: self.json,
            color: std::env::var("PPFORGE_COLOR").is_ok_and(|v| v == "1"),
        }
    }

    fn document(&self) -> Result<Document> {
        match (&self.catalog, &self.file) {
            (Some(name), None) => catalog::lookup(name, self.lambda()?.as_ref()),
            (None, Some(path)) => {
                let text = if path == "-" {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| Error::Usage(format!("stdin: {e}")))?;
                    s
                } else {
                    std::fs::read_to_string(path).map_err(|e| Error::MalformedInput {
                        line: 0,
                        column: 0,
                        message: format!("{path}: {e}"),
                    })?
                };
                parse_document(&text)
            }
            (Some(_), Some(_)) => Err(Error::Usage("give a file or --catalog, not both".into())),
            (None, None) => Err(Error::MissingField("input file or --catalog".into())),
        }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Check { input, checks } => commands::cmd_check(&input.document()?, &checks, input.style()),
        Command::Construct { input, target } => {
            commands::cmd_construct(&input.document()?, &target, input.lambda()?.as_ref())
        }
        Command::Classify { input } => commands::cmd_classify(&input.document()?, input.style()),
        Command::Roundtrip { input } => {
            commands::cmd_roundtrip(&input.document()?, input.lambda()?.as_ref(), input.style())
        }
        Command::Catalog { name: None, .. } => Ok(Outcome {
            code: 0,
            out: catalog::names().iter().map(|n| format!("{n}\n")).collect(),
        }),
        Command::Catalog { name: Some(name), lambda } => {
            let l = lambda.as_deref().map(parse_scalar).transpose()?;
            Ok(Outcome {
                code: 0,
                out: document::serialize(&catalog::lookup(&name, l.as_ref())?),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            print!("{}", o.out);
            ExitCode::from(o.code as u8)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(commands::exit_code(&e) as u8)
        }
    }
}
