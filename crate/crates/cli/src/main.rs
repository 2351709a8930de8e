use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use nset_cli::{run, CliError, Command, Document};

/// Exact difference sets of N-sets and the relatively prime integer sets
/// they realize.
#[derive(Debug, Parser)]
#[command(name = "nset", version)]
struct Cli {
    /// Read documents from FILE instead of standard input.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Write documents to FILE instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

fn read_input(input: &Option<PathBuf>) -> io::Result<String> {
    match input {
        Some(path) => fs::read_to_string(path),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Documents are parsed lazily; a malformed document ends the stream.
fn documents(text: &str) -> impl Iterator<Item = Result<Document, CliError>> + '_ {
    let mut stream = serde_json::Deserializer::from_str(text).into_iter::<Document>();
    let mut seen = false;
    std::iter::from_fn(move || match stream.next() {
        Some(Ok(doc)) => {
            seen = true;
            Some(Ok(doc))
        }
        Some(Err(e)) => Some(Err(CliError::Schema(e.to_string()))),
        None if !seen => {
            seen = true;
            Some(Err(CliError::Schema("no input document".into())))
        }
        None => None,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("nset: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(io::stdout().lock()),
    };

    let text = if matches!(cli.command, Command::Selftest { .. }) {
        Ok(Document::report(Default::default()).to_json())
    } else {
        read_input(&cli.input)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            let e = CliError::from(e);
            eprintln!("nset: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };

    let mut status = 0;
    for doc in documents(&text) {
        let (document, code) = match doc.and_then(|d| run(&cli.command, &d)) {
            Ok(outcome) => (outcome.document, outcome.status),
            Err(e) => {
                eprintln!("nset: {e}");
                (e.to_document(), e.exit_code())
            }
        };
        if let Err(e) = writeln!(out, "{}", document.to_json()) {
            eprintln!("nset: write failed: {e}");
            return ExitCode::from(2);
        }
        status = status.max(code);
        if code == 2 {
            break;
        }
    }
    let _ = out.flush();
    ExitCode::from(status as u8)
}
