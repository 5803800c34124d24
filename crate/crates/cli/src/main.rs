use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use spliffer_core::decision::{equivalent_deterministic, equivalent_functional, is_functional};
use spliffer_core::rational::{product, star, trim, union};
use spliffer_core::{format, Error, Spliffer, UTriple, Word};

/// Decision procedures and rational operations for spliffers.
///
/// Exit status: 0 on an affirmative verdict or success, 1 on a negative
/// verdict, 2 on a usage, parse or precondition error.
#[derive(Parser)]
#[command(name = "spliff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the machine invariants.
    Validate { file: PathBuf },
    /// Check that the machine is a deterministic splitter.
    CheckDet { file: PathBuf },
    /// Decide functionality of the splitter; prints a witness if it is not.
    CheckFun { file: PathBuf },
    /// Search for an injectivity counterexample up to the length bound.
    CheckInj {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Decide equivalence of two functional (or, with --det, deterministic) splitters.
    Equiv {
        first: PathBuf,
        second: PathBuf,
        /// Require deterministic inputs and skip the functionality pre-checks.
        #[arg(long)]
        det: bool,
    },
    /// Check membership of the triple (L, R, S) in the behavior; `-` is the empty word.
    Accepts { file: PathBuf, left: String, right: String, shuffled: String },
    /// All output pairs for an input word, one `l | r` per line.
    Split { file: PathBuf, input: String },
    /// The behavior up to the length bound, one `l | r | s` per line.
    Enumerate {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    /// Machine for the union of two behaviors.
    Union {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Machine for the product of two behaviors.
    Product {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Machine for the star of a behavior.
    Star {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Keep only accessible and co-accessible states.
    Trim {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The underlying input automaton.
    ProjectInput {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

/// A report for stdout and whether the verdict was affirmative.
struct Report {
    text: String,
    affirmative: bool,
}

impl Report {
    fn yes(text: impl Into<String>) -> Self {
        Report { text: text.into(), affirmative: true }
    }

    fn verdict(text: impl Into<String>, affirmative: bool) -> Self {
        Report { text: text.into(), affirmative }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.text);
            if report.affirmative {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Report, String> {
    Ok(match command {
        Command::Validate { file } => {
            let m = format::parse_unvalidated(&read(&file)?).map_err(|e| located(&file, e))?;
            let violations = m.validate();
            if violations.is_empty() {
                Report::yes("VALID\n")
            } else {
                let mut text = String::from("INVALID\n");
                for v in violations {
                    let _ = writeln!(text, "violation: {v}");
                }
                Report::verdict(text, false)
            }
        }
        Command::CheckDet { file } => match load(&file)?.is_deterministic() {
            Ok(()) => Report::yes("DETERMINISTIC\n"),
            Err(v) => Report::verdict(format!("NOT DETERMINISTIC\nreason: {v}\n"), false),
        },
        Command::CheckFun { file } => {
            let verdict = is_functional(&load(&file)?);
            Report::verdict(verdict.to_string(), verdict.is_functional())
        }
        Command::CheckInj { file, max_len } => match load(&file)?.injectivity_counterexample(max_len) {
            None => Report::yes(format!("NO INJECTIVITY COUNTEREXAMPLE UP TO LENGTH {max_len}\n")),
            Some((t1, t2)) => Report::verdict(
                format!("NOT INJECTIVE\noutput: {} | {}\ninput: {}\ninput: {}\n", t1.left(), t1.right(), t1.shuffled(), t2.shuffled()),
                false,
            ),
        },
        Command::Equiv { first, second, det } => {
            let (m1, m2) = (load(&first)?, load(&second)?);
            let verdict = if det {
                equivalent_deterministic(&m1, &m2).map_err(|e| e.to_string())?
            } else {
                equivalent_functional(&m1, &m2)
            };
            Report::verdict(verdict.to_string(), verdict.is_equivalent())
        }
        Command::Accepts { file, left, right, shuffled } => {
            let m = load(&file)?;
            let t = UTriple::new(word(&left)?, word(&right)?, word(&shuffled)?).map_err(|e| e.to_string())?;
            if m.accepts(&t) {
                Report::yes("ACCEPTED\n")
            } else {
                Report::verdict("REJECTED\n", false)
            }
        }
        Command::Split { file, input } => {
            let m = load(&file)?;
            let mut text = String::new();
            for (l, r) in m.split(&word(&input)?) {
                let _ = writeln!(text, "{l} | {r}");
            }
            Report::yes(text)
        }
        Command::Enumerate { file, max_len } => {
            let mut text = String::new();
            for t in load(&file)?.enumerate_behavior(max_len) {
                let _ = writeln!(text, "{t}");
            }
            Report::yes(text)
        }
        Command::Union { first, second, output } => emit(&union(&load(&first)?, &load(&second)?), output)?,
        Command::Product { first, second, output } => emit(&product(&load(&first)?, &load(&second)?), output)?,
        Command::Star { file, output } => emit(&star(&load(&file)?), output)?,
        Command::Trim { file, output } => emit(&trim(&load(&file)?), output)?,
        Command::ProjectInput { file, output } => {
            write_out(format::serialize_nfa(&load(&file)?.input_projection()), output)?
        }
    })
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn located(path: &Path, e: Error) -> String {
    format!("{}: {e}", path.display())
}

fn load(path: &Path) -> Result<Spliffer, String> {
    format::parse(&read(path)?).map_err(|e| located(path, e))
}

fn word(text: &str) -> Result<Word, String> {
    Word::parse(text).map_err(|e| e.to_string())
}

fn emit(m: &Spliffer, output: Option<PathBuf>) -> Result<Report, String> {
    write_out(format::serialize(m), output)
}

fn write_out(text: String, output: Option<PathBuf>) -> Result<Report, String> {
    match output {
        None => Ok(Report::yes(text)),
        Some(path) => {
            std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok(Report::yes(""))
        }
    }
}
