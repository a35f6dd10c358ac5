use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use contscope::evaluator::Strategy;
use contscope::Monad;
use contscope_cli::input::{resolve, ModelFile, SentenceFile};
use contscope_cli::report::{self, Format};
use contscope_cli::suites::{self, Suite, SuiteConfig, SuiteOutput};
use contscope_cli::{witnesses, CliError, EXIT_FAILED, EXIT_INPUT, EXIT_OK};

#[derive(Parser)]
#[command(name = "contscope", version, about = "Quantifier scope readings via the continuation monad")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    A,
    B,
    C,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every reading of a sentence over a model.
    Readings {
        model: PathBuf,
        sentence: PathBuf,
        #[arg(long, value_enum, default_value = "all", ignore_case = true)]
        strategy: StrategyArg,
        /// Print the formal and computation tree of each reading.
        #[arg(long)]
        show_trees: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run law-check and equivalence suites.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// identity, maybe, exception[:n], list[:max_len], powerset or continuation; repeatable.
        #[arg(long = "monad")]
        monads: Vec<Monad>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only this arity in the equivalence suite.
        #[arg(long)]
        arity: Option<usize>,
    },
    /// Search for, store, or reverify the counterexample files.
    Witnesses {
        #[arg(long, conflicts_with = "verify")]
        write: Option<PathBuf>,
        #[arg(long)]
        verify: Option<PathBuf>,
    },
}

fn readings(model: PathBuf, sentence: PathBuf, strategy: StrategyArg, show_trees: bool, format: Format) -> Result<String, CliError> {
    let m = ModelFile::load(&model)?;
    let s = SentenceFile::load(&sentence)?;
    let scene = resolve(&m, &s)?;
    let strategies = match strategy {
        StrategyArg::A => vec![Strategy::A],
        StrategyArg::B => vec![Strategy::B],
        StrategyArg::C => vec![Strategy::C],
        StrategyArg::All => Strategy::ALL.to_vec(),
    };
    let rows = report::readings(&scene, &strategies)?;
    let mut out = match format {
        Format::Text => report::table(&scene, &rows),
        Format::Records => report::records(&rows),
    };
    if show_trees {
        out.push_str(&report::trees(&scene, &rows)?);
    }
    Ok(out)
}

fn suite_exit(out: Result<SuiteOutput, CliError>) -> ExitCode {
    match out {
        Ok(o) => {
            print!("{}", o.text);
            ExitCode::from(if o.passed() { EXIT_OK } else { EXIT_FAILED } as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Readings { model, sentence, strategy, show_trees, format } => {
            match readings(model, sentence, strategy, show_trees, format) {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::from(EXIT_OK as u8)
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_INPUT as u8)
                }
            }
        }
        Command::Check { suite, monads, max_size, seed, arity } => {
            let cfg = SuiteConfig {
                monads: if monads.is_empty() { Monad::all() } else { monads },
                max_size,
                seed,
                arity,
            };
            suite_exit(suites::run(suite, &cfg))
        }
        Command::Witnesses { write, verify } => match (write, verify) {
            (Some(dir), _) => suite_exit(witnesses::write(&dir)),
            (None, Some(dir)) => suite_exit(witnesses::verify(&dir)),
            (None, None) => {
                let mut text = String::new();
                for e in &witnesses::ENTRIES {
                    match e.search() {
                        Ok(t) => text.push_str(&format!("# {}\n{t}\n", e.file)),
                        Err(err) => return suite_exit(Err(err)),
                    }
                }
                suite_exit(Ok(SuiteOutput { text, failures: 0 }))
            }
        },
    }
}
