use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use lexenum::bench;
use lexenum::counters::{self, Counting};
use lexenum::family::RandomNfa;
use lexenum::{compile_regex, parse_automaton, CrossSection, Nfa, RadixOrder, Word};

/// Enumerate the words of a regular language in lexicographic or radix order.
#[derive(Parser)]
#[command(name = "lexenum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print every accepted word of one length, in lexicographic order.
    Enum {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        limit: Option<usize>,
        /// Report operation counts on standard error.
        #[arg(long)]
        count_ops: bool,
    },
    /// Print accepted words by increasing length, then lexicographically.
    Radix {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_length: Option<usize>,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        count_ops: bool,
    },
    /// Measure preprocessing and per-output cost; writes CSV.
    Bench {
        #[command(flatten)]
        input: Input,
        /// Use a random automaton generated from this seed.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 20)]
        states: usize,
        #[arg(long, default_value_t = 4)]
        symbols: usize,
        #[arg(long, default_value_t = 100)]
        transitions: usize,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Args)]
struct Input {
    /// Automaton file in the line format.
    #[arg(long, conflicts_with = "regex")]
    automaton: Option<PathBuf>,
    /// Regular expression over literal characters with | * + ? ( ).
    #[arg(long)]
    regex: Option<String>,
}

struct InputError(String);

impl Input {
    fn load(&self) -> Result<Option<Nfa>, InputError> {
        match (&self.automaton, &self.regex) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
                parse_automaton(&text)
                    .map(Some)
                    .map_err(|e| InputError(format!("{}: {e}", path.display())))
            }
            (None, Some(pattern)) => compile_regex(pattern).map(Some).map_err(|e| InputError(e.to_string())),
            (None, None) => Ok(None),
            (Some(_), Some(_)) => Err(InputError("--automaton and --regex are mutually exclusive".into())),
        }
    }

    fn require(&self) -> Result<Nfa, InputError> {
        self.load()?
            .ok_or_else(|| InputError("one of --automaton or --regex is required".into()))
    }
}

enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Failure {
        Failure::Input(e.0)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e)
    }
}

fn emit<W: Write>(out: &mut W, nfa: &Nfa, word: &Word) -> io::Result<()> {
    let mut line = nfa.alphabet().spell(word);
    line.push('\n');
    out.write_all(line.as_bytes())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Enum { input, length, limit, count_ops } => {
            let nfa = input.require()?;
            let _guard = count_ops.then(Counting::start);
            let mut cursor = CrossSection::new(&nfa, length);
            let preproc_ops = counters::take();
            let mut max_delay = 0;
            let mut produced = 0usize;
            while limit.is_none_or(|l| produced < l) {
                let next = cursor.next();
                max_delay = max_delay.max(counters::take());
                let Some(w) = next else { break };
                emit(&mut out, &nfa, &w)?;
                produced += 1;
            }
            out.flush()?;
            if count_ops {
                eprintln!("preproc_ops={preproc_ops} max_delay_ops={max_delay} outputs={produced}");
            }
        }
        Command::Radix { input, max_length, limit, count_ops } => {
            let nfa = input.require()?;
            if max_length.is_none() && limit.is_none() {
                return Err(Failure::Input("radix needs --max-length and/or --limit".into()));
            }
            let _guard = count_ops.then(Counting::start);
            let mut produced = 0usize;
            for w in RadixOrder::new(&nfa, max_length, limit) {
                emit(&mut out, &nfa, &w)?;
                produced += 1;
            }
            out.flush()?;
            if count_ops {
                eprintln!("total_ops={} outputs={produced}", counters::read());
            }
        }
        Command::Bench { input, seed, states, symbols, transitions, length, limit } => {
            let nfa = match (input.load()?, seed) {
                (Some(nfa), None) => nfa,
                (None, Some(seed)) => RandomNfa { states, symbols, transitions, ..RandomNfa::default() }.generate(seed),
                (None, None) => return Err(Failure::Input("bench needs --automaton, --regex or --seed".into())),
                (Some(_), Some(_)) => {
                    return Err(Failure::Input("--seed cannot be combined with --automaton or --regex".into()))
                }
            };
            let report = bench::measure(&nfa, length, limit);
            report.write_csv(&mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
