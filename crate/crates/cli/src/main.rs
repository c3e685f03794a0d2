mod commands;
mod output;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use bchkit::analysis::Family;
use bchkit::bch::DEFAULT_ENUM_CAP;
use clap::{Args, Parser, Subcommand};

use commands::{Caps, Method, Selection};
use output::{bad, Failure, Format, Output, EXIT_BAD_PARAMS};
use verify::Suite;

/// Narrow-sense BCH codes of length (q^m-1)/(q-1).
#[derive(Parser)]
#[command(name = "bchkit", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Largest q^k * n handled by exhaustive enumeration.
    #[arg(long, default_value_t = DEFAULT_ENUM_CAP, global = true)]
    enum_cap: u64,
    /// Largest weight tried by the low-weight search (1..=6; default: the
    /// largest cheap one).
    #[arg(long, global = true)]
    weight_budget: Option<u32>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension, Bose distance, minimum distance and generator of C(n, q, m, delta).
    CodeParams {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        delta: u64,
        /// Use the even-like subcode.
        #[arg(long)]
        even_like: bool,
    },
    /// Weight distribution of one of the ternary families.
    WeightDist {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 3)]
        q: u64,
        #[arg(long, value_enum, default_value = "closed_form")]
        method: Method,
    },
    /// Cyclotomic coset leaders modulo n.
    CosetLeaders {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[command(flatten)]
        select: LeaderSelect,
    },
    /// Nondecreasing-sequence decomposition of a q-ary word.
    Nds {
        #[arg(long)]
        q: u32,
        /// Word length, required with --value.
        #[arg(long)]
        m: Option<u32>,
        #[command(flatten)]
        input: NdsInput,
    },
    /// Run a reproduction suite; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LeaderSelect {
    /// The K largest leaders, descending.
    #[arg(long, value_name = "K")]
    largest: Option<usize>,
    /// Every leader, ascending.
    #[arg(long)]
    all: bool,
    /// Describe one residue: its word, decomposition, leader and M(S).
    #[arg(long, value_name = "S")]
    value: Option<u64>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct NdsInput {
    /// Integer whose m-digit expansion is decomposed.
    #[arg(long)]
    value: Option<u64>,
    /// Digits, most significant first: `0,1,1,0,0,2` or `011002`.
    #[arg(long)]
    word: Option<String>,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: bchkit::Error| e.to_string())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(bad("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| bad(e.to_string()))?;
    }
    let caps = Caps {
        enum_cap: cli.enum_cap,
        weight_budget: cli.weight_budget,
    };
    match &cli.command {
        &Command::CodeParams { q, m, delta, even_like } => commands::code_params(q, m, delta, even_like, caps),
        &Command::WeightDist { family, m, q, method } => commands::weight_dist(q, family, m, method, caps),
        Command::CosetLeaders { q, m, select } => {
            let sel = match (select.largest, select.all, select.value) {
                (Some(k), _, _) => Selection::Largest(k),
                (_, true, _) => Selection::All,
                (_, _, Some(s)) => Selection::Value(s),
                _ => return Err(bad("choose one of --largest, --all, --value")),
            };
            commands::coset_leaders(*q, *m, sel)
        }
        Command::Nds { q, m, input } => {
            let word = match (&input.word, input.value) {
                (Some(w), _) => {
                    let word = commands::parse_word(*q, w)?;
                    if m.is_some_and(|m| m as usize != word.len()) {
                        return Err(bad("--m does not match the word length"));
                    }
                    word
                }
                (None, Some(s)) => {
                    let m = m.ok_or_else(|| bad("--value needs --m"))?;
                    bchkit::nds::expand(s, *q, m)?
                }
                (None, None) => return Err(bad("give --value or --word")),
            };
            commands::nds_report(word)
        }
        &Command::Verify { suite } => Ok(verify::render(&verify::run(suite))),
    }
}

fn emit(cli: &Cli, body: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            for note in &out.notes {
                eprintln!("bchkit: {note}");
            }
            if let Err(e) = emit(&cli, &out.render(cli.format)) {
                eprintln!("bchkit: cannot write output: {e}");
                return ExitCode::from(EXIT_BAD_PARAMS);
            }
            ExitCode::from(out.exit)
        }
        Err(f) => {
            eprintln!("bchkit: {}", f.message);
            ExitCode::from(f.exit)
        }
    }
}
