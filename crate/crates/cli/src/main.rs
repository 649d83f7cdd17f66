mod commands;
mod formats;
mod report;

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use picard_core::fincat::Pi1Mode;
use picard_core::gammacat::DayMode;
use picard_core::Limits;
use serde_json::{json, Value};

use commands::{Inputs, LocalCheck, PROPERTIES};
use report::{Failure, Report, Status};

#[derive(Parser, Debug)]
#[command(
    name = "picard",
    version,
    about = "Exhaustive checks on finite permutative categories and Γ-categories"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args, Debug, Clone)]
struct Options {
    /// Highest degree kept for nerves.
    #[arg(long, global = true, default_value_t = 2)]
    truncation: usize,
    /// Longest object of `L(n)` enumerated by the nerve oracle.
    #[arg(long, global = true, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
    length_bound: u64,
    /// Longest reduced word enumerated for fundamental groupoids.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    word_bound: u64,
    /// Cap on union-find and closure steps in Day convolution.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    work_bound: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; 0 lets the runtime decide. Reports do not depend on it.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Include wall-clock time in the report, which makes it nondeterministic.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Pi1ModeArg {
    Localized,
    Words,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DayModeArg {
    Exact,
    Presented,
}

/// A positional input that may also be given as `--input`.
#[derive(Args, Debug, Clone)]
struct Input {
    path: Option<PathBuf>,
    #[arg(long = "input", conflicts_with = "path")]
    flag: Option<PathBuf>,
}

impl Input {
    fn get(&self) -> Result<&Path, Failure> {
        self.path
            .as_deref()
            .or(self.flag.as_deref())
            .ok_or_else(|| Failure::input("", "no input file given"))
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the category laws of a category file.
    Validate {
        #[command(flatten)]
        input: Input,
        /// Print the canonical form of the file instead of a report.
        #[arg(long)]
        canonical: bool,
    },
    /// Decide whether every arrow is invertible.
    Groupoid {
        #[command(flatten)]
        input: Input,
    },
    /// Classify a functor file.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Exit 1 unless this property holds; repeatable.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(PROPERTIES))]
        require: Vec<String>,
    },
    /// Fundamental groupoid of a category file.
    Pi1 {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Pi1ModeArg::Localized)]
        mode: Pi1ModeArg,
    },
    /// Mapping path factorization of a functor file.
    Pathobj {
        #[command(flatten)]
        input: Input,
    },
    /// Permutative category files.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Γ-category files.
    #[command(subcommand)]
    Gamma(GammaCommand),
    /// Segal nerve of a permutative file.
    Nerve {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = LocalCheck::None)]
        check: LocalCheck,
        /// Compare every level against strict functors out of `L(n)`.
        #[arg(long)]
        oracle: bool,
    },
    /// Day convolution of two Γ-category files.
    Day {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = DayModeArg::Exact)]
        mode: DayModeArg,
        /// Also write the convolution as a Γ-category file.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Maps of finite based sets.
    #[command(subcommand)]
    Gammaop(GammaopCommand),
    /// Print a built-in example as an input file.
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Subcommand, Debug)]
enum CorpusCommand {
    /// List the built-in names.
    List,
    /// A permutative category file.
    Perm { name: String },
    /// A Γ-category file at `--truncation`.
    Gamma { name: String },
}

#[derive(Subcommand, Debug)]
enum PermCommand {
    /// Check the permutative axioms.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Shear maps and tensor inverses.
    Picard {
        #[command(flatten)]
        input: Input,
    },
    /// `π₀` and `π₁` of a Picard groupoid.
    Pi {
        #[command(flatten)]
        input: Input,
    },
    /// Check an oplax structure file.
    Oplax {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Subcommand, Debug)]
enum GammaCommand {
    /// Check functoriality of the action.
    Validate {
        #[command(flatten)]
        input: Input,
    },
    /// Groupoid levels, Segal maps and P∞ maps.
    Local {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = LocalCheck::CcPicard)]
        check: LocalCheck,
    },
}

#[derive(Subcommand, Debug)]
enum GammaopCommand {
    /// Inert-active factorization of a map written `n>m:[i1,...,in]`.
    Factorize { map: String },
}

/// What a run produced besides the report.
#[derive(Default)]
struct Extra {
    canonical: Option<String>,
    emitted: Option<String>,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Groupoid { .. } => "groupoid",
        Command::Classify { .. } => "classify",
        Command::Pi1 { .. } => "pi1",
        Command::Pathobj { .. } => "pathobj",
        Command::Perm(PermCommand::Validate { .. }) => "perm validate",
        Command::Perm(PermCommand::Picard { .. }) => "perm picard",
        Command::Perm(PermCommand::Pi { .. }) => "perm pi",
        Command::Perm(PermCommand::Oplax { .. }) => "perm oplax",
        Command::Gamma(GammaCommand::Validate { .. }) => "gamma validate",
        Command::Gamma(GammaCommand::Local { .. }) => "gamma local",
        Command::Nerve { .. } => "nerve",
        Command::Day { .. } => "day",
        Command::Gammaop(GammaopCommand::Factorize { .. }) => "gammaop factorize",
        Command::Corpus(_) => "corpus",
    }
}

fn parameters(c: &Command, o: &Options) -> BTreeMap<String, Value> {
    let mut p = BTreeMap::new();
    match c {
        Command::Pi1 { mode, .. } => {
            p.insert("word_bound".into(), json!(o.word_bound));
            p.insert("mode".into(), json!(format!("{mode:?}").to_lowercase()));
        }
        Command::Classify { require, .. } => {
            p.insert("require".into(), json!(require));
        }
        Command::Nerve { check, oracle, .. } => {
            p.insert("truncation".into(), json!(o.truncation));
            p.insert("check".into(), json!(format!("{check:?}").to_lowercase()));
            if *oracle {
                p.insert("length_bound".into(), json!(o.length_bound));
            }
        }
        Command::Gamma(GammaCommand::Local { check, .. }) => {
            p.insert("check".into(), json!(format!("{check:?}").to_lowercase()));
        }
        Command::Day { mode, .. } => {
            p.insert("work_bound".into(), json!(o.work_bound));
            p.insert("mode".into(), json!(format!("{mode:?}").to_lowercase()));
        }
        _ => {}
    }
    p
}

fn run(cli: &Cli, inputs: &mut Inputs, extra: &mut Extra) -> commands::CmdResult {
    let o = &cli.opts;
    let limits = Limits::default();
    match &cli.command {
        Command::Validate { input, .. } => {
            commands::validate(inputs, input.get()?, &mut extra.canonical)
        }
        Command::Groupoid { input } => commands::groupoid(inputs, input.get()?),
        Command::Classify { input, require } => commands::classify(inputs, input.get()?, require),
        Command::Pi1 { input, mode } => {
            let mode = match mode {
                Pi1ModeArg::Localized => Pi1Mode::Localized,
                Pi1ModeArg::Words => Pi1Mode::Words,
            };
            commands::fundamental_groupoid(
                inputs,
                input.get()?,
                mode,
                o.word_bound as usize,
                &limits,
            )
        }
        Command::Pathobj { input } => commands::path_object(inputs, input.get()?),
        Command::Perm(PermCommand::Validate { input }) => {
            commands::perm_validate(inputs, input.get()?)
        }
        Command::Perm(PermCommand::Picard { input }) => commands::perm_picard(inputs, input.get()?),
        Command::Perm(PermCommand::Pi { input }) => commands::perm_pi(inputs, input.get()?),
        Command::Perm(PermCommand::Oplax { input }) => commands::perm_oplax(inputs, input.get()?),
        Command::Gamma(GammaCommand::Validate { input }) => {
            commands::gamma_validate(inputs, input.get()?)
        }
        Command::Gamma(GammaCommand::Local { input, check }) => {
            commands::gamma_local(inputs, input.get()?, *check, &limits)
        }
        Command::Nerve {
            input,
            check,
            oracle,
        } => commands::nerve(
            inputs,
            input.get()?,
            o.truncation,
            *check,
            *oracle,
            o.length_bound as usize,
            &limits,
        ),
        Command::Day {
            left, right, mode, ..
        } => {
            let mode = match mode {
                DayModeArg::Exact => DayMode::DiscreteExact,
                DayModeArg::Presented => DayMode::Presented,
            };
            commands::day(
                inputs,
                left,
                right,
                mode,
                o.work_bound as usize,
                &mut extra.emitted,
            )
        }
        Command::Gammaop(GammaopCommand::Factorize { map }) => commands::factorize_map(map),
        Command::Corpus(CorpusCommand::List) => Ok(commands::corpus_list()),
        Command::Corpus(CorpusCommand::Perm { name }) => {
            commands::corpus_perm(name, &mut extra.canonical)
        }
        Command::Corpus(CorpusCommand::Gamma { name }) => {
            commands::corpus_gamma(name, o.truncation, &mut extra.canonical)
        }
    }
}

fn write_out(path: Option<&Path>, text: &str) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.opts.threads)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("picard: cannot start worker threads: {e}");
            return ExitCode::from(2);
        }
    };
    let mut inputs = Inputs::default();
    let mut extra = Extra::default();
    let outcome = pool.install(|| run(&cli, &mut inputs, &mut extra));

    let (status, failures, result, error) = match outcome {
        Ok(out) if out.failures.is_empty() => (Status::Pass, out.failures, out.result, None),
        Ok(out) => (Status::Fail, out.failures, out.result, None),
        Err(e) => {
            eprintln!("picard: invalid input at `{}`: {}", e.pointer, e.message);
            (Status::InvalidInput, Vec::new(), Value::Null, Some(e))
        }
    };
    let report = Report {
        tool: "picard",
        version: env!("CARGO_PKG_VERSION"),
        command: command_name(&cli.command).into(),
        inputs: inputs.0,
        parameters: parameters(&cli.command, &cli.opts),
        status,
        failures,
        result,
        error,
        timing_ms: cli.opts.timing.then(|| start.elapsed().as_millis()),
    };

    if let (
        Command::Day {
            emit: Some(path), ..
        },
        Some(text),
    ) = (&cli.command, &extra.emitted)
    {
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("picard: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let text = match (&cli.command, &extra.canonical) {
        (
            Command::Validate {
                canonical: true, ..
            }
            | Command::Corpus(_),
            Some(text),
        ) => text.clone(),
        _ => formats::canonical(&report),
    };
    if let Err(e) = write_out(cli.opts.output.as_deref(), &text) {
        eprintln!("picard: cannot write report: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(status.exit_code())
}
