//! `percept`: solve linguistic optimization problems from the command line.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use percept_core::codebook::{load_endpoint_specs, DataIntervalFile, DEFAULT_SAMPLES};
use percept_core::export::{fou_rows, word_rows, write_rows};
use percept_core::pr::{ConsequentMode, SolveOptions, DEFAULT_LEVELS};
use percept_core::problem::{solve_pr, solve_two_tuple, Problem};
use percept_core::similarity::DEFAULT_POINTS;
use percept_core::tsukamoto::{TsukamotoSystem, DEFAULT_RESOLUTION};
use percept_core::two_tuple::overflow_check;
use percept_core::{fixtures, Codebook, Error};

use report::Format;

const EXIT_USAGE: u8 = 2;
const EXIT_DATA: u8 = 3;
const EXIT_ENGINE: u8 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "percept",
    version,
    about = "Perceptual reasoning over interval type-2 word models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve a problem bundle and print outputs and the ranking.
    Solve {
        engine: Engine,
        #[command(flatten)]
        opts: SolveArgs,
    },
    /// Write UMF/LMF vertex rows for codebook words or inference outputs.
    ExportFou {
        /// Codebook fixture id or file.
        #[arg(long)]
        codebook: String,
        /// Export the outputs of this problem instead of the codebook words.
        #[arg(long)]
        problem: Option<String>,
        #[arg(long, default_value_t = DEFAULT_LEVELS)]
        levels: usize,
        #[arg(long, default_value_t = DEFAULT_POINTS)]
        grid: usize,
        #[arg(long, value_enum, default_value_t = Mode::Default)]
        consequents: Mode,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Draw data intervals for every word of an endpoint spec file.
    CodebookSample {
        /// Endpoint spec fixture id or file.
        #[arg(long)]
        spec: String,
        #[arg(long, short, default_value_t = DEFAULT_SAMPLES)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Engine {
    Pr,
    TwoTuple,
    Tsukamoto,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Default,
    Raw,
    Decoded,
}

impl From<Mode> for ConsequentMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Default => ConsequentMode::Default,
            Mode::Raw => ConsequentMode::Raw,
            Mode::Decoded => ConsequentMode::Decoded,
        }
    }
}

#[derive(Debug, Args)]
struct SolveArgs {
    /// Problem fixture id or file.
    #[arg(long)]
    problem: String,
    /// Codebook fixture id or file; required by the pr engine.
    #[arg(long)]
    codebook: Option<String>,
    /// Number of alpha levels.
    #[arg(long, default_value_t = DEFAULT_LEVELS)]
    levels: usize,
    /// Similarity grid points (pr) or steps per unit (tsukamoto).
    #[arg(long)]
    grid: Option<usize>,
    /// How synthesized consequents enter the aggregation.
    #[arg(long, value_enum, default_value_t = Mode::Default)]
    consequents: Mode,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Treat a 2-tuple protruding past the scale as an error.
    #[arg(long)]
    strict_scale: bool,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoRuleFired
            | Error::ScaleOverflow { .. }
            | Error::EmptyFeasibleSet
            | Error::OutOfRange { .. }
            | Error::Unsupported(_) => EXIT_ENGINE,
            _ => EXIT_DATA,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn read_source(source: &str, fixture: Option<&'static str>) -> Result<String, Failure> {
    match fixture {
        Some(text) => Ok(text.to_string()),
        None if Path::new(source).exists() => Ok(std::fs::read_to_string(source).map_err(Error::from)?),
        None => Err(Error::UnknownFixture(source.to_string()).into()),
    }
}

fn load_codebook(source: &str, grid: usize) -> Result<Codebook, Failure> {
    let text = read_source(source, fixtures::codebook_source(source))?;
    let cb = Codebook::parse_with_grid(&text, grid)?;
    for w in cb.warnings() {
        log::warn!("{w}");
    }
    Ok(cb)
}

fn load_problem(source: &str) -> Result<Problem, Failure> {
    if fixtures::tsukamoto_source(source).is_some() {
        return Err(usage(format!(
            "'{source}' is a Tsukamoto system; use `solve tsukamoto`"
        )));
    }
    let text = read_source(source, fixtures::problem_source(source))?;
    Problem::parse(&text).map_err(|e| {
        if TsukamotoSystem::parse(&text).is_ok() {
            usage(format!("'{source}' is a Tsukamoto system; use `solve tsukamoto`"))
        } else {
            e.into()
        }
    })
}

fn load_system(source: &str) -> Result<TsukamotoSystem, Failure> {
    if fixtures::problem_source(source).is_some() {
        return Err(usage(format!(
            "'{source}' has word inputs; use `solve pr` or `solve two-tuple`"
        )));
    }
    let text = read_source(source, fixtures::tsukamoto_source(source))?;
    TsukamotoSystem::parse(&text).map_err(|e| {
        if Problem::parse(&text).is_ok() {
            usage(format!(
                "'{source}' has word inputs; use `solve pr` or `solve two-tuple`"
            ))
        } else {
            e.into()
        }
    })
}

fn solve(engine: Engine, a: &SolveArgs) -> Result<String, Failure> {
    match engine {
        Engine::Pr => {
            let source = a
                .codebook
                .as_deref()
                .ok_or_else(|| usage("`solve pr` needs --codebook"))?;
            let cb = load_codebook(source, a.grid.unwrap_or(DEFAULT_POINTS))?;
            let problem = load_problem(&a.problem)?;
            let report = solve_pr(
                &problem,
                &cb,
                SolveOptions {
                    levels: a.levels,
                    mode: a.consequents.into(),
                },
            )?;
            Ok(report::pr_report(&report, a.format)?)
        }
        Engine::TwoTuple => {
            let problem = load_problem(&a.problem)?;
            let fallback = match &a.codebook {
                Some(s) => Some(
                    load_codebook(s, DEFAULT_POINTS)?
                        .words()
                        .iter()
                        .map(|w| w.name.clone())
                        .collect::<Vec<_>>(),
                ),
                None => None,
            };
            let ts = problem.term_set(fallback.as_deref())?;
            let report = solve_two_tuple(&problem, &ts)?;
            for alt in &report.alternatives {
                for t in &alt.tuples {
                    let o = overflow_check(t, &ts, ts.spacing());
                    if o.protrudes() {
                        let err = Error::ScaleOverflow {
                            tuple: format!("{} {t}", alt.name),
                            amount: o.amount(),
                        };
                        if a.strict_scale {
                            return Err(err.into());
                        }
                        log::warn!("{err}");
                    }
                }
            }
            let names: Vec<String> = problem.objectives.iter().map(|o| o.name.clone()).collect();
            Ok(report::tuple_report(&report, &names, a.format)?)
        }
        Engine::Tsukamoto => {
            if a.codebook.is_some() {
                return Err(usage("the tsukamoto engine takes crisp inputs, not a codebook"));
            }
            let system = load_system(&a.problem)?;
            let constraint = system
                .constraint
                .ok_or_else(|| usage(format!("system '{}' declares no constraint total", system.name)))?;
            let resolution = a.grid.unwrap_or(DEFAULT_RESOLUTION);
            let optimum = system.optimize(constraint, resolution)?;
            Ok(report::tsukamoto_report(
                &system, constraint, resolution, &optimum, a.format,
            )?)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())).into())
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve { engine, opts } => emit(&solve(engine, &opts)?, None),
        Command::ExportFou {
            codebook,
            problem,
            levels,
            grid,
            consequents,
            out,
        } => {
            let cb = load_codebook(&codebook, grid)?;
            let rows = match problem {
                None => cb.words().iter().flat_map(word_rows).collect::<Vec<_>>(),
                Some(p) => {
                    let problem = load_problem(&p)?;
                    let report = solve_pr(
                        &problem,
                        &cb,
                        SolveOptions {
                            levels,
                            mode: consequents.into(),
                        },
                    )?;
                    report
                        .alternatives
                        .iter()
                        .flat_map(|a| {
                            a.outputs
                                .iter()
                                .flat_map(|o| fou_rows(&format!("{}/{}", a.name, o.objective), &o.fou))
                        })
                        .collect()
                }
            };
            emit(&write_rows(&rows)?, out.as_deref())
        }
        Command::CodebookSample { spec, n, seed, out } => {
            let (_, specs) = load_endpoint_specs(&spec)?;
            let file = DataIntervalFile::sample(&specs, n, seed)?;
            emit(&file.to_toml_string(), out.as_deref())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
