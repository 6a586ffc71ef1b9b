//! Command-line driver for the reflexive decision engine: deterministic
//! text reports over line-oriented scenario files.
//!
//! Exit codes: 0 success; 2 scenario or content error; 3 group not
//! decomposable; 4 a NO SOLUTION line appears in `solve` output (the report
//! is still printed); 5 bad flags.

mod scenario;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rgt::{
    annotate_images, build_diagonal, control_search, solve_group, stratify, Alternative,
    BasicEmotion, GroupError, PadTriple, Subject,
};
use scenario::{resolve_state, Scenario};

const CONTENT_ERROR: u8 = 2;
const NOT_DECOMPOSABLE: u8 = 3;
const NO_SOLUTION: u8 = 4;
const USAGE_ERROR: u8 = 5;

#[derive(Parser)]
#[command(
    name = "rgt",
    version,
    about = "Reflexive decision engine over a Boolean algebra of PAD-coded emotional states"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the group's canonical polynomial.
    Decompose {
        /// Scenario file describing the group.
        scenario: PathBuf,
    },
    /// Solve every subject's decision equation and print one line each.
    Solve {
        /// Scenario file describing the group.
        scenario: PathBuf,
        #[command(flatten)]
        overrides: InfluenceArgs,
    },
    /// Print the tree of reflexive images seen from one subject.
    Images {
        /// Scenario file describing the group.
        scenario: PathBuf,
        /// The subject whose viewpoint is taken.
        #[arg(long)]
        subject: String,
        #[command(flatten)]
        overrides: InfluenceArgs,
    },
    /// List the controller influences that force a target's decision.
    Control {
        /// Scenario file describing the group.
        scenario: PathBuf,
        /// The subject whose influence is searched.
        #[arg(long)]
        controller: String,
        /// The subject whose decision must be forced.
        #[arg(long)]
        target: String,
        /// Desired unique decision: an emotion name or a brace code.
        #[arg(long)]
        state: String,
        #[command(flatten)]
        overrides: InfluenceArgs,
    },
    /// Emotional-state coding utilities.
    #[command(subcommand)]
    Pad(PadCommand),
}

#[derive(Subcommand)]
enum PadCommand {
    /// Map a pleasure/arousal/dominance measurement in [-1, 1] to the
    /// nearest pole state and its name.
    Quantize {
        #[arg(allow_negative_numbers = true)]
        pleasure: f64,
        #[arg(allow_negative_numbers = true)]
        arousal: f64,
        #[arg(allow_negative_numbers = true)]
        dominance: f64,
    },
}

#[derive(Args)]
struct InfluenceArgs {
    /// Override or add an influence: SUBJ=STATE with an emotion name, a
    /// brace code, or ? to leave the subject symbolic. Repeatable.
    #[arg(long = "influence", short = 'i', value_name = "SUBJ=STATE")]
    influence: Vec<String>,
}

/// A diagnostic destined for the error stream plus the exit code to use.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn content(message: impl Into<String>) -> Failure {
        Failure { code: CONTENT_ERROR, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: USAGE_ERROR, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            let text = err.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("bad flags"));
            return ExitCode::from(USAGE_ERROR);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Decompose { scenario } => {
            let scenario = load(&scenario)?;
            let polynomial = decompose(&scenario)?;
            println!("{polynomial}");
            Ok(0)
        }
        Command::Solve { scenario, overrides } => {
            let scenario = load(&scenario)?;
            let polynomial = decompose(&scenario)?;
            let influences = effective_influences(&scenario, &overrides)?;
            let results = solve_group(&polynomial, &influences, scenario.width())
                .map_err(|err| Failure::content(err.to_string()))?;
            let mut unsolved = false;
            for (subject, result) in &results {
                unsolved |= result.is_no_solution();
                println!("{}", result.render(subject));
            }
            Ok(if unsolved { NO_SOLUTION } else { 0 })
        }
        Command::Images { scenario, subject, overrides } => {
            let scenario = load(&scenario)?;
            let polynomial = decompose(&scenario)?;
            let viewpoint = known_subject(&scenario, &subject)?;
            let influences = effective_influences(&scenario, &overrides)?;
            let form = build_diagonal(&stratify(&polynomial));
            let tree = annotate_images(&form, &influences, &viewpoint, scenario.width())
                .map_err(|err| Failure::content(err.to_string()))?;
            print!("{}", tree.render());
            Ok(0)
        }
        Command::Control { scenario, controller, target, state, overrides } => {
            let scenario = load(&scenario)?;
            let polynomial = decompose(&scenario)?;
            let controller = known_subject(&scenario, &controller)?;
            let target = known_subject(&scenario, &target)?;
            let desired = resolve_state(&state, scenario.width())
                .map_err(Failure::content)?
                .ok_or_else(|| Failure::content("the desired state must be concrete, not '?'"))?;
            let influences = effective_influences(&scenario, &overrides)?;
            let admissible = control_search(
                &polynomial,
                &controller,
                &target,
                &desired,
                &influences,
                scenario.width(),
            )
            .map_err(|err| Failure::content(err.to_string()))?;
            if admissible.is_empty() {
                println!("(none)");
            } else {
                for state in admissible {
                    println!("{}", describe(&state));
                }
            }
            Ok(0)
        }
        Command::Pad(PadCommand::Quantize { pleasure, arousal, dominance }) => {
            let triple = PadTriple::new(pleasure, arousal, dominance)
                .map_err(|err| Failure::content(err.to_string()))?;
            println!("{}", describe(&triple.quantize()));
            Ok(0)
        }
    }
}

fn load(path: &PathBuf) -> Result<Scenario, Failure> {
    Scenario::load(path)
        .map_err(|err| Failure::content(format!("{}: {err}", path.display())))
}

/// The scenario's polynomial; a pairwise graph that does not decompose is
/// its own exit code.
fn decompose(scenario: &Scenario) -> Result<rgt::PolynomialExpr, Failure> {
    scenario.polynomial().map_err(|err| match err {
        GroupError::NotDecomposable { .. } => {
            Failure { code: NOT_DECOMPOSABLE, message: err.to_string() }
        }
        other => Failure::content(other.to_string()),
    })
}

fn known_subject(scenario: &Scenario, id: &str) -> Result<Subject, Failure> {
    let subject =
        Subject::new(id).map_err(|err| Failure::content(err.to_string()))?;
    if !scenario.subjects().contains(&subject) {
        return Err(Failure::content(format!("unknown subject '{id}'")));
    }
    Ok(subject)
}

/// Scenario influences with `--influence` overrides applied on top. A `?`
/// override removes a scenario influence, making the subject symbolic.
fn effective_influences(
    scenario: &Scenario,
    overrides: &InfluenceArgs,
) -> Result<BTreeMap<Subject, Alternative>, Failure> {
    let mut influences = scenario.concrete_influences();
    for entry in &overrides.influence {
        let (id, raw) = entry.split_once('=').ok_or_else(|| {
            Failure::usage(format!("invalid --influence '{entry}': expected SUBJ=STATE"))
        })?;
        let subject = known_subject(scenario, id.trim())?;
        match resolve_state(raw, scenario.width()).map_err(Failure::content)? {
            Some(state) => {
                influences.insert(subject, state);
            }
            None => {
                influences.remove(&subject);
            }
        }
    }
    Ok(influences)
}

/// A state with its emotion name when the width allows one.
fn describe(state: &Alternative) -> String {
    match BasicEmotion::from_code(state) {
        Ok(emotion) => format!("{state} {}", emotion.name()),
        Err(_) => state.to_string(),
    }
}
