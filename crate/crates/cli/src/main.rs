use std::io::{IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use altdiag::{CanonicalClass, DiagramParams};
use altdiag_cli::{parse_params, Input, Report, DEFAULT_SEED, EXIT_USAGE, INPUT_SCHEMA};
use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "altdiag",
    version,
    about = "Alternating genus-two Heegaard diagrams"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// "n m1 m2 m3 [l r [m4 m5]]"
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
    /// JSON parameter file
    #[arg(long)]
    json: Option<PathBuf>,
    /// Class notation such as M1(2;0,1,1)
    #[arg(long)]
    class: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form check, optionally against the trace oracle
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        oracle: bool,
    },
    /// Canonical class
    Canon {
        #[command(flatten)]
        input: InputArgs,
    },
    /// List in-range alternating classes
    Enumerate {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        max_n: Option<i64>,
    },
    /// First homology from the presentation matrix
    Homology {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Named manifolds and branched set
    Identify {
        #[command(flatten)]
        input: InputArgs,
        /// Compare diagram H1 with each identification
        #[arg(long)]
        check: bool,
    },
    /// Write an SVG picture
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        out: PathBuf,
        /// Draw the branched set instead of the cut surface
        #[arg(long)]
        branch_link: bool,
    },
    /// Run every acceptance check and print a summary table
    Sweep {
        /// Use this n bound for every check instead of the full scale
        #[arg(long)]
        max_n: Option<i64>,
    },
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}\n\n{INPUT_SCHEMA}");
    ExitCode::from(EXIT_USAGE as u8)
}

/// The parsed input plus any note about how it was read.
fn read_input(a: &InputArgs) -> Result<(Input, Option<String>), String> {
    if let Some(s) = &a.params {
        let (p, note) = parse_params(s).map_err(|e| e.to_string())?;
        return Ok((Input::Params(p), note));
    }
    if let Some(path) = &a.json {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        return DiagramParams::from_json(&text)
            .map(|p| (Input::Params(p), None))
            .map_err(|e| e.to_string());
    }
    let s = a.class.as_deref().unwrap_or_default();
    s.parse::<CanonicalClass>()
        .map(|c| (Input::Class(c), None))
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let color = std::io::stdout().is_terminal()
        && std::env::var_os("NO_COLOR").is_none()
        && matches!(cli.format, Format::Text);

    let mut note = None;
    let mut read = |a: &InputArgs| {
        read_input(a).map(|(i, n)| {
            note = n;
            i
        })
    };
    let report: anyhow::Result<Report> = match &cli.command {
        Command::Enumerate { n, max_n } => Ok(altdiag_cli::enumerate(*n, *max_n)),
        Command::Sweep { max_n } => Ok(altdiag_cli::sweep(*max_n, cli.seed, color)),
        Command::Validate { input, oracle } => match read(input) {
            Ok(i) => Ok(altdiag_cli::validate(&i, *oracle)),
            Err(e) => return usage(e),
        },
        Command::Canon { input } => match read(input) {
            Ok(i) => Ok(altdiag_cli::canon(&i)),
            Err(e) => return usage(e),
        },
        Command::Homology { input } => match read(input) {
            Ok(i) => Ok(altdiag_cli::homology(&i)),
            Err(e) => return usage(e),
        },
        Command::Identify { input, check } => match read(input) {
            Ok(i) => Ok(altdiag_cli::identify_cmd(&i, *check)),
            Err(e) => return usage(e),
        },
        Command::Render {
            input,
            out,
            branch_link,
        } => match read(input) {
            Ok(i) => altdiag_cli::render(&i, out, *branch_link)
                .with_context(|| format!("writing {}", out.display())),
            Err(e) => return usage(e),
        },
    };

    match report {
        Ok(mut r) => {
            r.warnings.splice(0..0, note);
            let text = match cli.format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json() + "\n",
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::from(r.exit_status as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
