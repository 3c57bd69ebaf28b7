//! Command-line front end: analyze single instances, generate seeded
//! ones, verify the structural checks, sweep instance families into
//! tables, and export DOT drawings.
//!
//! Exit codes are part of the contract: 0 on success, 2 on input or
//! usage errors, 3 when a verification check fails.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod source;

#[derive(Parser)]
#[command(name = "complab", version, about = "Competition graph laboratory for bipartite tournaments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SourceArgs {
    /// Path to an instance JSON file (bipartite or general schema).
    #[arg(long, group = "source")]
    input: Option<String>,

    /// Built-in instance: fig1_D, fig1_Dprime, or fig2_D.
    #[arg(long, group = "source")]
    fixture: Option<String>,

    /// Generator part sizes; use together with --n2, --seed, --mode.
    #[arg(long, requires = "n2", group = "source")]
    n1: Option<usize>,

    #[arg(long, requires = "n1")]
    n2: Option<usize>,

    /// Seed for the generator source.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Generator mode: uniform, acyclic, or sinkless.
    #[arg(long, default_value = "uniform")]
    mode: String,
}

#[derive(Args, Debug, Clone)]
struct CapArgs {
    /// Power budget for stabilization detection; falls back to the
    /// COMPLAB_SAFETY_CAP environment variable, then to 2*n^2 + 16.
    #[arg(long)]
    safety_cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Sink analysis, step graphs, and the stabilization profile.
    Analyze {
        #[command(flatten)]
        source: SourceArgs,
        /// Largest step count to report; defaults to max(zeta, 4) + 2.
        #[arg(long)]
        m_max: Option<usize>,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Emit an instance as JSON or DOT.
    Generate {
        #[command(flatten)]
        source: SourceArgs,
        /// Output format: json or dot.
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Run the structural checks on one instance or an exhaustive range.
    Verify {
        #[command(flatten)]
        source: SourceArgs,
        /// Check every orientation with the given part sizes.
        #[arg(long, num_args = 2, value_names = ["N1", "N2"], group = "source")]
        exhaustive: Option<Vec<usize>>,
        /// Comma-separated subset of check names to run.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        /// Largest step count to check; defaults to max(zeta, 4) + 2.
        #[arg(long)]
        m_max: Option<usize>,
        /// Where to write the witness instance if a check fails.
        #[arg(long, default_value = "witness.json")]
        witness_out: String,
        /// Output format: text or json.
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        cap: CapArgs,
        /// List the available check names and exit.
        #[arg(long)]
        list_checks: bool,
    },
    /// Tabulate sink and profile data across an instance family.
    Sweep {
        /// Smallest part sizes of the range.
        #[arg(long, default_value_t = 2)]
        n1: usize,
        #[arg(long, default_value_t = 2)]
        n2: usize,
        /// Largest part sizes; default equal to the smallest.
        #[arg(long)]
        n1_max: Option<usize>,
        #[arg(long)]
        n2_max: Option<usize>,
        /// Enumerate every orientation instead of sampling.
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        /// Number of seeded samples per size pair.
        #[arg(long)]
        samples: Option<usize>,
        /// Base seed for sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sampling mode: uniform, acyclic, or sinkless.
        #[arg(long, default_value = "uniform")]
        mode: String,
        /// Output format: csv or json.
        #[arg(long, default_value = "csv")]
        format: String,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Write DOT files for the instance and chosen step graphs.
    Export {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated step counts to export, e.g. "3,4".
        #[arg(long, value_delimiter = ',', default_value = "1")]
        m: Vec<usize>,
        /// Directory for the emitted files.
        #[arg(long, default_value = ".")]
        out_dir: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { source, m_max, format, cap } => {
            commands::analyze(&source, m_max, &format, &cap)
        }
        Command::Generate { source, format } => commands::generate(&source, &format),
        Command::Verify {
            source,
            exhaustive,
            checks,
            m_max,
            witness_out,
            format,
            cap,
            list_checks,
        } => commands::verify(
            &source,
            exhaustive.as_deref(),
            checks.as_deref(),
            m_max,
            &witness_out,
            &format,
            &cap,
            list_checks,
        ),
        Command::Sweep {
            n1,
            n2,
            n1_max,
            n2_max,
            exhaustive,
            samples,
            seed,
            mode,
            format,
            cap,
        } => commands::sweep(
            n1,
            n2,
            n1_max.unwrap_or(n1),
            n2_max.unwrap_or(n2),
            exhaustive,
            samples,
            seed,
            &mode,
            &format,
            &cap,
        ),
        Command::Export { source, m, out_dir } => commands::export(&source, &m, &out_dir),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
