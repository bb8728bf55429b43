//! Command-line front end.
//!
//! Every subcommand accepts `--json` for a machine-readable form of the
//! same answer (schema tag `arithmos/1`); the default is stable
//! line-oriented text. Budgets, fuel, and bounds are explicit flags with
//! conservative defaults, and each semi-decision echoes the budget it ran
//! under so the output is reproducible.
//!
//! Exit codes: 0 when the command delivered its answer (a negative answer
//! is still an answer), 1 when a domain guard or budget precondition kept
//! it from answering, 2 when the invocation itself was malformed.

mod cmd_dioph;
mod cmd_machine;
mod cmd_numbers;
mod cmd_reduce;
mod cmd_sets;
mod cmd_topo;
mod render;

use std::path::Path;

use clap::{Parser, Subcommand};

/// Schema tag stamped on every JSON payload.
pub const SCHEMA: &str = "arithmos/1";

/// Why a command could not deliver its answer.
pub enum Failure {
    /// Exit 1: a domain guard, budget, or precondition stopped the
    /// operation.
    Domain(String),
    /// Exit 2: the invocation was malformed (bad flag combination,
    /// unreadable file, unparsable input text).
    Usage(String),
}

impl Failure {
    pub fn domain(e: impl std::fmt::Display) -> Failure {
        Failure::Domain(e.to_string())
    }

    pub fn usage(e: impl std::fmt::Display) -> Failure {
        Failure::Usage(e.to_string())
    }
}

pub type CmdResult = Result<(), Failure>;

/// Read a text input file, treating any I/O problem as a usage error.
pub fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

#[derive(Parser)]
#[command(
    name = "arithmos",
    version,
    about = "Register machines, listable sets, symmetry groups, and desk-scale topology"
)]
struct Cli {
    /// Emit JSON instead of the line-oriented text form.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    module: Module,
}

#[derive(Subcommand)]
enum Module {
    /// Parse and run register-machine programs.
    #[command(subcommand)]
    Machine(cmd_machine::MachineCmd),
    /// Pairing functions and listable-set enumerators.
    #[command(subcommand)]
    Sets(cmd_sets::SetsCmd),
    /// Diophantine families: enumerate, verify, search.
    #[command(subcommand)]
    Dioph(cmd_dioph::DiophCmd),
    /// Reductions: four-color instances, MIU theorems, program numbering.
    #[command(subcommand)]
    Reduce(cmd_reduce::ReduceCmd),
    /// Symmetry groups, Gauss sums, and cyclotomic arithmetic.
    #[command(subcommand)]
    Numbers(cmd_numbers::NumbersCmd),
    /// Simplicial complexes: homology, fundamental group, enumeration.
    #[command(subcommand)]
    Topo(cmd_topo::TopoCmd),
}

/// Restore the default SIGPIPE disposition so `arithmos ... | head` ends
/// quietly instead of panicking mid-print.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() {
    reset_sigpipe();
    let cli = Cli::parse();
    let result = match cli.module {
        Module::Machine(c) => cmd_machine::run(c, cli.json),
        Module::Sets(c) => cmd_sets::run(c, cli.json),
        Module::Dioph(c) => cmd_dioph::run(c, cli.json),
        Module::Reduce(c) => cmd_reduce::run(c, cli.json),
        Module::Numbers(c) => cmd_numbers::run(c, cli.json),
        Module::Topo(c) => cmd_topo::run(c, cli.json),
    };
    match result {
        Ok(()) => {}
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}
