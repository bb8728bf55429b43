use std::path::PathBuf;

use arithmos_core::machine::{self, parse_program, render_program, RunStatus};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::{read_file, CmdResult, Failure, SCHEMA};

#[derive(Subcommand)]
pub enum MachineCmd {
    /// Run a program on the given inputs under a fuel budget.
    Run(RunArgs),
    /// Parse a program and print its canonical listing.
    Parse(ParseArgs),
}

#[derive(Args)]
pub struct RunArgs {
    /// Program file.
    program: PathBuf,

    /// Comma-separated inputs bound to X1, X2, ...
    #[arg(long, value_delimiter = ',')]
    input: Vec<u64>,

    /// Maximum number of machine steps.
    #[arg(long, default_value_t = 10_000)]
    fuel: u64,
}

#[derive(Args)]
pub struct ParseArgs {
    /// Program file.
    program: PathBuf,
}

pub fn run(cmd: MachineCmd, json: bool) -> CmdResult {
    match cmd {
        MachineCmd::Run(args) => run_program(args, json),
        MachineCmd::Parse(args) => parse_listing(args, json),
    }
}

fn run_program(args: RunArgs, json: bool) -> CmdResult {
    let text = read_file(&args.program)?;
    let program = parse_program(&text).map_err(Failure::usage)?;
    let outcome = machine::run(&program, &args.input, args.fuel);
    match outcome.status {
        RunStatus::Halted => {
            if json {
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "machine.run",
                        "status": "halted",
                        "y": outcome.output,
                        "steps": outcome.final_state.steps,
                        "fuel": args.fuel,
                        "registers": outcome.final_state.values,
                    })
                );
            } else {
                println!("Y={}", outcome.output);
            }
            Ok(())
        }
        RunStatus::FuelExhausted => Err(Failure::Domain(format!(
            "fuel exhausted after {} steps (fuel={})",
            outcome.final_state.steps, args.fuel
        ))),
    }
}

fn parse_listing(args: ParseArgs, json: bool) -> CmdResult {
    let text = read_file(&args.program)?;
    let program = parse_program(&text).map_err(Failure::usage)?;
    let listing = render_program(&program);
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "machine.parse",
                "instructions": program.len(),
                "listing": listing.lines().collect::<Vec<_>>(),
            })
        );
    } else {
        print!("{listing}");
        if !listing.ends_with('\n') {
            println!();
        }
    }
    Ok(())
}
