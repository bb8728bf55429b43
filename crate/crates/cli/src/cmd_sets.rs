use arithmos_core::sets::{
    collect_items, dovetail_tuples, enumerator_from_predicate, member_semidecide, pair,
    tuple_decode, tuple_encode, unpair, DecidablePredicate, Enumerator, Membership,
};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::{render, CmdResult, Failure, SCHEMA};

#[derive(Subcommand)]
pub enum SetsCmd {
    /// Enumerate the primes, or semi-decide membership of one value.
    Primes(PrimesArgs),
    /// Cantor pairing: encode a pair or tuple, or decode a code.
    Pair(PairArgs),
    /// List tuples in dovetail order.
    Dovetail(DovetailArgs),
}

#[derive(Args)]
pub struct PrimesArgs {
    /// Work budget for the enumeration.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,

    /// Stop after this many items.
    #[arg(long, default_value_t = 25)]
    max_items: usize,

    /// Semi-decide membership of this value instead of listing.
    #[arg(long)]
    member: Option<u64>,
}

#[derive(Args)]
pub struct PairArgs {
    /// First component to encode (with --y).
    #[arg(long, requires = "y", conflicts_with_all = ["decode", "tuple"])]
    x: Option<u64>,

    /// Second component to encode (with --x).
    #[arg(long, requires = "x")]
    y: Option<u64>,

    /// Comma-separated tuple to encode with right-nested pairing.
    #[arg(long, value_delimiter = ',', conflicts_with = "decode")]
    tuple: Option<Vec<u64>>,

    /// Code to decode; yields a pair, or a tuple when --arity is given.
    #[arg(long)]
    decode: Option<u64>,

    /// Tuple length for decoding.
    #[arg(long, requires = "decode")]
    arity: Option<usize>,
}

#[derive(Args)]
pub struct DovetailArgs {
    /// Tuple arity.
    #[arg(long, default_value_t = 2)]
    arity: usize,

    /// Number of tuples to list.
    #[arg(long, default_value_t = 10)]
    count: usize,

    /// Work budget.
    #[arg(long, default_value_t = 10_000)]
    budget: u64,
}

pub fn run(cmd: SetsCmd, json: bool) -> CmdResult {
    match cmd {
        SetsCmd::Primes(args) => primes(args, json),
        SetsCmd::Pair(args) => pairing(args, json),
        SetsCmd::Dovetail(args) => dovetail(args, json),
    }
}

fn primes(args: PrimesArgs, json: bool) -> CmdResult {
    let mut e = enumerator_from_predicate(DecidablePredicate::prime());
    if let Some(n) = args.member {
        let verdict = member_semidecide(&mut e, n, args.budget).map_err(Failure::domain)?;
        let (status, found) = match verdict {
            Membership::Found => ("found", Some(true)),
            Membership::NotFoundWithinBudget => ("not-found-within-budget", None),
            Membership::ExhaustedWithoutFinding => ("absent", Some(false)),
        };
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "sets.primes",
                    "member": n,
                    "status": status,
                    "found": found,
                    "budget": args.budget,
                    "work": e.work_done(),
                })
            );
        } else {
            println!("member={n} status={status} budget={} work={}", args.budget, e.work_done());
        }
        return Ok(());
    }
    let items = collect_items(&mut e, args.max_items, args.budget).map_err(Failure::domain)?;
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "sets.primes",
                "items": items,
                "found": items.len(),
                "budget": args.budget,
                "max_items": args.max_items,
            })
        );
    } else {
        println!(
            "{}",
            items.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        );
        println!(
            "found={} budget={} max-items={}",
            items.len(),
            args.budget,
            args.max_items
        );
    }
    Ok(())
}

fn pairing(args: PairArgs, json: bool) -> CmdResult {
    if let (Some(x), Some(y)) = (args.x, args.y) {
        let code = pair(x, y);
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "sets.pair",
                    "x": x,
                    "y": y,
                    "code": code,
                })
            );
        } else {
            println!("code={code}");
        }
        return Ok(());
    }
    if let Some(tuple) = args.tuple {
        let code = tuple_encode(&tuple);
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "sets.pair",
                    "tuple": tuple,
                    "code": code,
                })
            );
        } else {
            println!("code={code}");
        }
        return Ok(());
    }
    if let Some(code) = args.decode {
        if let Some(arity) = args.arity {
            let tuple = tuple_decode(code, arity);
            if json {
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "sets.pair",
                        "code": code,
                        "tuple": tuple,
                    })
                );
            } else {
                println!("tuple={}", render::join(&tuple));
            }
        } else {
            let (x, y) = unpair(code);
            if json {
                println!(
                    "{}",
                    json!({
                        "schema": SCHEMA,
                        "command": "sets.pair",
                        "code": code,
                        "x": x,
                        "y": y,
                    })
                );
            } else {
                println!("x={x} y={y}");
            }
        }
        return Ok(());
    }
    Err(Failure::Usage(
        "pass --x A --y B, --tuple A,B,..., or --decode CODE".to_string(),
    ))
}

fn dovetail(args: DovetailArgs, json: bool) -> CmdResult {
    if args.arity == 0 {
        return Err(Failure::Usage("--arity must be at least 1".to_string()));
    }
    let mut e = dovetail_tuples(args.arity);
    let codes = collect_items(&mut e, args.count, args.budget).map_err(Failure::domain)?;
    let tuples: Vec<Vec<u64>> = codes
        .iter()
        .map(|&c| tuple_decode(c, args.arity))
        .collect();
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "sets.dovetail",
                "arity": args.arity,
                "codes": codes,
                "tuples": tuples,
                "budget": args.budget,
            })
        );
    } else {
        for (code, tuple) in codes.iter().zip(&tuples) {
            println!("code={code} tuple={}", render::join(tuple));
        }
        println!(
            "emitted={} budget={} arity={}",
            codes.len(),
            args.budget,
            args.arity
        );
    }
    Ok(())
}
