use arithmos_core::dioph::{
    builtin_families, diophantine_enumerator, search_solution, verify_representation,
    DiophantineFamily, IntPolynomial, SearchResult, SearchStrategy,
};
use arithmos_core::sets::{collect_items, DecidablePredicate};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::{render, CmdResult, Failure, SCHEMA};

#[derive(Subcommand)]
pub enum DiophCmd {
    /// List parameter values with solutions, in discovery order.
    Enumerate(EnumerateArgs),
    /// Compare a family against its decidable counterpart over a range.
    Check(CheckArgs),
    /// Search for a witness at one parameter value.
    Search(SearchArgs),
}

/// Family selection shared by the subcommands: a built-in name or a custom
/// polynomial.
#[derive(Args)]
pub struct FamilySpec {
    /// Built-in family: even, square, or composite.
    #[arg(long, conflicts_with = "poly")]
    family: Option<String>,

    /// Polynomial text for a custom family, e.g. "t - x*x".
    #[arg(long, requires = "param")]
    poly: Option<String>,

    /// Parameter variable of the custom family.
    #[arg(long)]
    param: Option<String>,

    /// Comma-separated unknowns; defaults to every other variable.
    #[arg(long, value_delimiter = ',', requires = "poly")]
    unknowns: Option<Vec<String>>,
}

impl FamilySpec {
    fn resolve(&self) -> Result<(String, DiophantineFamily), Failure> {
        if let Some(name) = &self.family {
            let families = builtin_families();
            let fam = families.get(name.as_str()).ok_or_else(|| {
                Failure::Usage(format!(
                    "unknown family {name:?}; built-ins: {}",
                    families.keys().copied().collect::<Vec<_>>().join(", ")
                ))
            })?;
            return Ok((name.clone(), fam.clone()));
        }
        let (Some(poly_text), Some(param)) = (&self.poly, &self.param) else {
            return Err(Failure::Usage(
                "pass --family NAME or --poly TEXT --param VAR".to_string(),
            ));
        };
        let poly = IntPolynomial::parse(poly_text).map_err(Failure::usage)?;
        let unknowns: Vec<String> = match &self.unknowns {
            Some(u) => u.clone(),
            None => poly
                .variables()
                .into_iter()
                .filter(|v| v != param)
                .collect(),
        };
        let refs: Vec<&str> = unknowns.iter().map(String::as_str).collect();
        let fam = DiophantineFamily::new(poly, param, &refs).map_err(Failure::usage)?;
        Ok(("custom".to_string(), fam))
    }
}

#[derive(Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    family: FamilySpec,

    /// Work budget for the dovetailing enumerator.
    #[arg(long, default_value_t = 100_000)]
    budget: u64,

    /// Stop after this many items.
    #[arg(long, default_value_t = 50)]
    max_items: usize,
}

#[derive(Args)]
pub struct CheckArgs {
    /// Built-in family to verify: even, square, or composite.
    #[arg(long)]
    family: String,

    /// Inclusive parameter range, e.g. 0..100.
    #[arg(long, value_parser = parse_range)]
    t_range: (u64, u64),

    /// Box bound on each unknown during witness search.
    #[arg(long, default_value_t = 1_000)]
    bound: u64,
}

#[derive(Args)]
pub struct SearchArgs {
    #[command(flatten)]
    family: FamilySpec,

    /// Parameter value to search at.
    #[arg(long)]
    t: u64,

    /// Box-search bound on each unknown.
    #[arg(long, conflicts_with = "dovetail")]
    bound: Option<u64>,

    /// Dovetail instead, with this work budget.
    #[arg(long)]
    dovetail: Option<u64>,
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start {lo:?}"))?;
    let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

/// The decidable predicate each built-in family is supposed to represent.
fn reference_predicate(name: &str) -> Result<DecidablePredicate, Failure> {
    match name {
        "even" => Ok(DecidablePredicate::even()),
        "square" => Ok(DecidablePredicate::square()),
        "composite" => Ok(DecidablePredicate::composite()),
        other => Err(Failure::Usage(format!(
            "no reference predicate for family {other:?}"
        ))),
    }
}

pub fn run(cmd: DiophCmd, json: bool) -> CmdResult {
    match cmd {
        DiophCmd::Enumerate(args) => enumerate(args, json),
        DiophCmd::Check(args) => check(args, json),
        DiophCmd::Search(args) => search(args, json),
    }
}

fn enumerate(args: EnumerateArgs, json: bool) -> CmdResult {
    let (name, fam) = args.family.resolve()?;
    let mut e = diophantine_enumerator(&fam);
    let items = collect_items(&mut e, args.max_items, args.budget).map_err(Failure::domain)?;
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "dioph.enumerate",
                "family": name,
                "poly": fam.poly().render(),
                "items": items,
                "found": items.len(),
                "budget": args.budget,
                "max_items": args.max_items,
            })
        );
    } else {
        println!("family={name} poly={} budget={}", fam.poly().render(), args.budget);
        println!(
            "{}",
            items.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
        );
        println!("found={}", items.len());
    }
    Ok(())
}

fn check(args: CheckArgs, json: bool) -> CmdResult {
    let families = builtin_families();
    let fam = families.get(args.family.as_str()).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown family {:?}; built-ins: {}",
            args.family,
            families.keys().copied().collect::<Vec<_>>().join(", ")
        ))
    })?;
    let predicate = reference_predicate(&args.family)?;
    let (t_lo, t_hi) = args.t_range;
    let report =
        verify_representation(fam, &predicate, t_lo, t_hi, args.bound).map_err(Failure::domain)?;
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "dioph.check",
                "family": args.family,
                "t_lo": report.t_lo,
                "t_hi": report.t_hi,
                "witness_bound": report.witness_bound,
                "agree_positive": report.agree_positive,
                "agree_negative": report.agree_negative,
                "disagreements": report.disagreements,
                "unresolved": report.unresolved,
                "clean": report.clean(),
            })
        );
    } else {
        println!(
            "family={} t=[{},{}] bound={}",
            args.family, report.t_lo, report.t_hi, report.witness_bound
        );
        println!(
            "agree_positive={} agree_negative={} disagreements={} unresolved={}",
            report.agree_positive,
            report.agree_negative,
            report.disagreements.len(),
            report.unresolved.len()
        );
    }
    if report.clean() {
        Ok(())
    } else {
        Err(Failure::Domain(format!(
            "family {} disagrees with its predicate at {} value(s), {} unresolved",
            args.family,
            report.disagreements.len(),
            report.unresolved.len()
        )))
    }
}

fn search(args: SearchArgs, json: bool) -> CmdResult {
    let (name, fam) = args.family.resolve()?;
    let (strategy, strategy_name, limit) = match (args.bound, args.dovetail) {
        (Some(bound), None) => (SearchStrategy::Box { bound }, "box", bound),
        (None, Some(budget)) => (SearchStrategy::Dovetail { budget }, "dovetail", budget),
        (None, None) => (SearchStrategy::Box { bound: 100 }, "box", 100),
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let limit_key = if strategy_name == "box" { "bound" } else { "budget" };
    let result = search_solution(&fam, args.t, strategy);
    if json {
        let payload = match &result {
            SearchResult::Solvable { witness } => json!({
                "schema": SCHEMA,
                "command": "dioph.search",
                "family": name,
                "t": args.t,
                "strategy": strategy_name,
                "limit": limit,
                "solvable": true,
                "witness": witness,
                "unknowns": fam.unknowns(),
            }),
            SearchResult::NoSolutionWithinBound { .. } => json!({
                "schema": SCHEMA,
                "command": "dioph.search",
                "family": name,
                "t": args.t,
                "strategy": strategy_name,
                "limit": limit,
                "solvable": false,
            }),
        };
        println!("{payload}");
    } else {
        println!(
            "family={name} t={} strategy={strategy_name} {limit_key}={limit}",
            args.t
        );
        match &result {
            SearchResult::Solvable { witness } => {
                println!("witness={}", render::join(witness));
            }
            SearchResult::NoSolutionWithinBound { .. } => {
                println!("no-solution-within-{limit_key}");
            }
        }
    }
    Ok(())
}
