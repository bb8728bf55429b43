use arithmos_core::numbers::{
    cyclotomic_polynomial, galois_group, numeric_eval, quadratic_gauss_sum, sqrt_as_cyclotomic,
    symmetry_profile, AlgebraicNumber, CyclotomicElement, SymmetryReport, UniPolynomial,
};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::{render, CmdResult, Failure, SCHEMA};

/// Highest --digits accepted; the evaluator is asked for two guard digits
/// beyond the display so the printed error claim stays true after rounding.
const MAX_DIGITS: usize = 40;

#[derive(Subcommand)]
pub enum NumbersCmd {
    /// Classify the symmetry group of an algebraic number.
    Symmetry(SymmetryArgs),
    /// Express sqrt(n) or a Gauss sum over roots of unity and evaluate it.
    Fourier(FourierArgs),
    /// Quadratic Gauss sum coordinates at an odd prime.
    Gauss(GaussArgs),
    /// Print the n-th cyclotomic polynomial.
    Cyclotomic(CyclotomicArgs),
}

#[derive(Args)]
pub struct SymmetryArgs {
    /// Minimal polynomial text, e.g. "x^3 - 2".
    #[arg(long)]
    poly: String,

    /// Pick the k-th real root (increasing order) as the number; without
    /// it the polynomial is classified directly.
    #[arg(long)]
    root_index: Option<usize>,
}

#[derive(Args)]
pub struct FourierArgs {
    /// Express sqrt of this squarefree integer.
    #[arg(long, conflicts_with = "gauss")]
    sqrt: Option<u64>,

    /// Evaluate the quadratic Gauss sum at this odd prime.
    #[arg(long)]
    gauss: Option<u64>,

    /// Fractional digits of the numeric value.
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Args)]
pub struct GaussArgs {
    /// Odd prime index of the Gauss sum.
    #[arg(long)]
    p: usize,
}

#[derive(Args)]
pub struct CyclotomicArgs {
    /// Index of the cyclotomic polynomial.
    #[arg(long)]
    n: usize,
}

pub fn run(cmd: NumbersCmd, json: bool) -> CmdResult {
    match cmd {
        NumbersCmd::Symmetry(args) => symmetry(args, json),
        NumbersCmd::Fourier(args) => fourier(args, json),
        NumbersCmd::Gauss(args) => gauss(args, json),
        NumbersCmd::Cyclotomic(args) => cyclotomic(args, json),
    }
}

fn symmetry(args: SymmetryArgs, json: bool) -> CmdResult {
    let poly = UniPolynomial::parse(&args.poly).map_err(Failure::usage)?;
    let report: SymmetryReport = match args.root_index {
        Some(index) => {
            let number = AlgebraicNumber::new(&poly, index).map_err(Failure::domain)?;
            symmetry_profile(&number).map_err(Failure::domain)?
        }
        None => {
            let profile = galois_group(&poly).map_err(Failure::domain)?;
            SymmetryReport {
                constructible: profile.two_group,
                radical_expressible: profile.solvable,
                finite_fourier: profile.abelian,
                profile,
            }
        }
    };
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "numbers.symmetry",
                "poly": poly.render(),
                "group": report.profile.group.to_string(),
                "order": report.profile.order,
                "constructible": report.constructible,
                "radical": report.radical_expressible,
                "fourier": report.finite_fourier,
            })
        );
    } else {
        println!("{report}");
    }
    Ok(())
}

/// Print a cyclotomic element plus its numeric value to `digits` places.
fn print_element(
    command: &str,
    extra: (&str, u64),
    element: &CyclotomicElement,
    digits: usize,
    json: bool,
) -> CmdResult {
    if digits > MAX_DIGITS {
        return Err(Failure::Usage(format!(
            "--digits is capped at {MAX_DIGITS}, got {digits}"
        )));
    }
    // Two guard digits: evaluation error plus display rounding stays under
    // one unit in the last printed place.
    let approx = numeric_eval(element, digits + 2);
    let re = render::decimal(&approx.real, digits);
    let im = render::decimal(&approx.imag, digits);
    let coords = render::join(element.coords());
    if json {
        let (key, value) = extra;
        let mut payload = serde_json::Map::new();
        payload.insert("schema".to_string(), json!(SCHEMA));
        payload.insert("command".to_string(), json!(command));
        payload.insert(key.to_string(), json!(value));
        payload.insert("modulus".to_string(), json!(element.modulus()));
        payload.insert(
            "coords".to_string(),
            json!(element
                .coords()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()),
        );
        payload.insert("re".to_string(), json!(re));
        payload.insert("im".to_string(), json!(im));
        payload.insert("digits".to_string(), json!(digits));
        println!("{}", serde_json::Value::Object(payload));
    } else {
        println!("modulus={} coords={}", element.modulus(), coords);
        println!("re={re} im={im} error<=1e-{digits}");
    }
    Ok(())
}

fn fourier(args: FourierArgs, json: bool) -> CmdResult {
    if let Some(n) = args.sqrt {
        let element = sqrt_as_cyclotomic(n as usize).map_err(Failure::domain)?;
        return print_element("numbers.fourier", ("sqrt", n), &element, args.digits, json);
    }
    if let Some(p) = args.gauss {
        let element = quadratic_gauss_sum(p as usize).map_err(Failure::domain)?;
        return print_element("numbers.fourier", ("gauss", p), &element, args.digits, json);
    }
    Err(Failure::Usage(
        "pass --sqrt N or --gauss P".to_string(),
    ))
}

fn gauss(args: GaussArgs, json: bool) -> CmdResult {
    let element = quadratic_gauss_sum(args.p).map_err(Failure::domain)?;
    let square = element
        .mul(&element)
        .expect("same modulus")
        .as_rational()
        .expect("gauss sum squares to a rational")
        .clone();
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "numbers.gauss",
                "p": args.p,
                "modulus": element.modulus(),
                "coords": element
                    .coords()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
                "square": square.to_string(),
            })
        );
    } else {
        println!(
            "modulus={} coords={}",
            element.modulus(),
            render::join(element.coords())
        );
        println!("square={square}");
    }
    Ok(())
}

fn cyclotomic(args: CyclotomicArgs, json: bool) -> CmdResult {
    let phi = cyclotomic_polynomial(args.n).map_err(Failure::domain)?;
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "numbers.cyclotomic",
                "n": args.n,
                "degree": phi.degree(),
                "poly": phi.render(),
            })
        );
    } else {
        println!("{}", phi.render());
    }
    Ok(())
}
