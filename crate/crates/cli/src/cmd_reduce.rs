use std::path::PathBuf;

use arithmos_core::machine::{parse_program, render_program};
use arithmos_core::reductions::{
    decode_program, encode_program, four_colorable, fourcolor_counterexample_enumerator,
    index_of_sentence, is_planar, miu_theorems_capped, p_of_n, parse_graph, sentence_of_index,
    theorem_set_enumerator, Sentence, DEFAULT_LENGTH_CAP,
};
use arithmos_core::sets::collect_items;
use clap::{Args, Subcommand};
use num_bigint::BigUint;
use serde_json::json;

use crate::{read_file, render, CmdResult, Failure, SCHEMA};

#[derive(Subcommand)]
pub enum ReduceCmd {
    /// Four-color one graph, or scan P(n) for counterexamples.
    Fourcolor(FourcolorArgs),
    /// MIU theorem sets, numbering, and membership.
    Miu(MiuArgs),
    /// Program numbering: encode a program or decode a number.
    Godel(GodelArgs),
}

#[derive(Args)]
pub struct FourcolorArgs {
    /// Graph file: report planarity and a proper 4-coloring.
    #[arg(long, conflicts_with = "max_n")]
    graph: Option<PathBuf>,

    /// Scan P(1)..P(max-n) and run the counterexample enumerator.
    #[arg(long, default_value_t = 4)]
    max_n: u32,
}

#[derive(Args)]
pub struct MiuArgs {
    /// Derivation depth of the theorem closure.
    #[arg(long, default_value_t = 6)]
    depth: u32,

    /// Drop sentences longer than this during the closure.
    #[arg(long, default_value_t = DEFAULT_LENGTH_CAP)]
    length_cap: usize,

    /// List every theorem, sorted.
    #[arg(long)]
    list: bool,

    /// Report whether this sentence is derived within the depth.
    #[arg(long)]
    check: Option<String>,

    /// Stream the first k theorems from the depth-dovetailing enumerator.
    #[arg(long, conflicts_with_all = ["list", "check"])]
    stream: Option<usize>,

    /// Work budget for --stream.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,

    /// Print the sentence at this index of the standard numbering.
    #[arg(long)]
    sentence_of: Option<u64>,

    /// Print the index of this sentence in the standard numbering.
    #[arg(long)]
    index_of: Option<String>,
}

#[derive(Args)]
pub struct GodelArgs {
    /// Program file to encode.
    #[arg(long, conflicts_with = "decode")]
    encode: Option<PathBuf>,

    /// Decimal code to decode into a canonical listing.
    #[arg(long)]
    decode: Option<String>,
}

pub fn run(cmd: ReduceCmd, json: bool) -> CmdResult {
    match cmd {
        ReduceCmd::Fourcolor(args) => fourcolor(args, json),
        ReduceCmd::Miu(args) => miu(args, json),
        ReduceCmd::Godel(args) => godel(args, json),
    }
}

fn fourcolor(args: FourcolorArgs, json: bool) -> CmdResult {
    if let Some(path) = &args.graph {
        let text = read_file(path)?;
        let graph = parse_graph(&text).map_err(Failure::usage)?;
        let planar = is_planar(&graph).map_err(Failure::domain)?;
        let coloring = four_colorable(&graph);
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "reduce.fourcolor",
                    "vertices": graph.vertex_count(),
                    "edges": graph.edge_count(),
                    "planar": planar,
                    "colorable": coloring.is_some(),
                    "colors": coloring.as_ref().map(|c| c.colors().to_vec()),
                })
            );
        } else {
            println!(
                "vertices={} edges={}",
                graph.vertex_count(),
                graph.edge_count()
            );
            println!("planar={planar}");
            match &coloring {
                Some(c) => println!("colorable=true colors={}", render::join(c.colors())),
                None => println!("colorable=false"),
            }
        }
        return Ok(());
    }
    let mut rows = Vec::new();
    for n in 1..=args.max_n {
        rows.push((n, p_of_n(n).map_err(Failure::domain)?));
    }
    let mut e = fourcolor_counterexample_enumerator(args.max_n).map_err(Failure::domain)?;
    let counterexamples =
        collect_items(&mut e, args.max_n as usize + 1, args.max_n as u64 + 1)
            .map_err(Failure::domain)?;
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "reduce.fourcolor",
                "max_n": args.max_n,
                "p": rows.iter().map(|(_, v)| *v).collect::<Vec<_>>(),
                "counterexamples": counterexamples,
            })
        );
    } else {
        for (n, v) in &rows {
            println!("P({n})={v}");
        }
        if counterexamples.is_empty() {
            println!("counterexamples=none max-n={}", args.max_n);
        } else {
            println!(
                "counterexamples={} max-n={}",
                render::join(&counterexamples),
                args.max_n
            );
        }
    }
    Ok(())
}

fn miu(args: MiuArgs, json: bool) -> CmdResult {
    if args.sentence_of.is_some() || args.index_of.is_some() {
        return miu_numbering(&args, json);
    }
    if let Some(count) = args.stream {
        let mut e = theorem_set_enumerator();
        let indices = collect_items(&mut e, count, args.budget).map_err(Failure::domain)?;
        let sentences: Vec<String> = indices
            .iter()
            .map(|&i| sentence_of_index(i).text().to_string())
            .collect();
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "reduce.miu",
                    "indices": indices,
                    "sentences": sentences,
                    "budget": args.budget,
                })
            );
        } else {
            for (i, s) in indices.iter().zip(&sentences) {
                println!("index={i} sentence={s}");
            }
            println!("emitted={} budget={}", indices.len(), args.budget);
        }
        return Ok(());
    }
    let theorems = miu_theorems_capped(args.depth, args.length_cap);
    let checked = match &args.check {
        Some(text) => {
            let s = Sentence::new(text).map_err(Failure::usage)?;
            Some((s.text().to_string(), theorems.contains(&s)))
        }
        None => None,
    };
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "reduce.miu",
                "depth": args.depth,
                "length_cap": args.length_cap,
                "theorems": theorems.len(),
                "listing": if args.list {
                    Some(theorems.iter().map(|s| s.text().to_string()).collect::<Vec<_>>())
                } else {
                    None
                },
                "checked": checked.as_ref().map(|(s, _)| s.clone()),
                "derived": checked.as_ref().map(|(_, d)| *d),
            })
        );
    } else {
        println!(
            "theorems={} depth={} length-cap={}",
            theorems.len(),
            args.depth,
            args.length_cap
        );
        if let Some((s, derived)) = &checked {
            println!("sentence={s} derived={derived}");
        }
        if args.list {
            for s in &theorems {
                println!("{}", s.text());
            }
        }
    }
    Ok(())
}

fn miu_numbering(args: &MiuArgs, json: bool) -> CmdResult {
    let mut lines = Vec::new();
    let mut payload = serde_json::Map::new();
    payload.insert("schema".to_string(), json!(SCHEMA));
    payload.insert("command".to_string(), json!("reduce.miu"));
    if let Some(n) = args.sentence_of {
        let s = sentence_of_index(n);
        lines.push(format!("index={n} sentence={}", s.text()));
        payload.insert("index".to_string(), json!(n));
        payload.insert("sentence".to_string(), json!(s.text()));
    }
    if let Some(text) = &args.index_of {
        let s = Sentence::new(text).map_err(Failure::usage)?;
        let n = index_of_sentence(&s);
        lines.push(format!("sentence={} index={n}", s.text()));
        payload.insert("sentence".to_string(), json!(s.text()));
        payload.insert("index".to_string(), json!(n));
    }
    if json {
        println!("{}", serde_json::Value::Object(payload));
    } else {
        for line in lines {
            println!("{line}");
        }
    }
    Ok(())
}

fn godel(args: GodelArgs, json: bool) -> CmdResult {
    if let Some(path) = &args.encode {
        let text = read_file(path)?;
        let program = parse_program(&text).map_err(Failure::usage)?;
        let code = encode_program(&program);
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "reduce.godel",
                    "code": code.to_string(),
                    "instructions": program.len(),
                })
            );
        } else {
            println!("code={code}");
        }
        return Ok(());
    }
    if let Some(digits) = &args.decode {
        let code: BigUint = digits
            .parse()
            .map_err(|_| Failure::Usage(format!("bad code {digits:?}")))?;
        let program = decode_program(&code);
        let listing = render_program(&program);
        if json {
            println!(
                "{}",
                json!({
                    "schema": SCHEMA,
                    "command": "reduce.godel",
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
        return Ok(());
    }
    Err(Failure::Usage(
        "pass --encode FILE or --decode CODE".to_string(),
    ))
}
