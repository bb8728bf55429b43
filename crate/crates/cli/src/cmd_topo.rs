use std::path::PathBuf;

use arithmos_core::sets::{collect_items, Enumerator};
use arithmos_core::topo::{
    abelianization, complex_from_mask, enumerate_complexes, euler_characteristic,
    fundamental_group_presentation, homology, is_closed_3_manifold, parse_complex, ComplexFilter,
    ManifoldVerdict,
};
use clap::{Args, Subcommand, ValueEnum};
use serde_json::json;

use crate::{read_file, render, CmdResult, Failure, SCHEMA};

#[derive(Subcommand)]
pub enum TopoCmd {
    /// Homology groups of a complex.
    Homology(ComplexFileArgs),
    /// Fundamental-group presentation and its abelianization.
    Pi1(ComplexFileArgs),
    /// Euler characteristic.
    Euler(ComplexFileArgs),
    /// Enumerate complexes on a few vertices, filtered.
    Enumerate(EnumerateArgs),
    /// Check the closed-3-manifold conditions.
    ManifoldCheck(ComplexFileArgs),
}

#[derive(Args)]
pub struct ComplexFileArgs {
    /// Complex file: one maximal simplex per line.
    complex: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FilterArg {
    /// Every complex on the vertex set.
    All,
    /// Closed 3-manifolds only.
    ClosedManifold,
    /// Candidates with the homology of a 3-sphere.
    HomologySphere,
}

#[derive(Args)]
pub struct EnumerateArgs {
    /// Number of vertices.
    #[arg(long, default_value_t = 4)]
    vertices: u32,

    /// Which complexes to keep.
    #[arg(long, value_enum, default_value_t = FilterArg::All)]
    filter: FilterArg,

    /// Work budget (candidate masks examined).
    #[arg(long, default_value_t = 100_000)]
    budget: u64,

    /// Stop after this many matching complexes.
    #[arg(long, default_value_t = 20)]
    max_items: usize,
}

pub fn run(cmd: TopoCmd, json: bool) -> CmdResult {
    match cmd {
        TopoCmd::Homology(args) => homology_cmd(args, json),
        TopoCmd::Pi1(args) => pi1_cmd(args, json),
        TopoCmd::Euler(args) => euler_cmd(args, json),
        TopoCmd::Enumerate(args) => enumerate_cmd(args, json),
        TopoCmd::ManifoldCheck(args) => manifold_cmd(args, json),
    }
}

fn load(args: &ComplexFileArgs) -> Result<arithmos_core::topo::SimplicialComplex, Failure> {
    let text = read_file(&args.complex)?;
    parse_complex(&text).map_err(Failure::usage)
}

fn homology_cmd(args: ComplexFileArgs, json: bool) -> CmdResult {
    let complex = load(&args)?;
    let result = homology(&complex);
    let euler = euler_characteristic(&complex);
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "topo.homology",
                "groups": result
                    .groups
                    .iter()
                    .map(|g| json!({
                        "betti": g.betti,
                        "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                    }))
                    .collect::<Vec<_>>(),
                "euler": euler,
            })
        );
    } else {
        for (dim, group) in result.groups.iter().enumerate() {
            println!(
                "H{dim}={}",
                render::abelian_group(group.betti, &group.torsion)
            );
        }
        println!("euler={euler}");
    }
    Ok(())
}

fn pi1_cmd(args: ComplexFileArgs, json: bool) -> CmdResult {
    let complex = load(&args)?;
    let presentation = fundamental_group_presentation(&complex).map_err(Failure::domain)?;
    let image = abelianization(&presentation);
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "topo.pi1",
                "generators": presentation.generator_count,
                "generator_edges": presentation.generators,
                "relators": presentation.relators,
                "abelianization": {
                    "free_rank": image.free_rank,
                    "torsion": image.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                },
            })
        );
    } else {
        println!("generators={}", presentation.generator_count);
        println!("relators={}", presentation.relators.len());
        for relator in &presentation.relators {
            let word: Vec<String> = relator
                .iter()
                .map(|&x| {
                    if x > 0 {
                        format!("g{x}")
                    } else {
                        format!("g{}^-1", -x)
                    }
                })
                .collect();
            println!("relator: {}", word.join(" "));
        }
        println!(
            "abelianization={}",
            render::abelian_group(image.free_rank, &image.torsion)
        );
    }
    Ok(())
}

fn euler_cmd(args: ComplexFileArgs, json: bool) -> CmdResult {
    let complex = load(&args)?;
    let euler = euler_characteristic(&complex);
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "topo.euler",
                "euler": euler,
            })
        );
    } else {
        println!("euler={euler}");
    }
    Ok(())
}

fn enumerate_cmd(args: EnumerateArgs, json: bool) -> CmdResult {
    let filter = match args.filter {
        FilterArg::All => ComplexFilter::All,
        FilterArg::ClosedManifold => ComplexFilter::ClosedManifold,
        FilterArg::HomologySphere => ComplexFilter::HomologySphereCandidates,
    };
    let mut e = enumerate_complexes(args.vertices, filter).map_err(Failure::domain)?;
    let masks = collect_items(&mut e, args.max_items, args.budget).map_err(Failure::domain)?;
    let counts: Vec<[usize; 4]> = masks
        .iter()
        .map(|&m| complex_from_mask(m, args.vertices).simplex_counts())
        .collect();
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "topo.enumerate",
                "vertices": args.vertices,
                "masks": masks,
                "simplex_counts": counts,
                "found": masks.len(),
                "examined": e.work_done(),
                "budget": args.budget,
            })
        );
    } else {
        for (mask, count) in masks.iter().zip(&counts) {
            println!("mask={mask} simplices={}", render::join(count.iter()));
        }
        println!(
            "found={} examined={} budget={} vertices={}",
            masks.len(),
            e.work_done(),
            args.budget,
            args.vertices
        );
    }
    Ok(())
}

fn verdict_reason(verdict: &ManifoldVerdict) -> Option<String> {
    match verdict {
        ManifoldVerdict::ClosedManifold => None,
        ManifoldVerdict::NotPure { simplex } => {
            Some(format!("not-pure simplex={}", render::join(simplex)))
        }
        ManifoldVerdict::NotConnected => Some("not-connected".to_string()),
        ManifoldVerdict::TriangleCofaceCount { triangle, count } => Some(format!(
            "triangle-coface-count triangle={} count={count}",
            render::join(triangle)
        )),
        ManifoldVerdict::EdgeLinkNotCircle { edge } => Some(format!(
            "edge-link-not-circle edge={}",
            render::join(edge)
        )),
        ManifoldVerdict::VertexLinkNotSphere { vertex } => {
            Some(format!("vertex-link-not-sphere vertex={vertex}"))
        }
    }
}

fn manifold_cmd(args: ComplexFileArgs, json: bool) -> CmdResult {
    let complex = load(&args)?;
    let verdict = is_closed_3_manifold(&complex);
    let reason = verdict_reason(&verdict);
    if json {
        println!(
            "{}",
            json!({
                "schema": SCHEMA,
                "command": "topo.manifold_check",
                "closed": verdict.is_closed(),
                "reason": reason,
            })
        );
    } else {
        match &reason {
            None => println!("closed-3-manifold=true"),
            Some(r) => println!("closed-3-manifold=false reason={r}"),
        }
    }
    Ok(())
}
