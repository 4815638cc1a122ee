use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use troprez::covector::{enumerate_cells_capped, CellRecord};
use troprez::graphcore::{
    degree_vectors, matching_number, recession_connectivity_capped, support_graph,
};
use troprez::homalg::{cellular_betti_of, hochster_betti, krull_dimension, regularity_bounds, Field};
use troprez::ideals::{fine_cotype_ideal_of, toric_edge_ideal};
use troprez::rat::rational_string;
use troprez::report;
use troprez::{checks, Error, DEFAULT_ENUM_CAP};

mod input;

/// Exact analysis of tropical hyperplane arrangements over the rationals
/// with infinite entries: cell complexes, type ideals, toric edge ideals,
/// and their homological invariants.
#[derive(Parser)]
#[command(name = "troprez", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Seed for randomized generic lifts
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cap on the number of support edges for enumeration (overrides
    /// TROPREZ_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Homology field for the Betti oracle
    #[arg(long, global = true, value_enum, default_value_t = FieldArg::Gf2)]
    field: FieldArg,
    /// Render human-readable tables instead of JSON
    #[arg(long, global = true)]
    pretty: bool,
    /// Emit JSON (the default)
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report (breaks byte-for-byte
    /// reproducibility)
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Gf2,
    Qq,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Gf2 => Field::GF2,
            FieldArg::Qq => Field::QQ,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Full report for a matrix file
    Analyze { path: PathBuf },
    /// Run the invariant suite on the builtin corpus or on a matrix file
    Check {
        path: Option<PathBuf>,
        /// Corrupt a fixture expectation to exercise the failure path
        #[arg(long)]
        selftest_negative: bool,
    },
    /// Cycle binomials of a bipartite graph file
    EdgeIdeal { path: PathBuf },
    /// All cells of the tropical complex of a matrix file
    Types { path: PathBuf },
    /// The bounded subcomplex of a matrix file
    Bounded { path: PathBuf },
    /// Type, cotype, initial, and dual ideals of a matrix file
    Ideals { path: PathBuf },
    /// Betti tables of the fine cotype ideal, with the subset-scan oracle
    Betti { path: PathBuf },
    /// Normalized volume and draconian sequences of a matrix file
    Volume { path: PathBuf },
    /// Recession connectivity and companion invariants of a graph file
    Lambda { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => 3,
        _ => 2,
    }
}

fn effective_cap(cli: &Cli) -> usize {
    cli.cap
        .or_else(|| {
            std::env::var("TROPREZ_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ENUM_CAP)
}

fn read(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn print_json(value: &serde_json::Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    } else {
        println!("{}", serde_json::to_string(value).unwrap());
    }
}

fn cell_json(cell: &CellRecord) -> serde_json::Value {
    let n = cell.type_graph.base().right_count();
    let summands: Vec<Vec<usize>> = (0..n)
        .map(|j| {
            cell.type_graph
                .column_selection(j)
                .into_iter()
                .map(|i| i + 1)
                .collect()
        })
        .collect();
    json!({
        "type": cell.type_graph.selected().iter()
            .map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>(),
        "cotype": cell.type_graph.cotype().iter()
            .map(|&(i, j)| (i + 1, j + 1)).collect::<Vec<_>>(),
        "coarse": cell.type_graph.coarse(),
        "summands": summands,
        "dim": cell.dim,
        "bounded": cell.bounded,
        "witness": cell.witness.iter().map(rational_string).collect::<Vec<_>>(),
    })
}

fn run(cli: &Cli) -> Result<u8, Error> {
    let cap = effective_cap(cli);
    let pretty = cli.pretty && !cli.json;
    match &cli.cmd {
        Cmd::Analyze { path } => {
            let a = input::parse_matrix(&read(path)?)?;
            let started = std::time::Instant::now();
            let mut rep = report::analyze(&a, cap)?;
            if cli.timing {
                rep.timing_ms = Some(started.elapsed().as_millis());
            }
            if pretty {
                print_report_pretty(&rep);
            } else {
                println!("{}", serde_json::to_string(&rep).unwrap());
            }
            Ok(0)
        }
        Cmd::Check {
            path,
            selftest_negative,
        } => {
            let outcomes = match path {
                Some(p) => {
                    let a = input::parse_matrix(&read(p)?)?;
                    checks::run_matrix(&a, cap)?
                }
                None => checks::run_builtin(cli.seed, *selftest_negative),
            };
            let mut failed = false;
            for o in &outcomes {
                if o.passed {
                    println!("PASS {}", o.name);
                } else {
                    failed = true;
                    println!("FAIL {}: {}", o.name, o.detail);
                }
            }
            Ok(if failed { 1 } else { 0 })
        }
        Cmd::EdgeIdeal { path } => {
            let b = input::parse_graph(&read(path)?)?;
            for f in toric_edge_ideal(&b) {
                println!("{f}");
            }
            Ok(0)
        }
        Cmd::Types { path } => {
            let a = input::parse_matrix(&read(path)?)?;
            let complex = enumerate_cells_capped(&a, cap)?;
            let cells: Vec<_> = complex.cells().iter().map(cell_json).collect();
            print_json(
                &json!({ "f_vector": complex.f_vector(), "cells": cells }),
                pretty,
            );
            Ok(0)
        }
        Cmd::Bounded { path } => {
            let a = input::parse_matrix(&read(path)?)?;
            let bounded = enumerate_cells_capped(&a, cap)?.bounded();
            let cells: Vec<_> = bounded.cells().iter().map(cell_json).collect();
            print_json(
                &json!({
                    "dim": bounded.dim(),
                    "f_vector": bounded.f_vector(),
                    "cells": cells,
                }),
                pretty,
            );
            Ok(0)
        }
        Cmd::Ideals { path } => {
            let a = input::parse_matrix(&read(path)?)?;
            let rep = report::analyze(&a, cap)?;
            print_json(&serde_json::to_value(&rep.ideals).unwrap(), cli.pretty);
            Ok(0)
        }
        Cmd::Betti { path } => {
            let a = input::parse_matrix(&read(path)?)?;
            let complex = enumerate_cells_capped(&a, cap)?;
            let cellular = cellular_betti_of(&complex.bounded());
            let table_json = |t: &troprez::homalg::BettiTable<troprez::graphcore::Edge>| {
                t.coarse_entries()
                    .iter()
                    .map(|(&(i, j), &count)| json!({"i": i, "j": j, "count": count}))
                    .collect::<Vec<_>>()
            };
            let b = support_graph(&a);
            let (oracle, agrees, note) = if b.edge_count() <= 14 {
                let cotype = fine_cotype_ideal_of(&complex);
                let oracle = hochster_betti(&cotype, cli.field.into())?;
                let agrees = oracle == cellular;
                (Some(table_json(&oracle)), Some(agrees), None)
            } else {
                (
                    None,
                    None,
                    Some("oracle skipped: more than 14 support edges"),
                )
            };
            print_json(
                &json!({
                    "cellular": table_json(&cellular),
                    "oracle_field": match cli.field { FieldArg::Gf2 => "gf2", FieldArg::Qq => "qq" },
                    "oracle": oracle,
                    "oracle_agrees": agrees,
                    "note": note,
                }),
                pretty,
            );
            Ok(0)
        }
        Cmd::Volume { path } => {
            let a = input::parse_matrix(&read(path)?)?;
            let complex = enumerate_cells_capped(&a, cap)?;
            let volume = troprez::subdiv::volume_of(&complex)?;
            let draconian = troprez::subdiv::draconian_sequences_of(&complex)?;
            print_json(
                &json!({
                    "volume": rational_string(&volume),
                    "draconian": draconian.into_iter().collect::<Vec<_>>(),
                }),
                pretty,
            );
            Ok(0)
        }
        Cmd::Lambda { path } => {
            let b = input::parse_graph(&read(path)?)?;
            let lambda = recession_connectivity_capped(&b, cap.max(troprez::DEFAULT_LAMBDA_CAP))?;
            let bounds = regularity_bounds(&b)?;
            let dv = degree_vectors(&b);
            print_json(
                &json!({
                    "left": b.left_count(),
                    "right": b.right_count(),
                    "edges": b.edge_count(),
                    "left_degrees": dv.left,
                    "right_degrees": dv.right,
                    "lambda": lambda,
                    "regularity": lambda - 1,
                    "krull_dim": krull_dimension(&b),
                    "matching_number": matching_number(&b),
                    "leaf_bound": bounds.leaf_bound,
                    "matching_bound": bounds.matching_bound,
                }),
                pretty,
            );
            Ok(0)
        }
    }
}

fn print_report_pretty(rep: &report::Report) {
    println!(
        "matrix: {} x {}, {} support edges, {}",
        rep.input.rows,
        rep.input.cols,
        rep.support.edges.len(),
        if rep.support.connected {
            "connected"
        } else {
            "disconnected"
        }
    );
    match rep.generic {
        Some(true) => println!("generic: yes"),
        Some(false) => println!("generic: no"),
        None => println!("generic: n/a"),
    }
    println!("f-vector (all cells):     {:?}", rep.f_vector);
    println!("f-vector (bounded cells): {:?}", rep.bounded_f_vector);
    if let (Some(lam), Some(reg)) = (rep.lambda, rep.regularity) {
        println!("lambda: {lam}   regularity: {reg}   krull dim: {}", rep.krull_dim);
    }
    if let Some(b) = &rep.bounds {
        println!(
            "regularity bounds: leaves {}, matching {}",
            b.leaf_bound, b.matching_bound
        );
    }
    let show = |name: &str, gens: &Vec<Vec<(String, u32)>>| {
        let rendered: Vec<String> = gens
            .iter()
            .map(|m| {
                m.iter()
                    .map(|(v, e)| {
                        if *e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("*")
            })
            .collect();
        println!("{name}: <{}>", rendered.join(", "));
    };
    show("fine cotype ideal", &rep.ideals.fine_cotype);
    show("initial ideal (monomial part)", &rep.ideals.initial_ideal_monomial_part);
    println!("edge ideal: {}", rep.ideals.edge_ideal.join(",  "));
    if let Some(v) = &rep.volume {
        println!("volume: {v}");
    }
    if let Some(d) = &rep.draconian {
        println!("draconian sequences: {d:?}");
    }
    if let Some(z) = &rep.zonotope {
        println!(
            "graphic: graph with {} edges, {} spanning trees, {} forests",
            z.graph_edges.len(),
            z.spanning_trees,
            z.forests
        );
    }
    for (section, reason) in &rep.omitted {
        println!("omitted {section}: {reason}");
    }
    if let Some(ms) = rep.timing_ms {
        println!("timing: {ms} ms");
    }
}
