//! Command-line front end: compute descriptor tables for edge-list files,
//! print closed-form aggregate bounds, generate the named graph families,
//! and run the exhaustive small-graph verification.
//!
//! Exit codes: 0 on success (including a verification that ran and held),
//! 1 when a verification ran and found a violation, 2 on usage or input
//! errors.

use clap::{Parser, Subcommand, ValueEnum};
use netdesc::bounds::{descriptor_bounds, stationary_points, BoundSet, StationaryPoints};
use netdesc::descriptors::{aggregates, descriptor_table, AggregateSummary, Lambda};
use netdesc::generators;
use netdesc::graph::{parse_edge_list, write_edge_list, Graph};
use netdesc::search::{probe_conjecture, probe_open_problems, verify_claims};
use serde::Serialize;
use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

/// Bumped whenever the shape of the JSON records changes.
const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "netdesc",
    version,
    about = "Distance-damped network descriptors: per-vertex tables, extremal bounds, exhaustive verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute per-vertex descriptors and per-edge betweenness for a graph
    /// read from an edge-list file ("-" reads standard input)
    Compute {
        /// Edge-list file: optional "# n=<count>" header, then "u v" lines
        graph_file: String,
        /// Damping base, strictly between 0 and 1
        #[arg(long)]
        lambda: f64,
        /// Output shape
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Write the main output here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
        /// With --format csv: also write a per-edge CSV to this path
        #[arg(long)]
        edges: Option<PathBuf>,
        /// Collapse duplicate edges instead of rejecting them
        #[arg(long)]
        lenient: bool,
    },
    /// Print the closed-form aggregate bounds for connected graphs on n vertices
    Bounds {
        #[arg(long)]
        n: usize,
        /// Damping base, strictly between 0 and 1
        #[arg(long)]
        lambda: f64,
    },
    /// Write a named graph family as an edge-list file
    Gen {
        family: Family,
        /// Vertex count
        #[arg(long)]
        n: usize,
        /// Handle depth (broom only)
        #[arg(long)]
        d: Option<usize>,
        /// Comma-separated circulant offsets (circulant only)
        #[arg(long, value_delimiter = ',')]
        offsets: Option<Vec<usize>>,
        /// Write here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the bounds against every labeled connected graph on n vertices
    Verify {
        /// Vertex count, 2..=8 (conjecture mode needs at least 3)
        #[arg(long)]
        n: usize,
        /// Damping base, strictly between 0 and 1
        #[arg(long)]
        lambda: f64,
        #[arg(long, value_enum, default_value = "claims")]
        mode: Mode,
        /// Worker threads; 0 uses the rayon default
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Opt in to the n=8 scan (2^28 candidate graphs)
        #[arg(long)]
        allow_large: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Claims,
    Conjecture,
    Open,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Star,
    Complete,
    Cycle,
    Broom,
    Circulant,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Compute { graph_file, lambda, format, out, edges, lenient } => {
            compute(&graph_file, lambda, format, out, edges, lenient)
        }
        Command::Bounds { n, lambda } => bounds(n, lambda),
        Command::Gen { family, n, d, offsets, out } => gen(family, n, d, offsets, out),
        Command::Verify { n, lambda, mode, jobs, allow_large } => {
            verify(n, lambda, mode, jobs, allow_large)
        }
    }
}

fn parse_lambda(value: f64) -> Result<Lambda, String> {
    Lambda::new(value).map_err(|e| e.to_string())
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| format!("writing {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(record: &T) -> String {
    let mut text = serde_json::to_string_pretty(record).expect("records serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct ComputeRecord {
    schema_version: &'static str,
    command: &'static str,
    inputs: ComputeInputs,
    vertices: Vec<VertexRow>,
    edges: Vec<EdgeRow>,
    aggregates: AggregateSummary,
    balance: Balance,
}

#[derive(Serialize)]
struct ComputeInputs {
    graph: String,
    n: usize,
    m: usize,
    lambda: f64,
    lenient: bool,
}

#[derive(Serialize)]
struct VertexRow {
    vertex: usize,
    transmission: f64,
    centrality: f64,
    networkness: f64,
    surplus: f64,
}

#[derive(Serialize)]
struct EdgeRow {
    u: usize,
    v: usize,
    betweenness: f64,
}

#[derive(Serialize)]
struct Balance {
    sum_transmission: f64,
    sum_centrality: f64,
    abs_difference: f64,
}

fn compute(
    graph_file: &str,
    lambda: f64,
    format: Format,
    out: Option<PathBuf>,
    edges_out: Option<PathBuf>,
    lenient: bool,
) -> Result<ExitCode, String> {
    if edges_out.is_some() && format != Format::Csv {
        return Err("--edges only applies with --format csv".into());
    }
    let lambda = parse_lambda(lambda)?;
    let text = if graph_file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading standard input: {e}"))?;
        buf
    } else {
        fs::read_to_string(graph_file).map_err(|e| format!("reading {graph_file}: {e}"))?
    };
    let graph = parse_edge_list(&text, lenient).map_err(|e| e.to_string())?;
    let table = descriptor_table(&graph, lambda).map_err(|e| e.to_string())?;
    let summary = aggregates(&table);
    let sum_t: f64 = table.transmission.iter().sum();
    let sum_c: f64 = table.centrality.iter().sum();
    let record = ComputeRecord {
        schema_version: SCHEMA_VERSION,
        command: "compute",
        inputs: ComputeInputs {
            graph: graph_file.to_string(),
            n: graph.n(),
            m: graph.edge_count(),
            lambda: lambda.get(),
            lenient,
        },
        vertices: (0..graph.n())
            .map(|u| VertexRow {
                vertex: u,
                transmission: table.transmission[u],
                centrality: table.centrality[u],
                networkness: table.networkness[u],
                surplus: table.surplus[u],
            })
            .collect(),
        edges: graph
            .edges()
            .iter()
            .enumerate()
            .map(|(id, &(u, v))| EdgeRow { u, v, betweenness: table.edge_betweenness[id] })
            .collect(),
        aggregates: summary,
        balance: Balance {
            sum_transmission: sum_t,
            sum_centrality: sum_c,
            abs_difference: (sum_t - sum_c).abs(),
        },
    };
    let rendered = match format {
        Format::Json => to_json(&record),
        Format::Csv => {
            if let Some(path) = &edges_out {
                let mut csv = String::from("u,v,betweenness\n");
                for e in &record.edges {
                    let _ = writeln!(csv, "{},{},{}", e.u, e.v, e.betweenness);
                }
                fs::write(path, csv).map_err(|e| format!("writing {}: {e}", path.display()))?;
            }
            let mut csv = String::from("vertex,transmission,centrality,networkness,surplus\n");
            for r in &record.vertices {
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{}",
                    r.vertex, r.transmission, r.centrality, r.networkness, r.surplus
                );
            }
            csv
        }
        Format::Table => render_table(&record),
    };
    emit(&rendered, &out)?;
    Ok(ExitCode::SUCCESS)
}

fn render_table(record: &ComputeRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "graph {} (n={}, m={}, lambda={})",
        record.inputs.graph, record.inputs.n, record.inputs.m, record.inputs.lambda
    );
    let _ = writeln!(
        s,
        "{:>6} {:>14} {:>14} {:>14} {:>14}",
        "vertex", "transmission", "centrality", "networkness", "surplus"
    );
    for r in &record.vertices {
        let _ = writeln!(
            s,
            "{:>6} {:>14.9} {:>14.9} {:>14.9} {:>14.9}",
            r.vertex, r.transmission, r.centrality, r.networkness, r.surplus
        );
    }
    let _ = writeln!(s, "\n{:>6} {:>14}", "edge", "betweenness");
    for e in &record.edges {
        let _ = writeln!(s, "{:>2}-{:<3} {:>14.9}", e.u, e.v, e.betweenness);
    }
    let a = &record.aggregates;
    let _ = writeln!(s);
    for (name, ex) in [
        ("min transmission", &a.min_transmission),
        ("max transmission", &a.max_transmission),
        ("min centrality", &a.min_centrality),
        ("max centrality", &a.max_centrality),
        ("min networkness", &a.min_networkness),
        ("max networkness", &a.max_networkness),
        ("min surplus", &a.min_surplus),
        ("max surplus", &a.max_surplus),
    ] {
        let _ = writeln!(s, "{name:>16}  {:>14.9}  at vertex {}", ex.value, ex.vertex);
    }
    let _ = writeln!(
        s,
        "totals: transmission {:.9}, centrality {:.9}, difference {:.3e}",
        record.balance.sum_transmission,
        record.balance.sum_centrality,
        record.balance.abs_difference
    );
    s
}

#[derive(Serialize)]
struct BoundsRecord {
    schema_version: &'static str,
    command: &'static str,
    bounds: BoundSet,
    stationary: StationaryPoints,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'static str>,
}

fn bounds(n: usize, lambda: f64) -> Result<ExitCode, String> {
    let lambda = parse_lambda(lambda)?;
    if n < 2 {
        return Err(format!("bounds need at least 2 vertices, got {n}"));
    }
    let record = BoundsRecord {
        schema_version: SCHEMA_VERSION,
        command: "bounds",
        bounds: descriptor_bounds(n, lambda),
        stationary: stationary_points(n, lambda),
        note: (lambda.get() >= 0.5).then_some(
            "the flat-graph caps on the smallest transmission and centrality hold only for lambda below one half and are omitted",
        ),
    };
    emit(&to_json(&record), &None)?;
    Ok(ExitCode::SUCCESS)
}

fn gen(
    family: Family,
    n: usize,
    d: Option<usize>,
    offsets: Option<Vec<usize>>,
    out: Option<PathBuf>,
) -> Result<ExitCode, String> {
    if d.is_some() && !matches!(family, Family::Broom) {
        return Err("--d only applies to the broom family".into());
    }
    if offsets.is_some() && !matches!(family, Family::Circulant) {
        return Err("--offsets only applies to the circulant family".into());
    }
    let (graph, comment): (Graph, String) = match family {
        Family::Path => (generators::path(n).map_err(|e| e.to_string())?, format!("family=path n={n}")),
        Family::Star => (generators::star(n).map_err(|e| e.to_string())?, format!("family=star n={n}")),
        Family::Complete => (
            generators::complete(n).map_err(|e| e.to_string())?,
            format!("family=complete n={n}"),
        ),
        Family::Cycle => (generators::cycle(n).map_err(|e| e.to_string())?, format!("family=cycle n={n}")),
        Family::Broom => {
            let d = d.ok_or("the broom family needs --d")?;
            (
                generators::broom(n, d).map_err(|e| e.to_string())?,
                format!("family=broom n={n} d={d}"),
            )
        }
        Family::Circulant => {
            let offsets = offsets.ok_or("the circulant family needs --offsets")?;
            let rendered = offsets
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(",");
            (
                generators::circulant(n, &offsets).map_err(|e| e.to_string())?,
                format!("family=circulant n={n} offsets={rendered}"),
            )
        }
    };
    emit(&write_edge_list(&graph, &[&comment]), &out)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyRecord<R: Serialize> {
    schema_version: &'static str,
    command: &'static str,
    mode: &'static str,
    report: R,
}

fn verify(
    n: usize,
    lambda: f64,
    mode: Mode,
    jobs: usize,
    allow_large: bool,
) -> Result<ExitCode, String> {
    let lambda = parse_lambda(lambda)?;
    match mode {
        Mode::Claims => {
            let report = verify_claims(n, lambda, jobs, allow_large).map_err(|e| e.to_string())?;
            let ok = report.all_verified;
            let record = VerifyRecord {
                schema_version: SCHEMA_VERSION,
                command: "verify",
                mode: "claims",
                report,
            };
            emit(&to_json(&record), &None)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Mode::Conjecture => {
            let report =
                probe_conjecture(n, lambda, jobs, allow_large).map_err(|e| e.to_string())?;
            let ok = !report.asserted || report.cycle_is_minimizer;
            let record = VerifyRecord {
                schema_version: SCHEMA_VERSION,
                command: "verify",
                mode: "conjecture",
                report,
            };
            emit(&to_json(&record), &None)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Mode::Open => {
            let report =
                probe_open_problems(n, lambda, jobs, allow_large).map_err(|e| e.to_string())?;
            let record = VerifyRecord {
                schema_version: SCHEMA_VERSION,
                command: "verify",
                mode: "open",
                report,
            };
            emit(&to_json(&record), &None)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
