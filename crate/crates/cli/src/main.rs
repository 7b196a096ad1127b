use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ktorus::genus::{count_torus_embeddings, min_genus_bruteforce, DEFAULT_BUDGET};
use ktorus::graph::format::{parse_edge_lists, parse_graph6_lines, to_graph6};
use ktorus::graph::is_isomorphic;
use ktorus::obstructions::{
    builtin, catalog_from, enumerate_splits, verify_minor_obstruction,
    verify_topological_obstruction, ObstructionKind, VerificationKind, VerificationReport,
    MINOR_ORDER,
};
use ktorus::toroidality::{decide_toroidal, Status, ToroidalityVerdict};
use ktorus::{Graph, OracleError};
use serde::Serialize;
use serde_json::json;

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_CLASS: u8 = 2;
const EXIT_BUDGET: u8 = 3;

const BUNDLED_CATALOG: &str = include_str!("../../core/data/catalog.g6");

#[derive(Parser)]
#[command(
    name = "ktorus",
    version,
    about = "Torus embeddability for graphs with no K3,3 subdivision"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Edgelist,
    Graph6,
}

#[derive(clap::Args)]
struct Input {
    /// Input file; `-` or nothing reads standard input.
    file: Option<PathBuf>,
    /// Use a built-in graph (G1..G11, K5, K33, M) instead of reading input.
    #[arg(long, conflicts_with = "file")]
    name: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: InputFormat,
}

#[derive(Subcommand)]
enum Command {
    /// Decide toroidality of every graph in the input.
    Decide(Input),
    /// Run an obstruction verifier over the catalog.
    VerifyObstructions {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Catalog of `name graph6` lines; defaults to the bundled one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Close a set of graphs under vertex splitting, keeping obstructions.
    Splits {
        #[command(flatten)]
        input: OptionalInput,
    },
    /// Orientable genus, or with --count the number of torus embeddings.
    Genus {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        count: bool,
        /// Search budget; see the README for its meaning per mode.
        #[arg(long, env = "KTORUS_BUDGET", default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Whether two graphs (files or built-in names) are isomorphic.
    Isomorphic {
        first: String,
        second: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: InputFormat,
    },
}

#[derive(clap::Args)]
struct OptionalInput {
    /// File of seed graphs; defaults to G1..G4.
    #[arg(long)]
    seeds: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: InputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Minor,
    Topological,
}

struct CommandResult {
    exit_code: u8,
    payload: String,
}

impl CommandResult {
    fn ok(payload: String) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            payload,
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        CommandResult {
            exit_code: EXIT_INPUT,
            payload: format!("error: {msg}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    // A closed pipe downstream is not an error worth reporting.
    let _ = if result.exit_code == EXIT_INPUT || result.exit_code == EXIT_BUDGET {
        writeln!(std::io::stderr(), "{}", result.payload)
    } else {
        writeln!(std::io::stdout(), "{}", result.payload)
    };
    ExitCode::from(result.exit_code)
}

fn run(cli: &Cli) -> CommandResult {
    match &cli.command {
        Command::Decide(input) => match read_graphs(input) {
            Ok(graphs) => cmd_decide(&graphs, cli.json),
            Err(e) => CommandResult::input_error(e),
        },
        Command::VerifyObstructions { kind, catalog } => {
            cmd_verify(*kind, catalog.as_ref(), cli.json)
        }
        Command::Splits { input } => {
            let seeds = match &input.seeds {
                None => MINOR_ORDER
                    .iter()
                    .map(|n| builtin(n).expect("built-in"))
                    .collect(),
                Some(path) => match read_source(Some(path)).and_then(|t| parse(&t, input.format)) {
                    Ok(g) => g,
                    Err(e) => return CommandResult::input_error(e),
                },
            };
            cmd_splits(&seeds, cli.json)
        }
        Command::Genus {
            input,
            count,
            budget,
        } => match read_graphs(input) {
            Ok(graphs) => cmd_genus(&graphs, *count, *budget, cli.json),
            Err(e) => CommandResult::input_error(e),
        },
        Command::Isomorphic {
            first,
            second,
            format,
        } => match (load_one(first, *format), load_one(second, *format)) {
            (Ok(a), Ok(b)) => {
                let iso = is_isomorphic(&a, &b);
                CommandResult::ok(if cli.json {
                    json!({ "isomorphic": iso }).to_string()
                } else {
                    iso.to_string()
                })
            }
            (Err(e), _) | (_, Err(e)) => CommandResult::input_error(e),
        },
    }
}

fn read_source(file: Option<&PathBuf>) -> Result<String, String> {
    match file {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn parse(text: &str, format: InputFormat) -> Result<Vec<Graph>, String> {
    let graphs = match format {
        InputFormat::Edgelist => parse_edge_lists(text),
        InputFormat::Graph6 => parse_graph6_lines(text),
    }
    .map_err(|e| e.to_string())?;
    if graphs.is_empty() {
        return Err("no graph in input".into());
    }
    Ok(graphs)
}

fn read_graphs(input: &Input) -> Result<Vec<Graph>, String> {
    if let Some(name) = &input.name {
        return builtin(name).map(|g| vec![g]).map_err(|e| e.to_string());
    }
    parse(&read_source(input.file.as_ref())?, input.format)
}

/// A built-in name or a file holding exactly one graph.
fn load_one(arg: &str, format: InputFormat) -> Result<Graph, String> {
    if let Ok(g) = builtin(arg) {
        return Ok(g);
    }
    let mut graphs = parse(&read_source(Some(&PathBuf::from(arg)))?, format)?;
    if graphs.len() != 1 {
        return Err(format!("{arg}: expected one graph, found {}", graphs.len()));
    }
    Ok(graphs.remove(0))
}

fn cmd_decide(graphs: &[Graph], as_json: bool) -> CommandResult {
    let verdicts: Vec<ToroidalityVerdict> = graphs.iter().map(decide_toroidal).collect();
    let exit_code = if verdicts.iter().any(|v| v.status == Status::NotInClass) {
        EXIT_CLASS
    } else {
        EXIT_OK
    };
    let payload = if as_json {
        serde_json::to_string_pretty(&verdicts).expect("serialisable")
    } else {
        verdicts
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("\n")
    };
    CommandResult { exit_code, payload }
}

#[derive(Serialize)]
struct CatalogCheck {
    name: String,
    kind: ObstructionKind,
    expected: bool,
    report: VerificationReport,
}

fn cmd_verify(kind: Kind, catalog: Option<&PathBuf>, as_json: bool) -> CommandResult {
    let text = match catalog {
        None => BUNDLED_CATALOG.to_string(),
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => return CommandResult::input_error(format!("{}: {e}", p.display())),
        },
    };
    let records = match catalog_from(&text) {
        Ok(r) => r,
        Err(e) => return CommandResult::input_error(e),
    };
    let checks: Vec<CatalogCheck> = records
        .into_iter()
        .filter(|r| r.kind != ObstructionKind::Reference)
        .map(|r| {
            let (report, expected) = match kind {
                Kind::Minor => (
                    verify_minor_obstruction(&r.graph),
                    r.kind == ObstructionKind::MinorOrder,
                ),
                Kind::Topological => (verify_topological_obstruction(&r.graph), true),
            };
            CatalogCheck {
                name: r.name,
                kind: r.kind,
                expected,
                report,
            }
        })
        .collect();
    let passed: Vec<&str> = checks
        .iter()
        .filter(|c| c.report.passed)
        .map(|c| c.name.as_str())
        .collect();
    let mismatches: Vec<&str> = checks
        .iter()
        .filter(|c| c.report.passed != c.expected)
        .map(|c| c.name.as_str())
        .collect();
    let kind = match kind {
        Kind::Minor => VerificationKind::Minor,
        Kind::Topological => VerificationKind::Topological,
    };
    let payload = if as_json {
        serde_json::to_string_pretty(&json!({
            "kind": kind,
            "passed": passed,
            "mismatches": mismatches,
            "reports": checks,
        }))
        .expect("serialisable")
    } else {
        let mut lines: Vec<String> = checks
            .iter()
            .map(|c| {
                let verdict = if c.report.passed { "pass" } else { "fail" };
                match c.report.failures.first() {
                    Some(why) if !c.report.passed => format!("{} {verdict} ({why})", c.name),
                    _ => format!("{} {verdict}", c.name),
                }
            })
            .collect();
        lines.push(format!(
            "{} {kind} passes; mismatches: {mismatches:?}",
            passed.len()
        ));
        lines.join("\n")
    };
    CommandResult::ok(payload)
}

fn cmd_splits(seeds: &[Graph], as_json: bool) -> CommandResult {
    let found = enumerate_splits(seeds);
    let named = catalog_from(BUNDLED_CATALOG).expect("bundled catalog is valid");
    let rows: Vec<(String, usize, usize, Option<String>)> = found
        .iter()
        .map(|g| {
            let name = named
                .iter()
                .find(|r| is_isomorphic(&r.graph, g))
                .map(|r| r.name.clone());
            (to_graph6(g), g.vertex_count(), g.edge_count(), name)
        })
        .collect();
    let payload = if as_json {
        let graphs: Vec<_> = rows
            .iter()
            .map(|(g6, v, e, name)| json!({ "graph6": g6, "vertices": v, "edges": e, "catalog_name": name }))
            .collect();
        serde_json::to_string_pretty(&json!({ "count": rows.len(), "graphs": graphs }))
            .expect("serialisable")
    } else {
        let mut lines: Vec<String> = rows
            .iter()
            .map(|(g6, v, e, name)| format!("{g6} {v} {e} {}", name.as_deref().unwrap_or("-")))
            .collect();
        lines.push(format!("{} graphs", rows.len()));
        lines.join("\n")
    };
    CommandResult::ok(payload)
}

fn cmd_genus(graphs: &[Graph], count: bool, budget: u64, as_json: bool) -> CommandResult {
    let results: Result<Vec<usize>, OracleError> = graphs
        .iter()
        .map(|g| {
            if count {
                count_torus_embeddings(g, budget)
            } else {
                min_genus_bruteforce(g, budget)
            }
        })
        .collect();
    let values = match results {
        Ok(v) => v,
        Err(e) => {
            return CommandResult {
                exit_code: EXIT_BUDGET,
                payload: format!("error: {e}"),
            }
        }
    };
    let key = if count { "torus_embeddings" } else { "genus" };
    let payload = if as_json {
        let items: Vec<_> = values.iter().map(|v| json!({ key: v })).collect();
        serde_json::to_string_pretty(&items).expect("serialisable")
    } else {
        values
            .iter()
            .map(|v| format!("{key} {v}"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    CommandResult::ok(payload)
}
