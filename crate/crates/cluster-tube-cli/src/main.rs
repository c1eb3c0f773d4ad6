//! `ctube`: command-line surface over the cluster-tube library.
//!
//! Subcommands: `xvar`, `index`, `enumerate`, `mutate`, `verify`, `graph`.
//! All output is deterministic; errors go to stderr with nothing written to
//! the selected output stream.
//!
//! Exit codes: 0 success, 1 failing verification check, 2 domain/usage error,
//! 3 mutation target absent from the given set, 4 node limit exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use cluster_tube::character::{index, x_closed_form, x_of_rigid_sum};
use cluster_tube::cluster::{enumerate_exchange_graph, ClusterError, Seed};
use cluster_tube::tube::{
    enumerate_maximal_rigid, exchange_matrix, exchange_triangles, ext1_dim, rigid_indecomposables,
    MaximalRigid, TubeObject,
};
use cluster_tube::verify::{
    check_all, check_bijection, check_cluster_structure, check_mutation_relations,
    check_positivity_and_laurent, VerificationReport,
};
use serde_json::json;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

/// Largest rank the CLI accepts; keeps every enumeration desk-scale.
const RANK_CEILING: usize = 12;
const DEFAULT_MAX_NODES: usize = 1_000_000;

#[derive(Parser)]
#[command(
    name = "ctube",
    version,
    about = "Exact cluster characters and exchange combinatorics of cluster tubes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EnumKind {
    MaximalRigid,
    Rigid,
    Variables,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Mutation,
    Bijection,
    ClusterStructure,
    Positivity,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster character of a rigid indecomposable, as a Laurent polynomial.
    Xvar {
        #[arg(long)]
        rank: usize,
        /// Object as `a,b` (or `(a,b)`).
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Index of a rigid indecomposable: coefficients over [T_1..T_{n-1}].
    Index {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List maximal rigid objects, rigid indecomposables, or cluster variables.
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum)]
        kind: EnumKind,
        /// Print the cardinality only.
        #[arg(long)]
        count: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exchange data at one summand of a maximal rigid object.
    Mutate {
        #[arg(long)]
        rank: usize,
        /// Maximal rigid object as `(a,b)+(c,d)+...`.
        #[arg(long)]
        rigid: String,
        /// The summand to mutate, as `(a,b)`.
        #[arg(long)]
        at: String,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Machine-check the mutation, bijection, cluster-structure and
    /// positivity statements at the given rank.
    Verify {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "all")]
        check: CheckKind,
        #[arg(long, value_enum, default_value = "text")]
        format: TextOrJson,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Exchange graph of maximal rigid objects (or of seeds with --seeds).
    Graph {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "dot")]
        format: GraphFormat,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
        /// Walk the seed exchange graph instead of the maximal rigid one.
        #[arg(long)]
        seeds: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, output, code)) => {
            let payload = if text.ends_with('\n') {
                text
            } else {
                text + "\n"
            };
            match output {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, payload) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{payload}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

type CmdOutput = (String, Option<PathBuf>, u8);

fn run(command: Command) -> Result<CmdOutput, CliError> {
    match command {
        Command::Xvar {
            rank,
            object,
            format,
            output,
        } => {
            check_rank(rank)?;
            let x = parse_object(&object, rank)?;
            require_rigid(&x)?;
            let value = x_closed_form(&x).map_err(|e| CliError::usage(e.to_string()))?;
            let text = match format {
                TextOrJson::Text => value.canonical_text(),
                TextOrJson::Json => serde_json::to_string_pretty(&value.to_json()).unwrap(),
            };
            Ok((text, output, 0))
        }
        Command::Index {
            rank,
            object,
            format,
            output,
        } => {
            check_rank(rank)?;
            let x = parse_object(&object, rank)?;
            require_rigid(&x)?;
            let v = index(&x).map_err(|e| CliError::usage(e.to_string()))?;
            let text = match format {
                TextOrJson::Text => v.to_string(),
                TextOrJson::Json => json!({ "coeffs": v.coeffs() }).to_string(),
            };
            Ok((text, output, 0))
        }
        Command::Enumerate {
            rank,
            kind,
            count,
            format,
            max_nodes,
            output,
        } => {
            check_rank(rank)?;
            let text = run_enumerate(rank, kind, count, format, max_nodes)?;
            Ok((text, output, 0))
        }
        Command::Mutate {
            rank,
            rigid,
            at,
            format,
            output,
        } => {
            check_rank(rank)?;
            let text = run_mutate(rank, &rigid, &at, format)?;
            Ok((text, output, 0))
        }
        Command::Verify {
            rank,
            check,
            format,
            output,
        } => {
            check_rank(rank)?;
            let report = match check {
                CheckKind::Mutation => check_mutation_relations(rank),
                CheckKind::Bijection => check_bijection(rank),
                CheckKind::ClusterStructure => check_cluster_structure(rank),
                CheckKind::Positivity => check_positivity_and_laurent(rank),
                CheckKind::All => check_all(rank),
            };
            let text = match format {
                TextOrJson::Json => report.to_json_string(),
                TextOrJson::Text => render_report(&report),
            };
            let code = if report.all_pass() { 0 } else { 1 };
            Ok((text, output, code))
        }
        Command::Graph {
            rank,
            format,
            max_nodes,
            seeds,
            output,
        } => {
            check_rank(rank)?;
            let text = if seeds {
                run_seed_graph(rank, format, max_nodes)?
            } else {
                run_rigid_graph(rank, format)?
            };
            Ok((text, output, 0))
        }
    }
}

fn check_rank(rank: usize) -> Result<(), CliError> {
    if !(2..=RANK_CEILING).contains(&rank) {
        return Err(CliError::usage(format!(
            "rank must be between 2 and {RANK_CEILING}, got {rank}"
        )));
    }
    Ok(())
}

fn require_rigid(x: &TubeObject) -> Result<(), CliError> {
    if x.is_zero() || !x.is_rigid() {
        return Err(CliError::usage(format!(
            "object {x} is not a nonzero rigid indecomposable: rigidity requires quasi-length between 1 and {}",
            x.rank() - 1
        )));
    }
    Ok(())
}

/// Accepts `a,b` or `(a,b)`, with optional whitespace.
fn parse_object(spec: &str, rank: usize) -> Result<TubeObject, CliError> {
    let cleaned: String = spec
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
        .collect();
    let parts: Vec<&str> = cleaned.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::usage(format!(
            "cannot parse object {spec:?}: expected `a,b`"
        )));
    }
    let a: i64 = parts[0]
        .parse()
        .map_err(|_| CliError::usage(format!("bad socle position {:?}", parts[0])))?;
    let b: usize = parts[1]
        .parse()
        .map_err(|_| CliError::usage(format!("bad quasi-length {:?}", parts[1])))?;
    Ok(TubeObject::new(rank, a, b))
}

fn parse_rigid_spec(spec: &str, rank: usize) -> Result<Vec<TubeObject>, CliError> {
    spec.split('+')
        .map(|part| parse_object(part, rank))
        .collect()
}

fn display_pair(x: &TubeObject) -> String {
    if x.is_zero() {
        "0".to_string()
    } else {
        format!("({},{})", x.socle(), x.quasi_length())
    }
}

fn run_enumerate(
    rank: usize,
    kind: EnumKind,
    count: bool,
    format: TextOrJson,
    max_nodes: usize,
) -> Result<String, CliError> {
    match kind {
        EnumKind::MaximalRigid => {
            let sets = enumerate_maximal_rigid(rank).map_err(|e| CliError::usage(e.to_string()))?;
            if count {
                return Ok(sets.len().to_string());
            }
            Ok(match format {
                TextOrJson::Text => sets
                    .iter()
                    .map(|r| {
                        r.summands()
                            .iter()
                            .map(display_pair)
                            .collect::<Vec<_>>()
                            .join("+")
                    })
                    .collect::<Vec<_>>()
                    .join("\n"),
                TextOrJson::Json => {
                    let items: Vec<serde_json::Value> = sets
                        .iter()
                        .map(|r| serde_json::from_str(&r.to_json_string()).unwrap())
                        .collect();
                    serde_json::to_string_pretty(&items).unwrap()
                }
            })
        }
        EnumKind::Rigid => {
            let objs = rigid_indecomposables(rank);
            if count {
                return Ok(objs.len().to_string());
            }
            Ok(match format {
                TextOrJson::Text => objs
                    .iter()
                    .map(|o| o.to_string())
                    .collect::<Vec<_>>()
                    .join("\n"),
                TextOrJson::Json => {
                    let items: Vec<[usize; 2]> =
                        objs.iter().map(|o| [o.socle(), o.quasi_length()]).collect();
                    serde_json::to_string_pretty(&items).unwrap()
                }
            })
        }
        EnumKind::Variables => {
            let a_t = exchange_matrix(&MaximalRigid::initial(rank))
                .map_err(|e| CliError::usage(e.to_string()))?;
            let graph = enumerate_exchange_graph(&Seed::initial(a_t), max_nodes)
                .map_err(map_cluster_error)?;
            if count {
                return Ok(graph.variables().len().to_string());
            }
            Ok(match format {
                TextOrJson::Text => graph
                    .variables()
                    .iter()
                    .map(|p| p.canonical_text())
                    .collect::<Vec<_>>()
                    .join("\n"),
                TextOrJson::Json => {
                    let items: Vec<_> = graph.variables().iter().map(|p| p.to_json()).collect();
                    serde_json::to_string_pretty(&items).unwrap()
                }
            })
        }
    }
}

fn map_cluster_error(e: ClusterError) -> CliError {
    match e {
        ClusterError::NodeLimitExceeded { .. } => CliError {
            code: 4,
            message: e.to_string(),
        },
        other => CliError::usage(other.to_string()),
    }
}

fn run_mutate(rank: usize, rigid: &str, at: &str, format: TextOrJson) -> Result<String, CliError> {
    let summands = parse_rigid_spec(rigid, rank)?;
    let r = MaximalRigid::new(rank, summands).map_err(|e| CliError::usage(e.to_string()))?;
    let target = parse_object(at, rank)?;
    if !r.contains(&target) {
        return Err(CliError {
            code: 3,
            message: format!("object {target} is not a summand of {r}"),
        });
    }
    let tri = exchange_triangles(&r, &target).map_err(|e| CliError::usage(e.to_string()))?;
    let x_m = x_closed_form(&target).map_err(|e| CliError::usage(e.to_string()))?;
    let x_partner = x_closed_form(&tri.partner).map_err(|e| CliError::usage(e.to_string()))?;
    let lhs = x_m.mul(&x_partner);
    let rhs = x_of_rigid_sum(&tri.e)
        .map_err(|e| CliError::usage(e.to_string()))?
        .add(&x_of_rigid_sum(&tri.e_prime).map_err(|e| CliError::usage(e.to_string()))?);
    let verified = lhs == rhs;
    debug_assert_eq!(tri.ext_dim, ext1_dim(&target, &tri.partner));

    match format {
        TextOrJson::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "partner: {}", display_pair(&tri.partner));
            let _ = writeln!(out, "extDim: {}", tri.ext_dim);
            let _ = writeln!(out, "E: {}", tri.e);
            let _ = writeln!(out, "E': {}", tri.e_prime);
            let _ = writeln!(out, "X[M]*X[M*]: {}", lhs.canonical_text());
            let _ = writeln!(out, "X[E]+X[E']: {}", rhs.canonical_text());
            let _ = write!(out, "identity: {}", if verified { "ok" } else { "VIOLATED" });
            Ok(out)
        }
        TextOrJson::Json => Ok(serde_json::to_string_pretty(&json!({
            "partner": [tri.partner.socle(), tri.partner.quasi_length()],
            "extDim": tri.ext_dim,
            "e": tri.e.summands().iter().map(|s| [s.socle(), s.quasi_length()]).collect::<Vec<_>>(),
            "ePrime": tri.e_prime.summands().iter().map(|s| [s.socle(), s.quasi_length()]).collect::<Vec<_>>(),
            "product": lhs.to_json(),
            "middleSum": rhs.to_json(),
            "identity": verified,
        }))
        .unwrap()),
    }
}

fn render_report(report: &VerificationReport) -> String {
    let mut out = String::new();
    for check in &report.checks {
        let flag = if check.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "[{flag}] {}: {}", check.name, check.detail);
    }
    let _ = write!(
        out,
        "rank {}: {} checks, {} ms",
        report.rank,
        report.checks.len(),
        report.elapsed_ms
    );
    out
}

fn run_rigid_graph(rank: usize, format: GraphFormat) -> Result<String, CliError> {
    let sets = enumerate_maximal_rigid(rank).map_err(|e| CliError::usage(e.to_string()))?;
    let id_of = |r: &MaximalRigid| sets.binary_search(r).expect("canonical set");
    // one directed edge per (node, summand slot); deduplicated for export
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (u, r) in sets.iter().enumerate() {
        for (slot, m) in r.summands().iter().enumerate() {
            let tri = exchange_triangles(r, m).map_err(|e| CliError::usage(e.to_string()))?;
            let mut mutated: Vec<TubeObject> =
                r.summands().iter().filter(|s| *s != m).copied().collect();
            mutated.push(tri.partner);
            let r2 =
                MaximalRigid::new(rank, mutated).map_err(|e| CliError::usage(e.to_string()))?;
            let v = id_of(&r2);
            if u < v {
                edges.push((u, slot + 1, v));
            }
        }
    }
    edges.sort();

    match format {
        GraphFormat::Dot => {
            let mut out = String::from("graph exchange {\n");
            for (id, r) in sets.iter().enumerate() {
                let label: Vec<String> = r.summands().iter().map(display_pair).collect();
                let _ = writeln!(out, "  {id} [label=\"{id}: {}\"];", label.join("+"));
            }
            for (u, dir, v) in &edges {
                let _ = writeln!(out, "  {u} -- {v} [label=\"{dir}\"];");
            }
            out.push_str("}\n");
            Ok(out)
        }
        GraphFormat::Json => {
            let nodes: Vec<serde_json::Value> = sets
                .iter()
                .enumerate()
                .map(|(id, r)| {
                    json!({
                        "id": id,
                        "summands": r.summands().iter().map(|s| [s.socle(), s.quasi_length()]).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let edges: Vec<serde_json::Value> = edges
                .iter()
                .map(|(u, dir, v)| json!({ "from": u, "dir": dir, "to": v }))
                .collect();
            Ok(serde_json::to_string_pretty(&json!({ "nodes": nodes, "edges": edges })).unwrap())
        }
    }
}

fn run_seed_graph(rank: usize, format: GraphFormat, max_nodes: usize) -> Result<String, CliError> {
    let a_t = exchange_matrix(&MaximalRigid::initial(rank))
        .map_err(|e| CliError::usage(e.to_string()))?;
    let graph =
        enumerate_exchange_graph(&Seed::initial(a_t), max_nodes).map_err(map_cluster_error)?;
    Ok(match format {
        GraphFormat::Dot => graph.to_dot(),
        GraphFormat::Json => graph.to_json_string(),
    })
}
