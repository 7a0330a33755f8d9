//! Command-line front end. Every command prints one JSON report.
//!
//! Exit codes: 0 for a passing verification or any query answer, 1 for a
//! failed verification or an internal inconsistency, 2 for usage or input
//! errors (with a one-line diagnostic on stderr).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::choosability::{is_k_choosable, l_coloring, ListAssignment};
use crate::corpus::{enumerate_class, named, random_class_member};
use crate::discharging::{edge_level_audit, final_audit, Charge};
use crate::matcher::{find_configuration, MatchEmbedding};
use crate::plane_graph::PlaneGraph;
use crate::reducibility::{
    catalog, configuration, verify_entry, CatalogResult, ChoosabilityMethod, ConfigId, EntryOutcome,
};
use crate::square::{square, Adjacency, SimpleGraph};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "planesquare",
    version,
    about = "Plane graph squares, list coloring, and discharging audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Size, degrees, faces, and class membership of a graph.
    Inspect { graph: String },
    /// The square of a graph.
    Square { graph: String },
    /// Search for a coloring from the given lists, e.g. `[[1,2],[2,3]]`.
    Color {
        graph: String,
        #[arg(long)]
        lists: String,
    },
    /// Decide k-choosability of the graph (or of its square).
    Choosable {
        graph: String,
        #[arg(short)]
        k: u32,
        /// Ask about the square instead of the graph.
        #[arg(long)]
        square: bool,
    },
    /// Verify one catalog configuration.
    VerifyLemma { id: String },
    /// Verify every catalog configuration.
    VerifyCatalog {
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Find catalog configurations in a graph.
    Match {
        graph: String,
        #[arg(long)]
        config: Option<String>,
    },
    /// Run the discharging rules and audits.
    Discharge {
        graph: String,
        /// Audit only this face.
        #[arg(long)]
        face: Option<usize>,
        /// Include every transfer and sub-rule receipt.
        #[arg(long)]
        ledger: bool,
    },
    /// Write every class member on up to `n` vertices to `out`.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a seeded random class member.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Info,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub outcome: Outcome,
    pub payload: Value,
}

impl RunReport {
    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Pass | Outcome::Info => 0,
            Outcome::Fail => 1,
        }
    }
}

/// What a run printed and how it should exit.
#[derive(Debug, Clone, PartialEq)]
pub struct Invocation {
    pub report: Option<RunReport>,
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Res<T> = Result<T, InputError>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Invocation {
                    report: None,
                    stdout: text,
                    stderr: String::new(),
                    exit_code: 0,
                },
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
                    usage_error("error: a subcommand is required; see --help")
                }
                _ => usage_error(text.lines().next().unwrap_or("error: bad usage")),
            };
        }
    };
    match execute(cli.command) {
        Ok(report) => Invocation {
            stdout: serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
            stderr: String::new(),
            exit_code: report.exit_code(),
            report: Some(report),
        },
        Err(InputError(msg)) => usage_error(&format!("error: {msg}")),
    }
}

fn usage_error(line: &str) -> Invocation {
    Invocation {
        report: None,
        stdout: String::new(),
        stderr: format!("{line}\n"),
        exit_code: 2,
    }
}

/// Loads a graph file, or a built-in example written as `@name`.
fn load(spec: &str) -> Res<PlaneGraph> {
    if let Some(name) = spec.strip_prefix('@') {
        return named(name)
            .map(|g| g.graph)
            .ok_or_else(|| InputError(format!("no built-in graph named `{name}`")));
    }
    let text = fs::read_to_string(spec).map_err(|e| InputError(format!("{spec}: {e}")))?;
    PlaneGraph::from_json(&text).map_err(|e| InputError(format!("{spec}: {e}")))
}

fn report(
    command: &str,
    inputs: Vec<(&str, Value)>,
    outcome: Outcome,
    payload: Value,
) -> RunReport {
    RunReport {
        schema_version: SCHEMA_VERSION,
        command: command.to_string(),
        inputs: inputs
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        outcome,
        payload,
    }
}

fn edges_json(g: &SimpleGraph) -> Value {
    json!(g.edges().iter().map(|e| [e.0, e.1]).collect::<Vec<_>>())
}

fn parse_config(id: &str) -> Res<ConfigId> {
    id.parse::<ConfigId>().map_err(InputError::from)
}

fn execute(command: Command) -> Res<RunReport> {
    match command {
        Command::Inspect { graph } => {
            let g = load(&graph)?;
            let payload = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "degrees": (0..g.vertex_count()).map(|v| g.deg(v)).collect::<Vec<_>>(),
                "face_lengths": (0..g.face_count()).map(|f| g.face_length(f)).collect::<Vec<_>>(),
                "components": g.component_count(),
                "class": g.class_membership(),
            });
            Ok(report(
                "inspect",
                vec![("graph", json!(graph))],
                Outcome::Info,
                payload,
            ))
        }
        Command::Square { graph } => {
            let g = load(&graph)?;
            let sq = square(&g);
            let payload = json!({
                "vertices": sq.vertex_count(),
                "edge_count": sq.edge_count(),
                "complete": sq.is_complete(),
                "edges": edges_json(&sq),
            });
            Ok(report(
                "square",
                vec![("graph", json!(graph))],
                Outcome::Info,
                payload,
            ))
        }
        Command::Color { graph, lists } => {
            let g = load(&graph)?;
            let raw: Vec<Vec<u32>> =
                serde_json::from_str(&lists).map_err(|e| InputError(format!("--lists: {e}")))?;
            let assignment = ListAssignment::from_vecs(&raw);
            let coloring = l_coloring(&SimpleGraph::of(&g), &assignment)
                .map_err(|e| InputError(format!("--lists: {e}")))?;
            let payload = json!({ "colorable": coloring.is_some(), "coloring": coloring });
            Ok(report(
                "color",
                vec![("graph", json!(graph)), ("lists", json!(raw))],
                Outcome::Info,
                payload,
            ))
        }
        Command::Choosable {
            graph,
            k,
            square: sq,
        } => {
            let g = load(&graph)?;
            let h = if sq { square(&g) } else { SimpleGraph::of(&g) };
            let verdict = is_k_choosable(&h, k).map_err(|e| InputError(format!("-k: {e}")))?;
            Ok(report(
                "choosable",
                vec![
                    ("graph", json!(graph)),
                    ("k", json!(k)),
                    ("square", json!(sq)),
                ],
                Outcome::Info,
                serde_json::to_value(&verdict)?,
            ))
        }
        Command::VerifyLemma { id } => {
            let cid = parse_config(&id)?;
            let result = verify_entry(&configuration(cid), ChoosabilityMethod::Atoms);
            let outcome = if result.passed() {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            Ok(report(
                "verify-lemma",
                vec![("id", json!(id))],
                outcome,
                entry_json(&result),
            ))
        }
        Command::VerifyCatalog { report: path } => {
            let results: Vec<CatalogResult> = catalog()
                .iter()
                .map(|c| verify_entry(c, ChoosabilityMethod::Atoms))
                .collect();
            let passed = results.iter().filter(|r| r.passed()).count();
            let outcome = if passed == results.len() {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            let payload = json!({
                "entries": results.len(),
                "passed": passed,
                "results": results.iter().map(entry_json).collect::<Vec<_>>(),
            });
            let mut inputs = vec![];
            if let Some(p) = &path {
                inputs.push(("report", json!(p)));
            }
            let rep = report("verify-catalog", inputs, outcome, payload);
            if let Some(p) = &path {
                write_file(p, &(serde_json::to_string_pretty(&rep)? + "\n"))?;
            }
            Ok(rep)
        }
        Command::Match { graph, config } => {
            let g = load(&graph)?;
            let ids = match &config {
                Some(id) => vec![parse_config(id)?],
                None => ConfigId::ALL.to_vec(),
            };
            let matches: Vec<MatchEmbedding> = ids
                .iter()
                .flat_map(|&id| find_configuration(&g, id))
                .collect();
            let first = matches.first().map(|m| m.config);
            let payload = json!({
                "count": matches.len(),
                "first": first,
                "matches": matches,
            });
            let mut inputs = vec![("graph", json!(graph))];
            if let Some(id) = config {
                inputs.push(("config", json!(id)));
            }
            Ok(report("match", inputs, Outcome::Info, payload))
        }
        Command::Discharge {
            graph,
            face,
            ledger,
        } => {
            let g = load(&graph)?;
            let audit = final_audit(&g)?;
            let faces: Vec<_> = match face {
                Some(f) => vec![edge_level_audit(&g, f)?],
                None => audit.faces.clone(),
            };
            let total: Charge = audit.state.total();
            let mut payload = json!({
                "total_twelfths": total.twelfths(),
                "total": total.to_string(),
                "vertex_charges": audit.state.vertex_charge.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "face_charges": audit.state.face_charge.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "negative": audit.negative,
                "reconciled": audit.reconciled,
                "faces": faces.iter().map(|a| json!({
                    "face": a.face,
                    "length": a.length,
                    "residual_twelfths": a.residual.twelfths(),
                    "edges": a.edges,
                    "reconciled": a.reconciled,
                })).collect::<Vec<_>>(),
            });
            if ledger {
                payload["transfers"] = serde_json::to_value(&audit.state.log)?;
                payload["receipts"] = json!(faces
                    .iter()
                    .map(|a| json!({"face": a.face, "receipts": a.receipts}))
                    .collect::<Vec<_>>());
            }
            let outcome = if audit.reconciled {
                Outcome::Info
            } else {
                Outcome::Fail
            };
            let mut inputs = vec![("graph", json!(graph)), ("ledger", json!(ledger))];
            if let Some(f) = face {
                inputs.push(("face", json!(f)));
            }
            Ok(report("discharge", inputs, outcome, payload))
        }
        Command::Enumerate { n, out } => {
            let graphs = enumerate_class(n)?;
            fs::create_dir_all(&out).map_err(|e| InputError(format!("{}: {e}", out.display())))?;
            let mut files = Vec::new();
            for (i, g) in graphs.iter().enumerate() {
                let name = format!("n{}_{i:05}.json", g.vertex_count());
                write_file(&out.join(&name), &(g.to_json() + "\n"))?;
                files.push(name);
            }
            Ok(report(
                "enumerate",
                vec![("n", json!(n)), ("out", json!(out))],
                Outcome::Info,
                json!({ "count": files.len(), "files": files }),
            ))
        }
        Command::Gen { seed, n } => {
            let g = random_class_member(seed, n)?;
            Ok(report(
                "gen",
                vec![("seed", json!(seed)), ("n", json!(n))],
                Outcome::Info,
                json!({ "graph": g.to_file(), "class": g.class_membership() }),
            ))
        }
    }
}

fn write_file(path: &Path, text: &str) -> Res<()> {
    fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn entry_json(r: &CatalogResult) -> Value {
    let body = match &r.outcome {
        EntryOutcome::Reduction(rep) => json!({
            "condition1_ok": rep.condition1_ok,
            "condition2_ok": rep.condition2_ok,
            "smaller_ok": rep.smaller_ok,
            "choosable": rep.choosable,
            "choosable_if_completed": rep.choosable_if_completed,
            "f_matches_expected": rep.f_matches_expected,
            "computed_f": f_by_label(r.id, &rep.computed_f),
            "induced_square_edges": rep.induced_square.graph.edge_count(),
            "missing_pairs": rep.missing_pairs.iter().map(|e| [e.0, e.1]).collect::<Vec<_>>(),
        }),
        EntryOutcome::Derivation(cases) => json!({
            "cases": cases.iter().map(|c| json!({
                "description": c.description,
                "consequence": c.consequence,
                "premise_ok": c.premise_ok,
                "consequence_ok": c.consequence_ok,
            })).collect::<Vec<_>>(),
        }),
    };
    json!({ "id": r.id, "kind": r.kind, "passed": r.passed(), "report": body })
}

fn f_by_label(id: ConfigId, f: &BTreeMap<usize, i64>) -> Value {
    let c = configuration(id);
    let labels = c
        .generic_instance()
        .map(|i| i.labels.clone())
        .unwrap_or_default();
    let map: BTreeMap<String, i64> = f
        .iter()
        .map(|(&v, &val)| (labels.get(v).cloned().unwrap_or_else(|| v.to_string()), val))
        .collect();
    json!(map)
}
