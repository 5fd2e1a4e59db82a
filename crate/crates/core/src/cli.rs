//! Command-line front end.
//!
//! Exit codes: 0 when a predicate holds or a witness is found, 1 when it
//! fails or there is no witness, 2 on any error. Informational commands
//! exit 0. With `--json` every command prints one JSON document with
//! sorted keys.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{DualGraph, Multidegree, VertexSet};
use crate::io::{
    multidegree_json, orientation_json, parse_multidegree_literal, parse_orientation_literal,
    read_document, to_pretty, vertex_set_json,
};
use crate::orientation::{
    admits_acyclic_orientation, find_orientation, is_acyclic, is_totally_cyclic, minty_decompose,
    sources, MintyWitness, Orientation,
};
use crate::semistability::{
    enumerate_semistable, is_stable, reduce_down, reduce_up, residual, semistability_witness,
    stability_witness, ReductionTarget,
};
use crate::theta::{
    degree_g_criterion, degree_g_minus_2_criterion, theta_components, theta_exists, ThetaWitness,
};
use crate::fixtures;

#[derive(Debug, Parser)]
#[command(name = "semistab", version, about = "Semistable multidegrees and orientations of dual graphs")]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Source {
    /// Bundled graph: fig1, ex44k<K>, ex54, ex55, ex63, ex66, ex67.
    #[arg(long, conflicts_with = "graph")]
    fixture: Option<String>,

    /// Graph document (JSON).
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct Degree {
    /// Comma-separated integers in vertex order, e.g. -1,3.
    #[arg(long, allow_hyphen_values = true)]
    multidegree: Option<String>,
}

#[derive(Debug, Args)]
struct Oriented {
    /// Comma-separated ab/ba/loop tokens in edge order.
    #[arg(long)]
    orientation: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a graph and report its basic invariants.
    Validate {
        #[command(flatten)]
        source: Source,
    },
    /// Genus of the graph, or of the subcurve given by --vertex.
    Genus {
        #[command(flatten)]
        source: Source,
        #[arg(long = "vertex")]
        vertices: Vec<String>,
    },
    /// Canonical multidegree.
    Canonical {
        #[command(flatten)]
        source: Source,
    },
    /// Semistability and stability of a multidegree.
    Check {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
    },
    /// Orientation realizing a multidegree. With --vertex, the degree g or
    /// g-2 cut criterion at that vertex.
    Orient {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        vertex: Option<String>,
    },
    /// Acyclic realization of a multidegree, or acyclicity of an orientation.
    Acyclic {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        orientation: Option<String>,
    },
    /// Directed cycle or directed cut through an edge.
    Minty {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        oriented: Oriented,
        #[arg(long)]
        edge: usize,
    },
    /// Whether the effective locus in degree g-1 is a divisor.
    Theta {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
    },
    /// Subcurves indexing effective-locus components for an orientation.
    Components {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        oriented: Oriented,
    },
    /// All semistable multidegrees of a total degree, one per line.
    Enumerate {
        #[command(flatten)]
        source: Source,
        #[arg(long, allow_hyphen_values = true)]
        total: i64,
    },
    /// Effective e moving a semistable multidegree to degree g, g-1 or g-2.
    Reduce {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
        #[arg(long)]
        target: ReductionTarget,
    },
    /// Residual multidegree.
    Residual {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        degree: Degree,
    },
    /// List the bundled graphs.
    Fixtures,
}

struct Loaded {
    graph: DualGraph,
    degree: Option<Multidegree>,
}

impl Source {
    fn load(&self) -> Result<Loaded> {
        match (&self.fixture, &self.graph) {
            (Some(name), _) => {
                let graph = fixtures::by_name(name)
                    .ok_or_else(|| Error::Precondition(format!("unknown fixture `{name}`")))?;
                Ok(Loaded { graph, degree: None })
            }
            (None, Some(path)) => {
                let (graph, degree) = read_document(path)?;
                Ok(Loaded { graph, degree })
            }
            (None, None) => Err(Error::Precondition("one of --fixture or --graph is required".into())),
        }
    }
}

impl Loaded {
    fn multidegree(&self, degree: &Degree) -> Result<Multidegree> {
        match (&degree.multidegree, &self.degree) {
            (Some(text), _) => parse_multidegree_literal(&self.graph, text),
            (None, Some(d)) => Ok(d.clone()),
            (None, None) => Err(Error::Precondition(
                "a multidegree is required: pass --multidegree or embed one in the graph document".into(),
            )),
        }
    }
}

/// Command result: exit code, human text, structured record.
struct Outcome {
    code: i32,
    text: String,
    record: Value,
}

impl Outcome {
    fn info(text: String, record: Value) -> Self {
        Outcome { code: 0, text, record }
    }

    fn verdict(ok: bool, text: String, record: Value) -> Self {
        Outcome {
            code: if ok { 0 } else { 1 },
            text,
            record,
        }
    }
}

fn ids(graph: &DualGraph, y: &VertexSet) -> Value {
    vertex_set_json(graph, y)
}

fn opt_set(graph: &DualGraph, y: &Option<VertexSet>) -> Value {
    y.as_ref().map_or(Value::Null, |y| ids(graph, y))
}

fn values(d: &Multidegree) -> Value {
    Value::from(d.values().to_vec())
}

fn dispatch(command: &Command) -> Result<Outcome> {
    match command {
        Command::Validate { source } => {
            let l = source.load()?;
            let g = &l.graph;
            let record = json!({
                "edges": g.num_edges(),
                "genus": g.genus(),
                "multidegree": l.degree.as_ref().map(|d| multidegree_json(g, d)),
                "stable_curve": g.is_stable_curve(),
                "valid": true,
                "vertices": g.num_vertices(),
            });
            let text = format!(
                "valid: {} vertices, {} edges, genus {}, {}",
                g.num_vertices(),
                g.num_edges(),
                g.genus(),
                if g.is_stable_curve() { "stable curve" } else { "not a stable curve" }
            );
            Ok(Outcome::info(text, record))
        }
        Command::Genus { source, vertices } => {
            let l = source.load()?;
            let g = &l.graph;
            if vertices.is_empty() {
                return Ok(Outcome::info(
                    g.genus().to_string(),
                    json!({"genus": g.genus(), "subcurve": Value::Null}),
                ));
            }
            let y = g.vertex_set(vertices)?;
            let genus = g.subcurve_genus(&y)?;
            Ok(Outcome::info(
                genus.to_string(),
                json!({"genus": genus, "subcurve": ids(g, &y)}),
            ))
        }
        Command::Canonical { source } => {
            let l = source.load()?;
            let k = l.graph.canonical_multidegree();
            Ok(Outcome::info(k.to_string(), json!({"canonical": values(&k)})))
        }
        Command::Check { source, degree } => {
            let l = source.load()?;
            let g = &l.graph;
            let d = l.multidegree(degree)?;
            let violated = semistability_witness(g, &d)?;
            let semistable = violated.is_none();
            let (stable, text) = match &violated {
                Some(y) => (false, format!("not semistable, violated on {}", g.format_set(y))),
                None => {
                    if is_stable(g, &d)? {
                        (true, "semistable, stable".to_string())
                    } else {
                        let y = stability_witness(g, &d)?.expect("non-stable has a witness");
                        (false, format!("semistable, not stable, equality on {}", g.format_set(&y)))
                    }
                }
            };
            let tight = if semistable && !stable { stability_witness(g, &d)? } else { None };
            let record = json!({
                "multidegree": values(&d),
                "semistable": semistable,
                "stable": stable,
                "tight_on": opt_set(g, &tight),
                "violated_on": opt_set(g, &violated),
            });
            Ok(Outcome::verdict(semistable, text, record))
        }
        Command::Orient { source, degree, vertex } => {
            let l = source.load()?;
            let g = &l.graph;
            let d = l.multidegree(degree)?;
            let found = match vertex {
                None => find_orientation(g, &d)?,
                Some(id) => {
                    let v = g.vertex_index(id)?;
                    if d.total() == g.genus() {
                        degree_g_criterion(g, &d, v)?
                    } else if d.total() == g.genus() - 2 {
                        degree_g_minus_2_criterion(g, &d, v)?
                    } else {
                        return Err(Error::Precondition(format!(
                            "with --vertex the total degree must be g = {} or g - 2 = {}, got {}",
                            g.genus(),
                            g.genus() - 2,
                            d.total()
                        )));
                    }
                }
            };
            Ok(witness_outcome(found))
        }
        Command::Acyclic { source, degree, orientation } => {
            let l = source.load()?;
            let g = &l.graph;
            if let Some(text) = orientation {
                let o = parse_orientation_literal(g, text)?;
                let acyclic = is_acyclic(g, &o)?;
                let cyclic = is_totally_cyclic(g, &o)?;
                let srcs: Vec<&str> = sources(g, &o)?.into_iter().map(|v| g.id(v)).collect();
                let text = format!(
                    "{}, {}, sources: {}",
                    if acyclic { "acyclic" } else { "not acyclic" },
                    if cyclic { "totally cyclic" } else { "not totally cyclic" },
                    if srcs.is_empty() { "none".to_string() } else { srcs.join(", ") }
                );
                let record = json!({
                    "acyclic": acyclic,
                    "sources": srcs,
                    "totally_cyclic": cyclic,
                });
                return Ok(Outcome::verdict(acyclic, text, record));
            }
            let d = l.multidegree(degree)?;
            Ok(witness_outcome(admits_acyclic_orientation(g, &d)?))
        }
        Command::Minty { source, oriented, edge } => {
            let l = source.load()?;
            let g = &l.graph;
            let o = parse_orientation_literal(g, &oriented.orientation)?;
            let w = minty_decompose(g, &o, *edge)?;
            let list = |e: &[usize]| e.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
            let (text, record) = match &w {
                MintyWitness::DirectedCycle { edges } => (
                    format!("cycle: {}", list(edges)),
                    json!({"edges": edges, "kind": "cycle", "sink_side": Value::Null}),
                ),
                MintyWitness::DirectedCut { edges, sink_side } => (
                    format!("cut toward {}: {}", g.format_set(sink_side), list(edges)),
                    json!({"edges": edges, "kind": "cut", "sink_side": ids(g, sink_side)}),
                ),
            };
            Ok(Outcome::info(text, record))
        }
        Command::Theta { source, degree } => {
            let l = source.load()?;
            let g = &l.graph;
            let d = l.multidegree(degree)?;
            let v = theta_exists(g, &d)?;
            let (witness_text, witness) = match &v.witness {
                None => ("none".to_string(), Value::Null),
                Some(ThetaWitness::Vertex(x)) => (
                    format!("vertex {}", g.id(*x)),
                    json!({"vertex": g.id(*x)}),
                ),
                Some(ThetaWitness::Orientation(o)) => (
                    format!("orientation {o}"),
                    json!({"orientation": orientation_json(o)}),
                ),
                Some(ThetaWitness::CyclicOrientation { orientation, cycle }) => (
                    format!(
                        "orientation {orientation}, cycle {}",
                        cycle.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")
                    ),
                    json!({"cycle": cycle, "orientation": orientation_json(orientation)}),
                ),
            };
            let text = format!(
                "{}, reason: {}, witness: {witness_text}",
                if v.exists { "exists" } else { "does not exist" },
                v.reason.as_str()
            );
            let record = json!({
                "exists": v.exists,
                "reason": v.reason,
                "semistable": v.semistable,
                "witness": witness,
            });
            Ok(Outcome::verdict(v.exists, text, record))
        }
        Command::Components { source, oriented } => {
            let l = source.load()?;
            let g = &l.graph;
            let o = parse_orientation_literal(g, &oriented.orientation)?;
            let comps = theta_components(g, &o)?;
            let text = if comps.is_empty() {
                "none".to_string()
            } else {
                comps.iter().map(|y| g.format_set(y)).collect::<Vec<_>>().join("\n")
            };
            let record = json!({
                "components": comps.iter().map(|y| ids(g, y)).collect::<Vec<_>>(),
            });
            Ok(Outcome::verdict(!comps.is_empty(), text, record))
        }
        Command::Enumerate { source, total } => {
            let l = source.load()?;
            let list = enumerate_semistable(&l.graph, *total)?;
            let text = list.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n");
            let record = json!({
                "multidegrees": list.iter().map(values).collect::<Vec<_>>(),
                "total": total,
            });
            Ok(Outcome::info(text, record))
        }
        Command::Reduce { source, degree, target } => {
            let l = source.load()?;
            let g = &l.graph;
            let d = l.multidegree(degree)?;
            let aim = target.degree(g.genus());
            let downward = match target {
                ReductionTarget::Genus => true,
                ReductionTarget::GenusMinusTwo => false,
                ReductionTarget::GenusMinusOne => d.total() >= aim,
            };
            let (e, result) = if downward {
                let e = reduce_down(g, &d, *target)?;
                let r = &d - &e;
                (e, r)
            } else {
                let e = reduce_up(g, &d, *target)?;
                let r = &d + &e;
                (e, r)
            };
            let text = format!(
                "e = {e}, d {} e = {result}",
                if downward { "-" } else { "+" }
            );
            let record = json!({
                "direction": if downward { "down" } else { "up" },
                "e": values(&e),
                "result": values(&result),
                "target": target.to_string(),
            });
            Ok(Outcome::info(text, record))
        }
        Command::Residual { source, degree } => {
            let l = source.load()?;
            let d = l.multidegree(degree)?;
            let r = residual(&l.graph, &d)?;
            Ok(Outcome::info(r.to_string(), json!({"residual": values(&r)})))
        }
        Command::Fixtures => {
            let list = fixtures::catalog();
            let text = list
                .iter()
                .map(|f| format!("{:<8} {}", f.name, f.summary))
                .collect::<Vec<_>>()
                .join("\n");
            let record = json!({
                "fixtures": list
                    .iter()
                    .map(|f| json!({
                        "edges": f.graph.num_edges(),
                        "genus": f.graph.genus(),
                        "name": f.name,
                        "summary": f.summary,
                        "vertices": f.graph.num_vertices(),
                    }))
                    .collect::<Vec<_>>(),
            });
            Ok(Outcome::info(text, record))
        }
    }
}

fn witness_outcome(found: Option<Orientation>) -> Outcome {
    match found {
        Some(o) => Outcome::verdict(
            true,
            o.to_string(),
            json!({"found": true, "orientation": orientation_json(&o)}),
        ),
        None => Outcome::verdict(
            false,
            "none".to_string(),
            json!({"found": false, "orientation": Value::Null}),
        ),
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// exit code and everything to print. Errors come back as exit code 2 with
/// the message.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => {
            let body = if cli.json {
                to_pretty(&out.record)
            } else {
                let mut t = out.text;
                if !t.ends_with('\n') {
                    t.push('\n');
                }
                t
            };
            (out.code, body)
        }
        Err(e) => {
            let body = if cli.json {
                to_pretty(&json!({"error": e.to_string()}))
            } else {
                format!("error: {e}\n")
            };
            (2, body)
        }
    }
}
