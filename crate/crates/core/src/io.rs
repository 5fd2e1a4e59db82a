//! Graph documents and command-line literals.
//!
//! A graph document is a JSON object:
//!
//! ```json
//! {
//!   "vertices": [{"id": "v1", "weight": 0}, {"id": "v2", "weight": 1}],
//!   "edges": [["v1", "v2"], ["v2", "v2"]],
//!   "multidegree": {"values": {"v1": 0, "v2": 1}}
//! }
//! ```
//!
//! `multidegree` is optional and must give a value for every vertex. Vertex
//! order is list order; edges are addressed by position. Unknown keys are
//! rejected.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::graph::{DualGraph, Edge, Multidegree, Vertex, VertexSet};
use crate::orientation::{Direction, Orientation};

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn object<'a>(value: &'a Value, path: &str, allowed: &[&str]) -> Result<&'a Map<String, Value>> {
    let map = value
        .as_object()
        .ok_or_else(|| parse_err(path, "expected an object"))?;
    if let Some(key) = map.keys().find(|k| !allowed.contains(&k.as_str())) {
        let at = if path.is_empty() { key.clone() } else { format!("{path}.{key}") };
        return Err(parse_err(at, "unknown field"));
    }
    Ok(map)
}

fn field<'a>(map: &'a Map<String, Value>, key: &str, path: &str) -> Result<&'a Value> {
    map.get(key)
        .ok_or_else(|| parse_err(if path.is_empty() { "document" } else { path }, format!("missing field `{key}`")))
}

fn array<'a>(value: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    value
        .as_array()
        .ok_or_else(|| parse_err(path, "expected an array"))
}

fn string<'a>(value: &'a Value, path: &str) -> Result<&'a str> {
    value
        .as_str()
        .ok_or_else(|| parse_err(path, "expected a string"))
}

fn integer(value: &Value, path: &str) -> Result<i64> {
    value
        .as_i64()
        .ok_or_else(|| parse_err(path, "expected an integer"))
}

/// Parses a graph document, returning the graph and its optional multidegree.
pub fn parse_document(text: &str) -> Result<(DualGraph, Option<Multidegree>)> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string())
    })?;
    let top = object(&root, "", &["vertices", "edges", "multidegree"])?;

    let mut vertices = Vec::new();
    let mut index = HashMap::new();
    for (i, v) in array(field(top, "vertices", "")?, "vertices")?.iter().enumerate() {
        let path = format!("vertices[{i}]");
        let obj = object(v, &path, &["id", "weight"])?;
        let id = string(field(obj, "id", &path)?, &format!("{path}.id"))?;
        let wpath = format!("{path}.weight");
        let weight = integer(field(obj, "weight", &path)?, &wpath)?;
        let weight = u32::try_from(weight)
            .map_err(|_| parse_err(&wpath, format!("weight must be a nonnegative integer, got {weight}")))?;
        if index.insert(id.to_string(), i).is_some() {
            return Err(parse_err(format!("{path}.id"), format!("duplicate vertex id `{id}`")));
        }
        vertices.push(Vertex {
            id: id.to_string(),
            weight,
        });
    }

    let mut edges = Vec::new();
    for (i, e) in array(field(top, "edges", "")?, "edges")?.iter().enumerate() {
        let path = format!("edges[{i}]");
        let ends = array(e, &path)?;
        if ends.len() != 2 {
            return Err(parse_err(&path, format!("expected 2 endpoints, got {}", ends.len())));
        }
        let mut idx = [0usize; 2];
        for (k, end) in ends.iter().enumerate() {
            let epath = format!("{path}[{k}]");
            let id = string(end, &epath)?;
            idx[k] = *index
                .get(id)
                .ok_or_else(|| parse_err(&epath, format!("unknown vertex `{id}`")))?;
        }
        edges.push(Edge::new(idx[0], idx[1]));
    }

    let graph = DualGraph::new(vertices, edges)?;
    let degree = match top.get("multidegree") {
        None | Some(Value::Null) => None,
        Some(m) => Some(parse_multidegree_object(&graph, m, "multidegree")?),
    };
    Ok((graph, degree))
}

fn parse_multidegree_object(graph: &DualGraph, value: &Value, path: &str) -> Result<Multidegree> {
    let obj = object(value, path, &["values"])?;
    let vpath = format!("{path}.values");
    let values = field(obj, "values", path)?
        .as_object()
        .ok_or_else(|| parse_err(&vpath, "expected an object"))?;
    let mut out = vec![None; graph.num_vertices()];
    for (id, v) in values {
        let at = format!("{vpath}.{id}");
        let i = graph
            .vertex_index(id)
            .map_err(|_| parse_err(&at, format!("unknown vertex `{id}`")))?;
        out[i] = Some(integer(v, &at)?);
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| parse_err(&vpath, format!("missing value for `{}`", graph.id(i)))))
        .collect::<Result<Vec<_>>>()
        .map(Multidegree::new)
}

/// Reads a graph document; parse locations are prefixed with the path.
pub fn read_document(path: &Path) -> Result<(DualGraph, Option<Multidegree>)> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(path.display().to_string(), e.to_string()))?;
    parse_document(&text).map_err(|e| match e {
        Error::Parse { location, message } => Error::Parse {
            location: format!("{}: {location}", path.display()),
            message,
        },
        other => other,
    })
}

pub fn graph_json(graph: &DualGraph) -> Value {
    json!({
        "vertices": graph
            .vertices()
            .iter()
            .map(|v| json!({"id": v.id, "weight": v.weight}))
            .collect::<Vec<_>>(),
        "edges": graph
            .edges()
            .iter()
            .map(|e| json!([graph.id(e.a), graph.id(e.b)]))
            .collect::<Vec<_>>(),
    })
}

pub fn multidegree_json(graph: &DualGraph, d: &Multidegree) -> Value {
    let values: BTreeMap<&str, i64> = (0..graph.num_vertices()).map(|v| (graph.id(v), d[v])).collect();
    json!({ "values": values })
}

pub fn vertex_set_json(graph: &DualGraph, y: &VertexSet) -> Value {
    Value::from(y.iter().map(|v| graph.id(v)).collect::<Vec<_>>())
}

pub fn orientation_json(o: &Orientation) -> Value {
    Value::from(o.tokens())
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

/// The graph document for `graph`, with `d` embedded when given.
pub fn serialize_document(graph: &DualGraph, d: Option<&Multidegree>) -> String {
    let mut doc = graph_json(graph);
    if let Some(d) = d {
        doc["multidegree"] = multidegree_json(graph, d);
    }
    to_pretty(&doc)
}

/// Comma-separated integers in vertex order, e.g. `-1,3,0`.
pub fn parse_multidegree_literal(graph: &DualGraph, text: &str) -> Result<Multidegree> {
    let values = text
        .split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| parse_err(format!("multidegree[{i}]"), format!("`{}` is not an integer", t.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() != graph.num_vertices() {
        return Err(parse_err(
            "multidegree",
            format!("{} values for {} vertices", values.len(), graph.num_vertices()),
        ));
    }
    Ok(Multidegree::new(values))
}

/// Comma-separated `ab`/`ba`/`loop` tokens in edge order.
pub fn parse_orientation_literal(graph: &DualGraph, text: &str) -> Result<Orientation> {
    let dirs = text
        .split(',')
        .enumerate()
        .map(|(i, t)| {
            t.trim().parse::<Direction>().map_err(|e| match e {
                Error::Parse { message, .. } => parse_err(format!("orientation[{i}]"), message),
                other => other,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Orientation::for_graph(graph, dirs)
}
