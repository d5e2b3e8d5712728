//! The representation file: a JSON document carrying the target graph too.
//!
//! ```text
//! { "n": 2, "d": 1,
//!   "vertices": [ {"id": 0, "l": "0", "r": "1", "labels": [1]}, ... ],
//!   "edges": [[0, 1]] }
//! ```

use std::fmt::Write as _;

use serde::Deserialize;

use super::{Interval, SimRep};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_PARSE_VERTICES};
use crate::labels::{LabelSet, MAX_LABELS};
use crate::rational::Rational;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    n: usize,
    d: usize,
    vertices: Vec<VertexDoc>,
    edges: Vec<[usize; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: usize,
    l: String,
    r: String,
    labels: Vec<usize>,
}

pub fn read_rep(text: &str) -> Result<(Graph, SimRep)> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let doc: Doc = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::schema(if path.is_empty() { "$".into() } else { path }, e.inner().to_string())
    })?;

    if doc.n > MAX_PARSE_VERTICES {
        return Err(Error::schema("n", format!("vertex count exceeds {MAX_PARSE_VERTICES}")));
    }
    if doc.d > MAX_LABELS {
        return Err(Error::schema("d", format!("d exceeds the label cap {MAX_LABELS}")));
    }
    if doc.vertices.len() != doc.n {
        return Err(Error::schema("vertices", format!("expected {} vertices, found {}", doc.n, doc.vertices.len())));
    }

    let mut slots: Vec<Option<(Interval, LabelSet)>> = vec![None; doc.n];
    for (i, v) in doc.vertices.iter().enumerate() {
        let at = |field: &str| format!("vertices[{i}].{field}");
        if v.id >= doc.n {
            return Err(Error::schema(at("id"), format!("id {} out of range", v.id)));
        }
        if slots[v.id].is_some() {
            return Err(Error::schema(at("id"), format!("duplicate id {}", v.id)));
        }
        let l: Rational = v.l.parse().map_err(|e| Error::schema(at("l"), format!("{e}")))?;
        let r: Rational = v.r.parse().map_err(|e| Error::schema(at("r"), format!("{e}")))?;
        if l >= r {
            return Err(Error::schema(format!("vertices[{i}]"), format!("degenerate interval ({l}, {r})")));
        }
        let mut set = LabelSet::EMPTY;
        for (j, &label) in v.labels.iter().enumerate() {
            if label == 0 || label > doc.d {
                return Err(Error::schema(
                    format!("vertices[{i}].labels[{j}]"),
                    format!("label out of range: {label} not in 1..={}", doc.d),
                ));
            }
            if set.contains(label) {
                return Err(Error::schema(format!("vertices[{i}].labels[{j}]"), format!("duplicate label {label}")));
            }
            set.insert(label);
        }
        slots[v.id] = Some((Interval { l, r }, set));
    }

    let mut g = Graph::empty(doc.n);
    for (i, &[u, v]) in doc.edges.iter().enumerate() {
        let at = format!("edges[{i}]");
        if u >= doc.n || v >= doc.n {
            return Err(Error::schema(at, format!("vertex out of range in edge {u} {v}")));
        }
        if u == v {
            return Err(Error::schema(at, format!("self-loop at {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::schema(at, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v)?;
    }

    let (intervals, labels) = slots.into_iter().map(|s| s.expect("every id seen once")).unzip();
    let rep = SimRep::new(doc.d, intervals, labels)?;
    Ok((g, rep))
}

/// Canonical document: vertices by id, labels ascending, edges `u < v` in
/// lexicographic order, one vertex per line.
pub fn write_rep(g: &Graph, rep: &SimRep) -> String {
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"n\": {},", rep.n()).unwrap();
    writeln!(out, "  \"d\": {},", rep.d()).unwrap();
    if rep.n() == 0 {
        writeln!(out, "  \"vertices\": [],").unwrap();
    } else {
        writeln!(out, "  \"vertices\": [").unwrap();
        for v in 0..rep.n() {
            let i = rep.interval(v);
            let labels: Vec<String> = rep.labels(v).iter().map(|l| l.to_string()).collect();
            let sep = if v + 1 == rep.n() { "" } else { "," };
            writeln!(
                out,
                "    {{\"id\": {v}, \"l\": \"{}\", \"r\": \"{}\", \"labels\": [{}]}}{sep}",
                i.l,
                i.r,
                labels.join(", ")
            )
            .unwrap();
        }
        writeln!(out, "  ],").unwrap();
    }
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("[{u}, {v}]")).collect();
    writeln!(out, "  \"edges\": [{}]", edges.join(", ")).unwrap();
    writeln!(out, "}}").unwrap();
    out
}
