//! JSON and DOT encodings. Every family is emitted in a fixed order so
//! output bytes depend only on the input.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::bridges::{CountabilityCertificate, Goodness, PartitionTree};
use crate::elemset::ElemSet;
use crate::framework::{derive_circuit_orders, GraphFramework};
use crate::graph::dot_id;
use crate::matroid::{build_matroid_with_cap, Matroid, MatroidError};
use crate::signing::{SignRow, Signing};

#[derive(Deserialize)]
struct RawMatroid {
    elements: Vec<String>,
    circuits: Vec<Vec<String>>,
}

pub fn matroid_to_json(m: &Matroid) -> Value {
    json!({
        "elements": m.labels(),
        "circuits": m.circuits().iter().map(|&c| m.set_labels(c)).collect::<Vec<_>>(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("unknown set key {0:?}")]
    UnknownKey(String),
    #[error("sign of {element:?} in {key:?} must be 1 or -1")]
    BadSign { key: String, element: String },
    #[error("row {0:?} does not cover its set")]
    IncompleteRow(String),
    #[error("missing row for {0:?}")]
    MissingRow(String),
}

pub fn matroid_from_json(v: &Value, cap: usize) -> Result<Matroid, DecodeError> {
    let raw: RawMatroid =
        serde_json::from_value(v.clone()).map_err(|e| DecodeError::Json(e.to_string()))?;
    Ok(build_matroid_with_cap(&raw.elements, &raw.circuits, cap)?)
}

/// Labels of `s` joined by commas.
pub fn set_key(m: &Matroid, s: ElemSet) -> String {
    m.set_labels(s).join(",")
}

fn row_json(m: &Matroid, row: &SignRow) -> Value {
    let mut out = Map::new();
    for e in row.support {
        out.insert(m.label(e).to_string(), json!(row.get(e)));
    }
    Value::Object(out)
}

fn rows_json(m: &Matroid, rows: &[SignRow], keys: &[ElemSet]) -> Value {
    let mut out = Map::new();
    for (row, &k) in rows.iter().zip(keys) {
        out.insert(set_key(m, k), row_json(m, row));
    }
    Value::Object(out)
}

pub fn signing_to_json(m: &Matroid, s: &Signing) -> Value {
    json!({
        "c": rows_json(m, &s.c, m.circuits()),
        "d": rows_json(m, &s.d, m.cocircuits()),
    })
}

/// Framework JSON: the signing, `σ` keyed by cocircuit, and the derived
/// circuit orders (omitted if the framework does not define them).
pub fn framework_to_json(m: &Matroid, f: &GraphFramework) -> Value {
    let mut v = signing_to_json(m, &f.signing);
    let obj = v.as_object_mut().expect("signing JSON is an object");
    obj.insert("sigma".into(), rows_json(m, &f.sigma, m.cocircuits()));
    if let Ok(orders) = derive_circuit_orders(m, f) {
        let mut out = Map::new();
        for (&c, order) in m.circuits().iter().zip(&orders) {
            let labels: Vec<&str> = order.items().iter().map(|&e| m.label(e)).collect();
            out.insert(set_key(m, c), json!(labels));
        }
        obj.insert("orders".into(), Value::Object(out));
    }
    v
}

fn rows_from_json(
    m: &Matroid,
    v: Option<&Value>,
    sets: &[ElemSet],
    support: impl Fn(ElemSet) -> ElemSet,
) -> Result<Vec<SignRow>, DecodeError> {
    let obj = v
        .and_then(Value::as_object)
        .ok_or_else(|| DecodeError::Json("expected an object of rows".into()))?;
    for key in obj.keys() {
        let labels: Vec<&str> = if key.is_empty() {
            Vec::new()
        } else {
            key.split(',').collect()
        };
        let known = m.set_of(&labels).ok().filter(|s| sets.contains(s));
        if known.is_none() {
            return Err(DecodeError::UnknownKey(key.clone()));
        }
    }
    sets.iter()
        .map(|&s| {
            let key = set_key(m, s);
            let row = obj
                .get(&key)
                .and_then(Value::as_object)
                .ok_or_else(|| DecodeError::MissingRow(key.clone()))?;
            let mut out = SignRow::positive(support(s));
            if row.len() != out.support.len() {
                return Err(DecodeError::IncompleteRow(key));
            }
            for (label, sign) in row {
                let e = m
                    .id_of(label)
                    .filter(|&e| out.support.contains(e))
                    .ok_or_else(|| DecodeError::IncompleteRow(key.clone()))?;
                match sign.as_i64() {
                    Some(1) => {}
                    Some(-1) => out.set(e, -1),
                    _ => {
                        return Err(DecodeError::BadSign {
                            key: key.clone(),
                            element: label.clone(),
                        })
                    }
                }
            }
            Ok(out)
        })
        .collect()
}

pub fn signing_from_json(m: &Matroid, v: &Value) -> Result<Signing, DecodeError> {
    Ok(Signing {
        c: rows_from_json(m, v.get("c"), m.circuits(), |s| s)?,
        d: rows_from_json(m, v.get("d"), m.cocircuits(), |s| s)?,
    })
}

/// Reads `c`, `d` and `sigma`; `orders` is derived data and ignored.
pub fn framework_from_json(m: &Matroid, v: &Value) -> Result<GraphFramework, DecodeError> {
    let ground = m.ground();
    Ok(GraphFramework {
        signing: signing_from_json(m, v)?,
        sigma: rows_from_json(m, v.get("sigma"), m.cocircuits(), |b| ground - b)?,
    })
}

fn goodness_json(g: Goodness) -> Value {
    match g {
        Goodness::Undefined => Value::Null,
        Goodness::Good => json!(true),
        Goodness::Bad => json!(false),
    }
}

/// Levels with `I_n` (bridges), `J_n` (attachment vertices) and `K_n`
/// (arcs, each with its edges, parent and good flag).
pub fn partition_tree_to_json(
    m: &Matroid,
    t: &PartitionTree,
    cert: Option<&CountabilityCertificate>,
) -> Value {
    let d = &t.decomposition;
    let levels: Vec<Value> = t
        .levels
        .iter()
        .enumerate()
        .map(|(n, l)| {
            json!({
                "depth": n,
                "I": m.set_labels(l.bridges),
                "J": l.attachments.iter().map(|&v| d.vertex_name(v)).collect::<Vec<_>>(),
                "K": l.nodes.iter().map(|k| json!({
                    "from": d.vertex_name(k.anchor),
                    "to": d.vertex_name(k.end),
                    "edges": k.edges.iter().map(|&i| m.label(d.circle[i])).collect::<Vec<_>>(),
                    "parent": k.parent,
                    "good": goodness_json(k.goodness),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut out = json!({
        "circuit": d.circle.iter().map(|&e| m.label(e)).collect::<Vec<_>>(),
        "contracted": m.set_labels(d.base_s),
        "bridges": m.set_labels(d.bridges),
        "loops": m.set_labels(d.loops_of_mprime),
        "attachments": d.attachments.iter().map(|(&b, &(p, q))| {
            json!([m.label(b), d.vertex_name(p), d.vertex_name(q)])
        }).collect::<Vec<_>>(),
        "seed": m.label(t.e0),
        "levels": levels,
    });
    if let Some(c) = cert {
        out["certificate"] = json!({
            "pass": true,
            "injection": c.injection.iter().map(|&(e, n, k)| json!([m.label(e), n, k])).collect::<Vec<_>>(),
            "good_nodes": c.good_nodes,
            "max_good_children": c.max_good_children,
        });
    }
    out
}

/// DOT rendering of the tree: one node per arc, labelled by its edges;
/// good nodes are drawn bold.
pub fn partition_tree_to_dot(m: &Matroid, t: &PartitionTree) -> String {
    let d = &t.decomposition;
    let mut out = String::from("digraph partition_tree {\n  node [shape=box];\n");
    for (n, l) in t.levels.iter().enumerate() {
        for (k, node) in l.nodes.iter().enumerate() {
            let edges: Vec<&str> = node.edges.iter().map(|&i| m.label(d.circle[i])).collect();
            let style = if node.goodness == Goodness::Good {
                ", style=bold"
            } else {
                ""
            };
            out.push_str(&format!(
                "  {} [label={}{}];\n",
                dot_id(&format!("{n}.{k}")),
                dot_id(&format!("{}: {}", n, edges.join(" "))),
                style
            ));
            if let Some(p) = node.parent {
                out.push_str(&format!(
                    "  {} -> {};\n",
                    dot_id(&format!("{}.{p}", n - 1)),
                    dot_id(&format!("{n}.{k}"))
                ));
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::framework::framework_for_graph;
    use crate::signing::find_signing;

    #[test]
    fn matroid_roundtrip() {
        for name in corpus::MATROID_NAMES.iter().chain(corpus::GRAPH_NAMES) {
            if *name == "Petersen" {
                continue;
            }
            let m = corpus::matroid(name).unwrap();
            let v = matroid_to_json(&m);
            let back = matroid_from_json(&v, 22).unwrap();
            assert_eq!(back, m, "{name}");
            assert_eq!(matroid_to_json(&back).to_string(), v.to_string());
        }
    }

    #[test]
    fn framework_roundtrip() {
        let g = corpus::graph("K4").unwrap();
        let (m, f) = framework_for_graph(&g).unwrap();
        let v = framework_to_json(&m, &f);
        assert_eq!(framework_from_json(&m, &v).unwrap(), f);
        assert_eq!(v["orders"]["12,23,34,41"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn signing_roundtrip_and_rejection() {
        let m = corpus::matroid("theta").unwrap();
        let s = find_signing(&m).signing.unwrap();
        let mut v = signing_to_json(&m, &s);
        assert_eq!(signing_from_json(&m, &v).unwrap(), s);
        let key = v["c"].as_object().unwrap().keys().next().unwrap().clone();
        let elem = v["c"][&key]
            .as_object()
            .unwrap()
            .keys()
            .next()
            .unwrap()
            .clone();
        v["c"][&key][&elem] = json!(2);
        assert!(matches!(
            signing_from_json(&m, &v),
            Err(DecodeError::BadSign { .. })
        ));
    }
}
