//! Command-line front end: input parsing, verb dispatch and report output.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};
use framework_forge::bridges::{
    bridge_decomposition, countability_certificate, partition_tree_from, BridgeError, PartitionTree,
};
use framework_forge::corpus;
use framework_forge::framework::{
    find_framework, framework_for_graph, verify_framework, GraphFramework,
};
use framework_forge::graph::{verify_induces, Multigraph};
use framework_forge::io::{
    framework_to_json, matroid_from_json, matroid_to_json, partition_tree_to_dot,
    partition_tree_to_json, signing_to_json, DecodeError,
};
use framework_forge::matroid::{
    binary_tame_report, connectivity, dual_matroid, fundamental_set, minor, MatroidError,
    DEFAULT_CAP, MAX_CAP,
};
use framework_forge::realizer::realize;
use framework_forge::signing::{find_signing, signing_from_oriented_graph, verify_signing};
use framework_forge::{ElemSet, Matroid};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(
    name = "framework-forge",
    version,
    about = "Graphic matroid recognition through graph frameworks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Verb,
    /// Largest ground set accepted.
    #[arg(long, global = true, env = "FRAMEWORK_FORGE_CAP", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Output format; each verb has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[arg(long, global = true, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Matroid,
    Edges,
    GraphJson,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Check a circuit family against the matroid axioms.
    Validate { input: String },
    /// Print the dual matroid.
    Dual { input: String },
    /// Contract and delete element sets.
    Minor {
        input: String,
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "")]
        delete: String,
    },
    /// Decide k-connectivity, with a separation as witness.
    Connect {
        input: String,
        #[arg(short, default_value_t = 2)]
        k: usize,
    },
    /// Search for a signing of circuits and cocircuits.
    Sign { input: String },
    /// Search for a graph framework (or derive one from a graph).
    Framework {
        input: String,
        #[arg(long)]
        from_graph: bool,
    },
    /// Reconstruct a graph from a framework.
    Realize { input: String },
    /// Bridge partition tree of a circuit, with its certificate.
    Bridges {
        input: String,
        /// Comma-separated circuit labels.
        #[arg(long)]
        circuit: String,
        #[arg(long)]
        seed_element: Option<String>,
    },
    /// Decide graphicness, printing a checkable certificate either way.
    CheckGraphic { input: String },
    /// Run the brute-force invariant suite on the input.
    Oracle { input: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("invalid matroid: {0}")]
    Matroid(#[from] MatroidError),
    #[error("unknown corpus instance {0:?}")]
    UnknownCorpus(String),
    #[error("{0}")]
    Usage(String),
}

impl From<DecodeError> for CliError {
    fn from(e: DecodeError) -> Self {
        match e {
            DecodeError::Matroid(m) => CliError::Matroid(m),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Input {
    Matroid(Matroid),
    Graph(Multigraph),
}

impl Input {
    pub fn matroid(&self, cap: usize) -> Result<Matroid, CliError> {
        match self {
            Input::Matroid(m) if m.len() > cap.min(MAX_CAP) => {
                Err(MatroidError::GroundCapExceeded {
                    size: m.len(),
                    cap: cap.min(MAX_CAP),
                }
                .into())
            }
            Input::Matroid(m) => Ok(m.clone()),
            Input::Graph(g) => g
                .cycle_matroid_with_cap(cap)
                .map_err(|e| CliError::Validation(e.to_string())),
        }
    }
}

/// Parse an edge list: `u v label` per line, `#` starts a comment.
pub fn parse_edge_list(text: &str) -> Result<Multigraph, CliError> {
    let mut triples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(CliError::Parse {
                line: i + 1,
                message: format!("expected `u v label`, found {} field(s)", fields.len()),
            });
        }
        triples.push((fields[0], fields[1], fields[2]));
    }
    Multigraph::from_triples(&triples).map_err(|e| CliError::Validation(e.to_string()))
}

fn parse_json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        line: e.line(),
        message: format!("column {}: {e}", e.column()),
    })
}

/// Parse input text. `auto` reads JSON objects with `elements` as matroids
/// and with `vertices` as graphs; anything else as an edge list.
pub fn parse_text(text: &str, format: InputFormat, cap: usize) -> Result<Input, CliError> {
    let graph_json = |v: &Value| {
        Multigraph::from_json(v)
            .map(Input::Graph)
            .map_err(CliError::Validation)
    };
    match format {
        InputFormat::Matroid => Ok(Input::Matroid(matroid_from_json(&parse_json(text)?, cap)?)),
        InputFormat::GraphJson => graph_json(&parse_json(text)?),
        InputFormat::Edges => parse_edge_list(text).map(Input::Graph),
        InputFormat::Auto => {
            if text.trim_start().starts_with('{') {
                let v = parse_json(text)?;
                if v.get("elements").is_some() {
                    Ok(Input::Matroid(matroid_from_json(&v, cap)?))
                } else if v.get("vertices").is_some() {
                    graph_json(&v)
                } else {
                    Err(CliError::Validation(
                        "JSON input needs `elements` (matroid) or `vertices` (graph)".into(),
                    ))
                }
            } else {
                parse_edge_list(text).map(Input::Graph)
            }
        }
    }
}

/// Read `path`, or a named instance written `corpus:NAME`.
pub fn parse_input(path: &str, format: InputFormat, cap: usize) -> Result<Input, CliError> {
    if let Some(name) = path.strip_prefix("corpus:") {
        if let Some(g) = corpus::graph(name) {
            return Ok(Input::Graph(g));
        }
        return corpus::matroid(name)
            .map(Input::Matroid)
            .ok_or_else(|| CliError::UnknownCorpus(name.to_string()));
    }
    let text = std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Io {
        path: path.to_string(),
        message: e.to_string(),
    })?;
    parse_text(&text, format, cap)
}

/// Exit status and report of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout }
    }
    fn refuted(stdout: String) -> Self {
        Outcome { code: 1, stdout }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn labels_to_set(m: &Matroid, list: &str) -> Result<ElemSet, CliError> {
    let labels: Vec<&str> = list
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect();
    Ok(m.set_of(&labels)?)
}

fn unsupported(verb: &str, format: Format) -> CliError {
    CliError::Usage(format!("{verb} does not support --format {format:?}").to_lowercase())
}

fn matroid_report(m: &Matroid, format: Format, verb: &str) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(pretty(&matroid_to_json(m))),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "elements: {}", m.labels().join(" "));
            let _ = writeln!(s, "rank: {}", m.rank());
            for &c in m.circuits() {
                let _ = writeln!(s, "circuit: {}", m.set_labels(c).join(" "));
            }
            Ok(s)
        }
        Format::Dot => Err(unsupported(verb, format)),
    }
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cap = cli.cap;
    let load = |input: &str| parse_input(input, cli.input_format, cap);
    match &cli.command {
        Verb::Validate { input } => {
            let format = cli.format.unwrap_or(Format::Text);
            match load(input).and_then(|i| i.matroid(cap)) {
                Ok(m) => {
                    let summary = format!(
                        "valid matroid: {} elements, rank {}, {} circuits, {} cocircuits\n",
                        m.len(),
                        m.rank(),
                        m.circuits().len(),
                        m.cocircuits().len()
                    );
                    match format {
                        Format::Text => Ok(Outcome::ok(summary)),
                        _ => Ok(Outcome::ok(matroid_report(&m, format, "validate")?)),
                    }
                }
                Err(CliError::Matroid(e @ MatroidError::GroundCapExceeded { .. })) => {
                    Err(CliError::Matroid(e))
                }
                Err(CliError::Matroid(e)) => {
                    Ok(Outcome::refuted(format!("invalid matroid: {e}\n")))
                }
                Err(e) => Err(e),
            }
        }
        Verb::Dual { input } => {
            let m = load(input)?.matroid(cap)?;
            Ok(Outcome::ok(matroid_report(
                &dual_matroid(&m),
                cli.format.unwrap_or(Format::Json),
                "dual",
            )?))
        }
        Verb::Minor {
            input,
            contract,
            delete,
        } => {
            let m = load(input)?.matroid(cap)?;
            let c = labels_to_set(&m, contract)?;
            let d = labels_to_set(&m, delete)?;
            let mm = minor(&m, c, d)?;
            Ok(Outcome::ok(matroid_report(
                &mm,
                cli.format.unwrap_or(Format::Json),
                "minor",
            )?))
        }
        Verb::Connect { input, k } => connect(
            &load(input)?.matroid(cap)?,
            *k,
            cli.format.unwrap_or(Format::Text),
        ),
        Verb::Sign { input } => sign(
            &load(input)?.matroid(cap)?,
            cli.format.unwrap_or(Format::Json),
        ),
        Verb::Framework { input, from_graph } => {
            let format = cli.format.unwrap_or(Format::Json);
            if format == Format::Dot {
                return Err(unsupported("framework", format));
            }
            let parsed = load(input)?;
            let (m, f) = if *from_graph {
                let Input::Graph(g) = &parsed else {
                    return Err(CliError::Usage("--from-graph needs graph input".into()));
                };
                framework_for_graph(g).map_err(|e| CliError::Validation(e.to_string()))?
            } else {
                let m = parsed.matroid(cap)?;
                let search = find_framework(&m);
                match search.framework {
                    Some(f) => (m, f),
                    None => {
                        return Ok(Outcome::refuted(no_framework(
                            &search.stats,
                            search.signing_found,
                        )))
                    }
                }
            };
            Ok(Outcome::ok(match format {
                Format::Json => pretty(&framework_to_json(&m, &f)),
                _ => framework_text(&m, &f),
            }))
        }
        Verb::Realize { input } => {
            let m = load(input)?.matroid(cap)?;
            let search = find_framework(&m);
            let Some(f) = search.framework else {
                return Ok(Outcome::refuted(no_framework(
                    &search.stats,
                    search.signing_found,
                )));
            };
            let r = realize(&m, &f);
            Ok(Outcome::ok(match cli.format.unwrap_or(Format::Dot) {
                Format::Dot => r.graph.to_dot("realized"),
                Format::Json => pretty(&r.graph.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    for (v, code) in r.graph.vertices().iter().zip(&r.codes) {
                        let _ = writeln!(s, "vertex {v}: {code}");
                    }
                    for e in r.graph.edges() {
                        let _ = writeln!(
                            s,
                            "edge {}: {} {}",
                            e.label,
                            r.graph.vertices()[e.tail],
                            r.graph.vertices()[e.head]
                        );
                    }
                    s
                }
            }))
        }
        Verb::Bridges {
            input,
            circuit,
            seed_element,
        } => {
            let m = load(input)?.matroid(cap)?;
            bridges(
                &m,
                circuit,
                seed_element.as_deref(),
                cli.format.unwrap_or(Format::Json),
            )
        }
        Verb::CheckGraphic { input } => check_graphic(
            &load(input)?.matroid(cap)?,
            cli.format.unwrap_or(Format::Text),
        ),
        Verb::Oracle { input } => oracle(&load(input)?, cap, cli.format.unwrap_or(Format::Text)),
    }
}

fn connect(m: &Matroid, k: usize, format: Format) -> Result<Outcome, CliError> {
    let r = connectivity(m, k);
    let witness = r.witness.as_ref().map(|w| {
        json!({
            "side_a": m.set_labels(w.side_a),
            "side_b": m.set_labels(w.side_b),
            "separation": w.k,
        })
    });
    let out = match format {
        Format::Json => pretty(&json!({"k": k, "k_connected": r.k_connected, "witness": witness})),
        Format::Text => match &r.witness {
            None => format!("{k}-connected\n"),
            Some(w) => format!(
                "not {k}-connected: {}-separation {{{}}} | {{{}}}\n",
                w.k,
                m.set_labels(w.side_a).join(" "),
                m.set_labels(w.side_b).join(" ")
            ),
        },
        Format::Dot => return Err(unsupported("connect", format)),
    };
    Ok(Outcome {
        code: if r.k_connected { 0 } else { 1 },
        stdout: out,
    })
}

fn sign(m: &Matroid, format: Format) -> Result<Outcome, CliError> {
    let s = find_signing(m);
    match (s.signing, format) {
        (_, Format::Dot) => Err(unsupported("sign", format)),
        (Some(sig), Format::Json) => Ok(Outcome::ok(pretty(&signing_to_json(m, &sig)))),
        (Some(sig), Format::Text) => {
            let mut out = String::new();
            for (name, rows, sets) in [("c", &sig.c, m.circuits()), ("d", &sig.d, m.cocircuits())] {
                for (row, &set) in rows.iter().zip(sets) {
                    let entries: Vec<String> = set
                        .iter()
                        .map(|e| format!("{}:{:+}", m.label(e), row.get(e)))
                        .collect();
                    let _ = writeln!(out, "{name} {}", entries.join(" "));
                }
            }
            Ok(Outcome::ok(out))
        }
        (None, _) => {
            let mut out = format!("no signing exists ({} search nodes)\n", s.nodes);
            if let Some((c, d)) = s.parity_obstruction {
                let _ = writeln!(
                    out,
                    "odd intersection: circuit {{{}}} meets cocircuit {{{}}} in {} elements",
                    m.set_labels(c).join(" "),
                    m.set_labels(d).join(" "),
                    (c & d).len()
                );
            }
            Ok(Outcome::refuted(out))
        }
    }
}

fn framework_text(m: &Matroid, f: &GraphFramework) -> String {
    let v = framework_to_json(m, f);
    let mut s = String::new();
    if let Some(orders) = v["orders"].as_object() {
        for (k, order) in orders {
            let items: Vec<&str> = order
                .as_array()
                .into_iter()
                .flatten()
                .filter_map(Value::as_str)
                .collect();
            let _ = writeln!(s, "order {k}: ({})", items.join(" "));
        }
    }
    s
}

fn no_framework(stats: &framework_forge::framework::SearchStats, signing_found: bool) -> String {
    format!(
        "not graphic: no framework exists\nsearch exhausted: signing found: {signing_found}, signing nodes: {}, order nodes: {}, leaves verified: {}\n",
        stats.signing_nodes, stats.order_nodes, stats.leaves
    )
}

fn check_graphic(m: &Matroid, format: Format) -> Result<Outcome, CliError> {
    let search = find_framework(m);
    let Some(f) = search.framework else {
        let mut out = no_framework(&search.stats, search.signing_found);
        if format == Format::Json {
            out = pretty(&json!({
                "graphic": false,
                "statement": "not graphic: no framework exists",
                "signing_found": search.signing_found,
                "signing_nodes": search.stats.signing_nodes,
                "order_nodes": search.stats.order_nodes,
                "leaves": search.stats.leaves,
            }));
        }
        return Ok(Outcome::refuted(out));
    };
    let checked = verify_framework(m, &f).map_err(|e| CliError::Validation(e.to_string()))?;
    let r = realize(m, &f);
    let induces = verify_induces(m, &r.graph).map_err(|e| CliError::Validation(e.to_string()))?;
    if checked.is_some() || !induces.induces {
        return Err(CliError::Validation(
            "internal certificate check failed".into(),
        ));
    }
    let dot = r.graph.to_dot("realized");
    let out = match format {
        Format::Json => pretty(&json!({
            "graphic": true,
            "framework": framework_to_json(m, &f),
            "graph": r.graph.to_json(),
        })),
        Format::Dot => dot,
        Format::Text => format!(
            "graphic: realized by {} vertices and {} edges; framework verified; graph induces the matroid\n{}{}",
            r.graph.vertex_count(),
            r.graph.edge_count(),
            pretty(&framework_to_json(m, &f)),
            dot
        ),
    };
    Ok(Outcome::ok(out))
}

fn bridges(
    m: &Matroid,
    circuit: &str,
    seed: Option<&str>,
    format: Format,
) -> Result<Outcome, CliError> {
    let o = labels_to_set(m, circuit)?;
    let seed = seed
        .map(|l| {
            m.id_of(l)
                .ok_or_else(|| MatroidError::UnknownElement(l.to_string()))
        })
        .transpose()?;
    let report = connectivity(m, 3);
    if !report.k_connected {
        let w = report.witness.expect("a separation is witnessed");
        return Ok(Outcome::refuted(format!(
            "not 3-connected: {}-separation {{{}}} | {{{}}}\n",
            w.k,
            m.set_labels(w.side_a).join(" "),
            m.set_labels(w.side_b).join(" ")
        )));
    }
    let tree: Result<PartitionTree, BridgeError> =
        bridge_decomposition(m, o).and_then(|d| partition_tree_from(d, seed));
    let t = match tree {
        Ok(t) => t,
        Err(e @ (BridgeError::CertificateFailure { .. } | BridgeError::NoFramework)) => {
            return Ok(Outcome::refuted(format!("{e}\n")))
        }
        Err(e) => return Err(CliError::Validation(e.to_string())),
    };
    let cert = match countability_certificate(&t) {
        Ok(c) => c,
        Err(e) => return Ok(Outcome::refuted(format!("certificate failed: {e}\n"))),
    };
    Ok(Outcome::ok(match format {
        Format::Json => pretty(&partition_tree_to_json(m, &t, Some(&cert))),
        Format::Dot => partition_tree_to_dot(m, &t),
        Format::Text => {
            let mut s = format!("certificate: pass ({} levels)\n", t.levels.len());
            for (e, n, k) in &cert.injection {
                let _ = writeln!(s, "{} -> node {n}.{k}", m.label(*e));
            }
            s
        }
    }))
}

/// Invariants checked by brute force on the input.
fn oracle(input: &Input, cap: usize, format: Format) -> Result<Outcome, CliError> {
    let m = input.matroid(cap)?;
    let mut checks: Vec<(&str, bool)> = Vec::new();
    checks.push(("dual involution", dual_matroid(&dual_matroid(&m)) == m));
    checks.push((
        "no circuit meets a cocircuit once",
        binary_tame_report(&m, None, None)?
            .single_intersection
            .is_none(),
    ));
    if m.len() <= 12 {
        let mut dual_ok = true;
        for &b in m.bases() {
            for x in m.ground() - b {
                let c = fundamental_set(&m, b, x)?;
                for y in b {
                    dual_ok &= fundamental_set(&m, b, y)?.contains(x) == c.contains(y);
                }
            }
        }
        checks.push(("fundamental-set duality", dual_ok));
    }
    if let Input::Graph(g) = input {
        checks.push((
            "binary evenness",
            binary_tame_report(&m, None, None)?.binary,
        ));
        let o = g.canonical_orientation();
        let signing_ok = signing_from_oriented_graph(g, &o)
            .ok()
            .and_then(|s| verify_signing(&m, &s).ok())
            .is_some_and(|v| v.is_none());
        checks.push(("oriented-graph signing", signing_ok));
        let roundtrip = framework_for_graph(g).ok().is_some_and(|(mm, f)| {
            verify_framework(&mm, &f).ok() == Some(None)
                && verify_induces(&mm, &realize(&mm, &f).graph).is_ok_and(|r| r.induces)
        });
        checks.push(("framework roundtrip", roundtrip));
    }
    let all = checks.iter().all(|c| c.1);
    let out = match format {
        Format::Json => pretty(&json!({
            "pass": all,
            "checks": checks.iter().map(|(n, ok)| json!({"check": n, "pass": ok})).collect::<Vec<_>>(),
        })),
        Format::Text => checks
            .iter()
            .map(|(n, ok)| format!("[{}] {n}\n", if *ok { "PASS" } else { "FAIL" }))
            .collect(),
        Format::Dot => return Err(unsupported("oracle", format)),
    };
    Ok(Outcome {
        code: if all { 0 } else { 1 },
        stdout: out,
    })
}

/// Run and map errors to exit status 2.
pub fn run_command(cli: &Cli) -> (i32, String, String) {
    match run(cli) {
        Ok(o) => (o.code, o.stdout, String::new()),
        Err(e) => (2, String::new(), format!("error: {e}\n")),
    }
}
