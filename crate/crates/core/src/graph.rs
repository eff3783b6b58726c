//! Finite multigraphs, their cycles and bonds, and cycle matroids.
//!
//! Edges are kept sorted by label so that edge index `i` is also element id
//! `i` of [`Multigraph::cycle_matroid`]. Each edge has a fixed orientation
//! from its first endpoint (tail) to its second (head).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elemset::ElemSet;
use crate::matroid::{Matroid, MatroidError, DEFAULT_CAP, MAX_CAP};

/// Vertex sets are bit masks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate edge label {0:?}")]
    DuplicateEdgeLabel(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateVertexLabel(String),
    #[error("edge {edge:?} references vertex {vertex}, but there are only {count} vertices")]
    EndpointOutOfRange {
        edge: String,
        vertex: usize,
        count: usize,
    },
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("graph has {size} edges, cap is {cap}")]
    TooManyEdges { size: usize, cap: usize },
    #[error("edge labels {graph:?} do not match matroid elements {matroid:?}")]
    LabelMismatch {
        graph: Vec<String>,
        matroid: Vec<String>,
    },
    #[error("traversal of {circuit:?} is not a closed walk through exactly its edges")]
    InconsistentTraversal { circuit: Vec<String> },
    #[error("vertex side for bond {bond:?} induces the cut {cut:?}")]
    InconsistentBondSides { bond: Vec<String>, cut: Vec<String> },
    #[error("{0:?} is not a cycle of the graph")]
    NotACycle(Vec<String>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub label: String,
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn other_end(&self, v: usize) -> usize {
        if self.tail == v {
            self.head
        } else {
            self.tail
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

/// Direction in which a closed walk passes an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sense {
    /// Tail to head.
    Forward,
    Backward,
}

impl Sense {
    pub fn sign(self) -> i8 {
        match self {
            Sense::Forward => 1,
            Sense::Backward => -1,
        }
    }

    pub fn flip(self) -> Sense {
        match self {
            Sense::Forward => Sense::Backward,
            Sense::Backward => Sense::Forward,
        }
    }
}

/// A closed walk through the edges of one cycle, each passed once.
pub type Traversal = Vec<(usize, Sense)>;

/// Chosen traversal for every cycle and chosen `U` shore for every bond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphOrientation {
    pub cycles: Vec<(ElemSet, Traversal)>,
    /// `(bond, U)` with `U` a vertex mask.
    pub bonds: Vec<(ElemSet, u64)>,
}

impl Multigraph {
    /// Build from vertex labels and `(label, tail, head)` edges.
    pub fn new<S: Into<String>>(
        vertices: Vec<String>,
        edges: Vec<(S, usize, usize)>,
    ) -> Result<Self, GraphError> {
        if vertices.len() > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertices.len()));
        }
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(GraphError::DuplicateVertexLabel(v.clone()));
            }
        }
        let mut out: Vec<Edge> = Vec::with_capacity(edges.len());
        for (label, tail, head) in edges {
            let label = label.into();
            for v in [tail, head] {
                if v >= vertices.len() {
                    return Err(GraphError::EndpointOutOfRange {
                        edge: label,
                        vertex: v,
                        count: vertices.len(),
                    });
                }
            }
            out.push(Edge { label, tail, head });
        }
        out.sort_by(|a, b| a.label.cmp(&b.label));
        if let Some(w) = out.windows(2).find(|w| w[0].label == w[1].label) {
            return Err(GraphError::DuplicateEdgeLabel(w[0].label.clone()));
        }
        Ok(Multigraph {
            vertices,
            edges: out,
        })
    }

    /// Build from `(u, v, label)` triples; vertices are created in order of
    /// first appearance.
    pub fn from_triples<S: AsRef<str>>(triples: &[(S, S, S)]) -> Result<Self, GraphError> {
        let mut vertices: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut id = |name: &str, vertices: &mut Vec<String>| {
            *index.entry(name.to_string()).or_insert_with(|| {
                vertices.push(name.to_string());
                vertices.len() - 1
            })
        };
        let mut edges = Vec::with_capacity(triples.len());
        for (u, v, label) in triples {
            let a = id(u.as_ref(), &mut vertices);
            let b = id(v.as_ref(), &mut vertices);
            edges.push((label.as_ref().to_string(), a, b));
        }
        Multigraph::new(vertices, edges)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| e.label.clone()).collect()
    }

    pub fn vertex_id(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    /// Non-loop edges at `v`.
    pub fn star(&self, v: usize) -> ElemSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_loop() && (e.tail == v || e.head == v))
            .map(|(i, _)| i)
            .collect()
    }

    /// Edges with exactly one end in the vertex mask `u`.
    pub fn cut(&self, u: u64) -> ElemSet {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| (u >> e.tail & 1) != (u >> e.head & 1))
            .map(|(i, _)| i)
            .collect()
    }

    /// Vertices incident with some edge of `x`.
    pub fn touched(&self, x: ElemSet) -> u64 {
        x.iter().fold(0, |acc, i| {
            acc | 1 << self.edges[i].tail | 1 << self.edges[i].head
        })
    }

    /// Vertex masks of the connected components of the spanning subgraph
    /// `(V, x)`, ordered by least vertex.
    pub fn components_of(&self, x: ElemSet) -> Vec<u64> {
        let n = self.vertices.len();
        let mut uf = UnionFind::new(n);
        for i in x {
            uf.union(self.edges[i].tail, self.edges[i].head);
        }
        let mut by_root: BTreeMap<usize, u64> = BTreeMap::new();
        let mut order = Vec::new();
        for v in 0..n {
            let r = uf.find(v);
            let mask = by_root.entry(r).or_insert_with(|| {
                order.push(r);
                0
            });
            *mask |= 1 << v;
        }
        order.iter().map(|r| by_root[r]).collect()
    }

    pub fn components(&self) -> Vec<u64> {
        self.components_of(ElemSet::full(self.edges.len()))
    }

    /// `true` if the edges of `x` together with the vertices they touch
    /// form a connected graph. The empty set counts as connected.
    pub fn edge_set_connected(&self, x: ElemSet) -> bool {
        let touched = self.touched(x);
        self.components_of(x)
            .iter()
            .filter(|c| **c & touched != 0)
            .count()
            <= 1
    }

    /// `true` if `x` is the edge set of a cycle: every vertex has degree 0
    /// or 2 in `x` (loops count twice) and `x` is connected and nonempty.
    pub fn is_cycle(&self, x: ElemSet) -> bool {
        if x.is_empty() {
            return false;
        }
        let mut deg = vec![0u8; self.vertices.len()];
        for i in x {
            deg[self.edges[i].tail] += 1;
            deg[self.edges[i].head] += 1;
        }
        deg.iter().all(|&d| d == 0 || d == 2) && self.edge_set_connected(x)
    }

    /// All cycles, in lexicographic order.
    pub fn cycles(&self) -> Vec<ElemSet> {
        let all = ElemSet::full(self.edges.len());
        let mut out: Vec<ElemSet> = all.subsets().filter(|&x| self.is_cycle(x)).collect();
        out.sort();
        out
    }

    /// All bonds with their `U` shore, which is the side containing the least
    /// vertex of the bond's component. Sorted by bond.
    pub fn bonds_with_sides(&self) -> Vec<(ElemSet, u64)> {
        let mut out = Vec::new();
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            let rest = comp & !(1u64 << root);
            // Enumerate subsets of the component other than the root.
            let mut sub = 0u64;
            loop {
                let u = sub | 1 << root;
                if u != comp && self.induced_connected(u) && self.induced_connected(comp & !u) {
                    out.push((self.cut(u), u));
                }
                if sub == rest {
                    break;
                }
                sub = sub.wrapping_sub(rest) & rest;
            }
        }
        out.sort();
        out
    }

    pub fn bonds(&self) -> Vec<ElemSet> {
        self.bonds_with_sides()
            .into_iter()
            .map(|(b, _)| b)
            .collect()
    }

    fn induced_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return false;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                if mask >> e.tail & 1 == 0 || mask >> e.head & 1 == 0 {
                    continue;
                }
                let w = if e.tail == v {
                    e.head
                } else if e.head == v {
                    e.tail
                } else {
                    continue;
                };
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen == mask
    }

    pub fn cycle_matroid(&self) -> Result<Matroid, GraphError> {
        self.cycle_matroid_with_cap(DEFAULT_CAP)
    }

    pub fn cycle_matroid_with_cap(&self, cap: usize) -> Result<Matroid, GraphError> {
        let cap = cap.min(MAX_CAP);
        if self.edges.len() > cap {
            return Err(GraphError::TooManyEdges {
                size: self.edges.len(),
                cap,
            });
        }
        Ok(Matroid::from_sets(self.edge_labels(), self.cycles())?)
    }

    /// The walk around cycle `x` starting with its least edge, passed from
    /// tail to head.
    pub fn traversal(&self, x: ElemSet) -> Result<Traversal, GraphError> {
        if !self.is_cycle(x) {
            return Err(GraphError::NotACycle(self.labels_of(x)));
        }
        let first = x.first().expect("cycles are nonempty");
        let mut walk = vec![(first, Sense::Forward)];
        let start = self.edges[first].tail;
        let mut at = self.edges[first].head;
        let mut rest = x.without(first);
        while at != start || !rest.is_empty() {
            let next = rest
                .iter()
                .find(|&i| self.edges[i].tail == at || self.edges[i].head == at)
                .expect("a cycle continues at every vertex");
            let e = &self.edges[next];
            let sense = if e.tail == at {
                Sense::Forward
            } else {
                Sense::Backward
            };
            at = e.other_end(at);
            walk.push((next, sense));
            rest.remove(next);
        }
        Ok(walk)
    }

    /// `true` if `walk` passes each edge of `x` exactly once and closes up.
    pub fn is_traversal_of(&self, x: ElemSet, walk: &Traversal) -> bool {
        let set: ElemSet = walk.iter().map(|&(i, _)| i).collect();
        if set != x || walk.len() != x.len() || walk.iter().any(|&(i, _)| i >= self.edges.len()) {
            return false;
        }
        let ends = |(i, s): (usize, Sense)| {
            let e = &self.edges[i];
            match s {
                Sense::Forward => (e.tail, e.head),
                Sense::Backward => (e.head, e.tail),
            }
        };
        (0..walk.len()).all(|k| ends(walk[k]).1 == ends(walk[(k + 1) % walk.len()]).0)
    }

    /// Canonical traversals of all cycles and default shores of all bonds.
    pub fn canonical_orientation(&self) -> GraphOrientation {
        let cycles = self
            .cycles()
            .into_iter()
            .map(|c| (c, self.traversal(c).expect("enumerated cycles are cycles")))
            .collect();
        GraphOrientation {
            cycles,
            bonds: self.bonds_with_sides(),
        }
    }

    pub fn labels_of(&self, x: ElemSet) -> Vec<String> {
        x.iter().map(|i| self.edges[i].label.clone()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "edges": self
                .edges
                .iter()
                .map(|e| [e.label.clone(), self.vertices[e.tail].clone(), self.vertices[e.head].clone()])
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, String> {
        #[derive(Deserialize)]
        struct Raw {
            vertices: Vec<String>,
            edges: Vec<[String; 3]>,
        }
        let raw: Raw = serde_json::from_value(value.clone()).map_err(|e| e.to_string())?;
        let mut edges = Vec::with_capacity(raw.edges.len());
        for [label, u, v] in raw.edges {
            let find = |name: &str| {
                raw.vertices
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| format!("edge {label:?} uses unknown vertex {name:?}"))
            };
            edges.push((label.clone(), find(&u)?, find(&v)?));
        }
        Multigraph::new(raw.vertices, edges).map_err(|e| e.to_string())
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {} {{", dot_id(name));
        for v in &self.vertices {
            let _ = writeln!(s, "  {};", dot_id(v));
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  {} -- {} [label={}];",
                dot_id(&self.vertices[e.tail]),
                dot_id(&self.vertices[e.head]),
                dot_id(&e.label)
            );
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Differences between a matroid and the cycle matroid of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InducesReport {
    pub induces: bool,
    pub missing_circuits: Vec<Vec<String>>,
    pub extra_circuits: Vec<Vec<String>>,
    pub missing_cocircuits: Vec<Vec<String>>,
    pub extra_cocircuits: Vec<Vec<String>>,
}

/// Compare `m` with the cycles and bonds of `g`. "Missing" families are in
/// `m` but not in `g`; "extra" ones are in `g` only.
pub fn verify_induces(m: &Matroid, g: &Multigraph) -> Result<InducesReport, GraphError> {
    if g.edge_labels() != m.labels() {
        return Err(GraphError::LabelMismatch {
            graph: g.edge_labels(),
            matroid: m.labels().to_vec(),
        });
    }
    let diff = |want: &[ElemSet], got: &[ElemSet]| {
        let want: BTreeSet<ElemSet> = want.iter().copied().collect();
        let got: BTreeSet<ElemSet> = got.iter().copied().collect();
        let missing: Vec<Vec<String>> = want.difference(&got).map(|&x| m.set_labels(x)).collect();
        let extra: Vec<Vec<String>> = got.difference(&want).map(|&x| m.set_labels(x)).collect();
        (missing, extra)
    };
    let (missing_circuits, extra_circuits) = diff(m.circuits(), &g.cycles());
    let (missing_cocircuits, extra_cocircuits) = diff(m.cocircuits(), &g.bonds());
    Ok(InducesReport {
        induces: missing_circuits.is_empty()
            && extra_circuits.is_empty()
            && missing_cocircuits.is_empty()
            && extra_cocircuits.is_empty(),
        missing_circuits,
        extra_circuits,
        missing_cocircuits,
        extra_cocircuits,
    })
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
