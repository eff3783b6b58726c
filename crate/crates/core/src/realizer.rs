//! Rebuilding a graph from a framework.
//!
//! Vertices are `±1` codes indexed by the cocircuits (sorted by size, then
//! lexicographically). Edge `e` runs from `ι_e(0)` to `ι_e(1)`, where both
//! codes read `σ_b(e)` at cocircuits avoiding `e`, and `-d_b(e)` resp.
//! `d_b(e)` at cocircuits containing `e`. Only codes that occur as an edge
//! end become vertices.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::elemset::ElemSet;
use crate::framework::GraphFramework;
use crate::graph::{Multigraph, UnionFind};
use crate::matroid::{binary_tame_report, fundamental_unchecked, Matroid, MatroidError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error("vertex code {0} is not a vertex of the realized graph")]
    NotAVertex(String),
    #[error("the two vertices lie in different components")]
    NotConnected,
    #[error("{0:?} is not an edge cut of the realized graph")]
    NotACut(Vec<String>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// A vertex of the realized graph: one sign per cocircuit, in the order of
/// [`cocircuit_order`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexCode(pub Vec<i8>);

impl VertexCode {
    pub fn get(&self, k: usize) -> i8 {
        self.0[k]
    }
}

impl fmt::Display for VertexCode {
    /// `0` for `+1`, `1` for `-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &x in &self.0 {
            f.write_str(if x < 0 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Cocircuit indices sorted by (size, set).
pub fn cocircuit_order(m: &Matroid) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..m.cocircuits().len()).collect();
    idx.sort_by_key(|&i| (m.cocircuits()[i].len(), m.cocircuits()[i]));
    idx
}

fn codes_with_order(
    f: &GraphFramework,
    m: &Matroid,
    order: &[usize],
    e: usize,
) -> (VertexCode, VertexCode) {
    let mut start = Vec::with_capacity(order.len());
    let mut end = Vec::with_capacity(order.len());
    for &bi in order {
        if m.cocircuits()[bi].contains(e) {
            let d = f.signing.d[bi].get(e);
            start.push(-d);
            end.push(d);
        } else {
            let s = f.sigma(bi, e);
            start.push(s);
            end.push(s);
        }
    }
    (VertexCode(start), VertexCode(end))
}

/// `(ι_e(0), ι_e(1))`.
pub fn edge_endpoint_codes(m: &Matroid, f: &GraphFramework, e: usize) -> (VertexCode, VertexCode) {
    codes_with_order(f, m, &cocircuit_order(m), e)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    /// Edge `i` is element `i`; vertices are named `v0, v1, ...` in order of
    /// first occurrence.
    pub graph: Multigraph,
    /// Code of each vertex.
    pub codes: Vec<VertexCode>,
    /// The cocircuits indexing code coordinates.
    pub cocircuit_order: Vec<ElemSet>,
}

impl Realization {
    pub fn vertex_of(&self, code: &VertexCode) -> Option<usize> {
        self.codes.iter().position(|c| c == code)
    }

    /// Coordinate of cocircuit `b` in the codes.
    pub fn coordinate(&self, b: ElemSet) -> Option<usize> {
        self.cocircuit_order.iter().position(|&x| x == b)
    }
}

pub fn realize(m: &Matroid, f: &GraphFramework) -> Realization {
    let order = cocircuit_order(m);
    let mut codes: Vec<VertexCode> = Vec::new();
    let mut index: BTreeMap<VertexCode, usize> = BTreeMap::new();
    let mut edges = Vec::with_capacity(m.len());
    for e in 0..m.len() {
        let (a, b) = codes_with_order(f, m, &order, e);
        let mut id = |c: VertexCode| {
            *index.entry(c.clone()).or_insert_with(|| {
                codes.push(c);
                codes.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        edges.push((m.label(e).to_string(), u, v));
    }
    let names = (0..codes.len()).map(|i| format!("v{i}")).collect();
    let graph = Multigraph::new(names, edges).expect("realized edges reference realized vertices");
    Realization {
        graph,
        codes,
        cocircuit_order: order.iter().map(|&i| m.cocircuits()[i]).collect(),
    }
}

/// The path from `v` to `w` in the spanning forest `base`, read off the
/// fundamental cocircuits: base edge `e` is on the path iff `v` and `w`
/// differ at `b_e`, and `e` precedes `e'` iff `e` lies on `v`'s side of
/// `b_{e'}`.
pub fn base_path(
    m: &Matroid,
    f: &GraphFramework,
    base: ElemSet,
    v: &VertexCode,
    w: &VertexCode,
) -> Result<Vec<usize>, RealizeError> {
    if !m.is_base(base) {
        return Err(MatroidError::NotABase(m.set_labels(base)).into());
    }
    let r = realize(m, f);
    let vi = r
        .vertex_of(v)
        .ok_or_else(|| RealizeError::NotAVertex(v.to_string()))?;
    let wi = r
        .vertex_of(w)
        .ok_or_else(|| RealizeError::NotAVertex(w.to_string()))?;
    let comps = r.graph.components();
    if !comps.iter().any(|c| c >> vi & 1 == 1 && c >> wi & 1 == 1) {
        return Err(RealizeError::NotConnected);
    }
    let coordinate = |e: usize| {
        let b = fundamental_unchecked(m, base, e);
        let bi = m
            .cocircuit_index(b)
            .expect("fundamental cocircuits are cocircuits");
        (
            bi,
            r.coordinate(b).expect("every cocircuit has a coordinate"),
        )
    };
    let on_path: Vec<(usize, usize, usize)> = base
        .iter()
        .map(|e| {
            let (bi, k) = coordinate(e);
            (e, bi, k)
        })
        .filter(|&(_, _, k)| v.get(k) != w.get(k))
        .collect();
    let mut ranked: Vec<(std::cmp::Reverse<usize>, usize)> = on_path
        .iter()
        .map(|&(e, _, _)| {
            let before = on_path
                .iter()
                .filter(|&&(e2, bi2, k2)| e2 != e && f.sigma(bi2, e) == v.get(k2))
                .count();
            (std::cmp::Reverse(before), e)
        })
        .collect();
    ranked.sort();
    Ok(ranked.into_iter().map(|(_, e)| e).collect())
}

/// The path from vertex `v` to vertex `w` using only edges of `forest`,
/// found by breadth-first search.
pub fn tree_path_by_search(
    g: &Multigraph,
    forest: ElemSet,
    v: usize,
    w: usize,
) -> Option<Vec<usize>> {
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut seen = 1u64 << v;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = Vec::new();
            let mut cur = w;
            while let Some((e, p)) = prev[cur] {
                path.push(e);
                cur = p;
            }
            path.reverse();
            return Some(path);
        }
        for e in forest {
            let edge = &g.edges()[e];
            if edge.tail != x && edge.head != x {
                continue;
            }
            let y = edge.other_end(x);
            if seen >> y & 1 == 0 {
                seen |= 1 << y;
                prev[y] = Some((e, x));
                queue.push_back(y);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceReport {
    pub set: ElemSet,
    /// The edges of `set` with their ends form a connected graph.
    pub connected: bool,
    /// `set` lies in one component and meets every bond with touched
    /// vertices on both shores.
    pub connected_by_bonds: bool,
    /// `set` is spanning in the matroid.
    pub spanning: bool,
    /// `(V, set)` has as many components as the realized graph.
    pub spanning_by_graph: bool,
}

/// Connectivity of the subgraph of the realized graph on edge set `x`,
/// each property computed in two independent ways.
pub fn subspace_connectivity(m: &Matroid, f: &GraphFramework, x: ElemSet) -> SubspaceReport {
    let r = realize(m, f);
    let g = &r.graph;
    let touched = g.touched(x);
    let comps = g.components();
    let one_component = comps.iter().filter(|c| **c & touched != 0).count() <= 1;
    let connected_by_bonds = one_component
        && r.cocircuit_order.iter().enumerate().all(|(k, &b)| {
            let sides = (0..g.vertex_count())
                .filter(|&v| touched >> v & 1 == 1)
                .map(|v| r.codes[v].get(k))
                .fold((false, false), |acc, s| (acc.0 || s < 0, acc.1 || s > 0));
            !(sides.0 && sides.1) || !b.is_disjoint(x)
        });
    SubspaceReport {
        set: x,
        connected: g.edge_set_connected(x),
        connected_by_bonds,
        spanning: m.is_spanning(x),
        spanning_by_graph: g.components_of(x).len() == comps.len(),
    }
}

/// Split an edge cut of the realized graph into disjoint bonds.
pub fn cut_decomposition(
    m: &Matroid,
    f: &GraphFramework,
    cut: ElemSet,
) -> Result<Vec<ElemSet>, RealizeError> {
    let r = realize(m, f);
    let g = &r.graph;
    // Contract the non-cut edges; the cut edges must then join distinct
    // classes and form a bipartite graph on them.
    let n = g.vertex_count();
    let mut uf = UnionFind::new(n);
    for e in m.ground() - cut {
        uf.union(g.edges()[e].tail, g.edges()[e].head);
    }
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let is_cut = (|| {
        for start in 0..n {
            let root = uf.find(start);
            if colour[root].is_some() {
                continue;
            }
            colour[root] = Some(false);
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                for e in cut {
                    let edge = &g.edges()[e];
                    let (a, b) = (uf.find(edge.tail), uf.find(edge.head));
                    if a == b {
                        return false;
                    }
                    let y = if a == x {
                        b
                    } else if b == x {
                        a
                    } else {
                        continue;
                    };
                    let want = !colour[x].expect("visited classes are coloured");
                    match colour[y] {
                        None => {
                            colour[y] = Some(want);
                            stack.push(y);
                        }
                        Some(c) if c != want => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    })();
    if !is_cut {
        return Err(RealizeError::NotACut(m.set_labels(cut)));
    }
    let report = binary_tame_report(m, Some(cut), None)?;
    Ok(report.decomposition.unwrap_or_default())
}
