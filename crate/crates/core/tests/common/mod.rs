//! Brute-force oracles. These recompute everything from first principles
//! (degree parity, vertex cuts, raw independence) and share no code with
//! the library beyond its data types.
#![allow(dead_code)]

use framework_forge::graph::Multigraph;
use framework_forge::matroid::Matroid;
use framework_forge::ElemSet;
use proptest::prelude::*;

fn minimal(mut sets: Vec<ElemSet>) -> Vec<ElemSet> {
    sets.sort_by_key(|s| s.len());
    let mut out: Vec<ElemSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|t| t.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
    (1u64..1 << n).map(ElemSet::from_bits)
}

/// Minimal nonempty edge sets in which every vertex has even degree.
pub fn circuits_of_graph(g: &Multigraph) -> Vec<ElemSet> {
    let even = |x: ElemSet| {
        let mut deg = vec![0usize; g.vertex_count()];
        for e in x {
            let edge = &g.edges()[e];
            deg[edge.tail] += 1;
            deg[edge.head] += 1;
        }
        deg.iter().all(|d| d % 2 == 0)
    };
    minimal(all_subsets(g.edge_count()).filter(|&x| even(x)).collect())
}

/// Minimal nonempty edge cuts `δ(U)` over all vertex sets `U`.
pub fn bonds_of_graph(g: &Multigraph) -> Vec<ElemSet> {
    let mut cuts = Vec::new();
    for u in 0u64..1 << g.vertex_count() {
        let cut: ElemSet = (0..g.edge_count())
            .filter(|&e| {
                let edge = &g.edges()[e];
                (u >> edge.tail & 1) != (u >> edge.head & 1)
            })
            .collect();
        if !cut.is_empty() {
            cuts.push(cut);
        }
    }
    minimal(cuts)
}

/// `|V(X)| - c(X)` by depth-first search.
pub fn graph_rank(g: &Multigraph, x: ElemSet) -> usize {
    let n = g.vertex_count();
    let mut adj = vec![Vec::new(); n];
    let mut touched = vec![false; n];
    for e in x {
        let edge = &g.edges()[e];
        adj[edge.tail].push(edge.head);
        adj[edge.head].push(edge.tail);
        touched[edge.tail] = true;
        touched[edge.head] = true;
    }
    let mut seen = vec![false; n];
    let mut comps = 0;
    for v in 0..n {
        if !touched[v] || seen[v] {
            continue;
        }
        comps += 1;
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(a) = stack.pop() {
            for &b in &adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    touched.iter().filter(|&&t| t).count() - comps
}

/// Independent iff no listed circuit is contained in it.
pub fn independent(m: &Matroid, x: ElemSet) -> bool {
    !m.circuits().iter().any(|c| c.is_subset(x))
}

pub fn bases(m: &Matroid) -> Vec<ElemSet> {
    let mut ind: Vec<ElemSet> = (0u64..1 << m.len())
        .map(ElemSet::from_bits)
        .filter(|&x| independent(m, x))
        .collect();
    let r = ind.iter().map(|x| x.len()).max().unwrap_or(0);
    ind.retain(|x| x.len() == r);
    ind.sort();
    ind
}

pub fn rank(m: &Matroid, x: ElemSet) -> usize {
    (0u64..1 << m.len())
        .map(ElemSet::from_bits)
        .filter(|&y| y.is_subset(x) && independent(m, y))
        .map(|y| y.len())
        .max()
        .unwrap_or(0)
}

/// Minimal sets meeting every base.
pub fn cocircuits(m: &Matroid) -> Vec<ElemSet> {
    let bs = bases(m);
    minimal(
        all_subsets(m.len())
            .filter(|&x| bs.iter().all(|b| !b.is_disjoint(x)))
            .collect(),
    )
}

/// Unique circuit in `base + x`, by trying every subset.
pub fn fundamental_circuit(m: &Matroid, base: ElemSet, x: usize) -> ElemSet {
    *m.circuits()
        .iter()
        .find(|c| c.contains(x) && c.is_subset(base.with(x)))
        .expect("base + x is dependent")
}

/// Unique cocircuit in `E - base + y`.
pub fn fundamental_cocircuit(m: &Matroid, base: ElemSet, y: usize) -> ElemSet {
    let outside = m.ground() - base;
    cocircuits(m)
        .into_iter()
        .find(|b| b.contains(y) && b.is_subset(outside.with(y)))
        .expect("complement of a base plus one is codependent")
}

/// Path from `v` to `w` in the forest, by recursive depth-first search.
pub fn forest_path(g: &Multigraph, forest: ElemSet, v: usize, w: usize) -> Option<Vec<usize>> {
    fn go(
        g: &Multigraph,
        forest: ElemSet,
        at: usize,
        w: usize,
        used: ElemSet,
        path: &mut Vec<usize>,
    ) -> bool {
        if at == w {
            return true;
        }
        for e in forest - used {
            let edge = &g.edges()[e];
            let next = if edge.tail == at {
                edge.head
            } else if edge.head == at {
                edge.tail
            } else {
                continue;
            };
            path.push(e);
            if go(g, forest, next, w, used.with(e), path) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = Vec::new();
    go(g, forest, v, w, ElemSet::EMPTY, &mut path).then_some(path)
}

/// Multigraphs on 2..=5 vertices with 1..=8 edges labelled `e0..e7`;
/// loops, parallel edges and disconnection all occur.
pub fn arb_graph() -> impl Strategy<Value = Multigraph> {
    (2usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 1..=8)))
        .prop_map(|(n, pairs)| {
            let vertices = (0..n).map(|i| format!("v{i}")).collect();
            let edges = pairs
                .into_iter()
                .enumerate()
                .map(|(i, (a, b))| (format!("e{i}"), a, b))
                .collect();
            Multigraph::new(vertices, edges).unwrap()
        })
}

/// Connected graphs from `arb_graph`, by joining every vertex not reached
/// from vertex 0 to it.
pub fn arb_connected_graph() -> impl Strategy<Value = Multigraph> {
    arb_graph().prop_map(|g| {
        let n = g.vertex_count();
        let mut edges: Vec<(String, usize, usize)> = g
            .edges()
            .iter()
            .map(|e| (e.label.clone(), e.tail, e.head))
            .collect();
        for v in 1..n {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut stack = vec![0];
            while let Some(a) = stack.pop() {
                for &(_, x, y) in &edges {
                    for (p, q) in [(x, y), (y, x)] {
                        if p == a && !seen[q] {
                            seen[q] = true;
                            stack.push(q);
                        }
                    }
                }
            }
            if !seen[v] {
                edges.push((format!("j{v}"), 0, v));
            }
        }
        Multigraph::new(g.vertices().to_vec(), edges).unwrap()
    })
}
