//! Bridges of a circuit and the partition tree built from them.
//!
//! For a circuit `o` of a connected matroid `m`, fix the least base `s` of
//! `m / o` and put `M' = m / s`. Then `o` is a spanning circuit of `M'`, so
//! in any graph realizing `M'` it is a cycle `C'` through every vertex, and
//! every other non-loop element (a *bridge*) joins two vertices of `C'`.
//!
//! Positions on `C'`: the cycle is the edge sequence `x_0, .., x_{k-1}`,
//! and vertex `i` sits between `x_{i-1}` and `x_i`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::cyclic::{Arc, CyclicOrder};
use crate::elemset::ElemSet;
use crate::framework::{find_framework, restrict_framework, FrameworkError, GraphFramework};
use crate::matroid::{connectivity, fundamental_unchecked, minor, Matroid, MatroidError};
use crate::realizer::{realize, Realization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("{0:?} is not a circuit")]
    NotACircuit(Vec<String>),
    #[error("the matroid is not connected")]
    Disconnected,
    #[error("the matroid is not 3-connected: {side_a:?} | {side_b:?} is a {k}-separation")]
    NotThreeConnected {
        side_a: Vec<String>,
        side_b: Vec<String>,
        k: usize,
    },
    #[error("{0:?} is not a bridge of the circuit")]
    NotABridge(String),
    #[error("{0:?} is not an element of the circuit")]
    NotOnCircuit(String),
    #[error("elements to separate must be distinct")]
    SameElement,
    #[error("no bridge separates {e:?} from {f:?}")]
    NoBridge { e: String, f: String },
    #[error("the contracted matroid has no graph framework")]
    NoFramework,
    #[error("certificate check failed at level {level}, node {node}: {reason}")]
    CertificateFailure {
        level: usize,
        node: usize,
        reason: String,
    },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Framework(#[from] FrameworkError),
}

/// A point of the circle `C'`, by position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CirclePoint {
    Vertex(usize),
    Edge(usize),
}

#[derive(Debug, Clone)]
pub struct BridgeDecomposition {
    pub circuit: ElemSet,
    pub base_s: ElemSet,
    /// Ground set of `M'` as ids of `m`.
    pub kept: ElemSet,
    /// `M' = m / s`, with its own (compressed) ids.
    pub contracted: Matroid,
    pub realization: Realization,
    /// Elements of `o` (ids of `m`) in the order they occur around `C'`.
    pub circle: Vec<usize>,
    pub circle_order: CyclicOrder<usize>,
    pub bridges: ElemSet,
    pub loops_of_mprime: ElemSet,
    /// Attachment vertex positions `(p, q)`, `p < q`, of each bridge.
    pub attachments: BTreeMap<usize, (usize, usize)>,
    labels: Vec<String>,
}

fn failure(reason: impl Into<String>) -> BridgeError {
    BridgeError::CertificateFailure {
        level: 0,
        node: 0,
        reason: reason.into(),
    }
}

fn check_circuit(m: &Matroid, o: ElemSet) -> Result<(), BridgeError> {
    if !m.is_circuit(o) {
        return Err(BridgeError::NotACircuit(m.set_labels(o)));
    }
    if !connectivity(m, 2).k_connected {
        return Err(BridgeError::Disconnected);
    }
    Ok(())
}

/// `s` = least base of `m / o`, as ids of `m`.
fn contraction_base(m: &Matroid, o: ElemSet) -> Result<ElemSet, BridgeError> {
    let rest = m.ground() - o;
    let mo = minor(m, o, ElemSet::EMPTY)?;
    Ok(mo.greedy_base(mo.ground()).expand(rest))
}

/// Decompose with a framework found by search on `M'`.
pub fn bridge_decomposition(m: &Matroid, o: ElemSet) -> Result<BridgeDecomposition, BridgeError> {
    check_circuit(m, o)?;
    let s = contraction_base(m, o)?;
    let mp = minor(m, s, ElemSet::EMPTY)?;
    let f = find_framework(&mp)
        .framework
        .ok_or(BridgeError::NoFramework)?;
    assemble(m, o, s, mp, &f)
}

/// Decompose using a known framework of `m`, restricted to `M'`.
pub fn bridge_decomposition_with(
    m: &Matroid,
    o: ElemSet,
    framework: &GraphFramework,
) -> Result<BridgeDecomposition, BridgeError> {
    check_circuit(m, o)?;
    let s = contraction_base(m, o)?;
    let (mp, f) = restrict_framework(m, framework, s, ElemSet::EMPTY)?;
    assemble(m, o, s, mp, &f)
}

fn assemble(
    m: &Matroid,
    o: ElemSet,
    s: ElemSet,
    mp: Matroid,
    f: &GraphFramework,
) -> Result<BridgeDecomposition, BridgeError> {
    let kept = m.ground() - s;
    let ids: Vec<usize> = kept.to_vec();
    let realization = realize(&mp, f);
    let g = &realization.graph;
    let walk = g
        .traversal(o.compress(kept))
        .map_err(|_| failure("the circuit is not a cycle of the realized graph"))?;
    let mut position = BTreeMap::new();
    let mut circle = Vec::with_capacity(walk.len());
    for (i, &(e, sense)) in walk.iter().enumerate() {
        let edge = &g.edges()[e];
        let start = match sense {
            crate::graph::Sense::Forward => edge.tail,
            crate::graph::Sense::Backward => edge.head,
        };
        position.insert(start, i);
        circle.push(ids[e]);
    }
    let loops_of_mprime: ElemSet = (0..mp.len())
        .filter(|&e| mp.is_loop(e))
        .map(|e| ids[e])
        .collect();
    let bridges = kept - o - loops_of_mprime;
    let mut attachments = BTreeMap::new();
    for fb in bridges {
        let edge = &g.edges()[kept.iter().position(|x| x == fb).expect("bridges are kept")];
        let (Some(&a), Some(&b)) = (position.get(&edge.tail), position.get(&edge.head)) else {
            return Err(failure(format!(
                "bridge {} does not attach to the circle",
                m.label(fb)
            )));
        };
        attachments.insert(fb, (a.min(b), a.max(b)));
    }
    let circle_order =
        CyclicOrder::from_sequence(circle.clone()).expect("circle elements are distinct");
    Ok(BridgeDecomposition {
        circuit: o,
        base_s: s,
        kept,
        contracted: mp,
        realization,
        circle,
        circle_order,
        bridges,
        loops_of_mprime,
        attachments,
        labels: m.labels().to_vec(),
    })
}

impl BridgeDecomposition {
    pub fn circle_len(&self) -> usize {
        self.circle.len()
    }

    /// Position of an element of `o` on the circle.
    pub fn edge_position(&self, e: usize) -> Option<usize> {
        self.circle.iter().position(|&x| x == e)
    }

    /// `x_{i-1}|x_i`.
    pub fn vertex_name(&self, i: usize) -> String {
        let k = self.circle.len();
        format!(
            "{}|{}",
            self.labels[self.circle[(i + k - 1) % k]],
            self.labels[self.circle[i]]
        )
    }

    /// The circle as a cyclic order of alternating vertices and edges.
    pub fn circle_points(&self) -> CyclicOrder<CirclePoint> {
        let seq = (0..self.circle.len())
            .flat_map(|i| [CirclePoint::Vertex(i), CirclePoint::Edge(i)])
            .collect();
        CyclicOrder::from_sequence(seq).expect("circle points are distinct")
    }

    /// Arcs of the circle with the given vertices removed.
    pub fn arcs(&self, vertices: &BTreeSet<usize>) -> Vec<Arc<CirclePoint>> {
        let s: BTreeSet<CirclePoint> = vertices.iter().map(|&v| CirclePoint::Vertex(v)).collect();
        self.circle_points()
            .arc_components(&s)
            .expect("attachment vertices lie on the circle")
    }

    /// Does bridge `b` have its attachments on different sides of the
    /// circle edges at positions `i` and `j`?
    pub fn separates_positions(&self, b: usize, i: usize, j: usize) -> bool {
        let (p, q) = self.attachments[&b];
        (p <= i && i < q) != (p <= j && j < q)
    }

    /// Shape check: for every bridge `f` and every `g ∈ o`, the
    /// fundamental circuit of `f` with respect to `s ∪ o - g` meets `o` in
    /// the arc between `f`'s attachments that avoids `g`.
    pub fn check_fundamental_arcs(&self, m: &Matroid) -> Result<(), BridgeError> {
        for (&fb, &(p, q)) in &self.attachments {
            let arcs = self.arcs(&BTreeSet::from([p, q]));
            for (gi, &g) in self.circle.iter().enumerate() {
                let base = self.base_s | self.circuit.without(g);
                if !m.is_base(base) {
                    return Err(failure(format!("s + o - {} is not a base", m.label(g))));
                }
                let fundamental = fundamental_unchecked(m, base, fb);
                let want = arcs
                    .iter()
                    .map(|a| {
                        a.interval
                            .iter()
                            .filter_map(|pt| match pt {
                                CirclePoint::Edge(i) => Some(self.circle[*i]),
                                CirclePoint::Vertex(_) => None,
                            })
                            .collect::<ElemSet>()
                    })
                    .find(|arc| !arc.contains(self.circle[gi]))
                    .expect("one of the two arcs avoids g");
                if fundamental & self.circuit != want {
                    return Err(failure(format!(
                        "fundamental circuit of {} with respect to s + o - {} is not an arc",
                        m.label(fb),
                        m.label(g)
                    )));
                }
            }
        }
        Ok(())
    }

    /// A bridge whose attachments separate `e` from `f` on the circle. The
    /// first candidates come from the fundamental cocircuit of `f` with
    /// respect to `s ∪ o - e`; otherwise all bridges are scanned.
    pub fn separating_bridge(
        &self,
        m: &Matroid,
        e: usize,
        f: usize,
    ) -> Result<SeparatingBridge, BridgeError> {
        let (Some(i), Some(j)) = (self.edge_position(e), self.edge_position(f)) else {
            let bad = if self.circuit.contains(e) { f } else { e };
            return Err(BridgeError::NotOnCircuit(m.label(bad).to_string()));
        };
        if e == f {
            return Err(BridgeError::SameElement);
        }
        let base = self.base_s | self.circuit.without(e);
        let cocircuit = fundamental_unchecked(m, base, f);
        for g in cocircuit.without(e).without(f) {
            if self.bridges.contains(g) && self.separates_positions(g, i, j) {
                return Ok(SeparatingBridge {
                    bridge: g,
                    from_cocircuit: true,
                });
            }
        }
        self.bridges
            .iter()
            .find(|&g| self.separates_positions(g, i, j))
            .map(|g| SeparatingBridge {
                bridge: g,
                from_cocircuit: false,
            })
            .ok_or_else(|| BridgeError::NoBridge {
                e: m.label(e).to_string(),
                f: m.label(f).to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparatingBridge {
    pub bridge: usize,
    /// Found among the fundamental-cocircuit candidates rather than by scan.
    pub from_cocircuit: bool,
}

fn require_three_connected(m: &Matroid) -> Result<(), BridgeError> {
    let report = connectivity(m, 3);
    if report.k_connected {
        return Ok(());
    }
    let w = report.witness.expect("a separation is witnessed");
    Err(BridgeError::NotThreeConnected {
        side_a: m.set_labels(w.side_a),
        side_b: m.set_labels(w.side_b),
        k: w.k,
    })
}

pub fn separating_bridge(
    m: &Matroid,
    o: ElemSet,
    e: usize,
    f: usize,
) -> Result<SeparatingBridge, BridgeError> {
    require_three_connected(m)?;
    bridge_decomposition(m, o)?.separating_bridge(m, e, f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Goodness {
    /// Depth below 2: goodness refers to the grandparent.
    Undefined,
    Good,
    Bad,
}

/// An arc of `C'` minus `J_n`, running from vertex `anchor` to vertex `end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub anchor: usize,
    pub end: usize,
    /// Edge positions, in circle order.
    pub edges: Vec<usize>,
    /// Vertex positions strictly inside.
    pub interior: Vec<usize>,
    pub parent: Option<usize>,
    pub goodness: Goodness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeLevel {
    /// `I_n`.
    pub bridges: ElemSet,
    /// `J_n`, as vertex positions.
    pub attachments: BTreeSet<usize>,
    /// `K_n`.
    pub nodes: Vec<TreeNode>,
}

#[derive(Debug, Clone)]
pub struct PartitionTree {
    pub decomposition: BridgeDecomposition,
    pub e0: usize,
    pub levels: Vec<TreeLevel>,
}

/// Build the partition tree of circuit `o` seeded at bridge `e0` (the least
/// bridge if `None`).
pub fn partition_tree(
    m: &Matroid,
    o: ElemSet,
    e0: Option<usize>,
) -> Result<PartitionTree, BridgeError> {
    require_three_connected(m)?;
    let d = bridge_decomposition(m, o)?;
    partition_tree_from(d, e0)
}

/// Partition tree over an existing decomposition. The caller is responsible
/// for 3-connectivity.
pub fn partition_tree_from(
    d: BridgeDecomposition,
    e0: Option<usize>,
) -> Result<PartitionTree, BridgeError> {
    let e0 = match e0 {
        Some(e) => e,
        None => d
            .bridges
            .first()
            .ok_or_else(|| BridgeError::NotABridge("(none: the circuit has no bridges)".into()))?,
    };
    if !d.bridges.contains(e0) {
        let name = d.labels.get(e0).cloned().unwrap_or_else(|| e0.to_string());
        return Err(BridgeError::NotABridge(name));
    }
    let mut levels: Vec<TreeLevel> = Vec::new();
    let mut current = ElemSet::singleton(e0);
    loop {
        let level = make_level(&d, current, levels.last());
        let next = next_bridges(&d, &level);
        levels.push(level);
        if next == current {
            break;
        }
        if levels.len() > d.bridges.len() + 1 {
            return Err(BridgeError::CertificateFailure {
                level: levels.len() - 1,
                node: 0,
                reason: "level bound exceeded".into(),
            });
        }
        current = next;
    }
    if current != d.bridges {
        return Err(BridgeError::CertificateFailure {
            level: levels.len() - 1,
            node: 0,
            reason: format!(
                "{} bridges never enter the tree",
                (d.bridges - current).len()
            ),
        });
    }
    for n in 2..levels.len() {
        for k in 0..levels[n].nodes.len() {
            let g = goodness(&d, &levels, n, k);
            levels[n].nodes[k].goodness = g;
        }
    }
    Ok(PartitionTree {
        decomposition: d,
        e0,
        levels,
    })
}

fn make_level(d: &BridgeDecomposition, bridges: ElemSet, prev: Option<&TreeLevel>) -> TreeLevel {
    let attachments: BTreeSet<usize> = bridges
        .iter()
        .flat_map(|b| {
            let (p, q) = d.attachments[&b];
            [p, q]
        })
        .collect();
    let k = d.circle_len();
    let nodes = d
        .arcs(&attachments)
        .into_iter()
        .map(|arc| {
            let CirclePoint::Vertex(anchor) = arc.anchor else {
                unreachable!("arcs are anchored at vertices")
            };
            let mut edges = Vec::new();
            let mut interior = Vec::new();
            for pt in &arc.interval {
                match *pt {
                    CirclePoint::Edge(i) => edges.push(i),
                    CirclePoint::Vertex(v) => interior.push(v),
                }
            }
            let end = (anchor + edges.len()) % k;
            let parent = prev.map(|p| {
                p.nodes
                    .iter()
                    .position(|n| n.edges.contains(&edges[0]))
                    .expect("every arc lies inside an arc of the previous level")
            });
            TreeNode {
                anchor,
                end,
                edges,
                interior,
                parent,
                goodness: Goodness::Undefined,
            }
        })
        .collect();
    TreeLevel {
        bridges,
        attachments,
        nodes,
    }
}

/// `I_{n+1}`: bridges with an end in `J_n` or ends in different arcs.
fn next_bridges(d: &BridgeDecomposition, level: &TreeLevel) -> ElemSet {
    let mut arc_of = BTreeMap::new();
    for (i, n) in level.nodes.iter().enumerate() {
        for &v in &n.interior {
            arc_of.insert(v, i);
        }
    }
    d.bridges
        .iter()
        .filter(|b| {
            let (p, q) = d.attachments[b];
            level.attachments.contains(&p)
                || level.attachments.contains(&q)
                || arc_of[&p] != arc_of[&q]
        })
        .collect()
}

/// Is vertex `x` on the clockwise vertex range from `a` to `b` inclusive?
fn in_range(x: usize, a: usize, b: usize, k: usize) -> bool {
    (x + k - a) % k <= (b + k - a) % k
}

/// Node `k` at level `n` is good if no bridge of `I_n` joins the two pieces
/// of its grandparent's closed arc left after removing `k`. A piece without
/// edges is a single vertex and does not count.
fn goodness(d: &BridgeDecomposition, levels: &[TreeLevel], n: usize, k: usize) -> Goodness {
    if n < 2 {
        return Goodness::Undefined;
    }
    let node = &levels[n].nodes[k];
    let parent = node.parent.expect("levels above 0 have parents");
    let gp = levels[n - 1].nodes[parent]
        .parent
        .expect("levels above 0 have parents");
    let g = &levels[n - 2].nodes[gp];
    let len = d.circle_len();
    let (a, b) = (g.anchor, g.end);
    let (p, q) = (node.anchor, node.end);
    if p == a || q == b {
        return Goodness::Good;
    }
    let bad = levels[n].bridges.iter().any(|f| {
        let (x, y) = d.attachments[&f];
        (in_range(x, a, p, len) && in_range(y, q, b, len))
            || (in_range(y, a, p, len) && in_range(x, q, b, len))
    });
    if bad {
        Goodness::Bad
    } else {
        Goodness::Good
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountabilityCertificate {
    /// `(element of o, level, node)`: the first node on the element's ray
    /// from which every later node is good. Levels past the last real one
    /// repeat it.
    pub injection: Vec<(usize, usize, usize)>,
    pub real_levels: usize,
    pub good_nodes: usize,
    pub max_good_children: usize,
}

/// Check good-child uniqueness and child counts, then build the injective
/// map from elements of `o` to tree nodes.
pub fn countability_certificate(t: &PartitionTree) -> Result<CountabilityCertificate, BridgeError> {
    let d = &t.decomposition;
    let real = t.levels.len();
    let mut levels = t.levels.clone();
    let last = levels.last().expect("trees have a level").clone();
    for _ in 0..2 {
        let copy = TreeLevel {
            bridges: last.bridges,
            attachments: last.attachments.clone(),
            nodes: last
                .nodes
                .iter()
                .enumerate()
                .map(|(i, n)| TreeNode {
                    parent: Some(i),
                    goodness: Goodness::Undefined,
                    ..n.clone()
                })
                .collect(),
        };
        levels.push(copy);
    }
    for n in 2..levels.len() {
        for k in 0..levels[n].nodes.len() {
            let g = goodness(d, &levels, n, k);
            levels[n].nodes[k].goodness = g;
        }
    }
    let fail = |level: usize, node: usize, reason: String| BridgeError::CertificateFailure {
        level,
        node,
        reason,
    };
    let mut max_good_children = 0;
    for n in 0..levels.len() - 1 {
        for (k, node) in levels[n].nodes.iter().enumerate() {
            let children: Vec<&TreeNode> = levels[n + 1]
                .nodes
                .iter()
                .filter(|c| c.parent == Some(k))
                .collect();
            let good = children
                .iter()
                .filter(|c| c.goodness == Goodness::Good)
                .count();
            max_good_children = max_good_children.max(good);
            if good > 1 {
                return Err(fail(n, k, format!("{good} good children")));
            }
            let splits = node
                .interior
                .iter()
                .filter(|v| levels[n + 1].attachments.contains(v))
                .count();
            if children.len() != splits + 1 {
                return Err(fail(
                    n,
                    k,
                    format!("{} children but {splits} new attachments", children.len()),
                ));
            }
        }
    }
    let mut injection = Vec::with_capacity(d.circle_len());
    let mut used = BTreeSet::new();
    for i in 0..d.circle_len() {
        let ray: Vec<usize> = levels
            .iter()
            .map(|l| {
                l.nodes
                    .iter()
                    .position(|n| n.edges.contains(&i))
                    .expect("arcs cover the edges")
            })
            .collect();
        let mut start = None;
        for n in (2..levels.len()).rev() {
            if levels[n].nodes[ray[n]].goodness == Goodness::Good {
                start = Some(n);
            } else {
                break;
            }
        }
        let Some(n) = start else {
            return Err(fail(
                levels.len() - 1,
                ray[levels.len() - 1],
                "ray never becomes good".into(),
            ));
        };
        if !used.insert((n, ray[n])) {
            return Err(fail(n, ray[n], "two elements share a node".into()));
        }
        injection.push((d.circle[i], n, ray[n]));
    }
    injection.sort();
    let good_nodes = levels[..real]
        .iter()
        .flat_map(|l| &l.nodes)
        .filter(|n| n.goodness == Goodness::Good)
        .count();
    Ok(CountabilityCertificate {
        injection,
        real_levels: real,
        good_nodes,
        max_good_children,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::matroid::build_matroid;

    fn k4() -> Matroid {
        corpus::matroid("K4").unwrap()
    }

    #[test]
    fn k4_hamiltonian_circuit() {
        let m = k4();
        let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
        let d = bridge_decomposition(&m, o).unwrap();
        assert_eq!(d.base_s, ElemSet::EMPTY);
        assert_eq!(d.bridges, m.set_of(&["13", "24"]).unwrap());
        assert!(d.loops_of_mprime.is_empty());
        // Each chord joins opposite vertices of the 4-cycle.
        for &(p, q) in d.attachments.values() {
            assert_eq!(q - p, 2);
        }
        d.check_fundamental_arcs(&m).unwrap();
    }

    #[test]
    fn k4_triangle_contracts_one_edge() {
        let m = k4();
        let o = m.set_of(&["12", "23", "13"]).unwrap();
        let d = bridge_decomposition(&m, o).unwrap();
        assert_eq!(d.base_s.len(), 1);
        assert_eq!(d.contracted.len(), 5);
        assert_eq!(d.bridges.len(), 2);
        d.check_fundamental_arcs(&m).unwrap();
    }

    #[test]
    fn lone_circuit_has_no_bridges() {
        let m = build_matroid(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap();
        let d = bridge_decomposition(&m, m.ground()).unwrap();
        assert!(d.bridges.is_empty());
        assert!(matches!(
            bridge_decomposition(&m, m.set_of(&["a", "b"]).unwrap()),
            Err(BridgeError::NotACircuit(_))
        ));
    }

    #[test]
    fn separating_chords() {
        let m = k4();
        let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
        let id = |l: &str| m.id_of(l).unwrap();
        let b = separating_bridge(&m, o, id("12"), id("34")).unwrap().bridge;
        assert!(b == id("13") || b == id("24"));
        // 12 and 23 lie on the same side of chord 13.
        assert_eq!(
            separating_bridge(&m, o, id("12"), id("23")).unwrap().bridge,
            id("24")
        );
    }

    #[test]
    fn k4_tree_and_certificate() {
        let m = k4();
        let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
        let t = partition_tree(&m, o, Some(m.id_of("13").unwrap())).unwrap();
        assert_eq!(t.levels.len(), 2);
        assert_eq!(t.levels[0].attachments.len(), 2);
        assert_eq!(t.levels[0].nodes.len(), 2);
        assert_eq!(t.levels[1].bridges, m.set_of(&["13", "24"]).unwrap());
        let c = countability_certificate(&t).unwrap();
        assert_eq!(c.injection.len(), 4);
        assert!(c.max_good_children <= 1);
    }

    #[test]
    fn parallel_extension_is_not_three_connected() {
        let m = build_matroid(
            &["a", "b", "c", "d"],
            &[vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c", "d"]],
        )
        .unwrap();
        assert!(matches!(
            partition_tree(&m, m.set_of(&["a", "b", "c"]).unwrap(), None),
            Err(BridgeError::NotThreeConnected { .. })
        ));
    }

    #[test]
    fn w5_rim() {
        let m = corpus::matroid("W5").unwrap();
        let o = m.set_of(&["12", "23", "34", "45", "51"]).unwrap();
        let t = partition_tree(&m, o, None).unwrap();
        assert!(t.levels.len() <= 4);
        let c = countability_certificate(&t).unwrap();
        assert_eq!(c.injection.len(), 5);
    }

    #[test]
    fn rejects_non_bridge_seed() {
        let m = k4();
        let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
        assert!(matches!(
            partition_tree(&m, o, Some(m.id_of("12").unwrap())),
            Err(BridgeError::NotABridge(_))
        ));
    }
}
