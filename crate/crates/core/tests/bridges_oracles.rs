use std::collections::BTreeSet;

use framework_forge::bridges::{
    bridge_decomposition, countability_certificate, partition_tree, partition_tree_from,
    separating_bridge, BridgeDecomposition, BridgeError, Goodness,
};
use framework_forge::corpus;
use framework_forge::matroid::{build_matroid, connectivity, minor};
use framework_forge::{ElemSet, Matroid};

fn three_connected_corpus() -> Vec<(&'static str, Matroid)> {
    corpus::GRAPH_NAMES
        .iter()
        .map(|&n| {
            (
                n,
                corpus::graph(n)
                    .unwrap()
                    .cycle_matroid_with_cap(22)
                    .unwrap(),
            )
        })
        .filter(|(_, m)| connectivity(m, 3).k_connected)
        .collect()
}

/// Do the circle edges `e` and `f` fall in different components of the
/// circle with bridge `b`'s two end vertices removed? Computed on the
/// realized graph by flood fill along circle edges.
fn separated_in_graph(d: &BridgeDecomposition, b: usize, e: usize, f: usize) -> bool {
    let g = &d.realization.graph;
    let local = |x: usize| d.kept.iter().position(|y| y == x).unwrap();
    let bridge = &g.edges()[local(b)];
    let cut = [bridge.tail, bridge.head];
    let circle: Vec<usize> = d.circle.iter().map(|&x| local(x)).collect();
    let mut reached = BTreeSet::from([local(e)]);
    let mut changed = true;
    while changed {
        changed = false;
        for &x in &circle {
            if reached.contains(&x) {
                continue;
            }
            let ex = &g.edges()[x];
            let touches = reached.iter().any(|&y| {
                let ey = &g.edges()[y];
                [ex.tail, ex.head]
                    .iter()
                    .any(|v| !cut.contains(v) && (ey.tail == *v || ey.head == *v))
            });
            if touches {
                reached.insert(x);
                changed = true;
            }
        }
    }
    !reached.contains(&local(f))
}

#[test]
fn k4_four_cycle_decomposition() {
    let m = corpus::matroid("K4").unwrap();
    let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
    let d = bridge_decomposition(&m, o).unwrap();
    assert!(d.base_s.is_empty());
    assert_eq!(d.bridges, m.set_of(&["13", "24"]).unwrap());
    let opposite: BTreeSet<(usize, usize)> = d.attachments.values().copied().collect();
    assert_eq!(opposite, BTreeSet::from([(0, 2), (1, 3)]));
}

#[test]
fn k4_triangle_contracts_the_least_chord_tree_edge() {
    let m = corpus::matroid("K4").unwrap();
    let o = m.set_of(&["12", "13", "23"]).unwrap();
    let d = bridge_decomposition(&m, o).unwrap();
    // m / o has rank 1; every remaining edge is a base, and the least wins.
    let rest = m.ground() - o;
    let mo = minor(&m, o, ElemSet::EMPTY).unwrap();
    assert_eq!(mo.rank(), 1);
    assert_eq!(d.base_s, ElemSet::singleton(rest.first().unwrap()));
    assert_eq!(d.bridges.len() + d.loops_of_mprime.len(), 2);
}

#[test]
fn separating_bridges_agree_with_flood_fill() {
    for (name, m) in three_connected_corpus() {
        for &o in m.circuits() {
            if o == m.ground() {
                continue;
            }
            let d = bridge_decomposition(&m, o).unwrap();
            d.check_fundamental_arcs(&m).unwrap();
            for e in o {
                for f in o {
                    if e == f {
                        continue;
                    }
                    let sb = d.separating_bridge(&m, e, f).unwrap();
                    assert!(separated_in_graph(&d, sb.bridge, e, f), "{name}");
                    for b in d.bridges {
                        let i = d.edge_position(e).unwrap();
                        let j = d.edge_position(f).unwrap();
                        assert_eq!(
                            d.separates_positions(b, i, j),
                            separated_in_graph(&d, b, e, f)
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn named_separating_bridge_examples() {
    let m = corpus::matroid("K4").unwrap();
    let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
    let id = |l: &str| m.id_of(l).unwrap();
    let b = separating_bridge(&m, o, id("12"), id("34")).unwrap().bridge;
    assert!(b == id("13") || b == id("24"));
    // Both 12 and 23 lie on the arc through vertex 2 cut off by 13.
    assert_eq!(
        separating_bridge(&m, o, id("12"), id("23")).unwrap().bridge,
        id("24")
    );

    let w = corpus::matroid("W4").unwrap();
    let rim = w.set_of(&["12", "23", "34", "41"]).unwrap();
    let wid = |l: &str| w.id_of(l).unwrap();
    let b = separating_bridge(&w, rim, wid("12"), wid("34"))
        .unwrap()
        .bridge;
    assert!(w.label(b).starts_with('h'));
}

#[test]
fn k4_tree_is_hand_traceable() {
    let m = corpus::matroid("K4").unwrap();
    let o = m.set_of(&["12", "23", "34", "41"]).unwrap();
    let t = partition_tree(&m, o, m.id_of("13")).unwrap();
    assert_eq!(t.levels.len(), 2);
    assert_eq!(t.levels[0].bridges, m.set_of(&["13"]).unwrap());
    assert_eq!(t.levels[0].nodes.len(), 2);
    assert_eq!(t.levels[1].bridges, m.set_of(&["13", "24"]).unwrap());
    let c = countability_certificate(&t).unwrap();
    let nodes: BTreeSet<(usize, usize)> = c.injection.iter().map(|&(_, n, k)| (n, k)).collect();
    assert_eq!(nodes.len(), 4);
}

#[test]
fn w5_rim_trees_are_shallow_for_every_spoke() {
    let m = corpus::matroid("W5").unwrap();
    let rim = m.set_of(&["12", "23", "34", "45", "51"]).unwrap();
    let d = bridge_decomposition(&m, rim).unwrap();
    for e0 in d.bridges {
        let t = partition_tree_from(d.clone(), Some(e0)).unwrap();
        assert!(t.levels.len() <= 4);
        assert_eq!(t.levels.last().unwrap().bridges, d.bridges);
        assert_eq!(countability_certificate(&t).unwrap().injection.len(), 5);
    }
}

#[test]
fn certificates_hold_for_every_seed() {
    for (name, m) in three_connected_corpus() {
        for &o in m.circuits() {
            if o == m.ground() {
                continue;
            }
            let d = bridge_decomposition(&m, o).unwrap();
            for e0 in d.bridges {
                let t = partition_tree_from(d.clone(), Some(e0)).unwrap();
                let c = countability_certificate(&t).unwrap();
                assert_eq!(c.injection.len(), o.len(), "{name}");
                assert!(c.max_good_children <= 1);
                // Goodness is defined exactly from depth 2 on.
                for (n, l) in t.levels.iter().enumerate() {
                    for k in &l.nodes {
                        assert_eq!(k.goodness == Goodness::Undefined, n < 2);
                    }
                }
            }
        }
    }
}

#[test]
fn preconditions_are_enforced() {
    // A triangle with one element parallel to a: a 2-separation.
    let m = build_matroid(
        &["a", "b", "c", "d"],
        &[vec!["a", "b", "c"], vec!["a", "d"], vec!["b", "c", "d"]],
    )
    .unwrap();
    let o = m.set_of(&["a", "b", "c"]).unwrap();
    assert!(matches!(
        partition_tree(&m, o, None),
        Err(BridgeError::NotThreeConnected { .. })
    ));
    let theta = corpus::matroid("theta").unwrap();
    let o = theta.circuits()[0];
    let e = o.first().unwrap();
    let f = o.last().unwrap();
    assert!(matches!(
        separating_bridge(&theta, o, e, f),
        Err(BridgeError::NotThreeConnected { .. })
    ));
    let k4 = corpus::matroid("K4").unwrap();
    assert!(matches!(
        bridge_decomposition(&k4, k4.set_of(&["12", "23"]).unwrap()),
        Err(BridgeError::NotACircuit(_))
    ));
    let two = build_matroid(&["a", "b", "c"], &[vec!["a", "b"]]).unwrap();
    assert!(matches!(
        bridge_decomposition(&two, two.set_of(&["a", "b"]).unwrap()),
        Err(BridgeError::Disconnected)
    ));
}
