mod common;

use framework_forge::corpus;
use framework_forge::matroid::{
    binary_tame_report, build_matroid, connectivity, dual_matroid, fundamental_set, minor,
    switching_sequence,
};
use framework_forge::{ElemSet, Matroid};
use proptest::prelude::*;

fn small_corpus() -> Vec<(String, Matroid)> {
    let mut out: Vec<(String, Matroid)> = corpus::GRAPH_NAMES
        .iter()
        .chain(corpus::MATROID_NAMES)
        .filter(|n| **n != "Petersen")
        .map(|n| (n.to_string(), corpus::matroid(n).unwrap()))
        .collect();
    for (name, g) in corpus::small_connected_graphs() {
        out.push((name, g.cycle_matroid().unwrap()));
    }
    out
}

#[test]
fn cycle_matroids_match_parity_circuits_and_vertex_cuts() {
    for name in corpus::GRAPH_NAMES {
        let g = corpus::graph(name).unwrap();
        let m = g.cycle_matroid_with_cap(22).unwrap();
        assert_eq!(m.circuits(), common::circuits_of_graph(&g), "{name}");
        assert_eq!(m.cocircuits(), common::bonds_of_graph(&g), "{name}");
    }
}

#[test]
fn k4_has_seven_cycles_and_seven_bonds() {
    let g = corpus::graph("K4").unwrap();
    let sizes = |sets: Vec<ElemSet>| {
        let mut v: Vec<usize> = sets.iter().map(|s| s.len()).collect();
        v.sort();
        v
    };
    assert_eq!(sizes(common::circuits_of_graph(&g)), [3, 3, 3, 3, 4, 4, 4]);
    assert_eq!(sizes(common::bonds_of_graph(&g)), [3, 3, 3, 3, 4, 4, 4]);
    assert_eq!(g.cycles().len(), 7);
    assert_eq!(g.bonds().len(), 7);
}

#[test]
fn derived_families_match_oracles() {
    for (name, m) in small_corpus() {
        if m.len() > 10 {
            continue;
        }
        assert_eq!(m.cocircuits(), common::cocircuits(&m), "{name}");
        let mut bases = m.bases().to_vec();
        bases.sort();
        assert_eq!(bases, common::bases(&m), "{name}");
        for x in (0u64..1 << m.len()).map(ElemSet::from_bits) {
            assert_eq!(m.rank_of(x), common::rank(&m, x), "{name} {x:?}");
        }
    }
}

#[test]
fn all_three_subsets_of_four_is_u24() {
    let sets: Vec<Vec<&str>> = vec![
        vec!["1", "2", "3"],
        vec!["1", "2", "4"],
        vec!["1", "3", "4"],
        vec!["2", "3", "4"],
    ];
    let m = build_matroid(&["1", "2", "3", "4"], &sets).unwrap();
    // Strong elimination, checked pair by pair.
    for &c1 in m.circuits() {
        for &c2 in m.circuits() {
            if c1 == c2 {
                continue;
            }
            for e in c1 & c2 {
                let u = (c1 | c2).without(e);
                assert!(m.circuits().iter().any(|c| c.is_subset(u)));
            }
        }
    }
    assert_eq!(m.rank(), 2);
    assert_eq!(dual_matroid(&m), m);
    let r = binary_tame_report(&m, None, None).unwrap();
    assert!(!r.binary);
    assert_eq!(r.first_odd.unwrap().size, 3);
}

#[test]
fn triangle_dual_minor_and_fundamental_sets() {
    let m = corpus::matroid("C3").unwrap();
    let set = |ls: &[&str]| m.set_of(ls).unwrap();
    let d = dual_matroid(&m);
    assert_eq!(
        d.circuits(),
        [set(&["a", "b"]), set(&["a", "c"]), set(&["b", "c"])]
    );
    let c = minor(&m, set(&["a"]), ElemSet::EMPTY).unwrap();
    assert_eq!(c.circuits().len(), 1);
    assert_eq!(c.set_labels(c.circuits()[0]), ["b", "c"]);
    let id = |l: &str| m.id_of(l).unwrap();
    assert_eq!(
        fundamental_set(&m, set(&["a", "b"]), id("a")).unwrap(),
        set(&["a", "c"])
    );
    assert_eq!(
        fundamental_set(&m, set(&["a", "b"]), id("c")).unwrap(),
        m.ground()
    );
    assert_eq!(
        switching_sequence(&m, set(&["a", "b"]), id("c"), id("a")).unwrap(),
        [id("c"), id("a")]
    );
}

#[test]
fn contracting_a_k4_edge_gives_a_parallel_pair() {
    let m = corpus::matroid("K4").unwrap();
    for e in 0..m.len() {
        let c = minor(&m, ElemSet::singleton(e), ElemSet::EMPTY).unwrap();
        assert!(c.circuits().iter().any(|x| x.len() == 2));
        // Independent check: contraction circuits are the minimal nonempty
        // sets o - e over circuits o.
        let expect: Vec<ElemSet> = {
            let mut v: Vec<ElemSet> = m
                .circuits()
                .iter()
                .map(|&o| o.without(e))
                .filter(|o| !o.is_empty())
                .collect();
            v.sort_by_key(|s| s.len());
            let mut keep: Vec<ElemSet> = Vec::new();
            for s in v {
                if !keep.iter().any(|t| t.is_subset(s)) {
                    keep.push(s);
                }
            }
            let kept = m.ground().without(e);
            let mut out: Vec<ElemSet> = keep.into_iter().map(|s| s.compress(kept)).collect();
            out.sort();
            out.dedup();
            out
        };
        assert_eq!(c.circuits(), expect);
    }
}

/// Brute-force connectivity: smallest `l` with `|A|, |B| >= l` and
/// `r(A) + r(B) - r(E) < l`.
fn brute_separation(m: &Matroid, k: usize) -> Option<usize> {
    let n = m.len();
    let r = common::rank(m, m.ground());
    for l in 1..k {
        for a in (0u64..1 << n).map(ElemSet::from_bits) {
            let b = m.ground() - a;
            if a.len() >= l && b.len() >= l && common::rank(m, a) + common::rank(m, b) - r < l {
                return Some(l);
            }
        }
    }
    None
}

#[test]
fn connectivity_matches_bipartition_search() {
    for (name, m) in small_corpus() {
        if m.len() > 9 {
            continue;
        }
        for k in 2..=3 {
            let rep = connectivity(&m, k);
            let brute = brute_separation(&m, k);
            assert_eq!(rep.k_connected, brute.is_none(), "{name} k={k}");
            if let (Some(w), Some(l)) = (rep.witness, brute) {
                assert_eq!(w.k, l, "{name}");
            }
        }
    }
    assert!(connectivity(&corpus::matroid("K4").unwrap(), 3).k_connected);
    assert!(connectivity(&corpus::uniform(2, 4), 3).k_connected);
}

#[test]
fn switching_sequences_in_k4_are_short() {
    let m = corpus::matroid("K4").unwrap();
    for &base in m.bases() {
        let step = |x: usize| {
            if base.contains(x) {
                common::fundamental_cocircuit(&m, base, x)
            } else {
                common::fundamental_circuit(&m, base, x)
            }
        };
        for e in m.ground() {
            for f in m.ground() {
                let seq = switching_sequence(&m, base, e, f).unwrap();
                assert!(seq.len() <= 4);
                assert_eq!(seq.first(), Some(&e));
                assert_eq!(seq.last(), Some(&f));
                for w in seq.windows(2) {
                    assert!(step(w[0]).contains(w[1]));
                }
            }
        }
    }
}

#[test]
fn k4_intersections_are_even_and_a_star_decomposes_to_itself() {
    let g = corpus::graph("K4").unwrap();
    let m = g.cycle_matroid().unwrap();
    let star = g.star(0);
    let r = binary_tame_report(&m, Some(star), None).unwrap();
    assert!(r.binary);
    assert!(r.intersection_sizes.iter().all(|s| s % 2 == 0));
    assert_eq!(r.decomposition.unwrap(), [star]);
}

fn fundamental_duality(m: &Matroid) {
    for &base in m.bases() {
        for x in m.ground() - base {
            let c = fundamental_set(m, base, x).unwrap();
            assert_eq!(c, common::fundamental_circuit(m, base, x));
            for y in base {
                let b = fundamental_set(m, base, y).unwrap();
                assert_eq!(b.contains(x), c.contains(y));
            }
        }
    }
}

#[test]
fn fundamental_sets_are_dual_on_small_corpus() {
    let mut checked = 0;
    for (_, m) in small_corpus() {
        if m.len() <= 8 {
            fundamental_duality(&m);
            checked += 1;
        }
    }
    assert!(checked > 40);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn random_cycle_matroids_match_oracles(g in common::arb_graph()) {
        let m = g.cycle_matroid().unwrap();
        prop_assert_eq!(m.circuits(), common::circuits_of_graph(&g));
        prop_assert_eq!(m.cocircuits(), common::bonds_of_graph(&g));
        for x in (0u64..1 << m.len()).map(ElemSet::from_bits) {
            prop_assert_eq!(m.rank_of(x), common::graph_rank(&g, x));
        }
    }

    #[test]
    fn dual_is_an_involution_swapping_families(g in common::arb_graph()) {
        let m = g.cycle_matroid().unwrap();
        let d = dual_matroid(&m);
        prop_assert_eq!(d.circuits(), m.cocircuits());
        prop_assert_eq!(d.cocircuits(), m.circuits());
        prop_assert_eq!(dual_matroid(&d), m);
    }

    #[test]
    fn circuits_and_cocircuits_never_meet_once_and_meet_evenly(g in common::arb_graph()) {
        let m = g.cycle_matroid().unwrap();
        for &o in m.circuits() {
            for &b in m.cocircuits() {
                prop_assert_ne!((o & b).len(), 1);
                prop_assert_eq!((o & b).len() % 2, 0);
            }
        }
    }

    #[test]
    fn fundamental_set_duality(g in common::arb_graph()) {
        let m = g.cycle_matroid().unwrap();
        prop_assume!(m.len() <= 8);
        fundamental_duality(&m);
    }

    #[test]
    fn minors_commute(g in common::arb_graph(), c in any::<u64>(), d in any::<u64>()) {
        let m = g.cycle_matroid().unwrap();
        let c = ElemSet::from_bits(c) & m.ground();
        let d = ElemSet::from_bits(d) & (m.ground() - c);
        let both = minor(&m, c, d).unwrap();
        let kept = m.ground() - d;
        let step = minor(&minor(&m, ElemSet::EMPTY, d).unwrap(), c.compress(kept), ElemSet::EMPTY).unwrap();
        prop_assert_eq!(&both, &step);
        // Duality swaps contraction and deletion.
        let dd = minor(&dual_matroid(&m), d, c).unwrap();
        prop_assert_eq!(dual_matroid(&both), dd);
    }
}
