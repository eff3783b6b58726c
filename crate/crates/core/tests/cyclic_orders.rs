use std::collections::BTreeSet;

use framework_forge::cyclic::{linear_order_path, validate_cyclic, CyclicOrder, LinearOrder};
use proptest::prelude::*;

/// `[a, b, c]` iff going forward from `a`, `b` comes before `c`.
fn brute_holds(seq: &[u8], a: u8, b: u8, c: u8) -> bool {
    let pos = |x| seq.iter().position(|&y| y == x).unwrap();
    let n = seq.len();
    let (pa, pb, pc) = (pos(a), pos(b), pos(c));
    a != b && b != c && a != c && (pb + n - pa) % n < (pc + n - pa) % n
}

fn brute_triples(seq: &[u8]) -> BTreeSet<(u8, u8, u8)> {
    let mut out = BTreeSet::new();
    for &a in seq {
        for &b in seq {
            for &c in seq {
                if brute_holds(seq, a, b, c) {
                    out.insert((a, b, c));
                }
            }
        }
    }
    out
}

#[test]
fn rotation_closed_triples_of_four() {
    let t = brute_triples(&[1, 2, 3, 4]);
    assert_eq!(t.len(), 12);
    let c = validate_cyclic(&[1, 2, 3, 4], &t).unwrap();
    assert_eq!(c.items(), [1, 2, 3, 4]);
}

#[test]
fn restriction_next_and_arcs() {
    let c = CyclicOrder::from_sequence(vec!['a', 'b', 'c', 'd', 'e']).unwrap();
    let r = c.restrict(&BTreeSet::from(['a', 'c', 'd'])).unwrap();
    assert_eq!(r.items(), ['a', 'c', 'd']);
    let four = CyclicOrder::from_sequence(vec![1, 2, 3, 4]).unwrap();
    assert_eq!(four.clockwise_next(&2).unwrap(), 3);
    let arcs = four.arc_components(&BTreeSet::from([1, 3])).unwrap();
    let shape: Vec<(i32, Vec<i32>)> = arcs
        .iter()
        .map(|a| (a.anchor, a.interval.clone()))
        .collect();
    assert_eq!(shape, [(1, vec![2]), (3, vec![4])]);
    let six = CyclicOrder::from_sequence(vec![1, 2, 3, 4, 5, 6]).unwrap();
    let arcs = six.arc_components(&BTreeSet::from([1, 4])).unwrap();
    let shape: Vec<(i32, Vec<i32>)> = arcs
        .iter()
        .map(|a| (a.anchor, a.interval.clone()))
        .collect();
    assert_eq!(shape, [(1, vec![2, 3]), (4, vec![5, 6])]);
}

#[test]
fn path_model_of_three() {
    let p = linear_order_path(&LinearOrder::new(vec![1, 2, 3]).unwrap());
    assert_eq!(p.vertices.len(), 4);
    assert_eq!(p.edges.len(), 3);
    assert!(p.separates(1));
}

proptest! {
    #[test]
    fn triples_match_positions(seq in Just((0u8..7).collect::<Vec<_>>()).prop_shuffle()) {
        let c = CyclicOrder::from_sequence(seq.clone()).unwrap();
        let t = brute_triples(&seq);
        prop_assert_eq!(c.triples(), t.clone());
        let back = validate_cyclic(c.items(), &t).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert!(c.reversed().equal_up_to_reversal(&c));
        prop_assert_eq!(c.reversed().triples(), t.iter().map(|&(a, b, cc)| (a, cc, b)).collect());
    }

    #[test]
    fn restriction_inherits_triples(
        seq in Just((0u8..7).collect::<Vec<_>>()).prop_shuffle(),
        keep in prop::collection::btree_set(0u8..7, 2..7),
    ) {
        let c = CyclicOrder::from_sequence(seq.clone()).unwrap();
        let r = c.restrict(&keep).unwrap();
        for &(a, b, cc) in &r.triples() {
            prop_assert!(brute_holds(&seq, a, b, cc));
        }
    }
}
