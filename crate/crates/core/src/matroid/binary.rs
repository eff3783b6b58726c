//! Parity diagnostics: binary test, cocircuit decompositions, and the
//! union-of-circuits criterion.

use std::collections::BTreeSet;

use crate::elemset::ElemSet;

use super::{Matroid, MatroidError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddIntersection {
    pub circuit: ElemSet,
    pub cocircuit: ElemSet,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionOfCircuits {
    pub set: ElemSet,
    /// No cocircuit meets the set exactly once.
    pub by_cocircuits: bool,
    /// The set equals the union of the circuits it contains.
    pub by_circuits: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryReport {
    pub binary: bool,
    pub first_odd: Option<OddIntersection>,
    /// A circuit–cocircuit pair meeting in exactly one element; always
    /// `None` for a valid matroid.
    pub single_intersection: Option<OddIntersection>,
    pub intersection_sizes: BTreeSet<usize>,
    pub decomposition: Option<Vec<ElemSet>>,
    pub union_test: Option<UnionOfCircuits>,
}

/// Parity report for `m`; optionally decomposes `x` into disjoint cocircuits
/// and tests whether `w` is a union of circuits.
pub fn binary_tame_report(
    m: &Matroid,
    x: Option<ElemSet>,
    w: Option<ElemSet>,
) -> Result<BinaryReport, MatroidError> {
    let mut first_odd = None;
    let mut single = None;
    let mut sizes = BTreeSet::new();
    for &o in m.circuits() {
        for &b in m.cocircuits() {
            let k = (o & b).len();
            sizes.insert(k);
            let hit = OddIntersection {
                circuit: o,
                cocircuit: b,
                size: k,
            };
            if k % 2 == 1 && first_odd.is_none() {
                first_odd = Some(hit);
            }
            if k == 1 && single.is_none() {
                single = Some(hit);
            }
        }
    }
    let binary = first_odd.is_none();
    let decomposition = match x {
        Some(x) => Some(decompose(m, x, binary)?),
        None => None,
    };
    let union_test = w.map(|w| UnionOfCircuits {
        set: w,
        by_cocircuits: m.cocircuits().iter().all(|&b| (b & w).len() != 1),
        by_circuits: m
            .circuits()
            .iter()
            .filter(|o| o.is_subset(w))
            .fold(ElemSet::EMPTY, |acc, &o| acc | o)
            == w,
    });
    Ok(BinaryReport {
        binary,
        first_odd,
        single_intersection: single,
        intersection_sizes: sizes,
        decomposition,
        union_test,
    })
}

/// Peel cocircuits off `x` greedily, in cocircuit order. In a binary
/// matroid, what remains always meets every circuit evenly and so contains
/// another cocircuit until it is empty.
pub(crate) fn decompose(
    m: &Matroid,
    x: ElemSet,
    binary: bool,
) -> Result<Vec<ElemSet>, MatroidError> {
    if let Some(o) = m.circuits().iter().find(|o| (**o & x).len() % 2 == 1) {
        return Err(MatroidError::DecompositionRequestedOnOddSet {
            circuit: m.set_labels(*o),
        });
    }
    if !binary {
        return Err(MatroidError::NotBinary);
    }
    let mut rest = x;
    let mut parts = Vec::new();
    while !rest.is_empty() {
        let b = *m
            .cocircuits()
            .iter()
            .find(|b| b.is_subset(rest))
            .ok_or(MatroidError::NotBinary)?;
        parts.push(b);
        rest = rest - b;
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn u24_is_not_binary() {
        let r = binary_tame_report(&corpus::uniform(2, 4), None, None).unwrap();
        assert!(!r.binary);
        assert_eq!(r.first_odd.unwrap().size, 3);
        assert!(r.single_intersection.is_none());
    }

    #[test]
    fn k4_intersections_are_even() {
        let m = corpus::graph("K4").unwrap().cycle_matroid().unwrap();
        let r = binary_tame_report(&m, None, None).unwrap();
        assert!(r.binary);
        assert_eq!(r.intersection_sizes, BTreeSet::from([0, 2, 4]));
    }

    #[test]
    fn star_cut_decomposes_into_itself() {
        let g = corpus::graph("K4").unwrap();
        let m = g.cycle_matroid().unwrap();
        let star = g.star(0);
        let r = binary_tame_report(&m, Some(star), None).unwrap();
        assert_eq!(r.decomposition, Some(vec![star]));
    }

    #[test]
    fn odd_set_is_rejected() {
        let m = corpus::graph("K4").unwrap().cycle_matroid().unwrap();
        let err = binary_tame_report(&m, Some(ElemSet::singleton(0)), None).unwrap_err();
        assert!(matches!(
            err,
            MatroidError::DecompositionRequestedOnOddSet { .. }
        ));
    }

    #[test]
    fn union_of_circuits_criterion() {
        let m = corpus::graph("K4").unwrap().cycle_matroid().unwrap();
        let o = m.circuits()[0];
        let r = binary_tame_report(&m, None, Some(o)).unwrap();
        let u = r.union_test.unwrap();
        assert!(u.by_cocircuits && u.by_circuits);
        let part = ElemSet::singleton(o.first().unwrap());
        let u = binary_tame_report(&m, None, Some(part))
            .unwrap()
            .union_test
            .unwrap();
        assert!(!u.by_cocircuits && !u.by_circuits);
    }
}
