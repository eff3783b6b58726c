//! Finite matroids given by their circuits.
//!
//! A [`Matroid`] stores its ground labels in sorted order, so element ids are
//! the label ranks and "label order" and "id order" coincide everywhere. All
//! derived families (bases, cocircuits) are computed from a rank table built
//! by subset enumeration; this is exponential in the ground size and is
//! bounded by a configurable cap.

mod binary;
mod connectivity;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::elemset::ElemSet;

pub use binary::{binary_tame_report, BinaryReport, OddIntersection, UnionOfCircuits};
pub use connectivity::{connectivity, ConnectivityReport, SeparationWitness};

/// Default bound on the ground-set size.
pub const DEFAULT_CAP: usize = 16;

/// Hard bound; the rank table has `2^n` entries.
pub const MAX_CAP: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("circuit {index} is empty")]
    EmptyCircuit { index: usize },
    #[error("circuit {smaller:?} is contained in circuit {larger:?}")]
    NonAntichain {
        smaller: Vec<String>,
        larger: Vec<String>,
    },
    #[error(
        "circuit elimination fails: circuits {first:?} and {second:?} share {shared}, \
         but no circuit contains {z} inside their union minus {shared}"
    )]
    EliminationFailure {
        first: Vec<String>,
        second: Vec<String>,
        shared: String,
        z: String,
    },
    #[error("ground set has {size} elements, cap is {cap}")]
    GroundCapExceeded { size: usize, cap: usize },
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownElement(String),
    #[error("contracted and deleted sets overlap in {0:?}")]
    OverlappingSets(Vec<String>),
    #[error("{0:?} is not a base")]
    NotABase(Vec<String>),
    #[error("no switching sequence from {from} to {to}: the matroid is disconnected")]
    Disconnected { from: String, to: String },
    #[error("decomposition requested on a set meeting circuit {circuit:?} oddly")]
    DecompositionRequestedOnOddSet { circuit: Vec<String> },
    #[error("cocircuit decomposition needs a binary matroid")]
    NotBinary,
}

/// A single element: dense id plus its label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element<'a> {
    pub id: usize,
    pub label: &'a str,
}

pub struct Matroid {
    labels: Vec<String>,
    circuits: Vec<ElemSet>,
    rank: Vec<u8>,
    bases: OnceLock<Vec<ElemSet>>,
    cocircuits: OnceLock<Vec<ElemSet>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            labels: self.labels.clone(),
            circuits: self.circuits.clone(),
            rank: self.rank.clone(),
            bases: self.bases.clone(),
            cocircuits: self.cocircuits.clone(),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.circuits == other.circuits
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("elements", &self.labels)
            .field(
                "circuits",
                &self
                    .circuits
                    .iter()
                    .map(|&c| self.set_labels(c))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// Validate a circuit family and build the matroid, with the default cap.
pub fn build_matroid<S: AsRef<str>>(
    ground: &[S],
    circuits: &[Vec<S>],
) -> Result<Matroid, MatroidError> {
    build_matroid_with_cap(ground, circuits, DEFAULT_CAP)
}

pub fn build_matroid_with_cap<S: AsRef<str>>(
    ground: &[S],
    circuits: &[Vec<S>],
    cap: usize,
) -> Result<Matroid, MatroidError> {
    let cap = cap.min(MAX_CAP);
    if ground.len() > cap {
        return Err(MatroidError::GroundCapExceeded {
            size: ground.len(),
            cap,
        });
    }
    let mut labels: Vec<String> = ground.iter().map(|s| s.as_ref().to_string()).collect();
    labels.sort();
    if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
        return Err(MatroidError::DuplicateLabel(w[0].clone()));
    }
    let index: HashMap<&str, usize> = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    let mut sets = Vec::with_capacity(circuits.len());
    for (i, c) in circuits.iter().enumerate() {
        let mut s = ElemSet::EMPTY;
        for l in c {
            let id = *index
                .get(l.as_ref())
                .ok_or_else(|| MatroidError::UnknownElement(l.as_ref().to_string()))?;
            s.insert(id);
        }
        if s.is_empty() {
            return Err(MatroidError::EmptyCircuit { index: i });
        }
        sets.push(s);
    }
    Matroid::from_sets(labels, sets)
}

impl Matroid {
    /// Build from already-indexed circuits over sorted, distinct labels,
    /// running the full axiom check.
    pub fn from_sets(labels: Vec<String>, circuits: Vec<ElemSet>) -> Result<Self, MatroidError> {
        debug_assert!(labels.windows(2).all(|w| w[0] < w[1]));
        let n = labels.len();
        if n > MAX_CAP {
            return Err(MatroidError::GroundCapExceeded {
                size: n,
                cap: MAX_CAP,
            });
        }
        let mut circuits = circuits;
        for (i, c) in circuits.iter().enumerate() {
            if c.is_empty() {
                return Err(MatroidError::EmptyCircuit { index: i });
            }
        }
        circuits.sort();
        let name = |s: ElemSet| s.iter().map(|e| labels[e].clone()).collect::<Vec<_>>();
        // Sorted lexicographically, equal sets are adjacent; a proper subset
        // can appear on either side, so check all pairs.
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                if a.is_subset(b) {
                    return Err(MatroidError::NonAntichain {
                        smaller: name(a),
                        larger: name(b),
                    });
                }
                if b.is_subset(a) {
                    return Err(MatroidError::NonAntichain {
                        smaller: name(b),
                        larger: name(a),
                    });
                }
            }
        }

        // cover[S] = union of the circuits inside S.
        let size = 1usize << n;
        let mut cover = vec![0u64; size];
        for &c in &circuits {
            cover[c.bits() as usize] = c.bits();
        }
        for s in 1..size {
            let mut acc = cover[s];
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                acc |= cover[s ^ bit];
                rest ^= bit;
            }
            cover[s] = acc;
        }

        // Strong circuit elimination, pairwise.
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                let shared = a & b;
                for e in shared {
                    let union = (a | b).without(e);
                    let reach = ElemSet::from_bits(cover[union.bits() as usize]);
                    let needed = (a ^ b) - reach;
                    if let Some(z) = needed.first() {
                        let (first, second) = if a.contains(z) { (a, b) } else { (b, a) };
                        return Err(MatroidError::EliminationFailure {
                            first: name(first),
                            second: name(second),
                            shared: labels[e].clone(),
                            z: labels[z].clone(),
                        });
                    }
                }
            }
        }

        let rank = rank_table(n, &cover);
        Ok(Matroid {
            labels,
            circuits,
            rank,
            bases: OnceLock::new(),
            cocircuits: OnceLock::new(),
        })
    }

    /// Build from a circuit family known to satisfy the axioms (as produced
    /// by duality or minors of a valid matroid).
    pub(crate) fn from_trusted(labels: Vec<String>, mut circuits: Vec<ElemSet>) -> Self {
        let n = labels.len();
        circuits.sort();
        let size = 1usize << n;
        let mut cover = vec![0u64; size];
        for &c in &circuits {
            cover[c.bits() as usize] = c.bits();
        }
        for s in 1..size {
            let mut acc = cover[s];
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                acc |= cover[s ^ bit];
                rest ^= bit;
            }
            cover[s] = acc;
        }
        let rank = rank_table(n, &cover);
        Matroid {
            labels,
            circuits,
            rank,
            bases: OnceLock::new(),
            cocircuits: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn ground(&self) -> ElemSet {
        ElemSet::full(self.labels.len())
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn element(&self, e: usize) -> Element<'_> {
        Element {
            id: e,
            label: &self.labels[e],
        }
    }

    pub fn id_of(&self, label: &str) -> Option<usize> {
        self.labels.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    /// Resolve labels to a set, failing on the first unknown one.
    pub fn set_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElemSet, MatroidError> {
        labels
            .iter()
            .map(|l| {
                self.id_of(l.as_ref())
                    .ok_or_else(|| MatroidError::UnknownElement(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn set_labels(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|e| self.labels[e].clone()).collect()
    }

    /// Circuits in lexicographic order.
    pub fn circuits(&self) -> &[ElemSet] {
        &self.circuits
    }

    pub fn circuit_index(&self, c: ElemSet) -> Option<usize> {
        self.circuits.binary_search(&c).ok()
    }

    pub fn is_circuit(&self, c: ElemSet) -> bool {
        self.circuit_index(c).is_some()
    }

    pub fn rank_of(&self, s: ElemSet) -> usize {
        self.rank[s.bits() as usize] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank_of(self.ground())
    }

    pub fn is_independent(&self, s: ElemSet) -> bool {
        self.rank_of(s) == s.len()
    }

    pub fn is_base(&self, s: ElemSet) -> bool {
        s.is_subset(self.ground()) && s.len() == self.rank() && self.is_independent(s)
    }

    pub fn is_spanning(&self, s: ElemSet) -> bool {
        self.rank_of(s) == self.rank()
    }

    /// Bases in lexicographic order.
    pub fn bases(&self) -> &[ElemSet] {
        self.bases.get_or_init(|| {
            let r = self.rank();
            let mut out: Vec<ElemSet> = (0..self.rank.len() as u64)
                .map(ElemSet::from_bits)
                .filter(|s| s.len() == r && self.rank_of(*s) == r)
                .collect();
            out.sort();
            out
        })
    }

    /// Cocircuits in lexicographic order: the minimal nonempty sets meeting
    /// every base, i.e. minimal `S` whose complement is not spanning.
    pub fn cocircuits(&self) -> &[ElemSet] {
        self.cocircuits.get_or_init(|| {
            let ground = self.ground();
            let mut out: Vec<ElemSet> = (1..self.rank.len() as u64)
                .map(ElemSet::from_bits)
                .filter(|&s| {
                    !self.is_spanning(ground - s)
                        && s.iter().all(|x| self.is_spanning((ground - s).with(x)))
                })
                .collect();
            out.sort();
            out
        })
    }

    pub fn cocircuit_index(&self, b: ElemSet) -> Option<usize> {
        self.cocircuits().binary_search(&b).ok()
    }

    pub fn is_loop(&self, e: usize) -> bool {
        self.rank_of(ElemSet::singleton(e)) == 0
    }

    pub fn is_coloop(&self, e: usize) -> bool {
        self.rank_of(self.ground().without(e)) < self.rank()
    }

    /// Greedy base of `within`, taking elements in id order; this is the
    /// lexicographically least base of the restriction.
    pub fn greedy_base(&self, within: ElemSet) -> ElemSet {
        let mut s = ElemSet::EMPTY;
        for e in within {
            if self.is_independent(s.with(e)) {
                s.insert(e);
            }
        }
        s
    }

    fn check_base(&self, base: ElemSet) -> Result<(), MatroidError> {
        if self.is_base(base) {
            Ok(())
        } else {
            Err(MatroidError::NotABase(self.set_labels(base)))
        }
    }
}

fn rank_table(n: usize, cover: &[u64]) -> Vec<u8> {
    let size = 1usize << n;
    let mut rank = vec![0u8; size];
    for s in 1..size {
        rank[s] = if cover[s] == 0 {
            (s as u64).count_ones() as u8
        } else {
            let mut best = 0;
            let mut rest = s;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                best = best.max(rank[s ^ bit]);
                rest ^= bit;
            }
            best
        };
    }
    rank
}

/// The dual matroid; its circuits are the cocircuits of `m`.
pub fn dual_matroid(m: &Matroid) -> Matroid {
    Matroid::from_trusted(m.labels.clone(), m.cocircuits().to_vec())
}

/// `m / contract \ delete`. The result keeps the remaining labels.
pub fn minor(m: &Matroid, contract: ElemSet, delete: ElemSet) -> Result<Matroid, MatroidError> {
    if !contract.is_disjoint(delete) {
        return Err(MatroidError::OverlappingSets(
            m.set_labels(contract & delete),
        ));
    }
    let contract = contract & m.ground();
    let delete = delete & m.ground();
    let kept = m.ground() - contract - delete;
    let candidates: BTreeSet<ElemSet> = m
        .circuits
        .iter()
        .filter(|o| o.is_disjoint(delete))
        .map(|&o| o - contract)
        .filter(|o| !o.is_empty())
        .collect();
    let minimal: Vec<ElemSet> = candidates
        .iter()
        .filter(|&&o| !candidates.iter().any(|&p| p != o && p.is_subset(o)))
        .map(|o| o.compress(kept))
        .collect();
    let labels = kept.iter().map(|e| m.labels[e].clone()).collect();
    Ok(Matroid::from_trusted(labels, minimal))
}

/// Fundamental circuit of `x` (if `x` is outside the base) or fundamental
/// cocircuit of `x` (if inside).
pub fn fundamental_set(m: &Matroid, base: ElemSet, x: usize) -> Result<ElemSet, MatroidError> {
    m.check_base(base)?;
    Ok(fundamental_unchecked(m, base, x))
}

pub(crate) fn fundamental_unchecked(m: &Matroid, base: ElemSet, x: usize) -> ElemSet {
    if base.contains(x) {
        let allowed = (m.ground() - base).with(x);
        *m.cocircuits()
            .iter()
            .find(|b| b.contains(x) && b.is_subset(allowed))
            .expect("fundamental cocircuit exists for base elements")
    } else {
        let allowed = base.with(x);
        *m.circuits
            .iter()
            .find(|o| o.contains(x) && o.is_subset(allowed))
            .expect("fundamental circuit exists for non-base elements")
    }
}

/// Shortest switching sequence from `e` to `f` for `base` (breadth-first,
/// neighbours in id order).
pub fn switching_sequence(
    m: &Matroid,
    base: ElemSet,
    e: usize,
    f: usize,
) -> Result<Vec<usize>, MatroidError> {
    m.check_base(base)?;
    let n = m.len();
    let mut prev = vec![usize::MAX; n];
    let mut seen = ElemSet::singleton(e);
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        if x == f {
            let mut path = vec![f];
            let mut cur = f;
            while cur != e {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Ok(path);
        }
        for y in fundamental_unchecked(m, base, x).without(x) {
            if !seen.contains(y) {
                seen.insert(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    Err(MatroidError::Disconnected {
        from: m.labels[e].clone(),
        to: m.labels[f].clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn triangle() -> Matroid {
        build_matroid(&["a", "b", "c"], &[vec!["a", "b", "c"]]).unwrap()
    }

    fn set(m: &Matroid, xs: &[&str]) -> ElemSet {
        m.set_of(xs).unwrap()
    }

    #[test]
    fn build_triangle() {
        let m = triangle();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.circuits().len(), 1);
        assert_eq!(m.bases().len(), 3);
    }

    #[test]
    fn build_rejects_containment() {
        let err = build_matroid(&["a", "b"], &[vec!["a"], vec!["a", "b"]]).unwrap_err();
        assert!(matches!(err, MatroidError::NonAntichain { .. }));
    }

    #[test]
    fn build_rejects_empty_circuit() {
        let err = build_matroid::<&str>(&["a"], &[vec![]]).unwrap_err();
        assert_eq!(err, MatroidError::EmptyCircuit { index: 0 });
    }

    #[test]
    fn build_rejects_elimination_failure() {
        // {a,b} and {b,c} force a circuit inside {a,c}.
        let err = build_matroid(&["a", "b", "c"], &[vec!["a", "b"], vec!["b", "c"]]).unwrap_err();
        match err {
            MatroidError::EliminationFailure { shared, .. } => assert_eq!(shared, "b"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn build_rejects_over_cap() {
        let ground: Vec<String> = (0..17).map(|i| format!("e{i:02}")).collect();
        let err = build_matroid::<String>(&ground, &[]).unwrap_err();
        assert_eq!(err, MatroidError::GroundCapExceeded { size: 17, cap: 16 });
        assert!(build_matroid_with_cap::<String>(&ground, &[], 17).is_ok());
    }

    #[test]
    fn build_rejects_unknown_and_duplicate_labels() {
        assert_eq!(
            build_matroid(&["a"], &[vec!["z"]]).unwrap_err(),
            MatroidError::UnknownElement("z".into())
        );
        assert_eq!(
            build_matroid::<&str>(&["a", "a"], &[]).unwrap_err(),
            MatroidError::DuplicateLabel("a".into())
        );
    }

    #[test]
    fn empty_matroid_is_fine() {
        let m = build_matroid::<&str>(&[], &[]).unwrap();
        assert_eq!(m.rank(), 0);
        assert_eq!(m.bases(), &[ElemSet::EMPTY]);
        assert!(m.cocircuits().is_empty());
    }

    #[test]
    fn uniform_2_4() {
        let m = corpus::uniform(2, 4);
        assert_eq!(m.circuits().len(), 4);
        assert_eq!(m.rank(), 2);
        assert_eq!(dual_matroid(&m), m);
    }

    #[test]
    fn dual_of_triangle_is_three_parallel_pairs() {
        let m = triangle();
        let d = dual_matroid(&m);
        let want = vec![
            set(&m, &["a", "b"]),
            set(&m, &["a", "c"]),
            set(&m, &["b", "c"]),
        ];
        assert_eq!(d.circuits(), want.as_slice());
    }

    #[test]
    fn loop_dualizes_to_coloop() {
        let m = build_matroid(&["e"], &[vec!["e"]]).unwrap();
        let d = dual_matroid(&m);
        assert!(d.circuits().is_empty());
        assert!(d.is_coloop(0));
        assert_eq!(d.cocircuits(), &[ElemSet::singleton(0)]);
    }

    #[test]
    fn minor_of_triangle() {
        let m = triangle();
        let c = minor(&m, set(&m, &["a"]), ElemSet::EMPTY).unwrap();
        assert_eq!(c.labels(), &["b", "c"]);
        assert_eq!(c.circuits(), &[ElemSet::from_bits(0b11)]);
        assert_eq!(minor(&m, ElemSet::EMPTY, ElemSet::EMPTY).unwrap(), m);
        assert!(matches!(
            minor(&m, set(&m, &["a"]), set(&m, &["a", "b"])),
            Err(MatroidError::OverlappingSets(_))
        ));
    }

    #[test]
    fn contracting_k4_edge_creates_parallel_pair() {
        let m = corpus::graph("K4").unwrap().cycle_matroid().unwrap();
        for e in 0..m.len() {
            let c = minor(&m, ElemSet::singleton(e), ElemSet::EMPTY).unwrap();
            assert!(c.circuits().iter().any(|o| o.len() == 2));
        }
    }

    #[test]
    fn fundamental_sets_of_triangle() {
        let m = triangle();
        let base = set(&m, &["a", "b"]);
        assert_eq!(fundamental_set(&m, base, 2).unwrap(), m.ground());
        assert_eq!(fundamental_set(&m, base, 0).unwrap(), set(&m, &["a", "c"]));
        assert!(matches!(
            fundamental_set(&m, set(&m, &["a"]), 0),
            Err(MatroidError::NotABase(_))
        ));
    }

    #[test]
    fn coloop_fundamental_cocircuit() {
        let m = build_matroid(&["a", "b", "e"], &[vec!["a", "b"]]).unwrap();
        let base = set(&m, &["a", "e"]);
        assert_eq!(fundamental_set(&m, base, 2).unwrap(), ElemSet::singleton(2));
    }

    #[test]
    fn switching_in_triangle() {
        let m = triangle();
        let base = set(&m, &["a", "b"]);
        assert_eq!(switching_sequence(&m, base, 2, 2).unwrap(), vec![2]);
        assert_eq!(switching_sequence(&m, base, 2, 0).unwrap(), vec![2, 0]);
    }

    #[test]
    fn switching_fails_across_separation() {
        let m = build_matroid(&["a", "b"], &[]).unwrap();
        let err = switching_sequence(&m, m.ground(), 0, 1).unwrap_err();
        assert!(matches!(err, MatroidError::Disconnected { .. }));
    }
}
