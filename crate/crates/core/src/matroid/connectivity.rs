//! k-separations and k-connectivity.

use crate::elemset::ElemSet;

use super::Matroid;

/// An `l`-separation `(side_a, side_b)` together with the bases certifying
/// `|s_A ∪ s_B \ s| < l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationWitness {
    pub side_a: ElemSet,
    pub side_b: ElemSet,
    pub k: usize,
    /// `(s_A, s_B, s)`: greedy bases of `side_a`, `side_b`, and a base of the
    /// whole matroid chosen inside `s_A ∪ s_B`.
    pub bases_used: (ElemSet, ElemSet, ElemSet),
}

impl SeparationWitness {
    pub fn excess(&self) -> usize {
        let (sa, sb, s) = self.bases_used;
        ((sa | sb) - s).len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub k: usize,
    pub k_connected: bool,
    pub witness: Option<SeparationWitness>,
    /// For `k = 2`: whether every two distinct elements share a circuit.
    pub common_circuit_connected: Option<bool>,
}

/// Decide whether `m` has an `l`-separation for some `l < k`.
///
/// The witness uses the smallest such `l`; among those, the lexicographically
/// least `side_a` (which always contains element 0).
pub fn connectivity(m: &Matroid, k: usize) -> ConnectivityReport {
    let witness = (1..k).find_map(|l| find_separation(m, l));
    let common_circuit_connected = (k == 2).then(|| every_pair_on_a_circuit(m));
    ConnectivityReport {
        k,
        k_connected: witness.is_none(),
        witness,
        common_circuit_connected,
    }
}

fn lambda(m: &Matroid, a: ElemSet) -> usize {
    m.rank_of(a) + m.rank_of(m.ground() - a) - m.rank()
}

fn find_separation(m: &Matroid, l: usize) -> Option<SeparationWitness> {
    let n = m.len();
    if n < 2 * l {
        return None;
    }
    let ground = m.ground();
    let rest = ground.without(0);
    let mut best: Option<ElemSet> = None;
    for sub in rest.subsets() {
        let a = sub.with(0);
        let b = ground - a;
        if a.len() < l || b.len() < l {
            continue;
        }
        if lambda(m, a) < l && best.is_none_or(|cur| a < cur) {
            best = Some(a);
        }
    }
    best.map(|a| {
        let b = ground - a;
        let sa = m.greedy_base(a);
        let sb = m.greedy_base(b);
        let s = m.greedy_base(sa | sb);
        SeparationWitness {
            side_a: a,
            side_b: b,
            k: l,
            bases_used: (sa, sb, s),
        }
    })
}

fn every_pair_on_a_circuit(m: &Matroid) -> bool {
    let n = m.len();
    (0..n).all(|e| {
        (e + 1..n).all(|f| {
            let pair = ElemSet::singleton(e).with(f);
            m.circuits().iter().any(|o| pair.is_subset(*o))
        })
    })
}
