//! Exhaustive framework search.
//!
//! One signing is fixed first. Framework conditions are unchanged by
//! negating a circuit row (which reverses `R_o`), by negating `d_b` and
//! `σ_b` together, and by reorienting an element; since signings of a
//! binary matroid agree up to these moves, a single signing suffices.
//!
//! With the signing fixed, a framework amounts to a cyclic order on each
//! circuit such that, for every cocircuit `b` meeting `o`, the products
//! `c_o d_b` alternate along `b ∩ o`, and `σ_b(g)` equals the product at the
//! element of `b ∩ o` preceding `g`; and `σ_b` is constant on every circuit
//! disjoint from `b`. The search enumerates cyclic sequences circuit by
//! circuit (smallest first), assigning the forced `σ` values as it goes,
//! and verifies each complete assignment.

use crate::elemset::ElemSet;
use crate::matroid::Matroid;
use crate::signing::{find_signing, SignRow, Signing};

use super::{verify_framework, GraphFramework};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Branching decisions of the signing search.
    pub signing_nodes: u64,
    /// Elements placed while enumerating circuit sequences.
    pub order_nodes: u64,
    /// Complete assignments handed to the verifier.
    pub leaves: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameworkSearch {
    pub framework: Option<GraphFramework>,
    pub signing_found: bool,
    pub stats: SearchStats,
}

/// Search for a graph framework; `None` proves that none exists.
pub fn find_framework(m: &Matroid) -> FrameworkSearch {
    let s = find_signing(m);
    match s.signing {
        None => FrameworkSearch {
            framework: None,
            signing_found: false,
            stats: SearchStats {
                signing_nodes: s.nodes,
                ..SearchStats::default()
            },
        },
        Some(signing) => {
            let mut out = find_framework_with_signing(m, signing);
            out.stats.signing_nodes = s.nodes;
            out
        }
    }
}

/// Search for a framework extending a given (valid) signing.
pub fn find_framework_with_signing(m: &Matroid, signing: Signing) -> FrameworkSearch {
    let mut state = State::new(m, signing);
    let found = state.circuit_level(0);
    FrameworkSearch {
        framework: found,
        signing_found: true,
        stats: state.stats,
    }
}

struct Meeting {
    cocircuit: usize,
    meet: ElemSet,
    /// Elements of `meet` where `c_o d_b = -1`.
    negative: ElemSet,
}

struct State<'a> {
    m: &'a Matroid,
    signing: Signing,
    /// Circuits needing an order (size at least 3), smallest first.
    branch: Vec<usize>,
    meetings: Vec<Vec<Meeting>>,
    /// Circuit indices containing each element.
    containing: Vec<Vec<usize>>,
    /// `sigma[b][e]`: 0 unassigned, otherwise the sign.
    sigma: Vec<Vec<i8>>,
    trail: Vec<(usize, usize)>,
    stats: SearchStats,
}

impl<'a> State<'a> {
    fn new(m: &'a Matroid, signing: Signing) -> Self {
        let mut branch: Vec<usize> = (0..m.circuits().len())
            .filter(|&i| m.circuits()[i].len() >= 3)
            .collect();
        branch.sort_by_key(|&i| (m.circuits()[i].len(), m.circuits()[i]));
        let meetings = m
            .circuits()
            .iter()
            .enumerate()
            .map(|(oi, &o)| {
                m.cocircuits()
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| !b.is_disjoint(o))
                    .map(|(bi, &b)| {
                        let meet = o & b;
                        let negative = (signing.c[oi].negative ^ signing.d[bi].negative) & meet;
                        Meeting {
                            cocircuit: bi,
                            meet,
                            negative,
                        }
                    })
                    .collect()
            })
            .collect();
        let mut containing = vec![Vec::new(); m.len()];
        for (oi, &o) in m.circuits().iter().enumerate() {
            for e in o {
                containing[e].push(oi);
            }
        }
        State {
            m,
            signing,
            branch,
            meetings,
            containing,
            sigma: vec![vec![0; m.len()]; m.cocircuits().len()],
            trail: Vec::new(),
            stats: SearchStats::default(),
        }
    }

    /// Assign `σ_b(g) = v` and spread it along circuits disjoint from `b`.
    fn assign(&mut self, b: usize, g: usize, v: i8) -> bool {
        let cob = self.m.cocircuits()[b];
        let mut stack = vec![g];
        match self.sigma[b][g] {
            0 => {}
            x => return x == v,
        }
        self.sigma[b][g] = v;
        self.trail.push((b, g));
        while let Some(x) = stack.pop() {
            for &oi in &self.containing[x] {
                let o = self.m.circuits()[oi];
                if !o.is_disjoint(cob) {
                    continue;
                }
                for h in o {
                    match self.sigma[b][h] {
                        0 => {
                            self.sigma[b][h] = v;
                            self.trail.push((b, h));
                            stack.push(h);
                        }
                        x if x != v => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (b, e) = self.trail.pop().expect("trail above mark");
            self.sigma[b][e] = 0;
        }
    }

    fn circuit_level(&mut self, level: usize) -> Option<GraphFramework> {
        if level == self.branch.len() {
            return self.leaf();
        }
        let oi = self.branch[level];
        let o = self.m.circuits()[oi];
        let first = o.first().expect("branch circuits are nonempty");
        let mut seq = Vec::with_capacity(o.len());
        let mut last = vec![0i8; self.meetings[oi].len()];
        let mark = self.trail.len();
        if !self.place(oi, first, &mut seq, &mut last) {
            self.undo(mark);
            return None;
        }
        let found = self.extend(level, oi, o.without(first), &mut seq, &mut last);
        self.undo(mark);
        found
    }

    /// Append `x` to the sequence of circuit `oi`, updating the last product
    /// seen on each meeting cocircuit and assigning forced `σ` values.
    fn place(&mut self, oi: usize, x: usize, seq: &mut Vec<usize>, last: &mut [i8]) -> bool {
        self.stats.order_nodes += 1;
        for j in 0..self.meetings[oi].len() {
            let Meeting {
                cocircuit: b,
                meet,
                negative,
            } = self.meetings[oi][j];
            if meet.contains(x) {
                let p = if negative.contains(x) { -1 } else { 1 };
                if last[j] == 0 {
                    // Everything so far precedes the first element of b ∩ o,
                    // so its predecessor there is the last one, of sign -p.
                    for &y in seq.iter() {
                        if !self.assign(b, y, -p) {
                            return false;
                        }
                    }
                } else if last[j] != -p {
                    return false;
                }
                last[j] = p;
            } else if last[j] != 0 && !self.assign(b, x, last[j]) {
                return false;
            }
        }
        seq.push(x);
        true
    }

    fn extend(
        &mut self,
        level: usize,
        oi: usize,
        rest: ElemSet,
        seq: &mut Vec<usize>,
        last: &mut Vec<i8>,
    ) -> Option<GraphFramework> {
        if rest.is_empty() {
            // The orders of the first circuit and of its reversal lead to
            // mirror-image frameworks; keep one.
            if level == 0 && seq[1] > seq[seq.len() - 1] {
                return None;
            }
            return self.circuit_level(level + 1);
        }
        for x in rest {
            let mark = self.trail.len();
            let saved = last.clone();
            if self.place(oi, x, seq, last) {
                if let Some(f) = self.extend(level, oi, rest.without(x), seq, last) {
                    return Some(f);
                }
                seq.pop();
            }
            *last = saved;
            self.undo(mark);
        }
        None
    }

    fn leaf(&mut self) -> Option<GraphFramework> {
        self.stats.leaves += 1;
        let ground = self.m.ground();
        let sigma = self
            .m
            .cocircuits()
            .iter()
            .enumerate()
            .map(|(bi, &b)| {
                let mut row = SignRow::positive(ground - b);
                for e in ground - b {
                    if self.sigma[bi][e] < 0 {
                        row.negative.insert(e);
                    }
                }
                row
            })
            .collect();
        let f = GraphFramework {
            signing: self.signing.clone(),
            sigma,
        };
        match verify_framework(self.m, &f) {
            Ok(None) => Some(f),
            _ => None,
        }
    }
}
