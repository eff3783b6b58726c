//! Signings: a `±1` label on each element of each circuit (`c_o`) and of
//! each cocircuit (`d_b`) such that `Σ_{e ∈ o∩b} c_o(e) d_b(e) = 0` for every
//! circuit `o` and cocircuit `b`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::elemset::ElemSet;
use crate::graph::{GraphError, GraphOrientation, Multigraph};
use crate::matroid::Matroid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigningError {
    #[error("signing rows do not match the {family} of the matroid")]
    DomainMismatch { family: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A `±1` function on `support`; elements of `negative` map to `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignRow {
    pub support: ElemSet,
    pub negative: ElemSet,
}

impl SignRow {
    pub fn positive(support: ElemSet) -> Self {
        SignRow {
            support,
            negative: ElemSet::EMPTY,
        }
    }

    /// The value at `e`; `e` must lie in the support.
    pub fn get(&self, e: usize) -> i8 {
        debug_assert!(self.support.contains(e));
        if self.negative.contains(e) {
            -1
        } else {
            1
        }
    }

    pub fn set(&mut self, e: usize, v: i8) {
        if v < 0 {
            self.negative.insert(e);
        } else {
            self.negative.remove(e);
        }
    }

    pub fn flipped(&self) -> Self {
        SignRow {
            support: self.support,
            negative: self.support - self.negative,
        }
    }
}

/// `Σ_{e ∈ I} x(e) y(e)` over the common support `I`.
pub fn row_product(x: &SignRow, y: &SignRow) -> i32 {
    let common = x.support & y.support;
    common.len() as i32 - 2 * ((x.negative ^ y.negative) & common).len() as i32
}

/// Rows are parallel to `m.circuits()` and `m.cocircuits()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signing {
    pub c: Vec<SignRow>,
    pub d: Vec<SignRow>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigningViolation {
    pub circuit: ElemSet,
    pub cocircuit: ElemSet,
    pub sum: i32,
}

impl Signing {
    pub fn check_domains(&self, m: &Matroid) -> Result<(), SigningError> {
        let same = |rows: &[SignRow], sets: &[ElemSet]| {
            rows.len() == sets.len()
                && rows
                    .iter()
                    .zip(sets)
                    .all(|(r, s)| r.support == *s && r.negative.is_subset(*s))
        };
        if !same(&self.c, m.circuits()) {
            return Err(SigningError::DomainMismatch { family: "circuits" });
        }
        if !same(&self.d, m.cocircuits()) {
            return Err(SigningError::DomainMismatch {
                family: "cocircuits",
            });
        }
        Ok(())
    }
}

/// Check the orthogonality identity for every circuit–cocircuit pair, in
/// (circuit, cocircuit) order. `None` means the signing is valid.
pub fn verify_signing(m: &Matroid, s: &Signing) -> Result<Option<SigningViolation>, SigningError> {
    s.check_domains(m)?;
    for c in &s.c {
        for d in &s.d {
            let sum = row_product(c, d);
            if sum != 0 {
                return Ok(Some(SigningViolation {
                    circuit: c.support,
                    cocircuit: d.support,
                    sum,
                }));
            }
        }
    }
    Ok(None)
}

/// `c_o(e) = +1` iff the traversal of `o` passes `e` from tail to head;
/// `d_b(e) = +1` iff the tail of `e` lies on the `U` shore of `b`.
pub fn signing_from_oriented_graph(
    g: &Multigraph,
    orientation: &GraphOrientation,
) -> Result<Signing, SigningError> {
    let mut c = Vec::with_capacity(orientation.cycles.len());
    for (cycle, walk) in &orientation.cycles {
        if !g.is_traversal_of(*cycle, walk) {
            return Err(GraphError::InconsistentTraversal {
                circuit: g.labels_of(*cycle),
            }
            .into());
        }
        let mut row = SignRow::positive(*cycle);
        for &(e, sense) in walk {
            row.set(e, sense.sign());
        }
        c.push(row);
    }
    let mut d = Vec::with_capacity(orientation.bonds.len());
    for &(bond, u) in &orientation.bonds {
        let cut = g.cut(u);
        if cut != bond {
            return Err(GraphError::InconsistentBondSides {
                bond: g.labels_of(bond),
                cut: g.labels_of(cut),
            }
            .into());
        }
        let mut row = SignRow::positive(bond);
        for e in bond {
            if u >> g.edges()[e].tail & 1 == 0 {
                row.negative.insert(e);
            }
        }
        d.push(row);
    }
    c.sort_by_key(|r| r.support);
    d.sort_by_key(|r| r.support);
    Ok(Signing { c, d })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigningSearch {
    pub signing: Option<Signing>,
    /// Branching decisions taken.
    pub nodes: u64,
    /// The search ended at once on an odd circuit–cocircuit intersection.
    pub parity_obstruction: Option<(ElemSet, ElemSet)>,
}

/// Exhaustive search for a signing.
///
/// Variables are the signs of row entries; the first element of each row is
/// pinned to `+1`. Each circuit–cocircuit pair with intersection `I` needs
/// exactly `|I|/2` entries where the two signs differ; constraints are
/// propagated by bounds, and branching picks the pair with the fewest
/// undecided entries. Values are tried `+1` first.
pub fn find_signing(m: &Matroid) -> SigningSearch {
    for &o in m.circuits() {
        for &b in m.cocircuits() {
            if (o & b).len() % 2 == 1 {
                return SigningSearch {
                    signing: None,
                    nodes: 0,
                    parity_obstruction: Some((o, b)),
                };
            }
        }
    }
    let mut solver = SignSolver::new(m);
    let found = solver.solve();
    SigningSearch {
        signing: found.then(|| solver.extract(m)),
        nodes: solver.nodes,
        parity_obstruction: None,
    }
}

struct Constraint {
    /// `(circuit var, cocircuit var)` per element of the intersection.
    terms: Vec<(usize, usize)>,
    half: usize,
}

struct SignSolver {
    /// -1 unknown, 0 positive, 1 negative.
    value: Vec<i8>,
    /// Row index and element of each variable; cocircuit rows follow the
    /// circuit rows.
    owner: Vec<(usize, usize)>,
    rows: usize,
    cons: Vec<Constraint>,
    var_cons: Vec<Vec<usize>>,
    trail: Vec<usize>,
    nodes: u64,
}

impl SignSolver {
    fn new(m: &Matroid) -> Self {
        let mut owner = Vec::new();
        let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let all_rows: Vec<ElemSet> = m.circuits().iter().chain(m.cocircuits()).copied().collect();
        for (r, row) in all_rows.iter().enumerate() {
            for e in *row {
                index.insert((r, e), owner.len());
                owner.push((r, e));
            }
        }
        let nc = m.circuits().len();
        let mut cons = Vec::new();
        let mut var_cons = vec![Vec::new(); owner.len()];
        for (i, &o) in m.circuits().iter().enumerate() {
            for (j, &b) in m.cocircuits().iter().enumerate() {
                let common = o & b;
                if common.is_empty() {
                    continue;
                }
                let terms: Vec<(usize, usize)> = common
                    .iter()
                    .map(|e| (index[&(i, e)], index[&(nc + j, e)]))
                    .collect();
                for &(x, y) in &terms {
                    var_cons[x].push(cons.len());
                    var_cons[y].push(cons.len());
                }
                cons.push(Constraint {
                    half: terms.len() / 2,
                    terms,
                });
            }
        }
        let mut solver = SignSolver {
            value: vec![-1; owner.len()],
            owner,
            rows: all_rows.len(),
            cons,
            var_cons,
            trail: Vec::new(),
            nodes: 0,
        };
        for (r, row) in all_rows.iter().enumerate() {
            if let Some(e) = row.first() {
                let v = index[&(r, e)];
                solver.value[v] = 0;
            }
        }
        solver
    }

    /// `(differing, undecided)` term counts.
    fn tally(&self, c: &Constraint) -> (usize, usize) {
        let mut diff = 0;
        let mut open = 0;
        for &(x, y) in &c.terms {
            let (a, b) = (self.value[x], self.value[y]);
            if a < 0 || b < 0 {
                open += 1;
            } else if a != b {
                diff += 1;
            }
        }
        (diff, open)
    }

    fn assign(&mut self, v: usize, val: i8, queue: &mut Vec<usize>) {
        self.value[v] = val;
        self.trail.push(v);
        queue.extend(self.var_cons[v].iter().copied());
    }

    fn propagate(&mut self, mut queue: Vec<usize>) -> bool {
        while let Some(ci) = queue.pop() {
            let (diff, open) = self.tally(&self.cons[ci]);
            let half = self.cons[ci].half;
            if diff > half || diff + open < half {
                return false;
            }
            if open == 0 || (diff < half && diff + open > half) {
                continue;
            }
            // Every undecided term is forced: to agree if diff == half,
            // otherwise to differ.
            let want_diff = diff < half;
            for k in 0..self.cons[ci].terms.len() {
                let (x, y) = self.cons[ci].terms[k];
                let (a, b) = (self.value[x], self.value[y]);
                match (a < 0, b < 0) {
                    (true, false) => self.assign(x, if want_diff { 1 - b } else { b }, &mut queue),
                    (false, true) => self.assign(y, if want_diff { 1 - a } else { a }, &mut queue),
                    _ => {}
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail above mark");
            self.value[v] = -1;
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for c in &self.cons {
            let open_vars: Vec<usize> = c
                .terms
                .iter()
                .flat_map(|&(x, y)| [x, y])
                .filter(|&v| self.value[v] < 0)
                .collect();
            if let Some(&v) = open_vars.iter().min() {
                let k = open_vars.len();
                if best.is_none_or(|(bk, _)| k < bk) {
                    best = Some((k, v));
                    if k == 1 {
                        break;
                    }
                }
            }
        }
        best.map(|(_, v)| v)
            .or_else(|| self.value.iter().position(|&x| x < 0))
    }

    fn solve(&mut self) -> bool {
        let all: Vec<usize> = (0..self.cons.len()).collect();
        if !self.propagate(all) {
            return false;
        }
        self.search()
    }

    fn search(&mut self) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        for val in [0, 1] {
            self.nodes += 1;
            let mark = self.trail.len();
            let mut queue = Vec::new();
            self.assign(v, val, &mut queue);
            if self.propagate(queue) && self.search() {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn extract(&self, m: &Matroid) -> Signing {
        let nc = m.circuits().len();
        let mut rows: Vec<SignRow> = m
            .circuits()
            .iter()
            .chain(m.cocircuits())
            .map(|&s| SignRow::positive(s))
            .collect();
        debug_assert_eq!(rows.len(), self.rows);
        for (v, &(r, e)) in self.owner.iter().enumerate() {
            if self.value[v] == 1 {
                rows[r].negative.insert(e);
            }
        }
        let d = rows.split_off(nc);
        Signing { c: rows, d }
    }
}
