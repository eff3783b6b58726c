//! Graph frameworks: a signing plus, for every cocircuit `b`, a side
//! function `σ_b` on `E \ b`, inducing a cyclic order `R_o` on every circuit.
//!
//! `[e, f, g]` holds in `R_o` iff there is a cocircuit `b` with
//! `b ∩ o = {e, f}` and `σ_b(g) = c_o(f) d_b(f)`. A framework must make every
//! `R_o` a cyclic order and satisfy four adjacency conditions relating
//! `c`, `d` and `σ` along each circuit.

mod search;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::cyclic::{validate_cyclic, CyclicError, CyclicOrder};
use crate::elemset::ElemSet;
use crate::graph::{GraphError, GraphOrientation, Multigraph};
use crate::matroid::{minor, Matroid, MatroidError};
use crate::signing::{
    signing_from_oriented_graph, verify_signing, SignRow, Signing, SigningError, SigningViolation,
};

pub use search::{find_framework, find_framework_with_signing, FrameworkSearch, SearchStats};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameworkError {
    #[error("framework rows do not match the {family} of the matroid")]
    DomainMismatch { family: &'static str },
    #[error("no cocircuit meets circuit {circuit:?} in exactly {{{e}, {f}}}")]
    NoWitnessCocircuit {
        circuit: Vec<String>,
        e: String,
        f: String,
    },
    #[error("derived relation on circuit {circuit:?} is not a cyclic order: {reason}")]
    NotACyclicOrder {
        circuit: Vec<String>,
        reason: String,
    },
    #[error("derived relation on circuit {circuit:?} depends on the witness cocircuit")]
    IllDefined { circuit: Vec<String> },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Signing(#[from] SigningError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFramework {
    pub signing: Signing,
    /// Parallel to the cocircuits; row `b` has support `E \ b`.
    pub sigma: Vec<SignRow>,
}

/// The first failed requirement, with its witnesses. Sets and elements are
/// element ids of the matroid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameworkViolation {
    Signing(SigningViolation),
    /// Cocircuits `first` and `second` both meet `circuit` in `{e, f}` but
    /// disagree on whether `[e, f, g]`.
    IllDefined {
        circuit: ElemSet,
        e: usize,
        f: usize,
        g: usize,
        first: ElemSet,
        second: ElemSet,
    },
    NoWitness {
        circuit: ElemSet,
        e: usize,
        f: usize,
    },
    NotCyclic {
        circuit: ElemSet,
        error: CyclicError<usize>,
    },
    /// Adjacency condition `condition` (1 to 4) fails for clockwise adjacent
    /// `p, q` in `R_o` restricted to `s`.
    Condition {
        condition: u8,
        circuit: ElemSet,
        cocircuit: ElemSet,
        s: ElemSet,
        p: usize,
        q: usize,
    },
}

impl GraphFramework {
    pub fn check_domains(&self, m: &Matroid) -> Result<(), FrameworkError> {
        self.signing.check_domains(m).map_err(|e| match e {
            SigningError::DomainMismatch { family } => FrameworkError::DomainMismatch { family },
            other => other.into(),
        })?;
        let ground = m.ground();
        let ok = self.sigma.len() == m.cocircuits().len()
            && self
                .sigma
                .iter()
                .zip(m.cocircuits())
                .all(|(r, &b)| r.support == ground - b && r.negative.is_subset(r.support));
        if ok {
            Ok(())
        } else {
            Err(FrameworkError::DomainMismatch { family: "sigma" })
        }
    }

    /// `σ_b(e)` for cocircuit index `b` and `e ∉ b`.
    pub fn sigma(&self, b: usize, e: usize) -> i8 {
        self.sigma[b].get(e)
    }

    /// `c_o(e) d_b(e)` for `e ∈ o ∩ b`.
    pub fn product(&self, o: usize, b: usize, e: usize) -> i8 {
        self.signing.c[o].get(e) * self.signing.d[b].get(e)
    }
}

/// Relation triples of `R_o` for circuit index `oi`, or the first failure.
fn circuit_relation(
    m: &Matroid,
    f: &GraphFramework,
    oi: usize,
) -> Result<BTreeSet<(usize, usize, usize)>, FrameworkViolation> {
    let o = m.circuits()[oi];
    let mut triples = BTreeSet::new();
    if o.len() < 3 {
        return Ok(triples);
    }
    let witnesses: Vec<(usize, ElemSet)> = m
        .cocircuits()
        .iter()
        .enumerate()
        .filter(|(_, b)| (**b & o).len() == 2)
        .map(|(j, b)| (j, *b & o))
        .collect();
    let elems = o.to_vec();
    for (x, &e) in elems.iter().enumerate() {
        for &ff in &elems[x + 1..] {
            let pair = ElemSet::singleton(e).with(ff);
            let ws: Vec<usize> = witnesses
                .iter()
                .filter(|(_, s)| *s == pair)
                .map(|(j, _)| *j)
                .collect();
            let Some(&b0) = ws.first() else {
                return Err(FrameworkViolation::NoWitness {
                    circuit: o,
                    e,
                    f: ff,
                });
            };
            for g in o - pair {
                let v0 = f.sigma(b0, g) == f.product(oi, b0, ff);
                for &b1 in &ws[1..] {
                    if (f.sigma(b1, g) == f.product(oi, b1, ff)) != v0 {
                        return Err(FrameworkViolation::IllDefined {
                            circuit: o,
                            e,
                            f: ff,
                            g,
                            first: m.cocircuits()[b0],
                            second: m.cocircuits()[b1],
                        });
                    }
                }
                if v0 {
                    triples.insert((e, ff, g));
                } else {
                    triples.insert((ff, e, g));
                }
            }
        }
    }
    Ok(triples)
}

fn circuit_order(
    m: &Matroid,
    f: &GraphFramework,
    oi: usize,
) -> Result<CyclicOrder<usize>, FrameworkViolation> {
    let o = m.circuits()[oi];
    let triples = circuit_relation(m, f, oi)?;
    validate_cyclic(&o.to_vec(), &triples)
        .map_err(|error| FrameworkViolation::NotCyclic { circuit: o, error })
}

/// Check a framework: signing validity, well-definedness of each `R_o`,
/// the cyclic-order axioms, then the four adjacency conditions. `None`
/// means valid.
pub fn verify_framework(
    m: &Matroid,
    f: &GraphFramework,
) -> Result<Option<FrameworkViolation>, FrameworkError> {
    f.check_domains(m)?;
    if let Some(v) = verify_signing(m, &f.signing)? {
        return Ok(Some(FrameworkViolation::Signing(v)));
    }
    let mut orders = Vec::with_capacity(m.circuits().len());
    for oi in 0..m.circuits().len() {
        if let Err(v) = circuit_relation(m, f, oi) {
            return Ok(Some(v));
        }
    }
    for oi in 0..m.circuits().len() {
        match circuit_order(m, f, oi) {
            Ok(r) => orders.push(r),
            Err(v) => return Ok(Some(v)),
        }
    }
    for (oi, r) in orders.iter().enumerate() {
        for bi in 0..m.cocircuits().len() {
            if let Some(v) = check_conditions(m, f, oi, bi, r.items()) {
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

/// Conditions (1)–(4) for one circuit–cocircuit pair, given the circuit's
/// cyclic sequence. Adjacent pairs of every `s = (b ∩ o) ∪ T` with `|T| ≤ 2`
/// are exactly the ordered pairs `(p, q)` with no element of `b ∩ o`
/// strictly between them going clockwise (both orders when `|s| = 2`).
fn check_conditions(
    m: &Matroid,
    f: &GraphFramework,
    oi: usize,
    bi: usize,
    seq: &[usize],
) -> Option<FrameworkViolation> {
    let o = m.circuits()[oi];
    let b = m.cocircuits()[bi];
    let meet = o & b;
    let k = seq.len();
    if k < 2 {
        return None;
    }
    // prefix[i] = number of elements of b among seq[..i], over two laps.
    let mut prefix = vec![0usize; 2 * k + 1];
    for i in 0..2 * k {
        prefix[i + 1] = prefix[i] + usize::from(meet.contains(seq[i % k]));
    }
    for i in 0..k {
        for step in 1..k {
            let j = i + step;
            let (p, q) = (seq[i], seq[j % k]);
            let s = meet.with(p).with(q);
            let adjacent = s.len() == 2 || prefix[j] - prefix[i + 1] == 0;
            if !adjacent {
                continue;
            }
            let (pb, qb) = (b.contains(p), b.contains(q));
            let (condition, ok) = match (pb, qb) {
                (true, true) => (1, f.product(oi, bi, p) == -f.product(oi, bi, q)),
                (false, false) => (2, f.sigma(bi, p) == f.sigma(bi, q)),
                (true, false) => (3, f.product(oi, bi, p) == f.sigma(bi, q)),
                (false, true) => (4, f.product(oi, bi, q) == -f.sigma(bi, p)),
            };
            if !ok {
                return Some(FrameworkViolation::Condition {
                    condition,
                    circuit: o,
                    cocircuit: b,
                    s,
                    p,
                    q,
                });
            }
        }
    }
    None
}

/// The cyclic order `R_o` of every circuit, in circuit order. Witness
/// cocircuits are taken lexicographically least; the orders do not depend
/// on the choice when the framework is well defined.
pub fn derive_circuit_orders(
    m: &Matroid,
    f: &GraphFramework,
) -> Result<Vec<CyclicOrder<usize>>, FrameworkError> {
    f.check_domains(m)?;
    (0..m.circuits().len())
        .map(|oi| {
            circuit_order(m, f, oi).map_err(|v| {
                let circuit = m.set_labels(m.circuits()[oi]);
                match v {
                    FrameworkViolation::NoWitness { e, f, .. } => {
                        FrameworkError::NoWitnessCocircuit {
                            circuit,
                            e: m.label(e).to_string(),
                            f: m.label(f).to_string(),
                        }
                    }
                    FrameworkViolation::NotCyclic { error, .. } => {
                        FrameworkError::NotACyclicOrder {
                            circuit,
                            reason: error.to_string(),
                        }
                    }
                    _ => FrameworkError::IllDefined { circuit },
                }
            })
        })
        .collect()
}

/// The framework of an oriented graph: the signing of
/// [`signing_from_oriented_graph`] and `σ_b(e) = -1` iff `e` has both ends
/// on the `U` shore of `b`.
pub fn framework_from_graph(
    g: &Multigraph,
    orientation: &GraphOrientation,
) -> Result<GraphFramework, FrameworkError> {
    let signing = signing_from_oriented_graph(g, orientation)?;
    let ground = ElemSet::full(g.edge_count());
    let mut bonds = orientation.bonds.clone();
    bonds.sort();
    let sigma = bonds
        .iter()
        .map(|&(b, u)| {
            let mut row = SignRow::positive(ground - b);
            for e in ground - b {
                if u >> g.edges()[e].tail & 1 == 1 {
                    row.negative.insert(e);
                }
            }
            row
        })
        .collect();
    Ok(GraphFramework { signing, sigma })
}

/// Cycle matroid of `g` together with the framework of its canonical
/// orientation.
pub fn framework_for_graph(g: &Multigraph) -> Result<(Matroid, GraphFramework), FrameworkError> {
    let m = g.cycle_matroid_with_cap(crate::matroid::MAX_CAP)?;
    let f = framework_from_graph(g, &g.canonical_orientation())?;
    Ok((m, f))
}

/// Restrict a framework to `m / contract \ delete`. Each minor circuit `o`
/// inherits `c` from the least circuit `o'` of `m` with `o ⊆ o' ⊆ o ∪
/// contract`; each minor cocircuit `b` inherits `d` and `σ` from the least
/// cocircuit `b'` with `b ⊆ b' ⊆ b ∪ delete`.
pub fn restrict_framework(
    m: &Matroid,
    f: &GraphFramework,
    contract: ElemSet,
    delete: ElemSet,
) -> Result<(Matroid, GraphFramework), FrameworkError> {
    f.check_domains(m)?;
    let n = minor(m, contract, delete)?;
    let contract = contract & m.ground();
    let delete = delete & m.ground();
    let kept = m.ground() - contract - delete;
    let c = n
        .circuits()
        .iter()
        .map(|&o| {
            let full = o.expand(kept);
            let parent = m
                .circuits()
                .iter()
                .position(|&p| p.is_disjoint(delete) && p - contract == full)
                .expect("every minor circuit has a parent circuit");
            SignRow {
                support: o,
                negative: (f.signing.c[parent].negative & full).compress(kept),
            }
        })
        .collect();
    let mut d = Vec::with_capacity(n.cocircuits().len());
    let mut sigma = Vec::with_capacity(n.cocircuits().len());
    for &b in n.cocircuits() {
        let full = b.expand(kept);
        let parent = m
            .cocircuits()
            .iter()
            .position(|&p| p.is_disjoint(contract) && p - delete == full)
            .expect("every minor cocircuit has a parent cocircuit");
        d.push(SignRow {
            support: b,
            negative: (f.signing.d[parent].negative & full).compress(kept),
        });
        sigma.push(SignRow {
            support: n.ground() - b,
            negative: (f.sigma[parent].negative & (kept - full)).compress(kept),
        });
    }
    let framework = GraphFramework {
        signing: Signing { c, d },
        sigma,
    };
    Ok((n, framework))
}
