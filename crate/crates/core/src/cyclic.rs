//! Finite linear and cyclic orders.
//!
//! A [`CyclicOrder`] is stored as a circular sequence rotated so that its
//! least item comes first. The ternary relation `[a, b, c]` holds when,
//! walking forward from `a`, one meets `b` before `c`.

use std::collections::BTreeSet;
use std::fmt::Debug;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError<T: Debug> {
    #[error("cyclicity fails: {0:?} holds but its rotation does not")]
    CyclicityViolation((T, T, T)),
    #[error("asymmetry fails: both {0:?} and its reverse hold")]
    AsymmetryViolation((T, T, T)),
    #[error("transitivity fails at {0:?}")]
    TransitivityViolation((T, T, T)),
    #[error("totality fails: neither {0:?} nor its reverse holds")]
    TotalityViolation((T, T, T)),
    #[error("item {0:?} occurs more than once")]
    DuplicateItem(T),
    #[error("item {0:?} is not in the order")]
    NotASubset(T),
    #[error("a cyclic order on one item has no successor")]
    SingletonOrder,
    #[error("arc components need a nonempty selection")]
    EmptySelection,
}

/// Which of the two senses a cyclic order runs in, read off its canonical
/// rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// The item after the minimum is smaller than the item before it (or
    /// there are fewer than three items).
    Ascending,
    Descending,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicOrder<T> {
    items: Vec<T>,
}

/// One component of a circle with some items removed: the removed item
/// `anchor` and the items strictly between it and its successor among the
/// removed ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc<T> {
    pub anchor: T,
    pub interval: Vec<T>,
}

impl<T: Ord + Clone + Debug> CyclicOrder<T> {
    pub fn from_sequence(seq: Vec<T>) -> Result<Self, CyclicError<T>> {
        let mut seen = BTreeSet::new();
        for x in &seq {
            if !seen.insert(x.clone()) {
                return Err(CyclicError::DuplicateItem(x.clone()));
            }
        }
        Ok(Self::canonical(seq))
    }

    fn canonical(mut seq: Vec<T>) -> Self {
        if let Some(pos) = seq
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
        {
            seq.rotate_left(pos);
        }
        CyclicOrder { items: seq }
    }

    pub fn items(&self) -> &[T] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    fn position(&self, x: &T) -> Option<usize> {
        self.items.iter().position(|y| y == x)
    }

    /// `[a, b, c]`: the three items are distinct and occur in this cyclic
    /// sequence order.
    pub fn holds(&self, a: &T, b: &T, c: &T) -> bool {
        let n = self.items.len();
        match (self.position(a), self.position(b), self.position(c)) {
            (Some(i), Some(j), Some(k)) if i != j && j != k && i != k => {
                let rel = |x: usize| (x + n - i) % n;
                rel(j) < rel(k)
            }
            _ => false,
        }
    }

    /// The full ternary relation.
    pub fn triples(&self) -> BTreeSet<(T, T, T)> {
        let n = self.items.len();
        let mut out = BTreeSet::new();
        for i in 0..n {
            for dj in 1..n {
                for dk in dj + 1..n {
                    out.insert((
                        self.items[i].clone(),
                        self.items[(i + dj) % n].clone(),
                        self.items[(i + dk) % n].clone(),
                    ));
                }
            }
        }
        out
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.items.clone();
        v.reverse();
        Self::canonical(v)
    }

    pub fn orientation(&self) -> Orientation {
        let n = self.items.len();
        if n < 3 || self.items[1] < self.items[n - 1] {
            Orientation::Ascending
        } else {
            Orientation::Descending
        }
    }

    pub fn equal_up_to_reversal(&self, other: &Self) -> bool {
        self == other || *self == other.reversed()
    }

    /// The cyclic order inherited by a subset.
    pub fn restrict(&self, s: &BTreeSet<T>) -> Result<Self, CyclicError<T>> {
        if let Some(x) = s.iter().find(|x| self.position(x).is_none()) {
            return Err(CyclicError::NotASubset(x.clone()));
        }
        Ok(Self::canonical(
            self.items
                .iter()
                .filter(|x| s.contains(x))
                .cloned()
                .collect(),
        ))
    }

    /// The clockwise successor `n(e)`.
    pub fn clockwise_next(&self, e: &T) -> Result<T, CyclicError<T>> {
        let i = self
            .position(e)
            .ok_or_else(|| CyclicError::NotASubset(e.clone()))?;
        if self.items.len() < 2 {
            return Err(CyclicError::SingletonOrder);
        }
        Ok(self.items[(i + 1) % self.items.len()].clone())
    }

    /// Components of the circle after removing the items of `s`: one arc per
    /// member of `s`, listed in canonical sequence order.
    pub fn arc_components(&self, s: &BTreeSet<T>) -> Result<Vec<Arc<T>>, CyclicError<T>> {
        if s.is_empty() {
            return Err(CyclicError::EmptySelection);
        }
        if let Some(x) = s.iter().find(|x| self.position(x).is_none()) {
            return Err(CyclicError::NotASubset(x.clone()));
        }
        let n = self.items.len();
        let mut arcs = Vec::with_capacity(s.len());
        for (i, x) in self.items.iter().enumerate() {
            if !s.contains(x) {
                continue;
            }
            let mut interval = Vec::new();
            let mut j = (i + 1) % n;
            while !s.contains(&self.items[j]) {
                interval.push(self.items[j].clone());
                j = (j + 1) % n;
            }
            arcs.push(Arc {
                anchor: x.clone(),
                interval,
            });
        }
        Ok(arcs)
    }
}

/// Check the four cyclic-order axioms on `triples` over `domain` and return
/// the circular sequence realizing them.
///
/// Axioms are checked in the order asymmetry, cyclicity, transitivity,
/// totality; the first failure is returned with its witness triple.
pub fn validate_cyclic<T: Ord + Clone + Debug>(
    domain: &[T],
    triples: &BTreeSet<(T, T, T)>,
) -> Result<CyclicOrder<T>, CyclicError<T>> {
    let mut items: Vec<T> = domain.to_vec();
    items.sort();
    if let Some(w) = items.windows(2).find(|w| w[0] == w[1]) {
        return Err(CyclicError::DuplicateItem(w[0].clone()));
    }
    for (a, b, c) in triples {
        for x in [a, b, c] {
            if items.binary_search(x).is_err() {
                return Err(CyclicError::NotASubset(x.clone()));
            }
        }
    }
    for t @ (a, b, c) in triples {
        if triples.contains(&(c.clone(), b.clone(), a.clone())) {
            return Err(CyclicError::AsymmetryViolation(t.clone()));
        }
    }
    for t @ (a, b, c) in triples {
        if !triples.contains(&(b.clone(), c.clone(), a.clone())) {
            return Err(CyclicError::CyclicityViolation(t.clone()));
        }
    }
    for (a, b, c) in triples {
        for (a2, c2, d) in triples.range((a.clone(), c.clone(), items[0].clone())..) {
            if a2 != a || c2 != c {
                break;
            }
            if !triples.contains(&(a.clone(), b.clone(), d.clone())) {
                return Err(CyclicError::TransitivityViolation((
                    a.clone(),
                    b.clone(),
                    d.clone(),
                )));
            }
        }
    }
    for a in &items {
        for b in &items {
            for c in &items {
                if a == b || b == c || a == c {
                    continue;
                }
                let fwd = (a.clone(), b.clone(), c.clone());
                let back = (c.clone(), b.clone(), a.clone());
                if !triples.contains(&fwd) && !triples.contains(&back) {
                    return Err(CyclicError::TotalityViolation(fwd));
                }
            }
        }
    }
    if items.len() < 3 {
        return Ok(CyclicOrder { items });
    }
    // Walk successors from the least item: n(e) is the g with [e, g, f] for
    // every other f.
    let n = items.len();
    let mut seq = Vec::with_capacity(n);
    let mut cur = items[0].clone();
    for _ in 0..n {
        seq.push(cur.clone());
        let next = items
            .iter()
            .find(|g| {
                **g != cur
                    && items.iter().all(|f| {
                        *f == cur
                            || f == *g
                            || triples.contains(&(cur.clone(), (*g).clone(), f.clone()))
                    })
            })
            .cloned()
            .expect("a total cyclic order has successors");
        cur = next;
    }
    Ok(CyclicOrder { items: seq })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearOrder<T> {
    items: Vec<T>,
}

impl<T: Clone + Eq + Debug> LinearOrder<T> {
    pub fn new(items: Vec<T>) -> Result<Self, CyclicError<T>> {
        for (i, x) in items.iter().enumerate() {
            if items[..i].contains(x) {
                return Err(CyclicError::DuplicateItem(x.clone()));
            }
        }
        Ok(LinearOrder { items })
    }

    pub fn items(&self) -> &[T] {
        &self.items
    }
}

/// The path whose vertices are the initial segments of a finite linear order
/// and whose edges are its items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathModel<T> {
    /// Vertex `i` is the initial segment of length `i`.
    pub vertices: Vec<Vec<T>>,
    /// `(item, from, to)`; item `i` joins segment `i` to segment `i + 1`.
    pub edges: Vec<(T, usize, usize)>,
}

impl<T: Clone> PathModel<T> {
    pub fn start(&self) -> usize {
        0
    }

    pub fn end(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Vertices reachable from `from` once edge `removed` is deleted.
    pub fn component_without(&self, removed: usize, from: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([from]);
        let mut stack = vec![from];
        while let Some(v) = stack.pop() {
            for (i, (_, a, b)) in self.edges.iter().enumerate() {
                if i == removed {
                    continue;
                }
                let other = if *a == v {
                    *b
                } else if *b == v {
                    *a
                } else {
                    continue;
                };
                if seen.insert(other) {
                    stack.push(other);
                }
            }
        }
        seen
    }

    /// Removing edge `removed` separates start from end.
    pub fn separates(&self, removed: usize) -> bool {
        !self
            .component_without(removed, self.start())
            .contains(&self.end())
    }
}

pub fn linear_order_path<T: Clone + Eq + Debug>(p: &LinearOrder<T>) -> PathModel<T> {
    let n = p.items.len();
    let vertices = (0..=n).map(|i| p.items[..i].to_vec()).collect();
    let edges = p
        .items
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i, i + 1))
        .collect();
    PathModel { vertices, edges }
}
