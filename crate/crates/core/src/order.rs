//! Finite binary relations over `0..n` and the order theory built on them:
//! closure, reduction, the strict-partial-order axioms, interval-order
//! detection, classification and linear-extension checks.
//!
//! A [`Relation`] stores one bit row per element, so membership is O(1) and
//! row unions run a word at a time.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Relation {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Relation { n, words, bits: vec![0; n * words] }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Relation::new(n);
        for (i, j) in pairs {
            r.try_insert(i, j)?;
        }
        Ok(r)
    }

    pub fn len_elements(&self) -> usize {
        self.n
    }

    /// Number of pairs in the relation.
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    fn try_insert(&mut self, i: usize, j: usize) -> Result<(), Error> {
        for index in [i, j] {
            if index >= self.n {
                return Err(Error::IndexOutOfRange { index, n: self.n });
            }
        }
        self.insert(i, j);
        Ok(())
    }

    /// Panics if either index is out of range.
    pub fn insert(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "({i}, {j}) out of range for n = {}", self.n);
        self.bits[i * self.words + j / WORD] |= 1 << (j % WORD);
    }

    pub fn remove(&mut self, i: usize, j: usize) {
        if i < self.n && j < self.n {
            self.bits[i * self.words + j / WORD] &= !(1 << (j % WORD));
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.n && j < self.n && self.bits[i * self.words + j / WORD] & (1 << (j % WORD)) != 0
    }

    /// Elements `j` with `(i, j)` in the relation, ascending.
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(i))
    }

    /// All pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn in_degree(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.contains(i, j)).count()
    }

    pub fn inverse(&self) -> Relation {
        let mut inv = Relation::new(self.n);
        for (i, j) in self.pairs() {
            inv.insert(j, i);
        }
        inv
    }

    /// Neither `(i, j)` nor `(j, i)` is present.
    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.contains(i, j) && !self.contains(j, i)
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut r = self.clone();
        let w = r.words;
        for k in 0..r.n {
            let (kw, kb) = (k / WORD, 1u64 << (k % WORD));
            for i in 0..r.n {
                if i != k && r.bits[i * w + kw] & kb != 0 {
                    for x in 0..w {
                        let v = r.bits[k * w + x];
                        r.bits[i * w + x] |= v;
                    }
                }
            }
        }
        r
    }

    pub fn check_spo(&self) -> Result<(), SpoViolation> {
        check_spo(self)
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Relation(n={}, ", self.n)?;
        f.debug_set().entries(self.pairs()).finish()?;
        write!(f, ")")
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &word)| {
        let mut w = word;
        std::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + b)
            }
        })
    })
}

pub fn transitive_closure(r: &Relation) -> Relation {
    r.transitive_closure()
}

/// The first strict-partial-order axiom a relation breaks, with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "axiom", rename_all = "lowercase")]
pub enum SpoViolation {
    /// `(element, element)` is in the relation.
    Irreflexive { element: usize },
    /// Both `(a, b)` and `(b, a)` are in the relation.
    Asymmetric { a: usize, b: usize },
    /// `(a, b)` and `(b, c)` are present but `(a, c)` is not.
    Transitive { a: usize, b: usize, c: usize },
}

impl SpoViolation {
    pub fn axiom(&self) -> &'static str {
        match self {
            SpoViolation::Irreflexive { .. } => "irreflexive",
            SpoViolation::Asymmetric { .. } => "asymmetric",
            SpoViolation::Transitive { .. } => "transitive",
        }
    }
}

impl fmt::Display for SpoViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpoViolation::Irreflexive { element } => write!(f, "irreflexivity fails at {element}"),
            SpoViolation::Asymmetric { a, b } => write!(f, "asymmetry fails on ({a}, {b})"),
            SpoViolation::Transitive { a, b, c } => {
                write!(f, "transitivity fails on ({a}, {b}, {c})")
            }
        }
    }
}

/// Checks the three strict-partial-order axioms in the order irreflexive,
/// asymmetric, transitive and reports the first failure found.
pub fn check_spo(r: &Relation) -> Result<(), SpoViolation> {
    for i in 0..r.n {
        if r.contains(i, i) {
            return Err(SpoViolation::Irreflexive { element: i });
        }
    }
    for (a, b) in r.pairs() {
        if a < b && r.contains(b, a) {
            return Err(SpoViolation::Asymmetric { a, b });
        }
    }
    for (a, b) in r.pairs() {
        // row(b) must be a subset of row(a)
        for (x, (rb, ra)) in r.row(b).iter().zip(r.row(a)).enumerate() {
            let missing = rb & !ra;
            if missing != 0 {
                let c = x * WORD + missing.trailing_zeros() as usize;
                return Err(SpoViolation::Transitive { a, b, c });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum IntervalViolation {
    NotPartialOrder {
        violation: SpoViolation,
    },
    /// Edges `(i, j)` and `(k, l)` with neither `(i, l)` nor `(k, j)`: a 2+2.
    TwoPlusTwo {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    },
}

impl fmt::Display for IntervalViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalViolation::NotPartialOrder { violation } => write!(f, "not a partial order: {violation}"),
            IntervalViolation::TwoPlusTwo { i, j, k, l } => {
                write!(f, "2+2 pattern: {i}>{j} and {k}>{l} with {i}, {l} and {k}, {j} unrelated")
            }
        }
    }
}

/// Interval-order test by enumerating pairs of edges.
pub fn is_interval_order(r: &Relation) -> Result<(), IntervalViolation> {
    check_spo(r).map_err(|violation| IntervalViolation::NotPartialOrder { violation })?;
    let edges: Vec<_> = r.pairs().collect();
    for &(i, j) in &edges {
        for &(k, l) in &edges {
            if !r.contains(i, l) && !r.contains(k, j) {
                return Err(IntervalViolation::TwoPlusTwo { i, j, k, l });
            }
        }
    }
    Ok(())
}

/// Strongest order class a relation belongs to. Variants are declared from
/// weakest to strongest so that `Ord` follows strictness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "class")]
pub enum Classification {
    NotStrictPartialOrder { reason: SpoViolation },
    StrictPartialOrder,
    IntervalOrder,
    WeakOrder,
    TotalOrder,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::NotStrictPartialOrder { .. } => "NotStrictPartialOrder",
            Classification::StrictPartialOrder => "StrictPartialOrder",
            Classification::IntervalOrder => "IntervalOrder",
            Classification::WeakOrder => "WeakOrder",
            Classification::TotalOrder => "TotalOrder",
        }
    }

    /// True for interval, weak and total orders.
    pub fn at_least_interval(&self) -> bool {
        *self >= Classification::IntervalOrder
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::NotStrictPartialOrder { reason } => {
                write!(f, "NotStrictPartialOrder ({reason})")
            }
            other => f.write_str(other.name()),
        }
    }
}

pub fn classify(r: &Relation) -> Classification {
    if let Err(reason) = check_spo(r) {
        return Classification::NotStrictPartialOrder { reason };
    }
    if is_interval_order(r).is_err() {
        return Classification::StrictPartialOrder;
    }
    if !incomparability_is_transitive(r) {
        return Classification::IntervalOrder;
    }
    let n = r.n;
    let any_incomparable = (0..n).any(|i| (i + 1..n).any(|j| r.incomparable(i, j)));
    if any_incomparable {
        Classification::WeakOrder
    } else {
        Classification::TotalOrder
    }
}

fn incomparability_is_transitive(r: &Relation) -> bool {
    let n = r.n;
    for i in 0..n {
        for j in 0..n {
            if i == j || !r.incomparable(i, j) {
                continue;
            }
            for k in 0..n {
                if k != i && k != j && r.incomparable(j, k) && !r.incomparable(i, k) {
                    return false;
                }
            }
        }
    }
    true
}

/// Hasse diagram of a strict partial order: keeps `(i, j)` only when no
/// `k` sits between them.
pub fn transitive_reduction(r: &Relation) -> Result<Relation, Error> {
    check_spo(r).map_err(Error::NotStrictPartialOrder)?;
    let mut reduced = r.clone();
    let w = r.words;
    for i in 0..r.n {
        let mut covered = vec![0u64; w];
        for k in r.successors(i) {
            for (c, x) in covered.iter_mut().zip(r.row(k)) {
                *c |= x;
            }
        }
        for (x, c) in covered.iter().enumerate() {
            reduced.bits[i * w + x] &= !c;
        }
    }
    Ok(reduced)
}

fn check_permutation(ranking: &[usize], n: usize) -> Result<(), Error> {
    if ranking.len() != n {
        return Err(Error::NotPermutation(format!("length {} for {n} elements", ranking.len())));
    }
    let mut seen = vec![false; n];
    for &x in ranking {
        if x >= n {
            return Err(Error::NotPermutation(format!("{x} out of range")));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(Error::NotPermutation(format!("{x} repeated")));
        }
    }
    Ok(())
}

/// Every pair `(i, j)` of `r` that `ranking` places `j` before `i`, in
/// lexicographic order. Empty iff `ranking` is a linear extension of `r`.
pub fn linear_extension_violations(ranking: &[usize], r: &Relation) -> Result<Vec<(usize, usize)>, Error> {
    check_permutation(ranking, r.n)?;
    let mut position = vec![0; r.n];
    for (pos, &x) in ranking.iter().enumerate() {
        position[x] = pos;
    }
    Ok(r.pairs().filter(|&(i, j)| position[j] < position[i]).collect())
}

pub fn is_linear_extension(ranking: &[usize], r: &Relation) -> Result<bool, Error> {
    Ok(linear_extension_violations(ranking, r)?.is_empty())
}
