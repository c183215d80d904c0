//! The qualitative dominance relation over alternatives.
//!
//! `A` dominates `B` when some witness attribute `w` strictly prefers `A`,
//! and `A` is weakly preferred (better or identical) on every attribute `k`
//! that `w` is not more important than. With no importance edges this is
//! Pareto dominance; every importance edge `w ▷ k` releases `k` from the
//! weak test whenever `w` is the witness.
//!
//! [`DominanceEngine`] prepares a problem once: it closes the importance
//! relation, turns every value into a range oriented so that larger is
//! better, and stores for each attribute `w` the bitmask of attributes it
//! must check. A pairwise test then builds two masks (strictly better,
//! weakly better) and looks for a witness whose check mask is covered by the
//! weak mask.

use std::fmt;

use rayon::prelude::*;

use crate::error::Error;
use crate::model::{compare_oriented, value_compare, OrderingOutcome, Problem};
use crate::order::{check_spo, classify, iter_bits, Classification, Relation, SpoViolation};

const WORD: usize = 64;

/// Certificate for one dominance claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub attribute: usize,
    /// Outcome on the witness attribute; always `Better`.
    pub strict_on: OrderingOutcome,
    /// Attributes `k` with `attribute ⋫ k`, all of which passed the weak test.
    pub checked_set: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct DominanceEngine<'p> {
    problem: &'p Problem,
    importance: Relation,
    importance_class: Classification,
    m: usize,
    words: usize,
    /// `m * words` bits: row `w` is the checked set of witness `w`.
    checked: Vec<u64>,
    /// `n * m` oriented ranges.
    keys: Vec<(f64, f64)>,
}

impl<'p> DominanceEngine<'p> {
    pub fn new(problem: &'p Problem) -> Result<Self, Error> {
        problem.ensure_valid()?;
        let m = problem.attributes.len();
        let stated = Relation::from_pairs(m, problem.importance.iter().copied())?;
        Ok(Self::with_importance(problem, stated.transitive_closure()))
    }

    /// Builds an engine around an already closed, acyclic importance relation.
    /// The problem's own stated edges are ignored.
    pub(crate) fn with_importance(problem: &'p Problem, importance: Relation) -> Self {
        let m = problem.attributes.len();
        let words = m.div_ceil(WORD).max(1);
        let mut checked = vec![0u64; m * words];
        for w in 0..m {
            for k in 0..m {
                if !importance.contains(w, k) {
                    checked[w * words + k / WORD] |= 1 << (k % WORD);
                }
            }
        }
        let mut keys = Vec::with_capacity(problem.alternatives.len() * m);
        for alt in &problem.alternatives {
            for (attr, value) in problem.attributes.iter().zip(&alt.values) {
                keys.push(attr.domain.oriented_range(value).expect("validated problem has conforming values"));
            }
        }
        let importance_class = classify(&importance);
        DominanceEngine { problem, importance, importance_class, m, words, checked, keys }
    }

    pub fn problem(&self) -> &'p Problem {
        self.problem
    }

    /// The transitively closed importance relation.
    pub fn importance(&self) -> &Relation {
        &self.importance
    }

    pub fn importance_class(&self) -> Classification {
        self.importance_class
    }

    pub fn len(&self) -> usize {
        self.problem.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.problem.alternatives.is_empty()
    }

    pub fn checked_set(&self, witness: usize) -> Vec<usize> {
        iter_bits(&self.checked[witness * self.words..(witness + 1) * self.words]).collect()
    }

    pub fn outcome(&self, a: usize, b: usize, attribute: usize) -> OrderingOutcome {
        compare_oriented(self.keys[a * self.m + attribute], self.keys[b * self.m + attribute])
    }

    fn check_index(&self, index: usize) -> Result<(), Error> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::UnknownAlternative(format!("#{index}")))
        }
    }

    /// Fills `better` and `weak` with the attributes where `a` is strictly
    /// and weakly preferred to `b`.
    fn pair_masks(&self, a: usize, b: usize, better: &mut [u64], weak: &mut [u64]) {
        better.fill(0);
        weak.fill(0);
        let ka = &self.keys[a * self.m..(a + 1) * self.m];
        let kb = &self.keys[b * self.m..(b + 1) * self.m];
        for (k, (&(alo, ahi), &(blo, bhi))) in ka.iter().zip(kb).enumerate() {
            let bit = 1u64 << (k % WORD);
            if alo > bhi {
                better[k / WORD] |= bit;
                weak[k / WORD] |= bit;
            } else if alo == blo && ahi == bhi {
                weak[k / WORD] |= bit;
            }
        }
    }

    fn covered(&self, witness: usize, weak: &[u64]) -> bool {
        self.checked[witness * self.words..(witness + 1) * self.words].iter().zip(weak).all(|(c, w)| c & !w == 0)
    }

    fn witnesses_into(&self, a: usize, b: usize, better: &mut [u64], weak: &mut [u64], out: &mut Vec<usize>) {
        out.clear();
        if a == b {
            return;
        }
        self.pair_masks(a, b, better, weak);
        out.extend(iter_bits(better).filter(|&w| self.covered(w, weak)));
    }

    /// Every attribute that certifies `a` over `b`, ascending.
    pub fn witnesses(&self, a: usize, b: usize) -> Vec<usize> {
        let mut better = vec![0; self.words];
        let mut weak = vec![0; self.words];
        let mut out = Vec::new();
        self.witnesses_into(a, b, &mut better, &mut weak, &mut out);
        out
    }

    fn witness(&self, attribute: usize) -> Witness {
        Witness { attribute, strict_on: OrderingOutcome::Better, checked_set: self.checked_set(attribute) }
    }

    /// The canonical (smallest-id) witness for `a` over `b`, if any.
    pub fn dominates(&self, a: usize, b: usize) -> Result<Option<Witness>, Error> {
        self.check_index(a)?;
        self.check_index(b)?;
        let mut better = vec![0; self.words];
        let mut weak = vec![0; self.words];
        if a == b {
            return Ok(None);
        }
        self.pair_masks(a, b, &mut better, &mut weak);
        let first = iter_bits(&better).find(|&w| self.covered(w, &weak));
        Ok(first.map(|w| self.witness(w)))
    }

    /// Literal two-level quantifier loop over the problem's values, with no
    /// precomputed masks. Reference oracle for [`Self::dominates`].
    pub fn naive_dominates(&self, a: usize, b: usize) -> Result<Option<Witness>, Error> {
        self.check_index(a)?;
        self.check_index(b)?;
        let attrs = &self.problem.attributes;
        let va = &self.problem.alternatives[a].values;
        let vb = &self.problem.alternatives[b].values;
        for w in 0..self.m {
            if value_compare(&attrs[w].domain, &va[w], &vb[w])? != OrderingOutcome::Better {
                continue;
            }
            let mut holds = true;
            let mut checked_set = Vec::new();
            for k in 0..self.m {
                if self.importance.contains(w, k) {
                    continue;
                }
                checked_set.push(k);
                if !value_compare(&attrs[k].domain, &va[k], &vb[k])?.is_weakly_better() {
                    holds = false;
                    break;
                }
            }
            if holds {
                return Ok(Some(Witness { attribute: w, strict_on: OrderingOutcome::Better, checked_set }));
            }
        }
        Ok(None)
    }

    fn row_edges(&self, a: usize) -> Vec<DominanceEdge> {
        let mut better = vec![0; self.words];
        let mut weak = vec![0; self.words];
        let mut found = Vec::new();
        let mut edges = Vec::new();
        for b in 0..self.len() {
            self.witnesses_into(a, b, &mut better, &mut weak, &mut found);
            if !found.is_empty() {
                edges.push(DominanceEdge { winner: a, loser: b, witnesses: found.clone() });
            }
        }
        edges
    }

    fn assemble(&self, rows: Vec<Vec<DominanceEdge>>) -> DominanceGraph {
        let n = self.len();
        let edges: Vec<DominanceEdge> = rows.into_iter().flatten().collect();
        let mut relation = Relation::new(n);
        for e in &edges {
            relation.insert(e.winner, e.loser);
        }
        let spo = check_spo(&relation);
        DominanceGraph {
            alternatives: self.problem.alternatives.iter().map(|a| a.id.clone()).collect(),
            attributes: self.problem.attributes.iter().map(|a| a.name.clone()).collect(),
            edges,
            relation,
            spo,
            importance_class: self.importance_class,
        }
    }

    /// Evaluates every ordered pair, splitting rows across the rayon pool.
    /// The result does not depend on scheduling.
    pub fn graph(&self) -> DominanceGraph {
        let rows = (0..self.len()).into_par_iter().map(|a| self.row_edges(a)).collect();
        self.assemble(rows)
    }

    pub fn graph_sequential(&self) -> DominanceGraph {
        let rows = (0..self.len()).map(|a| self.row_edges(a)).collect();
        self.assemble(rows)
    }

    pub fn explain(&self, a: usize, b: usize) -> Result<Explanation, Error> {
        self.check_index(a)?;
        self.check_index(b)?;
        let outcomes: Vec<_> = (0..self.m).map(|k| self.outcome(a, b, k)).collect();
        let candidates = (0..self.m)
            .filter(|&w| outcomes[w] == OrderingOutcome::Better)
            .map(|w| {
                let excluded = self.importance.successors(w).collect();
                let blocked_by = self
                    .checked_set(w)
                    .into_iter()
                    .find(|&k| !outcomes[k].is_weakly_better())
                    .map(|k| (k, outcomes[k]));
                WitnessCandidate { attribute: w, excluded, blocked_by }
            })
            .collect();
        Ok(Explanation {
            a: self.problem.alternatives[a].id.clone(),
            b: self.problem.alternatives[b].id.clone(),
            attributes: self.problem.attributes.iter().map(|x| x.name.clone()).collect(),
            outcomes,
            candidates,
        })
    }
}

pub fn dominates(p: &Problem, a: usize, b: usize) -> Result<Option<Witness>, Error> {
    DominanceEngine::new(p)?.dominates(a, b)
}

pub fn naive_dominates(p: &Problem, a: usize, b: usize) -> Result<Option<Witness>, Error> {
    DominanceEngine::new(p)?.naive_dominates(a, b)
}

pub fn dominance_graph(p: &Problem) -> Result<DominanceGraph, Error> {
    Ok(DominanceEngine::new(p)?.graph())
}

pub fn explain(p: &Problem, a: usize, b: usize) -> Result<Explanation, Error> {
    DominanceEngine::new(p)?.explain(a, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceEdge {
    pub winner: usize,
    pub loser: usize,
    /// All witness attribute ids, ascending; never empty.
    pub witnesses: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceGraph {
    pub alternatives: Vec<String>,
    pub attributes: Vec<String>,
    /// Sorted by `(winner, loser)`.
    pub edges: Vec<DominanceEdge>,
    pub relation: Relation,
    pub spo: Result<(), SpoViolation>,
    pub importance_class: Classification,
}

impl DominanceGraph {
    /// Number of alternatives (nodes), not edges.
    pub fn len(&self) -> usize {
        self.alternatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alternatives.is_empty()
    }

    pub fn contains(&self, winner: usize, loser: usize) -> bool {
        self.relation.contains(winner, loser)
    }

    pub fn edge(&self, winner: usize, loser: usize) -> Option<&DominanceEdge> {
        self.edges.binary_search_by_key(&(winner, loser), |e| (e.winner, e.loser)).ok().map(|i| &self.edges[i])
    }

    pub fn is_spo(&self) -> bool {
        self.spo.is_ok()
    }

    pub fn maximal_set(&self) -> Vec<usize> {
        maximal_set(self)
    }

    pub fn layered_ranking(&self) -> Result<RankLayers, Error> {
        layered_ranking(self)
    }
}

/// Undominated alternatives, ascending.
pub fn maximal_set(g: &DominanceGraph) -> Vec<usize> {
    let mut dominated = vec![false; g.len()];
    for e in &g.edges {
        dominated[e.loser] = true;
    }
    (0..g.len()).filter(|&i| !dominated[i]).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankLayers {
    pub layers: Vec<Vec<usize>>,
}

impl RankLayers {
    /// Layers concatenated in order; a linear extension of the graph.
    pub fn flatten(&self) -> Vec<usize> {
        self.layers.iter().flatten().copied().collect()
    }
}

/// Peels maximal sets off a strict-partial-order dominance graph.
pub fn layered_ranking(g: &DominanceGraph) -> Result<RankLayers, Error> {
    g.spo.map_err(Error::NotStrictPartialOrder)?;
    let n = g.len();
    let mut indegree = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in &g.edges {
        indegree[e.loser] += 1;
        out[e.winner].push(e.loser);
    }
    let mut layers = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &x in &current {
            for &y in &out[x] {
                indegree[y] -= 1;
                if indegree[y] == 0 {
                    next.push(y);
                }
            }
        }
        next.sort_unstable();
        layers.push(std::mem::replace(&mut current, next));
    }
    Ok(RankLayers { layers })
}

/// Why one strictly-better attribute does or does not certify dominance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCandidate {
    pub attribute: usize,
    /// Attributes less important than the candidate, skipped by the weak test.
    pub excluded: Vec<usize>,
    /// First checked attribute where the weak test fails.
    pub blocked_by: Option<(usize, OrderingOutcome)>,
}

impl WitnessCandidate {
    pub fn is_witness(&self) -> bool {
        self.blocked_by.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Explanation {
    pub a: String,
    pub b: String,
    pub attributes: Vec<String>,
    /// Outcome of `a` against `b`, per attribute.
    pub outcomes: Vec<OrderingOutcome>,
    pub candidates: Vec<WitnessCandidate>,
}

impl Explanation {
    pub fn witnesses(&self) -> Vec<usize> {
        self.candidates.iter().filter(|c| c.is_witness()).map(|c| c.attribute).collect()
    }

    pub fn dominates(&self) -> bool {
        self.candidates.iter().any(WitnessCandidate::is_witness)
    }
}

impl fmt::Display for Explanation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.attributes.iter().map(String::len).max().unwrap_or(0).max(9);
        writeln!(f, "{} vs {}", self.a, self.b)?;
        writeln!(f, "{:width$}  outcome", "attribute")?;
        for (name, outcome) in self.attributes.iter().zip(&self.outcomes) {
            writeln!(f, "{name:width$}  {outcome}")?;
        }
        if self.candidates.is_empty() {
            writeln!(f, "no witness candidates: {} is strictly better on no attribute", self.a)?;
        }
        for c in &self.candidates {
            let name = &self.attributes[c.attribute];
            match c.blocked_by {
                None => write!(f, "witness {name}")?,
                Some((k, outcome)) => write!(f, "candidate {name} blocked by {} ({outcome})", self.attributes[k])?,
            }
            if !c.excluded.is_empty() {
                let names: Vec<&str> = c.excluded.iter().map(|&k| self.attributes[k].as_str()).collect();
                write!(f, "; excluded as less important than {name}: {}", names.join(", "))?;
            }
            writeln!(f)?;
        }
        let verdict = if self.dominates() { "dominates" } else { "does not dominate" };
        writeln!(f, "{} {verdict} {}", self.a, self.b)
    }
}
