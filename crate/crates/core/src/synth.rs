//! Random problem generators for experiments and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::model::{Alternative, Attribute, Direction, Problem, Value, ValueDomain};
use crate::order::Relation;

/// Importance edges forming an interval order: each attribute gets a random
/// real interval and `i ▷ j` iff interval `i` lies strictly above interval `j`.
/// The result is transitively closed.
pub fn random_interval_order<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<(usize, usize)> {
    let intervals: Vec<(f64, f64)> = (0..m)
        .map(|_| {
            let lo: f64 = rng.random_range(0.0..10.0);
            let len: f64 = rng.random_range(0.0..4.0);
            (lo, lo + len)
        })
        .collect();
    let mut edges = Vec::new();
    for (i, a) in intervals.iter().enumerate() {
        for (j, b) in intervals.iter().enumerate() {
            if a.0 > b.1 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// A random DAG over `m` attributes, closed transitively. Each forward pair
/// of a random topological order is an edge with probability `density`.
pub fn random_partial_order<R: Rng + ?Sized>(rng: &mut R, m: usize, density: f64) -> Vec<(usize, usize)> {
    let mut topo: Vec<usize> = (0..m).collect();
    topo.shuffle(rng);
    let mut r = Relation::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if rng.random_bool(density) {
                r.insert(topo[i], topo[j]);
            }
        }
    }
    r.transitive_closure().pairs().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainKind {
    Numeric,
    Ordinal,
    Interval,
}

/// Settings for [`random_problem`]. Numeric values are small integers so
/// that ties occur; intervals have integer endpoints in `0..=value_range`.
#[derive(Debug, Clone)]
pub struct SynthConfig {
    pub alternatives: usize,
    pub kinds: Vec<DomainKind>,
    pub value_range: u32,
    pub ordinal_levels: usize,
}

impl SynthConfig {
    pub fn numeric(alternatives: usize, attributes: usize) -> Self {
        SynthConfig { alternatives, kinds: vec![DomainKind::Numeric; attributes], value_range: 5, ordinal_levels: 3 }
    }

    pub fn mixed<R: Rng + ?Sized>(rng: &mut R, alternatives: usize, attributes: usize) -> Self {
        let kinds = (0..attributes)
            .map(|_| match rng.random_range(0..3) {
                0 => DomainKind::Numeric,
                1 => DomainKind::Ordinal,
                _ => DomainKind::Interval,
            })
            .collect();
        SynthConfig { alternatives, kinds, value_range: 6, ordinal_levels: 4 }
    }
}

pub fn random_problem<R: Rng + ?Sized>(rng: &mut R, config: &SynthConfig, importance: Vec<(usize, usize)>) -> Problem {
    let levels: Vec<String> = (0..config.ordinal_levels.max(1)).map(|i| format!("l{i}")).collect();
    let attributes: Vec<Attribute> = config
        .kinds
        .iter()
        .enumerate()
        .map(|(i, kind)| {
            let direction = if rng.random_bool(0.5) { Direction::Maximize } else { Direction::Minimize };
            let domain = match kind {
                DomainKind::Numeric => ValueDomain::Numeric { direction },
                DomainKind::Ordinal => ValueDomain::Ordinal { levels: levels.clone() },
                DomainKind::Interval => ValueDomain::Interval { direction },
            };
            Attribute::new(format!("X{i}"), domain)
        })
        .collect();
    let alternatives = (0..config.alternatives)
        .map(|a| {
            let values = config
                .kinds
                .iter()
                .map(|kind| match kind {
                    DomainKind::Numeric => Value::Number(rng.random_range(0..=config.value_range) as f64),
                    DomainKind::Ordinal => Value::Level(levels[rng.random_range(0..levels.len())].clone()),
                    DomainKind::Interval => {
                        let lo = rng.random_range(0..=config.value_range);
                        let hi = rng.random_range(lo..=config.value_range);
                        Value::range(lo as f64, hi as f64)
                    }
                })
                .collect();
            Alternative::new(format!("a{a}"), values)
        })
        .collect();
    Problem::new(attributes, alternatives, importance)
}
