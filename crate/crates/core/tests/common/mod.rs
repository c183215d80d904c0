//! Brute-force oracles shared by the integration suites. Nothing here calls
//! into the order kernel or the dominance engine.

#![allow(dead_code, clippy::needless_range_loop)]

use std::path::PathBuf;

use qualdom::model::{Direction, Problem, Value, ValueDomain};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

/// Dense adjacency matrix.
pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Matrix {
    let mut m = vec![vec![false; n]; n];
    for (i, j) in pairs {
        m[i][j] = true;
    }
    m
}

/// Which strict-partial-order axiom fails first, checked in the order
/// irreflexive, asymmetric, transitive by triple loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Irreflexive,
    Asymmetric,
    Transitive,
}

pub fn brute_spo(r: &Matrix) -> Result<(), Axiom> {
    let n = r.len();
    if (0..n).any(|i| r[i][i]) {
        return Err(Axiom::Irreflexive);
    }
    for i in 0..n {
        for j in 0..n {
            if r[i][j] && r[j][i] {
                return Err(Axiom::Asymmetric);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if r[i][j] && r[j][k] && !r[i][k] {
                    return Err(Axiom::Transitive);
                }
            }
        }
    }
    Ok(())
}

/// Interval-order condition over all quadruples of elements.
pub fn brute_interval(r: &Matrix) -> bool {
    let n = r.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    if r[i][j] && r[k][l] && !r[i][l] && !r[k][j] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn brute_closure(r: &Matrix) -> Matrix {
    let n = r.len();
    let mut c = r.clone();
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in 0..n {
                if !c[i][j] && (0..n).any(|k| c[i][k] && c[k][j]) {
                    c[i][j] = true;
                    changed = true;
                }
            }
        }
        if !changed {
            return c;
        }
    }
}

/// -1 worse, 0 equal, 1 better, 2 incomparable; written from raw values.
fn raw_compare(domain: &ValueDomain, a: &Value, b: &Value) -> i8 {
    let sign = |d: &Direction| if *d == Direction::Maximize { 1.0 } else { -1.0 };
    match (domain, a, b) {
        (ValueDomain::Numeric { direction }, Value::Number(x), Value::Number(y)) => {
            let (x, y) = (x * sign(direction), y * sign(direction));
            if x > y {
                1
            } else if x < y {
                -1
            } else {
                0
            }
        }
        (ValueDomain::Ordinal { levels }, Value::Level(x), Value::Level(y)) => {
            let xi = levels.iter().position(|l| l == x).unwrap();
            let yi = levels.iter().position(|l| l == y).unwrap();
            (xi as i64 - yi as i64).signum() as i8
        }
        (ValueDomain::Interval { direction }, Value::Range { lo: al, hi: ah }, Value::Range { lo: bl, hi: bh }) => {
            if al == bl && ah == bh {
                return 0;
            }
            let beyond = |lo1: f64, hi1: f64, lo2: f64, hi2: f64| match direction {
                Direction::Maximize => lo1 > hi2,
                Direction::Minimize => hi1 < lo2,
            };
            if beyond(*al, *ah, *bl, *bh) {
                1
            } else if beyond(*bl, *bh, *al, *ah) {
                -1
            } else {
                2
            }
        }
        _ => panic!("mismatched value"),
    }
}

/// Pareto dominance: no worse or incomparable attribute, one strictly better.
pub fn pareto_dominates(p: &Problem, a: usize, b: usize) -> bool {
    let mut strict = false;
    for (k, attr) in p.attributes.iter().enumerate() {
        match raw_compare(&attr.domain, &p.alternatives[a].values[k], &p.alternatives[b].values[k]) {
            1 => strict = true,
            0 => {}
            _ => return false,
        }
    }
    strict
}

/// Dominance evaluated straight from the quantifier structure with a dense
/// closed importance matrix: some `w` strictly better, and every `k` not
/// below `w` weakly better.
pub fn quantifier_dominates(p: &Problem, closed_importance: &Matrix, a: usize, b: usize) -> bool {
    let m = p.attributes.len();
    let cmp =
        |k: usize| raw_compare(&p.attributes[k].domain, &p.alternatives[a].values[k], &p.alternatives[b].values[k]);
    (0..m).any(|w| cmp(w) == 1 && (0..m).all(|k| closed_importance[w][k] || matches!(cmp(k), 0 | 1)))
}

pub fn importance_matrix(p: &Problem) -> Matrix {
    brute_closure(&matrix(p.attributes.len(), p.importance.iter().copied()))
}

/// Conditions 1 and 2 for a given witness `w`, plus the checked set they
/// were evaluated over.
pub fn witness_holds(p: &Problem, closed_importance: &Matrix, a: usize, b: usize, w: usize) -> (bool, Vec<usize>) {
    let cmp =
        |k: usize| raw_compare(&p.attributes[k].domain, &p.alternatives[a].values[k], &p.alternatives[b].values[k]);
    let checked: Vec<usize> = (0..p.attributes.len()).filter(|&k| !closed_importance[w][k]).collect();
    let holds = cmp(w) == 1 && checked.iter().all(|&k| matches!(cmp(k), 0 | 1));
    (holds, checked)
}
