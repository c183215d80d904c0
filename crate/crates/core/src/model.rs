//! Decision problems: attributes with their value domains, alternatives, and
//! the stated relative-importance edges between attributes.
//!
//! Every attribute carries an intra-attribute strict preference. Ordinal
//! levels are listed worst first, numeric values follow their natural order
//! (flipped for `Minimize`), and interval values use the strong interval
//! order: one range beats another only when it lies entirely beyond it.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValueDomain {
    /// Totally ordered qualitative scale, worst level first.
    Ordinal {
        levels: Vec<String>,
    },
    Numeric {
        direction: Direction,
    },
    Interval {
        direction: Direction,
    },
}

impl ValueDomain {
    pub fn ordinal<I, S>(levels: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ValueDomain::Ordinal { levels: levels.into_iter().map(Into::into).collect() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            ValueDomain::Ordinal { .. } => "ordinal",
            ValueDomain::Numeric { .. } => "numeric",
            ValueDomain::Interval { .. } => "interval",
        }
    }

    fn level_index(&self, level: &str) -> Option<usize> {
        match self {
            ValueDomain::Ordinal { levels } => levels.iter().position(|l| l == level),
            _ => None,
        }
    }

    /// Maps a conforming value onto a closed range in "higher is better"
    /// orientation. Ordinal levels and numbers become degenerate ranges.
    pub(crate) fn oriented_range(&self, value: &Value) -> Result<(f64, f64), Error> {
        let flip = |d: &Direction, lo: f64, hi: f64| match d {
            Direction::Maximize => (lo, hi),
            Direction::Minimize => (-hi, -lo),
        };
        match (self, value) {
            (ValueDomain::Ordinal { .. }, Value::Level(level)) => self
                .level_index(level)
                .map(|i| (i as f64, i as f64))
                .ok_or_else(|| Error::DomainMismatch(format!("undeclared level {level:?}"))),
            (ValueDomain::Numeric { direction }, Value::Number(x)) if x.is_finite() => Ok(flip(direction, *x, *x)),
            (ValueDomain::Interval { direction }, Value::Range { lo, hi })
                if lo.is_finite() && hi.is_finite() && lo <= hi =>
            {
                Ok(flip(direction, *lo, *hi))
            }
            _ => Err(Error::DomainMismatch(format!("{value} does not conform to a {} domain", self.kind()))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Level(String),
    Number(f64),
    Range { lo: f64, hi: f64 },
}

impl Value {
    pub fn level(s: impl Into<String>) -> Self {
        Value::Level(s.into())
    }

    pub fn range(lo: f64, hi: f64) -> Self {
        Value::Range { lo, hi }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Level(s) => write!(f, "{s}"),
            Value::Number(x) => write!(f, "{x}"),
            Value::Range { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Result of comparing two values of one attribute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderingOutcome {
    Better,
    Worse,
    Equal,
    Incomparable,
}

impl OrderingOutcome {
    pub fn mirror(self) -> Self {
        match self {
            OrderingOutcome::Better => OrderingOutcome::Worse,
            OrderingOutcome::Worse => OrderingOutcome::Better,
            other => other,
        }
    }

    /// Weak preference: strictly better or identical.
    pub fn is_weakly_better(self) -> bool {
        matches!(self, OrderingOutcome::Better | OrderingOutcome::Equal)
    }
}

impl fmt::Display for OrderingOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Compares two oriented ranges: better iff strictly beyond, equal iff identical.
pub(crate) fn compare_oriented(a: (f64, f64), b: (f64, f64)) -> OrderingOutcome {
    if a.0 > b.1 {
        OrderingOutcome::Better
    } else if b.0 > a.1 {
        OrderingOutcome::Worse
    } else if a == b {
        OrderingOutcome::Equal
    } else {
        OrderingOutcome::Incomparable
    }
}

/// Intra-attribute preference between `v1` and `v2` under `domain`.
pub fn value_compare(domain: &ValueDomain, v1: &Value, v2: &Value) -> Result<OrderingOutcome, Error> {
    Ok(compare_oriented(domain.oriented_range(v1)?, domain.oriented_range(v2)?))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Attribute {
    pub name: String,
    pub domain: ValueDomain,
}

impl Attribute {
    pub fn new(name: impl Into<String>, domain: ValueDomain) -> Self {
        Attribute { name: name.into(), domain }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Alternative {
    pub id: String,
    /// One value per attribute, indexed by attribute id.
    pub values: Vec<Value>,
}

impl Alternative {
    pub fn new(id: impl Into<String>, values: Vec<Value>) -> Self {
        Alternative { id: id.into(), values }
    }
}

/// A decision problem. Attribute ids are positions in `attributes`;
/// `importance` holds stated `(more, less)` pairs of attribute ids.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Problem {
    pub attributes: Vec<Attribute>,
    pub alternatives: Vec<Alternative>,
    pub importance: Vec<(usize, usize)>,
}

impl Problem {
    pub fn new(attributes: Vec<Attribute>, alternatives: Vec<Alternative>, importance: Vec<(usize, usize)>) -> Self {
        Problem { attributes, alternatives, importance }
    }

    pub fn attribute_index(&self, name: &str) -> Option<usize> {
        self.attributes.iter().position(|a| a.name == name)
    }

    pub fn alternative_index(&self, id: &str) -> Option<usize> {
        self.alternatives.iter().position(|a| a.id == id)
    }

    pub fn attribute_names(&self) -> Vec<&str> {
        self.attributes.iter().map(|a| a.name.as_str()).collect()
    }

    pub fn alternative_ids(&self) -> Vec<&str> {
        self.alternatives.iter().map(|a| a.id.as_str()).collect()
    }

    /// Copy of the problem without the alternative at `index`.
    pub fn without_alternative(&self, index: usize) -> Problem {
        let mut reduced = self.clone();
        reduced.alternatives.remove(index);
        reduced
    }

    pub fn validate(&self) -> ValidationReport {
        validate_problem(self)
    }

    /// Returns `Err(Error::InvalidProblem)` unless validation finds no errors.
    pub fn ensure_valid(&self) -> Result<ValidationReport, Error> {
        let report = validate_problem(self);
        if report.is_valid() {
            Ok(report)
        } else {
            Err(Error::InvalidProblem(report))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FindingKind {
    EmptyName,
    DuplicateAttribute,
    DuplicateAlternative,
    EmptyLevels,
    DuplicateLevel,
    MissingValue,
    ExtraValue,
    DomainMismatch,
    UndeclaredLevel,
    NonFiniteNumber,
    InvertedRange,
    UnknownAttribute,
    SelfLoop,
    ImportanceCycle,
    IsolatedAttribute,
    DegenerateIntervals,
    Syntax,
    Schema,
    UnknownAlternative,
    MissingEdge,
    BadRequest,
}

/// One validation finding. `path` locates it in the document form of the
/// problem, e.g. `alternatives[1].values.Cost` or `importance[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub severity: Severity,
    pub kind: FindingKind,
    pub path: String,
    pub message: String,
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sev = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{sev} at {}: {}", self.path, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn errors(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.severity == Severity::Warning)
    }

    pub fn is_valid(&self) -> bool {
        self.errors().next().is_none()
    }

    fn error(&mut self, kind: FindingKind, path: impl Into<String>, message: impl Into<String>) {
        self.findings.push(Finding { severity: Severity::Error, kind, path: path.into(), message: message.into() });
    }

    fn warning(&mut self, kind: FindingKind, path: impl Into<String>, message: impl Into<String>) {
        self.findings.push(Finding { severity: Severity::Warning, kind, path: path.into(), message: message.into() });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for finding in &self.findings {
            writeln!(f, "{finding}")?;
        }
        Ok(())
    }
}

pub fn validate_problem(p: &Problem) -> ValidationReport {
    let mut report = ValidationReport::default();
    let m = p.attributes.len();

    let mut seen = HashSet::new();
    for (i, attr) in p.attributes.iter().enumerate() {
        let path = format!("attributes[{i}]");
        if attr.name.is_empty() {
            report.error(FindingKind::EmptyName, &path, "attribute name is empty");
        } else if !seen.insert(attr.name.as_str()) {
            report.error(FindingKind::DuplicateAttribute, &path, format!("duplicate attribute name {}", attr.name));
        }
        if let ValueDomain::Ordinal { levels } = &attr.domain {
            if levels.is_empty() {
                report.error(FindingKind::EmptyLevels, format!("{path}.levels"), "ordinal scale has no levels");
            }
            let mut lv = HashSet::new();
            for (j, level) in levels.iter().enumerate() {
                if !lv.insert(level.as_str()) {
                    report.error(
                        FindingKind::DuplicateLevel,
                        format!("{path}.levels[{j}]"),
                        format!("duplicate level {level:?} on {}", attr.name),
                    );
                }
            }
        }
    }

    let mut ids = HashSet::new();
    for (i, alt) in p.alternatives.iter().enumerate() {
        let path = format!("alternatives[{i}]");
        if alt.id.is_empty() {
            report.error(FindingKind::EmptyName, &path, "alternative id is empty");
        } else if !ids.insert(alt.id.as_str()) {
            report.error(FindingKind::DuplicateAlternative, &path, format!("duplicate alternative id {}", alt.id));
        }
        for (k, attr) in p.attributes.iter().enumerate() {
            let vpath = format!("{path}.values.{}", attr.name);
            match alt.values.get(k) {
                None => {
                    report.error(FindingKind::MissingValue, vpath, format!("{} has no value for {}", alt.id, attr.name))
                }
                Some(v) => check_value(&mut report, vpath, attr, v),
            }
        }
        if alt.values.len() > m {
            report.error(
                FindingKind::ExtraValue,
                format!("{path}.values"),
                format!("{} has {} values for {m} attributes", alt.id, alt.values.len()),
            );
        }
    }

    let name = |i: usize| p.attributes.get(i).map(|a| a.name.as_str()).unwrap_or("?");
    let mut graph_ok = true;
    for (e, &(more, less)) in p.importance.iter().enumerate() {
        let path = format!("importance[{e}]");
        if more >= m || less >= m {
            report.error(FindingKind::UnknownAttribute, path, "importance edge names an undeclared attribute");
            graph_ok = false;
        } else if more == less {
            report.error(FindingKind::SelfLoop, path, format!("self-loop on {}", name(more)));
            graph_ok = false;
        }
    }
    if graph_ok {
        if let Some(cycle) = find_cycle(m, &p.importance) {
            let rendered: Vec<&str> = cycle.iter().map(|&i| name(i)).collect();
            report.error(
                FindingKind::ImportanceCycle,
                "importance",
                format!("importance cycle {}", rendered.join("→")),
            );
        }
    }

    let mut mentioned = vec![false; m];
    for &(a, b) in &p.importance {
        if a < m {
            mentioned[a] = true;
        }
        if b < m {
            mentioned[b] = true;
        }
    }
    if m > 1 && !p.importance.is_empty() {
        for (i, attr) in p.attributes.iter().enumerate() {
            if !mentioned[i] {
                report.warning(
                    FindingKind::IsolatedAttribute,
                    format!("attributes[{i}]"),
                    format!("{} appears in no importance edge", attr.name),
                );
            }
        }
    }

    for (k, attr) in p.attributes.iter().enumerate() {
        if !matches!(attr.domain, ValueDomain::Interval { .. }) || p.alternatives.is_empty() {
            continue;
        }
        let all_points = p.alternatives.iter().all(|alt| match alt.values.get(k) {
            Some(Value::Range { lo, hi }) => lo == hi,
            _ => false,
        });
        if all_points {
            report.warning(
                FindingKind::DegenerateIntervals,
                format!("attributes[{k}]"),
                format!("every interval value of {} is a single point", attr.name),
            );
        }
    }

    report
}

fn check_value(report: &mut ValidationReport, path: String, attr: &Attribute, value: &Value) {
    match (&attr.domain, value) {
        (ValueDomain::Ordinal { levels }, Value::Level(level)) => {
            if !levels.contains(level) {
                report.error(
                    FindingKind::UndeclaredLevel,
                    path,
                    format!("level {level:?} is not declared on {}", attr.name),
                );
            }
        }
        (ValueDomain::Numeric { .. }, Value::Number(x)) => {
            if !x.is_finite() {
                report.error(FindingKind::NonFiniteNumber, path, format!("{x} is not finite"));
            }
        }
        (ValueDomain::Interval { .. }, Value::Range { lo, hi }) => {
            if !lo.is_finite() || !hi.is_finite() {
                report.error(FindingKind::NonFiniteNumber, path, "interval endpoints must be finite");
            } else if lo > hi {
                report.error(FindingKind::InvertedRange, path, format!("interval [{lo}, {hi}] has lo > hi"));
            }
        }
        _ => report.error(
            FindingKind::DomainMismatch,
            path,
            format!("{value} does not match the {} domain of {}", attr.domain.kind(), attr.name),
        ),
    }
}

/// Returns one directed cycle as a closed walk `[a, b, .., a]`, if any.
fn find_cycle(n: usize, edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(a, b) in edges {
        adj.entry(a).or_default().push(b);
    }
    for succ in adj.values_mut() {
        succ.sort_unstable();
        succ.dedup();
    }

    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    let mut parent: HashMap<usize, usize> = HashMap::new();
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some((node, next)) = stack.pop() {
            let succ = adj.get(&node).map(Vec::as_slice).unwrap_or(&[]);
            if next < succ.len() {
                stack.push((node, next + 1));
                let child = succ[next];
                match state[child] {
                    0 => {
                        state[child] = 1;
                        parent.insert(child, node);
                        stack.push((child, 0));
                    }
                    1 => {
                        let mut cycle = vec![node];
                        let mut cur = node;
                        while cur != child {
                            cur = parent[&cur];
                            cycle.push(cur);
                        }
                        cycle.reverse();
                        cycle.push(child);
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                state[node] = 2;
            }
        }
    }
    None
}
