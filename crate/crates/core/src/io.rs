//! JSON problem and weight files, and DOT export.
//!
//! ```json
//! {"attributes":[{"name":"Cost","kind":"numeric","direction":"minimize"},
//!                {"name":"Perf","kind":"ordinal","levels":["low","med","high"]},
//!                {"name":"Mass","kind":"interval","direction":"minimize"}],
//!  "alternatives":[{"id":"A","values":{"Cost":10,"Perf":"low","Mass":[2.0,3.5]}}],
//!  "importance":[["Cost","Perf"]]}
//! ```
//!
//! Unknown keys are rejected everywhere.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagnostics::WeightVector;
use crate::dominance::DominanceGraph;
use crate::error::Error;
use crate::model::{
    Alternative, Attribute, Direction, Finding, FindingKind, Problem, Severity, ValidationReport, Value, ValueDomain,
};
use crate::order::{transitive_reduction, Relation};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub attributes: Vec<AttributeDoc>,
    pub alternatives: Vec<AlternativeDoc>,
    #[serde(default)]
    pub importance: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum AttributeDoc {
    Numeric { name: String, direction: Direction },
    Ordinal { name: String, levels: Vec<String> },
    Interval { name: String, direction: Direction },
}

impl AttributeDoc {
    pub fn name(&self) -> &str {
        match self {
            AttributeDoc::Numeric { name, .. }
            | AttributeDoc::Ordinal { name, .. }
            | AttributeDoc::Interval { name, .. } => name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlternativeDoc {
    pub id: String,
    pub values: BTreeMap<String, ValueDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueDoc {
    Number(f64),
    Level(String),
    Range([f64; 2]),
}

/// Failure to turn text into a valid [`Problem`]. Syntax and schema errors
/// carry a document path and, when known, a line and column.
#[derive(Debug, Clone, PartialEq)]
pub enum ParseError {
    Syntax { line: usize, column: usize, message: String },
    Schema { path: String, line: usize, column: usize, message: String },
    Invalid(ValidationReport),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, column, message } => {
                write!(f, "syntax error at line {line}, column {column}: {message}")
            }
            ParseError::Schema { path, line, column, message } => {
                write!(f, "schema error at {path} (line {line}, column {column}): {message}")
            }
            ParseError::Invalid(report) => {
                write!(f, "invalid problem:")?;
                for finding in report.errors() {
                    write!(f, "\n  {finding}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for ParseError {}

impl ParseError {
    /// Findings in machine-readable form; syntax and schema errors become a
    /// single error finding.
    pub fn findings(&self) -> Vec<Finding> {
        match self {
            ParseError::Invalid(report) => report.findings.clone(),
            ParseError::Syntax { .. } => vec![Finding {
                severity: Severity::Error,
                kind: FindingKind::Syntax,
                path: String::new(),
                message: self.to_string(),
            }],
            ParseError::Schema { path, message, .. } => vec![Finding {
                severity: Severity::Error,
                kind: FindingKind::Schema,
                path: path.clone(),
                message: message.clone(),
            }],
        }
    }
}

fn from_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        let (line, column) = (inner.line(), inner.column());
        if inner.is_syntax() || inner.is_eof() {
            ParseError::Syntax { line, column, message: inner.to_string() }
        } else {
            ParseError::Schema { path, line, column, message: inner.to_string() }
        }
    })
}

pub fn parse_document(text: &str) -> Result<ProblemDocument, ParseError> {
    from_json(text)
}

/// Parses and validates a problem file.
pub fn parse_problem(text: &str) -> Result<Problem, ParseError> {
    parse_document(text)?.into_problem()
}

pub fn serialize_problem(p: &Problem) -> String {
    serde_json::to_string_pretty(&ProblemDocument::from(p)).expect("documents always serialize")
}

impl ProblemDocument {
    /// Resolves names to ids and validates. Names that cannot be resolved
    /// are reported with the document path that mentions them.
    pub fn into_problem(self) -> Result<Problem, ParseError> {
        let mut report = ValidationReport::default();
        let unresolved = |report: &mut ValidationReport, kind, path: String, message: String| {
            report.findings.push(Finding { severity: Severity::Error, kind, path, message })
        };

        let attributes: Vec<Attribute> = self
            .attributes
            .iter()
            .map(|a| match a {
                AttributeDoc::Numeric { name, direction } => {
                    Attribute::new(name.clone(), ValueDomain::Numeric { direction: *direction })
                }
                AttributeDoc::Ordinal { name, levels } => {
                    Attribute::new(name.clone(), ValueDomain::Ordinal { levels: levels.clone() })
                }
                AttributeDoc::Interval { name, direction } => {
                    Attribute::new(name.clone(), ValueDomain::Interval { direction: *direction })
                }
            })
            .collect();
        let index = |name: &str| attributes.iter().position(|a| a.name == name);

        let mut alternatives = Vec::with_capacity(self.alternatives.len());
        for (i, alt) in self.alternatives.into_iter().enumerate() {
            for name in alt.values.keys() {
                if index(name).is_none() {
                    unresolved(
                        &mut report,
                        FindingKind::UnknownAttribute,
                        format!("alternatives[{i}].values.{name}"),
                        format!("undeclared attribute {name}"),
                    );
                }
            }
            let mut values = Vec::with_capacity(attributes.len());
            for attr in &attributes {
                match alt.values.get(&attr.name) {
                    Some(v) => values.push(Value::from(v.clone())),
                    None => {
                        unresolved(
                            &mut report,
                            FindingKind::MissingValue,
                            format!("alternatives[{i}].values.{}", attr.name),
                            format!("{} has no value for {}", alt.id, attr.name),
                        );
                        break;
                    }
                }
            }
            alternatives.push(Alternative { id: alt.id, values });
        }

        let mut importance = Vec::with_capacity(self.importance.len());
        for (e, [more, less]) in self.importance.iter().enumerate() {
            match (index(more), index(less)) {
                (Some(a), Some(b)) => importance.push((a, b)),
                _ => {
                    let missing = if index(more).is_none() { more } else { less };
                    unresolved(
                        &mut report,
                        FindingKind::UnknownAttribute,
                        format!("importance[{e}]"),
                        format!("undeclared attribute {missing}"),
                    );
                }
            }
        }

        let problem = Problem { attributes, alternatives, importance };
        if report.is_valid() {
            report = problem.validate();
        } else {
            // missing values would be reported twice
            report
                .findings
                .extend(problem.validate().findings.into_iter().filter(|f| f.kind != FindingKind::MissingValue));
        }
        if report.is_valid() {
            Ok(problem)
        } else {
            Err(ParseError::Invalid(report))
        }
    }
}

impl From<ValueDoc> for Value {
    fn from(v: ValueDoc) -> Self {
        match v {
            ValueDoc::Number(x) => Value::Number(x),
            ValueDoc::Level(s) => Value::Level(s),
            ValueDoc::Range([lo, hi]) => Value::Range { lo, hi },
        }
    }
}

impl From<&Value> for ValueDoc {
    fn from(v: &Value) -> Self {
        match v {
            Value::Number(x) => ValueDoc::Number(*x),
            Value::Level(s) => ValueDoc::Level(s.clone()),
            Value::Range { lo, hi } => ValueDoc::Range([*lo, *hi]),
        }
    }
}

impl From<&Problem> for ProblemDocument {
    fn from(p: &Problem) -> Self {
        let attributes = p
            .attributes
            .iter()
            .map(|a| match &a.domain {
                ValueDomain::Numeric { direction } => {
                    AttributeDoc::Numeric { name: a.name.clone(), direction: *direction }
                }
                ValueDomain::Ordinal { levels } => {
                    AttributeDoc::Ordinal { name: a.name.clone(), levels: levels.clone() }
                }
                ValueDomain::Interval { direction } => {
                    AttributeDoc::Interval { name: a.name.clone(), direction: *direction }
                }
            })
            .collect();
        let alternatives = p
            .alternatives
            .iter()
            .map(|alt| AlternativeDoc {
                id: alt.id.clone(),
                values: p
                    .attributes
                    .iter()
                    .zip(&alt.values)
                    .map(|(a, v)| (a.name.clone(), ValueDoc::from(v)))
                    .collect(),
            })
            .collect();
        let importance =
            p.importance.iter().map(|&(a, b)| [p.attributes[a].name.clone(), p.attributes[b].name.clone()]).collect();
        ProblemDocument { attributes, alternatives, importance }
    }
}

/// Parses a weights file: a map from attribute name to weight that covers
/// exactly the problem's attributes.
pub fn parse_weights(text: &str, p: &Problem) -> Result<WeightVector, Error> {
    let map: BTreeMap<String, f64> = serde_json::from_str(text).map_err(|e| Error::InvalidWeights(e.to_string()))?;
    if let Some(extra) = map.keys().find(|k| p.attribute_index(k).is_none()) {
        return Err(Error::InvalidWeights(format!("weight for undeclared attribute {extra}")));
    }
    let weights = p
        .attributes
        .iter()
        .map(|a| map.get(&a.name).copied().ok_or_else(|| Error::InvalidWeights(format!("no weight for {}", a.name))))
        .collect::<Result<Vec<_>, _>>()?;
    WeightVector::new(weights)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DotMode {
    #[default]
    Full,
    Hasse,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn write_dot(name: &str, labels: &[String], edges: Vec<(usize, usize, Option<String>)>) -> String {
    let mut nodes: Vec<&str> = labels.iter().map(String::as_str).collect();
    nodes.sort_unstable();
    let mut edges: Vec<(&str, &str, Option<String>)> =
        edges.into_iter().map(|(a, b, l)| (labels[a].as_str(), labels[b].as_str(), l)).collect();
    edges.sort();

    let mut out = format!("digraph {name} {{\n  rankdir=TB;\n");
    for node in nodes {
        out.push_str(&format!("  {};\n", quote(node)));
    }
    for (a, b, label) in edges {
        match label {
            Some(l) => out.push_str(&format!("  {} -> {} [label={}];\n", quote(a), quote(b), quote(&l))),
            None => out.push_str(&format!("  {} -> {};\n", quote(a), quote(b))),
        }
    }
    out.push_str("}\n");
    out
}

/// DOT text for a dominance graph; edges carry their witness names. Hasse
/// mode keeps only covering edges and needs a strict partial order.
pub fn export_dominance_dot(g: &DominanceGraph, mode: DotMode) -> Result<String, Error> {
    let kept = match mode {
        DotMode::Full => g.relation.clone(),
        DotMode::Hasse => transitive_reduction(&g.relation)?,
    };
    let edges = g
        .edges
        .iter()
        .filter(|e| kept.contains(e.winner, e.loser))
        .map(|e| {
            let names: Vec<&str> = e.witnesses.iter().map(|&w| g.attributes[w].as_str()).collect();
            (e.winner, e.loser, Some(names.join(",")))
        })
        .collect();
    Ok(write_dot("dominance", &g.alternatives, edges))
}

/// DOT text for any relation over labelled elements.
pub fn export_relation_dot(r: &Relation, labels: &[String], mode: DotMode) -> Result<String, Error> {
    if labels.len() != r.len_elements() {
        return Err(Error::IndexOutOfRange { index: labels.len(), n: r.len_elements() });
    }
    let kept = match mode {
        DotMode::Full => r.clone(),
        DotMode::Hasse => transitive_reduction(r)?,
    };
    Ok(write_dot("relation", labels, kept.pairs().map(|(a, b)| (a, b, None)).collect()))
}
