//! HTTP API over a single decision session.
//!
//! Reads take a snapshot (an `Arc` clone) and never wait on computation.
//! Mutations are serialized by a writer lock, computed off to the side, and
//! published with a single pointer swap, so a reader sees either the old
//! state or the new one. What-if requests work on a snapshot and never touch
//! the writer lock.

use std::net::SocketAddr;
use std::sync::{Arc, Mutex, RwLock};

use axum::extract::{Query, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};

use crate::dominance::{DominanceEngine, DominanceGraph, Explanation};
use crate::error::Error;
use crate::io::{parse_problem, DotMode, ParseError, ProblemDocument};
use crate::model::{Finding, FindingKind, OrderingOutcome, Problem, Severity, ValidationReport};
use crate::order::{
    is_interval_order, transitive_reduction, Classification, IntervalViolation, Relation, SpoViolation,
};

/// One published state of the session.
#[derive(Debug)]
pub struct Snapshot {
    pub problem: Problem,
    pub revision: u64,
    pub report: ValidationReport,
}

#[derive(Debug)]
pub struct Session {
    current: RwLock<Arc<Snapshot>>,
    writer: Mutex<()>,
}

impl Session {
    pub fn new(problem: Problem) -> Result<Self, Error> {
        let report = problem.ensure_valid()?;
        Ok(Session {
            current: RwLock::new(Arc::new(Snapshot { problem, revision: 0, report })),
            writer: Mutex::new(()),
        })
    }

    pub fn snapshot(&self) -> Arc<Snapshot> {
        self.current.read().expect("session lock poisoned").clone()
    }

    /// Applies `mutate` to the current snapshot. The returned problem is
    /// published with the next revision only if it validates; `Ok(None)`
    /// means "accepted, nothing changed". Returns the resulting snapshot and
    /// whether a new revision was published.
    fn mutate<F>(&self, mutate: F) -> Result<(Arc<Snapshot>, bool), ApiError>
    where
        F: FnOnce(&Snapshot) -> Result<Option<Problem>, ApiError>,
    {
        let _guard = self.writer.lock().expect("writer lock poisoned");
        let current = self.snapshot();
        let Some(next) = mutate(&current)? else {
            return Ok((current, false));
        };
        let report = next.validate();
        if !report.is_valid() {
            let cyclic =
                report.errors().any(|f| matches!(f.kind, FindingKind::ImportanceCycle | FindingKind::SelfLoop));
            let status = if cyclic { StatusCode::CONFLICT } else { StatusCode::UNPROCESSABLE_ENTITY };
            return Err(ApiError::new(status, current.revision, report.findings));
        }
        let published = Arc::new(Snapshot { problem: next, revision: current.revision + 1, report });
        *self.current.write().expect("session lock poisoned") = published.clone();
        Ok((published, true))
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    revision: u64,
    findings: Vec<Finding>,
}

impl ApiError {
    fn new(status: StatusCode, revision: u64, findings: Vec<Finding>) -> Self {
        ApiError { status, revision, findings }
    }

    fn single(status: StatusCode, revision: u64, kind: FindingKind, path: &str, message: String) -> Self {
        Self::new(status, revision, vec![Finding { severity: Severity::Error, kind, path: path.to_string(), message }])
    }
}

#[derive(Serialize)]
struct ErrorBody {
    revision: u64,
    findings: Vec<Finding>,
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(ErrorBody { revision: self.revision, findings: self.findings })).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeRequest {
    pub more: String,
    pub less: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WhatIfRequest {
    #[serde(default)]
    pub add: Vec<EdgeRequest>,
    #[serde(default)]
    pub remove: Vec<EdgeRequest>,
    #[serde(default)]
    pub mode: Option<String>,
}

#[derive(Serialize)]
struct ProblemResponse {
    revision: u64,
    problem: ProblemDocument,
    warnings: Vec<Finding>,
}

#[derive(Serialize)]
struct MutationResponse {
    revision: u64,
    changed: bool,
    classification: ClassificationView,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationView {
    pub class: String,
    /// Present when the closed relation is a partial order but not an
    /// interval order: `[i, j, k, l]` with `i ▷ j`, `k ▷ l` and neither
    /// `i ▷ l` nor `k ▷ j`.
    pub counterexample: Option<[String; 4]>,
    pub stated: Vec<[String; 2]>,
    pub closed: Vec<[String; 2]>,
}

fn classification_view(engine: &DominanceEngine<'_>) -> ClassificationView {
    let p = engine.problem();
    let name = |i: usize| p.attributes[i].name.clone();
    let class = engine.importance_class();
    let counterexample = match (class, is_interval_order(engine.importance())) {
        (Classification::StrictPartialOrder, Err(IntervalViolation::TwoPlusTwo { i, j, k, l })) => {
            Some([name(i), name(j), name(k), name(l)])
        }
        _ => None,
    };
    ClassificationView {
        class: class.name().to_string(),
        counterexample,
        stated: p.importance.iter().map(|&(a, b)| [name(a), name(b)]).collect(),
        closed: engine.importance().pairs().map(|(a, b)| [name(a), name(b)]).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeView {
    pub winner: String,
    pub loser: String,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpoView {
    pub pass: bool,
    pub violation: Option<SpoViolation>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceView {
    pub revision: u64,
    pub mode: String,
    pub alternatives: Vec<String>,
    pub edges: Vec<EdgeView>,
    pub spo: SpoView,
    pub importance: ClassificationView,
    pub maximal: Vec<String>,
    pub layers: Option<Vec<Vec<String>>>,
}

fn parse_mode(mode: Option<&str>, revision: u64) -> Result<DotMode, ApiError> {
    match mode.unwrap_or("full") {
        "full" => Ok(DotMode::Full),
        "hasse" => Ok(DotMode::Hasse),
        other => Err(ApiError::single(
            StatusCode::BAD_REQUEST,
            revision,
            FindingKind::BadRequest,
            "mode",
            format!("unknown mode {other:?}; expected full or hasse"),
        )),
    }
}

fn dominance_view(engine: &DominanceEngine<'_>, revision: u64, mode: DotMode) -> Result<DominanceView, ApiError> {
    let g: DominanceGraph = engine.graph();
    let ids = &g.alternatives;
    let kept: Relation = match mode {
        DotMode::Full => g.relation.clone(),
        DotMode::Hasse => transitive_reduction(&g.relation).map_err(|e| {
            ApiError::single(StatusCode::UNPROCESSABLE_ENTITY, revision, FindingKind::BadRequest, "mode", e.to_string())
        })?,
    };
    let edges = g
        .edges
        .iter()
        .filter(|e| kept.contains(e.winner, e.loser))
        .map(|e| EdgeView {
            winner: ids[e.winner].clone(),
            loser: ids[e.loser].clone(),
            witnesses: e.witnesses.iter().map(|&w| g.attributes[w].clone()).collect(),
        })
        .collect();
    let layers = g
        .layered_ranking()
        .ok()
        .map(|l| l.layers.iter().map(|layer| layer.iter().map(|&i| ids[i].clone()).collect()).collect());
    Ok(DominanceView {
        revision,
        mode: match mode {
            DotMode::Full => "full".into(),
            DotMode::Hasse => "hasse".into(),
        },
        alternatives: ids.clone(),
        edges,
        spo: SpoView { pass: g.spo.is_ok(), violation: g.spo.err() },
        importance: classification_view(engine),
        maximal: g.maximal_set().into_iter().map(|i| ids[i].clone()).collect(),
        layers,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutcomeView {
    pub attribute: String,
    pub outcome: OrderingOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateView {
    pub attribute: String,
    pub witness: bool,
    pub excluded: Vec<String>,
    pub blocked_by: Option<OutcomeView>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExplanationView {
    pub revision: u64,
    pub a: String,
    pub b: String,
    pub dominates: bool,
    pub outcomes: Vec<OutcomeView>,
    pub candidates: Vec<CandidateView>,
}

fn explanation_view(ex: &Explanation, revision: u64) -> ExplanationView {
    let name = |k: usize| ex.attributes[k].clone();
    ExplanationView {
        revision,
        a: ex.a.clone(),
        b: ex.b.clone(),
        dominates: ex.dominates(),
        outcomes: ex
            .outcomes
            .iter()
            .enumerate()
            .map(|(k, &outcome)| OutcomeView { attribute: name(k), outcome })
            .collect(),
        candidates: ex
            .candidates
            .iter()
            .map(|c| CandidateView {
                attribute: name(c.attribute),
                witness: c.is_witness(),
                excluded: c.excluded.iter().map(|&k| name(k)).collect(),
                blocked_by: c.blocked_by.map(|(k, outcome)| OutcomeView { attribute: name(k), outcome }),
            })
            .collect(),
    }
}

fn engine_error(e: Error, revision: u64) -> ApiError {
    match e {
        Error::InvalidProblem(report) => ApiError::new(StatusCode::UNPROCESSABLE_ENTITY, revision, report.findings),
        other => ApiError::single(
            StatusCode::INTERNAL_SERVER_ERROR,
            revision,
            FindingKind::BadRequest,
            "",
            other.to_string(),
        ),
    }
}

fn resolve_edge(p: &Problem, edge: &EdgeRequest, path: &str, revision: u64) -> Result<(usize, usize), ApiError> {
    let find = |name: &str| {
        p.attribute_index(name).ok_or_else(|| {
            ApiError::single(
                StatusCode::UNPROCESSABLE_ENTITY,
                revision,
                FindingKind::UnknownAttribute,
                path,
                format!("undeclared attribute {name}"),
            )
        })
    };
    Ok((find(&edge.more)?, find(&edge.less)?))
}

async fn get_problem(State(session): State<Arc<Session>>) -> Json<ProblemResponse> {
    let snap = session.snapshot();
    Json(ProblemResponse {
        revision: snap.revision,
        problem: ProblemDocument::from(&snap.problem),
        warnings: snap.report.warnings().cloned().collect(),
    })
}

async fn put_problem(State(session): State<Arc<Session>>, body: String) -> ApiResult<MutationResponse> {
    let (snap, changed) = session.mutate(|current| match parse_problem(&body) {
        Ok(p) => Ok(Some(p)),
        Err(e) => {
            let status = match e {
                ParseError::Syntax { .. } => StatusCode::BAD_REQUEST,
                _ => StatusCode::UNPROCESSABLE_ENTITY,
            };
            Err(ApiError::new(status, current.revision, e.findings()))
        }
    })?;
    mutation_response(&snap, changed)
}

fn mutation_response(snap: &Snapshot, changed: bool) -> ApiResult<MutationResponse> {
    let engine = DominanceEngine::new(&snap.problem).map_err(|e| engine_error(e, snap.revision))?;
    Ok(Json(MutationResponse { revision: snap.revision, changed, classification: classification_view(&engine) }))
}

async fn add_edge(State(session): State<Arc<Session>>, Json(edge): Json<EdgeRequest>) -> ApiResult<MutationResponse> {
    let (snap, changed) = session.mutate(|current| {
        let p = &current.problem;
        let pair = resolve_edge(p, &edge, "body", current.revision)?;
        if p.importance.contains(&pair) {
            return Ok(None);
        }
        let mut next = p.clone();
        next.importance.push(pair);
        Ok(Some(next))
    })?;
    mutation_response(&snap, changed)
}

async fn remove_edge(
    State(session): State<Arc<Session>>,
    Json(edge): Json<EdgeRequest>,
) -> ApiResult<MutationResponse> {
    let (snap, changed) = session.mutate(|current| {
        let p = &current.problem;
        let pair = resolve_edge(p, &edge, "body", current.revision)?;
        let Some(pos) = p.importance.iter().position(|e| *e == pair) else {
            return Err(ApiError::single(
                StatusCode::NOT_FOUND,
                current.revision,
                FindingKind::MissingEdge,
                "body",
                format!("{} ▷ {} is not a stated edge", edge.more, edge.less),
            ));
        };
        let mut next = p.clone();
        next.importance.remove(pos);
        Ok(Some(next))
    })?;
    mutation_response(&snap, changed)
}

async fn get_classification(State(session): State<Arc<Session>>) -> ApiResult<serde_json::Value> {
    let snap = session.snapshot();
    let engine = DominanceEngine::new(&snap.problem).map_err(|e| engine_error(e, snap.revision))?;
    Ok(Json(serde_json::json!({
        "revision": snap.revision,
        "classification": classification_view(&engine),
    })))
}

#[derive(Deserialize)]
struct ModeQuery {
    mode: Option<String>,
}

async fn get_dominance(State(session): State<Arc<Session>>, Query(q): Query<ModeQuery>) -> ApiResult<DominanceView> {
    let snap = session.snapshot();
    let mode = parse_mode(q.mode.as_deref(), snap.revision)?;
    let engine = DominanceEngine::new(&snap.problem).map_err(|e| engine_error(e, snap.revision))?;
    dominance_view(&engine, snap.revision, mode).map(Json)
}

async fn what_if(State(session): State<Arc<Session>>, Json(req): Json<WhatIfRequest>) -> ApiResult<DominanceView> {
    let snap = session.snapshot();
    let rev = snap.revision;
    let mode = parse_mode(req.mode.as_deref(), rev)?;
    let mut hypothetical = snap.problem.clone();
    for (i, edge) in req.remove.iter().enumerate() {
        let pair = resolve_edge(&hypothetical, edge, &format!("remove[{i}]"), rev)?;
        hypothetical.importance.retain(|e| *e != pair);
    }
    for (i, edge) in req.add.iter().enumerate() {
        let pair = resolve_edge(&hypothetical, edge, &format!("add[{i}]"), rev)?;
        if !hypothetical.importance.contains(&pair) {
            hypothetical.importance.push(pair);
        }
    }
    let report = hypothetical.validate();
    if !report.is_valid() {
        return Err(ApiError::new(StatusCode::CONFLICT, rev, report.findings));
    }
    let engine = DominanceEngine::new(&hypothetical).map_err(|e| engine_error(e, rev))?;
    dominance_view(&engine, rev, mode).map(Json)
}

#[derive(Deserialize)]
struct PairQuery {
    a: String,
    b: String,
}

async fn get_explain(State(session): State<Arc<Session>>, Query(q): Query<PairQuery>) -> ApiResult<ExplanationView> {
    let snap = session.snapshot();
    let p = &snap.problem;
    let find = |id: &str, path: &str| {
        p.alternative_index(id).ok_or_else(|| {
            ApiError::single(
                StatusCode::NOT_FOUND,
                snap.revision,
                FindingKind::UnknownAlternative,
                path,
                format!("unknown alternative {id:?}"),
            )
        })
    };
    let (a, b) = (find(&q.a, "a")?, find(&q.b, "b")?);
    let engine = DominanceEngine::new(p).map_err(|e| engine_error(e, snap.revision))?;
    let ex = engine.explain(a, b).map_err(|e| engine_error(e, snap.revision))?;
    Ok(Json(explanation_view(&ex, snap.revision)))
}

pub fn router(session: Arc<Session>) -> Router {
    Router::new()
        .route("/api/problem", get(get_problem).put(put_problem))
        .route("/api/importance/edges", post(add_edge).delete(remove_edge))
        .route("/api/classification", get(get_classification))
        .route("/api/dominance", get(get_dominance))
        .route("/api/whatif", post(what_if))
        .route("/api/explain", get(get_explain))
        .with_state(session)
}

pub async fn serve(session: Arc<Session>, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(session)).await
}
