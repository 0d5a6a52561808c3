//! JSON game, payoff and probability files.
//!
//! Rationals travel as strings (`"3"`, `"-1/4"`, `"0.25"`) so that no value
//! ever passes through a float.

use std::collections::{BTreeMap, HashMap};

use serde::Deserialize;
use thiserror::Error;

use crate::game::{Family, GameSpec};
use crate::graph::{Edge, Graph};
use crate::scalar::{parse_exact, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid document at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("bad rational in {field}: {value:?}")]
    Rational { field: String, value: String },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate edge name {0:?}")]
    DuplicateEdgeName(String),
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(usize),
    #[error("edge ids must be 0..{count}; {missing} is missing")]
    MissingEdgeId { missing: usize, count: usize },
    #[error("unknown player {0:?}")]
    UnknownPlayer(String),
    #[error("missing payoff for player {0:?}")]
    MissingPlayer(String),
    #[error("{what} given for {name:?}, which is not a player of a {family} game")]
    NotAPlayer { what: &'static str, name: String, family: Family },
    #[error(transparent)]
    Game(#[from] crate::Error),
}

impl ParseError {
    /// Short machine-readable tag.
    pub fn kind(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "syntax",
            ParseError::Schema { .. } => "schema",
            ParseError::Rational { .. } => "rational",
            ParseError::UnknownVertex(_) => "unknown_vertex",
            ParseError::DuplicateVertex(_) => "duplicate_vertex",
            ParseError::DuplicateEdgeName(_) => "duplicate_edge_name",
            ParseError::DuplicateEdgeId(_) => "duplicate_edge_id",
            ParseError::MissingEdgeId { .. } => "missing_edge_id",
            ParseError::UnknownPlayer(_) => "unknown_player",
            ParseError::MissingPlayer(_) => "missing_player",
            ParseError::NotAPlayer { .. } => "not_a_player",
            ParseError::Game(e) => error_kind(e),
        }
    }
}

/// Short machine-readable tag for a solver error.
pub fn error_kind(e: &crate::Error) -> &'static str {
    use crate::Error::*;
    match e {
        SourceIsSink => "source_is_sink",
        UnknownVertex(_) => "unknown_vertex",
        SelfLoop(_) => "self_loop",
        VpcgDirectEdge(_) => "vpcg_direct_edge",
        NoPath => "no_path",
        WeightCount { .. } => "weight_count",
        NegativeCost(_) => "negative_cost",
        InfiniteCost(_) => "infinite_cost",
        InvalidReward => "invalid_reward",
        NegativeGrandValue(_) => "negative_grand_value",
        NotEfficient { .. } => "not_efficient",
        NegativePayoff(_) => "negative_payoff",
        InvalidProbability(_) => "invalid_probability",
        UnsupportedFamily(_) => "unsupported_family",
        DirectedGraph => "directed_graph",
        TooManyPlayers { .. } => "too_many_players",
        NotSeriesParallel(_) => "not_series_parallel",
        MaxminMismatch { .. } => "maxmin_mismatch",
        Lp(_) => "lp",
    }
}

fn from_json(e: serde_json::Error) -> ParseError {
    let (line, column, message) = (e.line(), e.column(), e.to_string());
    if e.is_data() {
        ParseError::Schema { line, column, message }
    } else {
        ParseError::Syntax { line, column, message }
    }
}

fn rational<T: Scalar>(field: impl Into<String>, value: &str) -> Result<T, ParseError> {
    parse_exact(value).map_err(|_| ParseError::Rational { field: field.into(), value: value.to_string() })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GameDoc {
    directed: bool,
    vertices: Vec<String>,
    source: String,
    sink: String,
    edges: Vec<EdgeDoc>,
    #[serde(default)]
    vertex_costs: BTreeMap<String, String>,
    #[serde(default)]
    reward: Option<String>,
    family: Family,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    id: usize,
    tail: String,
    head: String,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    cost: Option<String>,
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(|_| serde::de::Error::unknown_variant(&s, &["epcg", "vpcg", "epcg-dual", "vpcg-dual"]))
    }
}

/// Parses a game document.
///
/// Edge ids must be exactly `0..|E|` in some order; an edge's player name is
/// its `name` when given and `e<id>` otherwise. Edge costs apply to the edge
/// families and `vertex_costs` to the vertex families; a nonzero cost on
/// something that is not a player is rejected.
pub fn parse_game_file<T: Scalar>(text: &str) -> Result<GameSpec<T>, ParseError> {
    let doc: GameDoc = serde_json::from_str(text).map_err(from_json)?;

    let mut index: HashMap<&str, usize> = HashMap::new();
    for (i, v) in doc.vertices.iter().enumerate() {
        if index.insert(v.as_str(), i).is_some() {
            return Err(ParseError::DuplicateVertex(v.clone()));
        }
    }
    let vertex = |name: &str| index.get(name).copied().ok_or_else(|| ParseError::UnknownVertex(name.to_string()));
    let source = vertex(&doc.source)?;
    let sink = vertex(&doc.sink)?;

    let count = doc.edges.len();
    let mut slots: Vec<Option<&EdgeDoc>> = vec![None; count];
    for e in &doc.edges {
        if e.id >= count {
            let missing = (0..count).find(|&i| doc.edges.iter().all(|f| f.id != i)).unwrap_or(0);
            return Err(ParseError::MissingEdgeId { missing, count });
        }
        if slots[e.id].replace(e).is_some() {
            return Err(ParseError::DuplicateEdgeId(e.id));
        }
    }
    let slots: Vec<&EdgeDoc> = slots.into_iter().map(Option::unwrap).collect();
    let mut edges = Vec::with_capacity(count);
    let mut names = Vec::with_capacity(count);
    let mut edge_costs = Vec::with_capacity(count);
    for e in &slots {
        edges.push(Edge { tail: vertex(&e.tail)?, head: vertex(&e.head)? });
        let name = e.name.clone().unwrap_or_else(|| format!("e{}", e.id));
        let cost: T = match &e.cost {
            Some(c) => rational(format!("cost of edge {}", e.id), c)?,
            None => T::zero(),
        };
        if doc.family.vertex_players() && !cost.is_zero() {
            return Err(ParseError::NotAPlayer { what: "edge cost", name, family: doc.family });
        }
        if names.contains(&name) {
            return Err(ParseError::DuplicateEdgeName(name));
        }
        names.push(name);
        edge_costs.push(cost);
    }
    let graph = Graph::with_names(doc.directed, doc.vertices.clone(), source, sink, edges, names)?;

    let mut vertex_costs = vec![T::zero(); graph.vertex_count()];
    for (name, value) in &doc.vertex_costs {
        let v = vertex(name)?;
        let cost: T = rational(format!("cost of vertex {name}"), value)?;
        if (graph.is_terminal(v) || !doc.family.vertex_players()) && !cost.is_zero() {
            return Err(ParseError::NotAPlayer { what: "vertex cost", name: name.clone(), family: doc.family });
        }
        vertex_costs[v] = cost;
    }
    let costs = if doc.family.vertex_players() {
        graph.internal_vertices().map(|v| vertex_costs[v].clone()).collect()
    } else {
        edge_costs
    };
    let reward = match &doc.reward {
        Some(r) => rational("reward", r)?,
        None => T::one(),
    };
    Ok(GameSpec::new(doc.family, graph, costs, reward)?)
}

#[derive(Deserialize)]
struct PayoffDoc {
    payoff: BTreeMap<String, String>,
}

/// Reads `{"payoff": {player: rational}}`; other top-level keys are ignored
/// so solver output can be fed back in. Every player must be present.
pub fn parse_payoff_file<T: Scalar>(text: &str, spec: &GameSpec<T>) -> Result<Vec<T>, ParseError> {
    let doc: PayoffDoc = serde_json::from_str(text).map_err(from_json)?;
    let mut payoff: Vec<Option<T>> = vec![None; spec.player_count()];
    for (name, value) in &doc.payoff {
        let i = spec.player_by_name(name).ok_or_else(|| ParseError::UnknownPlayer(name.clone()))?;
        payoff[i] = Some(rational(format!("payoff of {name}"), value)?);
    }
    payoff
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| ParseError::MissingPlayer(spec.player_name(i).to_string())))
        .collect()
}

/// Reads `{player: rational}` detection probabilities for the inspected
/// items (edge names, or internal vertex ids); absent items default to 1.
pub fn parse_probs_file<T: Scalar>(text: &str, names: &[&str]) -> Result<Vec<T>, ParseError> {
    let doc: BTreeMap<String, String> = serde_json::from_str(text).map_err(from_json)?;
    let mut probs = vec![T::one(); names.len()];
    for (name, value) in &doc {
        let i = names.iter().position(|n| n == name).ok_or_else(|| ParseError::UnknownPlayer(name.clone()))?;
        probs[i] = rational(format!("probability of {name}"), value)?;
    }
    Ok(probs)
}
