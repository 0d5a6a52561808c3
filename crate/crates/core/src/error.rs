use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("source and sink must be distinct vertices")]
    SourceIsSink,
    #[error("vertex id {0} out of range")]
    UnknownVertex(usize),
    #[error("edge {0} is a self-loop")]
    SelfLoop(usize),
    #[error("vertex-player games cannot contain a direct source-sink edge (edge {0})")]
    VpcgDirectEdge(usize),
    #[error("no path from source to sink")]
    NoPath,
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("negative cost for player {0}")]
    NegativeCost(usize),
    #[error("cost for player {0} must be finite")]
    InfiniteCost(usize),
    #[error("reward must be finite and nonnegative")]
    InvalidReward,
    #[error("grand coalition value is negative ({0})")]
    NegativeGrandValue(String),
    #[error("payoff is not efficient: sums to {got}, expected {expected}")]
    NotEfficient { expected: String, got: String },
    #[error("payoff entry for player {0} is negative")]
    NegativePayoff(usize),
    #[error("detection probability for player {0} must lie in (0, 1]")]
    InvalidProbability(usize),
    #[error("the closed-form least core covers costless epcg and vpcg games only, not {0}")]
    UnsupportedFamily(&'static str),
    #[error("the series-parallel nucleolus needs an undirected graph")]
    DirectedGraph,
    #[error("too many players for explicit enumeration: {players} > {cap}")]
    TooManyPlayers { players: usize, cap: usize },
    #[error("graph is not series-parallel")]
    NotSeriesParallel(crate::graph::sp::Remnant),
    #[error("cut construction and maxmin LP disagree: {cut} vs {lp}")]
    MaxminMismatch { cut: String, lp: String },
    #[error("linear program unexpectedly {0}")]
    Lp(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
