//! Cooperative and interdiction solution concepts for s-t path games.
//!
//! Players own the edges (or the internal vertices) of a graph with a
//! source and a sink; a coalition wins when it can route from source to
//! sink (or, in the dual games, when it can cut every route). The crate
//! computes core non-emptiness, least cores by constraint generation, the
//! closed-form least core of costless games, the nucleolus on
//! series-parallel graphs and maxmin interdiction strategies, all in exact
//! arithmetic, and ships brute-force references for each of them.
//!
//! Algorithms are generic over an exact [`Scalar`]; the aliases below fix
//! it to arbitrary-precision rationals, which is what the CLI uses.

pub mod error;
pub mod ext;
pub mod game;
pub mod generate;
pub mod graph;
pub mod io;
pub mod lp;
pub mod nucleolus;
pub mod oracle;
pub mod scalar;
pub mod solve;

pub use error::{Error, Result};
pub use ext::Ext;
pub use game::{Coalition, Family};
pub use graph::Graph;
pub use scalar::Scalar;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Rational or `+∞`.
pub type ExtRational = Ext<Rational>;
pub type GameSpec = game::GameSpec<Rational>;
pub type PayoffVector = solve::PayoffVector<Rational>;
pub type LeastCoreResult = solve::LeastCoreResult<Rational>;
pub type MaxminResult = solve::MaxminResult<Rational>;
pub type NucleolusResult = nucleolus::NucleolusResult<Rational>;
pub type LinearProgram = lp::LinearProgram<Rational>;
pub type LpSolution = lp::LpSolution<Rational>;
pub type ValueTable = oracle::ValueTable<Rational>;
