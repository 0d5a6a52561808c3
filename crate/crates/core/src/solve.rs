//! Core, least core and maxmin interdiction solvers.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ext::Ext;
use crate::game::{Coalition, Family, GameSpec};
use crate::graph::{self, Graph};
use crate::lp::{solve_lp, LinearProgram, LpStatus, Relation, Sense};
use crate::scalar::{format_exact, Scalar};

/// One exact payoff per player.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PayoffVector<T>(pub Vec<T>);

impl<T: Scalar> PayoffVector<T> {
    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> T {
        self.0.iter().fold(T::zero(), |acc, v| acc + v.clone())
    }

    /// `x(S)`.
    pub fn total(&self, coalition: &Coalition) -> T {
        coalition.total(&self.0)
    }
}

impl<T> std::ops::Index<usize> for PayoffVector<T> {
    type Output = T;

    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeastCoreResult<T> {
    /// Smallest `ε` with a non-empty `ε`-core.
    pub epsilon1: T,
    pub payoff: PayoffVector<T>,
    /// Coalitions known to the solver whose excess equals `−ε₁` at `payoff`.
    pub tight_coalitions: Vec<Coalition>,
    /// Master-problem solves (zero for closed forms).
    pub iterations: usize,
}

impl<T: Scalar> LeastCoreResult<T> {
    /// The minimum excess `−ε₁`.
    pub fn min_excess(&self) -> T {
        -self.epsilon1.clone()
    }
}

/// Outcome of the core non-emptiness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreTest {
    pub nonempty: bool,
    /// Lowest-index veto player, when one exists.
    pub witness: Option<usize>,
}

/// Non-emptiness of the core of the underlying simple game, decided
/// combinatorially by looking for a veto player:
///
/// * path games: an edge (internal vertex) whose removal separates s and t;
/// * dual edge game: a direct s-t edge;
/// * dual vertex game: a vertex adjacent from s and to t.
pub fn core_nonempty<T: Scalar>(spec: &GameSpec<T>) -> CoreTest {
    let g = spec.graph();
    let witness = match spec.family() {
        Family::Epcg => (0..g.edge_count()).find(|&e| !g.connects(|f| f != e, |_| true)),
        Family::Vpcg => (0..spec.player_count()).find(|&i| !g.connects(|_| true, |v| v != spec.players()[i])),
        Family::EpcgDual => g.st_edge(),
        Family::VpcgDual => (0..spec.player_count()).find(|&i| {
            let x = spec.players()[i];
            let from_s = g.out_arcs(g.source()).iter().any(|&(_, w)| w == x);
            let to_t = g.out_arcs(x).iter().any(|&(_, w)| w == g.sink());
            from_s && to_t
        }),
    };
    CoreTest { nonempty: witness.is_some(), witness }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation<T> {
    /// Every coalition has excess at least `−ε`; `coalition` attains the
    /// minimum `excess`.
    Feasible {
        coalition: Coalition,
        excess: T,
    },
    Violated {
        coalition: Coalition,
        excess: T,
    },
}

impl<T> Separation<T> {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Separation::Feasible { .. })
    }

    pub fn coalition(&self) -> &Coalition {
        match self {
            Separation::Feasible { coalition, .. } | Separation::Violated { coalition, .. } => coalition,
        }
    }
}

/// Minimum excess over all coalitions at a nonnegative payoff.
///
/// With weights `x'ᵢ = xᵢ + cᵢ`, a minimum-weight winning coalition `S*`
/// attains the minimum excess `x'(S*) − r`; losing coalitions have excess
/// `x(S) ≥ 0` and never need checking.
pub fn separation_oracle<T: Scalar>(spec: &GameSpec<T>, payoff: &[T], eps: &T) -> Separation<T> {
    assert_eq!(payoff.len(), spec.player_count(), "one payoff per player");
    debug_assert!(payoff.iter().all(|v| !v.is_negative()), "payoff must be nonnegative");
    let weights: Vec<Ext<T>> =
        payoff.iter().zip(spec.costs()).map(|(x, c)| Ext::Finite(x.clone() + c.clone())).collect();
    let (coalition, weight) = spec.min_weight_winning_coalition(&weights).expect("grand coalition wins");
    let excess = weight - spec.reward().clone();
    if excess >= -eps.clone() {
        Separation::Feasible { coalition, excess }
    } else {
        Separation::Violated { coalition, excess }
    }
}

/// Least core by constraint generation on the least-core program.
///
/// The master program starts with efficiency, `x ≥ 0`, `ε ≥ 0`, every
/// singleton and the cheapest winning coalition; each round adds the
/// coalition returned by [`separation_oracle`] until it reports feasibility.
pub fn least_core<T: Scalar>(spec: &GameSpec<T>) -> LeastCoreResult<T> {
    let n = spec.player_count();
    let mut lp = LinearProgram::new(Sense::Minimize, unit(n + 1, n));
    lp.add_constraint([vec![T::one(); n], vec![T::zero()]].concat(), Relation::Eq, spec.grand_value().clone());

    let mut master: Vec<(Coalition, T)> = Vec::new();
    let mut seen: HashSet<Coalition> = HashSet::new();
    let add =
        |lp: &mut LinearProgram<T>, master: &mut Vec<(Coalition, T)>, seen: &mut HashSet<Coalition>, s: Coalition| {
            if !seen.insert(s.clone()) {
                return false;
            }
            let value = spec.cost_value(&s);
            let mut row: Vec<T> = (0..n).map(|i| if s.contains(i) { T::one() } else { T::zero() }).collect();
            row.push(T::one());
            lp.add_constraint(row, Relation::Ge, value.clone());
            master.push((s, value));
            true
        };

    for i in 0..n {
        add(&mut lp, &mut master, &mut seen, Coalition::from_members(n, [i]));
    }
    let cost_weights: Vec<Ext<T>> = spec.costs().iter().cloned().map(Ext::Finite).collect();
    let (cheapest, _) = spec.min_weight_winning_coalition(&cost_weights).expect("grand coalition wins");
    add(&mut lp, &mut master, &mut seen, cheapest);

    let mut iterations = 0;
    loop {
        iterations += 1;
        let sol = solve_lp(&lp);
        assert_eq!(sol.status, LpStatus::Optimal, "master program is feasible and bounded below");
        let eps = sol.values[n].clone();
        let x = &sol.values[..n];
        match separation_oracle(spec, x, &eps) {
            Separation::Feasible { .. } => {
                let payoff = PayoffVector(x.to_vec());
                let tight_coalitions = master
                    .iter()
                    .filter(|(s, v)| payoff.total(s) - v.clone() == -eps.clone())
                    .map(|(s, _)| s.clone())
                    .collect();
                return LeastCoreResult { epsilon1: eps, payoff, tight_coalitions, iterations };
            }
            Separation::Violated { coalition, .. } => {
                let fresh = add(&mut lp, &mut master, &mut seen, coalition);
                assert!(fresh, "separation oracle regenerated a coalition already in the master program");
            }
        }
    }
}

fn unit<T: Scalar>(len: usize, at: usize) -> Vec<T> {
    (0..len).map(|i| if i == at { T::one() } else { T::zero() }).collect()
}

/// Whether `payoff` lies in the `eps`-core. Fails with
/// [`Error::NotEfficient`] (or [`Error::NegativePayoff`]) when the payoff is
/// not an admissible candidate at all.
pub fn in_epsilon_core<T: Scalar>(spec: &GameSpec<T>, payoff: &[T], eps: &T) -> Result<bool> {
    if payoff.len() != spec.player_count() {
        return Err(Error::WeightCount { expected: spec.player_count(), got: payoff.len() });
    }
    if let Some(i) = payoff.iter().position(|v| v.is_negative()) {
        return Err(Error::NegativePayoff(i));
    }
    let total = payoff.iter().fold(T::zero(), |acc, v| acc + v.clone());
    if total != *spec.grand_value() {
        return Err(Error::NotEfficient { expected: format_exact(spec.grand_value()), got: format_exact(&total) });
    }
    Ok(separation_oracle(spec, payoff, eps).is_feasible())
}

/// Least core of a costless path game from a minimum-cardinality cut:
/// `1/c` to each member of the cut, `ε₁ = 1 − 1/c`. No LP is solved.
pub fn combinatorial_least_core<T: Scalar>(spec: &GameSpec<T>) -> Result<LeastCoreResult<T>> {
    if spec.family().is_dual() {
        return Err(Error::UnsupportedFamily(spec.family().name()));
    }
    if !spec.is_costless() {
        return Err(Error::UnsupportedFamily("cost-based games"));
    }
    let g = spec.graph();
    let n = spec.player_count();
    let cut: Vec<usize> = match spec.family() {
        Family::Epcg => graph::min_edge_cut(g, &vec![Ext::<T>::one(); g.edge_count()]).edges,
        Family::Vpcg => graph::min_vertex_cut(g, &vec![Ext::<T>::one(); g.vertex_count()])
            .expect("validated: no direct s-t edge")
            .vertices
            .into_iter()
            .map(|v| spec.player_of_vertex(v).unwrap())
            .collect(),
        _ => unreachable!(),
    };
    let share = T::from_usize_exact(cut.len()).recip_exact();
    let mut payoff = vec![T::zero(); n];
    for &i in &cut {
        payoff[i] = share.clone();
    }
    let epsilon1 = T::one() - share;
    let weights: Vec<Ext<T>> = payoff.iter().cloned().map(Ext::Finite).collect();
    let (tight, _) = spec.min_weight_winning_coalition(&weights).expect("grand coalition wins");
    Ok(LeastCoreResult { epsilon1, payoff: PayoffVector(payoff), tight_coalitions: vec![tight], iterations: 0 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InterceptMode {
    /// The interceptor inspects edges.
    Edge,
    /// The interceptor inspects internal vertices.
    Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxminResult<T> {
    /// Guaranteed interception probability.
    pub value: T,
    /// Inspection probability per edge (or internal vertex, ascending id).
    pub strategy: Vec<T>,
    /// Players in the minimum cut the strategy is spread over.
    pub support: Vec<usize>,
    /// Paths the certifying LP had to generate.
    pub lp_paths: usize,
}

/// Maxmin inspection strategy of the path intercept game.
///
/// Builds `c'ₑ = 1/pₑ`, takes a minimum `c'`-weight cut and inspects each
/// cut member with probability proportional to `c'ₑ`. The value is then
/// re-derived from the maxmin LP by path generation with a shortest-path
/// oracle on weights `xₑ·pₑ`; disagreement is reported as
/// [`Error::MaxminMismatch`].
pub fn maxmin_intercept<T: Scalar>(g: &Graph, mode: InterceptMode, probabilities: &[T]) -> Result<MaxminResult<T>> {
    let players: Vec<usize> = match mode {
        InterceptMode::Edge => (0..g.edge_count()).collect(),
        InterceptMode::Vertex => g.internal_vertices().collect(),
    };
    let n = players.len();
    if probabilities.len() != n {
        return Err(Error::WeightCount { expected: n, got: probabilities.len() });
    }
    if let Some(i) = probabilities.iter().position(|p| !p.is_positive() || *p > T::one()) {
        return Err(Error::InvalidProbability(i));
    }
    if !g.has_st_path() {
        return Err(Error::NoPath);
    }
    if mode == InterceptMode::Vertex {
        if let Some(e) = g.st_edge() {
            return Err(Error::VpcgDirectEdge(e));
        }
    }

    let inverse: Vec<T> = probabilities.iter().map(Scalar::recip_exact).collect();
    let support: Vec<usize> = match mode {
        InterceptMode::Edge => {
            let w: Vec<Ext<T>> = inverse.iter().cloned().map(Ext::Finite).collect();
            graph::min_edge_cut(g, &w).edges
        }
        InterceptMode::Vertex => {
            let mut vw = vec![Ext::zero(); g.vertex_count()];
            for (i, &v) in players.iter().enumerate() {
                vw[v] = Ext::Finite(inverse[i].clone());
            }
            let cut = graph::min_vertex_cut(g, &vw).expect("checked: no direct s-t edge");
            cut.vertices.iter().map(|v| players.binary_search(v).unwrap()).collect()
        }
    };
    let total = support.iter().fold(T::zero(), |acc, &i| acc + inverse[i].clone());
    let mut strategy = vec![T::zero(); n];
    for &i in &support {
        strategy[i] = inverse[i].clone() / total.clone();
    }
    let value = total.recip_exact();

    let detection = |x: &[T]| -> (Vec<usize>, T) {
        let w: Vec<T> = x.iter().zip(probabilities).map(|(a, b)| a.clone() * b.clone()).collect();
        cheapest_path(g, mode, &players, &w)
    };
    let (_, guaranteed) = detection(&strategy);
    if guaranteed != value {
        return Err(Error::MaxminMismatch { cut: format_exact(&value), lp: format_exact(&guaranteed) });
    }

    // maxmin LP: max α s.t. Σ_{e∈P} pₑxₑ ≥ α for generated paths, x ∈ Δ
    let mut lp = LinearProgram::new(Sense::Maximize, unit(n + 1, n));
    lp.add_constraint([vec![T::one(); n], vec![T::zero()]].concat(), Relation::Eq, T::one());
    let mut seen = HashSet::new();
    let mut add_path = |lp: &mut LinearProgram<T>, path: Vec<usize>| {
        let mut row = vec![T::zero(); n + 1];
        for &i in &path {
            row[i] = probabilities[i].clone();
        }
        row[n] = -T::one();
        lp.add_constraint(row, Relation::Ge, T::zero());
        seen.insert(path)
    };
    let (first, _) = cheapest_path(g, mode, &players, &vec![T::one(); n]);
    add_path(&mut lp, first);
    let lp_value = loop {
        let sol = solve_lp(&lp);
        if sol.status != LpStatus::Optimal {
            return Err(Error::Lp("not optimal in the maxmin program"));
        }
        let alpha = sol.values[n].clone();
        let (path, weight) = detection(&sol.values[..n]);
        if weight >= alpha {
            break alpha;
        }
        if !add_path(&mut lp, path) {
            return Err(Error::Lp("cycling in the maxmin path generation"));
        }
    };
    if lp_value != value {
        return Err(Error::MaxminMismatch { cut: format_exact(&value), lp: format_exact(&lp_value) });
    }
    Ok(MaxminResult { value, strategy, support, lp_paths: seen.len() })
}

/// Players on a cheapest s-t path under per-player weights, and its weight.
fn cheapest_path<T: Scalar>(g: &Graph, mode: InterceptMode, players: &[usize], w: &[T]) -> (Vec<usize>, T) {
    match mode {
        InterceptMode::Edge => {
            let weights: Vec<Ext<T>> = w.iter().cloned().map(Ext::Finite).collect();
            let p = graph::shortest_path(g, &weights).expect("checked: s-t path exists");
            let mut edges = p.edges;
            edges.sort_unstable();
            (edges, p.weight)
        }
        InterceptMode::Vertex => {
            let mut vw = vec![Ext::zero(); g.vertex_count()];
            for (i, &v) in players.iter().enumerate() {
                vw[v] = Ext::Finite(w[i].clone());
            }
            let p = graph::shortest_vertex_path(g, &vw).expect("checked: s-t path exists");
            let mut members: Vec<usize> = p.vertices.iter().map(|v| players.binary_search(v).unwrap()).collect();
            members.sort_unstable();
            (members, p.weight)
        }
    }
}
