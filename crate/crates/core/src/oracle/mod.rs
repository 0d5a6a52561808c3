//! Brute-force references over the full characteristic function.
//!
//! Everything here is exponential in the number of players and exists to
//! check the polynomial solvers on small instances.

pub mod enumerate;
#[cfg(test)]
pub(crate) mod strategies;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{Coalition, GameSpec};
use crate::lp::{solve_lp, LinearProgram, LpStatus, Relation, Sense};
use crate::scalar::Scalar;
use crate::solve::{LeastCoreResult, PayoffVector};

/// Default player cap for exhaustive enumeration.
pub const DEFAULT_PLAYER_CAP: usize = 16;

/// `v(S)` for every coalition, indexed by bitmask (player `i` is bit `i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValueTable<T> {
    players: usize,
    values: Vec<T>,
}

impl<T: Scalar> ValueTable<T> {
    pub fn from_values(players: usize, values: Vec<T>) -> Self {
        assert_eq!(values.len(), 1 << players);
        ValueTable { players, values }
    }

    pub fn players(&self) -> usize {
        self.players
    }

    pub fn value(&self, mask: u64) -> &T {
        &self.values[mask as usize]
    }

    pub fn grand_mask(&self) -> u64 {
        (1u64 << self.players) - 1
    }

    pub fn grand_value(&self) -> &T {
        self.value(self.grand_mask())
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    /// `x(S) − v(S)`.
    pub fn excess(&self, payoff: &[T], mask: u64) -> T {
        mask_total(payoff, mask) - self.value(mask).clone()
    }

    /// Minimum excess over non-empty coalitions.
    pub fn min_excess(&self, payoff: &[T]) -> T {
        (1..=self.grand_mask()).map(|m| self.excess(payoff, m)).min().expect("at least one player")
    }

    /// Efficient, nonnegative, and every coalition has excess `≥ −eps`.
    pub fn in_epsilon_core(&self, payoff: &[T], eps: &T) -> bool {
        payoff.len() == self.players
            && payoff.iter().all(|v| !v.is_negative())
            && mask_total(payoff, self.grand_mask()) == *self.grand_value()
            && self.min_excess(payoff) >= -eps.clone()
    }

    /// Excesses of all proper non-empty coalitions, ascending.
    pub fn sorted_excesses(&self, payoff: &[T]) -> Vec<T> {
        let mut out: Vec<T> = (1..self.grand_mask()).map(|m| self.excess(payoff, m)).collect();
        out.sort();
        out
    }
}

fn mask_total<T: Scalar>(payoff: &[T], mask: u64) -> T {
    payoff.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(T::zero(), |acc, (_, v)| acc + v.clone())
}

fn indicator<T: Scalar>(players: usize, mask: u64) -> Vec<T> {
    (0..players).map(|i| if mask >> i & 1 == 1 { T::one() } else { T::zero() }).collect()
}

fn check_cap(players: usize, cap: usize) -> Result<()> {
    if players > cap || players >= 63 {
        return Err(Error::TooManyPlayers { players, cap });
    }
    Ok(())
}

/// `v^c(S)` for all `2ⁿ` coalitions.
pub fn enumerate_values<T: Scalar>(spec: &GameSpec<T>, cap: usize) -> Result<ValueTable<T>> {
    let n = spec.player_count();
    check_cap(n, cap)?;
    let values = (0..1u64 << n).into_par_iter().map(|m| spec.cost_value(&Coalition::from_mask(n, m))).collect();
    Ok(ValueTable { players: n, values })
}

/// The 0/1 simple game for all `2ⁿ` coalitions.
pub fn enumerate_simple_values<T: Scalar>(spec: &GameSpec<T>, cap: usize) -> Result<ValueTable<T>> {
    let n = spec.player_count();
    check_cap(n, cap)?;
    let values = (0..1u64 << n)
        .into_par_iter()
        .map(|m| if spec.simple_value(&Coalition::from_mask(n, m)) { T::one() } else { T::zero() })
        .collect();
    Ok(ValueTable { players: n, values })
}

/// Least core from the explicit program with one row per coalition.
pub fn brute_force_least_core<T: Scalar>(table: &ValueTable<T>) -> LeastCoreResult<T> {
    let n = table.players;
    let mut lp = LinearProgram::new(Sense::Minimize, indicator(n + 1, 1 << n));
    lp.add_constraint([vec![T::one(); n], vec![T::zero()]].concat(), Relation::Eq, table.grand_value().clone());
    for m in 1..=table.grand_mask() {
        let mut row = indicator(n, m);
        row.push(T::one());
        lp.add_constraint(row, Relation::Ge, table.value(m).clone());
    }
    let sol = solve_lp(&lp);
    assert_eq!(sol.status, LpStatus::Optimal, "least-core program is feasible and bounded");
    let eps = sol.values[n].clone();
    let payoff = sol.values[..n].to_vec();
    let tight_coalitions = (1..=table.grand_mask())
        .filter(|&m| table.excess(&payoff, m) == -eps.clone())
        .map(|m| Coalition::from_mask(n, m))
        .collect();
    LeastCoreResult { epsilon1: eps, payoff: PayoffVector(payoff), tight_coalitions, iterations: 1 }
}

/// Whether no nonnegative efficient payoff gives every coalition at least its
/// value.
pub fn brute_force_core_empty<T: Scalar>(table: &ValueTable<T>) -> bool {
    let n = table.players;
    let mut lp = LinearProgram::new(Sense::Minimize, vec![T::zero(); n]);
    lp.add_constraint(vec![T::one(); n], Relation::Eq, table.grand_value().clone());
    for m in 1..table.grand_mask() {
        lp.add_constraint(indicator(n, m), Relation::Ge, table.value(m).clone());
    }
    solve_lp(&lp).status == LpStatus::Infeasible
}

/// Nucleolus by the standard sequence of linear programs, over efficient
/// nonnegative payoffs.
///
/// Each stage maximises the smallest excess `t` over coalitions whose excess
/// is not yet fixed. A coalition tight at the optimum has its excess fixed at
/// `t*` only if no point of the optimal face raises it, which is decided by a
/// second LP; coalitions whose indicator lies in the span of the fixed ones
/// drop out. Stages stop when the fixed indicators determine `x`.
pub fn brute_force_nucleolus<T: Scalar>(table: &ValueTable<T>) -> PayoffVector<T> {
    let n = table.players;
    let grand = table.grand_mask();
    let mut span: Span<T> = Span::new(n);
    span.insert(indicator(n, grand));
    let mut fixed: Vec<(u64, T)> = Vec::new();
    let mut open: Vec<u64> = (1..grand).filter(|&m| !span.contains(&indicator(n, m))).collect();

    let base = |fixed: &[(u64, T)], objective: Vec<T>, sense: Sense| {
        let mut lp = LinearProgram::new(sense, objective);
        lp.add_constraint([vec![T::one(); n], vec![T::zero()]].concat(), Relation::Eq, table.grand_value().clone());
        lp.set_lower(n, None);
        for (m, level) in fixed {
            let mut row = indicator(n, *m);
            row.push(T::zero());
            lp.add_constraint(row, Relation::Eq, table.value(*m).clone() + level.clone());
        }
        lp
    };

    let mut x = {
        let sol = solve_lp(&base(&fixed, vec![T::zero(); n + 1], Sense::Maximize));
        assert!(sol.is_optimal(), "efficient nonnegative payoffs exist");
        sol.values[..n].to_vec()
    };

    while span.rank() < n {
        let mut lp = base(&fixed, indicator(n + 1, 1 << n), Sense::Maximize);
        for &m in &open {
            let mut row = indicator(n, m);
            row.push(-T::one());
            lp.add_constraint(row, Relation::Ge, table.value(m).clone());
        }
        let sol = solve_lp(&lp);
        assert!(sol.is_optimal(), "stage program is feasible and bounded");
        let level = sol.values[n].clone();
        x = sol.values[..n].to_vec();

        // points of the optimal face found so far; a coalition with excess
        // above `level` at any of them is not forced
        let mut witnesses: Vec<Vec<T>> = vec![x.clone()];
        let candidates: Vec<u64> = open.iter().copied().filter(|&m| table.excess(&x, m) == level).collect();
        let mut progressed = false;
        for m in candidates {
            let row = indicator(n, m);
            if span.contains(&row) {
                continue;
            }
            if witnesses.iter().any(|w| table.excess(w, m) > level) {
                continue;
            }
            let mut probe = base(&fixed, [indicator(n, m), vec![T::zero()]].concat(), Sense::Maximize);
            for &o in &open {
                let mut r = indicator(n, o);
                r.push(T::zero());
                probe.add_constraint(r, Relation::Ge, table.value(o).clone() + level.clone());
            }
            let probe_sol = solve_lp(&probe);
            assert!(probe_sol.is_optimal(), "optimal face is a non-empty polytope");
            let point = probe_sol.values[..n].to_vec();
            if table.excess(&point, m) == level {
                fixed.push((m, level.clone()));
                span.insert(row);
                progressed = true;
            } else {
                witnesses.push(point);
            }
        }
        assert!(progressed, "every stage fixes at least one coalition");
        open.retain(|&m| !span.contains(&indicator(n, m)));
    }
    PayoffVector(x)
}

/// Row-reduced basis of a subspace of `Tⁿ`.
struct Span<T> {
    dim: usize,
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Span<T> {
    fn new(dim: usize) -> Self {
        Span { dim, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<T>) -> Vec<T> {
        for (pivot, row) in &self.rows {
            if !v[*pivot].is_zero() {
                let f = v[*pivot].clone();
                for j in 0..self.dim {
                    v[j] = v[j].clone() - f.clone() * row[j].clone();
                }
            }
        }
        v
    }

    fn contains(&self, v: &[T]) -> bool {
        self.reduce(v.to_vec()).iter().all(|a| a.is_zero())
    }

    fn insert(&mut self, v: Vec<T>) {
        let v = self.reduce(v);
        let Some(pivot) = v.iter().position(|a| !a.is_zero()) else { return };
        let p = v[pivot].clone();
        let v: Vec<T> = v.into_iter().map(|a| a / p.clone()).collect();
        for (_, row) in &mut self.rows {
            if !row[pivot].is_zero() {
                let f = row[pivot].clone();
                for j in 0..self.dim {
                    row[j] = row[j].clone() - f.clone() * v[j].clone();
                }
            }
        }
        self.rows.push((pivot, v));
    }
}
