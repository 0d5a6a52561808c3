//! Exact linear programming.
//!
//! A dense two-phase simplex over any [`Scalar`], pivoting with Bland's
//! rule (lowest-index entering column, lowest-index leaving basic variable
//! among ratio ties), so it terminates on degenerate programs. Every
//! reported optimum satisfies all constraints exactly.
//!
//! Programs with many more constraints than variables (the explicit
//! coalition programs have `2ⁿ` rows) are solved by row activation: a
//! subset of rows is solved, every inactive row is checked against the
//! optimum, the most violated ones are activated, and the loop repeats. The
//! final point is feasible for every row and optimal for a relaxation, hence
//! optimal.

use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint<T> {
    pub coefficients: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

impl<T: Scalar> Constraint<T> {
    pub fn lhs(&self, x: &[T]) -> T {
        self.coefficients.iter().zip(x).fold(T::zero(), |acc, (a, v)| acc + a.clone() * v.clone())
    }

    /// How far `x` is from satisfying the row; zero when satisfied.
    pub fn violation(&self, x: &[T]) -> T {
        let diff = self.lhs(x) - self.rhs.clone();
        let v = match self.relation {
            Relation::Le => diff,
            Relation::Ge => -diff,
            Relation::Eq => diff.abs(),
        };
        if v.is_positive() {
            v
        } else {
            T::zero()
        }
    }

    pub fn is_satisfied(&self, x: &[T]) -> bool {
        self.violation(x).is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram<T> {
    vars: usize,
    sense: Sense,
    objective: Vec<T>,
    constraints: Vec<Constraint<T>>,
    lower: Vec<Option<T>>,
    upper: Vec<Option<T>>,
}

impl<T: Scalar> LinearProgram<T> {
    /// Variables default to `x ≥ 0` with no upper bound.
    pub fn new(sense: Sense, objective: Vec<T>) -> Self {
        let vars = objective.len();
        LinearProgram {
            vars,
            sense,
            objective,
            constraints: Vec::new(),
            lower: vec![Some(T::zero()); vars],
            upper: vec![None; vars],
        }
    }

    pub fn variable_count(&self) -> usize {
        self.vars
    }

    pub fn constraints(&self) -> &[Constraint<T>] {
        &self.constraints
    }

    pub fn add_constraint(&mut self, coefficients: Vec<T>, relation: Relation, rhs: T) -> usize {
        assert_eq!(coefficients.len(), self.vars, "constraint width");
        self.constraints.push(Constraint { coefficients, relation, rhs });
        self.constraints.len() - 1
    }

    /// `None` leaves the variable unbounded below.
    pub fn set_lower(&mut self, var: usize, bound: Option<T>) {
        self.lower[var] = bound;
    }

    pub fn set_upper(&mut self, var: usize, bound: Option<T>) {
        self.upper[var] = bound;
    }

    pub fn objective_at(&self, x: &[T]) -> T {
        self.objective.iter().zip(x).fold(T::zero(), |acc, (c, v)| acc + c.clone() * v.clone())
    }

    /// Whether `x` satisfies every row and bound exactly.
    pub fn is_feasible(&self, x: &[T]) -> bool {
        x.len() == self.vars
            && self.constraints.iter().all(|c| c.is_satisfied(x))
            && x.iter().zip(&self.lower).all(|(v, l)| l.as_ref().is_none_or(|l| v >= l))
            && x.iter().zip(&self.upper).all(|(v, u)| u.as_ref().is_none_or(|u| v <= u))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// A basic variable of the final tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BasicVar {
    /// Structural column; free variables contribute a positive and a
    /// negative part.
    Variable { index: usize, negative_part: bool },
    /// Slack or surplus of a constraint (index into the program's rows),
    /// or of a variable's upper bound when `constraint` is `None`.
    Slack { constraint: Option<usize>, variable: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution<T> {
    pub status: LpStatus,
    /// Empty unless optimal.
    pub values: Vec<T>,
    /// `None` unless optimal.
    pub objective: Option<T>,
    pub basis: Vec<BasicVar>,
    /// Rows present in the final solve.
    pub active_constraints: Vec<usize>,
}

impl<T> LpSolution<T> {
    fn without_point(status: LpStatus, active_constraints: Vec<usize>) -> Self {
        LpSolution { status, values: Vec::new(), objective: None, basis: Vec::new(), active_constraints }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// Row counts above which row activation kicks in.
const DIRECT_SOLVE_ROWS: usize = 48;

pub fn solve_lp<T: Scalar>(lp: &LinearProgram<T>) -> LpSolution<T> {
    let total = lp.constraints.len();
    if total <= DIRECT_SOLVE_ROWS.max(3 * lp.vars) {
        return solve_rows(lp, (0..total).collect());
    }

    let mut active = vec![false; total];
    let mut rows: Vec<usize> = Vec::new();
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.relation == Relation::Eq || rows.len() < 2 * lp.vars + 2 {
            active[i] = true;
            rows.push(i);
        }
    }
    let batch = lp.vars.max(8);

    loop {
        let sol = solve_rows(lp, rows.clone());
        match sol.status {
            LpStatus::Infeasible => return sol,
            LpStatus::Unbounded => {
                if rows.len() == total {
                    return sol;
                }
                // widen by the next rows in index order
                let grow = rows.len().max(batch);
                for i in (0..total).filter(|&i| !active[i]).take(grow).collect::<Vec<_>>() {
                    active[i] = true;
                    rows.push(i);
                }
            }
            LpStatus::Optimal => {
                let mut violated: Vec<(T, usize)> = (0..total)
                    .filter(|&i| !active[i])
                    .filter_map(|i| {
                        let v = lp.constraints[i].violation(&sol.values);
                        v.is_positive().then_some((v, i))
                    })
                    .collect();
                if violated.is_empty() {
                    return sol;
                }
                violated.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
                for (_, i) in violated.into_iter().take(batch) {
                    active[i] = true;
                    rows.push(i);
                }
            }
        }
        rows.sort_unstable();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Column {
    Structural { var: usize, negative: bool },
    Slack,
    Artificial,
}

struct Tableau<T> {
    // each row: coefficients then rhs
    rows: Vec<Vec<T>>,
    basis: Vec<usize>,
    // reduced costs then −z
    obj: Vec<T>,
    allowed: Vec<bool>,
}

enum RunOutcome {
    Optimal,
    Unbounded,
}

impl<T: Scalar> Tableau<T> {
    fn width(&self) -> usize {
        self.allowed.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width();
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for k in 0..=w {
                if !self.rows[r][k].is_zero() {
                    self.rows[r][k] = self.rows[r][k].clone() / p.clone();
                }
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let nonzero: Vec<usize> = (0..=w).filter(|&k| !pivot_row[k].is_zero()).collect();
        let eliminate = |row: &mut Vec<T>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for &k in &nonzero {
                row[k] = row[k].clone() - f.clone() * pivot_row[k].clone();
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.obj);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    fn run(&mut self) -> RunOutcome {
        let w = self.width();
        loop {
            let Some(c) = (0..w).find(|&j| self.allowed[j] && self.obj[j].is_negative()) else {
                return RunOutcome::Optimal;
            };
            let mut leave: Option<(usize, T)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = row[w].clone() / row[c].clone();
                let better = match &leave {
                    None => true,
                    Some((j, best)) => ratio < *best || (ratio == *best && self.basis[i] < self.basis[*j]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return RunOutcome::Unbounded,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }

    fn price_out(&mut self, costs: Vec<T>) {
        let w = self.width();
        self.obj = costs;
        self.obj.push(T::zero());
        for i in 0..self.rows.len() {
            let b = self.basis[i];
            let f = self.obj[b].clone();
            if !f.is_zero() {
                for k in 0..=w {
                    if !self.rows[i][k].is_zero() {
                        self.obj[k] = self.obj[k].clone() - f.clone() * self.rows[i][k].clone();
                    }
                }
            }
        }
    }
}

// a row over structural columns: coefficients, relation, rhs, originating
// constraint (none for an upper bound) and the bounded variable
type Row<T> = (Vec<T>, Relation, T, Option<usize>, usize);

/// Two-phase simplex on the given subset of rows.
fn solve_rows<T: Scalar>(lp: &LinearProgram<T>, active: Vec<usize>) -> LpSolution<T> {
    // structural columns: x = lower + y, or x = y⁺ − y⁻ when free
    let mut columns: Vec<Column> = Vec::new();
    let mut first_col = Vec::with_capacity(lp.vars);
    for j in 0..lp.vars {
        first_col.push(columns.len());
        columns.push(Column::Structural { var: j, negative: false });
        if lp.lower[j].is_none() {
            columns.push(Column::Structural { var: j, negative: true });
        }
    }
    let shift: Vec<T> = lp.lower.iter().map(|l| l.clone().unwrap_or_else(T::zero)).collect();

    let mut rows: Vec<Row<T>> = Vec::new();
    let expand = |coeffs: &[T]| {
        let mut out = vec![T::zero(); columns.len()];
        for j in 0..lp.vars {
            out[first_col[j]] = coeffs[j].clone();
            if lp.lower[j].is_none() {
                out[first_col[j] + 1] = -coeffs[j].clone();
            }
        }
        out
    };
    for &i in &active {
        let c = &lp.constraints[i];
        let rhs = c.rhs.clone() - c.lhs(&shift);
        rows.push((expand(&c.coefficients), c.relation, rhs, Some(i), 0));
    }
    for j in 0..lp.vars {
        if let Some(u) = &lp.upper[j] {
            let mut unit = vec![T::zero(); lp.vars];
            unit[j] = T::one();
            rows.push((expand(&unit), Relation::Le, u.clone() - shift[j].clone(), None, j));
        }
    }
    for row in rows.iter_mut() {
        if row.2.is_negative() {
            row.0.iter_mut().for_each(|a| *a = -a.clone());
            row.2 = -row.2.clone();
            row.1 = match row.1 {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let structural = columns.len();
    let mut slack_meta = Vec::new();
    for row in &rows {
        if row.1 != Relation::Eq {
            columns.push(Column::Slack);
            slack_meta.push((row.3, row.4));
        }
    }
    let artificial_start = columns.len();
    for row in &rows {
        if row.1 != Relation::Le {
            columns.push(Column::Artificial);
        }
    }
    let width = columns.len();

    let mut tableau_rows = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let (mut slack_col, mut art_col) = (structural, artificial_start);
    for (coeffs, rel, rhs, _, _) in rows {
        let mut line = coeffs;
        line.resize(width + 1, T::zero());
        line[width] = rhs;
        match rel {
            Relation::Le => {
                line[slack_col] = T::one();
                basis.push(slack_col);
                slack_col += 1;
            }
            Relation::Ge => {
                line[slack_col] = -T::one();
                slack_col += 1;
                line[art_col] = T::one();
                basis.push(art_col);
                art_col += 1;
            }
            Relation::Eq => {
                line[art_col] = T::one();
                basis.push(art_col);
                art_col += 1;
            }
        }
        tableau_rows.push(line);
    }

    let mut t = Tableau { rows: tableau_rows, basis, obj: Vec::new(), allowed: vec![true; width] };

    if artificial_start < width {
        let costs = (0..width).map(|j| if j >= artificial_start { T::one() } else { T::zero() }).collect();
        t.price_out(costs);
        t.run();
        if t.obj[width].is_negative() {
            return LpSolution::without_point(LpStatus::Infeasible, active);
        }
        // drive zero-level artificials out, dropping redundant rows
        let mut r = 0;
        while r < t.rows.len() {
            if t.basis[r] >= artificial_start {
                match (0..artificial_start).find(|&j| !t.rows[r][j].is_zero()) {
                    Some(c) => {
                        t.pivot(r, c);
                        r += 1;
                    }
                    None => {
                        t.rows.remove(r);
                        t.basis.remove(r);
                    }
                }
            } else {
                r += 1;
            }
        }
        for j in artificial_start..width {
            t.allowed[j] = false;
        }
    }

    let flip = lp.sense == Sense::Maximize;
    let costs = (0..width)
        .map(|j| match columns[j] {
            Column::Structural { var, negative } => {
                let c = if flip { -lp.objective[var].clone() } else { lp.objective[var].clone() };
                if negative {
                    -c
                } else {
                    c
                }
            }
            _ => T::zero(),
        })
        .collect();
    t.price_out(costs);
    if let RunOutcome::Unbounded = t.run() {
        return LpSolution::without_point(LpStatus::Unbounded, active);
    }

    let mut values = shift;
    for (r, &b) in t.basis.iter().enumerate() {
        if let Column::Structural { var, negative } = columns[b] {
            let v = t.rows[r][width].clone();
            values[var] = if negative { values[var].clone() - v } else { values[var].clone() + v };
        }
    }
    let mut basis: Vec<BasicVar> = t
        .basis
        .iter()
        .map(|&b| match columns[b] {
            Column::Structural { var, negative } => BasicVar::Variable { index: var, negative_part: negative },
            Column::Slack => {
                let (constraint, variable) = slack_meta[b - structural];
                BasicVar::Slack { constraint, variable }
            }
            Column::Artificial => unreachable!("artificials leave the basis after phase one"),
        })
        .collect();
    basis.sort();
    let objective = lp.objective_at(&values);
    debug_assert!(lp.constraints.iter().enumerate().all(|(i, c)| !active.contains(&i) || c.is_satisfied(&values)));
    LpSolution { status: LpStatus::Optimal, values, objective: Some(objective), basis, active_constraints: active }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n.into(), d.into())
    }

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| q(n, 1)).collect()
    }

    #[test]
    fn forced_solution() {
        // min ε s.t. x1 + ε ≥ 1, x1 = 1
        let mut lp = LinearProgram::new(Sense::Minimize, qs(&[0, 1]));
        lp.add_constraint(qs(&[1, 1]), Relation::Ge, q(1, 1));
        lp.add_constraint(qs(&[1, 0]), Relation::Eq, q(1, 1));
        let sol = solve_lp(&lp);
        assert_eq!(sol.status, LpStatus::Optimal);
        assert_eq!(sol.values, vec![q(1, 1), q(0, 1)]);
        assert_eq!(sol.objective, Some(q(0, 1)));
    }

    #[test]
    fn two_player_least_core() {
        // min ε s.t. x1 + ε ≥ 3/4, x2 + ε ≥ 1/2, x1 + x2 = 3/4
        let mut lp = LinearProgram::new(Sense::Minimize, qs(&[0, 0, 1]));
        lp.add_constraint(qs(&[1, 0, 1]), Relation::Ge, q(3, 4));
        lp.add_constraint(qs(&[0, 1, 1]), Relation::Ge, q(1, 2));
        lp.add_constraint(qs(&[1, 1, 0]), Relation::Eq, q(3, 4));
        let sol = solve_lp(&lp);
        assert_eq!(sol.values, vec![q(1, 2), q(1, 4), q(1, 4)]);
        assert_eq!(sol.objective, Some(q(1, 4)));
        assert!(lp.is_feasible(&sol.values));
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let mut lp = LinearProgram::new(Sense::Minimize, qs(&[1]));
        lp.add_constraint(qs(&[1]), Relation::Ge, q(1, 1));
        lp.add_constraint(qs(&[1]), Relation::Le, q(0, 1));
        assert_eq!(solve_lp(&lp).status, LpStatus::Infeasible);

        let mut lp = LinearProgram::new(Sense::Maximize, qs(&[1, 1]));
        lp.add_constraint(qs(&[1, -1]), Relation::Le, q(2, 1));
        assert_eq!(solve_lp(&lp).status, LpStatus::Unbounded);
    }

    #[test]
    fn free_and_bounded_variables() {
        // max t s.t. t ≤ x − 3, x ≤ 1, t free  →  t = −2
        let mut lp = LinearProgram::new(Sense::Maximize, qs(&[1, 0]));
        lp.set_lower(0, None);
        lp.set_upper(1, Some(q(1, 1)));
        lp.add_constraint(qs(&[1, -1]), Relation::Le, q(-3, 1));
        let sol = solve_lp(&lp);
        assert_eq!(sol.values, vec![q(-2, 1), q(1, 1)]);

        // shifted lower bound
        let mut lp = LinearProgram::new(Sense::Minimize, qs(&[1]));
        lp.set_lower(0, Some(q(5, 2)));
        assert_eq!(solve_lp(&lp).values, vec![q(5, 2)]);
    }

    #[test]
    fn redundant_equalities() {
        let mut lp = LinearProgram::new(Sense::Maximize, qs(&[1, 2]));
        lp.add_constraint(qs(&[1, 1]), Relation::Eq, q(1, 1));
        lp.add_constraint(qs(&[2, 2]), Relation::Eq, q(2, 1));
        let sol = solve_lp(&lp);
        assert_eq!(sol.values, vec![q(0, 1), q(1, 1)]);
    }

    #[test]
    fn degenerate_program_terminates() {
        // classic cycling example (Beale) under the textbook rule
        let mut lp = LinearProgram::new(Sense::Minimize, vec![q(-3, 4), q(150, 1), q(-1, 50), q(6, 1)]);
        lp.add_constraint(vec![q(1, 4), q(-60, 1), q(-1, 25), q(9, 1)], Relation::Le, q(0, 1));
        lp.add_constraint(vec![q(1, 2), q(-90, 1), q(-1, 50), q(3, 1)], Relation::Le, q(0, 1));
        lp.add_constraint(vec![q(0, 1), q(0, 1), q(1, 1), q(0, 1)], Relation::Le, q(1, 1));
        let sol = solve_lp(&lp);
        assert_eq!(sol.objective, Some(q(-1, 20)));
    }

    #[test]
    fn generic_over_fixed_width_rationals() {
        let mut lp =
            LinearProgram::new(Sense::Minimize, vec![Rational64::from_integer(0), Rational64::from_integer(1)]);
        lp.add_constraint(
            vec![Rational64::from_integer(1), Rational64::from_integer(1)],
            Relation::Ge,
            Rational64::new(3, 4),
        );
        lp.add_constraint(
            vec![Rational64::from_integer(1), Rational64::from_integer(0)],
            Relation::Eq,
            Rational64::new(1, 2),
        );
        assert_eq!(solve_lp(&lp).objective, Some(Rational64::new(1, 4)));
    }

    #[test]
    fn row_activation_matches_direct_solve() {
        // all 2^6 coalition rows of a small symmetric program
        let n = 6;
        let mut lp = LinearProgram::new(Sense::Minimize, [vec![q(0, 1); n], vec![q(1, 1)]].concat());
        for mask in 1u32..(1 << n) {
            let mut row: Vec<Q> = (0..n).map(|i| q((mask >> i & 1) as i64, 1)).collect();
            row.push(q(1, 1));
            let v = if mask.count_ones() >= 3 { q(1, 1) } else { q(0, 1) };
            lp.add_constraint(row, Relation::Ge, v);
        }
        lp.add_constraint([vec![q(1, 1); n], vec![q(0, 1)]].concat(), Relation::Eq, q(1, 1));
        assert!(lp.constraints().len() > DIRECT_SOLVE_ROWS);
        let sol = solve_lp(&lp);
        assert_eq!(sol.objective, Some(q(1, 2)));
        assert!(lp.is_feasible(&sol.values));
        assert!(sol.active_constraints.len() < lp.constraints().len());
        let direct = solve_rows(&lp, (0..lp.constraints().len()).collect());
        assert_eq!(direct.objective, sol.objective);
    }

    /// Optimum over all vertices of `{x ≥ 0 : A x ≤ b}` by enumerating every
    /// square subsystem of tight rows (including bounds) and solving it by
    /// Gaussian elimination.
    fn vertex_enumeration(objective: &[Q], a: &[Vec<Q>], b: &[Q]) -> Option<Q> {
        let n = objective.len();
        let mut rows: Vec<(Vec<Q>, Q)> = a.iter().cloned().zip(b.iter().cloned()).collect();
        for j in 0..n {
            let mut e = vec![q(0, 1); n];
            e[j] = q(1, 1);
            rows.push((e, q(0, 1)));
        }
        let m = rows.len();
        let mut best: Option<Q> = None;
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != n {
                continue;
            }
            let chosen: Vec<&(Vec<Q>, Q)> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| &rows[i]).collect();
            let Some(x) = gauss(chosen) else { continue };
            let feasible = x.iter().all(|v| *v >= q(0, 1))
                && a.iter().zip(b).all(|(row, rhs)| row.iter().zip(&x).fold(q(0, 1), |s, (c, v)| s + c * v) <= *rhs);
            if feasible {
                let val = objective.iter().zip(&x).fold(q(0, 1), |s, (c, v)| s + c * v);
                if best.as_ref().is_none_or(|bv| val > *bv) {
                    best = Some(val);
                }
            }
        }
        best
    }

    fn gauss(rows: Vec<&(Vec<Q>, Q)>) -> Option<Vec<Q>> {
        let n = rows.len();
        let mut m: Vec<Vec<Q>> = rows.iter().map(|(r, b)| [r.clone(), vec![b.clone()]].concat()).collect();
        for col in 0..n {
            let p = (col..n).find(|&r| m[r][col] != q(0, 1))?;
            m.swap(col, p);
            let pv = m[col][col].clone();
            m[col].iter_mut().for_each(|a| *a = &*a / &pv);
            let pivot = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col {
                    let f = row[col].clone();
                    row.iter_mut().zip(&pivot).for_each(|(a, p)| *a = &*a - &f * p);
                }
            }
        }
        Some(m.into_iter().map(|r| r[n].clone()).collect())
    }

    proptest! {
        #[test]
        fn optimum_matches_vertex_enumeration(
            c in prop::collection::vec(-4i64..5, 2..=3),
            a in prop::collection::vec(prop::collection::vec(-3i64..4, 3), 1..=4),
            b in prop::collection::vec(0i64..6, 4),
        ) {
            let n = c.len();
            let objective: Vec<Q> = c.iter().map(|&v| q(v, 1)).collect();
            let a: Vec<Vec<Q>> = a.iter().map(|r| r[..n].iter().map(|&v| q(v, 1)).collect()).collect();
            let b: Vec<Q> = b[..a.len()].iter().map(|&v| q(v, 1)).collect();
            let mut lp = LinearProgram::new(Sense::Maximize, objective.clone());
            for (row, rhs) in a.iter().zip(&b) {
                lp.add_constraint(row.clone(), Relation::Le, rhs.clone());
            }
            let sol = solve_lp(&lp);
            // b ≥ 0 keeps the origin feasible
            match sol.status {
                LpStatus::Optimal => {
                    prop_assert!(lp.is_feasible(&sol.values));
                    prop_assert_eq!(sol.objective.clone().unwrap(), lp.objective_at(&sol.values));
                    prop_assert_eq!(sol.objective, vertex_enumeration(&objective, &a, &b));
                }
                LpStatus::Unbounded => {
                    // an improving ray exists: some vertex-enumeration-free check
                    // is awkward, so confirm by bounding the box and seeing the
                    // optimum grow with the box
                    let bounded = |cap: i64| {
                        let mut lp2 = lp.clone();
                        for j in 0..n { lp2.set_upper(j, Some(q(cap, 1))); }
                        solve_lp(&lp2).objective.unwrap()
                    };
                    prop_assert!(bounded(100) < bounded(1000));
                }
                LpStatus::Infeasible => prop_assert!(false, "origin is feasible"),
            }
        }
    }
}
