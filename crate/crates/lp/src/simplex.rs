//! Two-phase dense simplex over exact rationals with Bland's rule.
//!
//! Bland's smallest-index rule for both the entering and the leaving
//! variable rules out cycling, so the method terminates on every input.

use num_traits::{One, Signed, Zero};

use crate::model::{LpModel, Relation, Sense, VarSign};
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        /// Values of the model's variables.
        x: Vec<Rational>,
        pivots: usize,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn solution(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    in_basis: Vec<bool>,
    /// index of the right-hand side column
    rhs: usize,
    pivots: usize,
}

struct Unbounded;

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let piv = self.rows[r][e].clone();
        if !piv.is_one() {
            let inv = piv.recip();
            for v in self.rows[r].iter_mut().filter(|v| !v.is_zero()) {
                *v *= &inv;
            }
        }
        let support: Vec<usize> = (0..=self.rhs)
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[e].is_zero() {
                continue;
            }
            let factor = row[e].clone();
            for &j in &support {
                row[j] -= &factor * &pivot_row[j];
            }
        }
        self.in_basis[self.basis[r]] = false;
        self.in_basis[e] = true;
        self.basis[r] = e;
        self.pivots += 1;
    }

    /// Minimizes `cost . x` over the columns flagged in `allowed`.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Result<(), Unbounded> {
        loop {
            let entering = (0..self.rhs).find(|&j| {
                if !allowed[j] || self.in_basis[j] {
                    return false;
                }
                let mut d = cost[j].clone();
                for (row, &b) in self.rows.iter().zip(&self.basis) {
                    if !cost[b].is_zero() && !row[j].is_zero() {
                        d -= &cost[b] * &row[j];
                    }
                }
                d.is_negative()
            });
            let Some(e) = entering else {
                return Ok(());
            };

            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[e].is_positive() {
                    continue;
                }
                let ratio = &row[self.rhs] / &row[e];
                let better = match &leave {
                    None => true,
                    Some((best_row, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_row])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Unbounded);
            };
            self.pivot(r, e);
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Rational::zero(), |acc, (row, &b)| {
                acc + &cost[b] * &row[self.rhs]
            })
    }
}

/// Solves `model` exactly.
pub fn simplex_solve(model: &LpModel) -> LpOutcome {
    // Structural columns: x = +col, x = -col, or x = col+ - col-.
    let mut var_cols: Vec<Vec<(usize, bool)>> = Vec::with_capacity(model.num_vars());
    let mut n_struct = 0;
    for v in &model.variables {
        let cols = match v.sign {
            VarSign::NonNegative => vec![(n_struct, false)],
            VarSign::NonPositive => vec![(n_struct, true)],
            VarSign::Free => vec![(n_struct, false), (n_struct + 1, true)],
        };
        n_struct += cols.len();
        var_cols.push(cols);
    }

    // Rows with non-negative right-hand side.
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = Vec::new();
    for con in &model.constraints {
        let mut a = vec![Rational::zero(); n_struct];
        for (j, c) in &con.terms {
            for &(col, negated) in &var_cols[*j] {
                a[col] = if negated { -c.clone() } else { c.clone() };
            }
        }
        let (mut rel, mut rhs) = (con.relation, con.rhs.clone());
        if rhs.is_negative() {
            for v in a.iter_mut() {
                *v = -v.clone();
            }
            rhs = -rhs;
            rel = rel.flipped();
        }
        rows.push((a, rel, rhs));
    }

    let n_slack = rows.iter().filter(|(_, r, _)| *r != Relation::Eq).count();
    let n_art = rows.iter().filter(|(_, r, _)| *r != Relation::Le).count();
    let total = n_struct + n_slack + n_art;
    let mut is_art = vec![false; total];
    let mut tab = Tableau {
        rows: Vec::with_capacity(rows.len()),
        basis: Vec::with_capacity(rows.len()),
        in_basis: vec![false; total],
        rhs: total,
        pivots: 0,
    };
    let (mut next_slack, mut next_art) = (n_struct, n_struct + n_slack);
    for (a, rel, rhs) in rows {
        let mut row = a;
        row.resize(total + 1, Rational::zero());
        row[total] = rhs;
        let basic = match rel {
            Relation::Le => {
                row[next_slack] = Rational::one();
                next_slack += 1;
                next_slack - 1
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                is_art[next_art] = true;
                next_art += 1;
                next_art - 1
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                is_art[next_art] = true;
                next_art += 1;
                next_art - 1
            }
        };
        tab.rows.push(row);
        tab.basis.push(basic);
        tab.in_basis[basic] = true;
    }

    // Phase 1: minimize the sum of artificials.
    if n_art > 0 {
        let cost: Vec<Rational> = is_art
            .iter()
            .map(|&a| if a { Rational::one() } else { Rational::zero() })
            .collect();
        let all = vec![true; total];
        if tab.optimize(&cost, &all).is_err() {
            unreachable!("phase one objective is bounded below by zero");
        }
        if tab.objective(&cost).is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut r = 0;
        while r < tab.rows.len() {
            if is_art[tab.basis[r]] {
                match (0..total).find(|&j| !is_art[j] && !tab.rows[r][j].is_zero()) {
                    Some(j) => tab.pivot(r, j),
                    None => {
                        let b = tab.basis.remove(r);
                        tab.in_basis[b] = false;
                        tab.rows.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    // Phase 2 as a minimization.
    let mut cost = vec![Rational::zero(); total];
    for (j, c) in &model.objective {
        let c = match model.sense {
            Sense::Minimize => c.clone(),
            Sense::Maximize => -c.clone(),
        };
        for &(col, negated) in &var_cols[*j] {
            cost[col] = if negated { -c.clone() } else { c.clone() };
        }
    }
    let allowed: Vec<bool> = is_art.iter().map(|a| !a).collect();
    if tab.optimize(&cost, &allowed).is_err() {
        return LpOutcome::Unbounded;
    }

    let mut col_value = vec![Rational::zero(); total];
    for (row, &b) in tab.rows.iter().zip(&tab.basis) {
        col_value[b] = row[total].clone();
    }
    let x: Vec<Rational> = var_cols
        .iter()
        .map(|cols| {
            cols.iter().fold(Rational::zero(), |acc, &(col, negated)| {
                if negated {
                    acc - &col_value[col]
                } else {
                    acc + &col_value[col]
                }
            })
        })
        .collect();
    LpOutcome::Optimal {
        value: model.objective_value(&x),
        x,
        pivots: tab.pivots,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::LpModel;
    use crate::rat;

    fn two_var(sense: Sense) -> (LpModel, usize, usize) {
        let mut lp = LpModel::new("t", sense);
        let x = lp.add_var("x", VarSign::NonNegative);
        let y = lp.add_var("y", VarSign::NonNegative);
        (lp, x, y)
    }

    #[test]
    fn textbook_maximum() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> 36 at (2, 6)
        let (mut lp, x, y) = two_var(Sense::Maximize);
        lp.add_constraint("a", [(x, rat(1, 1))], Relation::Le, rat(4, 1));
        lp.add_constraint("b", [(y, rat(2, 1))], Relation::Le, rat(12, 1));
        lp.add_constraint(
            "c",
            [(x, rat(3, 1)), (y, rat(2, 1))],
            Relation::Le,
            rat(18, 1),
        );
        lp.set_objective([(x, rat(3, 1)), (y, rat(5, 1))]);
        let out = simplex_solve(&lp);
        assert_eq!(out.value(), Some(&rat(36, 1)));
        assert_eq!(out.solution().unwrap(), &[rat(2, 1), rat(6, 1)]);
    }

    #[test]
    fn fractional_minimum_with_ge_and_eq() {
        // min x + y, 2x + y >= 3, x + 3y >= 4 -> 2 at (1, 1)
        let (mut lp, x, y) = two_var(Sense::Minimize);
        lp.add_constraint(
            "a",
            [(x, rat(2, 1)), (y, rat(1, 1))],
            Relation::Ge,
            rat(3, 1),
        );
        lp.add_constraint(
            "b",
            [(x, rat(1, 1)), (y, rat(3, 1))],
            Relation::Ge,
            rat(4, 1),
        );
        lp.set_objective([(x, rat(1, 1)), (y, rat(1, 1))]);
        assert_eq!(simplex_solve(&lp).value(), Some(&rat(2, 1)));

        // min x + 2y, 3x + y >= 2, x + 4y >= 3 -> x = 5/11, y = 7/11, value 19/11
        let (mut lp, x, y) = two_var(Sense::Minimize);
        lp.add_constraint(
            "a",
            [(x, rat(3, 1)), (y, rat(1, 1))],
            Relation::Ge,
            rat(2, 1),
        );
        lp.add_constraint(
            "b",
            [(x, rat(1, 1)), (y, rat(4, 1))],
            Relation::Ge,
            rat(3, 1),
        );
        lp.set_objective([(x, rat(1, 1)), (y, rat(2, 1))]);
        let out = simplex_solve(&lp);
        assert_eq!(out.value(), Some(&rat(19, 11)));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let (mut lp, x, _) = two_var(Sense::Minimize);
        lp.add_constraint("a", [(x, rat(1, 1))], Relation::Le, rat(1, 1));
        lp.add_constraint("b", [(x, rat(1, 1))], Relation::Ge, rat(2, 1));
        assert_eq!(simplex_solve(&lp), LpOutcome::Infeasible);

        let (mut lp, x, y) = two_var(Sense::Maximize);
        lp.add_constraint(
            "a",
            [(x, rat(1, 1)), (y, rat(-1, 1))],
            Relation::Le,
            rat(1, 1),
        );
        lp.set_objective([(y, rat(1, 1))]);
        assert_eq!(simplex_solve(&lp), LpOutcome::Unbounded);
    }

    #[test]
    fn free_and_nonpositive_variables() {
        // min x - z with x free, z <= 0, x >= -3, z >= -2: optimum at (-3, 0)
        let mut lp = LpModel::new("t", Sense::Minimize);
        let x = lp.add_var("x", VarSign::Free);
        let z = lp.add_var("z", VarSign::NonPositive);
        lp.add_constraint("a", [(x, rat(1, 1))], Relation::Ge, rat(-3, 1));
        lp.add_constraint("b", [(z, rat(1, 1))], Relation::Ge, rat(-2, 1));
        lp.set_objective([(x, rat(1, 1)), (z, rat(-1, 1))]);
        let out = simplex_solve(&lp);
        assert_eq!(out.value(), Some(&rat(-3, 1)));
        assert_eq!(out.solution().unwrap(), &[rat(-3, 1), rat(0, 1)]);
    }

    #[test]
    fn redundant_equalities_are_dropped() {
        let (mut lp, x, y) = two_var(Sense::Maximize);
        lp.add_constraint(
            "a",
            [(x, rat(1, 1)), (y, rat(1, 1))],
            Relation::Eq,
            rat(1, 1),
        );
        lp.add_constraint(
            "b",
            [(x, rat(2, 1)), (y, rat(2, 1))],
            Relation::Eq,
            rat(2, 1),
        );
        lp.set_objective([(x, rat(2, 1)), (y, rat(1, 1))]);
        assert_eq!(simplex_solve(&lp).value(), Some(&rat(2, 1)));
    }

    #[test]
    fn degenerate_problem_terminates() {
        // Beale-style cycling example; Bland's rule must still terminate.
        let mut lp = LpModel::new("beale", Sense::Minimize);
        let v: Vec<usize> = (0..4)
            .map(|i| lp.add_var(format!("x{i}"), VarSign::NonNegative))
            .collect();
        lp.add_constraint(
            "r1",
            [
                (v[0], rat(1, 4)),
                (v[1], rat(-8, 1)),
                (v[2], rat(-1, 1)),
                (v[3], rat(9, 1)),
            ],
            Relation::Le,
            rat(0, 1),
        );
        lp.add_constraint(
            "r2",
            [
                (v[0], rat(1, 2)),
                (v[1], rat(-12, 1)),
                (v[2], rat(-1, 2)),
                (v[3], rat(3, 1)),
            ],
            Relation::Le,
            rat(0, 1),
        );
        lp.add_constraint("r3", [(v[2], rat(1, 1))], Relation::Le, rat(1, 1));
        lp.set_objective([
            (v[0], rat(-3, 4)),
            (v[1], rat(20, 1)),
            (v[2], rat(-1, 2)),
            (v[3], rat(6, 1)),
        ]);
        assert_eq!(simplex_solve(&lp).value(), Some(&rat(-5, 4)));
    }
}
