use std::fmt;

use num_traits::{Signed, Zero};

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl Relation {
    /// Whether `lhs rel rhs` holds.
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    pub fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Eq => Relation::Eq,
            Relation::Ge => Relation::Le,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VarSign {
    NonNegative,
    NonPositive,
    Free,
}

impl VarSign {
    pub fn admits(self, value: &Rational) -> bool {
        match self {
            VarSign::NonNegative => !value.is_negative(),
            VarSign::NonPositive => !value.is_positive(),
            VarSign::Free => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variable {
    pub name: String,
    pub sign: VarSign,
}

/// `sum terms  relation  rhs`, with sparse terms sorted by variable index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub label: String,
    pub terms: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn activity(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (j, c)| acc + c * &x[*j])
    }

    pub fn coefficient(&self, var: usize) -> Rational {
        self.terms
            .iter()
            .find(|(j, _)| *j == var)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }
}

/// A linear program over exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpModel {
    pub name: String,
    pub sense: Sense,
    pub objective: Vec<(usize, Rational)>,
    pub variables: Vec<Variable>,
    pub constraints: Vec<Constraint>,
}

/// Merges duplicate indices, drops zeros and sorts by index.
fn normalize(terms: impl IntoIterator<Item = (usize, Rational)>) -> Vec<(usize, Rational)> {
    let mut terms: Vec<(usize, Rational)> = terms.into_iter().collect();
    terms.sort_by_key(|(j, _)| *j);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(terms.len());
    for (j, c) in terms {
        match out.last_mut() {
            Some((k, acc)) if *k == j => *acc += c,
            _ => out.push((j, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl LpModel {
    pub fn new(name: impl Into<String>, sense: Sense) -> Self {
        LpModel {
            name: name.into(),
            sense,
            objective: Vec::new(),
            variables: Vec::new(),
            constraints: Vec::new(),
        }
    }

    pub fn add_var(&mut self, name: impl Into<String>, sign: VarSign) -> usize {
        self.variables.push(Variable {
            name: name.into(),
            sign,
        });
        self.variables.len() - 1
    }

    /// Panics if a term refers to a variable that does not exist.
    pub fn add_constraint(
        &mut self,
        label: impl Into<String>,
        terms: impl IntoIterator<Item = (usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) -> usize {
        let terms = normalize(terms);
        self.check_indices(&terms);
        self.constraints.push(Constraint {
            label: label.into(),
            terms,
            relation,
            rhs,
        });
        self.constraints.len() - 1
    }

    pub fn set_objective(&mut self, terms: impl IntoIterator<Item = (usize, Rational)>) {
        let terms = normalize(terms);
        self.check_indices(&terms);
        self.objective = terms;
    }

    fn check_indices(&self, terms: &[(usize, Rational)]) {
        if let Some((j, _)) = terms.iter().find(|(j, _)| *j >= self.variables.len()) {
            panic!(
                "model {}: variable index {j} out of range ({} variables)",
                self.name,
                self.variables.len()
            );
        }
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v.name == name)
    }

    pub fn constraint_index(&self, label: &str) -> Option<usize> {
        self.constraints.iter().position(|c| c.label == label)
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective
            .iter()
            .fold(Rational::zero(), |acc, (j, c)| acc + c * &x[*j])
    }

    /// Objective coefficients as a dense vector.
    pub fn dense_objective(&self) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); self.num_vars()];
        for (j, v) in &self.objective {
            c[*j] = v.clone();
        }
        c
    }

    /// The LP dual, derived mechanically.
    ///
    /// One dual variable per constraint (named `y[label]`) and one dual
    /// constraint per primal variable (labelled with the variable name). For
    /// a minimization primal, `>=` rows get non-negative multipliers, `<=`
    /// rows non-positive ones and equalities free ones; columns of
    /// non-negative variables give `<=` rows, non-positive variables `>=`
    /// rows and free variables equalities. Everything flips for a
    /// maximization primal.
    pub fn dual(&self) -> LpModel {
        let minimize = self.sense == Sense::Minimize;
        let mut dual = LpModel::new(
            format!("dual({})", self.name),
            if minimize {
                Sense::Maximize
            } else {
                Sense::Minimize
            },
        );
        for con in &self.constraints {
            let sign = match (con.relation, minimize) {
                (Relation::Eq, _) => VarSign::Free,
                (Relation::Ge, true) | (Relation::Le, false) => VarSign::NonNegative,
                (Relation::Le, true) | (Relation::Ge, false) => VarSign::NonPositive,
            };
            dual.add_var(format!("y[{}]", con.label), sign);
        }
        let mut columns: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.num_vars()];
        for (i, con) in self.constraints.iter().enumerate() {
            for (j, a) in &con.terms {
                columns[*j].push((i, a.clone()));
            }
        }
        let cost = self.dense_objective();
        for (j, var) in self.variables.iter().enumerate() {
            let relation = match (var.sign, minimize) {
                (VarSign::Free, _) => Relation::Eq,
                (VarSign::NonNegative, true) | (VarSign::NonPositive, false) => Relation::Le,
                (VarSign::NonPositive, true) | (VarSign::NonNegative, false) => Relation::Ge,
            };
            dual.add_constraint(
                var.name.clone(),
                std::mem::take(&mut columns[j]),
                relation,
                cost[j].clone(),
            );
        }
        dual.set_objective(
            self.constraints
                .iter()
                .enumerate()
                .map(|(i, con)| (i, con.rhs.clone())),
        );
        dual
    }

    /// True when both models have the same sense, objective, variable signs
    /// and constraint rows (ignoring names and labels).
    pub fn same_structure(&self, other: &LpModel) -> bool {
        self.sense == other.sense
            && self.objective == other.objective
            && self.variables.len() == other.variables.len()
            && self
                .variables
                .iter()
                .zip(&other.variables)
                .all(|(a, b)| a.sign == b.sign)
            && self.constraints.len() == other.constraints.len()
            && self
                .constraints
                .iter()
                .zip(&other.constraints)
                .all(|(a, b)| a.terms == b.terms && a.relation == b.relation && a.rhs == b.rhs)
    }
}

impl fmt::Display for LpModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let term_str = |terms: &[(usize, Rational)]| {
            if terms.is_empty() {
                return "0".to_string();
            }
            terms
                .iter()
                .map(|(j, c)| format!("{c}*{}", self.variables[*j].name))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let sense = match self.sense {
            Sense::Minimize => "minimize",
            Sense::Maximize => "maximize",
        };
        writeln!(f, "{} {}: {}", self.name, sense, term_str(&self.objective))?;
        for c in &self.constraints {
            writeln!(
                f,
                "  [{}] {} {} {}",
                c.label,
                term_str(&c.terms),
                c.relation,
                c.rhs
            )?;
        }
        for v in &self.variables {
            let s = match v.sign {
                VarSign::NonNegative => ">= 0",
                VarSign::NonPositive => "<= 0",
                VarSign::Free => "free",
            };
            writeln!(f, "  {} {s}", v.name)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn terms_are_merged_and_sorted() {
        let mut lp = LpModel::new("t", Sense::Minimize);
        let x = lp.add_var("x", VarSign::NonNegative);
        let y = lp.add_var("y", VarSign::NonNegative);
        lp.add_constraint(
            "c",
            [
                (y, rat(1, 1)),
                (x, rat(2, 1)),
                (y, rat(-1, 1)),
                (x, rat(1, 2)),
            ],
            Relation::Le,
            rat(1, 1),
        );
        assert_eq!(lp.constraints[0].terms, vec![(x, rat(5, 2))]);
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn foreign_index_panics() {
        let mut lp = LpModel::new("t", Sense::Minimize);
        lp.add_var("x", VarSign::NonNegative);
        lp.add_constraint("c", [(3, rat(1, 1))], Relation::Le, rat(1, 1));
    }

    #[test]
    fn dual_of_dual_is_primal() {
        let mut lp = LpModel::new("t", Sense::Maximize);
        let x = lp.add_var("x", VarSign::NonNegative);
        let y = lp.add_var("y", VarSign::Free);
        let z = lp.add_var("z", VarSign::NonPositive);
        lp.add_constraint(
            "a",
            [(x, rat(1, 1)), (y, rat(2, 1))],
            Relation::Le,
            rat(4, 1),
        );
        lp.add_constraint(
            "b",
            [(y, rat(1, 1)), (z, rat(-3, 1))],
            Relation::Ge,
            rat(1, 1),
        );
        lp.add_constraint(
            "c",
            [(x, rat(1, 1)), (z, rat(1, 1))],
            Relation::Eq,
            rat(2, 1),
        );
        lp.set_objective([(x, rat(1, 1)), (y, rat(1, 1)), (z, rat(1, 1))]);
        assert!(lp.dual().dual().same_structure(&lp));
    }
}
