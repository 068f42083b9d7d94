//! The worst-case ratio LPs and their closed-form solutions.
//!
//! Models that minimize `opt` fix the heuristic's makespan to 1; models that
//! maximize a makespan fix the optimum to 1. Job variables are named `p1`,
//! `p2`, ... in sorted order.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::certificate::{Certificate, Role};
use crate::model::{LpModel, Relation, Sense, VarSign};
use crate::{rat, Rational};

/// Extra lower bound on `opt` in the backbone model with a long-critical
/// machine that is not the first one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TripleCase {
    /// `m = 4`: jobs 1, 2, 3 share two machines in the optimum.
    TopThreeOnTwo,
    /// `m = 4`: jobs 1, 2, 3 run on three different machines in the optimum.
    TopThreeOnThree,
    /// `m = 3, n = 8`: `t' = p1 + p6`.
    TPrime1And6,
    /// `m = 3, n = 8`: `t' = p2 + p5`.
    TPrime2And5,
    /// `m = 3, n = 8`: `t' = p3 + p4`.
    TPrime3And4,
}

impl TripleCase {
    pub const ALL: [TripleCase; 5] = [
        TripleCase::TopThreeOnTwo,
        TripleCase::TopThreeOnThree,
        TripleCase::TPrime1And6,
        TripleCase::TPrime2And5,
        TripleCase::TPrime3And4,
    ];

    fn t_prime_pair(self) -> Option<(usize, usize)> {
        match self {
            TripleCase::TPrime1And6 => Some((1, 6)),
            TripleCase::TPrime2And5 => Some((2, 5)),
            TripleCase::TPrime3And4 => Some((3, 4)),
            _ => None,
        }
    }
}

impl fmt::Display for TripleCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TripleCase::TopThreeOnTwo => f.write_str("top3-on-2"),
            TripleCase::TopThreeOnThree => f.write_str("top3-on-3"),
            _ => {
                let (a, b) = self.t_prime_pair().unwrap();
                write!(f, "t'=p{a}+p{b}")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// LPT with a non-critical machine running `k` jobs; minimizes `opt`.
    NonCriticalK {
        m: usize,
        k: usize,
    },
    /// `NonCriticalK` with `p_n = opt/k - sl` substituted out.
    NonCriticalKReduced {
        m: usize,
        k: usize,
    },
    /// Dual of the reduced model.
    NonCriticalKDual {
        m: usize,
        k: usize,
    },
    /// `LPT({j'})` on `2m+1` jobs with the three-job machine critical.
    Slack76 {
        m: usize,
    },
    /// min(LPT, `LPT({j'})`) on `2m+1` jobs, `p_{2m+1} >= p_1 - p_m`.
    Case1NotM1 {
        m: usize,
    },
    Case1NotM1Dual {
        m: usize,
    },
    /// LPT on `2m+1` jobs with `p_{2m+1} <= p_1 - p_m`.
    Case2 {
        m: usize,
    },
    Case2Dual {
        m: usize,
    },
    /// LPT on `n = 3m` jobs, three per machine; minimizes `opt`.
    ThreePerMachine {
        m: usize,
    },
    /// LPT with three jobs on the critical and on one other machine.
    TwoTripleMachines {
        m: usize,
        n: usize,
        case: TripleCase,
    },
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModelKind::NonCriticalK { m, k } => write!(f, "NonCriticalK(m={m},k={k})"),
            ModelKind::NonCriticalKReduced { m, k } => {
                write!(f, "NonCriticalKReduced(m={m},k={k})")
            }
            ModelKind::NonCriticalKDual { m, k } => write!(f, "NonCriticalKDual(m={m},k={k})"),
            ModelKind::Slack76 { m } => write!(f, "Slack76(m={m})"),
            ModelKind::Case1NotM1 { m } => write!(f, "Case1NotM1(m={m})"),
            ModelKind::Case1NotM1Dual { m } => write!(f, "Case1NotM1Dual(m={m})"),
            ModelKind::Case2 { m } => write!(f, "Case2(m={m})"),
            ModelKind::Case2Dual { m } => write!(f, "Case2Dual(m={m})"),
            ModelKind::ThreePerMachine { m } => write!(f, "ThreePerMachine(m={m})"),
            ModelKind::TwoTripleMachines { m, n, case } => {
                write!(f, "TwoTripleMachines(m={m},n={n},{case})")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("{kind}: parameters out of range, requires {requirement}")]
    BadParams {
        kind: String,
        requirement: &'static str,
    },
    #[error("{kind}: no closed-form certificate (requires {requirement})")]
    NoCertificate {
        kind: String,
        requirement: &'static str,
    },
}

fn bad(kind: ModelKind, requirement: &'static str) -> ModelError {
    ModelError::BadParams {
        kind: kind.to_string(),
        requirement,
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(v.into())
}

fn one() -> Rational {
    Rational::one()
}

fn neg_one() -> Rational {
    -Rational::one()
}

/// Adds `p1..p{n}` and returns their indices (0-based: `p[j-1]` is `p_j`).
fn add_jobs(lp: &mut LpModel, n: usize) -> Vec<usize> {
    (1..=n)
        .map(|j| lp.add_var(format!("p{j}"), VarSign::NonNegative))
        .collect()
}

/// `p_{j+1} - p_j <= 0` for `j = 1..n-1`.
fn add_sorted_chain(lp: &mut LpModel, p: &[usize]) {
    for j in 1..p.len() {
        lp.add_constraint(
            format!("sorted{j}"),
            [(p[j], one()), (p[j - 1], neg_one())],
            Relation::Le,
            Rational::zero(),
        );
    }
}

pub fn build_model(kind: ModelKind) -> Result<LpModel, ModelError> {
    match kind {
        ModelKind::NonCriticalK { m, k } => {
            if m < 2 || k < 1 {
                return Err(bad(kind, "m >= 2, k >= 1"));
            }
            Ok(noncritical_k(kind, m, k))
        }
        ModelKind::NonCriticalKReduced { m, k } => {
            if m < 2 || k < 1 {
                return Err(bad(kind, "m >= 2, k >= 1"));
            }
            Ok(noncritical_k_reduced(kind, m, k))
        }
        ModelKind::NonCriticalKDual { m, k } => {
            if m < 2 || k < 1 {
                return Err(bad(kind, "m >= 2, k >= 1"));
            }
            Ok(noncritical_k_dual(kind, m, k))
        }
        ModelKind::Slack76 { m } => {
            if m < 3 {
                return Err(bad(kind, "m >= 3"));
            }
            Ok(slack76(kind, m))
        }
        ModelKind::Case1NotM1 { m } | ModelKind::Case2 { m } => {
            if m < 3 {
                return Err(bad(kind, "m >= 3"));
            }
            Ok(two_m_plus_one(
                kind,
                m,
                matches!(kind, ModelKind::Case2 { .. }),
            ))
        }
        ModelKind::Case1NotM1Dual { m } | ModelKind::Case2Dual { m } => {
            if m < 3 {
                return Err(bad(kind, "m >= 3"));
            }
            Ok(two_m_plus_one_dual(
                kind,
                m,
                matches!(kind, ModelKind::Case2Dual { .. }),
            ))
        }
        ModelKind::ThreePerMachine { m } => {
            if m < 2 {
                return Err(bad(kind, "m >= 2"));
            }
            Ok(three_per_machine(kind, m))
        }
        ModelKind::TwoTripleMachines { m, n, case } => {
            let ok = match case {
                TripleCase::TopThreeOnTwo | TripleCase::TopThreeOnThree => {
                    m == 4 && (n == 10 || n == 11)
                }
                _ => m == 3 && n == 8,
            };
            if !ok {
                return Err(bad(
                    kind,
                    "m = 4 with n in {10, 11} for the top-three cases, m = 3 with n = 8 for the t' cases",
                ));
            }
            Ok(two_triple_machines(kind, m, n, case))
        }
    }
}

fn noncritical_k(kind: ModelKind, m: usize, k: usize) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Minimize);
    let nn = VarSign::NonNegative;
    let opt = lp.add_var("opt", nn);
    let sum_p = lp.add_var("sum_p", nn);
    let t_c = lp.add_var("t_c", nn);
    let t1 = lp.add_var("t'", nn);
    let t2 = lp.add_var("t''", nn);
    let p_n = lp.add_var("p_n", nn);
    let sl = lp.add_var("sl", nn);
    let zero = Rational::zero;

    lp.add_constraint(
        "opt_avg",
        [(opt, -int(m)), (sum_p, one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "k_jobs",
        [(p_n, int(k)), (t1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t_c<=t'",
        [(t_c, one()), (t1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "others",
        [(t_c, int(m - 2)), (t2, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "sum_p",
        [
            (t_c, one()),
            (p_n, one()),
            (t1, one()),
            (t2, one()),
            (sum_p, neg_one()),
        ],
        Relation::Eq,
        zero(),
    );
    lp.add_constraint("lpt=1", [(t_c, one()), (p_n, one())], Relation::Eq, one());
    lp.add_constraint(
        "p_n<=opt/k",
        [(p_n, one()), (sl, one()), (opt, -rat(1, k as i64))],
        Relation::Eq,
        zero(),
    );
    lp.set_objective([(opt, one())]);
    lp
}

fn noncritical_k_reduced(kind: ModelKind, m: usize, k: usize) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Minimize);
    let nn = VarSign::NonNegative;
    let opt = lp.add_var("opt", nn);
    let sum_p = lp.add_var("sum_p", nn);
    let sl = lp.add_var("sl", nn);
    let t1 = lp.add_var("t'", nn);
    let t_c = lp.add_var("t_c", nn);
    let t2 = lp.add_var("t''", nn);
    let inv_k = rat(1, k as i64);
    let zero = Rational::zero;

    lp.add_constraint(
        "opt_avg",
        [(opt, -int(m)), (sum_p, one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "k_jobs",
        [(opt, one()), (sl, -int(k)), (t1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t_c<=t'",
        [(t_c, one()), (t1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "others",
        [(t_c, int(m - 2)), (t2, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "sum_p",
        [
            (opt, inv_k.clone()),
            (sl, neg_one()),
            (t1, one()),
            (t_c, one()),
            (t2, one()),
            (sum_p, neg_one()),
        ],
        Relation::Eq,
        zero(),
    );
    lp.add_constraint(
        "lpt=1",
        [(opt, inv_k), (sl, neg_one()), (t_c, one())],
        Relation::Eq,
        one(),
    );
    lp.set_objective([(opt, one())]);
    lp
}

fn noncritical_k_dual(kind: ModelKind, m: usize, k: usize) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Maximize);
    let l: Vec<usize> = (1..=6)
        .map(|i| {
            let sign = if i <= 4 {
                VarSign::NonPositive
            } else {
                VarSign::Free
            };
            lp.add_var(format!("lambda{i}"), sign)
        })
        .collect();
    let inv_k = rat(1, k as i64);
    let zero = Rational::zero;

    lp.add_constraint(
        "opt",
        [
            (l[0], -int(m)),
            (l[1], one()),
            (l[4], inv_k.clone()),
            (l[5], inv_k),
        ],
        Relation::Le,
        one(),
    );
    lp.add_constraint(
        "sum_p",
        [(l[0], one()), (l[4], neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "sl",
        [(l[1], -int(k)), (l[4], neg_one()), (l[5], neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t'",
        [(l[1], neg_one()), (l[2], neg_one()), (l[4], one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t_c",
        [
            (l[2], one()),
            (l[3], int(m - 2)),
            (l[4], one()),
            (l[5], one()),
        ],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t''",
        [(l[3], neg_one()), (l[4], one())],
        Relation::Le,
        zero(),
    );
    lp.set_objective([(l[5], one())]);
    lp
}

fn slack76(kind: ModelKind, m: usize) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Maximize);
    let names = [1, m - 1, m, m + 1, 2 * m - 1, 2 * m, 2 * m + 1];
    let v: Vec<usize> = names
        .iter()
        .map(|j| lp.add_var(format!("p{j}"), VarSign::NonNegative))
        .collect();
    let [p1, pm1, pm, _, p2m1, p2m, p2m_next] = v[..] else {
        unreachable!()
    };
    let zero = Rational::zero;

    lp.add_constraint(
        "opt>=p(m-1)+p(m)",
        [(pm1, one()), (pm, one())],
        Relation::Le,
        one(),
    );
    lp.add_constraint(
        "opt>=three_smallest",
        [(p2m1, one()), (p2m, one()), (p2m_next, one())],
        Relation::Le,
        one(),
    );
    lp.add_constraint(
        "case",
        [(p2m_next, one()), (p1, neg_one()), (pm, one())],
        Relation::Ge,
        zero(),
    );
    for w in v.windows(2) {
        lp.add_constraint(
            format!(
                "sorted({},{})",
                lp.variables[w[0]].name, lp.variables[w[1]].name
            ),
            [(w[0], one()), (w[1], neg_one())],
            Relation::Ge,
            zero(),
        );
    }
    lp.set_objective([(p2m_next, one()), (pm, one()), (p2m, one())]);
    lp
}

/// Case 1 (`reversed = false`) or Case 2 (`reversed = true`) on `2m+1` jobs.
fn two_m_plus_one(kind: ModelKind, m: usize, reversed: bool) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Maximize);
    let n = 2 * m + 1;
    let p = add_jobs(&mut lp, n);
    let alpha = lp.add_var("alpha", VarSign::NonNegative);
    let y = lp.add_var("y", VarSign::NonNegative);
    let zero = Rational::zero;

    lp.add_constraint(
        "opt_avg",
        p.iter().map(|&j| (j, one())),
        Relation::Le,
        int(m),
    );
    lp.add_constraint(
        "three_smallest",
        [(p[n - 3], one()), (p[n - 2], one()), (p[n - 1], one())],
        Relation::Le,
        one(),
    );
    add_sorted_chain(&mut lp, &p);
    for j in 1..=m {
        lp.add_constraint(
            format!("pair{j}"),
            [(p[j - 1], one()), (p[2 * m - j], one()), (alpha, neg_one())],
            Relation::Ge,
            zero(),
        );
    }
    lp.add_constraint(
        "lpt",
        [(p[n - 1], one()), (alpha, one()), (y, neg_one())],
        Relation::Ge,
        zero(),
    );
    lp.add_constraint(
        "case",
        [(p[n - 1], one()), (p[0], neg_one()), (p[m - 1], one())],
        if reversed { Relation::Le } else { Relation::Ge },
        zero(),
    );
    if !reversed {
        lp.add_constraint(
            "lpt_prime",
            [(p[0], one()), (p[m], one()), (y, neg_one())],
            Relation::Ge,
            zero(),
        );
    }
    lp.set_objective([(y, one())]);
    lp
}

/// The dual of [`two_m_plus_one`] written out row by row.
fn two_m_plus_one_dual(kind: ModelKind, m: usize, reversed: bool) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Minimize);
    let count = if reversed { 3 * m + 4 } else { 3 * m + 5 };
    for i in 1..=count {
        let sign = if i <= 2 * m + 2 || (reversed && i == 3 * m + 4) {
            VarSign::NonNegative
        } else {
            VarSign::NonPositive
        };
        lp.add_var(format!("lambda{i}"), sign);
    }
    // lambda_i is column i - 1; the last one only exists in case 1.
    let l = |i: usize| i - 1;
    let last = |c: Rational| -> Vec<(usize, Rational)> {
        if reversed {
            Vec::new()
        } else {
            vec![(l(3 * m + 5), c)]
        }
    };
    let zero = Rational::zero;

    let mut row = |label: String,
                   mut terms: Vec<(usize, Rational)>,
                   extra: Vec<(usize, Rational)>,
                   rhs: Rational| {
        terms.extend(extra);
        lp.add_constraint(label, terms, Relation::Ge, rhs);
    };

    row(
        "p1".into(),
        vec![
            (l(1), one()),
            (l(3), neg_one()),
            (l(2 * m + 3), one()),
            (l(3 * m + 4), neg_one()),
        ],
        last(one()),
        zero(),
    );
    for j in 2..m {
        row(
            format!("p{j}"),
            vec![
                (l(1), one()),
                (l(1 + j), one()),
                (l(2 + j), neg_one()),
                (l(2 * m + 2 + j), one()),
            ],
            Vec::new(),
            zero(),
        );
    }
    row(
        format!("p{m}"),
        vec![
            (l(1), one()),
            (l(m + 1), one()),
            (l(m + 2), neg_one()),
            (l(3 * m + 2), one()),
            (l(3 * m + 4), one()),
        ],
        Vec::new(),
        zero(),
    );
    row(
        format!("p{}", m + 1),
        vec![
            (l(1), one()),
            (l(m + 2), one()),
            (l(m + 3), neg_one()),
            (l(3 * m + 2), one()),
        ],
        last(one()),
        zero(),
    );
    for j in m + 2..=2 * m - 2 {
        row(
            format!("p{j}"),
            vec![
                (l(1), one()),
                (l(1 + j), one()),
                (l(2 + j), neg_one()),
                (l(4 * m + 3 - j), one()),
            ],
            Vec::new(),
            zero(),
        );
    }
    row(
        format!("p{}", 2 * m - 1),
        vec![
            (l(1), one()),
            (l(2), one()),
            (l(2 * m), one()),
            (l(2 * m + 1), neg_one()),
            (l(2 * m + 4), one()),
        ],
        Vec::new(),
        zero(),
    );
    row(
        format!("p{}", 2 * m),
        vec![
            (l(1), one()),
            (l(2), one()),
            (l(2 * m + 1), one()),
            (l(2 * m + 2), neg_one()),
            (l(2 * m + 3), one()),
        ],
        Vec::new(),
        zero(),
    );
    row(
        format!("p{}", 2 * m + 1),
        vec![
            (l(1), one()),
            (l(2), one()),
            (l(2 * m + 2), one()),
            (l(3 * m + 3), one()),
            (l(3 * m + 4), one()),
        ],
        Vec::new(),
        zero(),
    );
    let mut alpha: Vec<(usize, Rational)> =
        (2 * m + 3..=3 * m + 2).map(|i| (l(i), neg_one())).collect();
    alpha.push((l(3 * m + 3), one()));
    row("alpha".into(), alpha, Vec::new(), zero());
    row(
        "y".into(),
        vec![(l(3 * m + 3), neg_one())],
        last(neg_one()),
        one(),
    );

    lp.set_objective([(l(1), int(m)), (l(2), one())]);
    lp
}

fn three_per_machine(kind: ModelKind, m: usize) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Minimize);
    let n = 3 * m;
    let p = add_jobs(&mut lp, n);
    let opt = lp.add_var("opt", VarSign::NonNegative);
    let zero = Rational::zero;

    let mut sum: Vec<(usize, Rational)> = p.iter().map(|&j| (j, one())).collect();
    sum.push((opt, -int(m)));
    lp.add_constraint("opt_avg", sum, Relation::Le, zero());
    lp.add_constraint(
        "three_smallest",
        [
            (p[0], one()),
            (p[n - 2], one()),
            (p[n - 1], one()),
            (opt, neg_one()),
        ],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "p1<=2pn",
        [(p[0], one()), (p[n - 1], -int(2))],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "lpt>=1",
        [(p[0], one()), (p[m], one()), (p[n - 1], one())],
        Relation::Ge,
        one(),
    );
    add_sorted_chain(&mut lp, &p);
    lp.set_objective([(opt, one())]);
    lp
}

fn two_triple_machines(kind: ModelKind, m: usize, n: usize, case: TripleCase) -> LpModel {
    let mut lp = LpModel::new(kind.to_string(), Sense::Minimize);
    let p = add_jobs(&mut lp, n);
    let nn = VarSign::NonNegative;
    let t_c = lp.add_var("t_c", nn);
    let t1 = lp.add_var("t'", nn);
    let t2 = lp.add_var("t''", nn);
    let p1 = lp.add_var("p'", nn);
    let opt = lp.add_var("opt", nn);
    let zero = Rational::zero;
    let job = |j: usize| p[j - 1];

    let mut sum: Vec<(usize, Rational)> = p.iter().map(|&j| (j, one())).collect();
    sum.push((opt, -int(m)));
    lp.add_constraint("opt_avg", sum, Relation::Le, zero());
    let mut sum_p: Vec<(usize, Rational)> = p.iter().map(|&j| (j, neg_one())).collect();
    sum_p.extend([
        (t_c, one()),
        (job(n), one()),
        (t1, one()),
        (p1, one()),
        (t2, one()),
    ]);
    lp.add_constraint("sum_p", sum_p, Relation::Eq, zero());
    lp.add_constraint(
        "t_c<=t'+p'",
        [(t_c, one()), (t1, neg_one()), (p1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "others",
        [(t_c, int(m - 2)), (t2, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "lpt=1",
        [(t_c, one()), (job(n), one())],
        Relation::Eq,
        one(),
    );
    lp.add_constraint(
        "p'>=p(n-1)",
        [(job(n - 1), one()), (p1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t'>=p(m)+p(n-2)",
        [(job(m), one()), (job(n - 2), one()), (t1, neg_one())],
        Relation::Le,
        zero(),
    );
    lp.add_constraint(
        "t_c<=p1+p(m+1)",
        [(t_c, one()), (job(1), neg_one()), (job(m + 1), neg_one())],
        Relation::Le,
        zero(),
    );
    add_sorted_chain(&mut lp, &p);

    // opt >= (sum of jobs) / machines
    let mut opt_at_least = |label: &str, jobs: &[usize], machines: i64| {
        let mut terms: Vec<(usize, Rational)> = vec![(opt, one())];
        terms.extend(jobs.iter().map(|&j| (job(j), -rat(1, machines))));
        lp.add_constraint(label, terms, Relation::Ge, zero());
    };
    match case {
        TripleCase::TopThreeOnTwo => {
            let jobs: &[usize] = if n == 11 {
                &[1, 2, 3, 10, 11]
            } else {
                &[1, 2, 3, 10]
            };
            opt_at_least("top3_on_2", jobs, 2);
        }
        TripleCase::TopThreeOnThree => {
            let jobs: &[usize] = if n == 11 {
                &[1, 2, 3, 7, 8, 9, 10, 11]
            } else {
                &[1, 2, 3, 7, 8, 9, 10]
            };
            opt_at_least("top3_on_3", jobs, 3);
        }
        _ => {
            opt_at_least("opt>=p1+p8", &[1, 8], 1);
            opt_at_least("two_machines", &[1, 2, 6, 7, 8], 2);
            let (a, b) = case.t_prime_pair().unwrap();
            lp.add_constraint(
                format!("t'=p{a}+p{b}"),
                [(t1, one()), (job(a), neg_one()), (job(b), neg_one())],
                Relation::Eq,
                zero(),
            );
        }
    }
    lp.set_objective([(opt, one())]);
    lp
}

/// The optimum each model is known to attain, where one is stated.
pub fn stated_optimum(kind: ModelKind) -> Option<Rational> {
    let case_value = |m: usize| {
        if m == 3 {
            rat(15, 13)
        } else {
            let m = m as i64;
            rat(8 * m - 7, 3 * (2 * m - 1))
        }
    };
    match kind {
        ModelKind::NonCriticalK { m, k }
        | ModelKind::NonCriticalKReduced { m, k }
        | ModelKind::NonCriticalKDual { m, k } => (m >= k + 2 && k >= 1).then(|| {
            let (m, k) = (m as i64, k as i64);
            rat(k * (m - 1), (k + 1) * m - k - 2)
        }),
        ModelKind::Slack76 { m } => (m >= 3).then(|| rat(7, 6)),
        ModelKind::Case1NotM1 { m }
        | ModelKind::Case1NotM1Dual { m }
        | ModelKind::Case2 { m }
        | ModelKind::Case2Dual { m } => (m >= 3).then(|| case_value(m)),
        ModelKind::ThreePerMachine { m } => match m {
            2 => Some(rat(8, 9)),
            3 => Some(rat(6, 7)),
            4 => Some(rat(16, 19)),
            _ => None,
        },
        ModelKind::TwoTripleMachines { m, n, case } => match (m, n, case) {
            (4, 10 | 11, TripleCase::TopThreeOnTwo | TripleCase::TopThreeOnThree) => {
                Some(rat(9, 11))
            }
            (3, 8, TripleCase::TPrime1And6) => Some(rat(13, 15)),
            (3, 8, TripleCase::TPrime2And5 | TripleCase::TPrime3And4) => Some(rat(6, 7)),
            _ => None,
        },
    }
}

/// The closed-form primal or dual solution for the certified families.
pub fn closed_form_certificate(kind: ModelKind) -> Result<Certificate, ModelError> {
    let none = |requirement| ModelError::NoCertificate {
        kind: kind.to_string(),
        requirement,
    };
    match kind {
        ModelKind::NonCriticalK { m, k }
        | ModelKind::NonCriticalKReduced { m, k }
        | ModelKind::NonCriticalKDual { m, k } => {
            if k < 1 || m < k + 2 {
                return Err(none("k >= 1 and m >= k + 2"));
            }
        }
        ModelKind::Case1NotM1 { m }
        | ModelKind::Case2 { m }
        | ModelKind::Case1NotM1Dual { m }
        | ModelKind::Case2Dual { m } => {
            if m < 4 {
                return Err(none("m >= 4"));
            }
        }
        _ => return Err(none("a NonCriticalK, Case1NotM1 or Case2 family model")),
    }
    let (role, values) = closed_form(kind).expect("certified family");
    Ok(Certificate {
        kind,
        role,
        values,
        objective: stated_optimum(kind).expect("certified family has a stated optimum"),
    })
}

/// The closed-form assignment evaluated at any parameters, in or out of its
/// validity range.
fn closed_form(kind: ModelKind) -> Option<(Role, Vec<Rational>)> {
    Some(match kind {
        ModelKind::NonCriticalK { m, k }
        | ModelKind::NonCriticalKReduced { m, k }
        | ModelKind::NonCriticalKDual { m, k } => {
            let (m, k) = (m as i64, k as i64);
            let d = (k + 1) * m - k - 2;
            let r = |num: i64| rat(num, d);
            let opt = r(k * (m - 1));
            let sum_p = r(m * (m - 1) * k);
            let t_c = r(k * (m - 1) - 1);
            let t1 = r(k * (m - 1));
            let t2 = r((m - 2) * (k * (m - 1) - 1));
            let p_n = r(m - 1);
            let sl = Rational::zero();
            match kind {
                ModelKind::NonCriticalK { .. } => {
                    (Role::Primal, vec![opt, sum_p, t_c, t1, t2, p_n, sl])
                }
                ModelKind::NonCriticalKReduced { .. } => {
                    (Role::Primal, vec![opt, sum_p, sl, t1, t_c, t2])
                }
                _ => {
                    let l = r(-k);
                    (
                        Role::Dual,
                        vec![l.clone(), l.clone(), Rational::zero(), l.clone(), l, opt],
                    )
                }
            }
        }
        ModelKind::Case1NotM1 { m } | ModelKind::Case2 { m } => {
            (Role::Primal, two_m_plus_one_primal(m))
        }
        ModelKind::Case1NotM1Dual { m } | ModelKind::Case2Dual { m } => {
            let reversed = matches!(kind, ModelKind::Case2Dual { .. });
            (Role::Dual, two_m_plus_one_dual_solution(m, reversed))
        }
        _ => return None,
    })
}

fn two_m_plus_one_primal(m: usize) -> Vec<Rational> {
    let mi = m as i64;
    let den = 3 * (2 * mi - 1);
    let mut p = Vec::with_capacity(2 * m + 3);
    p.push(rat(5 * mi - 4, den));
    p.extend((2..m).map(|_| rat(4 * mi - 5, den)));
    p.push(rat(mi - 1, 2 * mi - 1));
    p.push(rat(mi - 1, 2 * mi - 1));
    p.extend((m + 2..=2 * m + 1).map(|_| rat(1, 3)));
    p.push(rat(2 * (mi - 1), 2 * mi - 1));
    p.push(rat(8 * mi - 7, den));
    p
}

fn two_m_plus_one_dual_solution(m: usize, reversed: bool) -> Vec<Rational> {
    let mi = m as i64;
    let den = 2 * mi - 1;
    let count = if reversed { 3 * m + 4 } else { 3 * m + 5 };
    let mut l = vec![Rational::zero(); count + 1]; // 1-based
    l[1] = rat(2, den);
    l[2] = rat(2 * mi - 7, 3 * den);
    l[m + 2] = rat(1, den);
    l[2 * m + 1] = rat(2 * mi - 7, 3 * den);
    l[2 * m + 2] = rat(4 * (mi - 2), 3 * den);
    for v in &mut l[2 * m + 4..=3 * m + 1] {
        *v = rat(-2, den);
    }
    if reversed {
        l[3 * m + 2] = rat(-3, den);
        l[3 * m + 3] = rat(-1, 1);
        l[3 * m + 4] = rat(2, den);
    } else {
        l[3 * m + 2] = rat(-1, den);
        l[3 * m + 3] = rat(3 - 2 * mi, den);
        l[3 * m + 5] = rat(-2, den);
    }
    l.remove(0);
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn noncritical_k_shape() {
        let lp = build_model(ModelKind::NonCriticalK { m: 5, k: 3 }).unwrap();
        assert_eq!((lp.num_vars(), lp.num_constraints()), (7, 7));
        let heur = &lp.constraints[lp.constraint_index("lpt=1").unwrap()];
        assert_eq!(heur.relation, Relation::Eq);
        assert_eq!(heur.rhs, one());
        assert_eq!(
            heur.terms,
            vec![
                (lp.var_index("t_c").unwrap(), one()),
                (lp.var_index("p_n").unwrap(), one())
            ]
        );
    }

    #[test]
    fn slack76_objective() {
        for m in 3..6 {
            let lp = build_model(ModelKind::Slack76 { m }).unwrap();
            let names: Vec<&str> = lp
                .objective
                .iter()
                .map(|(j, _)| lp.variables[*j].name.as_str())
                .collect();
            let mut expected = vec![
                format!("p{m}"),
                format!("p{}", 2 * m),
                format!("p{}", 2 * m + 1),
            ];
            expected.sort_by_key(|s| lp.var_index(s).unwrap());
            assert_eq!(names, expected);
        }
    }

    #[test]
    fn three_per_machine_two_machines_has_six_jobs() {
        let lp = build_model(ModelKind::ThreePerMachine { m: 2 }).unwrap();
        assert_eq!(lp.num_vars(), 7);
        assert!(lp.var_index("p6").is_some() && lp.var_index("p7").is_none());
    }

    #[test]
    fn bad_parameters() {
        assert!(build_model(ModelKind::Slack76 { m: 2 }).is_err());
        assert!(build_model(ModelKind::NonCriticalK { m: 1, k: 1 }).is_err());
        assert!(build_model(ModelKind::TwoTripleMachines {
            m: 3,
            n: 8,
            case: TripleCase::TopThreeOnTwo
        })
        .is_err());
        assert!(closed_form_certificate(ModelKind::NonCriticalK { m: 4, k: 3 }).is_err());
        assert!(closed_form_certificate(ModelKind::Case1NotM1Dual { m: 3 }).is_err());
        assert!(closed_form_certificate(ModelKind::ThreePerMachine { m: 3 }).is_err());
    }

    fn closed_form_is_valid(kind: ModelKind) -> bool {
        let (_, values) = closed_form(kind).unwrap();
        let model = build_model(kind).unwrap();
        model
            .variables
            .iter()
            .zip(&values)
            .all(|(v, x)| v.sign.admits(x))
            && model
                .constraints
                .iter()
                .all(|c| c.relation.holds(&c.activity(&values), &c.rhs))
    }

    #[test]
    fn closed_forms_fail_outside_their_range() {
        // m = k + 1 breaks the `sl` dual row
        for k in 1..6 {
            assert!(closed_form_is_valid(ModelKind::NonCriticalKDual {
                m: k + 2,
                k
            }));
            assert!(!closed_form_is_valid(ModelKind::NonCriticalKDual {
                m: k + 1,
                k
            }));
        }
        // lambda_2 < 0 at m = 3
        assert!(!closed_form_is_valid(ModelKind::Case1NotM1Dual { m: 3 }));
        assert!(!closed_form_is_valid(ModelKind::Case2Dual { m: 3 }));
        assert!(closed_form_is_valid(ModelKind::Case1NotM1Dual { m: 4 }));
        // the primal assignment stays feasible at m = 3 but is not optimal there
        assert!(closed_form_is_valid(ModelKind::Case1NotM1 { m: 3 }));
        let (_, x) = closed_form(ModelKind::Case1NotM1 { m: 3 }).unwrap();
        assert_eq!(x[x.len() - 1], rat(17, 15));
        assert!(rat(17, 15) < stated_optimum(ModelKind::Case1NotM1 { m: 3 }).unwrap());
    }

    #[test]
    fn closed_forms_at_small_parameters() {
        let c = closed_form_certificate(ModelKind::NonCriticalK { m: 5, k: 3 }).unwrap();
        assert_eq!(c.objective, rat(4, 5));
        let d = closed_form_certificate(ModelKind::NonCriticalKDual { m: 5, k: 3 }).unwrap();
        assert_eq!(d.values[5], rat(4, 5));
        let d = closed_form_certificate(ModelKind::Case1NotM1Dual { m: 4 }).unwrap();
        assert_eq!(d.objective, rat(25, 21));
    }
}
