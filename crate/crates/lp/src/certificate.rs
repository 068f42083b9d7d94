//! Exact checks of claimed LP solutions.

use std::fmt;

use thiserror::Error;

use crate::model::{LpModel, Relation, VarSign};
use crate::models::ModelKind;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Primal,
    Dual,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::Primal => "primal",
            Role::Dual => "dual",
        })
    }
}

/// A claimed solution: one value per model variable and its objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub kind: ModelKind,
    pub role: Role,
    pub values: Vec<Rational>,
    pub objective: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("{model}: certificate has {found} values, model has {expected} variables")]
    DimensionMismatch {
        model: String,
        expected: usize,
        found: usize,
    },
    #[error("expected a {expected} certificate, got a {found} one")]
    RoleMismatch { expected: Role, found: Role },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Constraint {
        label: String,
        activity: Rational,
        relation: Relation,
        rhs: Rational,
    },
    Sign {
        variable: String,
        value: Rational,
        sign: VarSign,
    },
    Objective {
        claimed: Rational,
        actual: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Constraint {
                label,
                activity,
                relation,
                rhs,
            } => write!(f, "[{label}] {activity} {relation} {rhs} fails"),
            Violation::Sign {
                variable,
                value,
                sign,
            } => write!(f, "{variable} = {value} violates {sign:?}"),
            Violation::Objective { claimed, actual } => {
                write!(f, "objective is {actual}, claimed {claimed}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub model: String,
    pub violations: Vec<Violation>,
}

impl CertificateReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every constraint, every sign condition and the claimed objective.
pub fn check_certificate(
    model: &LpModel,
    cert: &Certificate,
) -> Result<CertificateReport, CertificateError> {
    if cert.values.len() != model.num_vars() {
        return Err(CertificateError::DimensionMismatch {
            model: model.name.clone(),
            expected: model.num_vars(),
            found: cert.values.len(),
        });
    }
    let mut violations = Vec::new();
    for (var, value) in model.variables.iter().zip(&cert.values) {
        if !var.sign.admits(value) {
            violations.push(Violation::Sign {
                variable: var.name.clone(),
                value: value.clone(),
                sign: var.sign,
            });
        }
    }
    for con in &model.constraints {
        let activity = con.activity(&cert.values);
        if !con.relation.holds(&activity, &con.rhs) {
            violations.push(Violation::Constraint {
                label: con.label.clone(),
                activity,
                relation: con.relation,
                rhs: con.rhs.clone(),
            });
        }
    }
    let actual = model.objective_value(&cert.values);
    if actual != cert.objective {
        violations.push(Violation::Objective {
            claimed: cert.objective.clone(),
            actual,
        });
    }
    Ok(CertificateReport {
        model: model.name.clone(),
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub primal: CertificateReport,
    pub dual: CertificateReport,
    /// Primal objective minus dual objective.
    pub gap: Rational,
}

impl PairReport {
    /// Both solutions feasible with equal objectives: both are optimal.
    pub fn proves_optimality(&self) -> bool {
        self.primal.is_valid() && self.dual.is_valid() && num_traits::Zero::is_zero(&self.gap)
    }
}

pub fn check_pair(
    primal_model: &LpModel,
    primal: &Certificate,
    dual_model: &LpModel,
    dual: &Certificate,
) -> Result<PairReport, CertificateError> {
    for (cert, expected) in [(primal, Role::Primal), (dual, Role::Dual)] {
        if cert.role != expected {
            return Err(CertificateError::RoleMismatch {
                expected,
                found: cert.role,
            });
        }
    }
    Ok(PairReport {
        primal: check_certificate(primal_model, primal)?,
        dual: check_certificate(dual_model, dual)?,
        gap: primal_model.objective_value(&primal.values)
            - dual_model.objective_value(&dual.values),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{build_model, closed_form_certificate};
    use crate::rat;

    #[test]
    fn noncritical_pair_at_five_machines() {
        let (p, d) = (
            ModelKind::NonCriticalK { m: 5, k: 3 },
            ModelKind::NonCriticalKDual { m: 5, k: 3 },
        );
        let r = check_pair(
            &build_model(p).unwrap(),
            &closed_form_certificate(p).unwrap(),
            &build_model(d).unwrap(),
            &closed_form_certificate(d).unwrap(),
        )
        .unwrap();
        assert!(r.proves_optimality(), "{r:?}");
    }

    #[test]
    fn wrong_dimension_and_role() {
        let kind = ModelKind::NonCriticalK { m: 5, k: 3 };
        let model = build_model(kind).unwrap();
        let mut cert = closed_form_certificate(kind).unwrap();
        cert.values.pop();
        assert!(matches!(
            check_certificate(&model, &cert),
            Err(CertificateError::DimensionMismatch {
                expected: 7,
                found: 6,
                ..
            })
        ));
        let good = closed_form_certificate(kind).unwrap();
        assert!(matches!(
            check_pair(&model, &good, &model, &good),
            Err(CertificateError::RoleMismatch { .. })
        ));
    }

    #[test]
    fn wrong_claimed_objective_is_reported() {
        let kind = ModelKind::Case1NotM1 { m: 5 };
        let model = build_model(kind).unwrap();
        let mut cert = closed_form_certificate(kind).unwrap();
        cert.objective += rat(1, 100);
        let report = check_certificate(&model, &cert).unwrap();
        assert!(matches!(
            report.violations[..],
            [Violation::Objective { .. }]
        ));
    }
}
