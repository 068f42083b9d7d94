use std::fmt;

use num_traits::Zero;
use pcmax_lp::models::stated_optimum;
use pcmax_lp::{
    build_model, check_certificate, check_pair, closed_form_certificate, simplex_solve, LpOutcome,
    ModelKind, Rational, TripleCase,
};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertStatus {
    Pass,
    Fail,
    None,
}

impl fmt::Display for CertStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertStatus::Pass => "pass",
            CertStatus::Fail => "FAIL",
            CertStatus::None => "none",
        })
    }
}

/// Result of verifying one model.
#[derive(Debug, Clone)]
pub struct ModelCheck {
    pub kind: ModelKind,
    pub optimum: Option<Rational>,
    pub expected: Option<Rational>,
    pub certificate: CertStatus,
    /// Simplex optimum minus the simplex optimum of the mechanical dual,
    /// or the primal/dual certificate gap when a certified pair exists.
    pub gap: Option<Rational>,
}

impl ModelCheck {
    pub fn ok(&self) -> bool {
        self.optimum.is_some()
            && (self.expected.is_none() || self.expected == self.optimum)
            && self.certificate != CertStatus::Fail
            && self.gap.as_ref().is_some_and(Zero::is_zero)
    }
}

impl fmt::Display for ModelCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<Rational>| v.as_ref().map_or("-".to_string(), |r| r.to_string());
        write!(
            f,
            "{:<36} opt={:<10} expected={:<10} cert={:<4} gap={:<4} {}",
            self.kind.to_string(),
            show(&self.optimum),
            show(&self.expected),
            self.certificate,
            show(&self.gap),
            if self.ok() { "ok" } else { "MISMATCH" }
        )
    }
}

/// Every model of the battery: the non-critical family for `k <= k_max`,
/// the `2m+1` families and their duals for `m <= m_max`, and the fixed
/// small-`m` models.
pub fn battery(m_max: usize, k_max: usize) -> Vec<ModelKind> {
    let mut kinds = Vec::new();
    for k in 1..=k_max {
        for m in k + 2..=m_max {
            kinds.push(ModelKind::NonCriticalK { m, k });
            kinds.push(ModelKind::NonCriticalKReduced { m, k });
            kinds.push(ModelKind::NonCriticalKDual { m, k });
        }
    }
    for m in 3..=m_max.min(8) {
        kinds.push(ModelKind::Slack76 { m });
    }
    for m in 3..=m_max {
        kinds.push(ModelKind::Case1NotM1 { m });
        kinds.push(ModelKind::Case1NotM1Dual { m });
        kinds.push(ModelKind::Case2 { m });
        kinds.push(ModelKind::Case2Dual { m });
    }
    for m in 2..=4 {
        kinds.push(ModelKind::ThreePerMachine { m });
    }
    for n in [10, 11] {
        for case in [TripleCase::TopThreeOnTwo, TripleCase::TopThreeOnThree] {
            kinds.push(ModelKind::TwoTripleMachines { m: 4, n, case });
        }
    }
    for case in [
        TripleCase::TPrime1And6,
        TripleCase::TPrime2And5,
        TripleCase::TPrime3And4,
    ] {
        kinds.push(ModelKind::TwoTripleMachines { m: 3, n: 8, case });
    }
    kinds
}

fn dual_partner(kind: ModelKind) -> Option<ModelKind> {
    match kind {
        ModelKind::NonCriticalK { m, k } | ModelKind::NonCriticalKReduced { m, k } => {
            Some(ModelKind::NonCriticalKDual { m, k })
        }
        ModelKind::Case1NotM1 { m } => Some(ModelKind::Case1NotM1Dual { m }),
        ModelKind::Case2 { m } => Some(ModelKind::Case2Dual { m }),
        _ => None,
    }
}

pub fn check_model(kind: ModelKind) -> ModelCheck {
    let expected = stated_optimum(kind);
    let Ok(model) = build_model(kind) else {
        return ModelCheck {
            kind,
            optimum: None,
            expected,
            certificate: CertStatus::None,
            gap: None,
        };
    };
    let optimum = match simplex_solve(&model) {
        LpOutcome::Optimal { value, .. } => Some(value),
        _ => None,
    };
    let mut gap = match (&optimum, simplex_solve(&model.dual())) {
        (Some(p), LpOutcome::Optimal { value, .. }) => Some(p - value),
        _ => None,
    };

    let certificate = match closed_form_certificate(kind) {
        Err(_) => CertStatus::None,
        Ok(cert) => {
            let pair = dual_partner(kind).and_then(|d| {
                let dual_cert = closed_form_certificate(d).ok()?;
                check_pair(&model, &cert, &build_model(d).ok()?, &dual_cert).ok()
            });
            match pair {
                Some(report) => {
                    let proves = report.proves_optimality();
                    gap = Some(report.gap);
                    if proves {
                        CertStatus::Pass
                    } else {
                        CertStatus::Fail
                    }
                }
                None => match check_certificate(&model, &cert) {
                    Ok(r) if r.is_valid() => CertStatus::Pass,
                    _ => CertStatus::Fail,
                },
            }
        }
    };
    ModelCheck {
        kind,
        optimum,
        expected,
        certificate,
        gap,
    }
}

/// Checks the whole battery in parallel; results follow [`battery`] order.
pub fn verify_lp(m_max: usize, k_max: usize) -> Vec<ModelCheck> {
    battery(m_max, k_max)
        .into_par_iter()
        .map(check_model)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcmax_lp::rat;

    #[test]
    fn small_battery_passes() {
        let checks = verify_lp(6, 2);
        assert!(
            checks.iter().all(ModelCheck::ok),
            "{:#?}",
            checks.iter().find(|c| !c.ok())
        );
        let certified = checks
            .iter()
            .filter(|c| c.certificate == CertStatus::Pass)
            .count();
        // k=1: m=3..6, k=2: m=4..6, three kinds each; Case families m=4..6
        assert_eq!(certified, 3 * (4 + 3) + 4 * 3);
    }

    #[test]
    fn wrong_expectation_is_a_mismatch() {
        let mut c = check_model(ModelKind::Slack76 { m: 3 });
        assert!(c.ok());
        c.expected = Some(rat(8, 7));
        assert!(!c.ok());
        assert!(c.to_string().ends_with("MISMATCH"));
    }
}
