//! Closed-form approximation ratios for LPT and LPT-REV, and the
//! a-posteriori checks an LPT schedule must pass once the optimum is known.
//!
//! Every formula is evaluated in exact rationals.

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::model::{ratio, rational_of, Instance, Rational, Schedule, Time};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("{formula} is defined for {requirement}, got m = {m}, k = {k:?}")]
    OutOfRange {
        formula: &'static str,
        requirement: &'static str,
        m: usize,
        k: Option<usize>,
    },
}

fn out_of_range(
    formula: &'static str,
    requirement: &'static str,
    m: usize,
    k: Option<usize>,
) -> BoundError {
    BoundError::OutOfRange {
        formula,
        requirement,
        m,
        k,
    }
}

fn int(v: usize) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Graham's bound `4/3 - 1/(3m)`: the worst case of LPT.
pub fn graham_bound(m: usize) -> Result<Rational, BoundError> {
    if m == 0 {
        return Err(out_of_range("graham_bound", "m >= 1", m, None));
    }
    Ok(ratio(4, 3) - Rational::one() / int(3 * m))
}

/// A-posteriori ratio `(k+1)/k - 1/(km)` of an LPT schedule whose critical
/// machine runs `k` jobs.
pub fn rk_bound(k: usize, m: usize) -> Result<Rational, BoundError> {
    if k == 0 || m == 0 {
        return Err(out_of_range("rk_bound", "k >= 1 and m >= 1", m, Some(k)));
    }
    Ok(int(k + 1) / int(k) - Rational::one() / int(k * m))
}

/// `4/3 - 1/(3(m-1))`: LPT with two jobs on the critical machine.
pub fn r2_bound(m: usize) -> Result<Rational, BoundError> {
    if m < 2 {
        return Err(out_of_range("r2_bound", "m >= 2", m, None));
    }
    Ok(ratio(4, 3) - Rational::one() / int(3 * (m - 1)))
}

/// `(k+1)/k - 1/(k(m-1))`: LPT when a non-critical machine runs at least `k`
/// jobs before the critical job. Valid for `m >= k + 2`.
pub fn noncritical_k_bound(k: usize, m: usize) -> Result<Rational, BoundError> {
    if k == 0 || m < k + 2 {
        return Err(out_of_range(
            "noncritical_k_bound",
            "k >= 1 and m >= k + 2",
            m,
            Some(k),
        ));
    }
    Ok(int(k + 1) / int(k) - Rational::one() / int(k * (m - 1)))
}

/// Worst-case guarantee of LPT-REV: `4/3 - 1/(3(m-1))` for `m >= 3`, `9/8`
/// for two machines.
pub fn lpt_rev_bound(m: usize) -> Result<Rational, BoundError> {
    match m {
        0 | 1 => Err(out_of_range("lpt_rev_bound", "m >= 2", m, None)),
        2 => Ok(ratio(9, 8)),
        _ => r2_bound(m),
    }
}

/// `4/3 - (7m-4)/(3(3m^2+m-1))`: LPT-REV when a job after the LPT critical
/// job becomes critical in one of the re-runs.
pub fn other_jobs_bound(m: usize) -> Result<Rational, BoundError> {
    if m < 2 {
        return Err(out_of_range("other_jobs_bound", "m >= 2", m, None));
    }
    Ok(ratio(4, 3) - int(7 * m - 4) / int(3 * (3 * m * m + m - 1)))
}

/// LPT coupled with LPT' on `2m + 1` jobs: `15/13` for `m = 3`,
/// `4/3 - 1/(2m-1)` for `m >= 4`.
pub fn case_bound_2m1(m: usize) -> Result<Rational, BoundError> {
    match m {
        0..=2 => Err(out_of_range("case_bound_2m1", "m >= 3", m, None)),
        3 => Ok(ratio(15, 13)),
        _ => Ok(ratio(4, 3) - Rational::one() / int(2 * m - 1)),
    }
}

/// `(4m-1)/(3m+1)`: ratio LPT-REV attains on the `2m + 2` job family.
pub fn lpt_rev_lower_family_ratio(m: usize) -> Result<Rational, BoundError> {
    if m < 3 {
        return Err(out_of_range(
            "lpt_rev_lower_family_ratio",
            "m >= 3",
            m,
            None,
        ));
    }
    Ok(int(4 * m - 1) / int(3 * m + 1))
}

/// Ceiling that applies to an LPT schedule with `k` jobs on its critical
/// machine: optimal for `k = 1`, the two-job bound for `k = 2` and the
/// generalized bound (never above Graham's) for `k >= 3`.
pub fn lpt_a_posteriori_ceiling(k: usize, m: usize) -> Rational {
    match (k, m) {
        (_, 1) | (0 | 1, _) => Rational::one(),
        (2, _) => r2_bound(m).expect("m >= 2"),
        _ => rk_bound(k, m).expect("k, m >= 1"),
    }
}

/// Outcome of [`aposteriori_check`] on one LPT schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct AposterioriReport {
    pub opt: Time,
    /// `p_{j'} > opt/3`
    pub long_critical_job: bool,
    /// Holds unless the critical job is long and the makespan is not optimal.
    pub critical_job_rule: bool,
    /// `makespan <= sum_{j <= j'} p_j / m + p_{j'} (1 - 1/m)`
    pub prefix_bound: Rational,
    pub prefix_bound_holds: bool,
    /// `makespan <= opt + p_{j'} (1 - 1/m)`
    pub opt_bound: Rational,
    pub opt_bound_holds: bool,
    /// Jobs violating `p <= opt / position`, as (job, 1-based position).
    pub positional_violations: Vec<(usize, usize)>,
}

impl AposterioriReport {
    pub fn all_pass(&self) -> bool {
        self.critical_job_rule
            && self.prefix_bound_holds
            && self.opt_bound_holds
            && self.positional_violations.is_empty()
    }
}

/// Checks the classical a-posteriori properties of an LPT schedule against
/// the exact optimum `opt`.
///
/// The checks assume the schedule was produced by LPT; on other schedules
/// they are merely informative.
pub fn aposteriori_check(instance: &Instance, schedule: &Schedule, opt: Time) -> AposterioriReport {
    let m = instance.machines();
    let crit = schedule.critical_job();
    let p_crit = instance.time(crit);
    let makespan = rational_of(schedule.makespan());

    let long_critical_job = 3 * p_crit > opt;
    let critical_job_rule = !long_critical_job || schedule.makespan() == opt;

    let tail = rational_of(p_crit) * (Rational::one() - Rational::one() / int(m));
    let prefix: Time = instance.times()[..=crit].iter().sum();
    let prefix_bound = rational_of(prefix) / int(m) + tail.clone();
    let opt_bound = rational_of(opt) + tail;

    let mut positional_violations = Vec::new();
    for jobs in schedule.machines() {
        for (pos, &j) in jobs.iter().enumerate() {
            if instance.time(j) * (pos as Time + 1) > opt {
                positional_violations.push((j, pos + 1));
            }
        }
    }

    AposterioriReport {
        opt,
        long_critical_job,
        critical_job_rule,
        prefix_bound_holds: makespan <= prefix_bound,
        prefix_bound,
        opt_bound_holds: makespan <= opt_bound,
        opt_bound,
        positional_violations,
    }
}
