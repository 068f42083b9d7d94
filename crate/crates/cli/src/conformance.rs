use std::fmt;

use pcmax_core::bounds::{
    aposteriori_check, graham_bound, lpt_a_posteriori_ceiling, lpt_rev_bound, r2_bound,
};
use pcmax_core::generate::instance_rng;
use pcmax_core::{
    combine, exact_opt, lower_bounds, lpt, lpt_rev, multifit, slack_heuristic, Instance, Time,
};
use rand::Rng;
use rayon::prelude::*;

#[derive(Debug, Clone)]
pub struct Violation {
    pub machines: usize,
    pub times: Vec<Time>,
    pub check: &'static str,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: m={} times={:?}",
            self.check, self.machines, self.times
        )
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub exhaustive: usize,
    pub random: usize,
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Names of every bound that `instance` violates.
pub fn check_instance(x: &Instance) -> Vec<&'static str> {
    let m = x.machines();
    let n = x.n();
    let mut failed = Vec::new();
    let opt = exact_opt(x, u64::MAX)
        .optimum()
        .expect("unlimited search is exact");
    let l = lpt(x);
    let lr = lpt_rev(x).schedule;

    if l.ratio_to(opt) > graham_bound(m).expect("m >= 1") {
        failed.push("lpt <= 4/3 - 1/(3m)");
    }
    if l.ratio_to(opt) > lpt_a_posteriori_ceiling(l.critical_pos(), m) {
        failed.push("lpt <= ceiling of critical position");
    }
    if !aposteriori_check(x, &l, opt).all_pass() {
        failed.push("lpt a-posteriori checks");
    }
    if m >= 2 {
        if lr.ratio_to(opt) > lpt_rev_bound(m).expect("m >= 2") {
            failed.push("lpt_rev <= its bound");
        }
        if n <= 2 * m && l.ratio_to(opt) > r2_bound(m).expect("m >= 2") {
            failed.push("lpt <= 4/3 - 1/(3(m-1)) when n <= 2m");
        }
    }
    if m == 2 && n == 5 && lr.makespan() != opt {
        failed.push("lpt_rev optimal on m=2, n=5");
    }
    let lb = lower_bounds(x).lb_best_ceil();
    let heuristics = [
        l.makespan(),
        lr.makespan(),
        slack_heuristic(x).makespan(),
        multifit(x, 7).makespan(),
        combine(x, 7).makespan(),
    ];
    if opt < lb || heuristics.iter().any(|&z| z < opt) {
        failed.push("lb <= opt <= heuristic");
    }
    failed
}

/// Non-decreasing tuples of length `n` over `lo..=hi`.
fn multisets(n: usize, lo: Time, hi: Time) -> Vec<Vec<Time>> {
    let mut out = Vec::new();
    let mut v = vec![lo; n];
    loop {
        out.push(v.clone());
        let Some(i) = (0..n).rev().find(|&i| v[i] < hi) else {
            return out;
        };
        let t = v[i] + 1;
        v[i..].iter_mut().for_each(|w| *w = t);
    }
}

/// `m` in {2, 3}, `n <= 8`, every multiset of times in `1..=6`.
pub fn exhaustive_cases() -> Vec<(usize, Vec<Time>)> {
    let mut cases = Vec::new();
    for m in [2, 3] {
        for n in 1..=8 {
            cases.extend(multisets(n, 1, 6).into_iter().map(|t| (m, t)));
        }
    }
    cases
}

/// Random case `i`: `m <= 4`, `n <= 12`, times up to 10 or 100.
pub fn random_case(seed: u64, i: usize) -> (usize, Vec<Time>) {
    let mut rng = instance_rng(seed, i);
    let m = rng.gen_range(1..=4);
    let n = rng.gen_range(1..=12);
    let hi = if rng.gen_bool(0.5) { 10 } else { 100 };
    (m, (0..n).map(|_| rng.gen_range(1..=hi)).collect())
}

fn sweep(cases: impl IntoParallelIterator<Item = (usize, Vec<Time>)>) -> Vec<Violation> {
    cases
        .into_par_iter()
        .flat_map_iter(|(m, times)| {
            let x = Instance::new(m, times.clone()).expect("valid case");
            check_instance(&x).into_iter().map(move |check| Violation {
                machines: m,
                times: times.clone(),
                check,
            })
        })
        .collect()
}

pub fn conformance(trials: usize, seed: u64) -> Report {
    let exhaustive = exhaustive_cases();
    let mut report = Report {
        exhaustive: exhaustive.len(),
        random: trials,
        violations: sweep(exhaustive),
    };
    report.violations.extend(sweep(
        (0..trials).into_par_iter().map(|i| random_case(seed, i)),
    ));
    report
}
