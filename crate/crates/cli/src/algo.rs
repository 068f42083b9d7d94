use std::fmt;
use std::time::{Duration, Instant};

use clap::ValueEnum;
use num_traits::One;
use pcmax_core::bounds::{graham_bound, lpt_a_posteriori_ceiling, lpt_rev_bound};
use pcmax_core::exact::ExactOutcome;
use pcmax_core::model::ratio;
use pcmax_core::{
    combine, exact_opt, lpt, lpt_rev, multifit, slack_heuristic, Instance, Rational, Schedule,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Algorithm {
    Lpt,
    LptRev,
    Slack,
    Multifit,
    Combine,
    Exact,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Lpt => "lpt",
            Algorithm::LptRev => "lpt_rev",
            Algorithm::Slack => "slack",
            Algorithm::Multifit => "multifit",
            Algorithm::Combine => "combine",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub iterations: usize,
    pub node_limit: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            iterations: pcmax_core::competitors::DEFAULT_ITERATIONS,
            node_limit: pcmax_core::exact::DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Run {
    pub algo: Algorithm,
    pub schedule: Schedule,
    /// Worst-case ratio guaranteed for this schedule, if any.
    pub ceiling: Option<Rational>,
    /// Whether an exact run proved optimality within the node limit.
    pub proven_optimal: bool,
    pub elapsed: Duration,
}

pub fn run(algo: Algorithm, instance: &Instance, opts: RunOptions) -> Run {
    let m = instance.machines();
    let start = Instant::now();
    let (schedule, proven_optimal) = match algo {
        Algorithm::Lpt => (lpt(instance), false),
        Algorithm::LptRev => (lpt_rev(instance).schedule, false),
        Algorithm::Slack => (slack_heuristic(instance), false),
        Algorithm::Multifit => (multifit(instance, opts.iterations), false),
        Algorithm::Combine => (combine(instance, opts.iterations), false),
        Algorithm::Exact => match exact_opt(instance, opts.node_limit) {
            ExactOutcome::Optimal { schedule, .. } => (schedule, true),
            ExactOutcome::Unsolved { best, .. } => (best, false),
        },
    };
    let elapsed = start.elapsed();

    let ceiling = match algo {
        _ if m == 1 => Some(Rational::one()),
        Algorithm::Lpt => Some(lpt_a_posteriori_ceiling(schedule.critical_pos(), m)),
        Algorithm::LptRev => lpt_rev_bound(m).ok(),
        // list scheduling in any order
        Algorithm::Slack => Some(ratio(2, 1) - ratio(1, m as i64)),
        // FFD never needs more than the initial upper capacity <= 2 OPT
        Algorithm::Multifit => Some(ratio(2, 1)),
        Algorithm::Combine => graham_bound(m).ok(),
        Algorithm::Exact => proven_optimal.then(Rational::one),
    };
    Run {
        algo,
        schedule,
        ceiling,
        proven_optimal,
        elapsed,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcmax_core::generate::gen_lptrev_family;

    #[test]
    fn every_algorithm_on_the_lptrev_family() {
        let x = gen_lptrev_family(3).unwrap();
        let makespans: Vec<_> = Algorithm::value_variants()
            .iter()
            .map(|&a| run(a, &x, RunOptions::default()).schedule.makespan())
            .collect();
        // lpt, lpt_rev, slack, multifit, combine, exact
        assert_eq!(makespans[0], 11);
        assert_eq!(makespans[1], 11);
        assert_eq!(makespans[5], 10);
        assert!(makespans.iter().all(|&z| z >= 10));
    }

    #[test]
    fn ceilings() {
        let x = gen_lptrev_family(3).unwrap();
        let r = run(Algorithm::LptRev, &x, RunOptions::default());
        assert_eq!(r.ceiling, Some(ratio(4, 3) - ratio(1, 6)));
        let r = run(Algorithm::Exact, &x, RunOptions::default());
        assert!(r.proven_optimal);
        assert_eq!(r.ceiling, Some(Rational::one()));
        let one = Instance::new(1, vec![3, 2]).unwrap();
        assert_eq!(
            run(Algorithm::Slack, &one, RunOptions::default()).ceiling,
            Some(Rational::one())
        );
    }
}
