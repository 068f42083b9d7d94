//! Exact optimum for desk-scale instances (roughly `n <= 14`, `m <= 5`) by
//! depth-first branch and bound.
//!
//! Jobs are branched in sorted order over machines; machines with equal
//! current load are interchangeable, so only the first of each load value is
//! tried. The search starts from the best of LPT-REV, SLACK and COMBINE and
//! stops as soon as it meets the combinatorial lower bound.

use crate::competitors::{combine, DEFAULT_ITERATIONS};
use crate::heuristics::{lpt_rev, slack_heuristic};
use crate::model::{evaluate, lower_bounds, Instance, Schedule, Time};

pub const DEFAULT_NODE_LIMIT: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactOutcome {
    Optimal {
        makespan: Time,
        schedule: Schedule,
        nodes: u64,
    },
    /// The node limit was hit; `best` is the incumbent, not a proven optimum.
    Unsolved {
        best: Schedule,
        lower_bound: Time,
        nodes: u64,
    },
}

impl ExactOutcome {
    pub fn optimum(&self) -> Option<Time> {
        match self {
            ExactOutcome::Optimal { makespan, .. } => Some(*makespan),
            ExactOutcome::Unsolved { .. } => None,
        }
    }

    pub fn schedule(&self) -> &Schedule {
        match self {
            ExactOutcome::Optimal { schedule, .. } => schedule,
            ExactOutcome::Unsolved { best, .. } => best,
        }
    }

    pub fn nodes(&self) -> u64 {
        match self {
            ExactOutcome::Optimal { nodes, .. } | ExactOutcome::Unsolved { nodes, .. } => *nodes,
        }
    }
}

struct Search<'a> {
    times: &'a [Time],
    lower: Time,
    upper: Time,
    loads: Vec<Time>,
    machine_of: Vec<usize>,
    best: Option<Vec<usize>>,
    nodes: u64,
    node_limit: u64,
}

enum Stop {
    NodeLimit,
}

impl Search<'_> {
    /// Returns `Ok(true)` once the lower bound is reached.
    fn branch(&mut self, job: usize) -> Result<bool, Stop> {
        self.nodes += 1;
        if self.nodes > self.node_limit {
            return Err(Stop::NodeLimit);
        }
        if job == self.times.len() {
            let makespan = self.loads.iter().copied().max().unwrap_or(0);
            if makespan < self.upper {
                self.upper = makespan;
                self.best = Some(self.machine_of.clone());
            }
            return Ok(self.upper <= self.lower);
        }
        let p = self.times[job];
        let m = self.loads.len();
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| (self.loads[i], i));
        let mut last_load = None;
        for i in order {
            let load = self.loads[i];
            if last_load == Some(load) {
                continue;
            }
            last_load = Some(load);
            if load + p >= self.upper {
                // machines are visited by increasing load
                break;
            }
            self.loads[i] += p;
            self.machine_of[job] = i;
            let done = self.branch(job + 1)?;
            self.loads[i] -= p;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn schedule_from(instance: &Instance, machine_of: &[usize]) -> Schedule {
    let mut machines = vec![Vec::new(); instance.machines()];
    for (j, &i) in machine_of.iter().enumerate() {
        machines[i].push(j);
    }
    evaluate(instance, machines).expect("complete assignment")
}

/// Provably optimal makespan, or [`ExactOutcome::Unsolved`] when more than
/// `node_limit` search nodes would be needed.
pub fn exact_opt(instance: &Instance, node_limit: u64) -> ExactOutcome {
    let lower = lower_bounds(instance).lb_best_ceil();
    let incumbent = [
        lpt_rev(instance).schedule,
        slack_heuristic(instance),
        combine(instance, DEFAULT_ITERATIONS),
    ]
    .into_iter()
    .min_by_key(Schedule::makespan)
    .expect("three candidates");

    if incumbent.makespan() <= lower {
        return ExactOutcome::Optimal {
            makespan: incumbent.makespan(),
            schedule: incumbent,
            nodes: 0,
        };
    }

    let mut search = Search {
        times: instance.times(),
        lower,
        upper: incumbent.makespan(),
        loads: vec![0; instance.machines()],
        machine_of: vec![0; instance.n()],
        best: None,
        nodes: 0,
        node_limit,
    };
    let finished = search.branch(0);
    let best = match &search.best {
        Some(assignment) => schedule_from(instance, assignment),
        None => incumbent,
    };
    match finished {
        Ok(_) => ExactOutcome::Optimal {
            makespan: best.makespan(),
            schedule: best,
            nodes: search.nodes,
        },
        Err(Stop::NodeLimit) => ExactOutcome::Unsolved {
            best,
            lower_bound: lower,
            nodes: search.nodes,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opt(m: usize, p: &[Time]) -> Time {
        exact_opt(&Instance::new(m, p.to_vec()).unwrap(), DEFAULT_NODE_LIMIT)
            .optimum()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(opt(2, &[3, 3, 2, 2, 2]), 6);
        assert_eq!(opt(3, &[5, 5, 4, 4, 3, 3, 3, 3]), 10);
        assert_eq!(opt(3, &[5, 5, 4, 4, 3, 3, 3]), 9);
        assert_eq!(opt(4, &[8, 3, 1]), 8);
    }

    #[test]
    fn optimum_above_lower_bound_needs_search() {
        assert_eq!(opt(2, &[4, 4, 4]), 8);
        assert_eq!(opt(2, &[5, 5, 5, 3]), 10);
    }

    #[test]
    fn node_limit_gives_unsolved_not_a_wrong_answer() {
        let inst = Instance::new(2, vec![4, 4, 4]).unwrap();
        match exact_opt(&inst, 1) {
            ExactOutcome::Unsolved {
                lower_bound, best, ..
            } => {
                assert_eq!(lower_bound, 6);
                assert!(best.makespan() >= 8);
            }
            other => panic!("expected unsolved, got {other:?}"),
        }
    }

    #[test]
    fn all_zero_jobs() {
        assert_eq!(opt(3, &[0, 0, 0, 0]), 0);
    }
}
