//! Constructive list-scheduling rules: plain List Scheduling, LPT, LPT with a
//! pre-loaded job set, LPT-REV and the tuple-slack heuristic SLACK.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::model::{evaluate, CriticalInfo, Instance, ModelError, PartialSchedule, Schedule, Time};

/// Assigns `jobs` in order, each to a currently least-loaded machine (lowest
/// index on ties), on top of `seed`.
///
/// The seed and the list together must cover every job exactly once.
pub fn list_scheduling(
    instance: &Instance,
    jobs: &[usize],
    seed: Option<&PartialSchedule>,
) -> Result<Schedule, ModelError> {
    let m = instance.machines();
    let mut partial = match seed {
        Some(s) => {
            if s.loads().len() != m {
                return Err(ModelError::MachineOutOfRange {
                    machine: s.loads().len().saturating_sub(1),
                    m,
                });
            }
            s.clone()
        }
        None => PartialSchedule::new(m),
    };

    let mut heap: BinaryHeap<Reverse<(Time, usize)>> = partial
        .loads()
        .iter()
        .enumerate()
        .map(|(i, &load)| Reverse((load, i)))
        .collect();
    for &job in jobs {
        let Reverse((load, machine)) = heap.pop().expect("m >= 1");
        partial.place(instance, machine, job)?;
        heap.push(Reverse((load + instance.time(job), machine)));
    }
    evaluate(instance, partial.into_machines())
}

/// Longest Processing Time first.
pub fn lpt(instance: &Instance) -> Schedule {
    let order: Vec<usize> = (0..instance.n()).collect();
    list_scheduling(instance, &order, None).expect("sorted order is a permutation")
}

/// `LPT(S)`: the jobs of `prefix` go together on machine 0 first (in sorted
/// order), then the remaining jobs are list-scheduled in sorted order.
pub fn lpt_prefix(instance: &Instance, prefix: &[usize]) -> Result<Schedule, ModelError> {
    let n = instance.n();
    let mut in_prefix = vec![false; n];
    for &j in prefix {
        if j >= n {
            return Err(ModelError::JobOutOfRange { job: j, n });
        }
        if std::mem::replace(&mut in_prefix[j], true) {
            return Err(ModelError::DuplicateJob(j));
        }
    }
    let mut seed = PartialSchedule::new(instance.machines());
    for j in (0..n).filter(|&j| in_prefix[j]) {
        seed.place(instance, 0, j)?;
    }
    let rest: Vec<usize> = (0..n).filter(|&j| !in_prefix[j]).collect();
    list_scheduling(instance, &rest, Some(&seed))
}

/// Which of the three LPT-REV candidates was returned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LptRevChoice {
    Lpt,
    CriticalJobFirst,
    CriticalTupleFirst,
}

#[derive(Debug, Clone)]
pub struct LptRev {
    pub schedule: Schedule,
    /// LPT makespan.
    pub z1: Time,
    /// `LPT({j'})` makespan.
    pub z2: Time,
    /// `LPT({j'-k+1, ..., j'})` makespan.
    pub z3: Time,
    pub choice: LptRevChoice,
}

/// LPT-REV: the best of LPT, LPT with its critical job loaded first, and LPT
/// with the critical job and its `k - 1` predecessors in sorted order loaded
/// first. Ties prefer the earlier candidate.
pub fn lpt_rev(instance: &Instance) -> LptRev {
    let first = lpt(instance);
    let CriticalInfo { job, position, .. } = first.critical_info();

    let single = lpt_prefix(instance, &[job]).expect("valid job");
    // The tuple is truncated at job 0 when k exceeds j' + 1.
    let start = (job + 1).saturating_sub(position);
    let tuple: Vec<usize> = (start..=job).collect();
    let block = lpt_prefix(instance, &tuple).expect("valid jobs");

    let (z1, z2, z3) = (first.makespan(), single.makespan(), block.makespan());
    let (schedule, choice) = if z1 <= z2 && z1 <= z3 {
        (first, LptRevChoice::Lpt)
    } else if z2 <= z3 {
        (single, LptRevChoice::CriticalJobFirst)
    } else {
        (block, LptRevChoice::CriticalTupleFirst)
    };
    LptRev {
        schedule,
        z1,
        z2,
        z3,
        choice,
    }
}

/// One group of `m` consecutive sorted jobs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleSlack {
    pub index: usize,
    /// Real jobs of the tuple, longest first.
    pub members: Vec<usize>,
    /// Zero-length padding jobs completing the last tuple.
    pub dummies: usize,
    /// Longest minus shortest member, counting padding as zero.
    pub slack: Time,
}

/// Splits the sorted jobs into `ceil(n/m)` tuples and computes their slack.
pub fn slack_tuples(instance: &Instance) -> Vec<TupleSlack> {
    let m = instance.machines();
    let p = instance.times();
    (0..instance.n())
        .collect::<Vec<_>>()
        .chunks(m)
        .enumerate()
        .map(|(index, chunk)| {
            let dummies = m - chunk.len();
            let last = if dummies > 0 {
                0
            } else {
                p[*chunk.last().unwrap()]
            };
            TupleSlack {
                index,
                members: chunk.to_vec(),
                dummies,
                slack: p[chunk[0]] - last,
            }
        })
        .collect()
}

/// The processing order SLACK feeds to list scheduling: tuples by
/// non-increasing slack (stable), padding dropped.
pub fn slack_order(instance: &Instance) -> Vec<usize> {
    let mut tuples = slack_tuples(instance);
    tuples.sort_by_key(|t| Reverse(t.slack));
    tuples.into_iter().flat_map(|t| t.members).collect()
}

/// SLACK: list scheduling over the slack-sorted tuple order.
pub fn slack_heuristic(instance: &Instance) -> Schedule {
    list_scheduling(instance, &slack_order(instance), None).expect("slack order is a permutation")
}

/// Critical job, its position `k`, and the critical machine of a schedule.
pub fn critical_info(schedule: &Schedule) -> CriticalInfo {
    schedule.critical_info()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(m: usize, p: &[Time]) -> Instance {
        Instance::new(m, p.to_vec()).unwrap()
    }

    #[test]
    fn list_scheduling_in_given_order() {
        let i = inst(2, &[3, 3, 2, 2, 2]);
        let s = list_scheduling(&i, &[0, 1, 2, 3, 4], None).unwrap();
        assert_eq!(s.loads(), &[7, 5]);
        assert_eq!(s.makespan(), 7);
    }

    #[test]
    fn three_equal_jobs_spread_out() {
        let i = inst(3, &[4, 4, 4]);
        let s = list_scheduling(&i, &[0, 1, 2], None).unwrap();
        assert_eq!(s.machines(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(s.makespan(), 4);
    }

    #[test]
    fn empty_list_keeps_seed() {
        let i = inst(2, &[9]);
        let mut seed = PartialSchedule::new(2);
        seed.place(&i, 0, 0).unwrap();
        let s = list_scheduling(&i, &[], Some(&seed)).unwrap();
        assert_eq!(s.loads(), &[9, 0]);
        assert_eq!(s.makespan(), 9);
    }

    #[test]
    fn list_scheduling_rejects_repeats() {
        let i = inst(2, &[3, 2]);
        assert_eq!(
            list_scheduling(&i, &[0, 1, 0], None),
            Err(ModelError::DuplicateJob(0))
        );
        let mut seed = PartialSchedule::new(2);
        seed.place(&i, 1, 1).unwrap();
        assert_eq!(
            list_scheduling(&i, &[0, 1], Some(&seed)),
            Err(ModelError::DuplicateJob(1))
        );
        assert_eq!(
            list_scheduling(&i, &[0], None),
            Err(ModelError::MissingJob(1))
        );
    }

    #[test]
    fn lpt_examples() {
        assert_eq!(lpt(&inst(2, &[3, 3, 2, 2, 2])).makespan(), 7);
        assert_eq!(lpt(&inst(3, &[5, 5, 4, 4, 3, 3, 3])).makespan(), 11);
        assert_eq!(lpt(&inst(3, &[5, 5, 4, 4, 3, 3, 3, 3])).makespan(), 11);
    }

    #[test]
    fn lpt_prefix_examples() {
        let g = inst(2, &[3, 3, 2, 2, 2]);
        // S = {5} (1-based): 2 | 3 | 3 | 2 | 2 ends at loads (7, 5)
        let s = lpt_prefix(&g, &[4]).unwrap();
        assert_eq!(s.loads(), &[7, 5]);
        // the critical tuple {3,4,5} reaches the optimum
        assert_eq!(lpt_prefix(&g, &[2, 3, 4]).unwrap().makespan(), 6);
        assert_eq!(lpt_prefix(&g, &[]).unwrap(), lpt(&g));

        let fam = inst(3, &[5, 5, 4, 4, 3, 3, 3, 3]);
        // S = {5,6,7} (1-based)
        assert_eq!(lpt_prefix(&fam, &[4, 5, 6]).unwrap().makespan(), 12);
    }

    #[test]
    fn lpt_prefix_rejects_bad_sets() {
        let g = inst(2, &[3, 3, 2]);
        assert_eq!(
            lpt_prefix(&g, &[3]),
            Err(ModelError::JobOutOfRange { job: 3, n: 3 })
        );
        assert_eq!(lpt_prefix(&g, &[1, 1]), Err(ModelError::DuplicateJob(1)));
    }

    #[test]
    fn lpt_rev_on_family_and_graham() {
        let r = lpt_rev(&inst(3, &[5, 5, 4, 4, 3, 3, 3, 3]));
        assert_eq!((r.z1, r.z2, r.z3), (11, 11, 12));
        assert_eq!(r.schedule.makespan(), 11);
        assert_eq!(r.choice, LptRevChoice::Lpt);

        let r = lpt_rev(&inst(2, &[3, 3, 2, 2, 2]));
        assert_eq!((r.z1, r.z2, r.z3), (7, 7, 6));
        assert_eq!(r.schedule.makespan(), 6);
        assert_eq!(r.choice, LptRevChoice::CriticalTupleFirst);
    }

    #[test]
    fn lpt_rev_truncates_tuple_at_first_job() {
        // single machine: k = n, tuple is every job
        let r = lpt_rev(&inst(1, &[4, 3, 2]));
        assert_eq!((r.z1, r.z2, r.z3), (9, 9, 9));
    }

    #[test]
    fn slack_example() {
        let i = inst(2, &[5, 4, 4, 1]);
        let tuples = slack_tuples(&i);
        assert_eq!(
            tuples.iter().map(|t| t.slack).collect::<Vec<_>>(),
            vec![1, 3]
        );
        assert_eq!(slack_order(&i), vec![2, 3, 0, 1]);
        assert_eq!(slack_heuristic(&i).makespan(), 8);
    }

    #[test]
    fn slack_pads_last_tuple() {
        let i = inst(3, &[9, 8, 7, 5, 1]);
        let tuples = slack_tuples(&i);
        assert_eq!(tuples.len(), 2);
        assert_eq!(tuples[1].members, vec![3, 4]);
        assert_eq!(tuples[1].dummies, 1);
        assert_eq!(tuples[1].slack, 5);
        assert_eq!(slack_order(&i), vec![3, 4, 0, 1, 2]);
    }

    #[test]
    fn slack_with_fewer_jobs_than_machines() {
        let i = inst(4, &[6, 3, 2]);
        let s = slack_heuristic(&i);
        assert_eq!(s.makespan(), 6);
        assert!(s.machines().iter().all(|jobs| jobs.len() <= 1));
    }

    #[test]
    fn equal_slacks_reproduce_lpt() {
        let i = inst(2, &[9, 8, 6, 5, 3, 2]);
        assert!(slack_tuples(&i).iter().all(|t| t.slack == 1));
        assert_eq!(slack_heuristic(&i), lpt(&i));
    }

    #[test]
    fn critical_info_examples() {
        let c = critical_info(&lpt(&inst(2, &[3, 3, 2, 2, 2])));
        assert_eq!((c.job, c.position), (4, 3));
        let c = critical_info(&lpt(&inst(1, &[5])));
        assert_eq!((c.job, c.position, c.machine), (0, 1, 0));
        let s = lpt(&inst(3, &[5, 5, 4, 4, 3, 3, 3, 3]));
        let c = critical_info(&s);
        assert_eq!(s.loads()[c.machine], 11);
        assert_eq!(c.position, 3);
    }
}
