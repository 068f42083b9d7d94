//! Problem and solution types for `P||Cmax`, plus schedule evaluation and
//! the classical lower bounds on the optimal makespan.
//!
//! Jobs are always addressed by their *sorted* index: position `0` is the
//! longest job. The input position of every job is kept so that reports can
//! refer back to the caller's numbering.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::bounds;

/// Exact arbitrary-precision fraction used for every ratio comparison.
pub type Rational = BigRational;

/// Processing times and makespans.
pub type Time = u64;

/// Builds the rational `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Lifts an integer time into the rationals.
pub fn rational_of(t: Time) -> Rational {
    Rational::from_integer(BigInt::from(t))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("an instance needs at least one machine")]
    NoMachines,
    #[error("an instance needs at least one job")]
    NoJobs,
    #[error("job {0} is assigned more than once")]
    DuplicateJob(usize),
    #[error("job {0} is not assigned to any machine")]
    MissingJob(usize),
    #[error("job index {job} out of range (n = {n})")]
    JobOutOfRange { job: usize, n: usize },
    #[error("machine index {machine} out of range (m = {m})")]
    MachineOutOfRange { machine: usize, m: usize },
}

/// A `P||Cmax` instance: `m` identical machines and `n` jobs.
///
/// Processing times are stored sorted non-increasing (stable with respect to
/// the input order), so `times()[0]` is `p_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    machines: usize,
    times: Vec<Time>,
    original: Vec<usize>,
}

impl Instance {
    pub fn new(machines: usize, times: Vec<Time>) -> Result<Self, ModelError> {
        if machines == 0 {
            return Err(ModelError::NoMachines);
        }
        if times.is_empty() {
            return Err(ModelError::NoJobs);
        }
        let mut order: Vec<usize> = (0..times.len()).collect();
        // stable: equal times keep their input order
        order.sort_by(|&a, &b| times[b].cmp(&times[a]));
        let sorted = order.iter().map(|&i| times[i]).collect();
        Ok(Instance {
            machines,
            times: sorted,
            original: order,
        })
    }

    pub fn machines(&self) -> usize {
        self.machines
    }

    pub fn n(&self) -> usize {
        self.times.len()
    }

    /// Sorted processing times, non-increasing.
    pub fn times(&self) -> &[Time] {
        &self.times
    }

    pub fn time(&self, job: usize) -> Time {
        self.times[job]
    }

    /// Input position of the job at sorted index `job`.
    pub fn original_index(&self, job: usize) -> usize {
        self.original[job]
    }

    pub fn total(&self) -> Time {
        self.times.iter().sum()
    }

    /// The same instance with every processing time multiplied by `factor`.
    pub fn scaled(&self, factor: Time) -> Instance {
        Instance {
            machines: self.machines,
            times: self.times.iter().map(|t| t * factor).collect(),
            original: self.original.clone(),
        }
    }

    /// Same jobs on a different number of machines.
    pub fn with_machines(&self, machines: usize) -> Result<Instance, ModelError> {
        if machines == 0 {
            return Err(ModelError::NoMachines);
        }
        Ok(Instance {
            machines,
            ..self.clone()
        })
    }
}

/// A machine assignment under construction: per-machine ordered job lists and
/// running loads. Used to seed list scheduling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialSchedule {
    machines: Vec<Vec<usize>>,
    loads: Vec<Time>,
}

impl PartialSchedule {
    pub fn new(machines: usize) -> Self {
        PartialSchedule {
            machines: vec![Vec::new(); machines],
            loads: vec![0; machines],
        }
    }

    /// Appends `job` to `machine`. Does not check for duplicates; that is
    /// done when the schedule is evaluated.
    pub fn place(
        &mut self,
        instance: &Instance,
        machine: usize,
        job: usize,
    ) -> Result<(), ModelError> {
        let m = self.machines.len();
        if machine >= m {
            return Err(ModelError::MachineOutOfRange { machine, m });
        }
        if job >= instance.n() {
            return Err(ModelError::JobOutOfRange {
                job,
                n: instance.n(),
            });
        }
        self.machines[machine].push(job);
        self.loads[machine] += instance.time(job);
        Ok(())
    }

    pub fn loads(&self) -> &[Time] {
        &self.loads
    }

    pub fn machines(&self) -> &[Vec<usize>] {
        &self.machines
    }

    pub fn contains(&self, job: usize) -> bool {
        self.machines.iter().any(|jobs| jobs.contains(&job))
    }

    pub fn into_machines(self) -> Vec<Vec<usize>> {
        self.machines
    }
}

/// Identification of the machine that determines the makespan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CriticalInfo {
    /// The critical job `j'`: last job on the critical machine.
    pub job: usize,
    /// `k`: number of jobs on the critical machine (`j'` is the k-th).
    pub position: usize,
    pub machine: usize,
}

/// A complete schedule: every job of the instance on exactly one machine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Schedule {
    machines: Vec<Vec<usize>>,
    loads: Vec<Time>,
    makespan: Time,
    critical: CriticalInfo,
}

impl Schedule {
    /// Per-machine ordered job lists (assignment order).
    pub fn machines(&self) -> &[Vec<usize>] {
        &self.machines
    }

    pub fn loads(&self) -> &[Time] {
        &self.loads
    }

    pub fn makespan(&self) -> Time {
        self.makespan
    }

    pub fn critical_machine(&self) -> usize {
        self.critical.machine
    }

    pub fn critical_job(&self) -> usize {
        self.critical.job
    }

    pub fn critical_pos(&self) -> usize {
        self.critical.position
    }

    pub fn critical_info(&self) -> CriticalInfo {
        self.critical
    }

    /// Machine of every job, indexed by sorted job index.
    pub fn machine_of(&self) -> Vec<usize> {
        let n = self.machines.iter().map(Vec::len).sum();
        let mut out = vec![0; n];
        for (i, jobs) in self.machines.iter().enumerate() {
            for &j in jobs {
                out[j] = i;
            }
        }
        out
    }

    /// Makespan ratio against `opt`, exactly. An all-zero instance has ratio 1.
    pub fn ratio_to(&self, opt: Time) -> Rational {
        if opt == 0 {
            assert_eq!(self.makespan, 0, "positive makespan against a zero optimum");
            return Rational::one();
        }
        Rational::new(BigInt::from(self.makespan), BigInt::from(opt))
    }
}

/// Builds a [`Schedule`] from per-machine ordered job lists.
///
/// `assignment[i]` lists the jobs of machine `i` in processing order; fewer
/// than `m` lists means the remaining machines are idle. Makespan ties are
/// broken towards the lowest machine index.
pub fn evaluate(instance: &Instance, assignment: Vec<Vec<usize>>) -> Result<Schedule, ModelError> {
    let m = instance.machines();
    let n = instance.n();
    if assignment.len() > m {
        return Err(ModelError::MachineOutOfRange {
            machine: assignment.len() - 1,
            m,
        });
    }
    let mut machines = assignment;
    machines.resize(m, Vec::new());

    let mut seen = vec![false; n];
    let mut loads = Vec::with_capacity(m);
    for jobs in &machines {
        let mut load = 0;
        for &j in jobs {
            if j >= n {
                return Err(ModelError::JobOutOfRange { job: j, n });
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(ModelError::DuplicateJob(j));
            }
            load += instance.time(j);
        }
        loads.push(load);
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(ModelError::MissingJob(missing));
    }

    let makespan = loads.iter().copied().max().unwrap_or(0);
    // With zero-length jobs the lowest machine at the makespan may be empty.
    let machine = (0..m)
        .find(|&i| loads[i] == makespan && !machines[i].is_empty())
        .expect("n >= 1 so some non-empty machine attains the makespan");
    let critical = CriticalInfo {
        job: *machines[machine].last().unwrap(),
        position: machines[machine].len(),
        machine,
    };
    Ok(Schedule {
        machines,
        loads,
        makespan,
        critical,
    })
}

/// Lower bounds on the optimal makespan and the ratio ceilings that apply to
/// the instance.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// `sum p / m`
    pub lb_avg: Rational,
    /// `p_1`
    pub lb_pmax: Time,
    /// `p_{n-2} + p_{n-1} + p_n`, only when `n >= 2m + 1`.
    pub lb_three_smallest: Option<Time>,
    pub lb_best: Rational,
    /// Worst-case ratio ceilings keyed by name (`"graham"`, `"lpt_rev"`).
    pub ratio_ceilings: BTreeMap<&'static str, Rational>,
}

impl BoundReport {
    /// Smallest integer not below `lb_best` (makespans are integral).
    pub fn lb_best_ceil(&self) -> Time {
        let c = self.lb_best.ceil();
        c.to_integer().to_u64().expect("bound fits in u64")
    }
}

pub fn lower_bounds(instance: &Instance) -> BoundReport {
    let m = instance.machines();
    let n = instance.n();
    let p = instance.times();
    let lb_avg = Rational::new(BigInt::from(instance.total()), BigInt::from(m));
    let lb_pmax = p[0];
    // With n >= 2m+1 some machine runs at least three jobs.
    let lb_three_smallest = (n > 2 * m).then(|| p[n - 3] + p[n - 2] + p[n - 1]);

    let mut lb_best = lb_avg.clone().max(rational_of(lb_pmax));
    if let Some(t) = lb_three_smallest {
        lb_best = lb_best.max(rational_of(t));
    }

    let mut ratio_ceilings = BTreeMap::new();
    if m == 1 {
        ratio_ceilings.insert("graham", Rational::one());
        ratio_ceilings.insert("lpt_rev", Rational::one());
    } else {
        ratio_ceilings.insert("graham", bounds::graham_bound(m).expect("m >= 1"));
        ratio_ceilings.insert("lpt_rev", bounds::lpt_rev_bound(m).expect("m >= 2"));
    }

    BoundReport {
        lb_avg,
        lb_pmax,
        lb_three_smallest,
        lb_best,
        ratio_ceilings,
    }
}
