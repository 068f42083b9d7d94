//! Bin-packing based competitors: MULTIFIT and COMBINE.
//!
//! MULTIFIT binary-searches the smallest bin capacity for which
//! First-Fit-Decreasing packs all jobs into at most `m` bins. COMBINE runs LPT
//! first and uses its makespan as the upper end of the MULTIFIT search,
//! returning the better of the two schedules.

use thiserror::Error;

use crate::heuristics::lpt;
use crate::model::{evaluate, Instance, Schedule, Time};

pub const DEFAULT_ITERATIONS: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PackError {
    #[error("capacity {capacity} is below the longest job {longest}")]
    CapacityTooSmall { capacity: Time, longest: Time },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    /// Jobs per bin in packing order.
    pub bins: Vec<Vec<usize>>,
    pub loads: Vec<Time>,
    /// At most `m` bins were used.
    pub fits: bool,
}

/// First-Fit-Decreasing with bins of size `capacity`.
pub fn ffd_pack(instance: &Instance, capacity: Time) -> Result<Packing, PackError> {
    let longest = instance.time(0);
    if capacity < longest {
        return Err(PackError::CapacityTooSmall { capacity, longest });
    }
    let mut bins: Vec<Vec<usize>> = Vec::new();
    let mut loads: Vec<Time> = Vec::new();
    for (j, &p) in instance.times().iter().enumerate() {
        match loads.iter().position(|&l| l + p <= capacity) {
            Some(b) => {
                bins[b].push(j);
                loads[b] += p;
            }
            None => {
                bins.push(vec![j]);
                loads.push(p);
            }
        }
    }
    let fits = bins.len() <= instance.machines();
    Ok(Packing { bins, loads, fits })
}

fn div_ceil(a: Time, b: Time) -> Time {
    a.div_ceil(b)
}

/// Binary search on the capacity over `[lower, upper]`, at most `iterations`
/// FFD calls after the initial probe of `upper`. Returns the packing of the
/// smallest feasible capacity seen, or `None` if `upper` itself does not fit.
fn search(instance: &Instance, lower: Time, upper: Time, iterations: usize) -> Option<Packing> {
    let mut best = ffd_pack(instance, upper).ok().filter(|p| p.fits)?;
    let (mut lo, mut hi) = (lower, upper);
    for _ in 0..iterations {
        if lo >= hi {
            break;
        }
        let mid = lo + (hi - lo) / 2;
        let packing = ffd_pack(instance, mid).expect("mid >= lower >= p_1");
        if packing.fits {
            hi = mid;
            best = packing;
        } else {
            lo = mid + 1;
        }
    }
    Some(best)
}

fn packing_schedule(instance: &Instance, packing: Packing) -> Schedule {
    evaluate(instance, packing.bins).expect("FFD places every job once on at most m bins")
}

/// Capacity interval `[max(sum/m, p_1), max(2 sum/m, p_1)]`, rounded up.
fn capacity_range(instance: &Instance) -> (Time, Time) {
    let m = instance.machines() as Time;
    let total = instance.total();
    let p1 = instance.time(0);
    (div_ceil(total, m).max(p1), div_ceil(2 * total, m).max(p1))
}

/// MULTIFIT with a fixed number of binary-search iterations.
pub fn multifit(instance: &Instance, iterations: usize) -> Schedule {
    let (lower, upper) = capacity_range(instance);
    // With capacity >= 2*sum/m first fit never opens more than m bins: any two
    // bins together exceed the capacity.
    let packing = search(instance, lower, upper, iterations)
        .expect("FFD always fits at capacity max(2 sum/m, p_1)");
    packing_schedule(instance, packing)
}

/// COMBINE: LPT, then MULTIFIT searching below the LPT makespan. Returns the
/// MULTIFIT schedule only if it is strictly better.
pub fn combine(instance: &Instance, iterations: usize) -> Schedule {
    let base = lpt(instance);
    let (lower, _) = capacity_range(instance);
    let upper = base.makespan();
    if lower >= upper {
        return base;
    }
    match search(instance, lower, upper, iterations) {
        Some(packing) => {
            let alt = packing_schedule(instance, packing);
            if alt.makespan() < base.makespan() {
                alt
            } else {
                base
            }
        }
        None => base,
    }
}
