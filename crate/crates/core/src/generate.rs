//! Seeded generators for the benchmark classes and the worst-case families.
//!
//! Every instance of a [`GenSpec`] draws from its own ChaCha8 stream: the
//! generator is seeded with `seed` and the stream number is the instance
//! index, so instances can be produced independently and in any order.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{Instance, ModelError, Time};

/// Identifier of the pseudo-random generator, recorded in suite manifests.
pub const RNG_ID: &str = "chacha8-rand0.8-stream-per-instance";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("invalid range [{a}, {b}]")]
    InvalidRange { a: Time, b: Time },
    #[error("non-uniform low range [{a}, {low_max}] is empty for b - a = {span}")]
    EmptyLowRange { a: Time, low_max: Time, span: Time },
    #[error("{family} needs m >= {min}, got {m}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        m: usize,
    },
    #[error("unknown instance class {0:?}")]
    UnknownClass(String),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InstanceClass {
    Uniform,
    Nonuniform,
    GrahamFamily,
    LptrevFamily,
}

impl InstanceClass {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceClass::Uniform => "uniform",
            InstanceClass::Nonuniform => "nonuniform",
            InstanceClass::GrahamFamily => "graham_family",
            InstanceClass::LptrevFamily => "lptrev_family",
        }
    }
}

impl fmt::Display for InstanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InstanceClass {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "uniform" => Ok(InstanceClass::Uniform),
            "nonuniform" | "non_uniform" | "non-uniform" => Ok(InstanceClass::Nonuniform),
            "graham_family" | "graham" => Ok(InstanceClass::GrahamFamily),
            "lptrev_family" | "lptrev" => Ok(InstanceClass::LptrevFamily),
            other => Err(GenError::UnknownClass(other.to_string())),
        }
    }
}

/// What to generate. For the two families `n`, `a` and `b` are ignored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub class: InstanceClass,
    pub a: Time,
    pub b: Time,
    pub m: usize,
    pub n: usize,
    pub seed: u64,
    pub count: usize,
}

/// Inclusive `(low, high)` processing time range.
pub type TimeRange = (Time, Time);

/// RNG for instance `index` of a spec seeded with `seed`.
pub fn instance_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn generate(spec: &GenSpec) -> Result<Vec<Instance>, GenError> {
    match spec.class {
        InstanceClass::Uniform => gen_uniform(spec),
        InstanceClass::Nonuniform => gen_nonuniform(spec),
        InstanceClass::GrahamFamily => Ok(vec![gen_graham_family(spec.m)?; spec.count]),
        InstanceClass::LptrevFamily => Ok(vec![gen_lptrev_family(spec.m)?; spec.count]),
    }
}

/// `count` instances with `n` times i.i.d. uniform on `[a, b]`.
pub fn gen_uniform(spec: &GenSpec) -> Result<Vec<Instance>, GenError> {
    if spec.a > spec.b {
        return Err(GenError::InvalidRange {
            a: spec.a,
            b: spec.b,
        });
    }
    (0..spec.count)
        .map(|idx| {
            let mut rng = instance_rng(spec.seed, idx);
            let times = (0..spec.n)
                .map(|_| rng.gen_range(spec.a..=spec.b))
                .collect();
            Ok(Instance::new(spec.m, times)?)
        })
        .collect()
}

/// Sub-ranges of the non-uniform class: `[ceil(0.9(b-a)), b]` and
/// `[a, floor(0.2(b-a))]`.
pub fn nonuniform_ranges(a: Time, b: Time) -> Result<(TimeRange, TimeRange), GenError> {
    if a < 1 || a >= b {
        return Err(GenError::InvalidRange { a, b });
    }
    let span = b - a;
    let high_min = (9 * span).div_ceil(10);
    let low_max = span / 5;
    if low_max < a {
        return Err(GenError::EmptyLowRange { a, low_max, span });
    }
    Ok(((high_min, b), (a, low_max)))
}

/// Number of jobs drawn from the high range: `round(0.98 n)`, halves up.
pub fn nonuniform_high_count(n: usize) -> usize {
    (98 * n + 50) / 100
}

/// 98% of the times from the high range, the rest from the low range, in
/// shuffled input order.
pub fn gen_nonuniform(spec: &GenSpec) -> Result<Vec<Instance>, GenError> {
    let ((high_min, high_max), (low_min, low_max)) = nonuniform_ranges(spec.a, spec.b)?;
    let high = nonuniform_high_count(spec.n);
    (0..spec.count)
        .map(|idx| {
            let mut rng = instance_rng(spec.seed, idx);
            let mut times: Vec<Time> = (0..spec.n)
                .map(|j| {
                    if j < high {
                        rng.gen_range(high_min..=high_max)
                    } else {
                        rng.gen_range(low_min..=low_max)
                    }
                })
                .collect();
            times.shuffle(&mut rng);
            Ok(Instance::new(spec.m, times)?)
        })
        .collect()
}

/// The classical `2m + 1` job instance where LPT meets Graham's bound: two
/// jobs each of `2m-1, 2m-2, ..., m+1` and three jobs of length `m`.
pub fn gen_graham_family(m: usize) -> Result<Instance, GenError> {
    if m == 0 {
        return Err(GenError::FamilyTooSmall {
            family: "graham_family",
            min: 1,
            m,
        });
    }
    let mut times = Vec::with_capacity(2 * m + 1);
    for t in ((m + 1)..=(2 * m - 1)).rev() {
        times.extend([t as Time, t as Time]);
    }
    times.extend([m as Time; 3]);
    Ok(Instance::new(m, times)?)
}

/// The `2m + 2` job family on which LPT-REV reaches `4m - 1` against an
/// optimum of `3m + 1`: `p_j = 2m - floor((j+1)/2)` for `j <= 2m - 2`, then
/// four jobs of length `m`.
pub fn gen_lptrev_family(m: usize) -> Result<Instance, GenError> {
    if m < 3 {
        return Err(GenError::FamilyTooSmall {
            family: "lptrev_family",
            min: 3,
            m,
        });
    }
    let times = (1..=2 * m + 2)
        .map(|j| {
            if j <= 2 * m - 2 {
                (2 * m - j.div_ceil(2)) as Time
            } else {
                m as Time
            }
        })
        .collect();
    Ok(Instance::new(m, times)?)
}

/// Benchmark layout: `a = 1`, `b` in {100, 1000, 10000}, `m` in {5, 10, 25},
/// `n` in {10, 50, 100, 500, 1000} with `m < n`, 10 instances per cell, for
/// both the uniform and the non-uniform class (780 instances).
///
/// Each cell gets its own seed derived from `seed` and the cell position.
pub fn benchmark_suite_specs(seed: u64) -> Vec<GenSpec> {
    const RANGES: [Time; 3] = [100, 1000, 10000];
    const MACHINES: [usize; 3] = [5, 10, 25];
    const JOBS: [usize; 5] = [10, 50, 100, 500, 1000];
    let mut specs = Vec::new();
    for class in [InstanceClass::Nonuniform, InstanceClass::Uniform] {
        for b in RANGES {
            for m in MACHINES {
                for n in JOBS.into_iter().filter(|&n| m < n) {
                    let cell = specs.len() as u64;
                    specs.push(GenSpec {
                        class,
                        a: 1,
                        b,
                        m,
                        n,
                        seed: mix_seed(seed, cell),
                        count: 10,
                    });
                }
            }
        }
    }
    specs
}

/// SplitMix64 finalizer over `seed + cell`.
fn mix_seed(seed: u64, cell: u64) -> u64 {
    let mut z = seed.wrapping_add(cell.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
