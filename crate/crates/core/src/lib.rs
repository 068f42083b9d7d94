//! Makespan minimization on identical parallel machines (`P||Cmax`).
//!
//! * [`model`]: instances, schedules, evaluation and lower bounds
//! * [`heuristics`]: List Scheduling, LPT, `LPT(S)`, LPT-REV and SLACK
//! * [`competitors`]: MULTIFIT and COMBINE
//! * [`exact`]: branch-and-bound optimum for small instances
//! * [`bounds`]: closed-form approximation ratios and a-posteriori checks
//! * [`generate`] / [`io`]: benchmark generators and file formats
//!
//! Jobs are addressed by sorted index throughout (index 0 is the longest).

pub mod bounds;
pub mod competitors;
pub mod exact;
pub mod generate;
pub mod heuristics;
pub mod io;
pub mod model;

pub use competitors::{combine, ffd_pack, multifit};
pub use exact::{exact_opt, ExactOutcome};
pub use heuristics::{list_scheduling, lpt, lpt_prefix, lpt_rev, slack_heuristic, LptRev};
pub use model::{evaluate, lower_bounds, BoundReport, Instance, Rational, Schedule, Time};
