//! Exact linear programming for worst-case ratio models.
//!
//! * [`model`]: sparse LP representation and its mechanical dual
//! * [`simplex`]: two-phase simplex over arbitrary-precision rationals
//! * [`models`]: the ratio models and their closed-form solutions
//! * [`certificate`]: exact feasibility and optimality checking

pub mod certificate;
pub mod model;
pub mod models;
pub mod simplex;

pub use certificate::{check_certificate, check_pair, Certificate, CertificateError, Role};
pub use model::{Constraint, LpModel, Relation, Sense, VarSign, Variable};
pub use models::{build_model, closed_form_certificate, ModelKind, TripleCase};
pub use simplex::{simplex_solve, LpOutcome};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
