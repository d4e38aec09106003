//! Exact rational checking of terminating q-Watson type `4phi3` identities
//! and the auxiliary sums they are derived from.
//!
//! * [`exact`]: rational arithmetic, q-shifted factorials, Gaussian binomials.
//! * [`series`]: terminating basic hypergeometric series and finite sums.
//! * [`catalog`]: every identity as an LHS series paired with its closed form.
//! * [`verify`]: seeded random sampling, exact checking and JSON reports.

pub mod catalog;
pub mod error;
pub mod exact;
pub mod point;
pub mod report;
pub mod series;
pub mod verify;

pub use catalog::{IdentityCase, IdentityId};
pub use error::{EvalError, ParseError, VerifyError};
pub use exact::Rational;
pub use point::ParamPoint;
pub use series::{phi_eval, phi_eval_checked, SeriesSpec};
pub use verify::{run_suite, SampleConfig};
