use thiserror::Error;

use crate::exact::{fmt_rational, Rational};

/// Failures raised while evaluating a series or closed form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("division by zero: zero base raised to a negative power")]
    DivisionByZero,

    /// A denominator factor `(base; q)_index` vanished.
    #[error("denominator factor ({};q)_{index} vanishes", fmt_rational(.base))]
    DegenerateDenominator { base: Rational, index: usize },

    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
}

impl EvalError {
    pub(crate) fn degenerate(base: Rational, index: usize) -> Self {
        EvalError::DegenerateDenominator { base, index }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, EvalError::DegenerateDenominator { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed rational literal {0:?}: expected an integer or p/r")]
    Malformed(String),
    #[error("rational literal {0:?} has a zero denominator")]
    ZeroDenominator(String),
    #[error("unknown identity id {0:?}")]
    UnknownId(String),
}

/// Failures of the randomized verification engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("no identity ids were requested")]
    NoIds,

    #[error("unsatisfiable sampling constraints for {id}: {reason}")]
    UnsatisfiableConstraints { id: String, reason: String },

    #[error("resample budget exhausted for {id} after {attempts} degenerate points (last: {last_point})")]
    ResampleBudgetExhausted {
        id: String,
        attempts: usize,
        last_point: String,
    },

    #[error(transparent)]
    Eval(#[from] EvalError),
}
