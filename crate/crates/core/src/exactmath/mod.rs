//! Exact rational arithmetic and truncated formal-series calculus.
//!
//! Everything here is immutable-value, pure-function code: results are
//! bit-deterministic and safe to use from any number of threads.

pub mod biseries;
pub mod laurent;
pub mod qseries;
pub mod rational;
pub mod tqseries;

pub use biseries::BiSeries;
pub use laurent::LaurentSeries;
pub use qseries::QSeries;
pub use rational::Rational;
pub use tqseries::{TPoly, TQSeries};

use thiserror::Error;

/// Violations of the series-calculus contracts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("division by a series with zero constant term")]
    DivisorNotUnit,
    #[error("formal logarithm requires constant term exactly 1")]
    LogConstantNotOne,
    #[error("formal exponential requires constant term exactly 0")]
    ExpConstantNotZero,
    #[error("composition requires the inner series to have zero constant term")]
    ComposeConstantNotZero,
    #[error("reversion requires zero constant term")]
    ReversionConstantNotZero,
    #[error("reversion requires a nonzero linear coefficient")]
    ReversionZeroLinearTerm,
    #[error("coefficient of q^{q_power} is not t-free")]
    NotTFree { q_power: usize },
    #[error("laurent series truncated at w^{max_exp}, wanted w^{wanted}")]
    LaurentTruncated { wanted: i64, max_exp: i64 },
}
