//! Exact univariate polynomial and rational-function arithmetic over
//! arbitrary-precision rationals, with Laurent expansion at z = 0 and
//! at t = z - 1.

mod laurent;
mod poly;
mod ratfunc;

pub use laurent::{expand, Center, LaurentWindow};
pub use poly::{rat, ratq, Poly, Rational};
pub use ratfunc::RatFunc;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("division by zero rational function")]
    DivisionByZeroFunction,
}
