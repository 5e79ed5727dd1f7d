//! Exact computation of Stirling numbers and Adelberg polynomials, and
//! verification, with explicit quotients, of prime-power congruences for
//! lacunary sums of products of binomial coefficients.
//!
//! Everything is exact: integers are arbitrary precision and fractions are
//! reduced rationals. There is no floating-point code path anywhere.
//!
//! Module map:
//! - [`exactnum`]: big integers/rationals, binomial and multinomial coefficients
//! - [`stirling`]: Stirling numbers of both kinds and the prime-modulus closed
//!   form for the first kind
//! - [`series`]: truncated formal power series used for generating-function checks
//! - [`adelberg`]: symbolic Adelberg A/B polynomials, partitions, compositions,
//!   divided differences, and integrality windows
//! - [`congruence`]: the congruence verifiers and their reports
//! - [`cli`]: the `lacuna` command-line surface

pub mod adelberg;
pub mod cli;
pub mod congruence;
pub mod exactnum;
pub mod series;
pub mod stirling;

/// Precondition violation raised by fallible operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{name} must be nonnegative, got {value}")]
    Negative { name: &'static str, value: i64 },
    #[error("{name} = {value} is not prime")]
    NotPrime { name: &'static str, value: i64 },
    #[error("{name} = {value} is out of range: expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: &'static str,
    },
    #[error("multinomial parts must be nonnegative and sum to the total")]
    MultinomialParts,
}

pub type Result<T> = std::result::Result<T, Error>;

pub use exactnum::{Int, Rat};
