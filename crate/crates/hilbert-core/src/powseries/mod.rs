//! Exact truncated power-series and polynomial arithmetic over
//! arbitrary-precision integers, plus generators for the built-in
//! coefficient series.
//!
//! Truncation orders are inclusive: a series of order `N` carries exactly
//! `N + 1` coefficients. Binary operations require equal orders; there is no
//! implicit resizing.

mod generate;
mod poly;
mod rational;
mod series;

pub use generate::{
    parse_coefficients, parse_series_spec, read_coefficient_file, MultiplicativeMap, SeriesSpec,
};
pub use poly::IntPoly;
pub use rational::{normalize_rational, RationalFn};
pub use series::{expand_rational, IntSeries};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Errors produced by series and polynomial operations.
#[derive(Debug, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("denominator constant term {constant} is not a unit; cannot invert as a power series")]
    NonUnitConstantTerm { constant: BigInt },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("denominator has zero constant term")]
    ZeroConstantTerm,
    #[error("reduced denominator has constant term {constant}; no canonical integer form exists")]
    NotCanonicalizable { constant: BigInt },
    #[error("invalid series spec: {0}")]
    InvalidSpec(String),
    #[error("cannot parse polynomial {input:?}: {message}")]
    PolyParse { input: String, message: String },
    #[error("coefficient file line {line}: {message}")]
    CoefficientFile { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Binomial coefficient C(n, k) as an exact big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut result = BigInt::one();
    for i in 1..=k {
        result *= BigInt::from(n - k + i);
        result /= BigInt::from(i);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::from(0));
        assert_eq!(binomial(10, 10), BigInt::from(1));
        assert_eq!(binomial(52, 5), BigInt::from(2_598_960u64));
    }
}
