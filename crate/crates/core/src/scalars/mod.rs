//! Exact scalars: rationals, cyclotomic values modulo `ζ^m - 1`, and
//! truncated power series.

mod cyclotomic;
mod linalg;
mod series;

pub use cyclotomic::Cyclotomic;
pub use linalg::{cyclotomic_rank, rank};
pub use series::{euler_product, graded_dim_series, TruncSeries};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

/// Binomial coefficient as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}
