use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{rat, Rational};
use crate::error::{Error, Result};

/// Power series in `q` truncated after `q^N`.
///
/// Binary operations first cut both operands to the smaller order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Series from explicit coefficients `c_0..c_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least its constant term"
        );
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// `q^k` truncated at `order`.
    pub fn monomial(order: usize, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        Self { coeffs: out }
    }

    /// `Σ_k a^k / k!`, defined only for a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut out = Self::one(n);
        let mut power = Self::one(n);
        for k in 1..=n {
            power = power
                .mul(self)
                .scale(&Rational::new(1.into(), (k as i64).into()));
            out = out.add(&power);
        }
        Ok(out)
    }

    /// Multiply by `(1 - q^r)^{-1}`: a strided prefix sum.
    fn div_one_minus(&mut self, r: usize) {
        for k in r..self.coeffs.len() {
            let prev = self.coeffs[k - r].clone();
            self.coeffs[k] += prev;
        }
    }

    /// Multiply by `(1 + q^r)`.
    fn mul_one_plus(&mut self, r: usize, sign: i64) {
        for k in (r..self.coeffs.len()).rev() {
            let prev = self.coeffs[k - r].clone();
            if sign > 0 {
                self.coeffs[k] += prev;
            } else {
                self.coeffs[k] -= prev;
            }
        }
    }

    /// Coefficients as integers, when all of them are integral.
    pub fn integer_coeffs(&self) -> Option<Vec<num_bigint::BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        parts.serialize(s)
    }
}

/// `Π_{r≥1} (1 - q^r)^{-e}` up to `q^order`; negative `e` gives the
/// reciprocal product.
pub fn euler_product(e: i64, order: usize) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for r in 1..=order {
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                s.div_one_minus(r);
            } else {
                s.mul_one_plus(r, -1);
            }
        }
    }
    s
}

/// `Π_{r≥1} (1 + q^r)^{d1} / (1 - q^r)^{d0}`, the graded dimension of the
/// supersymmetric algebra on `d0` even and `d1` odd generators per mode.
pub fn graded_dim_series(d0: usize, d1: usize, order: usize) -> TruncSeries {
    let mut s = euler_product(d0 as i64, order);
    for r in 1..=order {
        for _ in 0..d1 {
            s.mul_one_plus(r, 1);
        }
    }
    s
}
