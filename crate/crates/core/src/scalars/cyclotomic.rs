use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

/// An element of `Q[ζ]/(ζ^m - 1)`, stored as the reduced coefficient vector
/// `c_0 + c_1 ζ + ... + c_{m-1} ζ^{m-1}`.
///
/// This is the group-algebra quotient, not the cyclotomic field, so equality
/// is plain coefficient-wise equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(modulus: usize) -> Self {
        assert!(modulus > 0, "cyclotomic modulus must be positive");
        Self {
            coeffs: vec![Rational::zero(); modulus],
        }
    }

    pub fn one(modulus: usize) -> Self {
        Self::from_rational(modulus, Rational::one())
    }

    pub fn from_rational(modulus: usize, r: Rational) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(modulus: usize, n: i64) -> Self {
        Self::from_rational(modulus, super::rat(n))
    }

    /// `ζ^k` reduced modulo `m`.
    pub fn zeta_pow(modulus: usize, k: usize) -> Self {
        let mut z = Self::zero(modulus);
        z.coeffs[k % modulus] = Rational::one();
        z
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "cyclotomic modulus must be positive");
        Self { coeffs }
    }

    pub fn modulus(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if no positive power of `ζ` appears.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m = self.modulus();
        if let (Some(a), Some(b)) = (self.as_rational(), other.as_rational()) {
            return Ok(Self::from_rational(m, a * b));
        }
        let mut out = vec![Rational::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[(i + j) % m] += a * b;
                }
            }
        }
        Ok(Self { coeffs: out })
    }

    /// Complex conjugation `ζ^k ↦ ζ^{m-k}`.
    pub fn conj(&self) -> Self {
        let m = self.modulus();
        let mut out = vec![Rational::zero(); m];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[(m - k) % m] = c.clone();
        }
        Self { coeffs: out }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.modulus());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus() != other.modulus() {
            return Err(Error::ModulusMismatch(self.modulus(), other.modulus()));
        }
        Ok(())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if wrote {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic[m={}]({})", self.modulus(), self)
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_add(rhs).expect("cyclotomic modulus mismatch")
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_add(&-rhs)
            .expect("cyclotomic modulus mismatch")
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.checked_mul(rhs).expect("cyclotomic modulus mismatch")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.modulus(), rhs.modulus(), "cyclotomic modulus mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.modulus(), rhs.modulus(), "cyclotomic modulus mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}
