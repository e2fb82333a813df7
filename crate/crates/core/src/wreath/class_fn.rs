use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::{enumerate_types, WreathType};
use crate::error::{Error, Result};
use crate::group::{ClassFunction, FiniteGroup};
use crate::scalars::{big, Cyclotomic, Rational};

/// A class function on `G_n`, stored by type. Missing types are zero and
/// zero values are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathClassFunction {
    group: Arc<FiniteGroup>,
    degree: usize,
    values: BTreeMap<WreathType, Cyclotomic>,
}

pub(crate) fn z_rat(group: &FiniteGroup, rho: &WreathType) -> Rational {
    big(rho.z_rho(group))
}

pub(crate) fn z_inv(group: &FiniteGroup, rho: &WreathType) -> Rational {
    Rational::new(BigInt::from(1), rho.z_rho(group))
}

impl WreathClassFunction {
    pub fn zero(group: Arc<FiniteGroup>, degree: usize) -> Self {
        Self {
            group,
            degree,
            values: BTreeMap::new(),
        }
    }

    pub fn from_values(
        group: Arc<FiniteGroup>,
        degree: usize,
        values: impl IntoIterator<Item = (WreathType, Cyclotomic)>,
    ) -> Result<Self> {
        let mut f = Self::zero(group, degree);
        for (t, v) in values {
            f.set(t, v)?;
        }
        Ok(f)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> usize {
        self.group.exponent()
    }

    pub fn values(&self) -> &BTreeMap<WreathType, Cyclotomic> {
        &self.values
    }

    pub fn value(&self, t: &WreathType) -> Cyclotomic {
        self.values
            .get(t)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.modulus()))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn set(&mut self, t: WreathType, v: Cyclotomic) -> Result<()> {
        if t.degree() != self.degree {
            return Err(Error::DegreeMismatch(t.degree(), self.degree));
        }
        if let Some(&(c, _)) = t
            .entries()
            .iter()
            .find(|(c, _)| *c >= self.group.num_classes())
        {
            return Err(Error::InvalidParameter(format!("class {c} out of range")));
        }
        if v.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch(v.modulus(), self.modulus()));
        }
        if v.is_zero() {
            self.values.remove(&t);
        } else {
            self.values.insert(t, v);
        }
        Ok(())
    }

    /// Adds `v` to the value at `t` (no validation; internal use).
    pub(crate) fn accumulate(&mut self, t: WreathType, v: &Cyclotomic) {
        if v.is_zero() {
            return;
        }
        let entry = self
            .values
            .entry(t.clone())
            .or_insert_with(|| Cyclotomic::zero(v.modulus()));
        *entry += v;
        if entry.is_zero() {
            self.values.remove(&t);
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !(Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree, other.degree));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (t, v) in &other.values {
            out.accumulate(t.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.map_values(|v| v.scale(r))
    }

    pub fn scale_cyc(&self, r: &Cyclotomic) -> Self {
        self.map_values(|v| v * r)
    }

    pub fn neg(&self) -> Self {
        self.map_values(|v| -v)
    }

    fn map_values(&self, f: impl Fn(&Cyclotomic) -> Cyclotomic) -> Self {
        let mut out = Self::zero(self.group.clone(), self.degree);
        for (t, v) in &self.values {
            out.accumulate(t.clone(), &f(v));
        }
        out
    }

    /// Typewise product `⋆`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.group.clone(), self.degree);
        for (t, v) in &self.values {
            if let Some(w) = other.values.get(t) {
                out.accumulate(t.clone(), &(v * w));
            }
        }
        Ok(out)
    }

    /// `(F_1 | F_2) = Σ_ρ F_1(ρ) conj(F_2(ρ)) / Z_ρ`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.compatible(other)?;
        let mut acc = Cyclotomic::zero(self.modulus());
        for (t, v) in &self.values {
            if let Some(w) = other.values.get(t) {
                acc += &(v * &w.conj()).scale(&z_inv(&self.group, t));
            }
        }
        Ok(acc)
    }

    /// Coefficients in the `σ^ρ` basis: `F = Σ_ρ (F(ρ) / Z_ρ) σ^ρ`.
    pub fn sigma_coordinates(&self) -> BTreeMap<WreathType, Cyclotomic> {
        self.values
            .iter()
            .map(|(t, v)| (t.clone(), v.scale(&z_inv(&self.group, t))))
            .collect()
    }

    pub fn from_sigma_coordinates(
        group: Arc<FiniteGroup>,
        degree: usize,
        coords: impl IntoIterator<Item = (WreathType, Cyclotomic)>,
    ) -> Result<Self> {
        let mut f = Self::zero(group.clone(), degree);
        for (t, v) in coords {
            let val = v.scale(&z_rat(&group, &t));
            let cur = f.value(&t);
            f.set(t, &cur + &val)?;
        }
        Ok(f)
    }
}

impl Serialize for WreathClassFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(&WreathType, &Cyclotomic)> = self.values.iter().collect();
        pairs.serialize(s)
    }
}

/// `σ_r(c)`: value `r ζ_c` at the single `r`-cycle type over `c`.
pub fn sigma_r_c(group: &Arc<FiniteGroup>, r: usize, c: usize) -> WreathClassFunction {
    let mut f = WreathClassFunction::zero(group.clone(), r);
    let v = Cyclotomic::from_int(group.exponent(), (r * group.centralizer_order(c)) as i64);
    f.accumulate(WreathType::cycle(c, r), &v);
    f
}

/// `σ^ρ`: value `Z_ρ` at `ρ`, zero elsewhere.
pub fn sigma_rho(group: &Arc<FiniteGroup>, rho: &WreathType) -> WreathClassFunction {
    let mut f = WreathClassFunction::zero(group.clone(), rho.degree());
    f.accumulate(
        rho.clone(),
        &Cyclotomic::from_rational(group.exponent(), z_rat(group, rho)),
    );
    f
}

/// Trivial character `n` of `G_n`.
pub fn trivial_char(group: &Arc<FiniteGroup>, n: usize) -> WreathClassFunction {
    let one = Cyclotomic::one(group.exponent());
    let mut f = WreathClassFunction::zero(group.clone(), n);
    for t in enumerate_types(group, n) {
        f.accumulate(t, &one);
    }
    f
}

/// Sign character `1^n`: `(-1)^{n - ℓ(ρ)}` on type `ρ`.
pub fn sign_char(group: &Arc<FiniteGroup>, n: usize) -> WreathClassFunction {
    let m = group.exponent();
    let mut f = WreathClassFunction::zero(group.clone(), n);
    for t in enumerate_types(group, n) {
        let s = if (n - t.length()).is_multiple_of(2) {
            1
        } else {
            -1
        };
        f.accumulate(t, &Cyclotomic::from_int(m, s));
    }
    f
}

/// Degree-1 wreath class function corresponding to `V ∈ C(G)` (`G_1 = G`).
pub fn degree_one(v: &ClassFunction) -> WreathClassFunction {
    let group = v.group().clone();
    let mut f = WreathClassFunction::zero(group.clone(), 1);
    for c in 0..group.num_classes() {
        f.accumulate(WreathType::cycle(c, 1), v.value(c));
    }
    f
}
