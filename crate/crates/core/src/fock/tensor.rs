use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use super::FockElement;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalars::{big, binomial, Cyclotomic, Rational};
use crate::wreath::{z_rat, WreathType};

/// A formal sum of pure tensors `σ^{ρ_1} ⊗ ... ⊗ σ^{ρ_k}` in `F_G^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockTensor {
    group: Arc<FiniteGroup>,
    arity: usize,
    terms: BTreeMap<Vec<WreathType>, Cyclotomic>,
}

/// Coefficient of `σ^{ρ_1} ⊗ σ^{ρ_2}` in `Δσ^{ρ_1 ⊔ ρ_2}`: `Π C(m, k)` over
/// the cycle multiplicities.
fn split_coefficient(left: &WreathType, whole: &WreathType) -> Rational {
    whole
        .multiplicities()
        .into_iter()
        .fold(Rational::from_integer(1.into()), |acc, (c, r, m)| {
            acc * big(binomial(m as u64, left.multiplicity(c, r) as u64))
        })
}

impl FockTensor {
    pub fn zero(group: Arc<FiniteGroup>, arity: usize) -> Self {
        Self {
            group,
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_element(u: &FockElement) -> Self {
        let mut t = Self::zero(u.group().clone(), 1);
        for (rho, v) in u.sigma_coordinates() {
            t.accumulate(vec![rho], &v);
        }
        t
    }

    /// `1 ⊗ ... ⊗ 1`.
    pub fn unit(group: Arc<FiniteGroup>, arity: usize) -> Self {
        let mut t = Self::zero(group.clone(), arity);
        t.accumulate(
            vec![WreathType::empty(); arity],
            &Cyclotomic::one(group.exponent()),
        );
        t
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Vec<WreathType>, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, key: &[WreathType]) -> Cyclotomic {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(self.group.exponent()))
    }

    pub(crate) fn accumulate(&mut self, key: Vec<WreathType>, v: &Cyclotomic) {
        if v.is_zero() {
            return;
        }
        let e = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| Cyclotomic::zero(v.modulus()));
        *e += v;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn into_element(self) -> Result<FockElement> {
        if self.arity != 1 {
            return Err(Error::InvalidParameter(format!(
                "tensor of arity {} is not an element",
                self.arity
            )));
        }
        Ok(FockElement::from_sigma_coordinates(
            self.group,
            self.terms.into_iter().map(|(mut k, v)| (k.remove(0), v)),
        ))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.accumulate(k.clone(), &-v);
        }
        Ok(out)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.group.clone(), self.arity);
        for (k, v) in &self.terms {
            out.accumulate(k.clone(), &v.scale(r));
        }
        out
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if !(Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group) {
            return Err(Error::GroupMismatch);
        }
        if self.arity != other.arity {
            return Err(Error::DegreeMismatch(self.arity, other.arity));
        }
        Ok(())
    }

    /// `a ⊗ b`.
    pub fn outer(&self, other: &Self) -> Result<Self> {
        if !(Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group) {
            return Err(Error::GroupMismatch);
        }
        let mut out = Self::zero(self.group.clone(), self.arity + other.arity);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                out.accumulate(k, &(va * vb));
            }
        }
        Ok(out)
    }

    /// Product in the algebra `F_G^{⊗k}` (factorwise).
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.group.clone(), self.arity);
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let k = ka.iter().zip(kb).map(|(a, b)| a.union(b)).collect();
                out.accumulate(k, &(va * vb));
            }
        }
        Ok(out)
    }

    fn check_slot(&self, i: usize, width: usize) -> Result<()> {
        if i + width > self.arity {
            return Err(Error::InvalidParameter(format!(
                "slot {i} out of range for arity {}",
                self.arity
            )));
        }
        Ok(())
    }

    /// Applies `Δ` in slot `i`.
    pub fn comul_at(&self, i: usize) -> Result<Self> {
        self.check_slot(i, 1)?;
        let mut out = Self::zero(self.group.clone(), self.arity + 1);
        for (k, v) in &self.terms {
            for (left, right) in k[i].splittings() {
                let coef = split_coefficient(&left, &k[i]);
                let mut key = k[..i].to_vec();
                key.push(left);
                key.push(right);
                key.extend(k[i + 1..].iter().cloned());
                out.accumulate(key, &v.scale(&coef));
            }
        }
        Ok(out)
    }

    /// Multiplies slots `i` and `i + 1`.
    pub fn mul_at(&self, i: usize) -> Result<Self> {
        self.check_slot(i, 2)?;
        let mut out = Self::zero(self.group.clone(), self.arity - 1);
        for (k, v) in &self.terms {
            let mut key = k[..i].to_vec();
            key.push(k[i].union(&k[i + 1]));
            key.extend(k[i + 2..].iter().cloned());
            out.accumulate(key, v);
        }
        Ok(out)
    }

    /// Applies the counit in slot `i`.
    pub fn counit_at(&self, i: usize) -> Result<Self> {
        self.check_slot(i, 1)?;
        let mut out = Self::zero(self.group.clone(), self.arity - 1);
        for (k, v) in &self.terms {
            if k[i].degree() == 0 {
                let mut key = k.clone();
                key.remove(i);
                out.accumulate(key, v);
            }
        }
        Ok(out)
    }

    /// Applies the antipode in slot `i`.
    pub fn antipode_at(&self, i: usize, memo: &mut AntipodeMemo) -> Result<Self> {
        self.check_slot(i, 1)?;
        let mut out = Self::zero(self.group.clone(), self.arity);
        for (k, v) in &self.terms {
            for (t, c) in memo.basis(&k[i]) {
                let mut key = k.clone();
                key[i] = t.clone();
                out.accumulate(key, &v.scale(c));
            }
        }
        Ok(out)
    }

    /// Swaps slots `i` and `i + 1`.
    pub fn swap_at(&self, i: usize) -> Result<Self> {
        self.check_slot(i, 2)?;
        let mut out = Self::zero(self.group.clone(), self.arity);
        for (k, v) in &self.terms {
            let mut key = k.clone();
            key.swap(i, i + 1);
            out.accumulate(key, v);
        }
        Ok(out)
    }

    /// Values of the tensor as a function on `G_{n_1} × ... × G_{n_k}`:
    /// the coefficient of `σ^{ρ_1} ⊗ ... ⊗ σ^{ρ_k}` times `Π Z_{ρ_i}`.
    pub fn value_coordinates(&self) -> BTreeMap<Vec<WreathType>, Cyclotomic> {
        self.terms
            .iter()
            .map(|(k, v)| {
                let z = k.iter().fold(Rational::from_integer(1.into()), |acc, t| {
                    acc * z_rat(&self.group, t)
                });
                (k.clone(), v.scale(&z))
            })
            .collect()
    }
}

/// Antipode on basis vectors, computed by the graded-connected recursion
/// `S(x) = -Σ S(x') x''` over `Δx = Σ x' ⊗ x''` with `x' ≠ x`, `S(1) = 1`.
#[derive(Default)]
pub struct AntipodeMemo {
    cache: HashMap<WreathType, BTreeMap<WreathType, Rational>>,
}

impl AntipodeMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(&mut self, rho: &WreathType) -> &BTreeMap<WreathType, Rational> {
        if !self.cache.contains_key(rho) {
            let value = self.compute(rho);
            self.cache.insert(rho.clone(), value);
        }
        &self.cache[rho]
    }

    fn compute(&mut self, rho: &WreathType) -> BTreeMap<WreathType, Rational> {
        let mut out: BTreeMap<WreathType, Rational> = BTreeMap::new();
        if rho.degree() == 0 {
            out.insert(WreathType::empty(), Rational::from_integer(1.into()));
            return out;
        }
        for (left, right) in rho.splittings() {
            if &left == rho {
                continue;
            }
            let coef = split_coefficient(&left, rho);
            let s_left = self.basis(&left).clone();
            for (t, c) in s_left {
                let key = t.union(&right);
                let e = out
                    .entry(key.clone())
                    .or_insert_with(|| Rational::from_integer(0.into()));
                *e -= &coef * c;
                if *e == Rational::from_integer(0.into()) {
                    out.remove(&key);
                }
            }
        }
        out
    }
}

pub fn fock_comul(u: &FockElement) -> FockTensor {
    FockTensor::from_element(u)
        .comul_at(0)
        .expect("slot 0 exists")
}

/// Degree-0 component as a scalar.
pub fn counit(u: &FockElement) -> Cyclotomic {
    u.component(0).value(&WreathType::empty())
}

pub fn antipode(u: &FockElement) -> FockElement {
    let mut memo = AntipodeMemo::new();
    FockTensor::from_element(u)
        .antipode_at(0, &mut memo)
        .and_then(FockTensor::into_element)
        .expect("arity 1")
}
