use std::sync::Arc;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::scalars::{rat, Cyclotomic, Rational};

/// A class function on `G`, one cyclotomic value per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::InvalidParameter(format!(
                "expected {} class values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.modulus() != group.exponent()) {
            return Err(Error::ModulusMismatch(v.modulus(), group.exponent()));
        }
        Ok(Self { group, values })
    }

    pub fn from_rationals(group: Arc<FiniteGroup>, values: &[Rational]) -> Result<Self> {
        let m = group.exponent();
        Self::new(
            group,
            values
                .iter()
                .map(|r| Cyclotomic::from_rational(m, r.clone()))
                .collect(),
        )
    }

    pub fn from_ints(group: Arc<FiniteGroup>, values: &[i64]) -> Result<Self> {
        let vals: Vec<Rational> = values.iter().map(|&v| rat(v)).collect();
        Self::from_rationals(group, &vals)
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let m = group.exponent();
        let values = vec![Cyclotomic::zero(m); group.num_classes()];
        Self { group, values }
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let m = group.exponent();
        let values = vec![Cyclotomic::one(m); group.num_classes()];
        Self { group, values }
    }

    /// `σ_c`: value `ζ_c` on class `c`, zero elsewhere.
    pub fn sigma(group: Arc<FiniteGroup>, c: usize) -> Self {
        let mut f = Self::zero(group);
        let zeta = f.group.centralizer_order(c) as i64;
        f.values[c] = Cyclotomic::from_int(f.group.exponent(), zeta);
        f
    }

    /// Character of the regular representation.
    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let mut f = Self::zero(group);
        f.values[0] = Cyclotomic::from_int(f.group.exponent(), f.group.order() as i64);
        f
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    /// Value at an element id.
    pub fn at(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Self> {
        self.same_group(other)?;
        Ok(Self {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product `⋆` (tensor product of representations).
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn scale_cyc(&self, r: &Cyclotomic) -> Self {
        Self {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * r).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&rat(-1))
    }

    pub fn conj(&self) -> Self {
        Self {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conj).collect(),
        }
    }

    /// `(χ | ψ) = |G|^{-1} Σ_c |c| χ(c) conj(ψ(c))`.
    pub fn inner_product(&self, other: &Self) -> Result<Cyclotomic> {
        self.same_group(other)?;
        let g = &self.group;
        let mut acc = Cyclotomic::zero(g.exponent());
        for c in 0..g.num_classes() {
            let term = &self.values[c] * &other.values[c].conj();
            acc += &term.scale(&rat(g.class_size(c) as i64));
        }
        Ok(acc.scale(&Rational::new(1.into(), (g.order() as i64).into())))
    }

    /// Classical Adams operation `χ ↦ (g ↦ χ(g^n))`.
    pub fn adams_psi(&self, n: usize) -> Self {
        let g = &self.group;
        Self {
            group: g.clone(),
            values: (0..g.num_classes())
                .map(|c| self.values[g.power_class(c, n)].clone())
                .collect(),
        }
    }

    /// Coordinates in the `σ_c` basis: `f = Σ_c (f(c) / ζ_c) σ_c`.
    pub fn sigma_coordinates(&self) -> Vec<Cyclotomic> {
        self.values
            .iter()
            .enumerate()
            .map(|(c, v)| {
                v.scale(&Rational::new(
                    1.into(),
                    (self.group.centralizer_order(c) as i64).into(),
                ))
            })
            .collect()
    }
}

/// A linear functional on `C(G)`, stored in the coordinates dual to the
/// class values: `⟨η, V⟩ = Σ_c η_c V(c)`.
///
/// With this convention `⟨δ_c, σ_{c'}⟩ = ζ_c δ_{c,c'}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualFunctional {
    group: Arc<FiniteGroup>,
    coeffs: Vec<Cyclotomic>,
}

impl DualFunctional {
    pub fn new(group: Arc<FiniteGroup>, coeffs: Vec<Cyclotomic>) -> Result<Self> {
        if coeffs.len() != group.num_classes() {
            return Err(Error::InvalidParameter(
                "one coefficient per class expected".into(),
            ));
        }
        Ok(Self { group, coeffs })
    }

    /// `δ_c`.
    pub fn delta(group: Arc<FiniteGroup>, c: usize) -> Self {
        let m = group.exponent();
        let mut coeffs = vec![Cyclotomic::zero(m); group.num_classes()];
        coeffs[c] = Cyclotomic::one(m);
        Self { group, coeffs }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    pub fn pair(&self, v: &ClassFunction) -> Result<Cyclotomic> {
        if !(Arc::ptr_eq(&self.group, v.group()) || *self.group == **v.group()) {
            return Err(Error::GroupMismatch);
        }
        let mut acc = Cyclotomic::zero(self.group.exponent());
        for (e, x) in self.coeffs.iter().zip(v.values()) {
            if !e.is_zero() {
                acc += &(e * x);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            group: self.group.clone(),
            coeffs: self.coeffs.iter().map(|v| v.scale(r)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyclotomic::is_zero)
    }
}

/// Evaluate `(1/|G|) Σ_g χ(g) conj(ψ(g))` element by element; test oracle.
pub fn inner_product_elementwise(chi: &ClassFunction, psi: &ClassFunction) -> Cyclotomic {
    let g = chi.group();
    let mut acc = Cyclotomic::zero(g.exponent());
    for x in 0..g.order() {
        acc += &(chi.at(x) * &psi.at(x).conj());
    }
    acc.scale(&Rational::new(1.into(), (g.order() as i64).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtins::{cyclic, symmetric};

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(symmetric(3).unwrap())
    }

    fn class_with_size(g: &FiniteGroup, size: usize) -> usize {
        (0..g.num_classes())
            .find(|&c| g.class_size(c) == size)
            .unwrap()
    }

    #[test]
    fn inner_products() {
        let g = s3();
        let triv = ClassFunction::trivial(g.clone());
        assert_eq!(triv.inner_product(&triv).unwrap(), Cyclotomic::one(6));
        for c in 0..3 {
            let s = ClassFunction::sigma(g.clone(), c);
            let zeta = Cyclotomic::from_int(6, g.centralizer_order(c) as i64);
            assert_eq!(s.inner_product(&s).unwrap(), zeta);
            assert_eq!(inner_product_elementwise(&s, &s), zeta);
            for d in 0..3 {
                if d != c {
                    let t = ClassFunction::sigma(g.clone(), d);
                    assert!(s.inner_product(&t).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn sigma_values() {
        let z2 = Arc::new(cyclic(2).unwrap());
        let s = ClassFunction::sigma(z2, 1);
        assert_eq!(
            s.values(),
            &[Cyclotomic::zero(2), Cyclotomic::from_int(2, 2)]
        );
        let g = s3();
        let t = class_with_size(&g, 3);
        let s = ClassFunction::sigma(g.clone(), t);
        assert_eq!(*s.value(t), Cyclotomic::from_int(6, 2));
        let mut sum = ClassFunction::zero(g.clone());
        for c in 0..3 {
            let zeta = g.centralizer_order(c) as i64;
            sum = sum
                .add(
                    &ClassFunction::sigma(g.clone(), c)
                        .scale(&Rational::new(1.into(), zeta.into())),
                )
                .unwrap();
        }
        assert_eq!(sum, ClassFunction::trivial(g));
    }

    #[test]
    fn adams_operations() {
        let z2 = Arc::new(cyclic(2).unwrap());
        let sign = ClassFunction::from_ints(z2.clone(), &[1, -1]).unwrap();
        assert_eq!(sign.adams_psi(2), ClassFunction::trivial(z2));
        assert_eq!(sign.adams_psi(1), sign);

        let g = s3();
        let three = class_with_size(&g, 2);
        let chi = ClassFunction::sigma(g.clone(), three);
        let psi3 = chi.adams_psi(3);
        // oracle: cube each element and look up the class value
        for x in 0..6 {
            assert_eq!(psi3.at(x), chi.at(g.pow(x, 3)));
        }
        assert!(psi3.is_zero());
        for n in 1..7 {
            for m in 1..7 {
                assert_eq!(chi.adams_psi(m).adams_psi(n), chi.adams_psi(n * m));
            }
        }
    }

    #[test]
    fn star_products() {
        let g = s3();
        let triv = ClassFunction::trivial(g.clone());
        for c in 0..3 {
            let s = ClassFunction::sigma(g.clone(), c);
            let zeta = rat(g.centralizer_order(c) as i64);
            assert_eq!(s.star(&s).unwrap(), s.scale(&zeta));
            assert_eq!(triv.star(&s).unwrap(), s);
            for d in 0..3 {
                if d != c {
                    assert!(s
                        .star(&ClassFunction::sigma(g.clone(), d))
                        .unwrap()
                        .is_zero());
                }
            }
        }
        let other = Arc::new(cyclic(6).unwrap());
        assert_eq!(
            triv.star(&ClassFunction::trivial(other)),
            Err(Error::GroupMismatch)
        );
    }

    #[test]
    fn dual_pairing_convention() {
        let g = s3();
        for c in 0..3 {
            for d in 0..3 {
                let p = DualFunctional::delta(g.clone(), c)
                    .pair(&ClassFunction::sigma(g.clone(), d))
                    .unwrap();
                let expected = if c == d {
                    g.centralizer_order(c) as i64
                } else {
                    0
                };
                assert_eq!(p, Cyclotomic::from_int(6, expected));
            }
        }
    }
}
