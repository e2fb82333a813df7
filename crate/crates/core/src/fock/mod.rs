//! The graded space `F_G = ⊕_n C(G_n)` with its induction product and
//! restriction coproduct.

mod oracle;
mod tensor;
mod verify;

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scalars::{Cyclotomic, Rational, TruncSeries};
use crate::wreath::{enumerate_types, z_inv, z_rat, WreathClassFunction, WreathType};

pub use oracle::{induce_product_oracle, induction_kernel, restrict_oracle, InductionKernel};
pub use tensor::{antipode, counit, fock_comul, FockTensor};
pub use verify::hopf_verify;

/// A finitely supported graded family of class functions on `G_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockElement {
    group: Arc<FiniteGroup>,
    comps: BTreeMap<usize, WreathClassFunction>,
}

impl FockElement {
    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        Self {
            group,
            comps: BTreeMap::new(),
        }
    }

    /// The vacuum `1 ∈ C(G_0)`.
    pub fn unit(group: Arc<FiniteGroup>) -> Self {
        Self::scalar(group.clone(), Cyclotomic::one(group.exponent()))
    }

    pub fn scalar(group: Arc<FiniteGroup>, c: Cyclotomic) -> Self {
        let mut f = WreathClassFunction::zero(group.clone(), 0);
        f.accumulate(WreathType::empty(), &c);
        Self::from_component(f)
    }

    pub fn from_component(f: WreathClassFunction) -> Self {
        let mut out = Self::zero(f.group().clone());
        out.add_component(f);
        out
    }

    /// `σ^ρ` as a homogeneous element.
    pub fn sigma(group: &Arc<FiniteGroup>, rho: &WreathType) -> Self {
        Self::from_component(crate::wreath::sigma_rho(group, rho))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn components(&self) -> &BTreeMap<usize, WreathClassFunction> {
        &self.comps
    }

    pub fn component(&self, n: usize) -> WreathClassFunction {
        self.comps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| WreathClassFunction::zero(self.group.clone(), n))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.comps.keys().next_back().copied()
    }

    fn add_component(&mut self, f: WreathClassFunction) {
        let n = f.degree();
        let sum = match self.comps.remove(&n) {
            Some(cur) => cur.add(&f).expect("same group and degree"),
            None => f,
        };
        if !sum.is_zero() {
            self.comps.insert(n, sum);
        }
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut out = self.clone();
        for f in other.comps.values() {
            out.add_component(f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Rational::from_integer((-1).into()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.group.clone());
        for f in self.comps.values() {
            out.add_component(f.scale(r));
        }
        out
    }

    pub fn scale_cyc(&self, r: &Cyclotomic) -> Self {
        let mut out = Self::zero(self.group.clone());
        for f in self.comps.values() {
            out.add_component(f.scale_cyc(r));
        }
        out
    }

    /// Drops components of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        Self {
            group: self.group.clone(),
            comps: self
                .comps
                .range(..=n)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Coordinates in the `σ^ρ` basis across all degrees.
    pub fn sigma_coordinates(&self) -> BTreeMap<WreathType, Cyclotomic> {
        self.comps
            .values()
            .flat_map(|f| f.sigma_coordinates())
            .collect()
    }

    pub fn from_sigma_coordinates(
        group: Arc<FiniteGroup>,
        coords: impl IntoIterator<Item = (WreathType, Cyclotomic)>,
    ) -> Self {
        let mut out = Self::zero(group.clone());
        for (t, v) in coords {
            let mut f = WreathClassFunction::zero(group.clone(), t.degree());
            let val = v.scale(&z_rat(&group, &t));
            f.accumulate(t, &val);
            out.add_component(f);
        }
        out
    }
}

/// Induction product. On the `σ`-basis, `σ^ρ σ^τ = σ^{ρ⊔τ}`; in value
/// coordinates `(F_1 F_2)(ρ⊔τ) = Z_{ρ⊔τ} Σ F_1(ρ) F_2(τ) / (Z_ρ Z_τ)`.
pub fn fock_mul(u: &FockElement, v: &FockElement) -> Result<FockElement> {
    u.check_group(v)?;
    let group = &u.group;
    let mut out = FockElement::zero(group.clone());
    for a in u.comps.values() {
        for b in v.comps.values() {
            let mut f = WreathClassFunction::zero(group.clone(), a.degree() + b.degree());
            for (ra, va) in a.values() {
                let sa = va.scale(&z_inv(group, ra));
                for (rb, vb) in b.values() {
                    let rho = ra.union(rb);
                    let coef = z_rat(group, &rho) * z_inv(group, rb);
                    f.accumulate(rho, &(&sa * vb).scale(&coef));
                }
            }
            out.add_component(f);
        }
    }
    Ok(out)
}

/// `exp(x) = Σ_k x^k / k!` truncated at degree `n`; `x` must have no
/// degree-0 component.
pub fn fock_exp(x: &FockElement, n: usize) -> Result<FockElement> {
    if x.comps.contains_key(&0) {
        return Err(Error::NonzeroConstantTerm);
    }
    let x = x.truncate(n);
    let mut out = FockElement::unit(x.group.clone());
    let mut power = out.clone();
    for k in 1..=n {
        power = fock_mul(&power, &x)?
            .truncate(n)
            .scale(&Rational::new(1.into(), (k as i64).into()));
        if power.is_zero() {
            break;
        }
        out = out.add(&power)?;
    }
    Ok(out)
}

/// `dim_q F_G`: the number of types of each degree up to `n`.
pub fn graded_dim(group: &FiniteGroup, n: usize) -> TruncSeries {
    TruncSeries::from_ints(
        &(0..=n)
            .map(|k| enumerate_types(group, k).len() as i64)
            .collect::<Vec<_>>(),
    )
}

impl Serialize for FockElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Component<'a> {
            degree: usize,
            values: &'a WreathClassFunction,
        }
        let comps: Vec<Component> = self
            .comps
            .iter()
            .map(|(d, f)| Component {
                degree: *d,
                values: f,
            })
            .collect();
        comps.serialize(s)
    }
}
