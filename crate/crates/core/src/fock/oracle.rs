//! Element-level induction and restriction between `G_m × G_k` and
//! `G_{m+k}`, by direct sums over group elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::FiniteGroup;
use crate::scalars::{Cyclotomic, Rational};
use crate::wreath::{
    enumerate_types, representative, type_of, wreath_inverse, wreath_order, WreathClassFunction,
    WreathElement, WreathType,
};

/// For each type `ρ` of degree `m + k` with representative `x`, the number
/// of `y ∈ G_{m+k}` with `y^{-1} x y ∈ G_m × G_k`, split by the block types.
#[derive(Clone, Debug)]
pub struct InductionKernel {
    pub m: usize,
    pub k: usize,
    pub counts: BTreeMap<WreathType, BTreeMap<(WreathType, WreathType), u64>>,
    base: Arc<FiniteGroup>,
}

fn conj_by_inverse(group: &FiniteGroup, y: &WreathElement, x: &WreathElement) -> WreathElement {
    let yi = wreath_inverse(group, y);
    let t = crate::wreath::mul_unchecked(group, &yi, x);
    crate::wreath::mul_unchecked(group, &t, y)
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn induction_kernel(
    base: &Arc<FiniteGroup>,
    m: usize,
    k: usize,
    limit: usize,
    exec: Exec,
) -> Result<InductionKernel> {
    let n = m + k;
    let size = wreath_order(base, n).unwrap_or(u128::MAX);
    if size > limit as u128 {
        return Err(Error::SizeExceeded {
            size,
            limit: limit as u128,
        });
    }
    let order = base.order();
    let coords = order.pow(n as u32);
    let all_perms = perms(n);
    let types = enumerate_types(base, n);
    let rows = exec.map(&types, |rho| {
        let x = representative(base, rho);
        let mut counts: BTreeMap<(WreathType, WreathType), u64> = BTreeMap::new();
        for t in &all_perms {
            // the permutation part of y^{-1} x y is t^{-1} s t
            let mut t_inv = vec![0; n];
            for (i, &p) in t.iter().enumerate() {
                t_inv[p] = i;
            }
            if (0..m).any(|i| t_inv[x.perm[t[i]]] >= m) {
                continue;
            }
            for idx in 0..coords {
                let mut rest = idx;
                let g = (0..n)
                    .map(|_| {
                        let v = rest % order;
                        rest /= order;
                        v
                    })
                    .collect();
                let y = WreathElement { g, perm: t.clone() };
                let z = conj_by_inverse(base, &y, &x);
                let (a, b) = z
                    .split(m)
                    .expect("block-diagonal by the permutation filter");
                *counts
                    .entry((type_of(base, &a), type_of(base, &b)))
                    .or_insert(0) += 1;
            }
        }
        (rho.clone(), counts)
    });
    Ok(InductionKernel {
        m,
        k,
        counts: rows.into_iter().collect(),
        base: base.clone(),
    })
}

/// `Ind_{G_m × G_k}^{G_{m+k}} (f_1 ⊠ f_2)` via the kernel:
/// `(1/|G_m × G_k|) Σ_{y: y^{-1}xy ∈ G_m × G_k} f_1 ⊠ f_2 (y^{-1} x y)`.
pub fn induce_product_oracle(
    kernel: &InductionKernel,
    f1: &WreathClassFunction,
    f2: &WreathClassFunction,
) -> Result<WreathClassFunction> {
    if f1.degree() != kernel.m || f2.degree() != kernel.k {
        return Err(Error::DegreeMismatch(
            f1.degree() + f2.degree(),
            kernel.m + kernel.k,
        ));
    }
    let base = &kernel.base;
    let sub_order = wreath_order(base, kernel.m).unwrap() * wreath_order(base, kernel.k).unwrap();
    let inv = Rational::new(1.into(), sub_order.into());
    let mut out = WreathClassFunction::zero(base.clone(), kernel.m + kernel.k);
    for (rho, counts) in &kernel.counts {
        let mut acc = Cyclotomic::zero(base.exponent());
        for ((t1, t2), &cnt) in counts {
            acc += &(&f1.value(t1) * &f2.value(t2)).scale(&Rational::from_integer(cnt.into()));
        }
        out.accumulate(rho.clone(), &acc.scale(&inv));
    }
    Ok(out)
}

/// `Res_{G_m × G_{n-m}} F` as a function of the block types, evaluated at
/// block-diagonal representatives.
pub fn restrict_oracle(
    f: &WreathClassFunction,
    m: usize,
) -> Result<BTreeMap<Vec<WreathType>, Cyclotomic>> {
    let n = f.degree();
    if m > n {
        return Err(Error::DegreeMismatch(m, n));
    }
    let base = f.group();
    let mut out = BTreeMap::new();
    for t1 in enumerate_types(base, m) {
        let a = representative(base, &t1);
        for t2 in enumerate_types(base, n - m) {
            let x = a.concat(&representative(base, &t2));
            let v = f.value(&type_of(base, &x));
            if !v.is_zero() {
                out.insert(vec![t1.clone(), t2], v);
            }
        }
    }
    Ok(out)
}
