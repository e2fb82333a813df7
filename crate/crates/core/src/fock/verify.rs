use std::sync::Arc;

use super::oracle::{induce_product_oracle, induction_kernel, restrict_oracle};
use super::tensor::AntipodeMemo;
use super::{fock_comul, fock_mul, FockElement, FockTensor};
use crate::error::Result;
use crate::exec::Exec;
use crate::group::FiniteGroup;
use crate::report::Report;
use crate::scalars::{rank, Cyclotomic, Rational};
use crate::wreath::{enumerate_types, sigma_r_c, sigma_rho, wreath_order, WreathType};

fn first_witness(results: Vec<Option<String>>) -> Option<String> {
    results.into_iter().flatten().next()
}

/// Basis pairs `(x, y)` with `deg x + deg y ≤ n`.
fn pairs(basis: &[Vec<WreathType>], n: usize) -> Vec<(WreathType, WreathType)> {
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            for x in &basis[a] {
                for y in &basis[b] {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// Checks the graded Hopf algebra axioms on the full `σ`-basis up to total
/// degree `n`, and compares product and coproduct with element-level
/// induction and restriction in every degree with `|G_d| ≤ limit`.
pub fn hopf_verify(group: &Arc<FiniteGroup>, n: usize, limit: usize, exec: Exec) -> Result<Report> {
    let mut report = Report::new(format!("hopf {} N={n}", group.name()));
    let basis: Vec<Vec<WreathType>> = (0..=n).map(|d| enumerate_types(group, d)).collect();
    let flat: Vec<WreathType> = basis.iter().flatten().cloned().collect();
    let el = |t: &WreathType| FockElement::sigma(group, t);
    let one = FockElement::unit(group.clone());
    let m = group.exponent();

    report.check(
        "unit",
        first_witness(exec.map(&flat, |x| {
            let u = el(x);
            let ok = fock_mul(&one, &u).ok() == Some(u.clone())
                && fock_mul(&u, &one).ok() == Some(u.clone());
            (!ok).then(|| x.to_string())
        })),
    );

    let pair_list = pairs(&basis, n);
    report.check(
        "commutativity",
        first_witness(exec.map(&pair_list, |(x, y)| {
            let ok = fock_mul(&el(x), &el(y)).ok() == fock_mul(&el(y), &el(x)).ok();
            (!ok).then(|| format!("{x} {y}"))
        })),
    );

    let mut triples = Vec::new();
    for (x, y) in &pair_list {
        let rest = n - x.degree() - y.degree();
        for d in 0..=rest {
            for z in &basis[d] {
                triples.push((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    report.check(
        "associativity",
        first_witness(exec.map(&triples, |(x, y, z)| {
            let lhs = fock_mul(&el(x), &el(y)).and_then(|xy| fock_mul(&xy, &el(z)));
            let rhs = fock_mul(&el(y), &el(z)).and_then(|yz| fock_mul(&el(x), &yz));
            (lhs.ok() != rhs.ok()).then(|| format!("{x} {y} {z}"))
        })),
    );

    report.check(
        "coassociativity",
        first_witness(exec.map(&flat, |x| {
            let d = fock_comul(&el(x));
            let ok = d.comul_at(0).ok() == d.comul_at(1).ok();
            (!ok).then(|| x.to_string())
        })),
    );

    report.check(
        "counit",
        first_witness(exec.map(&flat, |x| {
            let t = FockTensor::from_element(&el(x));
            let d = fock_comul(&el(x));
            let ok = d.counit_at(0).ok() == Some(t.clone()) && d.counit_at(1).ok() == Some(t);
            (!ok).then(|| x.to_string())
        })),
    );

    report.check(
        "coproduct is multiplicative",
        first_witness(exec.map(&pair_list, |(x, y)| {
            let lhs = fock_mul(&el(x), &el(y)).map(|xy| fock_comul(&xy));
            let rhs = fock_comul(&el(x)).mul(&fock_comul(&el(y)));
            (lhs.ok() != rhs.ok()).then(|| format!("{x} {y}"))
        })),
    );

    report.check(
        "cocommutativity",
        first_witness(exec.map(&flat, |x| {
            let d = fock_comul(&el(x));
            (d.swap_at(0).ok() != Some(d)).then(|| x.to_string())
        })),
    );

    report.check(
        "antipode",
        first_witness(exec.map(&flat, |x| {
            let mut memo = AntipodeMemo::new();
            let d = fock_comul(&el(x));
            let eps = if x.degree() == 0 {
                Cyclotomic::one(m)
            } else {
                Cyclotomic::zero(m)
            };
            let mut expected = FockTensor::zero(group.clone(), 1);
            expected.accumulate(vec![WreathType::empty()], &eps);
            let left = d.antipode_at(0, &mut memo).and_then(|t| t.mul_at(0));
            let right = d.antipode_at(1, &mut memo).and_then(|t| t.mul_at(0));
            (left.ok() != Some(expected.clone()) || right.ok() != Some(expected))
                .then(|| x.to_string())
        })),
    );

    let mut prim_fail = None;
    for r in 1..=n {
        for c in 0..group.num_classes() {
            let p = FockElement::from_component(sigma_r_c(group, r, c));
            let tp = FockTensor::from_element(&p);
            let u = FockTensor::unit(group.clone(), 1);
            let expected = tp.outer(&u)?.add(&u.outer(&tp)?)?;
            if fock_comul(&p) != expected || super::antipode(&p) != p.neg() {
                prim_fail.get_or_insert(format!("r={r} c={c}"));
            }
        }
    }
    report.check("sigma_r(c) primitive with S = -id", prim_fail);

    // primitive space in degree d has dimension |G_*|
    let mut dim_fail = None;
    for d in 1..=n {
        let rows: Vec<Vec<Rational>> = basis[d]
            .iter()
            .map(|x| {
                let t = FockTensor::from_element(&el(x));
                let u = FockTensor::unit(group.clone(), 1);
                let reduced = fock_comul(&el(x))
                    .sub(&t.outer(&u).unwrap())
                    .and_then(|r| r.sub(&u.outer(&t).unwrap()))
                    .unwrap();
                // coordinates over the basis of pairs of positive degree
                let mut row = Vec::new();
                for a in 1..d {
                    for t1 in &basis[a] {
                        for t2 in &basis[d - a] {
                            let v = reduced.coefficient(&[t1.clone(), t2.clone()]);
                            row.extend(v.coeffs().iter().cloned());
                        }
                    }
                }
                row
            })
            .collect();
        let nullity = basis[d].len() - rank(rows);
        if nullity != group.num_classes() {
            dim_fail.get_or_insert(format!("degree {d}: {nullity}"));
        }
    }
    report.check("primitive space has dimension |G_*|", dim_fail);

    // element-level oracles
    let mut covered = Vec::new();
    let mut prod_fail = None;
    for total in 2..=n {
        if wreath_order(group, total).is_none_or(|s| s > limit as u128) {
            continue;
        }
        covered.push(total);
        for a in 1..total {
            let kernel = induction_kernel(group, a, total - a, limit, exec)?;
            let items: Vec<(WreathType, WreathType)> = basis[a]
                .iter()
                .flat_map(|x| basis[total - a].iter().map(move |y| (x.clone(), y.clone())))
                .collect();
            let w = first_witness(exec.map(&items, |(x, y)| {
                let oracle =
                    induce_product_oracle(&kernel, &sigma_rho(group, x), &sigma_rho(group, y)).ok();
                let ours = fock_mul(&el(x), &el(y)).ok().map(|p| p.component(total));
                (oracle != ours).then(|| format!("{x} {y}"))
            }));
            if let Some(w) = w {
                prod_fail.get_or_insert(w);
            }
        }
    }
    report.check_with(
        "product matches induction",
        prod_fail.is_none(),
        match &prod_fail {
            Some(w) => format!("first mismatch {w}"),
            None => format!("degrees {covered:?}"),
        },
    );

    let mut covered = Vec::new();
    let oracle_items: Vec<WreathType> = flat
        .iter()
        .filter(|x| wreath_order(group, x.degree()).is_some_and(|s| s <= limit as u128))
        .cloned()
        .collect();
    for x in &oracle_items {
        if !covered.contains(&x.degree()) {
            covered.push(x.degree());
        }
    }
    let coprod_fail = first_witness(exec.map(&oracle_items, |x| {
        let values = fock_comul(&el(x)).value_coordinates();
        for a in 0..=x.degree() {
            let oracle = restrict_oracle(&sigma_rho(group, x), a).ok()?;
            let ours: std::collections::BTreeMap<_, _> = values
                .iter()
                .filter(|(k, _)| k[0].degree() == a)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            if oracle != ours {
                return Some(format!("{x} at split {a}"));
            }
        }
        None
    }));
    report.check_with(
        "coproduct matches restriction",
        coprod_fail.is_none(),
        match &coprod_fail {
            Some(w) => format!("first mismatch {w}"),
            None => format!("degrees {covered:?}"),
        },
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtins::{cyclic, trivial};

    #[test]
    fn small_groups_pass() {
        for g in [trivial(), cyclic(2).unwrap()] {
            let g = Arc::new(g);
            let r = hopf_verify(&g, 3, 2000, Exec::Parallel).unwrap();
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
            assert_eq!(r, hopf_verify(&g, 3, 2000, Exec::Sequential).unwrap());
        }
    }
}
