//! Element-level oracles for the outer tensor power and randomized checks of
//! the λ-ring identities.

use std::sync::Arc;

use proptest::prelude::*;

use wreathfock::group::builtins::{cyclic, symmetric};
use wreathfock::group::{all_subgroups, ClassFunction, FiniteGroup, SubgroupEmbedding};
use wreathfock::gset::GSet;
use wreathfock::lambda::{additivity_check, boxtimes_power, ch_n, omega_n, phi_n};
use wreathfock::scalars::{ratio, Cyclotomic};
use wreathfock::wreath::{type_of, WreathGroup};

/// Permutation character of `G` on `Y`: fixed-point counts.
fn perm_char(y: &GSet) -> ClassFunction {
    let g = y.group();
    let vals: Vec<i64> = (0..g.num_classes())
        .map(|c| y.fixed_points(g.representative(c)).len() as i64)
        .collect();
    ClassFunction::from_ints(g.clone(), &vals).unwrap()
}

/// `V^{⊠n}` for a permutation module `V = C[Y]` is the permutation module on
/// `Y^n`, so its trace at `x ∈ G_n` counts tuples fixed by `x`.
fn check_tensor_trace(y: &GSet, n: usize) {
    let g = y.group();
    let v = perm_char(y);
    let f = boxtimes_power(&v, n);
    let wg = WreathGroup::new(g.clone(), n, 50_000).unwrap();
    let k = y.size();
    let m = g.exponent();
    for i in 0..wg.order() {
        let a = wg.element(i);
        let mut fixed = 0;
        for p in 0..k.pow(n as u32) {
            let t: Vec<usize> = (0..n).map(|j| (p / k.pow(j as u32)) % k).collect();
            // (a·t)_{s(j)} = g_{s(j)} t_j
            if (0..n).all(|j| y.act(a.g[a.perm[j]], t[j]) == t[a.perm[j]]) {
                fixed += 1;
            }
        }
        assert_eq!(
            f.value(&type_of(g, &a)),
            Cyclotomic::from_int(m, fixed),
            "{} n={n} element {i}",
            g.name()
        );
    }
}

#[test]
fn boxtimes_power_is_the_tensor_trace() {
    let z3 = Arc::new(cyclic(3).unwrap());
    let s3 = Arc::new(symmetric(3).unwrap());
    let c2 = all_subgroups(&s3)
        .into_iter()
        .find(|h| h.len() == 2)
        .unwrap();
    let three = GSet::coset_space(&SubgroupEmbedding::from_elements(s3.clone(), &c2).unwrap());
    for y in [
        GSet::regular(z3.clone()),
        GSet::point(z3),
        three,
        GSet::regular(s3),
    ] {
        for n in 1..=3 {
            check_tensor_trace(&y, n);
        }
    }
}

fn group_strategy() -> impl Strategy<Value = Arc<FiniteGroup>> {
    prop_oneof![
        Just(Arc::new(cyclic(2).unwrap())),
        Just(Arc::new(cyclic(3).unwrap())),
        Just(Arc::new(symmetric(3).unwrap())),
    ]
}

fn class_function(g: Arc<FiniteGroup>) -> impl Strategy<Value = ClassFunction> {
    let k = g.num_classes();
    prop::collection::vec(-4i64..=4, k)
        .prop_map(move |v| ClassFunction::from_ints(g.clone(), &v).unwrap())
}

fn pair() -> impl Strategy<Value = (ClassFunction, ClassFunction)> {
    group_strategy().prop_flat_map(|g| (class_function(g.clone()), class_function(g)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ch_inverts_omega((v, _w) in pair(), n in 1usize..=4) {
        let back = ch_n(&omega_n(&v, n).unwrap(), n).unwrap();
        prop_assert_eq!(back, v.scale(&ratio(n as i64, 1)));
    }

    #[test]
    fn phi_is_additive((v, w) in pair(), n in 1usize..=3) {
        prop_assert!(additivity_check(&v, &w, n).unwrap());
        let lhs = phi_n(&v.add(&w).unwrap(), n).unwrap();
        let rhs = phi_n(&v, n).unwrap().add(&phi_n(&w, n).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
