//! Element-level model of `G_n`, used only as an oracle.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_bigint::BigInt;

use super::element::{mul_unchecked, type_of, wreath_inverse, WreathElement};
use super::{enumerate_types, WreathType};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::FiniteGroup;
use crate::report::Report;
use crate::scalars::factorial;

/// `G_n` with elements numbered `rank(s) · |G|^n + Σ_i g_i |G|^i`, where
/// `rank` is the lexicographic rank of the permutation. The identity is 0.
#[derive(Clone, Debug)]
pub struct WreathGroup {
    base: Arc<FiniteGroup>,
    n: usize,
    order: usize,
    base_pow: usize,
    perms: Vec<Vec<usize>>,
}

/// `|G|^n · n!`, or `None` on overflow.
pub fn wreath_order(base: &FiniteGroup, n: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 1..=n {
        acc = acc
            .checked_mul(base.order() as u128)?
            .checked_mul(i as u128)?;
    }
    Some(acc)
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

impl WreathGroup {
    pub fn new(base: Arc<FiniteGroup>, n: usize, limit: usize) -> Result<Self> {
        let size = wreath_order(&base, n).unwrap_or(u128::MAX);
        if size > limit as u128 {
            return Err(Error::SizeExceeded {
                size,
                limit: limit as u128,
            });
        }
        let base_pow = base.order().pow(n as u32);
        Ok(Self {
            order: size as usize,
            base_pow,
            perms: all_perms(n),
            base,
            n,
        })
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn element(&self, idx: usize) -> WreathElement {
        let k = self.base.order();
        let mut rest = idx % self.base_pow;
        let g = (0..self.n)
            .map(|_| {
                let x = rest % k;
                rest /= k;
                x
            })
            .collect();
        WreathElement {
            g,
            perm: self.perms[idx / self.base_pow].clone(),
        }
    }

    pub fn index(&self, a: &WreathElement) -> usize {
        let k = self.base.order();
        let coords = a.g.iter().rev().fold(0, |acc, &x| acc * k + x);
        perm_rank(&a.perm) * self.base_pow + coords
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index(&mul_unchecked(
            &self.base,
            &self.element(a),
            &self.element(b),
        ))
    }

    pub fn inv(&self, a: usize) -> usize {
        self.index(&wreath_inverse(&self.base, &self.element(a)))
    }

    /// `y x y^{-1}` on indices.
    pub fn conj(&self, y: usize, x: usize) -> usize {
        let ye = self.element(y);
        let xe = self.element(x);
        let yx = mul_unchecked(&self.base, &ye, &xe);
        self.index(&mul_unchecked(
            &self.base,
            &yx,
            &wreath_inverse(&self.base, &ye),
        ))
    }

    /// Generators: `G` in the first slot, the transposition `(0 1)` and the
    /// full cycle.
    pub fn generators(&self) -> Vec<usize> {
        let n = self.n;
        let mut gens = Vec::new();
        if n == 0 {
            return gens;
        }
        for g in 1..self.base.order() {
            let mut e = WreathElement::identity(n);
            e.g[0] = g;
            gens.push(self.index(&e));
        }
        if n >= 2 {
            let mut t = WreathElement::identity(n);
            t.perm.swap(0, 1);
            gens.push(self.index(&t));
            let c = WreathElement {
                g: vec![0; n],
                perm: (0..n).map(|i| (i + 1) % n).collect(),
            };
            gens.push(self.index(&c));
        }
        gens
    }

    /// Full multiplication table as a `FiniteGroup`; element ids agree with
    /// this numbering.
    pub fn to_finite_group(&self, limit: usize) -> Result<FiniteGroup> {
        if self.order > limit {
            return Err(Error::SizeExceeded {
                size: self.order as u128,
                limit: limit as u128,
            });
        }
        let elements: Vec<WreathElement> = (0..self.order).map(|i| self.element(i)).collect();
        let mut table = Vec::with_capacity(self.order * self.order);
        for a in &elements {
            for b in &elements {
                table.push(self.index(&mul_unchecked(&self.base, a, b)) as u32);
            }
        }
        let name = format!("{}_{}", self.base.name(), self.n);
        Ok(FiniteGroup::from_flat_table(name, self.order, table))
    }

    /// Conjugacy classes by orbit closure under conjugation by generators.
    /// Each class is listed by its elements in increasing order; classes are
    /// ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let gen_elts: Vec<(WreathElement, WreathElement)> = gens
            .iter()
            .map(|&y| {
                let e = self.element(y);
                let inv = wreath_inverse(&self.base, &e);
                (e, inv)
            })
            .collect();
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut class = vec![start];
            let mut i = 0;
            while i < class.len() {
                let x = self.element(class[i]);
                for (y, yi) in &gen_elts {
                    let c = self.index(&mul_unchecked(
                        &self.base,
                        &mul_unchecked(&self.base, y, &x),
                        yi,
                    ));
                    if !seen[c] {
                        seen[c] = true;
                        class.push(c);
                    }
                }
                i += 1;
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Number of elements commuting with `x`.
    pub fn centralizer_order(&self, x: usize) -> usize {
        let xe = self.element(x);
        (0..self.order)
            .filter(|&y| {
                let ye = self.element(y);
                mul_unchecked(&self.base, &ye, &xe) == mul_unchecked(&self.base, &xe, &ye)
            })
            .count()
    }
}

/// `(smallest representative, class size)` for every conjugacy class of
/// `G_n`, ordered by representative index.
pub fn brute_force_classes(
    base: &Arc<FiniteGroup>,
    n: usize,
    limit: usize,
) -> Result<Vec<(WreathElement, usize)>> {
    let wg = WreathGroup::new(base.clone(), n, limit)?;
    Ok(wg
        .conjugacy_classes()
        .into_iter()
        .map(|c| (wg.element(c[0]), c.len()))
        .collect())
}

/// Compares brute-force classes of `G_n` with the type classification:
/// each class has a single type, distinct classes have distinct types, every
/// type occurs, and class sizes equal `|G_n| / Z_ρ`.
pub fn conjugacy_by_type_check(
    base: &Arc<FiniteGroup>,
    n: usize,
    limit: usize,
    exec: Exec,
) -> Result<Report> {
    let wg = WreathGroup::new(base.clone(), n, limit)?;
    let classes = wg.conjugacy_classes();
    let class_types: Vec<Option<WreathType>> = exec.map(&classes, |class| {
        let t = type_of(&wg.base, &wg.element(class[0]));
        class
            .iter()
            .all(|&x| type_of(&wg.base, &wg.element(x)) == t)
            .then_some(t)
    });
    let mut report = Report::new(format!("conjugacy-by-type {} n={n}", base.name()));
    report.check(
        "type constant on classes",
        class_types
            .iter()
            .position(Option::is_none)
            .map(|i| format!("class of {:?}", wg.element(classes[i][0]))),
    );
    let types: Vec<WreathType> = class_types.into_iter().flatten().collect();
    let distinct: BTreeSet<&WreathType> = types.iter().collect();
    report.check_with(
        "distinct classes have distinct types",
        distinct.len() == types.len(),
        format!(
            "{} classes, {} distinct types",
            classes.len(),
            distinct.len()
        ),
    );
    let expected = enumerate_types(base, n);
    let expected_set: BTreeSet<&WreathType> = expected.iter().collect();
    report.check_with(
        "class count equals type count",
        classes.len() == expected.len() && distinct == expected_set,
        format!("{} classes, {} types", classes.len(), expected.len()),
    );
    let order = BigInt::from(wg.order());
    report.check(
        "class sizes equal |G_n|/Z_rho",
        types
            .iter()
            .zip(&classes)
            .find(|(t, c)| BigInt::from(c.len()) * t.z_rho(base) != order)
            .map(|(t, c)| format!("{t}: size {}", c.len())),
    );
    Ok(report)
}

/// For each class: the brute-force centralizer order equals `Z_ρ`, and for a
/// single `n`-cycle over `c` it equals `n ζ_c`.
pub fn centralizer_checks(
    base: &Arc<FiniteGroup>,
    n: usize,
    limit: usize,
    exec: Exec,
) -> Result<Report> {
    let wg = WreathGroup::new(base.clone(), n, limit)?;
    let classes = wg.conjugacy_classes();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let rows: Vec<(WreathType, usize)> = exec.map(&reps, |&x| {
        (type_of(&wg.base, &wg.element(x)), wg.centralizer_order(x))
    });
    let mut report = Report::new(format!("centralizers {} n={n}", base.name()));
    report.check(
        "centralizer order equals Z_rho",
        rows.iter()
            .find(|(t, z)| BigInt::from(*z) != t.z_rho(base))
            .map(|(t, z)| format!("{t}: {z}")),
    );
    report.check(
        "n-cycle centralizer equals n zeta_c",
        rows.iter()
            .filter_map(|(t, z)| t.as_single_cycle().map(|(c, r)| (c, r, *z)))
            .find(|&(c, r, z)| z != r * base.centralizer_order(c))
            .map(|(c, r, z)| format!("class {c}, r={r}: {z}")),
    );
    let total: BTreeMap<&WreathType, usize> = rows.iter().map(|(t, z)| (t, *z)).collect();
    report.check_with(
        "class equation",
        rows.iter().map(|(_, z)| wg.order() / z).sum::<usize>() == wg.order(),
        format!("{} classes, |G_n| = {}", total.len(), wg.order()),
    );
    Ok(report)
}

/// `Σ_ρ |G_n| / Z_ρ`, which the class equation says is `|G_n|`.
pub fn class_equation_sum(base: &FiniteGroup, n: usize) -> BigInt {
    let order = BigInt::from(base.order()).pow(n as u32) * factorial(n as u64);
    enumerate_types(base, n)
        .iter()
        .map(|t| &order / t.z_rho(base))
        .sum()
}
