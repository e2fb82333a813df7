use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::{gset_power, GSet};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fock::graded_dim;
use crate::group::builtins;
use crate::group::FiniteGroup;
use crate::report::Report;
use crate::scalars::{big, binomial, euler_product, TruncSeries};
use crate::wreath::{type_of, WreathElement};

/// `e(X, G)`, computed both as `|G|^{-1} Σ_{gh = hg} |X^{g,h}|` and as
/// `Σ_{[g]} |X^g / Z_G(g)|`; the two must agree.
pub fn orbifold_euler(x: &GSet) -> Result<usize> {
    let g = x.group();
    let fixed: Vec<Vec<bool>> = (0..g.order())
        .map(|e| (0..x.size()).map(|p| x.act(e, p) == p).collect())
        .collect();
    let mut total: usize = 0;
    for a in 0..g.order() {
        for b in 0..g.order() {
            if g.commute(a, b) {
                total += (0..x.size())
                    .filter(|&p| fixed[a][p] && fixed[b][p])
                    .count();
            }
        }
    }
    let sectors = x.inertia_dim();
    if !total.is_multiple_of(g.order()) || total / g.order() != sectors {
        return Err(Error::EulerDisagreement {
            pairs: format!("{total}/{}", g.order()),
            sectors: sectors.to_string(),
        });
    }
    Ok(sectors)
}

fn series_of(values: &[usize]) -> TruncSeries {
    TruncSeries::from_ints(&values.iter().map(|&v| v as i64).collect::<Vec<_>>())
}

/// `Σ_n e(X^n, G_n) q^n = Π_r (1 - q^r)^{-e(X, G)}` up to `q^max`, the left
/// side by direct enumeration on `X^n`.
pub fn euler_series_check(x: &GSet, max: usize, limit: usize, exec: Exec) -> Result<Report> {
    let e = orbifold_euler(x)?;
    let degrees: Vec<usize> = (0..=max).collect();
    let direct: Vec<usize> = exec
        .map(&degrees, |&n| {
            gset_power(x, n, limit).and_then(|(_, xn)| orbifold_euler(&xn))
        })
        .into_iter()
        .collect::<Result<_>>()?;
    let lhs = series_of(&direct);
    let rhs = euler_product(e as i64, max);
    let mut report = Report::new(format!(
        "orbifold euler {} |X|={}",
        x.group().name(),
        x.size()
    ));
    report.check_with(
        "sum e(X^n, G_n) q^n = prod (1-q^r)^-e",
        lhs == rhs,
        format!("e={e}: {lhs} vs {rhs}"),
    );
    Ok(report)
}

/// `dim K_{G_n}(X^n)`, counted as the inertia of `(G_n, X^n)`, equals the
/// `q^n` coefficient of `Π_r (1 - q^r)^{-dim K_G(X)}`.
pub fn theorem_main_dim_check(x: &GSet, max: usize, limit: usize, exec: Exec) -> Result<Report> {
    let d = x.inertia_dim();
    let degrees: Vec<usize> = (0..=max).collect();
    let direct: Vec<usize> = exec
        .map(&degrees, |&n| {
            gset_power(x, n, limit).map(|(_, xn)| xn.inertia_dim())
        })
        .into_iter()
        .collect::<Result<_>>()?;
    let lhs = series_of(&direct);
    let rhs = euler_product(d as i64, max);
    let mut report = Report::new(format!(
        "inertia dimension {} |X|={}",
        x.group().name(),
        x.size()
    ));
    report.check_with(
        "dim K_{G_n}(X^n) = coefficients of prod (1-q^r)^-d",
        lhs == rhs,
        format!("d={d}: {lhs}"),
    );
    Ok(report)
}

/// `e(X, G) = dim K_G(X)`, and the inertia count agrees with the number of
/// `G`-orbits on the inertia set.
pub fn ktheory_euler_check(x: &GSet) -> Result<bool> {
    let e = orbifold_euler(x)?;
    let d = x.inertia_dim();
    Ok(e == d && x.inertia_orbit_count() == d)
}

/// For `a = ((g, 1, …, 1), (0 1 … n-1))`, the fixed points of `a` on `X^n`
/// are exactly the diagonal tuples `(x, …, x)` with `x ∈ X^g`.
pub fn fixed_point_lemma_check(x: &GSet, n: usize, limit: usize) -> Result<Report> {
    let (wg, xn) = gset_power(x, n, limit)?;
    let g = x.group();
    let k = x.size();
    let mut report = Report::new(format!("n-cycle fixed points n={n}"));
    let mut fail = None;
    for e in 0..g.order() {
        if n == 0 {
            break;
        }
        let mut gs = vec![0; n];
        gs[0] = e;
        let a = wg.index(&WreathElement {
            g: gs,
            perm: (0..n).map(|i| (i + 1) % n).collect(),
        });
        let diagonal: Vec<usize> = x
            .fixed_points(e)
            .into_iter()
            .map(|p| (0..n).fold(0, |acc, _| acc * k + p))
            .collect();
        let mut fixed = xn.fixed_points(a);
        fixed.sort_unstable();
        let mut diagonal = diagonal;
        diagonal.sort_unstable();
        if fixed != diagonal {
            fail.get_or_insert(format!("g={e}"));
        }
    }
    report.check("fixed points are diagonal copies of X^g", fail);
    Ok(report)
}

/// For every `a ∈ G_n`:
/// `|(X^n)^a / Z(a)| = Π_{c,r} C(|X^c/Z(c)| + m_r(c) - 1, m_r(c))`.
pub fn symmetric_product_check(x: &GSet, n: usize, limit: usize, exec: Exec) -> Result<Report> {
    let (wg, xn) = gset_power(x, n, limit)?;
    let basis = x.inertia_basis();
    let gn = xn.group().clone();
    let elements: Vec<usize> = (0..gn.order()).collect();
    let results = exec.map(&elements, |&a| {
        let fixed = xn.fixed_points(a);
        let cent = gn.centralizer(a);
        let direct = BigInt::from(xn.orbit_count_on(&cent, &fixed));
        let rho = type_of(x.group(), &wg.element(a));
        let formula = rho
            .multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (c, _, m)| {
                let y = basis.count_for_class(c) as u64;
                acc * binomial((y + m as u64).saturating_sub(1), m as u64)
            });
        (direct != formula).then(|| format!("element {a} of type {rho}: {direct} vs {formula}"))
    });
    let mut report = Report::new(format!("symmetric products n={n}"));
    report.check(
        "orbit counts of fixed sets",
        results.into_iter().flatten().next(),
    );
    Ok(report)
}

/// `C(k + n - 1, n)` equals the `q^n` coefficient of `(1 - q)^{-k}` for
/// `n ≤ max`.
pub fn macdonald_check(k: usize, max: usize) -> bool {
    let geometric = TruncSeries::from_ints(&vec![1; max + 1]);
    let series = (0..k).fold(TruncSeries::one(max), |acc, _| acc.mul(&geometric));
    (0..=max)
        .all(|n| *series.coeff(n) == big(binomial(((k + n) as u64).saturating_sub(1), n as u64)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct McKayRow {
    pub group: String,
    pub order: usize,
    pub classes: usize,
    pub label: String,
    pub rank: usize,
}

/// McKay rows for cyclic groups of order 1..=8, binary dihedral groups with
/// `m ≤ 6` and the three exceptional binary groups, with the class-count
/// checks and `dim_q F_G(pt) = Π (1 - q^r)^{-|G_*|}` to order `max`.
pub fn mckay_table(max: usize, exec: Exec) -> Result<(Vec<McKayRow>, Report)> {
    let mut specs: Vec<(FiniteGroup, String, usize)> = Vec::new();
    for n in 1..=8 {
        specs.push((builtins::cyclic(n)?, format!("A{}", n - 1), n));
    }
    for m in 1..=6 {
        specs.push((builtins::binary_dihedral(m)?, format!("D{}", m + 2), m + 3));
    }
    specs.push((builtins::sl2_f3(), "E6".into(), 7));
    specs.push((builtins::binary_octahedral(), "E7".into(), 8));
    specs.push((builtins::sl2_f5(), "E8".into(), 9));
    let groups: Vec<Arc<FiniteGroup>> = specs.iter().map(|(g, _, _)| Arc::new(g.clone())).collect();
    let series_ok: Vec<bool> = exec.map(&groups, |g| {
        graded_dim(g, max) == euler_product(g.num_classes() as i64, max)
    });
    let mut rows = Vec::new();
    let mut report = Report::new(format!("mckay N={max}"));
    let mut class_fail = None;
    let mut series_fail = None;
    for ((g, label, expected), ok) in specs.into_iter().zip(series_ok) {
        let k = g.num_classes();
        if k != expected {
            class_fail.get_or_insert(format!("{}: {k} classes, expected {expected}", g.name()));
        }
        if !ok {
            series_fail.get_or_insert(g.name().to_string());
        }
        rows.push(McKayRow {
            group: g.name().to_string(),
            order: g.order(),
            classes: k,
            rank: k - 1,
            label,
        });
    }
    report.check("class counts match Dynkin ranks + 1", class_fail);
    report.check("graded dimension equals prod (1-q^r)^-|G_*|", series_fail);
    Ok((rows, report))
}
