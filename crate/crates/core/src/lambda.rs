//! Outer tensor powers and the operations `φ^n`, `ch_n`, `ω_n`, `ψ^n`, `λ^n`
//! together with the generating series `H(V, q)` and `E(V, q)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fock::{fock_exp, fock_mul, FockElement};
use crate::group::{ClassFunction, FiniteGroup};
use crate::report::Report;
use crate::scalars::{cyclotomic_rank, rat, Cyclotomic, Rational};
use crate::wreath::{
    enumerate_types, sigma_r_c, sigma_rho, sign_char, WreathClassFunction, WreathType,
};

fn require_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidParameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Character of `V^{⊠n}`: `Π_c V(c)^{ℓ(ρ(c))}` at type `ρ`. Defined for
/// `n = 0` as the unit.
pub fn boxtimes_power(v: &ClassFunction, n: usize) -> WreathClassFunction {
    let group = v.group().clone();
    let mut f = WreathClassFunction::zero(group.clone(), n);
    for rho in enumerate_types(&group, n) {
        let val = rho
            .entries()
            .iter()
            .fold(Cyclotomic::one(group.exponent()), |acc, (c, p)| {
                &acc * &v.value(*c).pow(p.len())
            });
        f.accumulate(rho, &val);
    }
    f
}

/// `ω_n(V)`: value `n V(c)` at the single `n`-cycle over `c`.
pub fn omega_n(v: &ClassFunction, n: usize) -> Result<WreathClassFunction> {
    require_positive(n)?;
    let group = v.group().clone();
    let mut f = WreathClassFunction::zero(group.clone(), n);
    for c in 0..group.num_classes() {
        f.accumulate(WreathType::cycle(c, n), &v.value(c).scale(&rat(n as i64)));
    }
    Ok(f)
}

/// `ch_n(F)(c) = F(n-cycle over c)`.
pub fn ch_n(f: &WreathClassFunction, n: usize) -> Result<ClassFunction> {
    require_positive(n)?;
    if f.degree() != n {
        return Err(Error::DegreeMismatch(f.degree(), n));
    }
    let group = f.group().clone();
    let values = (0..group.num_classes())
        .map(|c| f.value(&WreathType::cycle(c, n)))
        .collect();
    ClassFunction::new(group, values)
}

/// `φ^n(V) = Σ_c ζ_c^{-1} V^{⊠n} ⋆ σ_n(c)`.
pub fn phi_n(v: &ClassFunction, n: usize) -> Result<WreathClassFunction> {
    require_positive(n)?;
    let group = v.group().clone();
    let power = boxtimes_power(v, n);
    let mut out = WreathClassFunction::zero(group.clone(), n);
    for c in 0..group.num_classes() {
        let inv = Rational::new(1.into(), (group.centralizer_order(c) as i64).into());
        out = out.add(&power.star(&sigma_r_c(&group, n, c))?.scale(&inv))?;
    }
    Ok(out)
}

/// Classical Adams operation `V ↦ (g ↦ V(g^n))`.
pub fn psi_classical(v: &ClassFunction, n: usize) -> Result<ClassFunction> {
    require_positive(n)?;
    Ok(v.adams_psi(n))
}

/// The composite `n · φ^{-1} ∘ ϑ ∘ pr ∘ φ_n ∘ ⊠n` evaluated at a point: take
/// `V^{⊠n}`, project to the `n`-cycle types, read the value over each class,
/// and multiply by `n`.
pub fn psi_composite(v: &ClassFunction, n: usize) -> Result<ClassFunction> {
    require_positive(n)?;
    let power = boxtimes_power(v, n);
    let group = v.group().clone();
    let values = (0..group.num_classes())
        .map(|c| power.value(&WreathType::cycle(c, n)).scale(&rat(n as i64)))
        .collect();
    ClassFunction::new(group, values)
}

/// `λ^n(V) = V^{⊠n} ⋆ 1^n`.
pub fn lambda_n(v: &ClassFunction, n: usize) -> Result<WreathClassFunction> {
    require_positive(n)?;
    boxtimes_power(v, n).star(&sign_char(v.group(), n))
}

/// Checks `(V - W)^{⊠n} = Σ_j (-1)^j Ind[V^{⊠(n-j)} ⊠ (W^{⊠j} ⋆ 1^j)]` and
/// `φ^n(V - W) = φ^n(V) - φ^n(W)`.
pub fn additivity_check(v: &ClassFunction, w: &ClassFunction, n: usize) -> Result<bool> {
    require_positive(n)?;
    let group = v.group().clone();
    let diff = v.sub(w)?;
    let lhs = boxtimes_power(&diff, n);
    let mut rhs = FockElement::zero(group.clone());
    for j in 0..=n {
        let left = FockElement::from_component(boxtimes_power(v, n - j));
        let right = FockElement::from_component(boxtimes_power(w, j).star(&sign_char(&group, j))?);
        let term = fock_mul(&left, &right)?;
        rhs = if j % 2 == 0 {
            rhs.add(&term)?
        } else {
            rhs.sub(&term)?
        };
    }
    let phi_ok = phi_n(&diff, n)? == phi_n(v, n)?.sub(&phi_n(w, n)?)?;
    Ok(rhs.component(n) == lhs && phi_ok)
}

/// `H(V, q) = Σ_n q^n V^{⊠n}`, as the element with degree-`n` component
/// `V^{⊠n}` for `n ≤ max`.
pub fn h_series(v: &ClassFunction, max: usize) -> FockElement {
    let mut out = FockElement::zero(v.group().clone());
    for n in 0..=max {
        out = out
            .add(&FockElement::from_component(boxtimes_power(v, n)))
            .expect("same group");
    }
    out
}

/// `E(V, q) = Σ_n q^n V^{⊠n} ⋆ 1^n`.
pub fn e_series(v: &ClassFunction, max: usize) -> FockElement {
    let group = v.group().clone();
    let mut out = FockElement::zero(group.clone());
    for n in 0..=max {
        let c = boxtimes_power(v, n)
            .star(&sign_char(&group, n))
            .expect("same group");
        out = out
            .add(&FockElement::from_component(c))
            .expect("same group");
    }
    out
}

/// Substitutes `q ↦ -q`: negates the odd-degree components.
pub fn negate_q(u: &FockElement) -> FockElement {
    let mut out = FockElement::zero(u.group().clone());
    for (n, f) in u.components() {
        let f = if n % 2 == 1 { f.neg() } else { f.clone() };
        out = out
            .add(&FockElement::from_component(f))
            .expect("same group");
    }
    out
}

/// `Σ_{r=1}^{max} φ^r(V) q^r / r`.
pub fn phi_log(v: &ClassFunction, max: usize) -> Result<FockElement> {
    let mut out = FockElement::zero(v.group().clone());
    for r in 1..=max {
        let term = FockElement::from_component(phi_n(v, r)?)
            .scale(&Rational::new(1.into(), (r as i64).into()));
        out = out.add(&term)?;
    }
    Ok(out)
}

fn first_differing_degree(a: &FockElement, b: &FockElement, max: usize) -> Option<String> {
    (0..=max)
        .find(|&n| a.component(n) != b.component(n))
        .map(|n| format!("degree {n}"))
}

/// Degreewise check of `H(V,q) = exp(Σ φ^r(V) q^r / r)` and
/// `E(V,-q) = exp(-Σ φ^r(V) q^r / r)`, and of `λ^n(V)` against `E`.
pub fn exponential_identity_check(v: &ClassFunction, max: usize) -> Result<Report> {
    let mut report = Report::new("exponential identity");
    let log = phi_log(v, max)?;
    let h_exp = fock_exp(&log, max)?;
    let e_exp = fock_exp(&log.neg(), max)?;
    report.check(
        "H(V,q) = exp(sum phi^r q^r / r)",
        first_differing_degree(&h_series(v, max), &h_exp, max),
    );
    report.check(
        "E(V,-q) = exp(-sum phi^r q^r / r)",
        first_differing_degree(&negate_q(&e_series(v, max)), &e_exp, max),
    );
    let e = e_series(v, max);
    let mut lam_fail = None;
    for n in 1..=max {
        if lambda_n(v, n)? != e.component(n) {
            lam_fail.get_or_insert(format!("degree {n}"));
        }
    }
    report.check("lambda^n(V) is the degree-n part of E(V,q)", lam_fail);
    Ok(report)
}

/// `H(-V,q) = E(V,-q)` and `H(V ⊕ W, q) = H(V,q) H(W,q)` up to degree
/// `max`. `H(-V, q)` is taken both from the character formula at `-V` and as
/// the inverse of `H(V, q)` in `F_G`.
pub fn h_e_identities(v: &ClassFunction, w: &ClassFunction, max: usize) -> Result<Report> {
    let mut report = Report::new("H/E identities");
    let group = v.group().clone();
    let e_neg = negate_q(&e_series(v, max));
    report.check(
        "H(-V,q) = E(V,-q)",
        first_differing_degree(&h_series(&v.neg(), max), &e_neg, max),
    );
    let inverse_check = fock_mul(&h_series(v, max), &e_neg)?.truncate(max);
    report.check(
        "H(V,q) E(V,-q) = 1",
        first_differing_degree(&inverse_check, &FockElement::unit(group.clone()), max),
    );
    let prod = fock_mul(&h_series(v, max), &h_series(w, max))?.truncate(max);
    report.check(
        "H(V+W,q) = H(V,q) H(W,q)",
        first_differing_degree(&h_series(&v.add(w)?, max), &prod, max),
    );
    Ok(report)
}

/// `Π_{cycles (r, c) of ρ} φ^r(σ_c) = σ^ρ` for every type of degree `n`, and
/// these products have rank `|P_n(G_*)|`.
pub fn free_lambda_basis_check(group: &Arc<FiniteGroup>, n: usize, exec: Exec) -> Result<Report> {
    let mut report = Report::new(format!("free lambda-ring basis {} n={n}", group.name()));
    let types = enumerate_types(group, n);
    let products: Vec<Result<WreathClassFunction>> = exec.map(&types, |rho| {
        let mut acc = FockElement::unit(group.clone());
        for (c, p) in rho.entries() {
            for &r in p.parts() {
                let phi = phi_n(&ClassFunction::sigma(group.clone(), *c), r)?;
                acc = fock_mul(&acc, &FockElement::from_component(phi))?;
            }
        }
        Ok(acc.component(n))
    });
    let products: Vec<WreathClassFunction> = products.into_iter().collect::<Result<_>>()?;
    report.check(
        "products of phi^r(sigma_c) equal sigma^rho",
        types
            .iter()
            .zip(&products)
            .find(|(t, p)| sigma_rho(group, t) != **p)
            .map(|(t, _)| t.to_string()),
    );
    let rows: Vec<Vec<Cyclotomic>> = products
        .iter()
        .map(|p| types.iter().map(|t| p.value(t)).collect())
        .collect();
    let r = cyclotomic_rank(&rows);
    report.check_with(
        "rank equals dim C(G_n)",
        r == types.len(),
        format!("rank {r} of {}", types.len()),
    );
    Ok(report)
}

fn render(v: &ClassFunction) -> String {
    let vals: Vec<String> = v.values().iter().map(|x| x.to_string()).collect();
    format!("({})", vals.join(", "))
}

/// `ch_n ∘ ω_n = n·Id` on the `σ_c` basis for `n ≤ max`, plus the status of
/// `ω_n ∘ ψ^n = n φ^n` and `ch_n ∘ φ^n = n ψ^n` for both `ψ` candidates,
/// recorded as findings.
pub fn adams_identities_report(group: &Arc<FiniteGroup>, max: usize) -> Result<Report> {
    let mut report = Report::new(format!("adams identities {}", group.name()));
    let basis: Vec<ClassFunction> = (0..group.num_classes())
        .map(|c| ClassFunction::sigma(group.clone(), c))
        .collect();
    let mut fail = None;
    for n in 1..=max {
        for v in &basis {
            if ch_n(&omega_n(v, n)?, n)? != v.scale(&rat(n as i64)) {
                fail.get_or_insert(format!("n={n} V={}", render(v)));
            }
        }
    }
    report.check("ch_n omega_n = n Id", fail);
    type Candidate = fn(&ClassFunction, usize) -> Result<ClassFunction>;
    let candidates: [(&str, Candidate); 2] =
        [("classical", psi_classical), ("composite", psi_composite)];
    for (name, psi) in candidates {
        let mut first_omega = None;
        let mut first_ch = None;
        for n in 1..=max {
            for v in &basis {
                let p = psi(v, n)?;
                if omega_n(&p, n)? != phi_n(v, n)?.scale(&rat(n as i64)) {
                    first_omega.get_or_insert(format!("n={n} V={}", render(v)));
                }
                if ch_n(&phi_n(v, n)?, n)? != p.scale(&rat(n as i64)) {
                    first_ch.get_or_insert(format!("n={n} V={}", render(v)));
                }
            }
        }
        let status = |w: Option<String>| w.map_or("holds".to_string(), |w| format!("fails at {w}"));
        report.finding(
            format!("{name}: omega_n psi^n = n phi^n"),
            status(first_omega),
        );
        report.finding(format!("{name}: ch_n phi^n = n psi^n"), status(first_ch));
    }
    Ok(report)
}
