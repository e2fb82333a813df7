//! Creation and annihilation operators on `F_G` and an abstract
//! super-symmetric Fock space.

mod super_fock;

use std::sync::Arc;

pub use super_fock::{sf_commutator_check, Monomial, SuperFockElement, SuperFockSpace};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::fock::{
    fock_mul, induce_product_oracle, induction_kernel, restrict_oracle, FockElement,
};
use crate::group::{ClassFunction, DualFunctional, FiniteGroup};
use crate::lambda::{ch_n, omega_n};
use crate::report::Report;
use crate::scalars::{cyclotomic_rank, rat, Cyclotomic};
use crate::wreath::{enumerate_types, wreath_order, WreathClassFunction, WreathType};

/// One of the generators `a_m(V)` (creation) or `a_{-m}(η)` (annihilation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeisenbergOp {
    Creation {
        mode: usize,
        payload: ClassFunction,
    },
    Annihilation {
        mode: usize,
        payload: DualFunctional,
    },
}

impl HeisenbergOp {
    pub fn apply(&self, u: &FockElement) -> Result<FockElement> {
        match self {
            HeisenbergOp::Creation { mode, payload } => a_plus(*mode, payload, u),
            HeisenbergOp::Annihilation { mode, payload } => a_minus(*mode, payload, u),
        }
    }

    pub fn mode(&self) -> usize {
        match self {
            HeisenbergOp::Creation { mode, .. } | HeisenbergOp::Annihilation { mode, .. } => *mode,
        }
    }
}

/// `a_m(V) u = ω_m(V) · u`.
pub fn a_plus(m: usize, v: &ClassFunction, u: &FockElement) -> Result<FockElement> {
    fock_mul(&FockElement::from_component(omega_n(v, m)?), u)
}

/// `a_{-m}(η)`: restrict to `G_m × G_{n-m}`, apply `ch_m` to the first
/// factor and pair with `η`. On values,
/// `(a_{-m}(η) F)(τ) = Σ_c η_c F({c:(m)} ⊔ τ)`.
pub fn a_minus(m: usize, eta: &DualFunctional, u: &FockElement) -> Result<FockElement> {
    if m == 0 {
        return Err(Error::InvalidParameter("mode must be at least 1".into()));
    }
    let group = u.group().clone();
    if !(Arc::ptr_eq(&group, eta.group()) || *group == **eta.group()) {
        return Err(Error::GroupMismatch);
    }
    let mut out = FockElement::zero(group.clone());
    for (n, f) in u.components() {
        if *n < m {
            continue;
        }
        let mut g = WreathClassFunction::zero(group.clone(), n - m);
        for tau in enumerate_types(&group, n - m) {
            let mut acc = Cyclotomic::zero(group.exponent());
            for (c, coeff) in eta.coeffs().iter().enumerate() {
                if !coeff.is_zero() {
                    acc += &(coeff * &f.value(&WreathType::cycle(c, m).union(&tau)));
                }
            }
            g.accumulate(tau, &acc);
        }
        out = out.add(&FockElement::from_component(g))?;
    }
    Ok(out)
}

/// `[A, B] u = A(B u) - B(A u)` (all classes here are even).
pub fn commutator(a: &HeisenbergOp, b: &HeisenbergOp, u: &FockElement) -> Result<FockElement> {
    a.apply(&b.apply(u)?)?.sub(&b.apply(&a.apply(u)?)?)
}

fn basis_ops(group: &Arc<FiniteGroup>, max_mode: usize) -> (Vec<HeisenbergOp>, Vec<HeisenbergOp>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for m in 1..=max_mode {
        for c in 0..group.num_classes() {
            plus.push(HeisenbergOp::Creation {
                mode: m,
                payload: ClassFunction::sigma(group.clone(), c),
            });
            minus.push(HeisenbergOp::Annihilation {
                mode: m,
                payload: DualFunctional::delta(group.clone(), c),
            });
        }
    }
    (plus, minus)
}

/// Checks `[a_{-m}(η), a_l(V)] = l δ_{m,l} ⟨η, V⟩`, `[a_m(V), a_l(W)] = 0` and
/// `[a_{-m}(η), a_{-l}(η')] = 0` on every `σ^ρ` with `‖ρ‖ ≤ max_degree`, for
/// modes up to `max_mode` and basis payloads `σ_c`, `δ_c`. Operators are also
/// compared with element-level induction and restriction wherever
/// `|G_n| ≤ oracle_limit`.
pub fn commutator_check(
    group: &Arc<FiniteGroup>,
    max_degree: usize,
    max_mode: usize,
    oracle_limit: usize,
    exec: Exec,
) -> Result<Report> {
    let mut report = Report::new(format!(
        "heisenberg {} N={max_degree} M={max_mode}",
        group.name()
    ));
    let vectors: Vec<WreathType> = (0..=max_degree)
        .flat_map(|d| enumerate_types(group, d))
        .collect();
    let (plus, minus) = basis_ops(group, max_mode);
    let el = |t: &WreathType| FockElement::sigma(group, t);

    let mixed = exec.map(&vectors, |t| -> Result<Option<String>> {
        let u = el(t);
        for a in &minus {
            for b in &plus {
                let (
                    HeisenbergOp::Annihilation {
                        mode: m,
                        payload: eta,
                    },
                    HeisenbergOp::Creation {
                        mode: l,
                        payload: v,
                    },
                ) = (a, b)
                else {
                    unreachable!()
                };
                let expected = if m == l {
                    u.scale_cyc(&eta.pair(v)?.scale(&rat(*l as i64)))
                } else {
                    FockElement::zero(group.clone())
                };
                if commutator(a, b, &u)? != expected {
                    return Ok(Some(format!("m={m} l={l} on {t}")));
                }
            }
        }
        Ok(None)
    });
    report.check("[a_-m(eta), a_l(V)] = l delta <eta,V>", first(mixed)?);

    for (name, ops) in [
        ("[a_m(V), a_l(W)] = 0", &plus),
        ("[a_-m(eta), a_-l(eta')] = 0", &minus),
    ] {
        let res = exec.map(&vectors, |t| -> Result<Option<String>> {
            let u = el(t);
            for (i, a) in ops.iter().enumerate() {
                for b in &ops[i + 1..] {
                    if !commutator(a, b, &u)?.is_zero() {
                        return Ok(Some(format!("modes {} {} on {t}", a.mode(), b.mode())));
                    }
                }
            }
            Ok(None)
        });
        report.check(name, first(res)?);
    }

    let vacuum = FockElement::unit(group.clone());
    let vac_fail = minus
        .iter()
        .find(|a| !a.apply(&vacuum).map(|v| v.is_zero()).unwrap_or(false));
    report.check(
        "annihilators kill the vacuum",
        vac_fail.map(|a| format!("mode {}", a.mode())),
    );

    report.extend(operator_oracle_check(
        group,
        max_degree,
        max_mode,
        oracle_limit,
        exec,
    )?);
    Ok(report)
}

fn first(results: Vec<Result<Option<String>>>) -> Result<Option<String>> {
    for r in results {
        if let Some(w) = r? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Compares `a_m(σ_c)` with induction from `G_m × G_{n-m}` and `a_{-m}(δ_c)`
/// with restriction followed by `ch_m` and the pairing.
fn operator_oracle_check(
    group: &Arc<FiniteGroup>,
    max_degree: usize,
    max_mode: usize,
    limit: usize,
    exec: Exec,
) -> Result<Report> {
    let mut report = Report::new("oracle");
    let mut covered = Vec::new();
    let mut plus_fail = None;
    let mut minus_fail = None;
    for n in 1..=max_degree {
        if wreath_order(group, n).is_none_or(|s| s > limit as u128) {
            continue;
        }
        covered.push(n);
        for m in 1..=max_mode.min(n) {
            let kernel = induction_kernel(group, m, n - m, limit, exec)?;
            for c in 0..group.num_classes() {
                let v = ClassFunction::sigma(group.clone(), c);
                let eta = DualFunctional::delta(group.clone(), c);
                for tau in enumerate_types(group, n - m) {
                    let u = FockElement::sigma(group, &tau);
                    let ours = a_plus(m, &v, &u)?.component(n);
                    let oracle =
                        induce_product_oracle(&kernel, &omega_n(&v, m)?, &u.component(n - m))?;
                    if ours != oracle {
                        plus_fail.get_or_insert(format!("a_{m}(sigma_{c}) on {tau}"));
                    }
                }
                for rho in enumerate_types(group, n) {
                    let f = crate::wreath::sigma_rho(group, &rho);
                    let ours =
                        a_minus(m, &eta, &FockElement::from_component(f.clone()))?.component(n - m);
                    let res = restrict_oracle(&f, m)?;
                    let mut oracle = WreathClassFunction::zero(group.clone(), n - m);
                    for tau in enumerate_types(group, n - m) {
                        let mut first = WreathClassFunction::zero(group.clone(), m);
                        for t1 in enumerate_types(group, m) {
                            if let Some(v) = res.get(&vec![t1.clone(), tau.clone()]) {
                                first.accumulate(t1, v);
                            }
                        }
                        oracle.accumulate(tau, &eta.pair(&ch_n(&first, m)?)?);
                    }
                    if ours != oracle {
                        minus_fail.get_or_insert(format!("a_-{m}(delta_{c}) on {rho}"));
                    }
                }
            }
        }
    }
    let detail = |w: &Option<String>| w.clone().unwrap_or_else(|| format!("degrees {covered:?}"));
    report.check_with(
        "a_m matches induction",
        plus_fail.is_none(),
        detail(&plus_fail),
    );
    report.check_with(
        "a_-m matches restriction",
        minus_fail.is_none(),
        detail(&minus_fail),
    );
    Ok(report)
}

/// The monomials `a_{m_1}(σ_{c_1}) ··· a_{m_k}(σ_{c_k}) 1` of each degree
/// `n ≤ max_degree` have rank `dim C(G_n)`.
pub fn irreducibility_check(
    group: &Arc<FiniteGroup>,
    max_degree: usize,
    exec: Exec,
) -> Result<Report> {
    let mut report = Report::new(format!("vacuum cyclicity {} N={max_degree}", group.name()));
    for n in 0..=max_degree {
        let types = enumerate_types(group, n);
        let vectors = exec.map(&types, |rho| -> Result<WreathClassFunction> {
            let mut u = FockElement::unit(group.clone());
            for (c, p) in rho.entries() {
                for &r in p.parts() {
                    u = a_plus(r, &ClassFunction::sigma(group.clone(), *c), &u)?;
                }
            }
            Ok(u.component(n))
        });
        let vectors: Vec<WreathClassFunction> = vectors.into_iter().collect::<Result<_>>()?;
        let rows: Vec<Vec<Cyclotomic>> = vectors
            .iter()
            .map(|f| types.iter().map(|t| f.value(t)).collect())
            .collect();
        let r = cyclotomic_rank(&rows);
        report.check_with(
            format!("degree {n}"),
            r == types.len(),
            format!("rank {r} of {}", types.len()),
        );
    }
    Ok(report)
}
