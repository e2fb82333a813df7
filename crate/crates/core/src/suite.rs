//! Verification suites grouped the way the command-line tool runs them.

use std::sync::Arc;

use crate::error::Result;
use crate::exec::Exec;
use crate::group::{all_subgroups, mackey_check, ClassFunction, FiniteGroup, SubgroupEmbedding};
use crate::gset::{
    euler_series_check, fixed_point_lemma_check, ktheory_euler_check, macdonald_check,
    orbifold_euler, symmetric_product_check, theorem_main_dim_check, GSet,
};
use crate::heisenberg::{commutator_check, irreducibility_check, sf_commutator_check};
use crate::lambda::{
    adams_identities_report, additivity_check, exponential_identity_check, free_lambda_basis_check,
    h_e_identities,
};
use crate::report::Report;

/// Oracle cap for the element-level operator comparisons in the Heisenberg
/// suite.
pub const HEISENBERG_ORACLE_LIMIT: usize = 2000;

/// A fixed integer class function used alongside the `σ_c` basis.
pub fn sample_class_function(group: &Arc<FiniteGroup>) -> ClassFunction {
    const PATTERN: [i64; 5] = [3, -1, 2, 0, -2];
    let vals: Vec<i64> = (0..group.num_classes())
        .map(|c| PATTERN[c % PATTERN.len()])
        .collect();
    ClassFunction::from_ints(group.clone(), &vals).expect("one value per class")
}

/// Mackey's formula for every ordered pair of subgroups and a spanning set
/// of class functions on the first.
pub fn mackey_sweep(group: &Arc<FiniteGroup>, exec: Exec) -> Result<Report> {
    let subs: Vec<SubgroupEmbedding> = all_subgroups(group)
        .iter()
        .map(|s| SubgroupEmbedding::from_elements(group.clone(), s))
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = (0..subs.len())
        .flat_map(|i| (0..subs.len()).map(move |j| (i, j)))
        .collect();
    let results = exec.map(&pairs, |&(i, j)| -> Result<Option<String>> {
        let h = &subs[i];
        let src = h.source().clone();
        let mut fs: Vec<ClassFunction> = (0..src.num_classes())
            .map(|c| ClassFunction::sigma(src.clone(), c))
            .collect();
        fs.push(sample_class_function(&src));
        for f in &fs {
            if !mackey_check(h, &subs[j], f)? {
                return Ok(Some(format!(
                    "|H|={} |L|={}",
                    h.source().order(),
                    subs[j].source().order()
                )));
            }
        }
        Ok(None)
    });
    let mut report = Report::new(format!("mackey {}", group.name()));
    let mut witness = None;
    for r in results {
        if let Some(w) = r? {
            witness.get_or_insert(w);
        }
    }
    report.check(format!("all {} subgroup pairs", pairs.len()), witness);
    Ok(report)
}

pub fn lambda_verify(group: &Arc<FiniteGroup>, max: usize, exec: Exec) -> Result<Report> {
    let mut report = Report::new(format!("lambda {} N={max}", group.name()));
    let mut payloads: Vec<ClassFunction> = (0..group.num_classes())
        .map(|c| ClassFunction::sigma(group.clone(), c))
        .collect();
    payloads.push(sample_class_function(group));
    let w = sample_class_function(group);
    let trivial = ClassFunction::trivial(group.clone());
    for (i, v) in payloads.iter().enumerate() {
        let mut r = exponential_identity_check(v, max)?;
        r.name = format!("V{i}");
        report.extend(r);
        let mut r = h_e_identities(v, &w, max)?;
        r.name = format!("V{i}");
        report.extend(r);
        let mut add_fail = None;
        for n in 1..=max {
            if !additivity_check(&trivial, v, n)? {
                add_fail.get_or_insert(format!("n={n}"));
            }
        }
        report.check(
            format!("V{i}/additivity of phi^n and the binomial formula"),
            add_fail,
        );
    }
    for n in 1..=max {
        report.extend(free_lambda_basis_check(group, n, exec)?);
    }
    report.extend(adams_identities_report(group, max)?);
    Ok(report)
}

pub fn heisenberg_verify(
    group: &Arc<FiniteGroup>,
    max_degree: usize,
    max_mode: usize,
    exec: Exec,
) -> Result<Report> {
    let mut report = Report::new(String::new());
    report.extend(commutator_check(
        group,
        max_degree,
        max_mode,
        HEISENBERG_ORACLE_LIMIT,
        exec,
    )?);
    report.extend(irreducibility_check(group, max_degree, exec)?);
    for d0 in 0..=2 {
        for d1 in 0..=2 {
            report.extend(sf_commutator_check(d0, d1, max_degree, max_mode)?);
        }
    }
    Ok(report)
}

pub fn euler_verify(x: &GSet, max: usize, limit: usize, exec: Exec) -> Result<Report> {
    let mut report = Report::new(String::new());
    let mut base = Report::new(format!("euler {} |X|={}", x.group().name(), x.size()));
    let e = orbifold_euler(x)?;
    base.check_with(
        "commuting pairs and sectors agree",
        true,
        format!("e(X,G) = {e}"),
    );
    base.check_with(
        "e(X,G) = dim K_G(X) = inertia orbits",
        ktheory_euler_check(x)?,
        format!("{e}"),
    );
    base.check_with(
        "Macdonald: C(|X|+n-1, n) = coefficients of (1-q)^-|X|",
        macdonald_check(x.size(), max),
        format!("|X|={} N={max}", x.size()),
    );
    report.extend(base);
    report.extend(euler_series_check(x, max, limit, exec)?);
    report.extend(theorem_main_dim_check(x, max, limit, exec)?);
    for n in 1..=max {
        report.extend(fixed_point_lemma_check(x, n, limit)?);
        report.extend(symmetric_product_check(x, n, limit, exec)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtins::{cyclic, symmetric};

    #[test]
    fn suites_pass_on_small_groups() {
        let g = Arc::new(symmetric(3).unwrap());
        assert!(mackey_sweep(&g, Exec::Parallel).unwrap().passed());
        let z2 = Arc::new(cyclic(2).unwrap());
        assert!(lambda_verify(&z2, 3, Exec::Parallel).unwrap().passed());
        assert!(heisenberg_verify(&z2, 3, 2, Exec::Parallel)
            .unwrap()
            .passed());
        assert!(euler_verify(&GSet::regular(z2), 3, 50_000, Exec::Parallel)
            .unwrap()
            .passed());
    }

    #[test]
    fn execution_strategy_does_not_change_reports() {
        let s3 = Arc::new(symmetric(3).unwrap());
        let x = GSet::regular(s3.clone());
        assert_eq!(
            crate::fock::hopf_verify(&s3, 3, 50_000, Exec::Sequential).unwrap(),
            crate::fock::hopf_verify(&s3, 3, 50_000, Exec::Parallel).unwrap()
        );
        assert_eq!(
            euler_verify(&x, 2, 50_000, Exec::Sequential).unwrap(),
            euler_verify(&x, 2, 50_000, Exec::Parallel).unwrap()
        );
        assert_eq!(
            mackey_sweep(&s3, Exec::Sequential).unwrap(),
            mackey_sweep(&s3, Exec::Parallel).unwrap()
        );
    }
}
