//! Subgroup embeddings, induction/restriction of class functions, double
//! cosets and the Mackey restriction-of-induction check.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::{ClassFunction, FiniteGroup};
use crate::error::{Error, Result};
use crate::scalars::{Cyclotomic, Rational};

/// An injective homomorphism `H -> G`, given on element ids.
#[derive(Clone, Debug)]
pub struct SubgroupEmbedding {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<usize>,
    /// preimage of each target element, `usize::MAX` off the image
    preimage: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<usize>,
    ) -> Result<Self> {
        if map.len() != source.order() {
            return Err(Error::InvalidEmbedding(
                "map length differs from source order".into(),
            ));
        }
        let mut preimage = vec![usize::MAX; target.order()];
        for (h, &g) in map.iter().enumerate() {
            if g >= target.order() {
                return Err(Error::InvalidEmbedding(format!("image {g} out of range")));
            }
            if preimage[g] != usize::MAX {
                return Err(Error::InvalidEmbedding("map is not injective".into()));
            }
            preimage[g] = h;
        }
        if map[0] != 0 {
            return Err(Error::InvalidEmbedding(
                "identity must map to identity".into(),
            ));
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::InvalidEmbedding(format!(
                        "not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(Self {
            source,
            target,
            map,
            preimage,
        })
    }

    /// The subgroup consisting of `elements` (target ids), which must be
    /// closed under multiplication. Source ids follow target id order.
    pub fn from_elements(target: Arc<FiniteGroup>, elements: &[usize]) -> Result<Self> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::InvalidEmbedding(
                "subgroup must contain the identity".into(),
            ));
        }
        let mut pos = vec![usize::MAX; target.order()];
        for (i, &g) in elems.iter().enumerate() {
            pos[g] = i;
        }
        let n = elems.len();
        let mut flat = vec![0u32; n * n];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = pos[target.mul(a, b)];
                if p == usize::MAX {
                    return Err(Error::InvalidEmbedding("element set is not closed".into()));
                }
                flat[i * n + j] = p as u32;
            }
        }
        let source = Arc::new(FiniteGroup::from_flat_table(
            format!("sub{n}({})", target.name()),
            n,
            flat,
        ));
        Self::new(source, target, elems)
    }

    pub fn generated_by(target: Arc<FiniteGroup>, gens: &[usize]) -> Result<Self> {
        let elems = closure(&target, gens);
        Self::from_elements(target, &elems)
    }

    pub fn identity(group: Arc<FiniteGroup>) -> Self {
        let map: Vec<usize> = (0..group.order()).collect();
        Self::new(group.clone(), group, map).expect("identity map is an embedding")
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn map(&self, h: usize) -> usize {
        self.map[h]
    }

    pub fn image(&self) -> &[usize] {
        &self.map
    }

    pub fn preimage(&self, g: usize) -> Option<usize> {
        let h = self.preimage[g];
        (h != usize::MAX).then_some(h)
    }

    fn check_source(&self, f: &ClassFunction) -> Result<()> {
        if **f.group() != *self.source {
            return Err(Error::InvalidEmbedding(
                "class function is not on the source group".into(),
            ));
        }
        Ok(())
    }
}

/// Subgroup generated by `gens`, as a sorted element list.
pub fn closure(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut stack = vec![0];
    let mut out = vec![0];
    while let Some(x) = stack.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                stack.push(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Every subgroup of `g`, as sorted element lists in a deterministic order.
///
/// Starts from the cyclic subgroups and closes under joins.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> = (0..g.order()).map(|x| closure(g, &[x])).collect();
    loop {
        let current: Vec<Vec<usize>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let gens: Vec<usize> = a.iter().chain(b).copied().collect();
                if found.insert(closure(g, &gens)) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Induced class function on the target of `emb`:
/// `(Ind f)(g) = |H|^{-1} Σ_{x ∈ G, x^{-1} g x ∈ H} f(x^{-1} g x)`.
pub fn induce_cf(emb: &SubgroupEmbedding, f: &ClassFunction) -> Result<ClassFunction> {
    emb.check_source(f)?;
    let g = emb.target();
    let m = g.exponent();
    let inv_h = Rational::new(1.into(), (emb.source().order() as i64).into());
    let mut values = Vec::with_capacity(g.num_classes());
    for c in 0..g.num_classes() {
        let rep = g.representative(c);
        let mut acc = Cyclotomic::zero(f.group().exponent());
        for x in 0..g.order() {
            let y = g.conj(g.inv(x), rep);
            if let Some(h) = emb.preimage(y) {
                acc += f.at(h);
            }
        }
        values.push(lift_modulus(&acc.scale(&inv_h), m));
    }
    ClassFunction::new(g.clone(), values)
}

/// Restriction along the embedding: `(Res χ)(h) = χ(emb(h))`.
pub fn restrict_cf(emb: &SubgroupEmbedding, chi: &ClassFunction) -> Result<ClassFunction> {
    if **chi.group() != **emb.target() {
        return Err(Error::InvalidEmbedding(
            "class function is not on the target group".into(),
        ));
    }
    let h = emb.source();
    let m = h.exponent();
    let values = (0..h.num_classes())
        .map(|c| reduce_modulus(chi.at(emb.map(h.representative(c))), m))
        .collect::<Result<Vec<_>>>()?;
    ClassFunction::new(h.clone(), values)
}

/// Re-express a value over `Q[ζ_m]/(ζ_m^m - 1)` for a multiple `target` of `m`.
pub(crate) fn lift_modulus(v: &Cyclotomic, target: usize) -> Cyclotomic {
    let m = v.modulus();
    if m == target {
        return v.clone();
    }
    assert_eq!(target % m, 0, "modulus {m} does not divide {target}");
    let step = target / m;
    let mut out = Cyclotomic::zero(target);
    for (k, c) in v.coeffs().iter().enumerate() {
        out += &Cyclotomic::zeta_pow(target, k * step).scale(c);
    }
    out
}

/// Inverse of [`lift_modulus`] where the value lies in the smaller ring.
pub(crate) fn reduce_modulus(v: &Cyclotomic, target: usize) -> Result<Cyclotomic> {
    let m = v.modulus();
    if m == target {
        return Ok(v.clone());
    }
    if !m.is_multiple_of(target) {
        return Err(Error::ModulusMismatch(m, target));
    }
    let step = m / target;
    let mut coeffs = vec![Rational::from_integer(0.into()); target];
    for (k, c) in v.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        if k % step != 0 {
            return Err(Error::ModulusMismatch(m, target));
        }
        coeffs[k / step] = c.clone();
    }
    Ok(Cyclotomic::from_coeffs(coeffs))
}

/// Representatives (smallest ids) of the double cosets `H g L` in the common
/// target group.
pub fn double_cosets(h: &SubgroupEmbedding, l: &SubgroupEmbedding) -> Result<Vec<usize>> {
    if **h.target() != **l.target() {
        return Err(Error::InvalidEmbedding(
            "embeddings have different targets".into(),
        ));
    }
    let g = h.target();
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &a in h.image() {
            let ax = g.mul(a, x);
            for &b in l.image() {
                seen[g.mul(ax, b)] = true;
            }
        }
    }
    Ok(reps)
}

/// Checks `Res_L Ind_H^G f = Σ_s Ind_{H_s}^L f^s`, where `s` runs over the
/// double cosets `L s H`, `H_s = s H s^{-1} ∩ L` and
/// `f^s(x) = f(s^{-1} x s)`. Both sides are evaluated on the classes of `L`.
pub fn mackey_check(
    h: &SubgroupEmbedding,
    l: &SubgroupEmbedding,
    f: &ClassFunction,
) -> Result<bool> {
    let lhs = restrict_cf(l, &induce_cf(h, f)?)?;
    let g = h.target();
    let lg = l.source();
    let modulus = f.group().exponent();
    let mut rhs: Vec<Cyclotomic> = vec![Cyclotomic::zero(modulus); lg.num_classes()];
    for s in double_cosets(l, h)? {
        let s_inv = g.inv(s);
        // H_s inside G: elements x of L with s^{-1} x s in H
        let in_hs = |x: usize| h.preimage(g.mul(g.mul(s_inv, x), s));
        let hs_order = l.image().iter().filter(|&&x| in_hs(x).is_some()).count();
        let inv_order = Rational::new(1.into(), (hs_order as i64).into());
        for (c, slot) in rhs.iter_mut().enumerate() {
            let t = l.map(lg.representative(c));
            let mut acc = Cyclotomic::zero(modulus);
            for &y in l.image() {
                let x = g.conj(g.inv(y), t);
                if let Some(hx) = in_hs(x) {
                    acc += f.at(hx);
                }
            }
            *slot += &acc.scale(&inv_order);
        }
    }
    let common = num_integer::lcm(modulus, lg.exponent());
    for (c, v) in rhs.iter().enumerate() {
        if lift_modulus(v, common) != lift_modulus(lhs.value(c), common) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::builtins::{binary_dihedral, dihedral, symmetric};
    use crate::scalars::rat;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(symmetric(3).unwrap())
    }

    fn transposition(g: &FiniteGroup) -> usize {
        (1..g.order()).find(|&x| g.element_order(x) == 2).unwrap()
    }

    fn three_cycle(g: &FiniteGroup) -> usize {
        (1..g.order()).find(|&x| g.element_order(x) == 3).unwrap()
    }

    /// Induction straight from the definition, summed over all of G.
    fn induce_oracle(emb: &SubgroupEmbedding, f: &ClassFunction, g_elem: usize) -> Rational {
        let g = emb.target();
        let mut acc = rat(0);
        for x in 0..g.order() {
            let y = g.mul(g.mul(g.inv(x), g_elem), x);
            if let Some(h) = emb.preimage(y) {
                acc += f.at(h).as_rational().unwrap();
            }
        }
        acc / rat(emb.source().order() as i64)
    }

    #[test]
    fn regular_from_trivial_subgroup() {
        let g = s3();
        let triv_sub = SubgroupEmbedding::from_elements(g.clone(), &[0]).unwrap();
        let f = ClassFunction::trivial(triv_sub.source().clone());
        assert_eq!(induce_cf(&triv_sub, &f).unwrap(), ClassFunction::regular(g));
    }

    #[test]
    fn permutation_character_from_transposition_subgroup() {
        let g = s3();
        let t = transposition(&g);
        let h = SubgroupEmbedding::generated_by(g.clone(), &[t]).unwrap();
        let ind = induce_cf(&h, &ClassFunction::trivial(h.source().clone())).unwrap();
        for x in 0..6 {
            let expected = match g.element_order(x) {
                1 => 3,
                2 => 1,
                _ => 0,
            };
            assert_eq!(ind.at(x).as_rational().unwrap(), &rat(expected));
            assert_eq!(
                induce_oracle(&h, &ClassFunction::trivial(h.source().clone()), x),
                rat(expected)
            );
        }
    }

    #[test]
    fn restrictions() {
        let g = s3();
        let c3 = SubgroupEmbedding::generated_by(g.clone(), &[three_cycle(&g)]).unwrap();
        assert_eq!(c3.source().order(), 3);
        let triv = ClassFunction::trivial(g.clone());
        assert_eq!(
            restrict_cf(&c3, &triv).unwrap(),
            ClassFunction::trivial(c3.source().clone())
        );
        let reg = restrict_cf(&c3, &ClassFunction::regular(g.clone())).unwrap();
        assert_eq!(reg.value(0).as_rational().unwrap(), &rat(6));
        assert!(reg.values()[1..].iter().all(Cyclotomic::is_zero));
        // the (3,1,0) permutation character restricts to (3,0,0) on Z/3
        let t = transposition(&g);
        let h = SubgroupEmbedding::generated_by(g.clone(), &[t]).unwrap();
        let perm = induce_cf(&h, &ClassFunction::trivial(h.source().clone())).unwrap();
        let res = restrict_cf(&c3, &perm).unwrap();
        let vals: Vec<Rational> = res
            .values()
            .iter()
            .map(|v| v.as_rational().unwrap().clone())
            .collect();
        assert_eq!(vals, vec![rat(3), rat(0), rat(0)]);
    }

    #[test]
    fn frobenius_reciprocity_spot_check() {
        let g = s3();
        let h = SubgroupEmbedding::generated_by(g.clone(), &[transposition(&g)]).unwrap();
        let f = ClassFunction::from_ints(h.source().clone(), &[5, -2]).unwrap();
        let chi = ClassFunction::from_ints(g.clone(), &[1, 4, -3]).unwrap();
        let lhs = induce_cf(&h, &f).unwrap().inner_product(&chi).unwrap();
        let rhs = f.inner_product(&restrict_cf(&h, &chi).unwrap()).unwrap();
        assert_eq!(lhs, lift_modulus(&rhs, g.exponent()));
        assert_eq!(lhs.as_rational(), rhs.as_rational());
    }

    #[test]
    fn double_coset_counts() {
        let g = s3();
        let whole = SubgroupEmbedding::identity(g.clone());
        assert_eq!(double_cosets(&whole, &whole).unwrap(), vec![0]);
        let triv = SubgroupEmbedding::from_elements(g.clone(), &[0]).unwrap();
        assert_eq!(double_cosets(&triv, &triv).unwrap().len(), 6);
        let h = SubgroupEmbedding::generated_by(g.clone(), &[transposition(&g)]).unwrap();
        assert_eq!(double_cosets(&h, &h).unwrap().len(), 2);
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(all_subgroups(&symmetric(3).unwrap()).len(), 6);
        assert_eq!(all_subgroups(&dihedral(4).unwrap()).len(), 10);
        assert_eq!(all_subgroups(&binary_dihedral(2).unwrap()).len(), 6);
    }

    #[test]
    fn mackey_with_whole_group() {
        let g = s3();
        let whole = SubgroupEmbedding::identity(g.clone());
        let l = SubgroupEmbedding::generated_by(g.clone(), &[three_cycle(&g)]).unwrap();
        let f = ClassFunction::from_ints(g.clone(), &[2, 7, -1]).unwrap();
        assert!(mackey_check(&whole, &l, &f).unwrap());
    }

    #[test]
    fn invalid_embeddings() {
        let g = s3();
        let z2 = Arc::new(crate::group::builtins::cyclic(2).unwrap());
        assert!(SubgroupEmbedding::new(z2.clone(), g.clone(), vec![0, 0]).is_err());
        // a 3-cycle is not an involution, so this is not a homomorphism
        assert!(SubgroupEmbedding::new(z2, g.clone(), vec![0, three_cycle(&g)]).is_err());
        assert!(SubgroupEmbedding::from_elements(
            g.clone(),
            &[0, transposition(&g), three_cycle(&g)]
        )
        .is_err());
    }

    #[test]
    fn modulus_lifting_round_trips() {
        let v = Cyclotomic::zeta_pow(3, 1);
        let up = lift_modulus(&v, 6);
        assert_eq!(up, Cyclotomic::zeta_pow(6, 2));
        assert_eq!(reduce_modulus(&up, 3).unwrap(), v);
        assert!(reduce_modulus(&Cyclotomic::zeta_pow(6, 1), 3).is_err());
    }
}
