use std::collections::BTreeMap;

use super::{Partition, WreathType};
use crate::error::{Error, Result};
use crate::group::{validate_permutation, FiniteGroup};

/// An element `(g, s)` of `G_n = G^n ⋊ S_n`.
///
/// `perm[i]` is `s(i)` (0-indexed). The product is
/// `(g, s)(h, t) = (g · s(h), st)` with `s(h)_i = h_{s^{-1}(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub g: Vec<usize>,
    pub perm: Vec<usize>,
}

impl WreathElement {
    pub fn new(g: Vec<usize>, perm: Vec<usize>, group: &FiniteGroup) -> Result<Self> {
        if g.len() != perm.len() {
            return Err(Error::DegreeMismatch(g.len(), perm.len()));
        }
        validate_permutation(&perm, g.len())?;
        if let Some(&bad) = g.iter().find(|&&x| x >= group.order()) {
            return Err(Error::InvalidParameter(format!(
                "group element {bad} out of range"
            )));
        }
        Ok(Self { g, perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            g: vec![0; n],
            perm: (0..n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.perm.len()
    }

    /// Cycles of `s`, each listed as `[i, s(i), s(s(i)), ...]` starting from
    /// its smallest index; cycles ordered by that index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i);
                i = self.perm[i];
            }
            out.push(cyc);
        }
        out
    }

    /// Block-diagonal embedding of `G_m × G_k` into `G_{m+k}`.
    pub fn concat(&self, other: &WreathElement) -> WreathElement {
        let m = self.degree();
        let mut g = self.g.clone();
        g.extend_from_slice(&other.g);
        let mut perm = self.perm.clone();
        perm.extend(other.perm.iter().map(|&p| p + m));
        WreathElement { g, perm }
    }

    /// Splits a block-diagonal element back into its two blocks, if `s`
    /// preserves `{0..m}`.
    pub fn split(&self, m: usize) -> Option<(WreathElement, WreathElement)> {
        if self.perm[..m].iter().any(|&p| p >= m) {
            return None;
        }
        let left = WreathElement {
            g: self.g[..m].to_vec(),
            perm: self.perm[..m].to_vec(),
        };
        let right = WreathElement {
            g: self.g[m..].to_vec(),
            perm: self.perm[m..].iter().map(|&p| p - m).collect(),
        };
        Some((left, right))
    }
}

pub fn wreath_mul(
    group: &FiniteGroup,
    a: &WreathElement,
    b: &WreathElement,
) -> Result<WreathElement> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    Ok(mul_unchecked(group, a, b))
}

pub(crate) fn mul_unchecked(
    group: &FiniteGroup,
    a: &WreathElement,
    b: &WreathElement,
) -> WreathElement {
    let n = a.degree();
    let mut s_inv = vec![0; n];
    for (i, &p) in a.perm.iter().enumerate() {
        s_inv[p] = i;
    }
    let g = (0..n).map(|i| group.mul(a.g[i], b.g[s_inv[i]])).collect();
    let perm = (0..n).map(|i| a.perm[b.perm[i]]).collect();
    WreathElement { g, perm }
}

pub fn wreath_inverse(group: &FiniteGroup, a: &WreathElement) -> WreathElement {
    let n = a.degree();
    let mut s_inv = vec![0; n];
    for (i, &p) in a.perm.iter().enumerate() {
        s_inv[p] = i;
    }
    let g = (0..n).map(|i| group.inv(a.g[a.perm[i]])).collect();
    WreathElement { g, perm: s_inv }
}

/// `(cycle length, class of the cycle product g_{i_r} ··· g_{i_1})` for
/// each cycle `i_1 -> i_2 -> ... -> i_r` of `s`.
pub fn cycle_products(group: &FiniteGroup, a: &WreathElement) -> Vec<(usize, usize)> {
    a.cycles()
        .into_iter()
        .map(|cyc| {
            let prod = cyc.iter().rev().fold(0, |acc, &i| group.mul(acc, a.g[i]));
            (cyc.len(), group.class_of(prod))
        })
        .collect()
}

pub fn type_of(group: &FiniteGroup, a: &WreathElement) -> WreathType {
    let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (r, c) in cycle_products(group, a) {
        map.entry(c).or_default().push(r);
    }
    WreathType::from_map(
        map.into_iter()
            .map(|(c, p)| (c, Partition::new(p)))
            .collect(),
    )
}

/// A canonical element of type `ρ`: one block per cycle, each a cyclic
/// shift carrying the class representative in its first slot.
pub fn representative(group: &FiniteGroup, rho: &WreathType) -> WreathElement {
    let mut out = WreathElement::identity(0);
    for (c, p) in rho.entries() {
        for &r in p.parts() {
            let mut g = vec![0; r];
            g[0] = group.representative(*c);
            let block = WreathElement {
                g,
                perm: (0..r).map(|i| (i + 1) % r).collect(),
            };
            out = out.concat(&block);
        }
    }
    out
}
