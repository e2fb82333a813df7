//! Finite `G`-sets: fixed points, inertia counts and orbifold Euler
//! characteristics.

mod euler;

use std::sync::Arc;

use serde::Deserialize;

pub use euler::{
    euler_series_check, fixed_point_lemma_check, ktheory_euler_check, macdonald_check, mckay_table,
    orbifold_euler, symmetric_product_check, theorem_main_dim_check, McKayRow,
};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, SubgroupEmbedding};
use crate::wreath::WreathGroup;

/// A finite set `0..size` with a left action `action[g][x] = g·x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    group: Arc<FiniteGroup>,
    size: usize,
    action: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct GSetJson {
    size: usize,
    action: Vec<Vec<usize>>,
}

impl GSet {
    pub fn new(group: Arc<FiniteGroup>, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} rows for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        let size = action.first().map_or(0, Vec::len);
        for (g, row) in action.iter().enumerate() {
            let mut seen = vec![false; size];
            if row.len() != size
                || row
                    .iter()
                    .any(|&x| x >= size || std::mem::replace(&mut seen[x], true))
            {
                return Err(Error::InvalidAction(format!(
                    "row {g} is not a permutation of 0..{size}"
                )));
            }
        }
        if action[0].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidAction("identity acts nontrivially".into()));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                let gh = group.mul(g, h);
                if let Some(x) = (0..size).find(|&x| action[g][action[h][x]] != action[gh][x]) {
                    return Err(Error::InvalidAction(format!(
                        "(g h)x != g(h x) at g={g} h={h} x={x}"
                    )));
                }
            }
        }
        Ok(Self {
            group,
            size,
            action,
        })
    }

    /// Parses `{"size": k, "action": [[...], ...]}` with one row per group
    /// element.
    pub fn from_json(group: Arc<FiniteGroup>, text: &str) -> Result<Self> {
        let parsed: GSetJson =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        let set = Self::new(group, parsed.action)?;
        if set.size != parsed.size {
            return Err(Error::InvalidAction(format!(
                "size {} does not match rows of length {}",
                parsed.size, set.size
            )));
        }
        Ok(set)
    }

    pub fn point(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        Self {
            group,
            size: 1,
            action: vec![vec![0]; n],
        }
    }

    pub fn regular(group: Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action = (0..n)
            .map(|g| (0..n).map(|x| group.mul(g, x)).collect())
            .collect();
        Self {
            group,
            size: n,
            action,
        }
    }

    /// `G/H` with `g·(xH) = (gx)H`; cosets numbered by smallest member.
    pub fn coset_space(emb: &SubgroupEmbedding) -> Self {
        let group = emb.target().clone();
        let n = group.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] != usize::MAX {
                continue;
            }
            for &h in emb.image() {
                coset_of[group.mul(x, h)] = reps.len();
            }
            reps.push(x);
        }
        let action = (0..n)
            .map(|g| reps.iter().map(|&x| coset_of[group.mul(g, x)]).collect())
            .collect();
        Self {
            group,
            size: reps.len(),
            action,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn action(&self) -> &[Vec<usize>] {
        &self.action
    }

    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.action[g][x] == x).collect()
    }

    /// Number of orbits of the subgroup with the given elements on `points`
    /// (which must be stable under it).
    pub fn orbit_count_on(&self, elements: &[usize], points: &[usize]) -> usize {
        let mut label = vec![usize::MAX; self.size];
        let mut count = 0;
        for &p in points {
            if label[p] != usize::MAX {
                continue;
            }
            let mut stack = vec![p];
            label[p] = count;
            while let Some(x) = stack.pop() {
                for &h in elements {
                    let y = self.action[h][x];
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        count
    }

    pub fn orbit_count(&self, elements: &[usize]) -> usize {
        self.orbit_count_on(elements, &(0..self.size).collect::<Vec<_>>())
    }

    /// Per class `c`: the orbits of `Z_G(g_c)` on `X^{g_c}`.
    pub fn inertia_basis(&self) -> InertiaBasis {
        let g = &self.group;
        let mut entries = Vec::new();
        for c in 0..g.num_classes() {
            let rep = g.representative(c);
            let fixed = self.fixed_points(rep);
            let cent = g.centralizer(rep);
            let mut seen = vec![false; self.size];
            for &x in &fixed {
                if seen[x] {
                    continue;
                }
                let mut orbit: Vec<usize> = cent.iter().map(|&h| self.action[h][x]).collect();
                orbit.sort_unstable();
                orbit.dedup();
                for &y in &orbit {
                    seen[y] = true;
                }
                entries.push(InertiaEntry {
                    class: c,
                    element: rep,
                    point: x,
                    orbit,
                });
            }
        }
        InertiaBasis { entries }
    }

    /// `dim K_G(X) = Σ_c |X^c / Z_G(c)|`.
    pub fn inertia_dim(&self) -> usize {
        self.inertia_basis().entries.len()
    }

    /// `G`-orbits on `{(g, x) : g x = x}` under `h·(g, x) = (h g h^{-1}, h x)`.
    pub fn inertia_orbit_count(&self) -> usize {
        let g = &self.group;
        let pairs: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|e| self.fixed_points(e).into_iter().map(move |x| (e, x)))
            .collect();
        let index: std::collections::HashMap<(usize, usize), usize> =
            pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut seen = vec![false; pairs.len()];
        let mut count = 0;
        for i in 0..pairs.len() {
            if seen[i] {
                continue;
            }
            count += 1;
            let (e, x) = pairs[i];
            for h in 0..g.order() {
                seen[index[&(g.conj(h, e), self.action[h][x])]] = true;
            }
        }
        count
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaEntry {
    pub class: usize,
    pub element: usize,
    pub point: usize,
    pub orbit: Vec<usize>,
}

/// One entry per pair (class `c`, orbit of `Z_G(g_c)` on `X^{g_c}`), with
/// the representative `(g_c, x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InertiaBasis {
    pub entries: Vec<InertiaEntry>,
}

impl InertiaBasis {
    pub fn count_for_class(&self, c: usize) -> usize {
        self.entries.iter().filter(|e| e.class == c).count()
    }
}

/// `X^n` as a `G_n`-set, `a·(x_1, …, x_n) = (g_1 x_{s^{-1}(1)}, …)`.
/// Tuples are numbered `Σ_i x_i |X|^i`; group element ids follow
/// [`WreathGroup`].
pub fn gset_power(x: &GSet, n: usize, limit: usize) -> Result<(WreathGroup, GSet)> {
    let wg = WreathGroup::new(x.group.clone(), n, limit)?;
    let points = x.size.checked_pow(n as u32).unwrap_or(usize::MAX);
    let cells = (points as u128) * (wg.order() as u128);
    if cells > limit as u128 * 1000 {
        return Err(Error::SizeExceeded {
            size: cells,
            limit: limit as u128 * 1000,
        });
    }
    let group = Arc::new(wg.to_finite_group(limit)?);
    let k = x.size;
    let decode = |mut p: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let v = p % k;
                p /= k;
                v
            })
            .collect()
    };
    let encode = |t: &[usize]| t.iter().rev().fold(0, |acc, &v| acc * k + v);
    let tuples: Vec<Vec<usize>> = (0..points).map(decode).collect();
    let action = (0..wg.order())
        .map(|i| {
            let a = wg.element(i);
            let mut inv = vec![0; n];
            for (j, &p) in a.perm.iter().enumerate() {
                inv[p] = j;
            }
            tuples
                .iter()
                .map(|t| {
                    let img: Vec<usize> = (0..n).map(|j| x.action[a.g[j]][t[inv[j]]]).collect();
                    encode(&img)
                })
                .collect()
        })
        .collect();
    Ok((
        wg,
        GSet {
            group,
            size: points,
            action,
        },
    ))
}
