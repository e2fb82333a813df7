use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::group::FiniteGroup;
use crate::scalars::factorial;

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `m_r`, the multiplicity of the part `r`.
    pub fn multiplicity(&self, r: usize) -> usize {
        self.0.iter().filter(|&&p| p == r).count()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = Π_r r^{m_r} m_r!`, the centralizer order in `S_{|λ|}`.
    pub fn z(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::from(1), |acc, (r, m)| {
                acc * BigInt::from(r).pow(m as u32) * factorial(m as u64)
            })
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::new(parts)
    }

    /// Removes one part equal to `r`.
    pub fn remove_part(&self, r: usize) -> Option<Partition> {
        let i = self.0.iter().position(|&p| p == r)?;
        let mut parts = self.0.clone();
        parts.remove(i);
        Some(Partition(parts))
    }

    /// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A partition-valued function on the conjugacy classes of `G`: the type of
/// an element of `G_n`.
///
/// Canonical form: entries sorted by class id, empty partitions omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WreathType(Vec<(usize, Partition)>);

impl WreathType {
    pub fn empty() -> Self {
        WreathType(Vec::new())
    }

    pub fn from_map(map: BTreeMap<usize, Partition>) -> Self {
        WreathType(map.into_iter().filter(|(_, p)| !p.is_empty()).collect())
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Vec<usize>)>) -> Self {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (c, parts) in pairs {
            map.entry(c).or_default().extend(parts);
        }
        Self::from_map(
            map.into_iter()
                .map(|(c, p)| (c, Partition::new(p)))
                .collect(),
        )
    }

    /// A single `r`-cycle whose cycle product lies in class `c`.
    pub fn cycle(c: usize, r: usize) -> Self {
        WreathType(vec![(c, Partition::new(vec![r]))])
    }

    /// Builds a type from a list of `(cycle length, class)` pairs.
    pub fn from_cycles(cycles: &[(usize, usize)]) -> Self {
        Self::from_pairs(cycles.iter().map(|&(r, c)| (c, vec![r])))
    }

    pub fn entries(&self) -> &[(usize, Partition)] {
        &self.0
    }

    pub fn get(&self, c: usize) -> Option<&Partition> {
        self.0.iter().find(|(d, _)| *d == c).map(|(_, p)| p)
    }

    /// `‖ρ‖ = Σ_c |ρ(c)|`.
    pub fn degree(&self) -> usize {
        self.0.iter().map(|(_, p)| p.size()).sum()
    }

    /// `ℓ(ρ) = Σ_c ℓ(ρ(c))`.
    pub fn length(&self) -> usize {
        self.0.iter().map(|(_, p)| p.len()).sum()
    }

    /// `m_r(c)`.
    pub fn multiplicity(&self, c: usize, r: usize) -> usize {
        self.get(c).map_or(0, |p| p.multiplicity(r))
    }

    /// `(class, part, multiplicity)` triples.
    pub fn multiplicities(&self) -> Vec<(usize, usize, usize)> {
        self.0
            .iter()
            .flat_map(|(c, p)| p.multiplicities().into_iter().map(move |(r, m)| (*c, r, m)))
            .collect()
    }

    /// Disjoint union `ρ ⊔ τ`.
    pub fn union(&self, other: &WreathType) -> WreathType {
        let mut map: BTreeMap<usize, Partition> = self.0.iter().cloned().collect();
        for (c, p) in &other.0 {
            let merged = map.get(c).map_or_else(|| p.clone(), |q| q.union(p));
            map.insert(*c, merged);
        }
        WreathType::from_map(map)
    }

    /// Removes one `r`-cycle over class `c`, if present.
    pub fn remove_cycle(&self, c: usize, r: usize) -> Option<WreathType> {
        let p = self.get(c)?.remove_part(r)?;
        let mut map: BTreeMap<usize, Partition> = self.0.iter().cloned().collect();
        map.insert(c, p);
        Some(WreathType::from_map(map))
    }

    /// `true` when the type is a single `degree`-cycle (over any class).
    pub fn as_single_cycle(&self) -> Option<(usize, usize)> {
        match self.0.as_slice() {
            [(c, p)] if p.len() == 1 => Some((*c, p.parts()[0])),
            _ => None,
        }
    }

    /// `Z_ρ = Π_c z_{ρ(c)} ζ_c^{ℓ(ρ(c))}`, the centralizer order in `G_n`.
    pub fn z_rho(&self, group: &FiniteGroup) -> BigInt {
        self.0.iter().fold(BigInt::from(1), |acc, (c, p)| {
            acc * p.z() * BigInt::from(group.centralizer_order(*c)).pow(p.len() as u32)
        })
    }

    /// All sub-types `τ ⊆ ρ` (as multisets of cycles), each with the
    /// complementary type.
    pub fn splittings(&self) -> Vec<(WreathType, WreathType)> {
        let mults = self.multiplicities();
        let mut out = Vec::new();
        fn go(
            mults: &[(usize, usize, usize)],
            i: usize,
            left: &mut Vec<(usize, usize)>,
            right: &mut Vec<(usize, usize)>,
            out: &mut Vec<(WreathType, WreathType)>,
        ) {
            if i == mults.len() {
                out.push((
                    WreathType::from_cycles(left),
                    WreathType::from_cycles(right),
                ));
                return;
            }
            let (c, r, m) = mults[i];
            for k in 0..=m {
                let (l0, r0) = (left.len(), right.len());
                left.extend(std::iter::repeat_n((r, c), k));
                right.extend(std::iter::repeat_n((r, c), m - k));
                go(mults, i + 1, left, right, out);
                left.truncate(l0);
                right.truncate(r0);
            }
        }
        go(&mults, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for WreathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(c, p)| format!("{c}:{p}")).collect();
        write!(f, "{{{}}}", parts.join(" "))
    }
}

impl Serialize for WreathType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            class: usize,
            partition: &'a Partition,
        }
        let entries: Vec<Entry> = self
            .0
            .iter()
            .map(|(c, p)| Entry {
                class: *c,
                partition: p,
            })
            .collect();
        entries.serialize(s)
    }
}

/// `P_n(G_*)`: all types of degree `n` over `num_classes` classes, sorted.
pub fn enumerate_types_by_count(num_classes: usize, n: usize) -> Vec<WreathType> {
    let mut out = Vec::new();
    fn go(
        c: usize,
        k: usize,
        rem: usize,
        cur: &mut Vec<(usize, Partition)>,
        out: &mut Vec<WreathType>,
    ) {
        if c == k {
            if rem == 0 {
                out.push(WreathType(cur.clone()));
            }
            return;
        }
        for size in 0..=rem {
            if size == 0 {
                go(c + 1, k, rem, cur, out);
                continue;
            }
            for p in Partition::all(size) {
                cur.push((c, p));
                go(c + 1, k, rem - size, cur, out);
                cur.pop();
            }
        }
    }
    go(0, num_classes, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn enumerate_types(group: &FiniteGroup, n: usize) -> Vec<WreathType> {
    enumerate_types_by_count(group.num_classes(), n)
}
