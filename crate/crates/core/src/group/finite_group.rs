use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A finite group given by its full multiplication table.
///
/// Element `0` is the identity. Conjugacy classes are ordered by their
/// smallest member, so class `0` is always the identity class.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<usize>,
    exponent: usize,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    centralizer_orders: Vec<usize>,
    /// `power_class[k][c]` is the class of `g^k` for `g ∈ c`, `0 ≤ k < exponent`.
    power_class: Vec<Vec<usize>>,
}

impl FiniteGroup {
    /// Validates a Cayley table: square, entries in range, identity present,
    /// every row and column a permutation, and associativity.
    ///
    /// If the identity is not labelled `0`, it is swapped with `0`.
    pub fn from_cayley(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidTable(format!(
                    "entry {bad} out of range in row {i}"
                )));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::InvalidTable("no identity element".into()))?;
        for x in 0..n {
            if !(0..n).any(|y| table[x][y] == e && table[y][x] == e) {
                return Err(Error::InvalidTable(format!(
                    "element {x} has no two-sided inverse"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        // relabel so that the identity is 0
        let relabel = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut flat = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[relabel(a) * n + relabel(b)] = relabel(table[a][b]) as u32;
            }
        }
        Ok(Self::from_flat_table("cayley".into(), n, flat))
    }

    /// Closure of permutation generators (0-indexed image vectors).
    ///
    /// Elements are sorted lexicographically by image vector, which puts the
    /// identity first. The product is composition `(gh)(x) = g(h(x))`.
    pub fn from_permutations(
        generators: &[Vec<usize>],
        degree: usize,
        limit: usize,
    ) -> Result<Self> {
        for g in generators {
            validate_permutation(g, degree)?;
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y: Vec<usize> = x.iter().map(|&i| g[i]).collect();
                if !seen.contains_key(&y) {
                    if seen.len() >= limit {
                        return Err(Error::ClosureTooLarge { limit });
                    }
                    seen.insert(y.clone(), ());
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<Vec<usize>> = seen.into_keys().collect();
        elements.sort();
        Ok(Self::from_elements("perm".into(), elements, |a, b| {
            b.iter().map(|&i| a[i]).collect()
        }))
    }

    /// Builds the table of a known group from an element list whose first
    /// entry is the identity. Closure and associativity are the caller's
    /// responsibility; closure is asserted.
    pub fn from_elements<T, F>(name: String, elements: Vec<T>, mul: F) -> Self
    where
        T: Eq + Hash + Clone,
        F: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut flat = vec![0u32; n * n];
        for (a, x) in elements.iter().enumerate() {
            for (b, y) in elements.iter().enumerate() {
                let p = mul(x, y);
                flat[a * n + b] = *index.get(&p).expect("element list is not closed") as u32;
            }
        }
        Self::from_flat_table(name, n, flat)
    }

    pub(crate) fn from_flat_table(name: String, n: usize, table: Vec<u32>) -> Self {
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a * n + b] == 0)
                .expect("missing inverse");
        }
        let mut g = Self {
            name,
            order: n,
            table,
            inverse,
            exponent: 1,
            classes: Vec::new(),
            class_of: vec![usize::MAX; n],
            centralizer_orders: Vec::new(),
            power_class: Vec::new(),
        };
        g.compute_classes();
        g.compute_powers();
        g
    }

    fn compute_classes(&mut self) {
        let n = self.order;
        for x in 0..n {
            if self.class_of[x] != usize::MAX {
                continue;
            }
            let id = self.classes.len();
            let mut members = Vec::new();
            for y in 0..n {
                let c = self.conj(y, x);
                if self.class_of[c] == usize::MAX {
                    self.class_of[c] = id;
                    members.push(c);
                }
            }
            members.sort_unstable();
            self.classes.push(members);
        }
        self.centralizer_orders = self.classes.iter().map(|c| n / c.len()).collect();
    }

    fn compute_powers(&mut self) {
        let orders: Vec<usize> = (0..self.order).map(|g| self.element_order(g)).collect();
        self.exponent = orders.iter().fold(1, |acc, &o| acc.lcm(&o));
        let reps: Vec<usize> = self.classes.iter().map(|c| c[0]).collect();
        self.power_class = (0..self.exponent)
            .map(|k| {
                reps.iter()
                    .map(|&g| self.class_of[self.pow(g, k)])
                    .collect()
            })
            .collect();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `y x y^{-1}`.
    #[inline]
    pub fn conj(&self, y: usize, x: usize) -> usize {
        self.mul(self.mul(y, x), self.inverse[y])
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// The exponent `m`: lcm of all element orders.
    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    /// `ζ_c`, the centralizer order of an element of class `c`.
    pub fn centralizer_order(&self, c: usize) -> usize {
        self.centralizer_orders[c]
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, c: usize, k: usize) -> usize {
        self.power_class[k % self.exponent][c]
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.order).filter(|&h| self.commute(g, h)).collect()
    }

    /// Direct product; element `(a, b)` has id `a * |H| + b`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (ng, nh) = (g.order, h.order);
        let n = ng * nh;
        let mut flat = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / nh, x % nh);
                let (ya, yb) = (y / nh, y % nh);
                flat[x * n + y] = (g.mul(xa, ya) * nh + h.mul(xb, yb)) as u32;
            }
        }
        Self::from_flat_table(format!("{}x{}", g.name, h.name), n, flat)
    }

    /// The multiplication table as rows, in the ingestion format.
    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.order == other.order && self.table == other.table)
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("classes", &self.classes.len())
            .field("exponent", &self.exponent)
            .finish()
    }
}

pub(crate) fn validate_permutation(p: &[usize], degree: usize) -> Result<()> {
    if p.len() != degree {
        return Err(Error::InvalidPermutation(format!(
            "expected {degree} images, got {}",
            p.len()
        )));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return Err(Error::InvalidPermutation(format!(
                "{p:?} is not a bijection"
            )));
        }
        seen[x] = true;
    }
    Ok(())
}
