use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::report::Report;
use crate::scalars::{graded_dim_series, rat, Rational, TruncSeries};

/// A monomial in `S(⊕_r W[r])`: sorted `(mode, generator)` entries, odd
/// generators appearing at most once.
pub type Monomial = Vec<(usize, usize)>;

/// Super-symmetric Fock space on `W = W_0 ⊕ W_1`; generators `0..d0` are
/// even and `d0..d0+d1` odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuperFockSpace {
    pub d0: usize,
    pub d1: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuperFockElement {
    pub terms: BTreeMap<Monomial, Rational>,
}

impl SuperFockElement {
    pub fn vacuum() -> Self {
        Self::monomial(Vec::new())
    }

    pub fn monomial(m: Monomial) -> Self {
        Self {
            terms: BTreeMap::from([(m, rat(1))]),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        let e = self.terms.entry(m.clone()).or_insert_with(|| rat(0));
        *e += c;
        if *e == rat(0) {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), c * r);
        }
        out
    }
}

/// One of `a_m(w_i)` or `a_{-m}(η_i)` for a basis generator `i`, with
/// `⟨η_i, w_j⟩ = δ_{ij}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuperOp {
    Creation { mode: usize, gen: usize },
    Annihilation { mode: usize, gen: usize },
}

impl SuperFockSpace {
    pub fn new(d0: usize, d1: usize) -> Self {
        Self { d0, d1 }
    }

    pub fn is_odd(&self, gen: usize) -> bool {
        gen >= self.d0
    }

    fn check_gen(&self, gen: usize, mode: usize) -> Result<()> {
        if gen >= self.d0 + self.d1 {
            return Err(Error::InvalidParameter(format!(
                "generator {gen} out of range"
            )));
        }
        if mode == 0 {
            return Err(Error::InvalidParameter("mode must be at least 1".into()));
        }
        Ok(())
    }

    fn odd_count(&self, entries: &[(usize, usize)]) -> usize {
        entries.iter().filter(|(_, g)| self.is_odd(*g)).count()
    }

    /// Left multiplication by `w_gen[mode]`, with the Koszul sign from moving
    /// it past the odd entries before its sorted position.
    pub fn sf_a_plus(
        &self,
        gen: usize,
        mode: usize,
        u: &SuperFockElement,
    ) -> Result<SuperFockElement> {
        self.check_gen(gen, mode)?;
        let odd = self.is_odd(gen);
        let mut out = SuperFockElement::default();
        for (m, c) in &u.terms {
            let entry = (mode, gen);
            if odd && m.contains(&entry) {
                continue;
            }
            let pos = m.partition_point(|e| *e < entry);
            let sign = if odd && self.odd_count(&m[..pos]) % 2 == 1 {
                rat(-1)
            } else {
                rat(1)
            };
            let mut new = m.clone();
            new.insert(pos, entry);
            out.accumulate(new, c * sign);
        }
        Ok(out)
    }

    /// Superderivation removing one `(mode, gen)` entry with coefficient
    /// `mode · ⟨η_gen, w_gen⟩ = mode`.
    pub fn sf_a_minus(
        &self,
        gen: usize,
        mode: usize,
        u: &SuperFockElement,
    ) -> Result<SuperFockElement> {
        self.check_gen(gen, mode)?;
        let odd = self.is_odd(gen);
        let mut out = SuperFockElement::default();
        for (m, c) in &u.terms {
            for (p, e) in m.iter().enumerate() {
                if *e != (mode, gen) {
                    continue;
                }
                let sign = if odd && self.odd_count(&m[..p]) % 2 == 1 {
                    rat(-1)
                } else {
                    rat(1)
                };
                let mut new = m.clone();
                new.remove(p);
                out.accumulate(new, c * sign * rat(mode as i64));
            }
        }
        Ok(out)
    }

    pub fn apply(&self, op: SuperOp, u: &SuperFockElement) -> Result<SuperFockElement> {
        match op {
            SuperOp::Creation { mode, gen } => self.sf_a_plus(gen, mode, u),
            SuperOp::Annihilation { mode, gen } => self.sf_a_minus(gen, mode, u),
        }
    }

    fn op_odd(&self, op: SuperOp) -> bool {
        match op {
            SuperOp::Creation { gen, .. } | SuperOp::Annihilation { gen, .. } => self.is_odd(gen),
        }
    }

    /// `[A, B] = AB - (-1)^{|A||B|} BA`.
    pub fn supercommutator(
        &self,
        a: SuperOp,
        b: SuperOp,
        u: &SuperFockElement,
    ) -> Result<SuperFockElement> {
        let ab = self.apply(a, &self.apply(b, u)?)?;
        let ba = self.apply(b, &self.apply(a, u)?)?;
        let sign = if self.op_odd(a) && self.op_odd(b) {
            rat(1)
        } else {
            rat(-1)
        };
        Ok(ab.add(&ba.scale(&sign)))
    }

    /// All monomials of degree `n`.
    pub fn basis(&self, n: usize) -> Vec<Monomial> {
        let slots: Vec<(usize, usize)> = (1..=n)
            .flat_map(|r| (0..self.d0 + self.d1).map(move |g| (r, g)))
            .collect();
        let mut out = Vec::new();
        fn go(
            space: &SuperFockSpace,
            slots: &[(usize, usize)],
            i: usize,
            rem: usize,
            cur: &mut Monomial,
            out: &mut Vec<Monomial>,
        ) {
            if rem == 0 {
                out.push(cur.clone());
                return;
            }
            if i == slots.len() {
                return;
            }
            let (r, g) = slots[i];
            let max = if space.is_odd(g) { 1 } else { rem / r };
            for k in 0..=max.min(rem / r) {
                for _ in 0..k {
                    cur.push((r, g));
                }
                go(space, slots, i + 1, rem - k * r, cur, out);
                cur.truncate(cur.len() - k);
            }
        }
        go(self, &slots, 0, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn graded_dim(&self, n: usize) -> TruncSeries {
        TruncSeries::from_ints(
            &(0..=n)
                .map(|k| self.basis(k).len() as i64)
                .collect::<Vec<_>>(),
        )
    }
}

/// Super Heisenberg relations on every monomial of degree `≤ max_degree`,
/// modes up to `max_mode`, with anticommutators on odd pairs; plus odd
/// squares vanishing and the graded dimension.
pub fn sf_commutator_check(
    d0: usize,
    d1: usize,
    max_degree: usize,
    max_mode: usize,
) -> Result<Report> {
    let space = SuperFockSpace::new(d0, d1);
    let mut report = Report::new(format!(
        "super fock d0={d0} d1={d1} N={max_degree} M={max_mode}"
    ));
    let vectors: Vec<Monomial> = (0..=max_degree).flat_map(|n| space.basis(n)).collect();
    let gens = d0 + d1;
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for mode in 1..=max_mode {
        for gen in 0..gens {
            plus.push(SuperOp::Creation { mode, gen });
            minus.push(SuperOp::Annihilation { mode, gen });
        }
    }
    let mut mixed = None;
    let mut creations = None;
    let mut annihilations = None;
    for m in &vectors {
        let u = SuperFockElement::monomial(m.clone());
        for &a in &minus {
            for &b in &plus {
                let (
                    SuperOp::Annihilation { mode: mm, gen: j },
                    SuperOp::Creation { mode: l, gen: i },
                ) = (a, b)
                else {
                    unreachable!()
                };
                let expected = if mm == l && i == j {
                    u.scale(&rat(l as i64))
                } else {
                    SuperFockElement::default()
                };
                if space.supercommutator(a, b, &u)? != expected {
                    mixed.get_or_insert(format!("{a:?} {b:?} on {m:?}"));
                }
            }
        }
        for (ops, slot) in [(&plus, &mut creations), (&minus, &mut annihilations)] {
            for &a in ops.iter() {
                for &b in ops.iter() {
                    if !space.supercommutator(a, b, &u)?.is_zero() {
                        slot.get_or_insert(format!("{a:?} {b:?} on {m:?}"));
                    }
                }
            }
        }
    }
    report.check("[a_-m(eta), a_l(w)] = l delta <eta,w>", mixed);
    report.check("[a_m(w), a_l(w')] = 0", creations);
    report.check("[a_-m(eta), a_-l(eta')] = 0", annihilations);

    let mut odd_sq = None;
    for gen in d0..gens {
        for mode in 1..=max_mode {
            let once = space.sf_a_plus(gen, mode, &SuperFockElement::vacuum())?;
            if !space.sf_a_plus(gen, mode, &once)?.is_zero() {
                odd_sq.get_or_insert(format!("gen {gen} mode {mode}"));
            }
        }
    }
    report.check("odd creators square to zero", odd_sq);

    let dims = space.graded_dim(max_degree);
    let expected = graded_dim_series(d0, d1, max_degree);
    report.check_with("graded dimension", dims == expected, format!("{dims}"));
    Ok(report)
}
