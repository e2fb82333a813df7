//! Named groups, including the finite subgroups of `SL_2(C)` used for the
//! McKay table.

use num_rational::Ratio;

use super::FiniteGroup;
use crate::error::{Error, Result};

pub fn trivial() -> FiniteGroup {
    cyclic(1).expect("order 1 is valid").with_name("trivial")
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "cyclic group order must be positive".into(),
        ));
    }
    let elements: Vec<usize> = (0..n).collect();
    Ok(FiniteGroup::from_elements(
        format!("Z{n}"),
        elements,
        |a, b| (a + b) % n,
    ))
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "symmetric group degree must be positive".into(),
        ));
    }
    let mut gens = Vec::new();
    if n >= 2 {
        let mut t: Vec<usize> = (0..n).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..n).map(|i| (i + 1) % n).collect());
    }
    Ok(FiniteGroup::from_permutations(&gens, n, usize::MAX)?.with_name(format!("S{n}")))
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 3 {
        return Err(Error::InvalidParameter(
            "dihedral group needs n >= 3".into(),
        ));
    }
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    Ok(FiniteGroup::from_permutations(&[rot, refl], n, usize::MAX)?.with_name(format!("D{n}")))
}

/// Generalized quaternion (binary dihedral) group of order `4m`:
/// `<a, x | a^{2m} = 1, x^2 = a^m, x^{-1} a x = a^{-1}>`.
pub fn binary_dihedral(m: usize) -> Result<FiniteGroup> {
    if m == 0 {
        return Err(Error::InvalidParameter(
            "binary dihedral parameter must be positive".into(),
        ));
    }
    let k = 2 * m;
    // a^i x^e encoded as (i, e)
    let elements: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..k).map(move |i| (i, e))).collect();
    let mul = move |&(i, e): &(usize, usize), &(j, f): &(usize, usize)| -> (usize, usize) {
        if e == 0 {
            return ((i + j) % k, f);
        }
        // x a^j = a^{-j} x
        let base = (i + k - j) % k;
        if f == 0 {
            (base, 1)
        } else {
            ((base + m) % k, 0)
        }
    };
    Ok(FiniteGroup::from_elements(format!("BD{m}"), elements, mul))
}

/// `SL_2(F_p)` for a prime `p`, by enumerating all determinant-one matrices.
pub fn sl2(p: u32) -> Result<FiniteGroup> {
    if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let p = p as i64;
    let mut elements = vec![[1i64, 0, 0, 1]];
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    if (a * d - b * c).rem_euclid(p) == 1 && m != [1, 0, 0, 1] {
                        elements.push(m);
                    }
                }
            }
        }
    }
    let mul = move |x: &[i64; 4], y: &[i64; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]).rem_euclid(p),
            (x[0] * y[1] + x[1] * y[3]).rem_euclid(p),
            (x[2] * y[0] + x[3] * y[2]).rem_euclid(p),
            (x[2] * y[1] + x[3] * y[3]).rem_euclid(p),
        ]
    };
    Ok(FiniteGroup::from_elements(
        format!("SL2(F{p})"),
        elements,
        mul,
    ))
}

/// Binary tetrahedral group, `SL_2(F_3)`.
pub fn sl2_f3() -> FiniteGroup {
    sl2(3).expect("3 is prime").with_name("SL2(F3)")
}

/// Binary icosahedral group, `SL_2(F_5)`.
pub fn sl2_f5() -> FiniteGroup {
    sl2(5).expect("5 is prime").with_name("SL2(F5)")
}

/// `a + b√2` with rational `a, b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct QSqrt2(Ratio<i64>, Ratio<i64>);

impl QSqrt2 {
    fn mul(self, o: Self) -> Self {
        QSqrt2(self.0 * o.0 + self.1 * o.1 * 2, self.0 * o.1 + self.1 * o.0)
    }
    fn add(self, o: Self) -> Self {
        QSqrt2(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: Self) -> Self {
        QSqrt2(self.0 - o.0, self.1 - o.1)
    }
}

type Quaternion = [QSqrt2; 4];

fn quat_mul(p: &Quaternion, q: &Quaternion) -> Quaternion {
    let [a1, b1, c1, d1] = *p;
    let [a2, b2, c2, d2] = *q;
    [
        a1.mul(a2).sub(b1.mul(b2)).sub(c1.mul(c2)).sub(d1.mul(d2)),
        a1.mul(b2).add(b1.mul(a2)).add(c1.mul(d2)).sub(d1.mul(c2)),
        a1.mul(c2).sub(b1.mul(d2)).add(c1.mul(a2)).add(d1.mul(b2)),
        a1.mul(d2).add(b1.mul(c2)).sub(c1.mul(b2)).add(d1.mul(a2)),
    ]
}

/// Binary octahedral group (order 48) as unit quaternions with coordinates
/// in `Q(√2)`, generated by `(1+i)/√2` and `(1+i+j+k)/2`.
pub fn binary_octahedral() -> FiniteGroup {
    let r = |n, d| Ratio::new(n, d);
    let q = |a: QSqrt2, b: QSqrt2, c: QSqrt2, d: QSqrt2| [a, b, c, d];
    let zero = QSqrt2(r(0, 1), r(0, 1));
    let one = QSqrt2(r(1, 1), r(0, 1));
    let half = QSqrt2(r(1, 2), r(0, 1));
    let inv_sqrt2 = QSqrt2(r(0, 1), r(1, 2));
    let gens = [
        q(inv_sqrt2, inv_sqrt2, zero, zero),
        q(half, half, half, half),
    ];
    let identity = q(one, zero, zero, zero);
    let mut elements = vec![identity];
    let mut i = 0;
    while i < elements.len() {
        for g in &gens {
            let y = quat_mul(&elements[i], g);
            if !elements.contains(&y) {
                elements.push(y);
            }
        }
        i += 1;
    }
    FiniteGroup::from_elements("BO".into(), elements, quat_mul)
}

/// Looks up a builtin by name: `trivial`, `z<n>` or `c<n>` (cyclic),
/// `s<n>`, `d<n>` (dihedral of order `2n`), `q8`, `bd<m>` (binary
/// dihedral), `sl2_f3`, `binary_octahedral`, `sl2_f5`, and `A*B` for a
/// direct product.
pub fn by_name(name: &str) -> Result<FiniteGroup> {
    let name = name.trim().to_ascii_lowercase();
    if let Some((a, b)) = name.split_once('*') {
        return Ok(FiniteGroup::product(&by_name(a)?, &by_name(b)?));
    }
    let num = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok() };
    match name.as_str() {
        "trivial" | "1" => return Ok(trivial()),
        "q8" => return Ok(binary_dihedral(2)?.with_name("Q8")),
        "sl2_f3" | "binary_tetrahedral" | "2t" => return Ok(sl2_f3()),
        "binary_octahedral" | "2o" => return Ok(binary_octahedral()),
        "sl2_f5" | "binary_icosahedral" | "2i" => return Ok(sl2_f5()),
        _ => {}
    }
    if let Some(m) = num("bd").or_else(|| num("binary_dihedral")) {
        return binary_dihedral(m);
    }
    if let Some(n) = num("z").or_else(|| num("c")).or_else(|| num("cyclic")) {
        return cyclic(n);
    }
    if let Some(n) = num("s").or_else(|| num("symmetric")) {
        return symmetric(n);
    }
    if let Some(n) = num("d").or_else(|| num("dihedral")) {
        return dihedral(n);
    }
    Err(Error::InvalidParameter(format!("unknown group '{name}'")))
}
