use num_traits::Zero;

use super::{Cyclotomic, Rational};

/// Rank over `Q` by fraction-exact Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].get(c).is_some_and(|v| !v.is_zero()))
        else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().skip(r + 1) {
            let Some(v) = row.get(c).filter(|v| !v.is_zero()).cloned() else {
                continue;
            };
            let f = v / &pivot;
            for (j, pv) in pivot_row.iter().enumerate().skip(c) {
                if j < row.len() {
                    row[j] -= &f * pv;
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank over `Q` of cyclotomic vectors, each coordinate flattened to its
/// `m` rational coefficients.
pub fn cyclotomic_rank(rows: &[Vec<Cyclotomic>]) -> usize {
    rank(
        rows.iter()
            .map(|row| {
                row.iter()
                    .flat_map(|v| v.coeffs().iter().cloned())
                    .collect()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 1], &[1, 0], &[1, 1]])), 2);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(Vec::new()), 0);
        assert_eq!(rank(m(&[&[2, 1, 0], &[4, 3, 1], &[0, 1, 1]])), 2);
        let z = Cyclotomic::zeta_pow(3, 1);
        let one = Cyclotomic::one(3);
        assert_eq!(cyclotomic_rank(&[vec![z.clone()], vec![one]]), 2);
        assert_eq!(cyclotomic_rank(&[vec![z.clone()], vec![&z + &z]]), 1);
    }
}
