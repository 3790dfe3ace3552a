//! Numeric minimal root valuations for Weyl elements.
//!
//! For a word w of order n acting on the Cartan, every root alpha picks out
//! the smallest usable exponent j in 1..=n such that alpha does not vanish on
//! the zeta^j-eigenspace of w; the valuation attached to alpha is j/n, and
//! the minimum over all roots is compared against 1/(cyclotomic level).
//! Eigenspaces are computed in complex floating point with rank decisions at
//! a fixed tolerance; the resulting rational j/n is exact once the rank
//! decisions are made.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::rootdata::root_data;
use crate::weyl::word_matrix;

const TOL: f64 = 1e-9;

/// An exact nonnegative rational, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0);
        let g = gcd(num.max(1), den);
        if num == 0 {
            return Ratio { num: 0, den: 1 };
        }
        Ratio {
            num: num / g,
            den: den / g,
        }
    }
}

impl std::fmt::Display for Ratio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Basis of the kernel of `m - lambda I` via Gaussian elimination with
/// partial pivoting; rank decisions at the module tolerance. Errors when a
/// pivot sits inside the ambiguous band around the tolerance.
fn eigenspace_basis(m: &[Vec<i64>], lambda: Complex64) -> Result<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut v = Complex64::new(m[i][j] as f64, 0.0);
                    if i == j {
                        v -= lambda;
                    }
                    v
                })
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let (best, best_norm) = (row..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap_or((row, 0.0));
        if best_norm < TOL {
            // guard against borderline pivots: anything within two orders of
            // magnitude of the tolerance is treated as unstable
            if best_norm > TOL * 1e-2 {
                return Err(Error::RankUnstable(best_norm));
            }
            continue;
        }
        a.swap(row, best);
        let piv = a[row][col];
        for r in 0..n {
            if r == row {
                continue;
            }
            let f = a[r][col] / piv;
            if f.norm() == 0.0 {
                continue;
            }
            for c in col..n {
                let v = a[row][c];
                a[r][c] -= f * v;
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free_cols {
        let mut v = vec![Complex64::new(0.0, 0.0); n];
        v[fc] = Complex64::new(1.0, 0.0);
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[r][fc] / a[r][pc];
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Minimal root valuation of a reflection word, as an exact rational j/n.
pub fn min_root_valuation(t: LieType, word: &[usize]) -> Result<Ratio> {
    let r = root_data(t);
    let n = t.rank();
    let m = word_matrix(t, word)?;
    // element order
    let mut order = 1usize;
    {
        let mut p = m.clone();
        let id: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        while p != id {
            let mut np = vec![vec![0i64; n]; n];
            for i in 0..n {
                for k in 0..n {
                    if p[i][k] == 0 {
                        continue;
                    }
                    for j in 0..n {
                        np[i][j] += p[i][k] * m[k][j];
                    }
                }
            }
            p = np;
            order += 1;
            if order > 10_000 {
                return Err(Error::IterationCap);
            }
        }
    }
    // row functionals alpha^T B for each positive root
    let b = r.sym_cartan();
    let functionals: Vec<Vec<f64>> = r
        .positive_roots
        .iter()
        .map(|root| {
            (0..n)
                .map(|j| (0..n).map(|i| (root[i] * b[i][j]) as f64).sum())
                .collect()
        })
        .collect();
    // eigenspace bases for zeta^j, j = 1..=order (j = order is the fixed space)
    let mut best: Option<Ratio> = None;
    let mut remaining: Vec<usize> = (0..functionals.len()).collect();
    for j in 1..=order {
        if remaining.is_empty() {
            break;
        }
        let angle = 2.0 * std::f64::consts::PI * (j as f64) / (order as f64);
        let lambda = Complex64::new(angle.cos(), angle.sin());
        let basis = eigenspace_basis(&m, lambda)?;
        if basis.is_empty() {
            continue;
        }
        let mut still = Vec::new();
        for &ri in &remaining {
            let f = &functionals[ri];
            let nonzero = basis.iter().any(|v| {
                let s: Complex64 = (0..n)
                    .map(|k| v[k] * Complex64::new(f[k], 0.0))
                    .sum();
                s.norm() > TOL
            });
            if nonzero {
                let val = Ratio::new(j as u64, order as u64);
                best = Some(match best {
                    None => val,
                    Some(old) => {
                        if (val.num as u128) * (old.den as u128)
                            < (old.num as u128) * (val.den as u128)
                        {
                            val
                        } else {
                            old
                        }
                    }
                });
            } else {
                still.push(ri);
            }
        }
        remaining = still;
    }
    best.ok_or(Error::RankUnstable(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, b, e};

    #[test]
    fn coxeter_word_of_a2() {
        let v = min_root_valuation(a(2), &[1, 2]).unwrap();
        assert_eq!(v, Ratio::new(1, 3));
    }

    #[test]
    fn b2_negative_two_cycle() {
        // s1 s2 s1 s2 has order 4... the Coxeter element s1 s2 of B2 is the
        // negative 2-cycle, order 4, valuation 1/4.
        let v = min_root_valuation(b(2), &[1, 2]).unwrap();
        assert_eq!(v, Ratio::new(1, 4));
    }

    #[test]
    fn identity_gives_one() {
        let v = min_root_valuation(a(3), &[]).unwrap();
        assert_eq!(v, Ratio::new(1, 1));
    }

    #[test]
    fn e6_coxeter() {
        let word: Vec<usize> = (1..=6).collect();
        assert_eq!(min_root_valuation(e(6), &word).unwrap(), Ratio::new(1, 12));
    }
}
