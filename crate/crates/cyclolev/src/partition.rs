//! Exact partition arithmetic: dominance, transpose, union/sum, the
//! orthogonal/symplectic membership tests, the B/C collapse maps, and a
//! brute-force collapse oracle used by the test suites.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers (possibly empty).
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the given parts; zero entries are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn multiplicity(&self, value: usize) -> usize {
        self.parts.iter().filter(|&&p| p == value).count()
    }

    /// Column counts; an involution.
    pub fn transpose(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Merged multiset of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Pointwise addition with zero padding.
    pub fn sum(&self, other: &Partition) -> Partition {
        let n = self.parts.len().max(other.parts.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect();
        Partition::new(parts)
    }

    /// Dominance order; requires equal totals.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.total() != other.total() {
            return Err(Error::UnequalTotals(self.total(), other.total()));
        }
        let n = self.parts.len().max(other.parts.len());
        let mut run_self = 0usize;
        let mut run_other = 0usize;
        for i in 0..n {
            run_self += self.part(i);
            run_other += other.part(i);
            if run_self < run_other {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every even part appears an even number of times.
    pub fn is_orthogonal(&self) -> bool {
        self.parity_ok(0)
    }

    /// Every odd part appears an even number of times.
    pub fn is_symplectic(&self) -> bool {
        self.parity_ok(1)
    }

    fn parity_ok(&self, bad_parity: usize) -> bool {
        let mut i = 0;
        while i < self.parts.len() {
            let v = self.parts[i];
            let mut m = 1;
            while i + m < self.parts.len() && self.parts[i + m] == v {
                m += 1;
            }
            if v % 2 == bad_parity && m % 2 == 1 {
                return false;
            }
            i += m;
        }
        true
    }

    /// True when all parts share one parity (the classical evenness test for
    /// the orbit labelled by this partition).
    pub fn all_parts_same_parity(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] % 2 == w[1] % 2)
    }

    /// Orthogonal collapse: the dominance-greatest orthogonal partition
    /// dominated by `self`.
    pub fn collapse_orthogonal(&self) -> Partition {
        self.collapse(0)
    }

    /// Symplectic collapse: the dominance-greatest symplectic partition
    /// dominated by `self`. Defined for even totals only (no symplectic
    /// partition of an odd number exists).
    pub fn collapse_symplectic(&self) -> Partition {
        assert!(
            self.total() % 2 == 0,
            "symplectic collapse needs an even total, got {self}"
        );
        self.collapse(1)
    }

    /// Descent by single box moves: find the largest part value of the wrong
    /// parity with odd multiplicity, take its last row, move one box down to
    /// the first row that can accept it.
    fn collapse(&self, bad_parity: usize) -> Partition {
        let mut q = self.parts.clone();
        loop {
            let mut bad_row: Option<usize> = None;
            let mut i = 0;
            while i < q.len() {
                let v = q[i];
                let mut m = 1;
                while i + m < q.len() && q[i + m] == v {
                    m += 1;
                }
                if v % 2 == bad_parity && m % 2 == 1 {
                    bad_row = Some(i + m - 1);
                    break;
                }
                i += m;
            }
            let Some(row) = bad_row else {
                return Partition { parts: q };
            };
            let v = q[row];
            q[row] = v - 1;
            // the box moves to the first later row that can grow while
            // keeping the sequence weakly decreasing
            let mut placed = false;
            for j in row + 1..q.len() {
                if q[j] + 1 <= q[j - 1] {
                    q[j] += 1;
                    placed = true;
                    break;
                }
            }
            if !placed {
                q.push(1);
            }
            q.retain(|&p| p > 0);
        }
    }
}

/// Enumerates all partitions of `n` (weakly decreasing), largest-first order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for k in (1..=max.min(n)).rev() {
            prefix.push(k);
            rec(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n.max(1), &mut Vec::new(), &mut out);
    if n == 0 {
        return vec![Partition::empty()];
    }
    out
}

/// Exhaustive collapse oracle: enumerate all partitions of the same total
/// dominated by `p` and satisfying `predicate`, and return the unique
/// dominance maximum. A non-unique maximum is an error by design: uniqueness
/// is itself part of what the oracle certifies.
pub fn brute_force_collapse(
    p: &Partition,
    predicate: impl Fn(&Partition) -> bool,
) -> Result<Partition> {
    let candidates: Vec<Partition> = partitions_of(p.total())
        .into_iter()
        .filter(|q| predicate(q) && p.dominates(q).unwrap())
        .collect();
    let maxima: Vec<&Partition> = candidates
        .iter()
        .filter(|q| {
            candidates
                .iter()
                .all(|r| r == *q || !r.dominates(q).unwrap() || q.dominates(r).unwrap())
        })
        .collect();
    match maxima.as_slice() {
        [unique] => Ok((*unique).clone()),
        _ => Err(Error::NonUniqueMaximum(maxima.len())),
    }
}

impl fmt::Display for Partition {
    /// Textual form `(5,3,1)`; the empty partition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(5,3,1)`, `[5,3,1]`, or `5,3,1`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if t.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let v: usize = piece.trim().parse().map_err(|_| Error::Parse {
                what: "partition",
                input: s.to_string(),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    what: "partition",
                    input: s.to_string(),
                });
            }
            parts.push(v);
        }
        Ok(Partition::new(parts))
    }
}

#[macro_export]
macro_rules! ptn {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::partition::Partition::new(vec![$($x),+]) };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transpose_cases() {
        assert_eq!(ptn![3, 1].transpose(), ptn![2, 1, 1]);
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(ptn![2, 2].transpose(), ptn![2, 2]);
    }

    #[test]
    fn union_and_sum() {
        assert_eq!(ptn![3, 1].union(&ptn![2]), ptn![3, 2, 1]);
        assert_eq!(ptn![3, 1].sum(&ptn![2]), ptn![5, 1]);
        assert_eq!(ptn![1, 1, 1, 1].sum(&ptn![1, 1, 1]), ptn![2, 2, 2, 1]);
    }

    #[test]
    fn dominance() {
        assert!(ptn![4].dominates(&ptn![2, 2]).unwrap());
        assert!(!ptn![3, 3].dominates(&ptn![4, 1, 1]).unwrap());
        assert!(!ptn![4, 1, 1].dominates(&ptn![3, 3]).unwrap());
        assert!(ptn![2, 2].dominates(&ptn![2, 2]).unwrap());
        assert!(ptn![3, 1].dominates(&ptn![1, 1]).is_err());
    }

    #[test]
    fn parity_tests() {
        assert!(ptn![5, 3].is_orthogonal());
        assert!(!ptn![3, 1].is_symplectic());
        assert!(ptn![2, 2].is_symplectic());
        assert!(ptn![2, 2].is_orthogonal());
        assert!(Partition::empty().is_orthogonal());
        assert!(Partition::empty().is_symplectic());
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(ptn![5, 4].collapse_orthogonal(), ptn![5, 3, 1]);
        assert_eq!(ptn![3, 3].collapse_orthogonal(), ptn![3, 3]);
        assert_eq!(ptn![3, 1].collapse_symplectic(), ptn![2, 2]);
        assert_eq!(ptn![2, 2, 1, 1].collapse_symplectic(), ptn![2, 2, 1, 1]);
        // two-row family: (m+1, 2n-m-1) with m odd collapses to (m, 2n-m)
        for n in 3usize..9 {
            for m in (1..2 * n - 1).step_by(2) {
                if m + 1 > 2 * n - m - 1 && 2 * n - m - 1 >= 1 {
                    let p = ptn![m + 1, 2 * n - m - 1];
                    assert_eq!(p.collapse_orthogonal(), ptn![m, 2 * n - m]);
                }
            }
        }
    }

    #[test]
    fn brute_force_matches_examples() {
        assert_eq!(
            brute_force_collapse(&ptn![5, 4], Partition::is_orthogonal).unwrap(),
            ptn![5, 3, 1]
        );
        assert_eq!(
            brute_force_collapse(&ptn![3, 1], Partition::is_symplectic).unwrap(),
            ptn![2, 2]
        );
        assert_eq!(
            brute_force_collapse(&ptn![2, 2], Partition::is_orthogonal).unwrap(),
            ptn![2, 2]
        );
    }

    #[test]
    fn collapse_agrees_with_oracle_small() {
        for n in 0..=11 {
            for p in partitions_of(n) {
                let b = p.collapse_orthogonal();
                assert!(b.is_orthogonal(), "B({p}) = {b} orthogonal");
                assert!(p.dominates(&b).unwrap(), "B({p}) = {b} dominated");
                assert_eq!(b, brute_force_collapse(&p, Partition::is_orthogonal).unwrap());
                assert_eq!(b.collapse_orthogonal(), b, "idempotent at {p}");
                if n % 2 == 0 {
                    let c = p.collapse_symplectic();
                    assert_eq!(c, brute_force_collapse(&p, Partition::is_symplectic).unwrap());
                    assert_eq!(c.collapse_symplectic(), c);
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let p: Partition = "(5,3,1)".parse().unwrap();
        assert_eq!(p, ptn![5, 3, 1]);
        assert_eq!(p.to_string(), "(5,3,1)");
        let q: Partition = "[4, 2]".parse().unwrap();
        assert_eq!(q, ptn![4, 2]);
        let r: Partition = "()".parse().unwrap();
        assert!(r.is_empty());
        assert!("(0,1)".parse::<Partition>().is_err());
    }
}
