//! Partition combinatorics for nilpotent orbits of the classical types:
//! validity, enumeration, Bala-Carter decomposition, saturation,
//! Lusztig-Spaltenstein induction, duality, and the highest-root pairing.

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::partition::{partitions_of, Partition};

use super::{BlockKind, LeviFactor};

/// Checks the parity-multiplicity constraint for a partition labelling an
/// orbit of the given classical type (and the total).
pub fn partition_valid(t: LieType, p: &Partition) -> bool {
    let Some(total) = t.partition_total() else {
        return false;
    };
    if p.total() != total {
        return false;
    }
    match t.family() {
        Family::A => true,
        Family::B | Family::D => p.is_orthogonal(),
        Family::C => p.is_symplectic(),
        _ => unreachable!(),
    }
}

/// True when all parts are even (so the partition carries two orbit labels
/// in type D).
pub fn is_very_even(t: LieType, p: &Partition) -> bool {
    t.family() == Family::D && !p.is_empty() && p.parts().iter().all(|x| x % 2 == 0)
}

/// All valid partitions for the type.
pub fn valid_partitions(t: LieType) -> Vec<Partition> {
    let total = t.partition_total().expect("classical type");
    partitions_of(total)
        .into_iter()
        .filter(|p| partition_valid(t, p))
        .collect()
}

/// The pair decomposition used by Bala-Carter in types B/C/D: strips parts
/// into doubled pairs `(a_1^2, ..., a_t^2)` plus the residue `gamma` of parts
/// of the relevant parity, each appearing once.
///
/// For C (symplectic), gamma collects even parts of odd multiplicity; for
/// B/D (orthogonal), gamma collects odd parts of odd multiplicity.
pub fn pair_decomposition(t: LieType, p: &Partition) -> (Vec<usize>, Partition) {
    let mut pairs = Vec::new();
    let mut gamma = Vec::new();
    let mut i = 0;
    let parts = p.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut m = 1;
        while i + m < parts.len() && parts[i + m] == v {
            m += 1;
        }
        let residue = m % 2;
        for _ in 0..m / 2 {
            pairs.push(v);
        }
        if residue == 1 {
            gamma.push(v);
            debug_assert!(
                match t.family() {
                    Family::C => v % 2 == 0,
                    Family::B | Family::D => v % 2 == 1,
                    _ => true,
                },
                "parity constraint violated in pair decomposition"
            );
        }
        i += m;
    }
    (pairs, Partition::new(gamma))
}

/// Bala-Carter factors of the orbit labelled by `p`, without torus factors:
/// gl blocks carry their regular orbits; the orthogonal/symplectic residue
/// block carries `gamma`.
pub fn bala_carter_factors(t: LieType, p: &Partition) -> Vec<LeviFactor> {
    match t.family() {
        Family::A => p
            .parts()
            .iter()
            .filter(|&&q| q >= 2)
            .map(|&q| LeviFactor::gl_regular(q))
            .collect(),
        Family::B | Family::C | Family::D => {
            let (pairs, gamma) = pair_decomposition(t, p);
            let mut out: Vec<LeviFactor> = pairs
                .into_iter()
                .filter(|&a| a >= 2)
                .map(LeviFactor::gl_regular)
                .collect();
            let kind = if t.family() == Family::C {
                BlockKind::Sp
            } else {
                BlockKind::So
            };
            // so(1), so(2) and sp(0) blocks are abelian; keep only blocks
            // that contain a nonzero nilpotent
            let keep = match kind {
                BlockKind::So => gamma.total() >= 3,
                BlockKind::Sp => gamma.total() >= 2,
            };
            if keep {
                out.push(LeviFactor::Block {
                    kind,
                    size: gamma.total(),
                    orbit: gamma,
                });
            }
            out
        }
        _ => unreachable!(),
    }
}

/// Distinguished = the Bala-Carter Levi is the whole algebra: no doubled
/// pairs (B/C/D) and a single column... in type A only the regular orbit of
/// gl(1) or... type A: only the regular orbit of sl(n+1) is distinguished
/// when n = 0; in general an orbit of sl(n+1) is distinguished iff n = 0 or
/// the partition is (n+1).
pub fn is_distinguished(t: LieType, p: &Partition) -> bool {
    match t.family() {
        Family::A => p.len() <= 1,
        Family::B | Family::C | Family::D => {
            let (pairs, _) = pair_decomposition(t, p);
            pairs.is_empty()
        }
        _ => unreachable!(),
    }
}

/// Distinguished test for a bare so/sp block: no part value of the relevant
/// parity repeats (equivalently, the pair part of the decomposition is
/// empty). `symplectic` selects sp (true) versus so (false).
pub fn is_distinguished_block(symplectic: bool, q: &Partition) -> bool {
    let mut i = 0;
    let parts = q.parts();
    while i < parts.len() {
        let v = parts[i];
        let mut m = 1;
        while i + m < parts.len() && parts[i + m] == v {
            m += 1;
        }
        if m > 1 {
            return false;
        }
        let parity_ok = if symplectic { v % 2 == 0 } else { v % 2 == 1 };
        if !parity_ok {
            return false;
        }
        i += m;
    }
    true
}

/// Saturation: each gl(a) factor contributes its partition twice, a block
/// contributes its partition once, and the result is padded with 1s up to
/// the ambient total.
pub fn saturate_partition(ambient: LieType, factors: &[LeviFactor]) -> Result<Partition> {
    let total = ambient
        .partition_total()
        .ok_or_else(|| Error::Unsupported(ambient.to_string(), "classical saturation"))?;
    let mut parts: Vec<usize> = Vec::new();
    let mut used = 0usize;
    for f in factors {
        match f {
            LeviFactor::Gl { size, orbit } => {
                if orbit.total() != *size {
                    return Err(Error::LeviShape(format!(
                        "gl({size}) carries a partition of {}",
                        orbit.total()
                    )));
                }
                let mult = if ambient.family() == Family::A { 1 } else { 2 };
                for _ in 0..mult {
                    parts.extend_from_slice(orbit.parts());
                }
                used += mult * size;
            }
            LeviFactor::Block { kind, size, orbit } => {
                if ambient.family() == Family::A {
                    return Err(Error::LeviShape(
                        "orthogonal/symplectic block inside type A".into(),
                    ));
                }
                let ambient_kind = if ambient.family() == Family::C {
                    BlockKind::Sp
                } else {
                    BlockKind::So
                };
                if *kind != ambient_kind {
                    return Err(Error::LeviShape("block kind does not match ambient".into()));
                }
                if orbit.total() != *size {
                    return Err(Error::LeviShape(format!(
                        "block of size {size} carries a partition of {}",
                        orbit.total()
                    )));
                }
                parts.extend_from_slice(orbit.parts());
                used += size;
            }
            LeviFactor::Exceptional { .. } => {
                return Err(Error::LeviShape(
                    "exceptional factor inside a classical ambient".into(),
                ));
            }
        }
    }
    if used > total {
        return Err(Error::LeviShape(format!(
            "factors need {used} > ambient {total}"
        )));
    }
    parts.extend(std::iter::repeat(1).take(total - used));
    let p = Partition::new(parts);
    if !partition_valid(ambient, &p) {
        return Err(Error::LeviShape(format!(
            "saturated partition {p} is not valid for {ambient}"
        )));
    }
    Ok(p)
}

/// Lusztig-Spaltenstein induction from a classical Levi, all data by
/// partitions: type A sums the zero-padded factor partitions; B/C/D form
/// `block + 2 * sum(gl parts)` and collapse to the ambient parity.
pub fn induce_partition(ambient: LieType, factors: &[LeviFactor]) -> Result<Partition> {
    let total = ambient
        .partition_total()
        .ok_or_else(|| Error::Unsupported(ambient.to_string(), "classical induction"))?;
    let mut acc = Partition::empty();
    let mut used = 0usize;
    let mut block_seen = false;
    for f in factors {
        match f {
            LeviFactor::Gl { size, orbit } => {
                if orbit.total() != *size || orbit.len() > *size {
                    return Err(Error::LeviShape(format!(
                        "gl({size}) carries partition {orbit}"
                    )));
                }
                let mult = if ambient.family() == Family::A { 1 } else { 2 };
                for _ in 0..mult {
                    acc = acc.sum(orbit);
                }
                used += mult * size;
            }
            LeviFactor::Block { kind, size, orbit } => {
                if ambient.family() == Family::A {
                    return Err(Error::LeviShape(
                        "orthogonal/symplectic block inside type A".into(),
                    ));
                }
                if block_seen {
                    return Err(Error::LeviShape("more than one block factor".into()));
                }
                block_seen = true;
                let ambient_kind = if ambient.family() == Family::C {
                    BlockKind::Sp
                } else {
                    BlockKind::So
                };
                if *kind != ambient_kind || orbit.total() != *size {
                    return Err(Error::LeviShape("block does not match ambient".into()));
                }
                acc = acc.sum(orbit);
                used += size;
            }
            LeviFactor::Exceptional { .. } => {
                return Err(Error::LeviShape(
                    "exceptional factor inside a classical ambient".into(),
                ));
            }
        }
    }
    if used != total {
        return Err(Error::LeviShape(format!(
            "Levi sizes sum to {used}, ambient needs {total}"
        )));
    }
    let p = match ambient.family() {
        Family::A => acc,
        Family::B | Family::D => acc.collapse_orthogonal(),
        Family::C => acc.collapse_symplectic(),
        _ => unreachable!(),
    };
    debug_assert!(partition_valid(ambient, &p));
    Ok(p)
}

/// Duality on partitions: transpose for type A; collapsed transpose for
/// B/C/D within the same type (orthogonal collapse for B/D, symplectic for
/// C). Cross-type duality is out of scope.
pub fn dual_partition(t: LieType, p: &Partition) -> Partition {
    let q = p.transpose();
    match t.family() {
        Family::A => q,
        Family::B | Family::D => q.collapse_orthogonal(),
        Family::C => q.collapse_symplectic(),
        _ => unreachable!(),
    }
}

/// `<theta, h>` for the orbit labelled by q: `2 q_1 - 2` in types A and C,
/// `q_1 - 1 + max(q_1 - 3, q_2 - 1)` in types B and D (absent parts are 0).
pub fn theta_pairing(t: LieType, q: &Partition) -> i64 {
    if q.is_empty() {
        return 0;
    }
    let q1 = q.part(0) as i64;
    match t.family() {
        Family::A | Family::C => 2 * q1 - 2,
        Family::B | Family::D => (q1 - 1) + (q1 - 3).max(q.part(1) as i64 - 1),
        _ => unreachable!(),
    }
}

/// Same formula for a bare gl/so/sp block, used per Bala-Carter factor.
pub fn theta_pairing_block(kind_a_or_c: bool, q: &Partition) -> i64 {
    if q.is_empty() {
        return 0;
    }
    let q1 = q.part(0) as i64;
    if kind_a_or_c {
        2 * q1 - 2
    } else {
        (q1 - 1) + (q1 - 3).max(q.part(1) as i64 - 1)
    }
}

/// Orbit dimension from the partition (transpose-square formulas).
pub fn orbit_dim(t: LieType, p: &Partition) -> usize {
    let n = p.total();
    let s = p.transpose();
    let sq: usize = s.parts().iter().map(|&x| x * x).sum();
    let odd = p.parts().iter().filter(|&&x| x % 2 == 1).count();
    match t.family() {
        Family::A => n * n - sq,
        Family::B | Family::D => (n * n - n) / 2 - (sq - odd) / 2,
        Family::C => (n * n + n) / 2 - (sq + odd) / 2,
        _ => unreachable!(),
    }
}

/// Weighted Dynkin labels from the partition: merge the h-entries
/// `q_i - 1, q_i - 3, ..., 1 - q_i`, sort, and take simple-root differences
/// in the standard coordinates.
pub fn weighted_dynkin(t: LieType, p: &Partition) -> Vec<i64> {
    let n = t.rank();
    let mut entries: Vec<i64> = Vec::new();
    for &q in p.parts() {
        let q = q as i64;
        let mut v = q - 1;
        while v >= 1 - q {
            entries.push(v);
            v -= 2;
        }
    }
    entries.sort_unstable_by(|x, y| y.cmp(x));
    match t.family() {
        Family::A => (0..n).map(|i| entries[i] - entries[i + 1]).collect(),
        Family::B => {
            // entries has odd length 2n+1 and is symmetric; take the first n
            let h: Vec<i64> = entries.into_iter().take(n).collect();
            let mut l: Vec<i64> = (0..n - 1).map(|i| h[i] - h[i + 1]).collect();
            l.push(h[n - 1]);
            l
        }
        Family::C => {
            let h: Vec<i64> = entries.into_iter().take(n).collect();
            let mut l: Vec<i64> = (0..n - 1).map(|i| h[i] - h[i + 1]).collect();
            l.push(2 * h[n - 1]);
            l
        }
        Family::D => {
            let h: Vec<i64> = entries.into_iter().take(n).collect();
            let mut l: Vec<i64> = (0..n - 1).map(|i| h[i] - h[i + 1]).collect();
            l.push(h[n - 2] + h[n - 1]);
            l
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, b, c, d};
    use crate::ptn;

    #[test]
    fn validity() {
        assert!(partition_valid(d(4), &ptn![5, 3]));
        assert!(partition_valid(d(4), &ptn![4, 4])); // very even
        assert!(!partition_valid(d(4), &ptn![5, 2, 1]));
        assert!(partition_valid(d(4), &ptn![2, 2, 2, 2]));
        assert!(partition_valid(c(3), &ptn![4, 2]));
        assert!(!partition_valid(c(3), &ptn![3, 2, 1]));
        assert!(partition_valid(b(2), &ptn![3, 1, 1]));
    }

    #[test]
    fn pair_decompositions() {
        let (pairs, gamma) = pair_decomposition(c(3), &ptn![4, 2]);
        assert!(pairs.is_empty());
        assert_eq!(gamma, ptn![4, 2]);
        let (pairs, gamma) = pair_decomposition(d(4), &ptn![3, 3, 1, 1]);
        assert_eq!(pairs, vec![3, 1]);
        assert!(gamma.is_empty());
        let (pairs, gamma) = pair_decomposition(d(4), &ptn![3, 2, 2, 1]);
        assert_eq!(pairs, vec![2]);
        assert_eq!(gamma, ptn![3, 1]);
    }

    #[test]
    fn distinguished() {
        assert!(is_distinguished(d(4), &ptn![5, 3]));
        assert!(!is_distinguished(d(4), &ptn![3, 3, 1, 1]));
        assert!(is_distinguished(c(3), &ptn![4, 2]));
        assert!(is_distinguished(a(3), &ptn![4]));
        assert!(!is_distinguished(a(3), &ptn![2, 2]));
    }

    #[test]
    fn saturation_examples() {
        // gl(3) regular into D4 doubles to (3,3) and pads: (3,3,1,1)
        let f = vec![LeviFactor::gl_regular(3)];
        assert_eq!(saturate_partition(d(4), &f).unwrap(), ptn![3, 3, 1, 1]);
    }

    #[test]
    fn induction_examples() {
        // gl(b+1)^v x gl(b)^(m-v) zeros into A_n gives (m^b, v)
        let n = 9usize;
        for m in 1..=n + 1 {
            let bq = (n + 1) / m;
            let v = n + 1 - bq * m;
            let mut f = Vec::new();
            for _ in 0..v {
                f.push(LeviFactor::gl_zero(bq + 1));
            }
            for _ in 0..m - v {
                f.push(LeviFactor::gl_zero(bq));
            }
            let got = induce_partition(a(n), &f).unwrap();
            let mut expect = vec![m; bq];
            if v > 0 {
                expect.push(v);
            }
            assert_eq!(got, Partition::new(expect), "A induction m={m}");
        }
        // gl(2)^{n-(m+1)/2} x gl(1)^{m-n+1} zeros into D_n (m odd > n-1)
        for n in 4usize..=9 {
            for m in (n..2 * n - 2).step_by(1) {
                if m % 2 == 0 || m <= n - 1 {
                    continue;
                }
                let mut f = Vec::new();
                for _ in 0..n - (m + 1) / 2 {
                    f.push(LeviFactor::gl_zero(2));
                }
                for _ in 0..m - n + 1 {
                    f.push(LeviFactor::gl_zero(1));
                }
                let got = induce_partition(d(n), &f).unwrap();
                assert_eq!(got, ptn![m, 2 * n - m], "D induction n={n} m={m}");
            }
        }
        // induction from the full group is the identity on the zero orbit
        let f = vec![LeviFactor::Block {
            kind: BlockKind::So,
            size: 8,
            orbit: Partition::new(vec![1; 8]),
        }];
        assert_eq!(induce_partition(d(4), &f).unwrap(), Partition::new(vec![1; 8]));
    }

    #[test]
    fn duality_examples() {
        assert_eq!(dual_partition(d(4), &ptn![5, 3]), ptn![2, 2, 1, 1, 1, 1]);
        assert_eq!(dual_partition(d(4), &ptn![7, 1]), Partition::new(vec![1; 8]));
        assert_eq!(dual_partition(a(4), &ptn![5]), Partition::new(vec![1; 5]));
    }

    #[test]
    fn theta_pairings() {
        assert_eq!(theta_pairing(a(4), &ptn![3, 2]), 4);
        assert_eq!(theta_pairing(c(3), &ptn![4, 2]), 6);
        assert_eq!(theta_pairing(d(4), &ptn![5, 3]), 6);
        // q2 = q1 - 1 gives 2 q1 - 3
        assert_eq!(theta_pairing(d(5), &ptn![5, 4, 1]), 7);
        assert_eq!(theta_pairing(d(4), &Partition::new(vec![1; 8])), 0);
    }

    #[test]
    fn dims() {
        // minimal and regular orbits of D4
        assert_eq!(orbit_dim(d(4), &ptn![2, 2, 1, 1, 1, 1]), 10);
        assert_eq!(orbit_dim(d(4), &ptn![7, 1]), 24);
        assert_eq!(orbit_dim(a(2), &ptn![3]), 6);
        assert_eq!(orbit_dim(c(3), &ptn![6]), 18);
    }

    #[test]
    fn weighted_dynkin_labels() {
        // regular orbits have all labels 2
        assert_eq!(weighted_dynkin(a(3), &ptn![4]), vec![2, 2, 2]);
        assert_eq!(weighted_dynkin(b(3), &ptn![7]), vec![2, 2, 2]);
        assert_eq!(weighted_dynkin(c(3), &ptn![6]), vec![2, 2, 2]);
        assert_eq!(weighted_dynkin(d(4), &ptn![7, 1]), vec![2, 2, 2, 2]);
        // D4 subregular (5,3): h = (4,2,1,1)... entries 4,2,0,-2,-4,2,0,-2
        // sorted: 4,2,2,0 -> labels (2,0,2,2)
        assert_eq!(weighted_dynkin(d(4), &ptn![5, 3]), vec![2, 0, 2, 2]);
        // zero orbits
        assert_eq!(weighted_dynkin(c(2), &ptn![1, 1, 1, 1]), vec![0, 0]);
    }
}
