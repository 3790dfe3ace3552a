//! The cyclotomic level map on nilpotent orbits, its image, the attached
//! maximal orbits, and the exhaustive verification of their order-theoretic
//! properties.

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::orbit::{
    self, bala_carter, catalog, closure_leq, levi_theta_pairing, list_orbits, NilpotentOrbit,
};
use crate::partition::Partition;
use crate::report::CheckReport;
use crate::rootdata::root_data;

/// Image of the cyclotomic level map for a type, as a sorted set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClImage {
    pub lie_type: LieType,
    pub values: Vec<i64>,
}

impl ClImage {
    pub fn contains(&self, m: i64) -> bool {
        self.values.binary_search(&m).is_ok()
    }

    pub fn max(&self) -> i64 {
        *self.values.last().unwrap()
    }
}

/// Cyclotomic level of an orbit via its Bala-Carter decomposition: a + 1,
/// where 2a is the largest ad h weight on the Bala-Carter Levi.
pub fn cl(o: &NilpotentOrbit) -> i64 {
    let two_a = levi_theta_pairing(&bala_carter(o));
    debug_assert!(two_a % 2 == 0, "largest Levi h-weight must be even");
    two_a / 2 + 1
}

/// Closed-form cyclotomic level for classical orbits: q_1 in types A and C;
/// q_1 or q_1 - 1 in types B and D according to whether the largest part
/// repeats. This is the independent route against which `cl` is checked.
pub fn cl_closed_form(o: &NilpotentOrbit) -> Result<i64> {
    let p = o
        .partition()
        .ok_or_else(|| Error::Unsupported(o.lie_type().to_string(), "closed form is classical"))?;
    if p.is_empty() {
        return Ok(1);
    }
    let q1 = p.part(0) as i64;
    Ok(match o.lie_type().family() {
        Family::A | Family::C => q1,
        Family::B | Family::D => {
            if p.part(1) == p.part(0) {
                q1
            } else {
                q1 - 1
            }
        }
        _ => unreachable!(),
    })
}

/// Frozen catalog value for exceptional orbits; equals `cl` (checked in the
/// test suites).
pub fn cl_catalog(o: &NilpotentOrbit) -> Option<i64> {
    o.label()
        .map(|l| catalog::lookup(o.lie_type(), l).unwrap().cl)
}

/// Image of the level map in closed form:
/// A_n: [1, n+1] (orbits are partitions of n+1);
/// B_n, C_n: [1, n] plus even numbers in [n+1, 2n];
/// D_n: [1, n] plus even numbers in [n+1, 2n-2];
/// exceptional: the set of catalog values.
pub fn cl_image(t: LieType) -> ClImage {
    let n = t.rank() as i64;
    let mut values: Vec<i64> = match t.family() {
        Family::A => (1..=n + 1).collect(),
        Family::B | Family::C => (1..=n)
            .chain(((n + 1)..=2 * n).filter(|m| m % 2 == 0))
            .collect(),
        Family::D => (1..=n)
            .chain(((n + 1)..=2 * n - 2).filter(|m| m % 2 == 0))
            .collect(),
        _ => {
            let mut v: Vec<i64> = catalog::records(t).iter().map(|r| r.cl).collect();
            v.sort_unstable();
            v.dedup();
            v
        }
    };
    values.sort_unstable();
    values.dedup();
    ClImage { lie_type: t, values }
}

/// Largest element of the image that is <= m; defined for 1 <= m <= h.
pub fn floor_to_image(t: LieType, m: i64) -> Result<i64> {
    let h = root_data(t).coxeter_number;
    if m < 1 || m > h {
        return Err(Error::LevelOutOfRange(m));
    }
    let img = cl_image(t);
    Ok(*img
        .values
        .iter()
        .rev()
        .find(|&&v| v <= m)
        .expect("1 is always in the image"))
}

/// The unique closure-maximal orbit among those of level <= m, by the
/// explicit classical case tables or the catalog.
pub fn max_orbit(t: LieType, m: i64) -> Result<NilpotentOrbit> {
    if !cl_image(t).contains(m) {
        return Err(Error::NotInImage(m));
    }
    if t.is_classical() {
        let p = max_orbit_partition(t, m);
        debug_assert!(
            !orbit::classical::is_very_even(t, &p),
            "maximal orbits are never very even"
        );
        NilpotentOrbit::classical(t, p)
    } else {
        // the unique orbit dominating every orbit of level <= m
        let orbits = list_orbits(t)?;
        let eligible: Vec<&NilpotentOrbit> = orbits.iter().filter(|o| cl(o) <= m).collect();
        let maxima: Vec<&&NilpotentOrbit> = eligible
            .iter()
            .filter(|o| eligible.iter().all(|p| closure_leq(p, o).unwrap()))
            .collect();
        match maxima.as_slice() {
            [one] => Ok((**one).clone()),
            other => Err(Error::NonUniqueMaximum(other.len())),
        }
    }
}

/// The classical case tables for the maximal partition q(m).
fn max_orbit_partition(t: LieType, m: i64) -> Partition {
    let n = t.rank() as i64;
    let mu = m as usize;
    match t.family() {
        Family::A => {
            let total = n + 1;
            let b = (total / m) as usize;
            let v = (total - (b as i64) * m) as usize;
            let mut parts = vec![mu; b];
            parts.push(v);
            Partition::new(parts)
        }
        Family::B => {
            let total = 2 * n + 1;
            if m % 2 == 0 {
                // largest k with (m+1) + 2km <= 2n+1
                let k = ((total - m - 1) / (2 * m)) as usize;
                let mut parts = vec![mu + 1];
                parts.extend(vec![mu; 2 * k]);
                let used = (m + 1) + 2 * (k as i64) * m;
                let rest = total - used;
                if rest == 0 {
                    // (2k+1)m = 2n
                } else if rest <= m {
                    // (2k+1)m < 2n <= (2k+2)m
                    parts.push(rest as usize - 1);
                    parts.push(1);
                } else {
                    parts.push(mu - 1);
                    parts.push((rest - (m - 1)) as usize);
                }
                Partition::new(parts)
            } else {
                let b = (total / m) as usize;
                let rest = (total - (b as i64) * m) as usize;
                let mut parts = vec![mu; b];
                if b % 2 == 1 {
                    if rest > 0 {
                        parts.push(rest - 1);
                        parts.push(1);
                    }
                } else {
                    parts.push(rest);
                }
                Partition::new(parts)
            }
        }
        Family::C => {
            let total = 2 * n;
            if m % 2 == 1 {
                let k = (total / (2 * m)) as usize;
                let used = 2 * (k as i64) * m;
                let rest = total - used;
                let mut parts = vec![mu; 2 * k];
                if rest == 0 {
                } else if rest <= m - 1 {
                    parts.push(rest as usize);
                } else {
                    parts.push(mu - 1);
                    parts.push((rest - (m - 1)) as usize);
                }
                Partition::new(parts)
            } else {
                let b = (total / m) as usize;
                let rest = (total - (b as i64) * m) as usize;
                let mut parts = vec![mu; b];
                parts.push(rest);
                Partition::new(parts)
            }
        }
        Family::D => {
            let total = 2 * n;
            if m % 2 == 0 {
                let k = ((total - m - 1) / (2 * m)) as usize;
                let used = (m + 1) + 2 * (k as i64) * m;
                let rest = total - used;
                let mut parts = vec![mu + 1];
                parts.extend(vec![mu; 2 * k]);
                if (2 * (k as i64) + 2) * m >= total {
                    parts.push(rest as usize);
                } else {
                    parts.push(mu - 1);
                    parts.push((rest - (m - 1) - 1) as usize);
                    parts.push(1);
                }
                Partition::new(parts)
            } else {
                let b = (total / m) as usize;
                let rest = (total - (b as i64) * m) as usize;
                let mut parts = vec![mu; b];
                if b % 2 == 0 {
                    if rest > 0 {
                        parts.push(rest - 1);
                        parts.push(1);
                    }
                } else {
                    parts.push(rest);
                }
                Partition::new(parts)
            }
        }
        _ => unreachable!(),
    }
}

/// Exhaustive verification of the order-theoretic properties of the level
/// map over a full orbit set: unique maxima, monotonicity along the closure
/// order, strict growth of the maximal orbits, and the closure identity.
pub fn verify_max_orbit_properties(t: LieType) -> Result<CheckReport> {
    let mut report = CheckReport::new();
    let orbits = list_orbits(t)?;
    let levels: Vec<i64> = orbits.iter().map(cl).collect();
    let img = cl_image(t);

    // enumerated image agrees with the closed form
    let mut seen: Vec<i64> = levels.clone();
    seen.sort_unstable();
    seen.dedup();
    report.record(
        format!("{t}: image of the level map matches the closed form"),
        seen == img.values,
        format!("enumerated {seen:?}"),
    );

    // (2) monotone along closure
    let mut mono_ok = true;
    let mut mono_detail = String::new();
    for (i, o1) in orbits.iter().enumerate() {
        for (j, o2) in orbits.iter().enumerate() {
            if closure_leq(o1, o2)? && levels[i] > levels[j] {
                mono_ok = false;
                mono_detail = format!("{} < {} but levels {} > {}", o1, o2, levels[i], levels[j]);
            }
        }
    }
    report.record(
        format!("{t}: level map is monotone along the closure order"),
        mono_ok,
        mono_detail,
    );

    // (1) unique maximum per m, equal to the closed-form maximal orbit
    let mut max_per_m = Vec::new();
    for &m in &img.values {
        let eligible: Vec<&NilpotentOrbit> = orbits
            .iter()
            .zip(&levels)
            .filter(|(_, &l)| l <= m)
            .map(|(o, _)| o)
            .collect();
        let maxima: Vec<&&NilpotentOrbit> = eligible
            .iter()
            .filter(|o| eligible.iter().all(|p| closure_leq(p, o).unwrap()))
            .collect();
        let unique = maxima.len() == 1;
        let agrees = unique && max_orbit(t, m)? == ***maxima.first().unwrap();
        report.record(
            format!("{t}: unique maximal orbit at level {m}"),
            unique && agrees,
            if unique {
                format!("maximum {}", maxima[0])
            } else {
                format!("{} maxima", maxima.len())
            },
        );
        if unique {
            max_per_m.push((m, (*maxima[0]).clone()));
        }
    }

    // (3) strictly increasing chain
    let mut chain_ok = true;
    for w in max_per_m.windows(2) {
        let (m1, o1) = &w[0];
        let (m2, o2) = &w[1];
        if !(closure_leq(o1, o2)? && o1 != o2) {
            chain_ok = false;
            report.fail(
                format!("{t}: maximal orbits form a strict chain"),
                format!("O({m1}) = {o1} vs O({m2}) = {o2}"),
            );
        }
    }
    if chain_ok {
        report.pass(format!("{t}: maximal orbits form a strict chain"), "");
    }

    // (4) closure identity: closure of O(m) = union of orbits with level <= m
    let mut closure_ok = true;
    for (m, om) in &max_per_m {
        for (o, &l) in orbits.iter().zip(&levels) {
            let inside = closure_leq(o, om)?;
            if inside != (l <= *m) {
                closure_ok = false;
                report.fail(
                    format!("{t}: closure identity at level {m}"),
                    format!("{o} has level {l}, containment {inside}"),
                );
            }
        }
    }
    if closure_ok {
        report.pass(format!("{t}: closure of each maximal orbit matches its level set"), "");
    }

    // the level map peaks exactly at the regular orbit, at the Coxeter number
    let h = root_data(t).coxeter_number;
    let peak = levels.iter().max().copied().unwrap_or(1);
    let peak_count = levels.iter().filter(|&&l| l == peak).count();
    report.record(
        format!("{t}: level peaks at the Coxeter number on the regular orbit"),
        peak == h && peak_count == 1,
        format!("max level {peak} (h = {h}), attained {peak_count} times"),
    );

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, b, c, d, g2};
    use crate::ptn;

    #[test]
    fn cl_closed_form_examples() {
        let o = NilpotentOrbit::classical(d(4), ptn![5, 3]).unwrap();
        assert_eq!(cl(&o), 4);
        assert_eq!(cl_closed_form(&o).unwrap(), 4);
        let o = NilpotentOrbit::classical(a(4), ptn![3, 1, 1]).unwrap();
        assert_eq!(cl(&o), 3);
        let o = NilpotentOrbit::zero(c(3));
        assert_eq!(cl(&o), 1);
        assert_eq!(cl_closed_form(&o).unwrap(), 1);
    }

    #[test]
    fn two_routes_agree_small() {
        for t in [a(6), b(4), c(4), d(5)] {
            for o in list_orbits(t).unwrap() {
                assert_eq!(cl(&o), cl_closed_form(&o).unwrap(), "routes differ at {o}");
            }
        }
    }

    #[test]
    fn images() {
        assert_eq!(cl_image(c(3)).values, vec![1, 2, 3, 4, 6]);
        assert_eq!(cl_image(d(4)).values, vec![1, 2, 3, 4, 6]);
        assert_eq!(cl_image(a(4)).values, vec![1, 2, 3, 4, 5]);
        assert_eq!(cl_image(b(4)).values, vec![1, 2, 3, 4, 6, 8]);
        assert_eq!(cl_image(g2()).values, vec![1, 2, 3, 6]);
    }

    #[test]
    fn floors() {
        assert_eq!(floor_to_image(d(4), 5).unwrap(), 4);
        assert_eq!(floor_to_image(d(4), 1).unwrap(), 1);
        assert_eq!(floor_to_image(b(4), 7).unwrap(), 6);
        assert!(floor_to_image(d(4), 7).is_err());
    }

    #[test]
    fn max_orbits_classical() {
        assert_eq!(
            max_orbit(d(4), 3).unwrap().partition().unwrap(),
            &ptn![3, 3, 1, 1]
        );
        assert_eq!(
            max_orbit(d(4), 4).unwrap().partition().unwrap(),
            &ptn![5, 3]
        );
        assert_eq!(
            max_orbit(d(4), 6).unwrap().partition().unwrap(),
            &ptn![7, 1]
        );
        assert_eq!(max_orbit(a(4), 5).unwrap().partition().unwrap(), &ptn![5]);
        assert!(max_orbit(d(4), 5).is_err());
    }

    #[test]
    fn max_orbit_matches_enumeration() {
        for t in [a(7), b(4), c(4), d(5), d(6)] {
            let orbits = list_orbits(t).unwrap();
            for &m in &cl_image(t).values {
                let om = max_orbit(t, m).unwrap();
                for o in &orbits {
                    if cl(o) <= m {
                        assert!(
                            closure_leq(o, &om).unwrap(),
                            "{o} should lie below O({m}) = {om} in {t}"
                        );
                    }
                }
                assert_eq!(cl(&om), m, "level of the maximal orbit at {m} in {t}");
            }
        }
    }

    #[test]
    fn verify_runs_clean_on_small_types() {
        for t in [a(5), b(3), c(3), d(4), d(5), g2()] {
            let rep = verify_max_orbit_properties(t).unwrap();
            assert!(rep.all_passed(), "failures for {t}:\n{rep}");
        }
    }
}
