//! Catalog-driven operations for the exceptional types. Orbit labels encode
//! their Bala-Carter data ("A4+A1" = gl(5) x gl(2) with regular orbits,
//! "D6(a1)" = so(12) with the (9,3) orbit, "E6(a3)+A1" = an E6 factor with a
//! distinguished orbit plus gl(2)), so the decomposition is parsed straight
//! from the label.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::partition::Partition;
use crate::rootdata::root_data;

use super::catalog::{self, ExcOrbitRecord};
use super::{BlockKind, LeviDecomposition, LeviFactor, NilpotentOrbit};

/// Per-type closure matrix and index, built once from the cover lists.
struct ClosureTable {
    index: HashMap<&'static str, usize>,
    leq: Vec<Vec<bool>>,
}

fn closure_table(t: LieType) -> &'static ClosureTable {
    static CACHE: OnceLock<Mutex<HashMap<LieType, &'static ClosureTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(tbl) = guard.get(&t) {
        return tbl;
    }
    let recs = catalog::records(t);
    let n = recs.len();
    let index: HashMap<&'static str, usize> =
        recs.iter().enumerate().map(|(i, r)| (r.label, i)).collect();
    let mut leq = vec![vec![false; n]; n];
    for (i, r) in recs.iter().enumerate() {
        leq[i][i] = true;
        for c in r.covers {
            let j = index[c];
            leq[j][i] = true; // covered orbit is below
        }
    }
    // Floyd-Warshall style transitive closure
    for k in 0..n {
        for i in 0..n {
            if leq[i][k] {
                for j in 0..n {
                    if leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
    }
    let leaked: &'static ClosureTable = Box::leak(Box::new(ClosureTable { index, leq }));
    guard.insert(t, leaked);
    leaked
}

pub fn closure_leq(t: LieType, lower: &str, upper: &str) -> bool {
    let tbl = closure_table(t);
    tbl.leq[tbl.index[lower]][tbl.index[upper]]
}

pub fn dual_label(t: LieType, label: &str) -> &'static str {
    catalog::lookup(t, label).unwrap().dual
}

pub fn is_distinguished(t: LieType, label: &str) -> bool {
    // distinguished = the Bala-Carter Levi is the full algebra, i.e. the
    // label names a single factor of the ambient type itself
    match parse_label(t, label) {
        Ok(factors) => match factors.as_slice() {
            [LeviFactor::Exceptional { lie_type, .. }] => *lie_type == t,
            _ => false,
        },
        Err(_) => false,
    }
}

/// `<theta, h_d>` from the weighted Dynkin labels of the orbit.
pub fn theta_pairing(t: LieType, label: &str) -> i64 {
    let rec = catalog::lookup(t, label).unwrap();
    let theta = &root_data(t).highest_root;
    rec.weighted_dynkin
        .iter()
        .zip(theta)
        .map(|(l, c)| l * c)
        .sum()
}

/// Orbit dimension from the weighted Dynkin labels:
/// dim g - dim g_0 - dim g_1.
pub fn orbit_dim(t: LieType, label: &str) -> usize {
    let rec = catalog::lookup(t, label).unwrap();
    dim_from_weighted_dynkin(t, rec.weighted_dynkin)
}

pub fn dim_from_weighted_dynkin(t: LieType, labels: &[i64]) -> usize {
    // labels are dominant, so positive roots pair nonnegatively:
    // dim g_0 = rank + 2 #{beta > 0 : <beta,h> = 0}, dim g_1 = #{<beta,h> = 1}
    let r = root_data(t);
    let mut zero = 0usize;
    let mut one = 0usize;
    for root in &r.positive_roots {
        let v: i64 = labels.iter().zip(root).map(|(l, c)| l * c).sum();
        debug_assert!(v >= 0, "weighted Dynkin labels must be dominant");
        match v {
            0 => zero += 1,
            1 => one += 1,
            _ => {}
        }
    }
    2 * (r.num_positive_roots() - zero) - one
}

pub fn bala_carter(t: LieType, label: &str) -> LeviDecomposition {
    let factors = parse_label(t, label).unwrap();
    LeviDecomposition {
        factors,
        very_even: None,
    }
}

/// Inverts `bala_carter` over the catalog: the orbit whose parsed factors
/// match. Errors when the abstract data is ambiguous (primed label pairs).
pub fn saturate(ld: &LeviDecomposition, ambient: LieType) -> Result<NilpotentOrbit> {
    let mut matches = Vec::new();
    for rec in catalog::records(ambient) {
        let factors = parse_label(ambient, rec.label)?;
        if multiset_eq(&factors, &ld.factors) {
            matches.push(rec.label);
        }
    }
    match matches.as_slice() {
        [one] => NilpotentOrbit::exceptional(ambient, one),
        [] => Err(Error::LeviShape(format!(
            "no {ambient} orbit has the given Bala-Carter data"
        ))),
        many => Err(Error::LeviShape(format!(
            "Bala-Carter data matches several {ambient} orbits: {many:?}"
        ))),
    }
}

fn multiset_eq(a: &[LeviFactor], b: &[LeviFactor]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut bs: Vec<&LeviFactor> = b.iter().collect();
    for f in a {
        match bs.iter().position(|g| *g == f) {
            Some(i) => {
                bs.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

/// Parses a Bala-Carter label into Levi factors. The label "0" is the torus.
pub fn parse_label(ambient: LieType, label: &str) -> Result<Vec<LeviFactor>> {
    let bad = |why: &str| Error::Parse {
        what: "Bala-Carter label",
        input: format!("{label} ({why})"),
    };
    let mut s = label.trim();
    if s == "0" {
        return Ok(Vec::new());
    }
    // strip a prime decoration around the whole label: (X)' or (X)''
    if s.starts_with('(') {
        if let Some(close) = s.rfind(')') {
            if s[close + 1..].chars().all(|c| c == '\'') && !s[close + 1..].is_empty() {
                s = &s[1..close];
            }
        }
    }
    let mut out = Vec::new();
    for token in s.split('+') {
        let token = token.trim();
        let mut chars = token.char_indices().peekable();
        let mut mult = 0usize;
        while let Some(&(_, c)) = chars.peek() {
            if c.is_ascii_digit() {
                mult = mult * 10 + c.to_digit(10).unwrap() as usize;
                chars.next();
            } else {
                break;
            }
        }
        let mult = mult.max(1);
        let Some((_, fam_char)) = chars.next() else {
            return Err(bad("missing family letter"));
        };
        let mut rank = 0usize;
        while let Some(&(_, c)) = chars.peek() {
            if c.is_ascii_digit() {
                rank = rank * 10 + c.to_digit(10).unwrap() as usize;
                chars.next();
            } else {
                break;
            }
        }
        if rank == 0 {
            return Err(bad("missing rank"));
        }
        // trailing short-root marker (F4/G2 labels like A1s, A2s)
        if let Some(&(_, 's')) = chars.peek() {
            chars.next();
        }
        // optional distinguished-orbit suffix "(a1)" / "(b2)"
        let rest: String = chars.map(|(_, c)| c).collect();
        let suffix: Option<(char, usize)> = if rest.is_empty() {
            None
        } else {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| bad("malformed suffix"))?;
            let mut it = inner.chars();
            let letter = it.next().ok_or_else(|| bad("empty suffix"))?;
            let idx: usize = it
                .as_str()
                .parse()
                .map_err(|_| bad("suffix index not a number"))?;
            Some((letter, idx))
        };
        let factor = factor_from_parts(ambient, fam_char, rank, suffix, &bad)?;
        for _ in 0..mult {
            out.push(factor.clone());
        }
    }
    Ok(out)
}

fn factor_from_parts(
    ambient: LieType,
    fam: char,
    rank: usize,
    suffix: Option<(char, usize)>,
    bad: &dyn Fn(&str) -> Error,
) -> Result<LeviFactor> {
    match fam.to_ascii_uppercase() {
        'A' => {
            if suffix.is_some() {
                return Err(bad("type A factors carry no suffix"));
            }
            Ok(LeviFactor::gl_regular(rank + 1))
        }
        'B' => {
            if suffix.is_some() {
                return Err(bad("unsupported B-factor suffix"));
            }
            Ok(LeviFactor::Block {
                kind: BlockKind::So,
                size: 2 * rank + 1,
                orbit: Partition::new(vec![2 * rank + 1]),
            })
        }
        'C' => {
            let j = match suffix {
                None => 0,
                Some(('a', j)) => j,
                _ => return Err(bad("unsupported C-factor suffix")),
            };
            if 2 * j >= 2 * rank - 2 * j && j > 0 {
                return Err(bad("C-factor suffix too deep"));
            }
            let orbit = if j == 0 {
                Partition::new(vec![2 * rank])
            } else {
                Partition::new(vec![2 * rank - 2 * j, 2 * j])
            };
            Ok(LeviFactor::Block {
                kind: BlockKind::Sp,
                size: 2 * rank,
                orbit,
            })
        }
        'D' => {
            let j = match suffix {
                None => 0,
                Some(('a', j)) => j,
                _ => return Err(bad("unsupported D-factor suffix")),
            };
            let big = 2 * rank - 1 - 2 * j;
            let small = 2 * j + 1;
            if big <= small {
                return Err(bad("D-factor suffix too deep"));
            }
            Ok(LeviFactor::Block {
                kind: BlockKind::So,
                size: 2 * rank,
                orbit: Partition::new(vec![big, small]),
            })
        }
        'E' | 'F' | 'G' => {
            let fam = match fam.to_ascii_uppercase() {
                'E' => Family::E,
                'F' => Family::F,
                _ => Family::G,
            };
            let lt = LieType::new(fam, rank).map_err(|_| bad("invalid factor rank"))?;
            let flabel = match suffix {
                None => lt.to_string(),
                Some((c, j)) => format!("{lt}({c}{j})"),
            };
            // the factor's orbit must exist and be distinguished there
            if lt == ambient {
                catalog::lookup(lt, &flabel)?;
            } else {
                let rec = catalog::lookup(lt, &flabel)?;
                debug_assert!(is_distinguished(lt, rec.label));
            }
            Ok(LeviFactor::Exceptional {
                lie_type: lt,
                label: flabel,
            })
        }
        _ => Err(bad("unknown family letter")),
    }
}

/// Records with cl values, used by the level-map module.
pub fn record(t: LieType, label: &str) -> Result<&'static ExcOrbitRecord> {
    catalog::lookup(t, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::g2;

    #[test]
    fn parse_labels() {
        let f = parse_label(g2(), "G2(a1)").unwrap();
        assert_eq!(f.len(), 1);
        let f = parse_label(g2(), "A1s").unwrap();
        assert_eq!(f, vec![LeviFactor::gl_regular(2)]);
        assert!(parse_label(g2(), "0").unwrap().is_empty());
    }
}
