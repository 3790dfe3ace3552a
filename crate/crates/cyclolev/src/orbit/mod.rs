//! Nilpotent orbits: classical orbits by partitions (with very even labels
//! in type D), exceptional orbits through embedded catalogs, the closure
//! order, Bala-Carter decomposition, saturation, Lusztig-Spaltenstein
//! induction, duality, specialness, and the highest-root pairing.

pub mod catalog;
pub mod classical;
pub mod exceptional;

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::partition::Partition;

/// Rank bound for classical orbit enumeration.
pub const CLASSICAL_RANK_BOUND: usize = 12;

/// Label distinguishing the two orbits sharing a very even partition in
/// type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VeryEvenLabel {
    I,
    II,
}

impl fmt::Display for VeryEvenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VeryEvenLabel::I => write!(f, "I"),
            VeryEvenLabel::II => write!(f, "II"),
        }
    }
}

/// Orthogonal or symplectic block of a classical Levi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockKind {
    So,
    Sp,
}

/// One simple (or gl) factor of a Levi together with the orbit it carries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LeviFactor {
    /// gl(size) with a partition of `size`.
    Gl { size: usize, orbit: Partition },
    /// so(size) or sp(size) with a partition of `size`.
    Block {
        kind: BlockKind,
        size: usize,
        orbit: Partition,
    },
    /// An exceptional simple factor carrying a distinguished orbit label
    /// from that type's catalog.
    Exceptional { lie_type: LieType, label: String },
}

impl LeviFactor {
    pub fn gl_regular(size: usize) -> Self {
        LeviFactor::Gl {
            size,
            orbit: Partition::new(vec![size]),
        }
    }

    pub fn gl_zero(size: usize) -> Self {
        LeviFactor::Gl {
            size,
            orbit: Partition::new(vec![1; size]),
        }
    }

    pub fn block_zero(kind: BlockKind, size: usize) -> Self {
        LeviFactor::Block {
            kind,
            size,
            orbit: Partition::new(vec![1; size]),
        }
    }

    /// Abstract simple type(s) of this factor, normalised: gl(a) counts as
    /// A_{a-1} (nothing for a = 1), so(4) as two A1s, so(6) as A3, so(3) and
    /// sp(2) as A1, and so on. Torus-like factors contribute nothing.
    pub fn abstract_types(&self) -> Vec<(char, usize)> {
        match self {
            LeviFactor::Gl { size, .. } => {
                if *size >= 2 {
                    vec![('A', size - 1)]
                } else {
                    vec![]
                }
            }
            LeviFactor::Block { kind, size, .. } => match (kind, *size) {
                (_, 0) | (_, 1) | (BlockKind::So, 2) => vec![],
                (BlockKind::So, 3) => vec![('A', 1)],
                (BlockKind::So, 4) => vec![('A', 1), ('A', 1)],
                (BlockKind::So, 5) => vec![('B', 2)],
                (BlockKind::So, 6) => vec![('A', 3)],
                (BlockKind::So, n) if n % 2 == 0 => vec![('D', n / 2)],
                (BlockKind::So, n) => vec![('B', n / 2)],
                (BlockKind::Sp, 2) => vec![('A', 1)],
                (BlockKind::Sp, n) => vec![('C', n / 2)],
            },
            LeviFactor::Exceptional { lie_type, .. } => {
                vec![(lie_type.family().letter(), lie_type.rank())]
            }
        }
    }
}

/// A Bala-Carter decomposition: the simple factors of the minimal Levi
/// containing the orbit element as a distinguished element, with their
/// distinguished orbits. Torus factors are implicit. The optional very even
/// tag remembers which of the two type-D orbits the decomposition came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeviDecomposition {
    pub factors: Vec<LeviFactor>,
    pub very_even: Option<VeryEvenLabel>,
}

impl LeviDecomposition {
    pub fn new(factors: Vec<LeviFactor>) -> Self {
        LeviDecomposition {
            factors,
            very_even: None,
        }
    }

    /// Normalised abstract type multiset, sorted. Example: `[(A,1),(A,1)]`.
    pub fn abstract_types(&self) -> Vec<(char, usize)> {
        let mut v: Vec<(char, usize)> = self
            .factors
            .iter()
            .flat_map(LeviFactor::abstract_types)
            .collect();
        v.sort_unstable();
        v
    }

    /// Renders the abstract type like `3A1`, `A5+A2`, or `T` for a torus.
    pub fn type_string(&self) -> String {
        format_type_multiset(&self.abstract_types())
    }
}

/// Formats a multiset of simple types like `3A1+A2` (sorted by decreasing
/// rank, then family letter).
pub fn format_type_multiset(types: &[(char, usize)]) -> String {
    if types.is_empty() {
        return "T".to_string();
    }
    let mut sorted = types.to_vec();
    sorted.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    let mut pieces: Vec<String> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let (f, r) = sorted[i];
        let mut m = 1;
        while i + m < sorted.len() && sorted[i + m] == (f, r) {
            m += 1;
        }
        if m == 1 {
            pieces.push(format!("{f}{r}"));
        } else {
            pieces.push(format!("{m}{f}{r}"));
        }
        i += m;
    }
    pieces.join("+")
}

/// A nilpotent orbit of a simple Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NilpotentOrbit {
    lie_type: LieType,
    data: OrbitData,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitData {
    Classical {
        partition: Partition,
        very_even: Option<VeryEvenLabel>,
    },
    Exceptional {
        label: String,
    },
}

impl NilpotentOrbit {
    pub fn classical(lie_type: LieType, partition: Partition) -> Result<Self> {
        if !classical::partition_valid(lie_type, &partition) {
            return Err(Error::InvalidOrbit(
                partition.to_string(),
                lie_type.to_string(),
            ));
        }
        if classical::is_very_even(lie_type, &partition) {
            return Err(Error::InvalidOrbit(
                partition.to_string(),
                format!("{lie_type} (very even: a label I/II is required)"),
            ));
        }
        Ok(NilpotentOrbit {
            lie_type,
            data: OrbitData::Classical {
                partition,
                very_even: None,
            },
        })
    }

    pub fn classical_very_even(
        lie_type: LieType,
        partition: Partition,
        label: VeryEvenLabel,
    ) -> Result<Self> {
        if !classical::partition_valid(lie_type, &partition)
            || !classical::is_very_even(lie_type, &partition)
        {
            return Err(Error::InvalidOrbit(
                partition.to_string(),
                format!("{lie_type} (not very even)"),
            ));
        }
        Ok(NilpotentOrbit {
            lie_type,
            data: OrbitData::Classical {
                partition,
                very_even: Some(label),
            },
        })
    }

    /// Builds a classical orbit, attaching the given label (default I) when
    /// the partition happens to be very even.
    pub fn classical_auto(
        lie_type: LieType,
        partition: Partition,
        label_if_very_even: VeryEvenLabel,
    ) -> Result<Self> {
        if classical::is_very_even(lie_type, &partition) {
            Self::classical_very_even(lie_type, partition, label_if_very_even)
        } else {
            Self::classical(lie_type, partition)
        }
    }

    pub fn exceptional(lie_type: LieType, label: &str) -> Result<Self> {
        let rec = catalog::lookup(lie_type, label)?;
        Ok(NilpotentOrbit {
            lie_type,
            data: OrbitData::Exceptional {
                label: rec.label.to_string(),
            },
        })
    }

    pub fn zero(lie_type: LieType) -> Self {
        if lie_type.is_classical() {
            let total = lie_type.partition_total().unwrap();
            NilpotentOrbit::classical(lie_type, Partition::new(vec![1; total])).unwrap()
        } else {
            NilpotentOrbit::exceptional(lie_type, "0").unwrap()
        }
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn data(&self) -> &OrbitData {
        &self.data
    }

    pub fn partition(&self) -> Option<&Partition> {
        match &self.data {
            OrbitData::Classical { partition, .. } => Some(partition),
            _ => None,
        }
    }

    pub fn very_even_label(&self) -> Option<VeryEvenLabel> {
        match &self.data {
            OrbitData::Classical { very_even, .. } => *very_even,
            _ => None,
        }
    }

    pub fn label(&self) -> Option<&str> {
        match &self.data {
            OrbitData::Exceptional { label } => Some(label),
            _ => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            OrbitData::Classical { partition, .. } => partition.parts().iter().all(|&p| p == 1),
            OrbitData::Exceptional { label } => label == "0",
        }
    }

    /// Compact human-readable name: the partition (with very even suffix) or
    /// the Bala-Carter label.
    pub fn name(&self) -> String {
        match &self.data {
            OrbitData::Classical {
                partition,
                very_even,
            } => match very_even {
                Some(l) => format!("{partition}.{l}"),
                None => partition.to_string(),
            },
            OrbitData::Exceptional { label } => label.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        match &self.data {
            OrbitData::Classical { partition, .. } => {
                classical::orbit_dim(self.lie_type, partition)
            }
            OrbitData::Exceptional { label } => exceptional::orbit_dim(self.lie_type, label),
        }
    }

    /// All orbit labels' parities agree (classical) / all weighted Dynkin
    /// labels are even (exceptional).
    pub fn is_even(&self) -> bool {
        match &self.data {
            OrbitData::Classical { partition, .. } => partition.all_parts_same_parity(),
            OrbitData::Exceptional { label } => catalog::lookup(self.lie_type, label)
                .unwrap()
                .weighted_dynkin
                .iter()
                .all(|l| l % 2 == 0),
        }
    }
}

impl fmt::Display for NilpotentOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lie_type, self.name())
    }
}

#[derive(Serialize, Deserialize)]
struct OrbitWire {
    #[serde(rename = "type")]
    lie_type: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    partition: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    very_even: Option<VeryEvenLabel>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

impl Serialize for NilpotentOrbit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = match &self.data {
            OrbitData::Classical {
                partition,
                very_even,
            } => OrbitWire {
                lie_type: self.lie_type.to_string(),
                partition: Some(partition.parts().to_vec()),
                very_even: *very_even,
                label: None,
            },
            OrbitData::Exceptional { label } => OrbitWire {
                lie_type: self.lie_type.to_string(),
                partition: None,
                very_even: None,
                label: Some(label.clone()),
            },
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for NilpotentOrbit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = OrbitWire::deserialize(d)?;
        let t: LieType = wire.lie_type.parse().map_err(D::Error::custom)?;
        match (wire.partition, wire.label) {
            (Some(parts), None) => {
                let p = Partition::new(parts);
                match wire.very_even {
                    Some(l) => NilpotentOrbit::classical_very_even(t, p, l),
                    None => NilpotentOrbit::classical(t, p),
                }
                .map_err(D::Error::custom)
            }
            (None, Some(label)) => NilpotentOrbit::exceptional(t, &label).map_err(D::Error::custom),
            _ => Err(D::Error::custom("orbit needs a partition or a label")),
        }
    }
}

/// Complete orbit set for the type (rank bound for classical enumeration;
/// very even partitions contribute two orbits).
pub fn list_orbits(t: LieType) -> Result<Vec<NilpotentOrbit>> {
    if t.is_classical() {
        if t.rank() > CLASSICAL_RANK_BOUND {
            return Err(Error::RankBound(format!(
                "{t} exceeds the classical bound {CLASSICAL_RANK_BOUND}"
            )));
        }
        let mut out = Vec::new();
        for p in classical::valid_partitions(t) {
            if classical::is_very_even(t, &p) {
                out.push(NilpotentOrbit::classical_very_even(t, p.clone(), VeryEvenLabel::I)?);
                out.push(NilpotentOrbit::classical_very_even(t, p, VeryEvenLabel::II)?);
            } else {
                out.push(NilpotentOrbit::classical(t, p)?);
            }
        }
        Ok(out)
    } else {
        Ok(catalog::records(t)
            .iter()
            .map(|r| NilpotentOrbit {
                lie_type: t,
                data: OrbitData::Exceptional {
                    label: r.label.to_string(),
                },
            })
            .collect())
    }
}

/// Closure order: dominance for classical orbits, with very even pairs on
/// the same partition incomparable; table order for exceptional orbits.
pub fn closure_leq(o1: &NilpotentOrbit, o2: &NilpotentOrbit) -> Result<bool> {
    if o1.lie_type != o2.lie_type {
        return Err(Error::TypeMismatch(
            o1.lie_type.to_string(),
            o2.lie_type.to_string(),
        ));
    }
    match (&o1.data, &o2.data) {
        (
            OrbitData::Classical {
                partition: p1,
                very_even: v1,
            },
            OrbitData::Classical {
                partition: p2,
                very_even: v2,
            },
        ) => {
            if p1 == p2 {
                return Ok(v1 == v2);
            }
            p2.dominates(p1)
        }
        (OrbitData::Exceptional { label: l1 }, OrbitData::Exceptional { label: l2 }) => {
            Ok(exceptional::closure_leq(o1.lie_type, l1, l2))
        }
        _ => unreachable!("same type implies same data kind"),
    }
}

/// Bala-Carter decomposition of an orbit.
pub fn bala_carter(o: &NilpotentOrbit) -> LeviDecomposition {
    match &o.data {
        OrbitData::Classical {
            partition,
            very_even,
        } => LeviDecomposition {
            factors: classical::bala_carter_factors(o.lie_type, partition),
            very_even: *very_even,
        },
        OrbitData::Exceptional { label } => exceptional::bala_carter(o.lie_type, label),
    }
}

/// True when the Bala-Carter Levi is the full algebra.
pub fn is_distinguished(o: &NilpotentOrbit) -> bool {
    match &o.data {
        OrbitData::Classical { partition, .. } => {
            classical::is_distinguished(o.lie_type, partition)
        }
        OrbitData::Exceptional { label } => exceptional::is_distinguished(o.lie_type, label),
    }
}

/// Saturation of a Levi decomposition into a classical ambient type. For
/// exceptional ambients the catalog inverts `bala_carter` directly.
pub fn saturate(ld: &LeviDecomposition, ambient: LieType) -> Result<NilpotentOrbit> {
    if ambient.is_classical() {
        let p = classical::saturate_partition(ambient, &ld.factors)?;
        let label = ld.very_even.unwrap_or(VeryEvenLabel::I);
        NilpotentOrbit::classical_auto(ambient, p, label)
    } else {
        exceptional::saturate(ld, ambient)
    }
}

/// Lusztig-Spaltenstein induction from a classical Levi with the given
/// orbits on its factors. Very even results take label I (the predictor path
/// never produces a very even partition).
pub fn induce(factors: &[LeviFactor], ambient: LieType) -> Result<NilpotentOrbit> {
    if !ambient.is_classical() {
        return Err(Error::Unsupported(
            ambient.to_string(),
            "induction is computed for classical ambients only",
        ));
    }
    let p = classical::induce_partition(ambient, factors)?;
    NilpotentOrbit::classical_auto(ambient, p, VeryEvenLabel::I)
}

/// Duality (order-reversing onto special orbits): transpose in type A,
/// collapsed transpose in types B/C/D within the same type, catalog tables
/// in exceptional types. Very even orbits keep their label through duality
/// (flip with [`dual_flipping_very_even`] if the other convention is
/// wanted).
pub fn dual(o: &NilpotentOrbit) -> Result<NilpotentOrbit> {
    dual_with_convention(o, false)
}

/// Duality with the opposite very even label convention.
pub fn dual_flipping_very_even(o: &NilpotentOrbit) -> Result<NilpotentOrbit> {
    dual_with_convention(o, true)
}

fn dual_with_convention(o: &NilpotentOrbit, flip: bool) -> Result<NilpotentOrbit> {
    match &o.data {
        OrbitData::Classical {
            partition,
            very_even,
        } => {
            let q = classical::dual_partition(o.lie_type, partition);
            let label = match very_even {
                Some(l) if !flip => *l,
                Some(VeryEvenLabel::I) => VeryEvenLabel::II,
                Some(VeryEvenLabel::II) => VeryEvenLabel::I,
                None => VeryEvenLabel::I,
            };
            NilpotentOrbit::classical_auto(o.lie_type, q, label)
        }
        OrbitData::Exceptional { label } => {
            let d = exceptional::dual_label(o.lie_type, label);
            NilpotentOrbit::exceptional(o.lie_type, d)
        }
    }
}

/// Specialness: classical simply-laced via the double-dual test; exceptional
/// via the catalog flag. Unsupported for B/C (cross-type duality is out of
/// scope).
pub fn is_special(o: &NilpotentOrbit) -> Result<bool> {
    match &o.data {
        OrbitData::Classical { partition, .. } => match o.lie_type.family() {
            Family::A => Ok(true),
            Family::D => {
                let dd = classical::dual_partition(
                    o.lie_type,
                    &classical::dual_partition(o.lie_type, partition),
                );
                Ok(dd == *partition)
            }
            _ => Err(Error::Unsupported(
                o.lie_type.to_string(),
                "specialness needs simply-laced or exceptional type",
            )),
        },
        OrbitData::Exceptional { label } => {
            Ok(catalog::lookup(o.lie_type, label).unwrap().special)
        }
    }
}

/// `<theta, h_d>`: the largest ad h eigenvalue on the ambient algebra.
pub fn theta_pairing(o: &NilpotentOrbit) -> i64 {
    match &o.data {
        OrbitData::Classical { partition, .. } => {
            classical::theta_pairing(o.lie_type, partition)
        }
        OrbitData::Exceptional { label } => exceptional::theta_pairing(o.lie_type, label),
    }
}

/// Largest ad h weight on the Bala-Carter Levi (the `2a` of the cyclotomic
/// level): the maximum of the per-factor highest-root pairings.
pub fn levi_theta_pairing(ld: &LeviDecomposition) -> i64 {
    ld.factors
        .iter()
        .map(|f| match f {
            LeviFactor::Gl { orbit, .. } => classical::theta_pairing_block(true, orbit),
            LeviFactor::Block { kind, orbit, .. } => {
                classical::theta_pairing_block(*kind == BlockKind::Sp, orbit)
            }
            LeviFactor::Exceptional { lie_type, label } => {
                exceptional::theta_pairing(*lie_type, label)
            }
        })
        .max()
        .unwrap_or(0)
}

/// Covering relations of the closure order on a set of orbits of one type
/// (transitive reduction; used by the diagram emitter and the verifiers).
pub fn covers(orbits: &[NilpotentOrbit]) -> Result<Vec<(usize, usize)>> {
    let n = orbits.len();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = closure_leq(&orbits[i], &orbits[j])?;
        }
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !leq[i][j] {
                continue;
            }
            let direct = !(0..n).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if direct {
                out.push((j, i)); // j covers i
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, b, c, d, g2};
    use crate::ptn;

    #[test]
    fn orbit_counts() {
        assert_eq!(list_orbits(a(2)).unwrap().len(), 3);
        // D4: orthogonal partitions of 8, the very even (2,2,2,2) splits
        assert_eq!(list_orbits(d(4)).unwrap().len(), 12);
        assert_eq!(list_orbits(g2()).unwrap().len(), 5);
    }

    #[test]
    fn closure_examples() {
        let o1 = NilpotentOrbit::classical(d(4), ptn![3, 2, 2, 1]).unwrap();
        let o2 = NilpotentOrbit::classical(d(4), ptn![5, 3]).unwrap();
        assert!(closure_leq(&o1, &o2).unwrap());
        assert!(!closure_leq(&o2, &o1).unwrap());
        let ve1 =
            NilpotentOrbit::classical_very_even(d(4), ptn![2, 2, 2, 2], VeryEvenLabel::I).unwrap();
        let ve2 =
            NilpotentOrbit::classical_very_even(d(4), ptn![2, 2, 2, 2], VeryEvenLabel::II).unwrap();
        assert!(!closure_leq(&ve1, &ve2).unwrap());
        assert!(!closure_leq(&ve2, &ve1).unwrap());
        assert!(closure_leq(&ve1, &ve1).unwrap());
    }

    #[test]
    fn bala_carter_round_trip_classical() {
        for t in [a(4), a(7), b(3), b(5), c(3), c(5), d(4), d(6), d(7)] {
            for o in list_orbits(t).unwrap() {
                let ld = bala_carter(&o);
                for f in &ld.factors {
                    match f {
                        LeviFactor::Gl { orbit, .. } => assert_eq!(orbit.len(), 1),
                        LeviFactor::Block { kind, size, orbit } => {
                            assert_eq!(orbit.total(), *size);
                            let ok = match kind {
                                BlockKind::So => {
                                    classical::is_distinguished_block(false, orbit)
                                }
                                BlockKind::Sp => classical::is_distinguished_block(true, orbit),
                            };
                            assert!(ok, "factor orbit {orbit} distinguished");
                        }
                        LeviFactor::Exceptional { .. } => unreachable!(),
                    }
                }
                let back = saturate(&ld, t).unwrap();
                assert_eq!(back, o, "round trip for {o}");
            }
        }
    }

    #[test]
    fn bala_carter_spec_cases() {
        let o = NilpotentOrbit::classical(d(4), ptn![3, 3, 1, 1]).unwrap();
        let ld = bala_carter(&o);
        assert_eq!(ld.factors, vec![LeviFactor::gl_regular(3)]);
        assert_eq!(ld.type_string(), "A2");
        let o = NilpotentOrbit::classical(d(4), ptn![3, 2, 2, 1]).unwrap();
        assert_eq!(bala_carter(&o).type_string(), "3A1");
        let o = NilpotentOrbit::classical(c(3), ptn![4, 2]).unwrap();
        assert!(is_distinguished(&o));
    }

    #[test]
    fn dual_examples() {
        let o = NilpotentOrbit::classical(d(4), ptn![5, 3]).unwrap();
        assert_eq!(dual(&o).unwrap().partition().unwrap(), &ptn![2, 2, 1, 1, 1, 1]);
        let o = NilpotentOrbit::classical(d(4), ptn![7, 1]).unwrap();
        assert!(dual(&o).unwrap().is_zero());
        let o = NilpotentOrbit::classical(a(3), ptn![4]).unwrap();
        assert!(dual(&o).unwrap().is_zero());
    }

    #[test]
    fn very_even_duality_conventions() {
        let o =
            NilpotentOrbit::classical_very_even(d(4), ptn![2, 2, 2, 2], VeryEvenLabel::II).unwrap();
        let dd = dual(&dual(&o).unwrap()).unwrap();
        assert_eq!(dd, o, "duality preserves the very even label");
        let flipped = dual_flipping_very_even(&o).unwrap();
        assert_eq!(flipped.very_even_label(), Some(VeryEvenLabel::I));
    }

    #[test]
    fn special_examples() {
        let o = NilpotentOrbit::classical(a(5), ptn![3, 2, 1]).unwrap();
        assert!(is_special(&o).unwrap());
        // in D4 the unique non-special orbit is (3,2,2,1): its transpose
        // (4,3,1) is not symplectic, and the double dual lands on (3,3,1,1)
        let all = list_orbits(d(4)).unwrap();
        let nonspecial: Vec<String> = all
            .iter()
            .filter(|o| !is_special(o).unwrap())
            .map(|o| o.name())
            .collect();
        assert_eq!(nonspecial, vec!["(3,2,2,1)".to_string()]);
        let o = NilpotentOrbit::classical(d(4), ptn![3, 2, 2, 1]).unwrap();
        let dd = dual(&dual(&o).unwrap()).unwrap();
        assert_eq!(dd.partition().unwrap(), &ptn![3, 3, 1, 1]);
    }

    #[test]
    fn theta_pairing_examples() {
        let o = NilpotentOrbit::classical(a(4), ptn![3, 2]).unwrap();
        assert_eq!(theta_pairing(&o), 4);
        let o = NilpotentOrbit::zero(d(5));
        assert_eq!(theta_pairing(&o), 0);
    }

    #[test]
    fn serde_forms() {
        let o = NilpotentOrbit::classical(d(4), ptn![5, 3]).unwrap();
        assert_eq!(
            serde_json::to_string(&o).unwrap(),
            r#"{"type":"D4","partition":[5,3]}"#
        );
        let back: NilpotentOrbit =
            serde_json::from_str(r#"{"type":"D4","partition":[5,3]}"#).unwrap();
        assert_eq!(back, o);
        let ve =
            NilpotentOrbit::classical_very_even(d(4), ptn![2, 2, 2, 2], VeryEvenLabel::II).unwrap();
        let s = serde_json::to_string(&ve).unwrap();
        let back: NilpotentOrbit = serde_json::from_str(&s).unwrap();
        assert_eq!(back, ve);
    }
}
