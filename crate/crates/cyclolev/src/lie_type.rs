use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The nine families of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple Lie type such as `D4` or `E8`.
///
/// Rank constraints: A >= 1, B >= 2, C >= 2, D >= 4, E in {6,7,8}, F = 4, G = 2.
/// B2/C2 are both admitted (isomorphic but carried with their own partition
/// conventions), and D4 is the smallest D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    pub fn is_exceptional(self) -> bool {
        !self.is_classical()
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Langlands dual: swaps B_n and C_n, fixes everything else.
    pub fn dual(self) -> LieType {
        let family = match self.family {
            Family::B => Family::C,
            Family::C => Family::B,
            f => f,
        };
        LieType {
            family,
            rank: self.rank,
        }
    }

    /// Size of the defining module for classical types: n+1, 2n+1, 2n, 2n.
    /// Partitions labelling nilpotent orbits have this total.
    pub fn partition_total(self) -> Option<usize> {
        match self.family {
            Family::A => Some(self.rank + 1),
            Family::B => Some(2 * self.rank + 1),
            Family::C | Family::D => Some(2 * self.rank),
            _ => None,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses forms like "D4", "e8", "A 3" (case-insensitive, optional space).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let letter = chars
            .next()
            .ok_or_else(|| Error::ParseType(s.to_string()))?;
        let family = match letter.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rest = chars.as_str().trim();
        let rank: usize = rest.parse().map_err(|_| Error::ParseType(s.to_string()))?;
        LieType::new(family, rank)
    }
}

/// Convenience constructors used pervasively in tests.
pub fn a(n: usize) -> LieType {
    LieType::new(Family::A, n).unwrap()
}
pub fn b(n: usize) -> LieType {
    LieType::new(Family::B, n).unwrap()
}
pub fn c(n: usize) -> LieType {
    LieType::new(Family::C, n).unwrap()
}
pub fn d(n: usize) -> LieType {
    LieType::new(Family::D, n).unwrap()
}
pub fn e(n: usize) -> LieType {
    LieType::new(Family::E, n).unwrap()
}
pub fn f4() -> LieType {
    LieType::new(Family::F, 4).unwrap()
}
pub fn g2() -> LieType {
    LieType::new(Family::G, 2).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["A1", "B2", "C5", "D4", "E6", "E7", "E8", "F4", "G2"] {
            let t: LieType = s.parse().unwrap();
            assert_eq!(t.to_string(), s);
        }
        assert_eq!("d4".parse::<LieType>().unwrap(), d(4));
        assert!("D3".parse::<LieType>().is_err());
        assert!("E9".parse::<LieType>().is_err());
        assert!("H4".parse::<LieType>().is_err());
        assert!("A0".parse::<LieType>().is_err());
    }

    #[test]
    fn dual_is_involution() {
        let types = [a(5), b(3), c(3), d(7), e(6), e(7), e(8), f4(), g2()];
        for t in types {
            assert_eq!(t.dual().dual(), t);
        }
        assert_eq!(b(3).dual(), c(3));
        assert_eq!(a(5).dual(), a(5));
        assert_eq!(d(7).dual(), d(7));
    }
}
