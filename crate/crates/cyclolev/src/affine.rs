//! Integral affine weights by their Kac labels, reduction to the dominant
//! chamber by label-space reflections, and the type decomposition of the
//! stabilizer parabolic (the zero-labelled subdiagram).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_type::LieType;
use crate::orbit::format_type_multiset;
use crate::rootdata::root_data;

/// An integral affine weight, stored by its labels `<coroot_i, w>` over the
/// affine nodes 0..=n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineWeight {
    #[serde(rename = "type", with = "crate::weyl::lie_type_string")]
    pub lie_type: LieType,
    pub labels: Vec<i64>,
}

/// Pivot strategy for the reduction loop; the result is independent of the
/// choice (tested), the default is the lowest negative index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PivotRule {
    LowestIndex,
    HighestIndex,
}

impl AffineWeight {
    pub fn new(lie_type: LieType, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != lie_type.rank() + 1 {
            return Err(Error::Parse {
                what: "affine weight",
                input: format!("{} labels for {lie_type}", labels.len()),
            });
        }
        Ok(AffineWeight { lie_type, labels })
    }

    /// The level: sum of comark_i * label_i, invariant under the affine Weyl
    /// group.
    pub fn level(&self) -> i64 {
        let r = root_data(self.lie_type);
        r.comarks
            .iter()
            .zip(&self.labels)
            .map(|(c, l)| c * l)
            .sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.labels.iter().all(|&l| l >= 0)
    }

    /// Applies the simple reflection at node i in label space:
    /// `label_j -= A[j][i] * label_i`.
    pub fn reflect(&mut self, i: usize) {
        let r = root_data(self.lie_type);
        let li = self.labels[i];
        for (j, l) in self.labels.iter_mut().enumerate() {
            *l -= r.affine_cartan[j][i] * li;
        }
    }
}

/// The weight `m Lambda_0 + rho` in Kac labels: node 0 carries
/// `m - (dual Coxeter number) + 1`, every finite node carries 1.
pub fn initial_weight(t: LieType, m: i64) -> Result<AffineWeight> {
    let r = root_data(t);
    if m < 1 || m > r.dual_coxeter_number {
        return Err(Error::LevelOutOfRange(m));
    }
    let mut labels = vec![1i64; t.rank() + 1];
    labels[0] = m - r.dual_coxeter_number + 1;
    AffineWeight::new(t, labels)
}

/// Reduction to the dominant chamber: repeatedly reflect at a negative
/// label. Terminates because the level is positive. Returns the dominant
/// weight and the number of reflections applied; the level is asserted
/// invariant at every step.
pub fn make_dominant(w: &AffineWeight) -> Result<(AffineWeight, usize)> {
    make_dominant_with(w, PivotRule::LowestIndex)
}

pub fn make_dominant_with(w: &AffineWeight, rule: PivotRule) -> Result<(AffineWeight, usize)> {
    let mut cur = w.clone();
    let level = cur.level();
    if level < 1 {
        return Err(Error::LevelOutOfRange(level));
    }
    let mut steps = 0usize;
    const CAP: usize = 10_000_000;
    loop {
        let pivot = match rule {
            PivotRule::LowestIndex => cur.labels.iter().position(|&l| l < 0),
            PivotRule::HighestIndex => cur
                .labels
                .iter()
                .rposition(|&l| l < 0),
        };
        let Some(i) = pivot else {
            return Ok((cur, steps));
        };
        cur.reflect(i);
        debug_assert_eq!(cur.level(), level, "level must be preserved by reflections");
        steps += 1;
        if steps > CAP {
            return Err(Error::IterationCap);
        }
    }
}

/// Instrumented variant that checks the level after every reflection (used
/// by the acceptance suite for the level-invariant criterion).
pub fn make_dominant_checking_level(w: &AffineWeight) -> Result<(AffineWeight, usize)> {
    let mut cur = w.clone();
    let level = cur.level();
    if level < 1 {
        return Err(Error::LevelOutOfRange(level));
    }
    let mut steps = 0usize;
    while let Some(i) = cur.labels.iter().position(|&l| l < 0) {
        cur.reflect(i);
        if cur.level() != level {
            return Err(Error::IterationCap);
        }
        steps += 1;
        if steps > 10_000_000 {
            return Err(Error::IterationCap);
        }
    }
    Ok((cur, steps))
}

/// A dominant affine weight together with its zero-labelled subdiagram data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KacDiagram {
    pub weight: AffineWeight,
    /// Affine nodes with label zero.
    pub zero_nodes: Vec<usize>,
    /// Connected components of the zero subdiagram.
    pub components: Vec<Vec<usize>>,
    /// Simple type of each component.
    pub component_types: Vec<(char, usize)>,
}

impl KacDiagram {
    pub fn new(weight: AffineWeight) -> Result<Self> {
        if !weight.is_dominant() {
            return Err(Error::Parse {
                what: "Kac diagram",
                input: "weight is not dominant".into(),
            });
        }
        let zero_nodes: Vec<usize> = (0..weight.labels.len())
            .filter(|&i| weight.labels[i] == 0)
            .collect();
        let components = diagram_components(weight.lie_type, &zero_nodes);
        let component_types = components
            .iter()
            .map(|c| classify_component(weight.lie_type, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(KacDiagram {
            weight,
            zero_nodes,
            components,
            component_types,
        })
    }

    /// Normalised type multiset of the stabilizer parabolic (small-rank
    /// coincidences folded: D3 -> A3, D2 -> 2A1, B1/C1 -> A1).
    pub fn stabilizer_type(&self) -> Vec<(char, usize)> {
        let mut v: Vec<(char, usize)> = Vec::new();
        for &(f, r) in &self.component_types {
            match (f, r) {
                ('D', 2) => {
                    v.push(('A', 1));
                    v.push(('A', 1));
                }
                ('D', 3) => v.push(('A', 3)),
                ('B', 1) | ('C', 1) => v.push(('A', 1)),
                other => v.push(other),
            }
        }
        v.sort_unstable();
        v
    }

    pub fn stabilizer_type_string(&self) -> String {
        let types = self.stabilizer_type();
        if types.is_empty() {
            "1".to_string()
        } else {
            format_type_multiset(&types)
        }
    }

    /// `labels / W_m` rendering such as `1 1 1 0 1 0 1 / W_m = 3A1`.
    pub fn render(&self) -> String {
        let labels: Vec<String> = self.weight.labels.iter().map(|l| l.to_string()).collect();
        format!(
            "{} / W_m = {}",
            labels.join(" "),
            self.stabilizer_type_string()
        )
    }
}

/// The dominant representative of `m Lambda_0 + rho` as a Kac diagram.
pub fn xi_m(t: LieType, m: i64) -> Result<KacDiagram> {
    let (w, _) = make_dominant(&initial_weight(t, m)?)?;
    KacDiagram::new(w)
}

/// Connected components of the induced subdiagram on a node subset.
pub fn diagram_components(t: LieType, nodes: &[usize]) -> Vec<Vec<usize>> {
    let r = root_data(t);
    let mut remaining: Vec<usize> = nodes.to_vec();
    remaining.sort_unstable();
    let mut out = Vec::new();
    while let Some(&start) = remaining.first() {
        let mut comp = vec![start];
        remaining.retain(|&x| x != start);
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            let adj: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&y| r.affine_cartan[x][y] != 0)
                .collect();
            for y in adj {
                remaining.retain(|&z| z != y);
                comp.push(y);
                frontier.push(y);
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Classifies a connected subdiagram of the affine diagram into a simple
/// type, by its shape and bond multiplicities.
fn classify_component(t: LieType, comp: &[usize]) -> Result<(char, usize)> {
    let r = root_data(t);
    let n = comp.len();
    if n == 1 {
        return Ok(('A', 1));
    }
    let shape_err = || Error::Parse {
        what: "subdiagram type",
        input: format!("unrecognised shape on nodes {comp:?}"),
    };
    let bond = |i: usize, j: usize| r.affine_cartan[comp[i]][comp[j]];
    let degree: Vec<usize> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && bond(i, j) != 0).count())
        .collect();
    let multi_bond = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| bond(i, j) * bond(j, i) > 1);

    if let Some((i, j)) = multi_bond {
        // shapes with one multiple bond are paths; walk it from an end
        if degree.iter().any(|&d| d > 2) {
            return Err(shape_err());
        }
        if bond(i, j) * bond(j, i) == 3 {
            return Ok(('G', 2));
        }
        // <coroot_short, alpha_long> = -2 in our convention
        let short = if bond(i, j).abs() == 2 { i } else { j };
        let long = if short == i { j } else { i };
        // nodes reachable from the short end without crossing the double bond
        let mut side = vec![short];
        let mut frontier = vec![short];
        while let Some(x) = frontier.pop() {
            for y in 0..n {
                if y != long && !side.contains(&y) && bond(x, y) != 0 {
                    side.push(y);
                    frontier.push(y);
                }
            }
        }
        return match side.len() {
            1 => Ok(('B', n)),
            2 if n == 4 => Ok(('F', 4)),
            k if k == n - 1 => Ok(('C', n)),
            _ => Err(shape_err()),
        };
    }
    // simply-laced shapes
    match degree.iter().filter(|&&d| d >= 3).count() {
        0 => Ok(('A', n)),
        1 => {
            let center = (0..n).position(|i| degree[i] == 3).unwrap();
            let mut branch_lengths = Vec::new();
            for j in 0..n {
                if j != center && bond(center, j) != 0 {
                    let mut len = 1;
                    let (mut prev, mut cur) = (center, j);
                    while let Some(k) = (0..n).find(|&k| k != prev && k != cur && bond(cur, k) != 0)
                    {
                        prev = cur;
                        cur = k;
                        len += 1;
                    }
                    branch_lengths.push(len);
                }
            }
            branch_lengths.sort_unstable();
            match branch_lengths.as_slice() {
                [1, 1, _] => Ok(('D', n)),
                [1, 2, 2] => Ok(('E', 6)),
                [1, 2, 3] => Ok(('E', 7)),
                [1, 2, 4] => Ok(('E', 8)),
                _ => Err(shape_err()),
            }
        }
        _ => Err(shape_err()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, d, e};

    #[test]
    fn initial_labels() {
        let w = initial_weight(e(6), 12).unwrap();
        assert_eq!(w.labels, vec![1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(w.level(), 12);
        let w = initial_weight(d(5), 3).unwrap();
        assert_eq!(w.labels[0], 3 - 2 * 5 + 3);
        assert_eq!(w.level(), 3);
        assert!(initial_weight(d(5), 0).is_err());
        assert!(initial_weight(d(5), 9).is_err());
    }

    #[test]
    fn dominant_e6_m8() {
        let k = xi_m(e(6), 8).unwrap();
        assert_eq!(k.weight.labels, vec![1, 1, 1, 0, 1, 0, 1]);
        assert_eq!(k.stabilizer_type_string(), "2A1");
        assert_eq!(k.weight.level(), 8);
    }

    #[test]
    fn dominant_d_m1() {
        let k = xi_m(d(5), 1).unwrap();
        assert_eq!(k.weight.labels, vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(k.stabilizer_type_string(), "D5");
    }

    #[test]
    fn pivot_rule_independence_small() {
        for t in [a(4), d(5), e(6)] {
            let hv = root_data(t).dual_coxeter_number;
            for m in 1..=hv {
                let w = initial_weight(t, m).unwrap();
                let (lo, _) = make_dominant_with(&w, PivotRule::LowestIndex).unwrap();
                let (hi, _) = make_dominant_with(&w, PivotRule::HighestIndex).unwrap();
                assert_eq!(lo, hi, "pivot order at {t}, m={m}");
            }
        }
    }

    #[test]
    fn component_classification() {
        // E8, m=2: zero nodes form D8
        let k = xi_m(e(8), 2).unwrap();
        assert_eq!(k.weight.labels, vec![0, 1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(k.stabilizer_type_string(), "D8");
        // E8, m=4: D5+A3
        let k = xi_m(e(8), 4).unwrap();
        assert_eq!(k.stabilizer_type_string(), "D5+A3");
        // E6, m=3: 3A2
        let k = xi_m(e(6), 3).unwrap();
        assert_eq!(k.stabilizer_type_string(), "3A2");
        // A-type cycle minus nonzero labels
        let k = xi_m(a(4), 2).unwrap();
        assert_eq!(k.weight.level(), 2);
    }
}
