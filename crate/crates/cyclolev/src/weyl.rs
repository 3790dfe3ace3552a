//! Weyl group conjugacy classes for classical types (cycle-type data),
//! reflection-representation characteristic polynomials, exact cyclotomic
//! factorization, the cyclotomic level of a class, and regular classes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lie_type::{Family, LieType};
use crate::partition::{partitions_of, Partition};
use crate::poly::{cyclotomic, max_cyclotomic_index, IntPolynomial};
use crate::rootdata::root_data;

/// Branch marker for the split classes of even Weyl groups of type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SplitBranch {
    I,
    II,
}

/// A conjugacy class in a classical Weyl group, given by cycle-type data:
/// type A uses one partition of n+1; types B/C/D use a pair (positive cycle
/// type, negative cycle type) with |pos| + |neg| = n. In type D the number of
/// negative cycles is even, and classes with no negative cycles and all
/// positive cycles even split into two; the two branches share their
/// characteristic polynomial, so they are carried as a marker only.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeylClass {
    #[serde(rename = "type", with = "crate::weyl::lie_type_string")]
    pub lie_type: LieType,
    pub pos: Partition,
    #[serde(default, skip_serializing_if = "Partition::is_empty")]
    pub neg: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub branch: Option<SplitBranch>,
}

pub(crate) mod lie_type_string {
    use super::LieType;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(t: &LieType, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&t.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LieType, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl WeylClass {
    pub fn type_a(lie_type: LieType, cycles: Partition) -> Result<Self> {
        if lie_type.family() != Family::A {
            return Err(Error::InvalidClass(format!(
                "type_a constructor used with {lie_type}"
            )));
        }
        if cycles.total() != lie_type.rank() + 1 {
            return Err(Error::InvalidClass(format!(
                "cycle type {cycles} is not a partition of {}",
                lie_type.rank() + 1
            )));
        }
        Ok(WeylClass {
            lie_type,
            pos: cycles,
            neg: Partition::empty(),
            branch: None,
        })
    }

    pub fn signed(lie_type: LieType, pos: Partition, neg: Partition) -> Result<Self> {
        Self::signed_with_branch(lie_type, pos, neg, None)
    }

    pub fn signed_with_branch(
        lie_type: LieType,
        pos: Partition,
        neg: Partition,
        branch: Option<SplitBranch>,
    ) -> Result<Self> {
        match lie_type.family() {
            Family::B | Family::C | Family::D => {}
            _ => {
                return Err(Error::InvalidClass(format!(
                    "signed constructor used with {lie_type}"
                )))
            }
        }
        if pos.total() + neg.total() != lie_type.rank() {
            return Err(Error::InvalidClass(format!(
                "|{pos}| + |{neg}| != {}",
                lie_type.rank()
            )));
        }
        if lie_type.family() == Family::D && neg.len() % 2 != 0 {
            return Err(Error::InvalidClass(format!(
                "type D requires an even number of negative cycles, got {neg}"
            )));
        }
        let splits = lie_type.family() == Family::D
            && neg.is_empty()
            && pos.parts().iter().all(|p| p % 2 == 0);
        if branch.is_some() && !splits {
            return Err(Error::InvalidClass(
                "branch marker on a non-split class".into(),
            ));
        }
        Ok(WeylClass {
            lie_type,
            pos,
            neg,
            branch,
        })
    }

    pub fn identity(lie_type: LieType) -> Self {
        let n = lie_type.rank();
        match lie_type.family() {
            Family::A => WeylClass::type_a(lie_type, Partition::new(vec![1; n + 1])).unwrap(),
            _ => WeylClass::signed(lie_type, Partition::new(vec![1; n]), Partition::empty())
                .unwrap(),
        }
    }

    /// Characteristic polynomial on the reflection representation:
    /// type A_n: prod (x^{lambda_i} - 1) / (x - 1), degree n;
    /// types B/C/D: prod (x^{lambda_i} - 1) * prod (x^{mu_j} + 1), degree n.
    pub fn charpoly(&self) -> IntPolynomial {
        let mut p = IntPolynomial::one();
        for &l in self.pos.parts() {
            p = p.mul(&IntPolynomial::x_pow_minus_one(l));
        }
        for &m in self.neg.parts() {
            p = p.mul(&IntPolynomial::x_pow_plus_one(m));
        }
        if self.lie_type.family() == Family::A {
            p = p
                .div_exact(&IntPolynomial::new(vec![-1, 1]))
                .expect("(x-1) divides the type A product");
        }
        p
    }

    /// The largest m with Phi_m dividing the characteristic polynomial.
    pub fn cyclotomic_level(&self) -> i64 {
        max_cyclotomic_index(&self.charpoly()).expect("Weyl charpoly is a product of cyclotomics")
            as i64
    }

    pub fn element_order(&self) -> usize {
        let mut ord = 1usize;
        for &l in self.pos.parts() {
            ord = lcm(ord, l);
        }
        for &m in self.neg.parts() {
            ord = lcm(ord, 2 * m);
        }
        ord
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All conjugacy classes of the Weyl group of a classical type, including
/// both branches of split type-D classes.
pub fn list_classes(t: LieType) -> Result<Vec<WeylClass>> {
    let n = t.rank();
    let bound_ok = match t.family() {
        Family::A => n <= 10,
        Family::B | Family::C | Family::D => n <= 8,
        _ => {
            return Err(Error::Unsupported(
                t.to_string(),
                "class enumeration is classical-only",
            ))
        }
    };
    if !bound_ok {
        return Err(Error::RankBound(format!("{t} exceeds the enumeration bound")));
    }
    let mut out = Vec::new();
    match t.family() {
        Family::A => {
            for p in partitions_of(n + 1) {
                out.push(WeylClass::type_a(t, p)?);
            }
        }
        Family::B | Family::C => {
            for k in 0..=n {
                for pos in partitions_of(n - k) {
                    for neg in partitions_of(k) {
                        out.push(WeylClass::signed(t, pos.clone(), neg)?);
                    }
                }
            }
        }
        Family::D => {
            for k in 0..=n {
                for pos in partitions_of(n - k) {
                    for neg in partitions_of(k) {
                        if neg.len() % 2 != 0 {
                            continue;
                        }
                        let splits =
                            neg.is_empty() && pos.parts().iter().all(|p| p % 2 == 0);
                        if splits {
                            out.push(WeylClass::signed_with_branch(
                                t,
                                pos.clone(),
                                neg.clone(),
                                Some(SplitBranch::I),
                            )?);
                            out.push(WeylClass::signed_with_branch(
                                t,
                                pos.clone(),
                                neg,
                                Some(SplitBranch::II),
                            )?);
                        } else {
                            out.push(WeylClass::signed(t, pos.clone(), neg)?);
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(out)
}

/// Matrix of the simple reflection s_i (1-based) on root coordinates.
fn reflection_matrix(t: LieType, i: usize) -> Vec<Vec<i64>> {
    let r = root_data(t);
    let n = t.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = 1;
    }
    for j in 0..n {
        m[i - 1][j] -= r.cartan[i - 1][j];
    }
    m
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

/// Product of simple reflections for a word of 1-based indices, acting on
/// root coordinates.
pub fn word_matrix(t: LieType, word: &[usize]) -> Result<Vec<Vec<i64>>> {
    let n = t.rank();
    let mut m = vec![vec![0i64; n]; n];
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = 1;
    }
    for &i in word {
        if i == 0 || i > n {
            return Err(Error::BadReflectionIndex(i, n));
        }
        m = mat_mul(&m, &reflection_matrix(t, i));
    }
    Ok(m)
}

/// Exact characteristic polynomial of an integer matrix via the
/// Faddeev–LeVerrier recurrence (all divisions are exact).
pub fn charpoly_of_matrix(m: &[Vec<i64>]) -> IntPolynomial {
    let n = m.len();
    let a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    // M_0 = I, c_{n-k} from traces
    let mut mk: Vec<Vec<i128>> = (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect();
    let mul = |x: &Vec<Vec<i128>>, y: &Vec<Vec<i128>>| -> Vec<Vec<i128>> {
        let mut c = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if x[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    c[i][j] += x[i][k] * y[k][j];
                }
            }
        }
        c
    };
    for k in 1..=n {
        let am = mul(&a, &mk);
        let tr: i128 = (0..n).map(|i| am[i][i]).sum();
        let c = -tr / (k as i128);
        debug_assert_eq!(-tr % (k as i128), 0);
        coeffs[n - k] = c;
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += c;
        }
    }
    IntPolynomial::new(coeffs)
}

/// Characteristic polynomial of a reflection word on the reflection
/// representation; exact integer output.
pub fn charpoly_of_word(t: LieType, word: &[usize]) -> Result<IntPolynomial> {
    Ok(charpoly_of_matrix(&word_matrix(t, word)?))
}

/// Cyclotomic level of a reflection word.
pub fn cyclotomic_level_of_word(t: LieType, word: &[usize]) -> Result<i64> {
    Ok(max_cyclotomic_index(&charpoly_of_word(t, word)?)? as i64)
}

/// Characteristic polynomial of the regular class of order m, assembled from
/// the eigenvalues zeta_m^{d_i - 1}: each eigenvalue is a primitive root of
/// unity of order m / gcd(m, d_i - 1), and the counts per order must fill
/// whole cyclotomic polynomials.
pub fn regular_class_charpoly(t: LieType, m: i64) -> Result<IntPolynomial> {
    let r = root_data(t);
    if !r.regular_numbers.contains(&m) {
        return Err(Error::Unsupported(t.to_string(), "not a regular number"));
    }
    let m = m as usize;
    let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
    for &d in &r.degrees {
        let e = (d - 1).rem_euclid(m as i64) as usize;
        let order = if e == 0 { 1 } else { m / gcd(m, e) };
        *counts.entry(order).or_insert(0) += 1;
    }
    let mut p = IntPolynomial::one();
    for (order, count) in counts {
        let phi = crate::poly::euler_phi(order);
        if count % phi != 0 {
            return Err(Error::EigenvalueGrouping(count, order));
        }
        for _ in 0..count / phi {
            p = p.mul(&cyclotomic(order));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, b, c, d, e, f4, g2};
    use crate::poly::cyclotomic_factorization;
    use crate::ptn;

    #[test]
    fn charpoly_examples() {
        // A3 class (4): x^3 + x^2 + x + 1
        let cl = WeylClass::type_a(a(3), ptn![4]).unwrap();
        assert_eq!(cl.charpoly(), IntPolynomial::new(vec![1, 1, 1, 1]));
        assert_eq!(cl.cyclotomic_level(), 4);
        // B2 negative 2-cycle: x^2 + 1
        let cl = WeylClass::signed(b(2), ptn![], ptn![2]).unwrap();
        assert_eq!(cl.charpoly(), IntPolynomial::new(vec![1, 0, 1]));
        assert_eq!(cl.cyclotomic_level(), 4);
        // identity: (x-1)^n
        let cl = WeylClass::identity(b(3));
        assert_eq!(
            cyclotomic_factorization(&cl.charpoly()).unwrap(),
            vec![1, 1, 1]
        );
        assert_eq!(cl.cyclotomic_level(), 1);
    }

    #[test]
    fn word_charpolys() {
        // empty word: (x-1)^n
        assert_eq!(
            charpoly_of_word(d(4), &[]).unwrap(),
            cyclotomic(1).mul(&cyclotomic(1)).mul(&cyclotomic(1)).mul(&cyclotomic(1))
        );
        // Coxeter word of A2: x^2 + x + 1
        assert_eq!(
            charpoly_of_word(a(2), &[1, 2]).unwrap(),
            IntPolynomial::new(vec![1, 1, 1])
        );
        // Coxeter word of E8: top factor Phi_30
        let word: Vec<usize> = (1..=8).collect();
        assert_eq!(cyclotomic_level_of_word(e(8), &word).unwrap(), 30);
        assert!(charpoly_of_word(e(8), &[9]).is_err());
    }

    #[test]
    fn coxeter_words_have_coxeter_order_level() {
        for t in [a(4), b(3), c(4), d(5), e(6), e(7), f4(), g2()] {
            let word: Vec<usize> = (1..=t.rank()).collect();
            let lvl = cyclotomic_level_of_word(t, &word).unwrap();
            assert_eq!(lvl, root_data(t).coxeter_number, "Coxeter level of {t}");
        }
    }

    #[test]
    fn class_counts() {
        assert_eq!(list_classes(a(2)).unwrap().len(), 3);
        assert_eq!(list_classes(b(2)).unwrap().len(), 5);
        // D4: 11 unsplit pairs + 2 extra split branches
        assert_eq!(list_classes(d(4)).unwrap().len(), 13);
    }

    #[test]
    fn regular_class_levels() {
        // A2, m=3: degrees (2,3) give zeta_3, zeta_3^2, i.e. Phi_3
        assert_eq!(
            regular_class_charpoly(a(2), 3).unwrap(),
            IntPolynomial::new(vec![1, 1, 1])
        );
        // every regular number m yields level exactly m
        for t in [a(5), b(4), c(4), d(5), e(6), e(7), e(8), f4(), g2()] {
            for &m in &root_data(t).regular_numbers {
                let p = regular_class_charpoly(t, m).unwrap();
                assert_eq!(
                    max_cyclotomic_index(&p).unwrap() as i64,
                    m,
                    "regular class level for {t}, m={m}"
                );
            }
        }
        // m = 2 regular with -1 in W: charpoly (x+1)^n
        let p = regular_class_charpoly(b(3), 2).unwrap();
        assert_eq!(cyclotomic_factorization(&p).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn element_orders() {
        assert_eq!(WeylClass::identity(b(4)).element_order(), 1);
        let cl = WeylClass::signed(b(2), ptn![], ptn![2]).unwrap();
        assert_eq!(cl.element_order(), 4);
        let cl = WeylClass::type_a(a(4), ptn![3, 2]).unwrap();
        assert_eq!(cl.element_order(), 6);
    }

    #[test]
    fn serde_form() {
        let cl = WeylClass::signed(b(3), ptn![2], ptn![1]).unwrap();
        let s = serde_json::to_string(&cl).unwrap();
        assert_eq!(s, r#"{"type":"B3","pos":[2],"neg":[1]}"#);
        let back: WeylClass = serde_json::from_str(&s).unwrap();
        assert_eq!(back, cl);
    }
}
