//! Dense integer polynomials, cyclotomic polynomials, and exact cyclotomic
//! factorization of characteristic polynomials of Weyl group elements.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Integer polynomial, constant term first. The zero polynomial has empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        IntPolynomial { coeffs: vec![0, 1] }
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![0i128; n + 1];
        c[0] = -1;
        c[n] = 1;
        IntPolynomial::new(c)
    }

    /// `x^n + 1`
    pub fn x_pow_plus_one(n: usize) -> Self {
        let mut c = vec![0i128; n + 1];
        c[0] = 1;
        c[n] = 1;
        IntPolynomial::new(c)
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_unit_constant(&self) -> bool {
        self.coeffs.len() == 1 && (self.coeffs[0] == 1 || self.coeffs[0] == -1)
    }

    pub fn leading(&self) -> i128 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPolynomial::new(c)
    }

    /// Exact division; returns None when the remainder is nonzero or the
    /// divisor's leading coefficient does not divide exactly along the way.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Option<IntPolynomial> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dlead = divisor.leading();
        let dd = divisor.degree();
        let mut quot = vec![0i128; self.degree() - dd + 1];
        for k in (0..quot.len()).rev() {
            let num = rem[k + dd];
            if num % dlead != 0 {
                return None;
            }
            let q = num / dlead;
            quot[k] = q;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= q * c;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(IntPolynomial::new(quot))
    }

    pub fn evaluate(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            let term = match (i, mag) {
                (0, m) => format!("{m}"),
                (1, 1) => "x".to_string(),
                (1, m) => format!("{m}x"),
                (d, 1) => format!("x^{d}"),
                (d, m) => format!("{m}x^{d}"),
            };
            write!(f, "{}{}{}", if first { "" } else { " " }, sign, term)?;
            if !first {
                // separators already written via sign placement
            }
            first = false;
        }
        Ok(())
    }
}

/// The n-th cyclotomic polynomial, computed by exact division of `x^n - 1`
/// by the lower cyclotomics. Cached per process.
pub fn cyclotomic(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    static CACHE: OnceLock<Mutex<HashMap<usize, IntPolynomial>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = IntPolynomial::x_pow_minus_one(n);
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic(d);
            p = p.div_exact(&phi_d).expect("cyclotomic division is exact");
        }
    }
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Candidate cyclotomic indices `d` with `phi(d) <= deg`, largest first.
/// `phi(d) >= sqrt(d/2)` bounds the search.
fn candidate_indices(deg: usize) -> Vec<usize> {
    let bound = 2 * deg * deg + 2;
    let mut v: Vec<usize> = (1..=bound).filter(|&d| euler_phi(d) <= deg).collect();
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// Factors a (up to sign monic) integer polynomial into cyclotomics, returned
/// as the sorted multiset of indices `d` (meaning `Phi_d`). Errors when a
/// non-cyclotomic factor remains.
pub fn cyclotomic_factorization(p: &IntPolynomial) -> Result<Vec<usize>> {
    if p.is_zero() {
        return Err(Error::NonCyclotomicFactor(0));
    }
    let mut rem = p.clone();
    let mut out = Vec::new();
    for d in candidate_indices(p.degree()) {
        let phi = cyclotomic(d);
        while rem.degree() >= phi.degree() && !rem.is_unit_constant() {
            match rem.div_exact(&phi) {
                Some(q) => {
                    out.push(d);
                    rem = q;
                }
                None => break,
            }
        }
        if rem.is_unit_constant() {
            break;
        }
    }
    if !rem.is_unit_constant() {
        return Err(Error::NonCyclotomicFactor(rem.degree()));
    }
    out.sort_unstable();
    Ok(out)
}

/// Largest `d` with `Phi_d` dividing `p`, without producing the full
/// factorization: indices are tried in decreasing order.
pub fn max_cyclotomic_index(p: &IntPolynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::NonCyclotomicFactor(0));
    }
    for d in candidate_indices(p.degree()) {
        if p.div_exact(&cyclotomic(d)).is_some() {
            return Ok(d);
        }
    }
    Err(Error::NonCyclotomicFactor(p.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPolynomial::new(vec![-1, 1]));
        assert_eq!(cyclotomic(2), IntPolynomial::new(vec![1, 1]));
        assert_eq!(cyclotomic(3), IntPolynomial::new(vec![1, 1, 1]));
        assert_eq!(cyclotomic(4), IntPolynomial::new(vec![1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPolynomial::new(vec![1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPolynomial::new(vec![1, 0, -1, 0, 1]));
        // phi(105) has coefficient -2; exercise a nontrivial one
        assert_eq!(cyclotomic(105).degree(), euler_phi(105));
    }

    #[test]
    fn product_of_cyclotomics_is_x_n_minus_one() {
        for n in 1..=30 {
            let mut prod = IntPolynomial::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic(d));
                }
            }
            assert_eq!(prod, IntPolynomial::x_pow_minus_one(n));
        }
    }

    #[test]
    fn factorization_examples() {
        // x^3 + x^2 + x + 1 = Phi_2 Phi_4
        let p = IntPolynomial::new(vec![1, 1, 1, 1]);
        assert_eq!(cyclotomic_factorization(&p).unwrap(), vec![2, 4]);
        // (x-1)^3
        let q = cyclotomic(1).mul(&cyclotomic(1)).mul(&cyclotomic(1));
        assert_eq!(cyclotomic_factorization(&q).unwrap(), vec![1, 1, 1]);
        // Phi_3
        assert_eq!(
            cyclotomic_factorization(&IntPolynomial::new(vec![1, 1, 1])).unwrap(),
            vec![3]
        );
        assert_eq!(max_cyclotomic_index(&p).unwrap(), 4);
    }

    #[test]
    fn rejects_non_cyclotomic() {
        // x^2 - 2 is irreducible non-cyclotomic
        let p = IntPolynomial::new(vec![-2, 0, 1]);
        assert!(cyclotomic_factorization(&p).is_err());
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(30), 8);
    }
}
