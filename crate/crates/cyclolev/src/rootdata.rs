//! Static root-system data in Bourbaki conventions.
//!
//! Finite nodes are numbered 1..=n, the affine node is 0. The Cartan matrix
//! convention is `C[i][j] = <coroot(i), root(j)>`, so simple reflections act
//! on root coordinates by `s_i(alpha_j) = alpha_j - C[i][j] alpha_i`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::lie_type::{Family, LieType};

/// Full static record for one simple type and its untwisted affine extension.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub lie_type: LieType,
    /// Finite Cartan matrix, `cartan[i][j] = <coroot(i+1), alpha_(j+1)>`.
    pub cartan: Vec<Vec<i64>>,
    /// Affine Cartan matrix indexed by nodes 0..=n.
    pub affine_cartan: Vec<Vec<i64>>,
    /// Coefficients of the highest root theta in the simple roots.
    pub highest_root: Vec<i64>,
    /// Coxeter number.
    pub coxeter_number: i64,
    /// Dual Coxeter number.
    pub dual_coxeter_number: i64,
    /// Degrees of the fundamental invariants, weakly increasing.
    pub degrees: Vec<i64>,
    /// Marks over affine nodes 0..=n (coefficients of the null root).
    pub marks: Vec<i64>,
    /// Comarks over affine nodes 0..=n (comark_0 = 1).
    pub comarks: Vec<i64>,
    /// Affine nodes conjugate to node 0 under diagram automorphisms.
    pub special_nodes: Vec<usize>,
    /// Regular numbers of the Weyl group.
    pub regular_numbers: Vec<i64>,
    /// Symmetrizer: smallest positive integers d with d_i C_ij symmetric.
    pub symmetrizer: Vec<i64>,
    /// All positive roots in simple-root coordinates.
    pub positive_roots: Vec<Vec<i64>>,
}

impl RootSystemData {
    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// All roots (positive and negative).
    pub fn all_roots(&self) -> Vec<Vec<i64>> {
        let mut out = self.positive_roots.clone();
        out.extend(
            self.positive_roots
                .iter()
                .map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()),
        );
        out
    }

    /// Pairing `<coweight, root>` for a coweight given by its values on the
    /// simple roots (weighted-Dynkin-style labels).
    pub fn pair_labels_root(labels: &[i64], root: &[i64]) -> i64 {
        labels.iter().zip(root).map(|(l, c)| l * c).sum()
    }

    /// Symmetrized Cartan matrix `B[i][j] = d_i C[i][j]`, proportional to the
    /// Gram matrix of the simple roots.
    pub fn sym_cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.symmetrizer[i] * self.cartan[i][j]).collect())
            .collect()
    }

    /// Adjacent affine node pairs (nonzero off-diagonal affine Cartan entries).
    pub fn affine_edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..=n {
            for j in (i + 1)..=n {
                if self.affine_cartan[i][j] != 0 {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

fn finite_cartan(t: LieType) -> Vec<Vec<i64>> {
    let n = t.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        // single bond between nodes i, j (1-based)
        c[i - 1][j - 1] = -1;
        c[j - 1][i - 1] = -1;
    };
    match t.family() {
        Family::A => {
            for i in 1..n {
                link(&mut c, i, i + 1);
            }
        }
        Family::B => {
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            // alpha_n short: <coroot(n), alpha_(n-1)> = -2
            c[n - 1][n - 2] = -2;
            c[n - 2][n - 1] = -1;
        }
        Family::C => {
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            // alpha_n long: <coroot(n-1), alpha_n> = -2
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Family::D => {
            for i in 1..n - 1 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, n - 2, n);
            c[n - 1][n - 2] = 0;
            c[n - 2][n - 1] = 0;
        }
        Family::E => {
            // chain 1-3-4-5-...-n, branch node 2 attached to 4
            link(&mut c, 1, 3);
            link(&mut c, 3, 4);
            link(&mut c, 2, 4);
            for i in 4..n {
                link(&mut c, i, i + 1);
            }
        }
        Family::F => {
            link(&mut c, 1, 2);
            link(&mut c, 3, 4);
            // alpha_2 long, alpha_3 short: the short row carries the -2
            c[1][2] = -1;
            c[2][1] = -2;
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            c[0][1] = -3;
            c[1][0] = -1;
        }
    }
    c
}

fn highest_root(t: LieType) -> Vec<i64> {
    let n = t.rank();
    match t.family() {
        Family::A => vec![1; n],
        Family::B => {
            let mut v = vec![2; n];
            v[0] = 1;
            v
        }
        Family::C => {
            let mut v = vec![2; n];
            v[n - 1] = 1;
            v
        }
        Family::D => {
            let mut v = vec![2; n];
            v[0] = 1;
            v[n - 2] = 1;
            v[n - 1] = 1;
            v
        }
        Family::E => match n {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
            _ => unreachable!(),
        },
        Family::F => vec![2, 3, 4, 2],
        Family::G => vec![3, 2],
    }
}

fn degrees(t: LieType) -> Vec<i64> {
    let n = t.rank() as i64;
    match t.family() {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => {
            let mut v: Vec<i64> = (1..n).map(|i| 2 * i).collect();
            v.push(n);
            v.sort_unstable();
            v
        }
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            8 => vec![2, 8, 12, 14, 18, 20, 24, 30],
            _ => unreachable!(),
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    }
}

fn symmetrizer(t: LieType) -> Vec<i64> {
    let n = t.rank();
    match t.family() {
        Family::A | Family::D | Family::E => vec![1; n],
        Family::B => {
            // long roots get 2, the short last root gets 1
            let mut v = vec![2; n];
            v[n - 1] = 1;
            v
        }
        Family::C => {
            let mut v = vec![1; n];
            v[n - 1] = 2;
            v
        }
        Family::F => vec![2, 2, 1, 1],
        Family::G => vec![1, 3],
    }
}

fn regular_numbers(t: LieType) -> Vec<i64> {
    let n = t.rank() as i64;
    let divisors = |m: i64| -> Vec<i64> { (1..=m).filter(|d| m % d == 0).collect() };
    let mut v: Vec<i64> = match t.family() {
        Family::A => {
            let mut v = divisors(n);
            v.extend(divisors(n + 1));
            v
        }
        Family::B | Family::C => divisors(2 * n),
        Family::D => {
            let mut v = divisors(2 * n - 2);
            v.extend(divisors(n));
            v
        }
        Family::E => match n {
            6 => vec![2, 3, 4, 6, 8, 9, 12],
            7 => vec![2, 3, 6, 7, 9, 14, 18],
            8 => vec![2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30],
            _ => unreachable!(),
        },
        Family::F => vec![2, 3, 4, 6, 8, 12],
        Family::G => vec![2, 3, 6],
    };
    v.sort_unstable();
    v.dedup();
    v
}

/// Enumerates positive roots by closing the simple roots under root addition,
/// using the standard `p`/`q` string criterion through the Cartan pairing.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut r = vec![0i64; n];
        r[i] = 1;
        roots.push(r);
    }
    // coroot pairing of a root in simple coordinates: <coroot(i), beta>
    let pair = |i: usize, beta: &[i64]| -> i64 {
        (0..n).map(|j| cartan[i][j] * beta[j]).sum()
    };
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                // beta + alpha_i is a root iff q - p < -<coroot_i, beta> is ... use
                // the reflection-string fact: it suffices to check p - <..> > 0 where
                // p = max k with beta - k alpha_i a root. Cheap at these ranks: test
                // membership by building the candidate and validating via strings.
                let mut cand = beta.clone();
                cand[i] += 1;
                if roots.contains(&cand) || next.contains(&cand) {
                    continue;
                }
                // p: how far the alpha_i-string extends downward from beta
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    let is_simple_neg = down.iter().all(|&c| c == 0);
                    if is_simple_neg {
                        break;
                    }
                    if down.iter().any(|&c| c < 0) || !roots.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pair(i, beta) > 0 {
                    next.push(cand);
                }
            }
        }
        roots.extend(next.iter().cloned());
        frontier = next;
    }
    roots.sort();
    roots.dedup();
    roots
}

fn build(t: LieType) -> RootSystemData {
    let n = t.rank();
    let cartan = finite_cartan(t);
    let theta = highest_root(t);
    let degs = degrees(t);
    let sym = symmetrizer(t);
    let h = *degs.iter().max().unwrap();

    // marks: 1 on node 0, theta coefficients elsewhere
    let mut marks = vec![1i64];
    marks.extend(theta.iter().copied());

    // comarks: the coroot-side coefficients; comark_i = mark_i * d_i / d_max
    // normalised so the long roots carry d = d_max. With our symmetrizers the
    // long roots have the maximal d, so comark_i = theta_i * d_i / d_long.
    let d_long = *sym.iter().max().unwrap();
    let mut comarks = vec![1i64];
    for i in 0..n {
        let num = theta[i] * sym[i];
        debug_assert_eq!(num % d_long, 0);
        comarks.push(num / d_long);
    }
    let hv = 1 + comarks[1..].iter().sum::<i64>();

    // affine Cartan from the finite one plus theta:
    //   C[0][j] = -sum_i comark_i C[i][j],  C[i][0] = -sum_j theta_j C[i][j]
    let mut aff = vec![vec![0i64; n + 1]; n + 1];
    aff[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            aff[i + 1][j + 1] = cartan[i][j];
        }
    }
    for j in 0..n {
        let v: i64 = (0..n).map(|i| comarks[i + 1] * cartan[i][j]).sum();
        aff[0][j + 1] = -v;
    }
    for i in 0..n {
        let v: i64 = (0..n).map(|j| theta[j] * cartan[i][j]).sum();
        aff[i + 1][0] = -v;
    }

    let special_nodes: Vec<usize> = (0..=n).filter(|&i| marks[i] == 1).collect();

    RootSystemData {
        lie_type: t,
        positive_roots: positive_roots(&cartan),
        cartan,
        affine_cartan: aff,
        highest_root: theta,
        coxeter_number: h,
        dual_coxeter_number: hv,
        degrees: degs,
        marks,
        comarks,
        special_nodes,
        regular_numbers: regular_numbers(t),
        symmetrizer: sym,
    }
}

/// Returns the static record for a type. Results are cached for the lifetime
/// of the process; the data is immutable and safe to share across threads.
pub fn root_data(t: LieType) -> &'static RootSystemData {
    static CACHE: OnceLock<std::sync::Mutex<HashMap<LieType, &'static RootSystemData>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(r) = guard.get(&t) {
        return r;
    }
    let leaked: &'static RootSystemData = Box::leak(Box::new(build(t)));
    guard.insert(t, leaked);
    leaked
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie_type::{a, b, c, d, e, f4, g2};

    fn all_small_types() -> Vec<LieType> {
        let mut v = Vec::new();
        for n in 1..=10 {
            v.push(a(n));
        }
        for n in 2..=8 {
            v.push(b(n));
            v.push(c(n));
        }
        for n in 4..=9 {
            v.push(d(n));
        }
        v.extend([e(6), e(7), e(8), f4(), g2()]);
        v
    }

    #[test]
    fn degrees_consistent_with_positive_roots_and_coxeter() {
        for t in all_small_types() {
            let r = root_data(t);
            let sum: i64 = r.degrees.iter().map(|d| d - 1).sum();
            assert_eq!(
                sum as usize,
                r.num_positive_roots(),
                "positive root count for {t}"
            );
            assert_eq!(r.coxeter_number, *r.degrees.iter().max().unwrap());
            // h = 1 + height of the highest root
            let height: i64 = r.highest_root.iter().sum();
            assert_eq!(r.coxeter_number, 1 + height, "Coxeter number of {t}");
        }
    }

    #[test]
    fn degrees_product_is_weyl_group_order() {
        // |W| known in closed form per family.
        let fact = |k: usize| -> i64 { (1..=k as i64).product() };
        for n in 1..=8 {
            let r = root_data(a(n));
            assert_eq!(r.degrees.iter().product::<i64>(), fact(n + 1));
        }
        for n in 2..=7 {
            let r = root_data(b(n));
            assert_eq!(r.degrees.iter().product::<i64>(), (1 << n) * fact(n));
            let r = root_data(c(n));
            assert_eq!(r.degrees.iter().product::<i64>(), (1 << n) * fact(n));
        }
        for n in 4..=8 {
            let r = root_data(d(n));
            assert_eq!(r.degrees.iter().product::<i64>(), (1 << (n - 1)) * fact(n));
        }
        assert_eq!(root_data(g2()).degrees.iter().product::<i64>(), 12);
        assert_eq!(root_data(f4()).degrees.iter().product::<i64>(), 1152);
        assert_eq!(root_data(e(6)).degrees.iter().product::<i64>(), 51840);
        assert_eq!(root_data(e(7)).degrees.iter().product::<i64>(), 2903040);
        assert_eq!(root_data(e(8)).degrees.iter().product::<i64>(), 696729600);
    }

    #[test]
    fn null_root_in_kernel_of_affine_cartan() {
        for t in all_small_types() {
            let r = root_data(t);
            let n = t.rank();
            for i in 0..=n {
                let v: i64 = (0..=n).map(|j| r.affine_cartan[i][j] * r.marks[j]).sum();
                assert_eq!(v, 0, "marks not in kernel for {t}, row {i}");
            }
            for j in 0..=n {
                let v: i64 = (0..=n).map(|i| r.comarks[i] * r.affine_cartan[i][j]).sum();
                assert_eq!(v, 0, "comarks not in left kernel for {t}, col {j}");
            }
        }
    }

    #[test]
    fn dual_coxeter_numbers() {
        assert_eq!(root_data(a(3)).dual_coxeter_number, 4);
        assert_eq!(root_data(b(3)).dual_coxeter_number, 5);
        assert_eq!(root_data(c(3)).dual_coxeter_number, 4);
        assert_eq!(root_data(d(4)).dual_coxeter_number, 6);
        assert_eq!(root_data(e(6)).dual_coxeter_number, 12);
        assert_eq!(root_data(e(7)).dual_coxeter_number, 18);
        assert_eq!(root_data(e(8)).dual_coxeter_number, 30);
        assert_eq!(root_data(f4()).dual_coxeter_number, 9);
        assert_eq!(root_data(g2()).dual_coxeter_number, 4);
        // simply-laced: h = hv and marks = comarks
        for t in [a(4), d(5), e(6), e(7), e(8)] {
            let r = root_data(t);
            assert_eq!(r.coxeter_number, r.dual_coxeter_number);
            assert_eq!(r.marks, r.comarks);
        }
    }

    #[test]
    fn a3_basics() {
        let r = root_data(a(3));
        assert_eq!(r.coxeter_number, 4);
        assert_eq!(r.degrees, vec![2, 3, 4]);
        assert_eq!(r.num_positive_roots(), 6);
    }

    #[test]
    fn e8_regular_numbers() {
        let r = root_data(e(8));
        assert_eq!(r.regular_numbers, vec![2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30]);
        assert!(r.regular_numbers.contains(&30));
    }

    #[test]
    fn special_nodes_are_mark_one_nodes() {
        assert_eq!(root_data(a(3)).special_nodes, vec![0, 1, 2, 3]);
        assert_eq!(root_data(b(4)).special_nodes, vec![0, 1]);
        assert_eq!(root_data(c(4)).special_nodes, vec![0, 4]);
        assert_eq!(root_data(d(6)).special_nodes, vec![0, 1, 5, 6]);
        assert_eq!(root_data(e(6)).special_nodes, vec![0, 1, 6]);
        assert_eq!(root_data(e(7)).special_nodes, vec![0, 7]);
        assert_eq!(root_data(e(8)).special_nodes, vec![0]);
        assert_eq!(root_data(f4()).special_nodes, vec![0]);
        assert_eq!(root_data(g2()).special_nodes, vec![0]);
    }

    #[test]
    fn symmetrized_cartan_is_symmetric() {
        for t in all_small_types() {
            let r = root_data(t);
            let b = r.sym_cartan();
            for i in 0..t.rank() {
                for j in 0..t.rank() {
                    assert_eq!(b[i][j], b[j][i], "symmetry at {t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn highest_root_is_highest() {
        for t in all_small_types() {
            let r = root_data(t);
            let theta = &r.highest_root;
            assert!(r.positive_roots.contains(theta), "theta is a root in {t}");
            let height: i64 = theta.iter().sum();
            for root in &r.positive_roots {
                assert!(root.iter().sum::<i64>() <= height);
            }
        }
    }

    #[test]
    fn dual_coxeter_identity_from_root_data() {
        // hv = 1 + <rho, theta_coroot> = 1 + sum of finite comarks.
        for t in all_small_types() {
            let r = root_data(t);
            assert_eq!(
                r.dual_coxeter_number,
                1 + r.comarks[1..].iter().sum::<i64>()
            );
        }
    }
}
