//! k-th power residues, the matrices `[(α_i + d·α_j)^n]` built from them, and
//! exact determinant/Pfaffian evaluation over F_p and over the integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{precondition, Error, Result};
use crate::field::PrimeModulus;

/// Largest dimension accepted by [`det_exact`].
pub const EXACT_DIM_LIMIT: usize = 12;

/// The `(p-1)/k` distinct k-th power residues modulo p.
///
/// The canonical order is ascending; [`ResidueList::reordered`] produces any
/// other order of the same set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueList {
    p: PrimeModulus,
    k: u64,
    alphas: Vec<u64>,
}

impl ResidueList {
    pub fn modulus(&self) -> &PrimeModulus {
        &self.p
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn alphas(&self) -> &[u64] {
        &self.alphas
    }

    /// `(p-1)/k`.
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// The same residues in the order given by `order`, which must be a
    /// permutation of the current list.
    pub fn reordered(&self, order: Vec<u64>) -> Result<Self> {
        let mut sorted = order.clone();
        sorted.sort_unstable();
        let mut canonical = self.alphas.clone();
        canonical.sort_unstable();
        if sorted != canonical {
            return precondition("reordering is not a permutation of the residues");
        }
        Ok(Self {
            p: self.p.clone(),
            k: self.k,
            alphas: order,
        })
    }
}

/// Ascending list of `{x^k mod p : 1 <= x < p}`.
pub fn kth_residues(p: &PrimeModulus, k: u64) -> Result<ResidueList> {
    let pv = p.p();
    if k < 2 || k > (pv - 1) / 2 || (pv - 1) % k != 0 {
        return Err(Error::InvalidOrder { k, p: pv });
    }
    let n = (pv - 1) / k;
    let step = p.pow(p.generator(), k);
    let mut alphas = Vec::with_capacity(n as usize);
    let mut x = 1;
    for _ in 0..n {
        alphas.push(x);
        x = p.mul(x, step);
    }
    alphas.sort_unstable();
    Ok(ResidueList {
        p: p.clone(),
        k,
        alphas,
    })
}

/// A dense square matrix over F_p, entries reduced to `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModMatrix {
    p: u64,
    dim: usize,
    entries: Vec<u64>,
}

impl ModMatrix {
    /// Builds a matrix from row-major entries, reducing each one mod p.
    pub fn new(p: u64, dim: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::LengthMismatch {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let entries = entries.into_iter().map(|e| e % p).collect();
        Ok(Self { p, dim, entries })
    }

    pub fn from_fn(p: u64, dim: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j) % p);
            }
        }
        Self { p, dim, entries }
    }

    pub fn identity(p: u64, dim: usize) -> Self {
        Self::from_fn(p, dim, |i, j| u64::from(i == j))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.dim.max(1))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let p = self.p;
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| (self.get(i, j) + self.get(j, i)) % p == 0)
        })
    }
}

impl AsRef<ModMatrix> for ModMatrix {
    fn as_ref(&self) -> &ModMatrix {
        self
    }
}

/// `[(α_i + d·α_j)^n mod p]` over a residue list.
#[derive(Debug, Clone)]
pub struct ResidueMatrix {
    source: ResidueList,
    n: u64,
    d: i64,
    matrix: ModMatrix,
}

impl ResidueMatrix {
    pub fn source(&self) -> &ResidueList {
        &self.source
    }

    pub fn exponent(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn matrix(&self) -> &ModMatrix {
        &self.matrix
    }
}

impl AsRef<ModMatrix> for ResidueMatrix {
    fn as_ref(&self) -> &ModMatrix {
        &self.matrix
    }
}

pub fn build_matrix(res: &ResidueList, n: u64, d: i64) -> Result<ResidueMatrix> {
    let p = &res.p;
    let pv = p.p();
    let dr = p.reduce(d);
    if dr == 0 {
        return Err(Error::DivisibleByP { d, p: pv });
    }
    let dim = res.len();
    let scaled: Vec<u64> = res.alphas.iter().map(|&a| p.mul(a, dr)).collect();
    // A full power table is cheaper once the matrix has more entries than F_p.
    let matrix = if (dim * dim) as u64 > pv {
        let table: Vec<u64> = (0..pv).map(|x| p.pow(x, n)).collect();
        ModMatrix::from_fn(pv, dim, |i, j| {
            table[p.add(res.alphas[i], scaled[j]) as usize]
        })
    } else {
        ModMatrix::from_fn(pv, dim, |i, j| p.pow(p.add(res.alphas[i], scaled[j]), n))
    };
    Ok(ResidueMatrix {
        source: res.clone(),
        n,
        d,
        matrix,
    })
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::field::pow_mod_u64(a, p - 2, p)
}

/// Determinant over F_p by Gaussian elimination with first-nonzero pivoting.
///
/// When `(dim + 1)·(p-1)^2` fits in a `u64` the row updates accumulate without
/// reduction; each row is reduced only when it becomes the pivot row.
pub fn det_mod_p(m: impl AsRef<ModMatrix>) -> u64 {
    let m = m.as_ref();
    let (p, n) = (m.p, m.dim);
    if n == 0 {
        return 1 % p;
    }
    let lazy = (n as u128 + 1) * ((p - 1) as u128).pow(2) + p as u128 <= u64::MAX as u128;
    let mut a = m.entries.clone();
    let mut pivot_row = vec![0u32; n];
    let mut det = 1u64;
    for c in 0..n {
        let mut pivot = None;
        for r in c..n {
            let v = a[r * n + c] % p;
            a[r * n + c] = v;
            if v != 0 && pivot.is_none() {
                pivot = Some(r);
            }
        }
        let Some(r) = pivot else {
            return 0;
        };
        if r != c {
            for j in c..n {
                a.swap(r * n + j, c * n + j);
            }
            det = (p - det) % p;
        }
        for j in c + 1..n {
            let v = a[c * n + j] % p;
            a[c * n + j] = v;
            pivot_row[j] = v as u32;
        }
        let pv = a[c * n + c];
        det = det * pv % p;
        let inv = inv_mod(pv, p);
        let src = &pivot_row[c + 1..n];
        for i in c + 1..n {
            let row = &mut a[i * n..(i + 1) * n];
            let f = row[c];
            if f == 0 {
                continue;
            }
            let g = (p - f * inv % p) as u32;
            let tail = &mut row[c + 1..];
            if lazy {
                for (x, &y) in tail.iter_mut().zip(src) {
                    *x += u64::from(g) * u64::from(y);
                }
            } else {
                for (x, &y) in tail.iter_mut().zip(src) {
                    *x = (*x + u64::from(g) * u64::from(y)) % p;
                }
            }
        }
    }
    det
}

/// Pfaffian over F_p of an even-dimension skew-symmetric matrix.
///
/// Each step pivots a nonzero entry of row `k` into column `k+1` (one swap of
/// index pairs flips the sign) and replaces the trailing block by its Schur
/// complement, so `Pf(A) = a_{k,k+1} · Pf(complement)`.
pub fn pfaffian_mod_p(m: impl AsRef<ModMatrix>) -> Result<u64> {
    let m = m.as_ref();
    let (p, n) = (m.p, m.dim);
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    if !m.is_skew_symmetric() {
        return Err(Error::NotSkewSymmetric);
    }
    let mut a = m.entries.clone();
    let mut pf = 1 % p;
    for k in (0..n).step_by(2) {
        let Some(j) = (k + 1..n).find(|&j| a[k * n + j] != 0) else {
            return Ok(0);
        };
        if j != k + 1 {
            swap_index(&mut a, n, k + 1, j);
            pf = (p - pf) % p;
        }
        let piv = a[k * n + k + 1];
        pf = pf * piv % p;
        let inv = inv_mod(piv, p);
        for i in k + 2..n {
            let u = a[i * n + k] * inv % p;
            let v = a[i * n + k + 1] * inv % p;
            if u == 0 && v == 0 {
                continue;
            }
            for c in k + 2..n {
                let plus = u * a[(k + 1) * n + c] % p;
                let minus = v * a[k * n + c] % p;
                a[i * n + c] = (a[i * n + c] + plus + p - minus) % p;
            }
        }
    }
    Ok(pf)
}

fn swap_index(a: &mut [u64], n: usize, x: usize, y: usize) {
    for c in 0..n {
        a.swap(x * n + c, y * n + c);
    }
    for r in 0..n {
        a.swap(r * n + x, r * n + y);
    }
}

/// Exact integer determinant of `[(α_i + d·α_j)^n]` with α the least positive
/// residues, by fraction-free (Bareiss) elimination.
pub fn det_exact(res: &ResidueList, n: u64, d: i64) -> Result<BigInt> {
    let dim = res.len();
    if dim > EXACT_DIM_LIMIT {
        return Err(Error::DimensionTooLarge {
            dim,
            limit: EXACT_DIM_LIMIT,
        });
    }
    let n = u32::try_from(n).map_err(|_| Error::Precondition("exponent too large".into()))?;
    let rows = res
        .alphas
        .iter()
        .map(|&ai| {
            res.alphas
                .iter()
                .map(|&aj| {
                    let base = BigInt::from(ai) + BigInt::from(d) * BigInt::from(aj);
                    num_traits::pow(base, n as usize)
                })
                .collect()
        })
        .collect();
    Ok(bareiss(rows))
}

/// Fraction-free determinant of an integer matrix.
pub fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `T = ∏_{i<j} (α_i - α_j) mod p` in the list's order.
pub fn residue_diff_product(res: &ResidueList) -> u64 {
    let p = &res.p;
    let xs = &res.alphas;
    let mut acc = 1 % p.p();
    for (i, &x) in xs.iter().enumerate() {
        for &y in &xs[i + 1..] {
            acc = p.mul(acc, p.sub(x, y));
        }
    }
    acc
}

/// Closed form `a_0⋯a_{n-1} · ∏_{i<j}(X_i - X_j)(Y_i - Y_j)` for
/// `det[P(X_i·Y_j)]` with `P(x) = Σ a_t x^t`.
pub fn structured_det(coeffs: &[u64], xs: &[u64], ys: &[u64], p: &PrimeModulus) -> Result<u64> {
    let n = coeffs.len();
    for got in [xs.len(), ys.len()] {
        if got != n {
            return Err(Error::LengthMismatch { expected: n, got });
        }
    }
    let mut acc = coeffs.iter().fold(1 % p.p(), |acc, &c| p.mul(acc, c % p.p()));
    for i in 0..n {
        for j in i + 1..n {
            acc = p.mul(acc, p.sub(xs[i] % p.p(), xs[j] % p.p()));
            acc = p.mul(acc, p.sub(ys[i] % p.p(), ys[j] % p.p()));
        }
    }
    Ok(acc)
}

/// `det[(α_i + d·α_j)^n] mod p` in O(N + n) operations, `N = (p-1)/k`.
///
/// The α are exactly the N-th roots of unity, so `(x + d)^n` agrees on them
/// with the polynomial `Σ_l c_l x^l` whose coefficients collect the binomial
/// terms by exponent mod N. Writing the entry as `α_j^n · (α_i/α_j + d)^n`
/// and applying the structured determinant with `X = α`, `Y = α^{-1}` gives
///
/// `S ≡ (∏α)^n · N^N · ∏ c_l`,
///
/// since `∏_{i<j}(α_i-α_j)(α_i^{-1}-α_j^{-1}) = ∏_i f'(α_i) / (∏α)^{N-1}` for
/// `f = x^N - 1`. Requires `n < p`.
pub fn det_mod_p_by_subgroup(res: &ResidueList, n: u64, d: i64) -> Result<u64> {
    let p = &res.p;
    let pv = p.p();
    let dr = p.reduce(d);
    if dr == 0 {
        return Err(Error::DivisibleByP { d, p: pv });
    }
    if n >= pv {
        return precondition(format!("exponent {n} must be below p = {pv}"));
    }
    let big_n = res.len() as u64;
    let mut coeffs = vec![0u64; res.len()];
    // Walk t = 0..=n with C(n, t) and d^(n-t) updated incrementally.
    let d_inv = p.inv(dr);
    let mut binom = 1u64;
    let mut dpow = p.pow(dr, n);
    for t in 0..=n {
        let slot = &mut coeffs[(t % big_n) as usize];
        *slot = p.add(*slot, p.mul(binom, dpow));
        if t < n {
            binom = p.mul(p.mul(binom, n - t), p.inv(t + 1));
            dpow = p.mul(dpow, d_inv);
        }
    }
    let coeff_product = coeffs.iter().fold(1, |acc, &c| p.mul(acc, c));
    let alpha_product = res.alphas.iter().fold(1, |acc, &a| p.mul(acc, a));
    Ok(p.mul(
        p.mul(p.pow(alpha_product, n), p.pow(big_n % pv, big_n)),
        coeff_product,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{odd_primes_upto, PrimeModulus};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn residues(p: u64, k: u64) -> ResidueList {
        kth_residues(&pm(p), k).unwrap()
    }

    /// Leibniz expansion over all permutations; the independent oracle for
    /// small determinants.
    fn leibniz(m: &ModMatrix) -> u64 {
        fn rec(m: &ModMatrix, row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut u64) {
            let n = m.dim();
            let p = m.p();
            if row == n {
                let mut inversions = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inversions += 1;
                        }
                    }
                }
                let mut term = 1 % p;
                for (i, &c) in perm.iter().enumerate() {
                    term = term * m.get(i, c) % p;
                }
                *acc = if inversions % 2 == 0 {
                    (*acc + term) % p
                } else {
                    (*acc + p - term) % p
                };
                return;
            }
            for c in 0..n {
                if !used[c] {
                    used[c] = true;
                    perm.push(c);
                    rec(m, row + 1, used, perm, acc);
                    perm.pop();
                    used[c] = false;
                }
            }
        }
        let mut acc = 0;
        rec(m, 0, &mut vec![false; m.dim()], &mut Vec::new(), &mut acc);
        acc
    }

    /// Pfaffian by expansion along the first row.
    fn pfaffian_expand(m: &ModMatrix, idx: &[usize]) -> u64 {
        let p = m.p();
        if idx.is_empty() {
            return 1 % p;
        }
        let first = idx[0];
        let mut acc = 0;
        for (pos, &j) in idx.iter().enumerate().skip(1) {
            let rest: Vec<usize> = idx.iter().copied().filter(|&x| x != first && x != j).collect();
            let term = m.get(first, j) * pfaffian_expand(m, &rest) % p;
            acc = if pos % 2 == 1 { (acc + term) % p } else { (acc + p - term) % p };
        }
        acc
    }

    fn random_skew(rng: &mut ChaCha8Rng, p: u64, dim: usize) -> ModMatrix {
        let mut e = vec![0; dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = rng.gen_range(0..p);
                e[i * dim + j] = v;
                e[j * dim + i] = (p - v) % p;
            }
        }
        ModMatrix::new(p, dim, e).unwrap()
    }

    #[test]
    fn kth_residue_examples() {
        assert_eq!(residues(5, 2).alphas(), &[1, 4]);
        assert_eq!(residues(13, 2).alphas(), &[1, 3, 4, 9, 10, 12]);
        assert_eq!(residues(7, 3).alphas(), &[1, 6]);
        assert!(kth_residues(&pm(7), 4).is_err());
        assert!(kth_residues(&pm(7), 1).is_err());
        assert!(kth_residues(&pm(7), 6).is_err());
    }

    #[test]
    fn kth_residues_match_power_enumeration() {
        for p in odd_primes_upto(200) {
            for k in (2..=(p - 1) / 2).filter(|k| (p - 1) % k == 0) {
                let mut brute: Vec<u64> = (1..p)
                    .map(|x| crate::field::pow_mod_u64(x, k, p))
                    .collect();
                brute.sort_unstable();
                brute.dedup();
                assert_eq!(residues(p, k).alphas(), brute.as_slice());
            }
        }
    }

    #[test]
    fn build_matrix_examples() {
        let m = build_matrix(&residues(5, 2), 3, -1).unwrap();
        assert_eq!(m.matrix().entries, vec![0, 3, 2, 0]);
        let ones = build_matrix(&residues(5, 2), 0, 1).unwrap();
        assert_eq!(ones.matrix().entries, vec![1; 4]);
        let big = build_matrix(&residues(61, 2), 7, -1).unwrap();
        assert!((0..30).all(|i| big.matrix().get(i, i) == 0));
        assert!(big.matrix().is_skew_symmetric());
        assert!(matches!(
            build_matrix(&residues(5, 2), 3, 10),
            Err(Error::DivisibleByP { d: 10, p: 5 })
        ));
    }

    #[test]
    fn det_mod_p_examples() {
        let m = ModMatrix::new(5, 2, vec![0, 3, 2, 0]).unwrap();
        assert_eq!(det_mod_p(&m), 4);
        assert_eq!(det_mod_p(ModMatrix::identity(13, 7)), 1);
        let rep = ModMatrix::new(7, 3, vec![1, 2, 3, 1, 2, 3, 4, 5, 6]).unwrap();
        assert_eq!(det_mod_p(&rep), 0);
        assert_eq!(det_mod_p(ModMatrix::identity(3, 0)), 1);
    }

    #[test]
    fn det_mod_p_matches_leibniz() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..400 {
            let p = [3u64, 5, 13, 101, 65_521, 4_294_967_291][rng.gen_range(0..6)];
            let dim = rng.gen_range(1..=6);
            let e = (0..dim * dim)
                .map(|_| if rng.gen_bool(0.2) { 0 } else { rng.gen_range(0..p) })
                .collect();
            let m = ModMatrix::new(p, dim, e).unwrap();
            assert_eq!(det_mod_p(&m), leibniz(&m), "{m:?}");
        }
    }

    #[test]
    fn det_mod_p_large_modulus_takes_reducing_path() {
        // (dim+1)(p-1)^2 overflows u64 here, so every update is reduced.
        let p = 4_294_967_291;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = ModMatrix::from_fn(p, 5, |_, _| rng.gen_range(0..p));
        assert_eq!(det_mod_p(&m), leibniz(&m));
    }

    #[test]
    fn pfaffian_examples() {
        let m = ModMatrix::new(13, 2, vec![0, 5, 8, 0]).unwrap();
        assert_eq!(pfaffian_mod_p(&m).unwrap(), 5);
        let s = build_matrix(&residues(5, 2), 3, -1).unwrap();
        let pf = pfaffian_mod_p(&s).unwrap();
        assert!(pf == 3 || pf == 2);
        assert_eq!(pf * pf % 5, det_mod_p(&s));
        assert_eq!(
            pfaffian_mod_p(ModMatrix::identity(5, 3)),
            Err(Error::OddDimension(3))
        );
        assert_eq!(
            pfaffian_mod_p(ModMatrix::identity(5, 2)),
            Err(Error::NotSkewSymmetric)
        );
    }

    #[test]
    fn pfaffian_matches_expansion_and_squares_to_det() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..300 {
            let p = [13u64, 17, 101, 65_521][rng.gen_range(0..4)];
            let dim = 2 * rng.gen_range(1..=4);
            let m = random_skew(&mut rng, p, dim);
            let pf = pfaffian_mod_p(&m).unwrap();
            let idx: Vec<usize> = (0..dim).collect();
            assert_eq!(pf, pfaffian_expand(&m, &idx));
            assert_eq!(pf * pf % p, det_mod_p(&m));
        }
    }

    #[test]
    fn det_exact_examples() {
        assert_eq!(det_exact(&residues(5, 2), 3, -1).unwrap(), BigInt::from(729));
        assert_eq!(det_exact(&residues(5, 2), 5, -1).unwrap(), BigInt::from(59049));
        assert_eq!(det_exact(&residues(7, 2), 1, -1).unwrap(), BigInt::zero());
        assert!(matches!(
            det_exact(&residues(53, 2), 3, -1),
            Err(Error::DimensionTooLarge { dim: 26, limit: 12 })
        ));
    }

    #[test]
    fn det_exact_reduces_to_det_mod_p() {
        for p in odd_primes_upto(23) {
            for k in (2..=(p - 1) / 2).filter(|k| (p - 1) % k == 0) {
                let res = residues(p, k);
                for n in 0..8 {
                    for d in [-3i64, -1, 1, 2] {
                        if d.rem_euclid(p as i64) == 0 {
                            continue;
                        }
                        let exact = det_exact(&res, n, d).unwrap();
                        let reduced = exact.modpow(&BigInt::one(), &BigInt::from(p));
                        let m = build_matrix(&res, n, d).unwrap();
                        assert_eq!(reduced, BigInt::from(det_mod_p(&m)));
                    }
                }
            }
        }
    }

    #[test]
    fn residue_diff_product_examples() {
        assert_eq!(residue_diff_product(&residues(5, 2)), 2);
        let res = residues(13, 2);
        let xs = [1i64, 3, 4, 9, 10, 12];
        let mut brute = 1i64;
        for i in 0..6 {
            for j in i + 1..6 {
                brute = (brute * (xs[i] - xs[j])).rem_euclid(13);
            }
        }
        assert_eq!(residue_diff_product(&res), brute as u64);
    }

    #[test]
    fn structured_det_examples() {
        let p = pm(17);
        assert_eq!(structured_det(&[9], &[3], &[5], &p).unwrap(), 9);
        assert_eq!(
            structured_det(&[1, 0, 4], &[1, 2, 3], &[4, 5, 6], &p).unwrap(),
            0
        );
        assert!(matches!(
            structured_det(&[1, 2], &[1], &[1, 2], &p),
            Err(Error::LengthMismatch { expected: 2, got: 1 })
        ));
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let coeffs: Vec<u64> = (0..4).map(|_| rng.gen_range(0..17)).collect();
            let xs: Vec<u64> = (0..4).map(|_| rng.gen_range(0..17)).collect();
            let ys: Vec<u64> = (0..4).map(|_| rng.gen_range(0..17)).collect();
            let m = ModMatrix::from_fn(17, 4, |i, j| {
                let x = p.mul(xs[i], ys[j]);
                coeffs.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
            });
            assert_eq!(structured_det(&coeffs, &xs, &ys, &p).unwrap(), det_mod_p(&m));
        }
    }

    #[test]
    fn subgroup_route_matches_elimination() {
        for p in odd_primes_upto(61) {
            let m = pm(p);
            for k in (2..=(p - 1) / 2).filter(|k| (p - 1) % k == 0) {
                let res = kth_residues(&m, k).unwrap();
                for n in 0..p {
                    for d in [1i64, -1, 2, 3] {
                        if d.rem_euclid(p as i64) == 0 {
                            continue;
                        }
                        let direct = det_mod_p(build_matrix(&res, n, d).unwrap());
                        let fast = det_mod_p_by_subgroup(&res, n, d).unwrap();
                        assert_eq!(fast, direct, "p={p} k={k} n={n} d={d}");
                    }
                }
            }
        }
        assert!(det_mod_p_by_subgroup(&residues(5, 2), 5, 1).is_err());
    }

    #[test]
    fn reordering_must_be_a_permutation() {
        let res = residues(13, 2);
        assert!(res.reordered(vec![12, 10, 9, 4, 3, 1]).is_ok());
        assert!(res.reordered(vec![12, 10, 9, 4, 3, 2]).is_err());
    }
}
