//! Right-hand sides: e-factorials, the `a²·b` decomposition of `S_{m,k}(d,p)`,
//! and the Legendre-symbol formulas for `√S_{1+N,k}(-1,p)`, `√S_{3+N,k}(-1,p)`
//! with `N = (p-1)/k`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::field::{chi_k, legendre, legendre_residue, CharClass, PrimeModulus};
use crate::residue_matrix::{kth_residues, residue_diff_product, ResidueList};

/// Arbitrary-precision signed integer.
pub type ExactInteger = BigInt;

/// `a!_(e) = a·(a-e)·(a-2e)⋯`, stopping at the first factor in `[1, e]`.
pub fn e_factorial(a: u64, e: u64) -> Result<ExactInteger> {
    check_e_factorial(a, e)?;
    let mut acc = BigInt::one();
    let mut x = a;
    loop {
        acc *= x;
        if x <= e {
            return Ok(acc);
        }
        x -= e;
    }
}

/// `a!_(e) mod p`.
pub fn e_factorial_mod(a: u64, e: u64, p: &PrimeModulus) -> Result<u64> {
    check_e_factorial(a, e)?;
    let mut acc = 1;
    let mut x = a;
    loop {
        acc = p.mul(acc, x % p.p());
        if x <= e {
            return Ok(acc);
        }
        x -= e;
    }
}

fn check_e_factorial(a: u64, e: u64) -> Result<()> {
    if a == 0 || e == 0 {
        return precondition(format!("e-factorial needs a, e >= 1 (a = {a}, e = {e})"));
    }
    Ok(())
}

/// Factorials and inverse factorials mod p up to a limit below p.
#[derive(Debug, Clone)]
pub struct BinomialTable {
    p: PrimeModulus,
    fact: Vec<u64>,
    inv_fact: Vec<u64>,
}

impl BinomialTable {
    pub fn new(limit: u64, p: &PrimeModulus) -> Result<Self> {
        if limit >= p.p() {
            return precondition(format!("binomial table limit {limit} must be below p = {}", p.p()));
        }
        let len = limit as usize + 1;
        let mut fact = vec![1u64; len];
        for i in 1..len {
            fact[i] = p.mul(fact[i - 1], i as u64);
        }
        let mut inv_fact = vec![1u64; len];
        inv_fact[len - 1] = p.inv(fact[len - 1]);
        for i in (1..len).rev() {
            inv_fact[i - 1] = p.mul(inv_fact[i], i as u64);
        }
        Ok(Self {
            p: p.clone(),
            fact,
            inv_fact,
        })
    }

    pub fn limit(&self) -> u64 {
        self.fact.len() as u64 - 1
    }

    /// `C(n, t) mod p`; zero when `t > n`.
    pub fn binom(&self, n: u64, t: u64) -> u64 {
        assert!(n <= self.limit(), "binomial C({n}, _) outside the table");
        if t > n {
            return 0;
        }
        let p = &self.p;
        p.mul(
            self.fact[n as usize],
            p.mul(self.inv_fact[t as usize], self.inv_fact[(n - t) as usize]),
        )
    }
}

/// `S_{m,k}(d,p) ≡ a²·b (mod p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LemmaDecomposition {
    pub a: u64,
    pub b: u64,
    pub product: u64,
}

/// Per-`(p, k)` data shared by every `(m, d)` decomposition.
#[derive(Debug, Clone)]
pub struct LemmaContext {
    residues: ResidueList,
    diff_product: u64,
    binomials: BinomialTable,
}

impl LemmaContext {
    /// Requires `k | p-1`, `2 <= k <= (p-1)/2` and `p > 2k+1`.
    pub fn new(p: &PrimeModulus, k: u64) -> Result<Self> {
        let residues = kth_residues(p, k)?;
        if p.p() <= 2 * k + 1 {
            return precondition(format!("p = {} must exceed 2k+1 = {}", p.p(), 2 * k + 1));
        }
        let big_n = residues.len() as u64;
        let binomials = BinomialTable::new(2 * big_n - 1, p)?;
        let diff_product = residue_diff_product(&residues);
        Ok(Self {
            residues,
            diff_product,
            binomials,
        })
    }

    pub fn residues(&self) -> &ResidueList {
        &self.residues
    }

    /// `T = ∏_{i<j}(α_i - α_j) mod p`.
    pub fn diff_product(&self) -> u64 {
        self.diff_product
    }

    /// Decomposition for `N < m < 2N` and `chi_k(d) = ±1`.
    ///
    /// Reducing `(x + d)^m` modulo `x^N - 1` pairs the coefficients
    /// `B_l = C(m,l) + c·C(m, m-N-l)` (with `c = d^{-N} = chi_k(d)`) as
    /// `B_l·B_{m-N-l} = c·B_l²`, and the unpaired binomials `C(m, l)` for
    /// `m-N < l < N` as `C(m,l)·C(m,m-l)`. The squared halves form `a`; the
    /// centre terms, the sign and the power of d form `b`.
    pub fn decompose(&self, m: u64, d: i64) -> Result<LemmaDecomposition> {
        let p = self.residues.modulus();
        let k = self.residues.k();
        let big_n = self.residues.len() as u64;
        if m <= big_n || m >= 2 * big_n {
            return precondition(format!("m = {m} must lie strictly between {big_n} and {}", 2 * big_n));
        }
        if p.reduce(d) == 0 {
            return Err(Error::DivisibleByP { d, p: p.p() });
        }
        let chi = chi_k(d, k, p)?;
        if !chi.is_unit_sign() {
            return precondition(format!("chi_{k}({d}) is not ±1 mod {}", p.p()));
        }
        let c = chi.raw;
        let binom = |n: u64, t: u64| self.binomials.binom(n, t);
        let excess = m - big_n;

        let mut a = 1u64;
        for l in 0..excess.div_ceil(2) {
            a = p.mul(a, p.add(binom(m, l), p.mul(c, binom(m, excess - l))));
        }
        for l in 0..(big_n - 1 - m / 2) {
            a = p.mul(a, binom(m, excess + 1 + l));
        }
        a = p.mul(a, self.diff_product);

        let b = self.b_table(m, d, c)?;
        Ok(LemmaDecomposition {
            a,
            b,
            product: p.mul(p.mul(a, a), b),
        })
    }

    /// The four-case value of `b` by the parities of `m` and `N`.
    fn b_table(&self, m: u64, d: i64, chi_k_raw: u64) -> Result<u64> {
        let p = self.residues.modulus();
        let k = self.residues.k();
        let big_n = self.residues.len() as u64;
        let binom = |n: u64, t: u64| self.binomials.binom(n, t);
        let one_plus_chi = p.add(1, chi_k_raw);
        let b = match (m % 2 == 0, big_n % 2 == 0) {
            // p ≡ 1 (mod 2k)
            (true, true) => {
                let chi_2k = chi_k(d, 2 * k, p)?.raw;
                let v = p.mul(chi_2k, p.sign(big_n / 2 - 1));
                let v = p.mul(v, one_plus_chi);
                let v = p.mul(v, binom(m, (m - big_n) / 2));
                p.mul(v, binom(m, m / 2))
            }
            // p ≡ k+1 (mod 2k)
            (true, false) => {
                let v = p.pow(chi_k_raw, m / 2);
                let v = p.mul(v, p.sign((big_n - 1) / 2));
                p.mul(v, binom(m, m / 2))
            }
            (false, true) => {
                let chi_2k = chi_k(d, 2 * k, p)?.raw;
                p.mul(p.pow(chi_2k, m), p.sign(big_n / 2))
            }
            (false, false) => {
                let v = p.mul(p.sign((big_n - 1) / 2), one_plus_chi);
                p.mul(v, binom(m, (m - big_n) / 2))
            }
        };
        Ok(b)
    }
}

/// One-shot form of [`LemmaContext::decompose`].
pub fn lemma26_decomposition(m: u64, k: u64, d: i64, p: &PrimeModulus) -> Result<LemmaDecomposition> {
    LemmaContext::new(p, k)?.decompose(m, d)
}

/// Which hypothesis of the `√S` formulas a `(k, p)` pair falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SqrtBranch {
    /// `p ≡ 1 (mod 4k)`.
    OneModFourK,
    /// `k` even and `p = 2k+1`.
    TwoKPlusOne,
    /// `k` even and `p ≡ 2k+1 (mod 4k)`, `p > 2k+1`.
    TwoKPlusOneModFourK,
}

/// Classifies `(k, p)` for the `√S_{1+N,k}` and `√S_{3+N,k}` formulas, or
/// rejects pairs outside their hypotheses.
pub fn sqrt_branch(k: u64, p: &PrimeModulus) -> Result<SqrtBranch> {
    let pv = p.p();
    if k < 2 || k > (pv - 1) / 2 {
        return Err(Error::InvalidOrder { k, p: pv });
    }
    if (pv - 1) % (2 * k) != 0 {
        return precondition(format!("p = {pv} is not 1 mod 2k = {}", 2 * k));
    }
    if pv % (4 * k) == 1 {
        return Ok(SqrtBranch::OneModFourK);
    }
    if k % 2 == 1 {
        return precondition(format!(
            "k = {k} is odd and p = {pv} ≡ 2k+1 (mod 4k); (-1/p) = -1 so the square root's symbol is undefined"
        ));
    }
    Ok(if pv == 2 * k + 1 {
        SqrtBranch::TwoKPlusOne
    } else {
        SqrtBranch::TwoKPlusOneModFourK
    })
}

fn product_mod(p: &PrimeModulus, factors: &[u64]) -> u64 {
    factors.iter().fold(1, |acc, &f| p.mul(acc, f % p.p()))
}

/// `6k³ + (3k-1)(2k-1)(k-1) mod p`.
fn cubic_mod(k: u64, p: &PrimeModulus) -> u64 {
    let k = k % p.p();
    let six_k3 = product_mod(p, &[6, k, k, k]);
    let rest = product_mod(
        p,
        &[p.sub(p.mul(3, k), 1), p.sub(p.mul(2, k), 1), p.sub(k, 1)],
    );
    p.add(six_k3, rest)
}

/// Legendre symbol of `√S_{1+N,k}(-1,p)` given `t_legendre = (T/p)`.
pub fn theorem3_rhs(k: u64, p: &PrimeModulus, t_legendre: i8) -> Result<i8> {
    let big_n = (p.p() - 1) / k;
    let v = match sqrt_branch(k, p)? {
        SqrtBranch::TwoKPlusOne => return Ok(t_legendre),
        SqrtBranch::OneModFourK => {
            let head = product_mod(p, &[k - 1, 2 * k - 1]);
            legendre_residue(head, p) * legendre_residue(e_factorial_mod(big_n, 2, p)?, p)
        }
        SqrtBranch::TwoKPlusOneModFourK => {
            let head = product_mod(p, &[k, 2 * k - 1]);
            legendre_residue(head, p) * legendre_residue(e_factorial_mod(big_n - 1, 2, p)?, p)
        }
    };
    Ok(v * t_legendre)
}

/// Legendre symbol of `√S_{3+N,k}(-1,p)` given `t_legendre = (T/p)`.
///
/// Zero when `p | 6k³ + (3k-1)(2k-1)(k-1)`.
pub fn theorem4_rhs(k: u64, p: &PrimeModulus, t_legendre: i8) -> Result<i8> {
    let big_n = (p.p() - 1) / k;
    let cubic = cubic_mod(k, p);
    let v = match sqrt_branch(k, p)? {
        SqrtBranch::TwoKPlusOne => return Ok(t_legendre),
        SqrtBranch::OneModFourK => {
            let head = product_mod(p, &[k, 3 * k - 1, 4 * k - 1, cubic]);
            legendre_residue(head, p) * legendre_residue(e_factorial_mod(big_n - 1, 2, p)?, p)
        }
        SqrtBranch::TwoKPlusOneModFourK => {
            let head = product_mod(p, &[k - 1, 2 * k - 1, 4 * k - 1, cubic]);
            legendre_residue(head, p) * legendre_residue(e_factorial_mod(big_n, 2, p)?, p)
        }
    };
    Ok(v * t_legendre)
}

fn check_one_mod_four(p: &PrimeModulus) -> Result<()> {
    if p.p() % 4 != 1 {
        return precondition(format!("p = {} is not 1 mod 4", p.p()));
    }
    Ok(())
}

/// The `k = 2` specialisation of [`theorem3_rhs`], written out by residue
/// class of p mod 8.
pub fn theorem3_rhs_quadratic(p: &PrimeModulus, t_legendre: i8) -> Result<i8> {
    check_one_mod_four(p)?;
    let pv = p.p();
    Ok(if pv == 5 {
        t_legendre
    } else if pv % 8 == 1 {
        legendre(3, p) * legendre_residue(e_factorial_mod((pv - 1) / 2, 2, p)?, p) * t_legendre
    } else {
        legendre(6, p) * legendre_residue(e_factorial_mod((pv - 3) / 2, 2, p)?, p) * t_legendre
    })
}

/// The `k = 2` specialisation of [`theorem4_rhs`].
pub fn theorem4_rhs_quadratic(p: &PrimeModulus, t_legendre: i8) -> Result<i8> {
    check_one_mod_four(p)?;
    let pv = p.p();
    Ok(if pv == 5 {
        t_legendre
    } else if pv % 8 == 1 {
        legendre(10, p) * legendre_residue(e_factorial_mod((pv - 3) / 2, 2, p)?, p) * t_legendre
    } else {
        legendre(3, p) * legendre_residue(e_factorial_mod((pv - 1) / 2, 2, p)?, p) * t_legendre
    })
}

/// `(p/q)` for a small odd prime `q`, as the Legendre symbol of `p mod q`.
fn symbol_over(p: u64, q: u64) -> i8 {
    let q = PrimeModulus::new(q).expect("small odd prime");
    legendre_residue(p % q.p(), &q)
}

fn quarter_sign(p: &PrimeModulus) -> Result<i8> {
    let count = crate::field::count_nonresidues_quarter(p)?;
    Ok(if count % 2 == 0 { 1 } else { -1 })
}

/// `(-1)^{#{0<t<p/4 : (t/p) = -1}} · (p/3)` for `p ≡ 1 (mod 4)`.
pub fn conjecture63_rhs(p: &PrimeModulus) -> Result<i8> {
    Ok(quarter_sign(p)? * symbol_over(p.p(), 3))
}

/// `(-1)^{#{0<t<p/4 : (t/p) = -1}} · (p / (4 + (-1)^{(p-1)/4}))` for `p ≡ 1 (mod 4)`.
pub fn conjecture64_rhs(p: &PrimeModulus) -> Result<i8> {
    let q = if ((p.p() - 1) / 4) % 2 == 0 { 5 } else { 3 };
    Ok(quarter_sign(p)? * symbol_over(p.p(), q))
}

/// True when `chi_k(d)` is ±1, the admissible `d` for the decomposition.
pub fn is_unit_character(d: i64, k: u64, p: &PrimeModulus) -> bool {
    chi_k(d, k, p)
        .map(|c| matches!(c.class, CharClass::One | CharClass::MinusOne))
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::odd_primes_upto;
    use crate::residue_matrix::{build_matrix, det_exact, det_mod_p, pfaffian_mod_p};

    fn pm(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    /// `b` recomputed from the exponent bookkeeping before the case split:
    /// sign `(-1)^{m(N+1) + ⌊(N-1)/2⌋}`, the power `d^{N(m+1)/2}` (equal
    /// parities) or `d^{Nm/2}` (opposite parities), and the centre terms.
    fn b_from_exponents(ctx: &LemmaContext, m: u64, d: i64) -> u64 {
        let p = ctx.residues.modulus();
        let n = ctx.residues.len() as u64;
        let dr = p.reduce(d);
        let c = p.pow(p.inv(dr), n);
        let sign = p.sign(m * (n + 1) + (n - 1) / 2);
        let mut b = sign;
        if (m - n) % 2 == 0 {
            b = p.mul(b, p.pow(dr, n * (m + 1) / 2));
            b = p.mul(b, p.add(1, c));
            b = p.mul(b, ctx.binomials.binom(m, (m - n) / 2));
        } else {
            b = p.mul(b, p.pow(dr, n * m / 2));
        }
        if m % 2 == 0 {
            b = p.mul(b, ctx.binomials.binom(m, m / 2));
        }
        b
    }

    #[test]
    fn e_factorial_examples() {
        assert_eq!(e_factorial(5, 2).unwrap(), BigInt::from(15));
        assert_eq!(e_factorial(7, 3).unwrap(), BigInt::from(28));
        let sum = e_factorial(26, 2).unwrap() + e_factorial(25, 2).unwrap();
        assert_eq!(sum, BigInt::from(58_917_607_974_225u64));
        assert!(e_factorial(0, 2).is_err());
        assert!(e_factorial(3, 0).is_err());
        assert_eq!(e_factorial(2, 5).unwrap(), BigInt::from(2));
    }

    #[test]
    fn e_factorial_recursion_and_factorial() {
        let mut fact = BigInt::one();
        for a in 1..=20u64 {
            fact *= a;
            assert_eq!(e_factorial(a, 1).unwrap(), fact);
        }
        for e in 1..=5u64 {
            for a in e + 1..=60 {
                assert_eq!(
                    e_factorial(a, e).unwrap(),
                    BigInt::from(a) * e_factorial(a - e, e).unwrap()
                );
            }
        }
        let p = pm(101);
        for a in 1..=60 {
            let big = e_factorial(a, 3).unwrap() % 101u32;
            assert_eq!(big, BigInt::from(e_factorial_mod(a, 3, &p).unwrap()));
        }
    }

    #[test]
    fn binomial_table_matches_pascal() {
        let p = pm(101);
        let t = BinomialTable::new(100, &p).unwrap();
        let mut row = vec![1u64];
        for n in 0..=100u64 {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(t.binom(n, k as u64), v);
            }
            assert_eq!(t.binom(n, n + 1), 0);
            let mut next = vec![1u64; row.len() + 1];
            for k in 1..row.len() {
                next[k] = (row[k - 1] + row[k]) % 101;
            }
            row = next;
        }
        assert!(BinomialTable::new(101, &p).is_err());
    }

    #[test]
    fn b_table_examples() {
        // m odd, p ≡ 1 (mod 2k), chi_k(d) = 1: b = chi_2k(d)^m (-1)^{(p-1)/2k}.
        let p = pm(29);
        let ctx = LemmaContext::new(&p, 2).unwrap();
        for m in (15..28).step_by(2) {
            for d in (1..29).filter(|&d| legendre(d, &p) == 1) {
                let chi_2k = chi_k(d, 4, &p).unwrap().raw;
                let expect = p.mul(p.pow(chi_2k, m), p.sign(7));
                assert_eq!(ctx.decompose(m, d).unwrap().b, expect);
            }
        }
        // m even, p ≡ 1 (mod 2k), chi_k(d) = -1: the factor 1 + chi_k(d) vanishes.
        for m in (16..28).step_by(2) {
            for d in (1..29).filter(|&d| legendre(d, &p) == -1) {
                assert_eq!(ctx.decompose(m, d).unwrap().b, 0);
            }
        }
    }

    #[test]
    fn b_table_agrees_with_exponent_bookkeeping() {
        for pv in odd_primes_upto(200) {
            let p = pm(pv);
            for k in (2..=(pv - 1) / 2).filter(|k| (pv - 1) % k == 0 && pv > 2 * k + 1) {
                let ctx = LemmaContext::new(&p, k).unwrap();
                let n = ctx.residues.len() as u64;
                for m in n + 1..2 * n {
                    for d in (1..pv as i64).filter(|&d| is_unit_character(d, k, &p)) {
                        let got = ctx.decompose(m, d).unwrap().b;
                        assert_eq!(got, b_from_exponents(&ctx, m, d), "p={pv} k={k} m={m} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn decomposition_matches_determinant_p13() {
        let p = pm(13);
        let m = 7;
        let dec = lemma26_decomposition(m, 2, -1, &p).unwrap();
        let res = kth_residues(&p, 2).unwrap();
        assert_eq!(dec.product, det_mod_p(build_matrix(&res, m, -1).unwrap()));
        assert_eq!(dec.product, p.mul(p.mul(dec.a, dec.a), dec.b));
    }

    #[test]
    fn decomposition_rejects_bad_inputs() {
        let p = pm(13);
        assert!(lemma26_decomposition(6, 2, 1, &p).is_err());
        assert!(lemma26_decomposition(12, 2, 1, &p).is_err());
        assert!(lemma26_decomposition(7, 2, 13, &p).is_err());
        // p = 2k+1 is excluded.
        assert!(lemma26_decomposition(3, 2, 1, &pm(5)).is_err());
        // chi_3(2) mod 13 is neither 1 nor -1.
        assert!(lemma26_decomposition(5, 3, 2, &p).is_err());
        assert!(lemma26_decomposition(5, 5, 1, &p).is_err());
    }

    #[test]
    fn first_sqrt_symbol_examples() {
        // p = 2k+1 returns (T/p).
        assert_eq!(theorem3_rhs(2, &pm(5), -1).unwrap(), -1);
        assert_eq!(theorem3_rhs(6, &pm(13), 1).unwrap(), 1);
        // k = 2, p = 13 ≡ 5 (mod 8): (6/13)·(5!!/13)·(T/13).
        let p = pm(13);
        let expect = legendre(6, &p) * legendre(15, &p);
        assert_eq!(theorem3_rhs(2, &p, 1).unwrap(), expect);
        assert_eq!(theorem3_rhs_quadratic(&p, 1).unwrap(), expect);
        // Exact route at p = 5: √729 = 27 ≡ 2, and (2/5) = -1.
        let res = kth_residues(&pm(5), 2).unwrap();
        assert_eq!(det_exact(&res, 3, -1).unwrap(), BigInt::from(27 * 27));
        assert_eq!(legendre(27, &pm(5)), -1);
        // k odd with p ≡ 2k+1 (mod 4k) is outside the hypotheses.
        assert!(theorem3_rhs(3, &pm(7), 1).is_err());
        assert!(theorem3_rhs(3, &pm(19), 1).is_err());
        assert!(theorem3_rhs(2, &pm(7), 1).is_err());
    }

    #[test]
    fn third_sqrt_symbol_examples() {
        assert_eq!(theorem4_rhs(2, &pm(5), 1).unwrap(), 1);
        for pv in [17u64, 41, 73, 89, 97] {
            let p = pm(pv);
            let expect = legendre(10, &p)
                * legendre_residue(e_factorial_mod((pv - 3) / 2, 2, &p).unwrap(), &p);
            assert_eq!(theorem4_rhs(2, &p, 1).unwrap(), expect);
            assert_eq!(theorem4_rhs_quadratic(&p, 1).unwrap(), expect);
        }
        // S_{5,2}(-1,5) = 3^10 exactly; its root 243 ≡ 3 has symbol -1.
        let res = kth_residues(&pm(5), 2).unwrap();
        assert_eq!(det_exact(&res, 5, -1).unwrap(), BigInt::from(59049));
        let s = build_matrix(&res, 5, -1).unwrap();
        let pf = pfaffian_mod_p(&s).unwrap();
        assert_eq!(legendre(pf as i64, &pm(5)), legendre(243, &pm(5)));
    }

    #[test]
    fn quadratic_forms_match_general_formulas() {
        for pv in odd_primes_upto(997).into_iter().filter(|p| p % 4 == 1) {
            let p = pm(pv);
            for t in [-1i8, 1] {
                assert_eq!(theorem3_rhs(2, &p, t).unwrap(), theorem3_rhs_quadratic(&p, t).unwrap());
                assert_eq!(theorem4_rhs(2, &p, t).unwrap(), theorem4_rhs_quadratic(&p, t).unwrap());
            }
        }
    }

    #[test]
    fn quarter_count_symbol_examples() {
        assert_eq!(conjecture63_rhs(&pm(5)).unwrap(), -1);
        assert_eq!(conjecture63_rhs(&pm(13)).unwrap(), -1);
        // One quarter non-residue (t = 3) and (17/3) = (2/3) = -1.
        assert_eq!(conjecture63_rhs(&pm(17)).unwrap(), 1);
        // (17-1)/4 even selects (17/5) = (2/5) = -1.
        assert_eq!(conjecture64_rhs(&pm(17)).unwrap(), 1);
        // 13 and 29 use modulus 3.
        assert_eq!(conjecture64_rhs(&pm(13)).unwrap(), conjecture63_rhs(&pm(13)).unwrap());
        assert_eq!(conjecture64_rhs(&pm(29)).unwrap(), conjecture63_rhs(&pm(29)).unwrap());
        assert!(conjecture63_rhs(&pm(7)).is_err());
        assert!(conjecture64_rhs(&pm(11)).is_err());
    }
}
