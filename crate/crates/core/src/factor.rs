//! Integer factorisation: trial division, then Brent's variant of Pollard rho
//! with a fixed polynomial schedule `x² + c`, `c = 1, 2, …`, so results are
//! reproducible.
//!
//! Every reported prime is certified by deterministic Miller–Rabin, which is
//! exact below 3.3·10^24. Larger pieces that rho cannot split, or that pass
//! Miller–Rabin without being certifiable, are returned as cofactors.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::field::{is_prime, mul_mod_u64};

const TRIAL_BOUND: u32 = 1 << 16;
const RHO_STEPS: u64 = 1 << 22;
const RHO_POLYNOMIALS: u64 = 12;

/// Miller–Rabin with the primes up to 41 as bases is exact below this bound.
const MR_DETERMINISTIC_BOUND: &str = "3317044064679887385961981";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Factorization {
    /// Certified primes with exponents, ascending.
    pub factors: Vec<(BigUint, u32)>,
    /// Pieces left unfactored (composite, or too large to certify).
    pub cofactors: Vec<BigUint>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.cofactors.is_empty()
    }

    /// Product of all prime powers and cofactors.
    pub fn recombine(&self) -> BigUint {
        let primes = self
            .factors
            .iter()
            .fold(BigUint::one(), |acc, (q, e)| acc * q.pow(*e));
        self.cofactors.iter().fold(primes, |acc, c| acc * c)
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigUint> {
        self.factors.iter().map(|(q, _)| q)
    }
}

/// Factors `n`. Returns an empty factorisation for `n <= 1`.
pub fn factor(n: &BigUint) -> Factorization {
    let mut out = Factorization::default();
    if n <= &BigUint::one() {
        return out;
    }
    let mut primes: Vec<BigUint> = Vec::new();
    let mut rest = n.clone();
    for q in small_primes(TRIAL_BOUND) {
        let qb = BigUint::from(q);
        if &qb * &qb > rest {
            break;
        }
        while (&rest % q).is_zero() {
            rest /= q;
            primes.push(qb.clone());
        }
    }
    let mut pending = vec![rest];
    while let Some(r) = pending.pop() {
        if r.is_one() {
            continue;
        }
        if let Some(small) = r.to_u64() {
            for q in factor_machine_word(small) {
                primes.push(BigUint::from(q));
            }
            continue;
        }
        if miller_rabin_big(&r) {
            if r < mr_bound() {
                primes.push(r);
            } else {
                out.cofactors.push(r);
            }
            continue;
        }
        match rho_big(&r) {
            Some(f) => {
                let g = &r / &f;
                pending.push(f);
                pending.push(g);
            }
            None => out.cofactors.push(r),
        }
    }
    primes.sort();
    for q in primes {
        match out.factors.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.factors.push((q, 1)),
        }
    }
    out.cofactors.sort();
    out
}

fn mr_bound() -> BigUint {
    MR_DETERMINISTIC_BOUND.parse().expect("constant parses")
}

fn small_primes(bound: u32) -> Vec<u32> {
    let mut out = vec![2];
    out.extend(
        crate::field::odd_primes_upto(u64::from(bound))
            .into_iter()
            .map(|q| q as u32),
    );
    out
}

/// Prime factors of a machine word with multiplicity, unsorted.
fn factor_machine_word(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut pending = vec![n];
    while let Some(r) = pending.pop() {
        if r == 1 {
            continue;
        }
        if is_prime(r) {
            out.push(r);
            continue;
        }
        if r % 2 == 0 {
            out.push(2);
            pending.push(r / 2);
            continue;
        }
        let f = (1..)
            .find_map(|c| rho_u64(r, c))
            .expect("rho eventually splits a composite");
        pending.push(f);
        pending.push(r / f);
    }
    out
}

/// One Brent rho run with polynomial `x² + c`; returns a proper divisor.
fn rho_u64(n: u64, c: u64) -> Option<u64> {
    let f = |x: u64| ((mul_mod_u64(x, x, n) as u128 + c as u128) % n as u128) as u64;
    let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
    let mut q = 1u64;
    let mut r = 1u64;
    let batch = 128;
    let mut g = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..batch.min(r - k) {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += batch;
        }
        r *= 2;
        if r > RHO_STEPS {
            return None;
        }
    }
    if g == n {
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    for c in 1..=RHO_POLYNOMIALS {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut x;
        let mut y = BigUint::from(2u32);
        let mut ys = y.clone();
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut r = 1u64;
        let batch = 128u64;
        while g.is_one() && r <= RHO_STEPS {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..batch.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                g = q.gcd(n);
                k += batch;
            }
            if g.is_one() {
                r *= 2;
            } else if &g == n {
                loop {
                    ys = f(&ys);
                    let diff = if x > ys { &x - &ys } else { &ys - &x };
                    g = diff.gcd(n);
                    if !g.is_one() {
                        break;
                    }
                }
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

/// Miller–Rabin with the thirteen prime bases up to 41.
fn miller_rabin_big(n: &BigUint) -> bool {
    const BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &a in &BASES {
        let a = BigUint::from(a);
        if &a >= n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
