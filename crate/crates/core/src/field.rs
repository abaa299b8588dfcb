//! Arithmetic in the prime field F_p.
//!
//! Residues are `u64` values in `[0, p)`. The modulus is capped at 2^32 so a
//! product of two residues never overflows a `u64`; primality testing and
//! factoring of machine-width integers use `u128` widening instead.

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest modulus accepted by [`PrimeModulus::new`] (exclusive).
pub const MODULUS_BOUND: u64 = 1 << 32;

/// An odd prime together with the factorisation of `p - 1` and its least
/// primitive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeModulus {
    p: u64,
    p_minus_one_factors: Vec<(u64, u32)>,
    g: u64,
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MODULUS_BOUND {
            return Err(Error::ModulusTooLarge(p));
        }
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        let p_minus_one_factors = factor_u64(p - 1);
        let g = least_primitive_root(p, &p_minus_one_factors);
        Ok(Self {
            p,
            p_minus_one_factors,
            g,
        })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Prime factors of `p - 1` with multiplicities, ascending.
    pub fn p_minus_one_factors(&self) -> &[(u64, u32)] {
        &self.p_minus_one_factors
    }

    /// The least primitive root modulo `p`.
    #[inline]
    pub fn generator(&self) -> u64 {
        self.g
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, base: u64, mut exp: u64) -> u64 {
        let mut base = base % self.p;
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero mod p.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0, "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// `(-1)^e` as a residue.
    #[inline]
    pub fn sign(&self, e: u64) -> u64 {
        if e % 2 == 0 {
            1
        } else {
            self.p - 1
        }
    }

    /// Maps a residue congruent to 0 or ±1 onto {0, 1, -1}.
    pub fn as_symbol(&self, r: u64) -> Option<i8> {
        match r % self.p {
            0 => Some(0),
            1 => Some(1),
            x if x == self.p - 1 => Some(-1),
            _ => None,
        }
    }
}

pub fn mod_pow(base: u64, exp: u64, p: &PrimeModulus) -> u64 {
    p.pow(base, exp)
}

/// Legendre symbol `(a / p)` by Euler's criterion.
pub fn legendre(a: i64, p: &PrimeModulus) -> i8 {
    legendre_residue(p.reduce(a), p)
}

/// Legendre symbol of an already reduced residue.
pub fn legendre_residue(a: u64, p: &PrimeModulus) -> i8 {
    let a = a % p.p();
    if a == 0 {
        return 0;
    }
    p.as_symbol(p.pow(a, (p.p() - 1) / 2))
        .expect("Euler criterion yields ±1")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharClass {
    One,
    MinusOne,
    Other,
    Zero,
}

/// `d^((p-1)/k) mod p` with its classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CharacterValue {
    pub raw: u64,
    pub class: CharClass,
}

impl CharacterValue {
    pub fn is_unit_sign(&self) -> bool {
        matches!(self.class, CharClass::One | CharClass::MinusOne)
    }
}

/// The order-`k` character `chi_k(d) = d^((p-1)/k)`.
///
/// Any `k >= 1` dividing `p - 1` is accepted, so `chi_{2k}` is available even
/// when `2k = p - 1`.
pub fn chi_k(d: i64, k: u64, p: &PrimeModulus) -> Result<CharacterValue> {
    if k == 0 || (p.p() - 1) % k != 0 {
        return Err(Error::InvalidOrder { k, p: p.p() });
    }
    let d = p.reduce(d);
    if d == 0 {
        return Ok(CharacterValue {
            raw: 0,
            class: CharClass::Zero,
        });
    }
    let raw = p.pow(d, (p.p() - 1) / k);
    let class = if raw == 1 {
        CharClass::One
    } else if raw == p.p() - 1 {
        CharClass::MinusOne
    } else {
        CharClass::Other
    };
    Ok(CharacterValue { raw, class })
}

pub fn primitive_root(p: &PrimeModulus) -> u64 {
    p.generator()
}

fn least_primitive_root(p: u64, factors: &[(u64, u32)]) -> u64 {
    (2..p)
        .find(|&g| {
            factors
                .iter()
                .all(|&(q, _)| pow_mod_u64(g, (p - 1) / q, p) != 1)
        })
        .unwrap_or(p - 1)
}

/// Square root modulo p by Tonelli–Shanks, canonicalised to `min(r, p - r)`.
/// Returns `None` when `a` is a quadratic non-residue.
pub fn sqrt_mod(a: u64, p: &PrimeModulus) -> Option<u64> {
    let pv = p.p();
    let a = a % pv;
    if a == 0 {
        return Some(0);
    }
    if legendre_residue(a, p) != 1 {
        return None;
    }
    let root = if pv % 4 == 3 {
        p.pow(a, (pv + 1) / 4)
    } else {
        let s = (pv - 1).trailing_zeros();
        let q = (pv - 1) >> s;
        let z = (2..pv)
            .find(|&z| legendre_residue(z, p) == -1)
            .expect("odd prime has a non-residue");
        let mut m = s;
        let mut c = p.pow(z, q);
        let mut t = p.pow(a, q);
        let mut r = p.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = p.mul(t2, t2);
                i += 1;
            }
            let b = p.pow(c, 1 << (m - i - 1));
            m = i;
            c = p.mul(b, b);
            t = p.mul(t, c);
            r = p.mul(r, b);
        }
        r
    };
    Some(root.min(pv - root))
}

/// `|{0 < t < p/4 : (t/p) = -1}|`, defined for `p ≡ 1 (mod 4)`.
pub fn count_nonresidues_quarter(p: &PrimeModulus) -> Result<u64> {
    if p.p() % 4 != 1 {
        return Err(Error::Precondition(format!(
            "p = {} is not 1 mod 4",
            p.p()
        )));
    }
    Ok((1..=(p.p() - 1) / 4)
        .filter(|&t| legendre_residue(t, p) == -1)
        .count() as u64)
}

pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut base = base % m;
    let mut acc = 1 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality for every `u64`.
///
/// Miller–Rabin with the first twelve prime bases is exact below 3.3e24,
/// which covers the whole `u64` range.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n == b {
            return true;
        }
        if n % b == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Trial-division factorisation, intended for `n < 2^32`.
pub(crate) fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n % q == 0 {
            let mut e = 0;
            while n % q == 0 {
                n /= q;
                e += 1;
            }
            out.push((q, e));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Odd primes in `[3, bound]`, ascending.
pub fn odd_primes_upto(bound: u64) -> Vec<u64> {
    if bound < 3 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (3..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
}
