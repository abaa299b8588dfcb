//! The exceptional sets
//! `E_k(m) = {p prime : 2k | p-1, p | S_{m+(p-1)/k,k}(-1,p)}` for odd `m`.
//!
//! Two routes: a direct sweep over primes computing each determinant, and the
//! divisibility criterion for `p > km+1`, which reduces membership to the
//! prime divisors of fixed integers built from k-factorials. Candidates from
//! the criterion are always re-checked against the determinant itself.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{e_factorial, ExactInteger};
use crate::error::{precondition, Error, Result};
use crate::factor::{factor, Factorization};
use crate::field::{odd_primes_upto, PrimeModulus};
use crate::residue_matrix::{build_matrix, det_mod_p, det_mod_p_by_subgroup, kth_residues};

/// Default upper bound for prime sweeps.
pub const DEFAULT_SCAN_BOUND: u64 = 1000;

/// Candidates with `(p-1)/k` up to this size are re-checked by elimination.
pub const ELIMINATION_DIM_LIMIT: u64 = 600;

/// Candidates above this bound are not re-checked; the O(p) route would need
/// too much memory.
pub const VERIFY_PRIME_LIMIT: u64 = 1 << 26;

/// `head = (km)!_(k) + (km-1)!_(k)` and, for `l = 1..(m-1)/2`,
/// `(km-kl)!_(k)/(kl)!_(k) + (km-kl-1)!_(k)/(kl-1)!_(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionIntegers {
    pub k: u64,
    pub m: u64,
    pub head: ExactInteger,
    /// `quotients[l - 1]` is the entry for `l`.
    pub quotients: Vec<ExactInteger>,
}

impl CriterionIntegers {
    /// `("head", head)` followed by `("l=1", …)`, `("l=2", …)`, ….
    pub fn labelled(&self) -> impl Iterator<Item = (String, &ExactInteger)> {
        std::iter::once(("head".to_string(), &self.head)).chain(
            self.quotients
                .iter()
                .enumerate()
                .map(|(i, q)| (format!("l={}", i + 1), q)),
        )
    }

    /// True when `p` divides the head or one of the quotients.
    pub fn divisible_by(&self, p: u64) -> bool {
        let p = BigInt::from(p);
        self.labelled().any(|(_, v)| (v % &p).is_zero())
    }
}

fn exact_div(num: &BigInt, den: &BigInt) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return precondition(format!("{num} is not divisible by {den}"));
    }
    Ok(q)
}

pub fn criterion_integers(k: u64, m: u64) -> Result<CriterionIntegers> {
    if k < 2 {
        return precondition(format!("k = {k} must be at least 2"));
    }
    if m < 3 || m % 2 == 0 {
        return precondition(format!("m = {m} must be odd and at least 3"));
    }
    let head = e_factorial(k * m, k)? + e_factorial(k * m - 1, k)?;
    let quotients = (1..=(m - 1) / 2)
        .map(|l| {
            let first = exact_div(&e_factorial(k * m - k * l, k)?, &e_factorial(k * l, k)?)?;
            let second = exact_div(
                &e_factorial(k * m - k * l - 1, k)?,
                &e_factorial(k * l - 1, k)?,
            )?;
            Ok(first + second)
        })
        .collect::<Result<_>>()?;
    Ok(CriterionIntegers {
        k,
        m,
        head,
        quotients,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Found by computing determinants for every `p <= km+1`.
    SmallScan,
    /// A prime divisor of a criterion integer with `p > km+1`.
    CriterionFactor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMethod {
    Elimination,
    SubgroupCoefficients,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Member {
    pub p: u64,
    pub provenance: Provenance,
    pub checked_by: CheckMethod,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredInteger {
    pub label: String,
    pub value: String,
    /// `(prime, exponent)` with primes as decimal strings.
    pub factors: Vec<(String, u32)>,
    pub cofactors: Vec<String>,
}

impl FactoredInteger {
    fn new(label: String, value: &BigUint, f: &Factorization) -> Self {
        Self {
            label,
            value: value.to_string(),
            factors: f.factors.iter().map(|(q, e)| (q.to_string(), *e)).collect(),
            cofactors: f.cofactors.iter().map(|c| c.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EkmReport {
    pub k: u64,
    pub m: u64,
    /// Sorted members of `E_k(m)`.
    pub members: Vec<u64>,
    pub provenance: Vec<Member>,
    pub criterion: Vec<FactoredInteger>,
    /// Criterion primes whose determinant turned out nonzero mod p.
    pub rejected_candidates: Vec<u64>,
    /// Criterion primes too large to re-check.
    pub unverified_candidates: Vec<String>,
    pub unfactored_cofactors: Vec<String>,
}

impl EkmReport {
    /// Members up to `bound`, the part a bounded sweep can see.
    pub fn restricted(&self, bound: u64) -> Vec<u64> {
        self.members.iter().copied().filter(|&p| p <= bound).collect()
    }

    /// True when every candidate was resolved and confirmed.
    pub fn is_clean(&self) -> bool {
        self.rejected_candidates.is_empty()
            && self.unverified_candidates.is_empty()
            && self.unfactored_cofactors.is_empty()
    }
}

/// `p | S_{m+N,k}(-1,p)` by Gaussian elimination, `N = (p-1)/k`.
pub fn divides_determinant(k: u64, m: u64, p: &PrimeModulus) -> Result<bool> {
    let res = kth_residues(p, k)?;
    let n = m + res.len() as u64;
    Ok(det_mod_p(build_matrix(&res, n, -1)?) == 0)
}

fn check_candidate(k: u64, m: u64, p: &PrimeModulus) -> Result<(bool, CheckMethod)> {
    let big_n = (p.p() - 1) / k;
    if big_n <= ELIMINATION_DIM_LIMIT {
        return Ok((divides_determinant(k, m, p)?, CheckMethod::Elimination));
    }
    let res = kth_residues(p, k)?;
    let det = det_mod_p_by_subgroup(&res, m + big_n, -1)?;
    Ok((det == 0, CheckMethod::SubgroupCoefficients))
}

fn admissible(k: u64, p: u64) -> bool {
    (p - 1) % (2 * k) == 0
}

/// `E_k(m)` from the criterion: a determinant sweep for `p <= km+1`, plus
/// the prime divisors `p ≡ 1 (mod 2k)`, `p > km+1` of the criterion
/// integers, each re-checked against the determinant.
pub fn ekm_by_criterion(k: u64, m: u64) -> Result<EkmReport> {
    let ints = criterion_integers(k, m)?;
    let threshold = k * m + 1;

    let small: Vec<Member> = odd_primes_upto(threshold)
        .into_par_iter()
        .filter(|&p| admissible(k, p))
        .map(|p| {
            let pm = PrimeModulus::new(p)?;
            Ok(divides_determinant(k, m, &pm)?.then_some(Member {
                p,
                provenance: Provenance::SmallScan,
                checked_by: CheckMethod::Elimination,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut criterion = Vec::new();
    let mut unfactored = Vec::new();
    let mut candidates: Vec<BigUint> = Vec::new();
    for (label, value) in ints.labelled() {
        let (sign, magnitude) = (value.sign(), value.magnitude());
        if sign != Sign::Plus {
            return precondition(format!("criterion integer {label} is not positive"));
        }
        let f = factor(magnitude);
        criterion.push(FactoredInteger::new(label, magnitude, &f));
        unfactored.extend(f.cofactors.iter().map(|c| c.to_string()));
        candidates.extend(f.primes().cloned());
    }
    candidates.sort();
    candidates.dedup();

    let mut unverified = Vec::new();
    let mut checkable = Vec::new();
    for q in candidates {
        match q.to_u64() {
            Some(p) if p <= threshold || !admissible(k, p) => {}
            Some(p) if p <= VERIFY_PRIME_LIMIT => checkable.push(p),
            _ => {
                if (&q - 1u32) % (2 * k) == BigUint::zero() {
                    unverified.push(q.to_string());
                }
            }
        }
    }
    let checked = checkable
        .into_par_iter()
        .map(|p| {
            let pm = PrimeModulus::new(p)?;
            Ok((p, check_candidate(k, m, &pm)?))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut provenance = small;
    let mut rejected = Vec::new();
    for (p, (divides, method)) in checked {
        if divides {
            provenance.push(Member {
                p,
                provenance: Provenance::CriterionFactor,
                checked_by: method,
            });
        } else {
            rejected.push(p);
        }
    }
    provenance.sort_by_key(|m| m.p);
    Ok(EkmReport {
        k,
        m,
        members: provenance.iter().map(|m| m.p).collect(),
        provenance,
        criterion,
        rejected_candidates: rejected,
        unverified_candidates: unverified,
        unfactored_cofactors: unfactored,
    })
}

/// Every prime `p <= bound` with `2k | p-1` and `p | S_{m+N,k}(-1,p)`, by
/// direct elimination.
pub fn ekm_by_scan(k: u64, m: u64, bound: u64) -> Result<Vec<u64>> {
    if k < 2 {
        return Err(Error::Precondition(format!("k = {k} must be at least 2")));
    }
    if bound < 3 {
        return precondition(format!("scan bound {bound} must be at least 3"));
    }
    let mut found = odd_primes_upto(bound)
        .into_par_iter()
        .filter(|&p| admissible(k, p))
        .map(|p| {
            let pm = PrimeModulus::new(p)?;
            Ok(divides_determinant(k, m, &pm)?.then_some(p))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();
    found.sort_unstable();
    Ok(found)
}
