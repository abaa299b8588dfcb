//! Verification sweeps: each statement is checked by computing both sides
//! independently over a range of primes, one record per parameter tuple.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{
    conjecture63_rhs, conjecture64_rhs, e_factorial_mod, sqrt_branch, theorem3_rhs,
    theorem3_rhs_quadratic, theorem4_rhs, LemmaContext,
};
use crate::ekm::criterion_integers;
use crate::error::{Error, Result};
use crate::field::{
    chi_k, count_nonresidues_quarter, legendre, legendre_residue, odd_primes_upto, sqrt_mod,
    CharClass, PrimeModulus,
};
use crate::residue_matrix::{
    build_matrix, det_mod_p, kth_residues, pfaffian_mod_p, residue_diff_product,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TheoremId {
    /// `S_{n,k}(d,p) ≡ 0` when `chi_k(d) = -1` and `n ≡ N (mod 2)`.
    T1,
    /// The excluded Legendre value of `S_{n,k}(d,p)` for odd n, `chi_k(d) = 1`.
    T2,
    /// Legendre symbol of `√S_{1+N,k}(-1,p)`.
    T3,
    /// Legendre symbol of `√S_{3+N,k}(-1,p)`.
    T4,
    /// `p ∈ E_k(m)` iff p divides a criterion integer, for `p > km+1`.
    T5,
    C63,
    C64,
    /// `(((p-1)/2)!/p) = (2/p)` for `p ≡ 1 (mod 4)`.
    L23,
    /// `(((p-3)/2)!!/p) = (-1)^{#nonresidues below p/4}`.
    L24,
    /// `∏_{i<j≤(p-1)/2} (j²-i²)` mod p.
    L25,
    /// `S_{m,k}(d,p) ≡ a²b`.
    L26,
    /// The `k = 2` form of T3.
    E1,
    /// `(((p-1)/2)!!/p) = (((p-3)/2)!!/p)·(2/p)`.
    E2,
    /// `(T((p-1)/2)/p) = (2/p)`.
    E3,
    /// Quadratic reciprocity.
    QR,
}

impl TheoremId {
    pub const ALL: [TheoremId; 15] = [
        Self::T1,
        Self::T2,
        Self::T3,
        Self::T4,
        Self::T5,
        Self::C63,
        Self::C64,
        Self::L23,
        Self::L24,
        Self::L25,
        Self::L26,
        Self::E1,
        Self::E2,
        Self::E3,
        Self::QR,
    ];

    pub fn default_pmax(self) -> u64 {
        use TheoremId::*;
        match self {
            T1 | T2 | L26 => 200,
            T3 | T4 | E1 => 500,
            T5 | C63 | C64 => 1000,
            L23 | L24 | L25 | E2 | E3 => 997,
            QR => 97,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    NotEqual,
    Iff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Int(i64),
    Bool(bool),
}

impl From<i8> for Value {
    fn from(v: i8) -> Self {
        Value::Int(v.into())
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v as i64)
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Violated,
    Inapplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationRecord {
    pub theorem: TheoremId,
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub relation: Relation,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRecord {
    fn new(theorem: TheoremId, p: u64, relation: Relation) -> Self {
        Self {
            theorem,
            p,
            q: None,
            k: None,
            m: None,
            n: None,
            d: None,
            lhs: None,
            rhs: None,
            relation,
            verdict: Verdict::Inapplicable,
            note: None,
        }
    }

    fn k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    fn n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    fn d(mut self, d: i64) -> Self {
        self.d = Some(d);
        self
    }

    fn judge(mut self, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let holds = match self.relation {
            Relation::Equal | Relation::Iff => lhs == rhs,
            Relation::NotEqual => lhs != rhs,
        };
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self.verdict = if holds { Verdict::Holds } else { Verdict::Violated };
        self
    }

    fn inapplicable(mut self, why: impl Into<String>) -> Self {
        self.verdict = Verdict::Inapplicable;
        self.note = Some(why.into());
        self
    }

    fn sort_key(&self) -> (u64, u64, u64, u64, u64, i64) {
        (
            self.p,
            self.q.unwrap_or(0),
            self.k.unwrap_or(0),
            self.m.unwrap_or(0),
            self.n.unwrap_or(0),
            self.d.unwrap_or(0),
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub holds: u64,
    pub violated: u64,
    pub inapplicable: u64,
}

impl Summary {
    pub fn of(records: &[VerificationRecord]) -> Self {
        let mut s = Self::default();
        for r in records {
            match r.verdict {
                Verdict::Holds => s.holds += 1,
                Verdict::Violated => s.violated += 1,
                Verdict::Inapplicable => s.inapplicable += 1,
            }
        }
        s
    }
}

/// Range flags. `None` means the theorem's default.
#[derive(Debug, Clone, Default)]
pub struct SweepOptions {
    pub pmax: Option<u64>,
    pub klist: Option<Vec<u64>>,
    /// Exponents `n` for T1, T2, L26; odd `m` for T5.
    pub mlist: Option<Vec<u64>>,
    /// Explicit `d` values; otherwise every `d` in `[1, p-1]` meeting the
    /// character hypothesis.
    pub dlist: Option<Vec<i64>>,
}

/// Runs one sweep; records are sorted by `(p, q, k, m, n, d)`.
pub fn sweep(id: TheoremId, opts: &SweepOptions) -> Result<Vec<VerificationRecord>> {
    let pmax = opts.pmax.unwrap_or_else(|| id.default_pmax());
    use TheoremId::*;
    let mut records = match id {
        T1 | T2 | L26 => per_prime(pmax, |p| sweep_range_theorem(id, p, opts))?,
        T3 | T4 => per_prime(pmax, |p| sweep_sqrt_theorem(id, p, opts))?,
        T5 => sweep_criterion(pmax, opts)?,
        C63 | C64 | E1 => per_prime(pmax, |p| quadratic_sqrt(id, p))?,
        L23 | L24 | L25 | E2 | E3 => per_prime(pmax, |p| factorial_identity(id, p))?,
        QR => reciprocity(pmax),
    };
    records.par_sort_by_key(VerificationRecord::sort_key);
    Ok(records)
}

fn per_prime(
    pmax: u64,
    f: impl Fn(&PrimeModulus) -> Result<Vec<VerificationRecord>> + Sync,
) -> Result<Vec<VerificationRecord>> {
    let chunks = odd_primes_upto(pmax)
        .into_par_iter()
        .map(|p| f(&PrimeModulus::new(p)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// `k` with `2 <= k <= (p-1)/2`, `k | p-1`, within `klist` when given.
fn orders(p: u64, klist: &Option<Vec<u64>>) -> Vec<u64> {
    (2..=(p - 1) / 2)
        .filter(|k| (p - 1) % k == 0)
        .filter(|k| klist.as_ref().map_or(true, |l| l.contains(k)))
        .collect()
}

fn wanted(list: &Option<Vec<u64>>, v: u64) -> bool {
    list.as_ref().map_or(true, |l| l.contains(&v))
}

/// `d` values with the given character classes, or the explicit list.
fn d_values(p: &PrimeModulus, k: u64, classes: &[CharClass], dlist: &Option<Vec<i64>>) -> Result<Vec<(i64, bool)>> {
    match dlist {
        Some(list) => list
            .iter()
            .map(|&d| Ok((d, classes.contains(&chi_k(d, k, p)?.class))))
            .collect(),
        None => (1..p.p() as i64)
            .map(|d| Ok((d, classes.contains(&chi_k(d, k, p)?.class))))
            .filter(|r| !matches!(r, Ok((_, false))))
            .collect(),
    }
}

fn sweep_range_theorem(id: TheoremId, p: &PrimeModulus, opts: &SweepOptions) -> Result<Vec<VerificationRecord>> {
    let pv = p.p();
    let mut out = Vec::new();
    for k in orders(pv, &opts.klist) {
        if pv <= 2 * k + 1 {
            continue;
        }
        let big_n = (pv - 1) / k;
        let (relation, classes) = match id {
            TheoremId::T1 => (Relation::Equal, vec![CharClass::MinusOne]),
            TheoremId::T2 => {
                if big_n % 2 != 0 {
                    continue;
                }
                (Relation::NotEqual, vec![CharClass::One])
            }
            _ => (Relation::Equal, vec![CharClass::One, CharClass::MinusOne]),
        };
        let ns: Vec<u64> = (big_n + 1..2 * big_n)
            .filter(|&n| match id {
                TheoremId::T1 => n % 2 == big_n % 2,
                TheoremId::T2 => n % 2 == 1,
                _ => true,
            })
            .filter(|&n| wanted(&opts.mlist, n))
            .collect();
        if ns.is_empty() {
            continue;
        }
        let res = kth_residues(p, k)?;
        let ctx = match id {
            TheoremId::L26 => Some(LemmaContext::new(p, k)?),
            _ => None,
        };
        for (d, ok) in d_values(p, k, &classes, &opts.dlist)? {
            for &n in &ns {
                let rec = VerificationRecord::new(id, pv, relation).k(k).n(n).d(d);
                if !ok || p.reduce(d) == 0 {
                    out.push(rec.inapplicable(format!("chi_{k}(d) outside the hypothesis")));
                    continue;
                }
                let det = det_mod_p(build_matrix(&res, n, d)?);
                out.push(match id {
                    TheoremId::T1 => rec.judge(det, 0u64),
                    TheoremId::T2 => rec.judge(legendre_residue(det, p), excluded_value(k, d, p)),
                    _ => {
                        let dec = ctx.as_ref().expect("context built for L26").decompose(n, d)?;
                        rec.judge(det, dec.product)
                    }
                });
            }
        }
    }
    Ok(out)
}

/// The value the Legendre symbol of `S_{n,k}(d,p)` never takes.
fn excluded_value(k: u64, d: i64, p: &PrimeModulus) -> i8 {
    if k % 2 == 0 || p.p() % (4 * k) == 1 {
        -1
    } else {
        legendre(d, p)
    }
}

fn sweep_sqrt_theorem(id: TheoremId, p: &PrimeModulus, opts: &SweepOptions) -> Result<Vec<VerificationRecord>> {
    let pv = p.p();
    let mut out = Vec::new();
    for k in orders(pv, &opts.klist) {
        if (pv - 1) % (2 * k) != 0 {
            continue;
        }
        let big_n = (pv - 1) / k;
        let n = if id == TheoremId::T3 { 1 + big_n } else { 3 + big_n };
        let rec = VerificationRecord::new(id, pv, Relation::Equal).k(k).n(n).d(-1);
        if sqrt_branch(k, p).is_err() {
            out.push(rec.inapplicable("k odd and p ≡ 2k+1 (mod 4k)"));
            continue;
        }
        let res = kth_residues(p, k)?;
        let pf = pfaffian_mod_p(build_matrix(&res, n, -1)?)?;
        let t = legendre_residue(residue_diff_product(&res), p);
        let rhs = if id == TheoremId::T3 {
            theorem3_rhs(k, p, t)?
        } else {
            theorem4_rhs(k, p, t)?
        };
        out.push(rec.judge(legendre_residue(pf, p), rhs));
    }
    Ok(out)
}

fn sweep_criterion(pmax: u64, opts: &SweepOptions) -> Result<Vec<VerificationRecord>> {
    let ks = opts.klist.clone().unwrap_or_else(|| vec![2, 3]);
    let ms = opts.mlist.clone().unwrap_or_else(|| vec![3, 5, 7]);
    let mut jobs = Vec::new();
    for &k in &ks {
        for &m in &ms {
            if m % 2 == 0 {
                return Err(Error::Precondition(format!("m = {m} must be odd")));
            }
            // E_k(1) is empty: nothing divides, at any p.
            let (ints, floor) = if m == 1 {
                (None, 2)
            } else {
                (Some(criterion_integers(k, m)?), k * m + 1)
            };
            for p in odd_primes_upto(pmax) {
                if p > floor && (p - 1) % (2 * k) == 0 {
                    jobs.push((k, m, p, ints.clone()));
                }
            }
        }
    }
    jobs.into_par_iter()
        .map(|(k, m, p, ints)| {
            let pm = PrimeModulus::new(p)?;
            let res = kth_residues(&pm, k)?;
            let n = m + res.len() as u64;
            let divides = det_mod_p(build_matrix(&res, n, -1)?) == 0;
            let predicted = ints.map_or(false, |i| i.divisible_by(p));
            let mut rec = VerificationRecord::new(TheoremId::T5, p, Relation::Iff).k(k).n(n).d(-1);
            rec.m = Some(m);
            Ok(rec.judge(divides, predicted))
        })
        .collect()
}

fn quadratic_sqrt(id: TheoremId, p: &PrimeModulus) -> Result<Vec<VerificationRecord>> {
    let pv = p.p();
    if pv % 4 != 1 {
        return Ok(Vec::new());
    }
    let res = kth_residues(p, 2)?;
    let big_n = res.len() as u64;
    let n = if id == TheoremId::C64 { 3 + big_n } else { 1 + big_n };
    let rec = VerificationRecord::new(id, pv, Relation::Equal).k(2).n(n).d(-1);
    let m = build_matrix(&res, n, -1)?;
    let rec = match id {
        TheoremId::E1 => {
            let t = legendre_residue(residue_diff_product(&res), p);
            rec.judge(legendre_residue(pfaffian_mod_p(m)?, p), theorem3_rhs_quadratic(p, t)?)
        }
        _ => {
            let rhs = if id == TheoremId::C63 {
                conjecture63_rhs(p)?
            } else {
                conjecture64_rhs(p)?
            };
            match sqrt_mod(det_mod_p(m), p) {
                Some(r) => rec.judge(legendre_residue(r, p), rhs),
                None => {
                    let mut rec = rec.judge(0i8, rhs);
                    rec.verdict = Verdict::Violated;
                    rec.note = Some("determinant is not a square mod p".into());
                    rec
                }
            }
        }
    };
    Ok(vec![rec])
}

fn factorial_identity(id: TheoremId, p: &PrimeModulus) -> Result<Vec<VerificationRecord>> {
    let pv = p.p();
    let rec = VerificationRecord::new(id, pv, Relation::Equal);
    if id != TheoremId::L25 && pv % 4 != 1 {
        return Ok(Vec::new());
    }
    let half = (pv - 1) / 2;
    let rec = match id {
        TheoremId::L23 => rec.judge(
            legendre_residue(e_factorial_mod(half, 1, p)?, p),
            legendre(2, p),
        ),
        TheoremId::L24 => {
            let sign: i8 = if count_nonresidues_quarter(p)? % 2 == 0 { 1 } else { -1 };
            rec.judge(legendre_residue(e_factorial_mod(half - 1, 2, p)?, p), sign)
        }
        TheoremId::L25 => {
            let mut lhs = 1;
            for j in 1..=half {
                let j2 = p.mul(j, j);
                for i in 1..j {
                    lhs = p.mul(lhs, p.sub(j2, p.mul(i, i)));
                }
            }
            let rhs = if pv % 4 == 1 {
                p.neg(e_factorial_mod(half, 1, p)?)
            } else {
                1
            };
            rec.judge(lhs, rhs)
        }
        TheoremId::E2 => rec.judge(
            legendre_residue(e_factorial_mod(half, 2, p)?, p),
            legendre_residue(e_factorial_mod(half - 1, 2, p)?, p) * legendre(2, p),
        ),
        _ => {
            let res = kth_residues(p, 2)?;
            rec.k(2)
                .judge(legendre_residue(residue_diff_product(&res), p), legendre(2, p))
        }
    };
    Ok(vec![rec])
}

fn reciprocity(pmax: u64) -> Vec<VerificationRecord> {
    let primes = odd_primes_upto(pmax);
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            let (pp, qq) = (
                PrimeModulus::new(p).expect("odd prime"),
                PrimeModulus::new(q).expect("odd prime"),
            );
            let lhs = legendre(q as i64, &pp) * legendre(p as i64, &qq);
            let rhs: i8 = if ((p - 1) / 2 * ((q - 1) / 2)) % 2 == 0 { 1 } else { -1 };
            let mut rec = VerificationRecord::new(TheoremId::QR, p, Relation::Equal);
            rec.q = Some(q);
            out.push(rec.judge(lhs, rhs));
        }
    }
    out
}
