//! Property suites over the whole library, each run with a fixed seed so a
//! failure reproduces exactly.

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::field::{
    chi_k, legendre, legendre_residue, odd_primes_upto, primitive_root, sqrt_mod, CharClass,
    PrimeModulus,
};
use crate::residue_matrix::{
    build_matrix, det_exact, det_mod_p, kth_residues, pfaffian_mod_p, structured_det, ModMatrix,
};
use crate::verify::{sweep, Summary, SweepOptions, TheoremId};

const SEED: u64 = 0x5eed_5e1f;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: u64,
    pub failures: u64,
    /// Description of the first failing case.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        self.first_failure = self.first_failure.or(other.first_failure);
        self
    }

    fn report(self, name: &'static str) -> SuiteReport {
        SuiteReport {
            name,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

type Suite = fn() -> Result<Tally>;

const SUITES: [(&str, Suite); 15] = [
    ("euler-criterion", euler_criterion),
    ("legendre-multiplicativity", multiplicativity),
    ("chi-k-consistency", chi_k_consistency),
    ("sqrt-mod", sqrt_mod_exhaustive),
    ("quadratic-reciprocity", || from_sweep(TheoremId::QR, 97)),
    ("half-factorial-symbol", || from_sweep(TheoremId::L23, 997)),
    ("double-factorial-symbol", || from_sweep(TheoremId::L24, 997)),
    ("square-difference-product", || from_sweep(TheoremId::L25, 997)),
    ("double-factorial-ratio", || {
        Ok(from_sweep(TheoremId::E2, 997)?.merge(from_sweep(TheoremId::E3, 997)?))
    }),
    ("structured-determinant", structured_determinant),
    ("pfaffian-squared", pfaffian_squared),
    ("ordering-invariance", ordering_invariance),
    ("low-exponent-vanishing", low_exponent_vanishing),
    ("residue-product", residue_product),
    ("half-exponent-symbol", half_exponent_symbol),
];

/// Names of the suites in run order.
pub fn suite_names() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|(name, _)| *name)
}

/// Runs every suite.
pub fn run_all() -> Result<Vec<SuiteReport>> {
    SUITES.iter().map(|(name, f)| Ok(f()?.report(name))).collect()
}

/// Runs a single suite by name.
pub fn run(name: &str) -> Option<Result<SuiteReport>> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(n, f)| f().map(|t| t.report(n)))
}

fn from_sweep(id: TheoremId, pmax: u64) -> Result<Tally> {
    let opts = SweepOptions {
        pmax: Some(pmax),
        ..Default::default()
    };
    let records = sweep(id, &opts)?;
    let s = Summary::of(&records);
    Ok(Tally {
        cases: s.holds + s.violated,
        failures: s.violated,
        first_failure: records
            .iter()
            .find(|r| r.verdict == crate::verify::Verdict::Violated)
            .map(|r| format!("{r:?}")),
    })
}

fn primes(bound: u64) -> Vec<PrimeModulus> {
    odd_primes_upto(bound)
        .into_iter()
        .map(|p| PrimeModulus::new(p).expect("odd prime"))
        .collect()
}

fn euler_criterion() -> Result<Tally> {
    let mut t = Tally::default();
    for p in primes(101) {
        for a in 1..p.p() {
            let e = p.pow(a, (p.p() - 1) / 2);
            let l = legendre(a as i64, &p);
            let expected = if l == 1 { 1 } else { p.p() - 1 };
            t.check(e == expected, || format!("p={} a={a}", p.p()));
        }
    }
    Ok(t)
}

fn multiplicativity() -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut t = Tally::default();
    for p in primes(997) {
        for _ in 0..20 {
            let a: i64 = rng.gen_range(-10_000..10_000);
            let b: i64 = rng.gen_range(-10_000..10_000);
            let ok = legendre(a * b, &p) == legendre(a, &p) * legendre(b, &p);
            t.check(ok, || format!("p={} a={a} b={b}", p.p()));
        }
    }
    Ok(t)
}

fn chi_k_consistency() -> Result<Tally> {
    let mut t = Tally::default();
    for p in primes(101) {
        let g = primitive_root(&p);
        for k in (2..=(p.p() - 1) / 2).filter(|k| (p.p() - 1) % k == 0) {
            let mut x = 1;
            for e in 0..p.p() - 1 {
                let one = chi_k(x as i64, k, &p)?.class == CharClass::One;
                t.check(one == (e % k == 0), || format!("p={} k={k} t={e}", p.p()));
                x = p.mul(x, g);
            }
        }
    }
    Ok(t)
}

fn sqrt_mod_exhaustive() -> Result<Tally> {
    let mut t = Tally::default();
    for p in primes(101) {
        for a in 0..p.p() {
            let root = sqrt_mod(a, &p);
            let ok = match root {
                Some(r) => p.mul(r, r) == a && r <= p.p() - r,
                None => legendre_residue(a, &p) == -1,
            };
            t.check(ok, || format!("p={} a={a} root={root:?}", p.p()));
        }
    }
    Ok(t)
}

fn structured_determinant() -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut t = Tally::default();
    let moduli = [13, 17, 101].map(|p| PrimeModulus::new(p).expect("prime"));
    for case in 0..1200 {
        let p = &moduli[case % moduli.len()];
        let n = rng.gen_range(1..=8usize);
        let draw = |rng: &mut ChaCha8Rng| (0..n).map(|_| rng.gen_range(0..p.p())).collect::<Vec<_>>();
        let coeffs = draw(&mut rng);
        let xs = draw(&mut rng);
        let ys = draw(&mut rng);
        let m = ModMatrix::from_fn(p.p(), n, |i, j| {
            let x = p.mul(xs[i], ys[j]);
            coeffs.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
        });
        let ok = det_mod_p(&m) == structured_det(&coeffs, &xs, &ys, p)?;
        t.check(ok, || format!("p={} coeffs={coeffs:?} X={xs:?} Y={ys:?}", p.p()));
    }
    Ok(t)
}

fn pfaffian_squared() -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut t = Tally::default();
    let moduli = [3, 5, 13, 101, 65_521, 4_294_967_291].map(|p| PrimeModulus::new(p).expect("prime"));
    for case in 0..600 {
        let p = &moduli[case % moduli.len()];
        let dim = 2 * rng.gen_range(1..=8usize);
        let mut upper = vec![0u64; dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                // Small values now and then so singular cases occur.
                upper[i * dim + j] = if rng.gen_bool(0.3) { rng.gen_range(0..2) } else { rng.gen_range(0..p.p()) };
            }
        }
        let m = ModMatrix::from_fn(p.p(), dim, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => upper[i * dim + j],
            std::cmp::Ordering::Greater => p.neg(upper[j * dim + i]),
            std::cmp::Ordering::Equal => 0,
        });
        let pf = pfaffian_mod_p(&m)?;
        let ok = p.mul(pf, pf) == det_mod_p(&m);
        t.check(ok, || format!("p={} dim={dim} entries={upper:?}", p.p()));
    }
    Ok(t)
}

fn ordering_invariance() -> Result<Tally> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut t = Tally::default();
    let pool: Vec<(PrimeModulus, u64)> = primes(61)
        .into_iter()
        .flat_map(|p| {
            let pv = p.p();
            (2..=(pv - 1) / 2)
                .filter(move |k| (pv - 1) % k == 0)
                .map(move |k| (p.clone(), k))
        })
        .collect();
    for _ in 0..300 {
        let (p, k) = pool.choose(&mut rng).expect("nonempty pool");
        let res = kth_residues(p, *k)?;
        let n = rng.gen_range(0..2 * p.p());
        let d = loop {
            let d: i64 = rng.gen_range(-(p.p() as i64)..p.p() as i64);
            if p.reduce(d) != 0 {
                break d;
            }
        };
        let mut order = res.alphas().to_vec();
        order.shuffle(&mut rng);
        let shuffled = res.reordered(order.clone())?;
        let ok = det_mod_p(build_matrix(&res, n, d)?) == det_mod_p(build_matrix(&shuffled, n, d)?);
        t.check(ok, || format!("p={} k={k} n={n} d={d} order={order:?}", p.p()));
    }
    Ok(t)
}

fn low_exponent_vanishing() -> Result<Tally> {
    let tallies = primes(23)
        .into_par_iter()
        .filter(|p| p.p() >= 5)
        .map(|p| {
            let mut t = Tally::default();
            let res = kth_residues(&p, 2)?;
            let pv = p.p() as i64;
            for n in 0..(p.p() - 3) / 2 {
                for d in (-pv + 1..pv).filter(|&d| d != 0) {
                    let det = det_exact(&res, n, d)?;
                    t.check(det.is_zero(), || format!("p={pv} n={n} d={d} det={det}"));
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}

fn residue_product() -> Result<Tally> {
    let mut t = Tally::default();
    for p in primes(200) {
        for k in (2..=(p.p() - 1) / 2).filter(|k| (p.p() - 1) % k == 0) {
            let res = kth_residues(&p, k)?;
            let prod = res.alphas().iter().fold(1, |acc, &a| p.mul(acc, a));
            let ok = prod == p.sign(res.len() as u64 + 1);
            t.check(ok, || format!("p={} k={k} product={prod}", p.p()));
        }
    }
    Ok(t)
}

/// `((S_{(p-1)/2,2}(d,p))/p)` is `(-1/p)` for square d and 0 otherwise.
fn half_exponent_symbol() -> Result<Tally> {
    let tallies = primes(199)
        .into_par_iter()
        .filter(|p| p.p() >= 5)
        .map(|p| {
            let mut t = Tally::default();
            let res = kth_residues(&p, 2)?;
            let n = (p.p() - 1) / 2;
            for d in 1..p.p() as i64 {
                let symbol = legendre_residue(det_mod_p(build_matrix(&res, n, d)?), &p);
                let want = if legendre(d, &p) == 1 { legendre(-1, &p) } else { 0 };
                t.check(symbol == want, || format!("p={} d={d} symbol={symbol}", p.p()));
            }
            Ok(t)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(tallies.into_iter().fold(Tally::default(), Tally::merge))
}
