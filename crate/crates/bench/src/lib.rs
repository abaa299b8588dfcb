//! Inputs shared by the benchmarks.

use resdet::{build_matrix, kth_residues, PrimeModulus, ResidueMatrix};

/// Primes `≡ 1 (mod 4)` giving quadratic-residue matrices of dimension 14 to 498.
pub const PRIMES: [u64; 5] = [29, 101, 257, 509, 997];

/// `S_{m+N,2}(-1,p)`, the skew-symmetric matrix behind `E_2(m)`.
pub fn skew_matrix(p: u64, m: u64) -> ResidueMatrix {
    let pm = PrimeModulus::new(p).expect("odd prime");
    let res = kth_residues(&pm, 2).expect("p ≡ 1 mod 4");
    let n = m + res.len() as u64;
    build_matrix(&res, n, -1).expect("d = -1 is a unit")
}
