//! Determinants `S_{n,k}(d,p) = det[(α_i + d·α_j)^n]` over the k-th power
//! residues `α` modulo an odd prime p, the closed forms for their residue
//! properties, and sweeps that check each closed form against brute force.

pub mod closed_forms;
pub mod ekm;
pub mod error;
pub mod factor;
pub mod field;
pub mod residue_matrix;
pub mod selftest;
pub mod verify;

pub use closed_forms::{
    conjecture63_rhs, conjecture64_rhs, e_factorial, e_factorial_mod, lemma26_decomposition,
    theorem3_rhs, theorem4_rhs, ExactInteger, LemmaContext, LemmaDecomposition,
};
pub use ekm::{criterion_integers, ekm_by_criterion, ekm_by_scan, CriterionIntegers, EkmReport};
pub use error::{Error, Result};
pub use factor::{factor, Factorization};
pub use field::{chi_k, legendre, sqrt_mod, CharClass, CharacterValue, PrimeModulus};
pub use residue_matrix::{
    build_matrix, det_exact, det_mod_p, kth_residues, pfaffian_mod_p, residue_diff_product,
    ModMatrix, ResidueList, ResidueMatrix,
};
pub use verify::{sweep, Summary, SweepOptions, TheoremId, VerificationRecord, Verdict};
