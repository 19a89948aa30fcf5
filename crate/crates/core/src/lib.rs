//! Exact symplectic Smith normal form.
//!
//! Every `g ∈ Sp(n, Q)` factors as
//!
//! ```text
//! g = σ · diag(d_1, ..., d_n, 1/d_1, ..., 1/d_n) · σ'
//! ```
//!
//! with `σ, σ' ∈ Sp(n, Z)` and a unique chain of positive integers
//! `d_1 | d_2 | ... | d_n`. This crate computes that factorization with
//! arbitrary-precision arithmetic and auditable witnesses, along with the
//! ordinary Smith normal form over `Z`, the action of `Sp(n, Z)` on
//! primitive vectors, double-coset comparison and per-prime exponents.
//!
//! ```
//! use sympsnf::{symp_smith, RatMatrix};
//!
//! // diag(1/2, 2) lies in the double coset of diag(2, 1/2)
//! let g = RatMatrix::from_i64_pairs(&[&[(1, 2), (0, 1)], &[(0, 1), (2, 1)]]).unwrap();
//! let dec = symp_smith(&g).unwrap();
//! assert_eq!(dec.d, vec![2.into()]);
//! assert_eq!(dec.reconstruct(), g);
//! ```
//!
//! The guide under `book/` walks through the mathematics; its code samples
//! are compiled as doc-tests of this crate.

pub mod decomposition;
pub mod error;
pub mod exact;
pub mod instances;
pub mod local;
pub mod snf;
pub mod sympgen;

pub use decomposition::{
    double_coset_equal, double_coset_invariant, find_good_primitive, step1_fix_e1, step2_clear_alpha_row, step3_fix_f1,
    symp_smith, symp_smith_integral, symp_smith_integral_levels, torus_matrix, verify_decomposition,
    ClaimedDecomposition, DenominatorScale, IntegralSympSmith, SympSmithDecomposition, VerificationReport,
};
pub use error::{Error, Result};
pub use exact::{
    block_parts, content, is_primitive, is_symplectic, mp_scale, omega, standard_form_matrix, symplectic_defect,
    BlockParts, IntMatrix, IntVector, Integer, Matrix, RatMatrix, Rational,
};
pub use local::{local_cartan_exponents, reconstruct_global, support_primes, LocalCartanExponents};
pub use snf::{complete_primitive_to_unimodular, minor_gcd_divisors, smith_normal_form, SnfDecomposition};
pub use sympgen::{
    embed_gl_block, embed_sl2_plane, random_sp, reduce_primitive, transvection_col, transvection_row, weyl_swap,
    Generator, SpElement, SpWord,
};

/// Chapters of the guide, compiled so that their snippets run as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/smith-form.md")]
    mod smith_form {}
    #[doc = include_str!("../../../book/src/generators.md")]
    mod generators {}
    #[doc = include_str!("../../../book/src/symplectic-smith.md")]
    mod symplectic_smith {}
    #[doc = include_str!("../../../book/src/local-exponents.md")]
    mod local_exponents {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
