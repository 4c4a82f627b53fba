//! Exact computer algebra for the q-meromorphic Weyl algebra, the algebra on
//! generators `x`, `y` over `Q[q]` subject to `yx = q xy + x^2`.
//!
//! - [`qpoly`]: polynomials in `q` and q-combinatorics.
//! - [`freealg`]: words and the rewriting engine producing normal forms.
//! - [`normal`]: normal coordinates `c(a,b,k)` and normal polynomials `N(A,k,q)`.
//! - [`sympow`]: products in the symmetric powers `Sym^n`.
//! - [`qrep`]: operator representations and q-calculus identities.
//! - [`verify`]: the exhaustive and randomized agreement sweeps.

pub mod error;
pub mod freealg;
pub mod guards;
pub mod normal;
pub mod qpoly;
pub mod qrep;
pub mod sympow;
pub mod verify;
pub mod worked;

pub use error::{Error, Result};
pub use freealg::{
    monomial, multiply, normal_order, specialize_q, Letter, MWElement, Strategy, Word,
};
pub use guards::Guards;
pub use normal::{
    c_oracle, c_recursive, c_subsets, c_tform, mk_count, npoly_oracle, npoly_q, npoly_q1,
    npoly_q_alt, Composition, MonomialSeq,
};
pub use qpoly::{qbracket, qfactorial, qrising, rising, BigRational, Permutation, QPoly};
pub use sympow::{FactorGrid, SymElement, SymMonomial};
