//! Exact integer polynomial algebra for polynomial Cunningham chains.
//!
//! The crate is organized bottom-up:
//!
//! * [`polyz`]: dense polynomials over the integers with exact arithmetic.
//! * [`factorize`]: complete factorization over the rationals (Zassenhaus:
//!   modular factorization, Hensel lifting, subset recombination) and the
//!   quadrinomial structure checks.
//! * [`certify`]: cheap irreducibility certificates and the decision
//!   pipeline everything else calls.
//! * [`chains`]: polynomial Cunningham chains, the explicit families with a
//!   single reducible term, and numeric root location.
//! * [`conjecture`]: scans of `x^j + ... + x + m`.
//! * [`intchains`]: classic integer Cunningham chains and primality testing.

pub mod arith;
pub mod certify;
pub mod chains;
pub mod conjecture;
mod error;
pub mod factorize;
pub mod intchains;
pub mod polyz;

pub use certify::{decide_irreducible, Certificate, IrreducibilityVerdict};
pub use chains::{ChainKind, ChainReport, FamilyParams};
pub use error::{Error, Result};
pub use factorize::{factor_over_rationals, Factorization, Quadrinomial};
pub use intchains::IntChain;
pub use polyz::{Polynomial, Rational};
