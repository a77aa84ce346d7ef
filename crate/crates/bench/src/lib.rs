//! Shared inputs for the criterion benchmarks.

use cunningham::chains::{closed_form_term, ChainKind, FamilyParams};
use cunningham::Polynomial;

/// `f_n` of a family chain.
pub fn family_term(kind: ChainKind, m: u64, k: u64, n: usize) -> Polynomial {
    let params = FamilyParams::new(kind, m, k).expect("valid bench parameters");
    closed_form_term(&params, n).expect("n >= 1")
}

/// A product of several family terms, which the factorizer has to pull apart.
pub fn family_product(m: u64, k: u64, ns: &[usize]) -> Polynomial {
    ns.iter()
        .map(|&n| family_term(ChainKind::First, m, k, n))
        .product()
}
