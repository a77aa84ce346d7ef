//! The explicit families with exactly one reducible term, their closed
//! forms, and the auxiliary polynomials used to prove irreducibility.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ChainKind;
use crate::arith::prime_divisors;
use crate::error::{Error, Result};
use crate::intchains::primality::is_prime_u64;
use crate::polyz::Polynomial;

/// Parameters `(m, k)` of a family seed of the given kind.
///
/// First kind needs `m >= 2, k >= 1`; second kind needs `k >= 1` and `m^2 > k + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    kind: ChainKind,
    m: u64,
    k: u64,
}

impl FamilyParams {
    pub fn new(kind: ChainKind, m: u64, k: u64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParams(format!(
                "k must be at least 1, got {k}"
            )));
        }
        match kind {
            ChainKind::First if m < 2 => Err(Error::InvalidParams(format!(
                "first-kind family needs m >= 2, got {m}"
            ))),
            ChainKind::Second if (m as u128) * (m as u128) <= k as u128 + 1 => {
                Err(Error::InvalidParams(format!(
                    "second-kind family needs m^2 > k + 1, got m = {m}, k = {k}"
                )))
            }
            _ => Ok(Self { kind, m, k }),
        }
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    /// Index of the unique reducible term, `k + 1`.
    pub fn reducible_index(&self) -> usize {
        self.k as usize + 1
    }

    fn mb(&self) -> BigInt {
        BigInt::from(self.m)
    }

    fn kb(&self) -> BigInt {
        BigInt::from(self.k)
    }
}

/// The family's first term.
///
/// First kind: `m^2 x^{k+3} + m x^{k+2} + ... + m x + 1`.
/// Second kind: `m^2 x - (m^2 - k)`.
pub fn family_seed(params: &FamilyParams) -> Polynomial {
    closed_form_term(params, 1).expect("n = 1 is valid")
}

/// The `n`-th term of the family chain in closed form (`n >= 1`).
///
/// First kind: `m^2 x^{n+k+2} + m (x^{n+k+1} + ... + x^n) + x^{n-1} + ... + 1`.
/// Second kind: `m^2 x^n - (m^2 - k) x^{n-1} - x^{n-2} - ... - 1`.
pub fn closed_form_term(params: &FamilyParams, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParams("terms are indexed from 1".into()));
    }
    let m = params.mb();
    let m2 = &m * &m;
    let k = params.k as usize;
    let coeffs: Vec<BigInt> = match params.kind {
        ChainKind::First => (0..=n + k + 2)
            .map(|i| match i {
                _ if i < n => BigInt::one(),
                _ if i <= n + k + 1 => m.clone(),
                _ => m2.clone(),
            })
            .collect(),
        ChainKind::Second => (0..=n)
            .map(|i| match i {
                _ if i == n => m2.clone(),
                _ if i + 1 == n => -(&m2 - params.kb()),
                _ => -BigInt::one(),
            })
            .collect(),
    };
    Ok(Polynomial::from_coeffs(coeffs))
}

/// The two factors of the reducible first-kind term `f_{k+1}`:
/// `(m x^{k+1} + x^k + ... + x + 1, m x^{k+2} + 1)`.
pub fn product_formula_kind1(m: u64, k: u64) -> Result<(Polynomial, Polynomial)> {
    let params = FamilyParams::new(ChainKind::First, m, k)?;
    let k = k as usize;
    let mut low = vec![BigInt::one(); k + 2];
    low[k + 1] = params.mb();
    let high = Polynomial::from_terms([(k + 2, params.mb()), (0, BigInt::one())]);
    Ok((Polynomial::from_coeffs(low), high))
}

/// The quadrinomial `±(x - 1) reciprocal(f_n)` whose nonreciprocal part is
/// `reciprocal(f_n)`:
///
/// First kind: `x^{n+k+3} + (m-1) x^{k+3} + (m^2-m) x - m^2`.
/// Second kind: `x^{n+1} + (m^2-k-1) x^2 - (2m^2-k) x + m^2`
/// (only three terms when `n = 1`).
pub fn auxiliary_f(params: &FamilyParams, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParams("terms are indexed from 1".into()));
    }
    let m = params.mb();
    let m2 = &m * &m;
    let k = params.kb();
    let kk = params.k as usize;
    Ok(match params.kind {
        ChainKind::First => Polynomial::from_terms([
            (n + kk + 3, BigInt::one()),
            (kk + 3, &m - 1),
            (1, &m2 - &m),
            (0, -&m2),
        ]),
        ChainKind::Second => Polynomial::from_terms([
            (n + 1, BigInt::one()),
            (2, &m2 - &k - 1),
            (1, -(&m2 * 2u32 - &k)),
            (0, m2.clone()),
        ]),
    })
}

/// The palindromic quadratic whose roots would be a reciprocal pair
/// `alpha, 1/alpha` of the second-kind quadrinomial:
/// `A x^2 - B x + A` with `A = m^4 - m^2 k - m^2`, `B = 2m^4 - 2m^2 k + k^2 + k`.
pub fn proof_gadget_g(m: u64, k: u64) -> Result<Polynomial> {
    let params = FamilyParams::new(ChainKind::Second, m, k)?;
    let m2 = params.mb() * params.mb();
    let m4 = &m2 * &m2;
    let k = params.kb();
    let outer = &m4 - &m2 * &k - &m2;
    let middle: BigInt = &m4 * 2u32 - &m2 * &k * 2u32 + &k * &k + &k;
    Ok(Polynomial::from_coeffs(vec![outer.clone(), -middle, outer]))
}

/// Seeds of chains with no reducible term: `p x + 1` (first kind, `p` prime)
/// and `x - c` (second kind, `c >= 1`).
pub fn infinite_seed(kind: ChainKind, param: u64) -> Result<Polynomial> {
    match kind {
        ChainKind::First if !is_prime_u64(param) => Err(Error::NotPrime(param.to_string())),
        ChainKind::First => Ok(Polynomial::from_coeffs(vec![BigInt::one(), param.into()])),
        ChainKind::Second if param == 0 => Err(Error::InvalidParams("x - c needs c >= 1".into())),
        ChainKind::Second => Ok(Polynomial::from_coeffs(vec![
            -BigInt::from(param),
            BigInt::one(),
        ])),
    }
}

/// For the first-kind split `{x^{n+k+3}, (m^2-m) x}`, the part divided by `x`
/// is `x^{n+k+2} + m(m-1)`. Reports, for every prime `p | m`, whether
/// Eisenstein's criterion actually holds at `p` (it fails when `p^2 | m`).
pub fn eisenstein_on_split_ii(params: &FamilyParams, n: usize) -> Vec<(BigInt, bool)> {
    let m = params.mb();
    let exponent = n + params.k as usize + 2;
    let g = Polynomial::from_terms([(exponent, BigInt::one()), (0, &m * (&m - 1))]);
    prime_divisors(&m)
        .into_iter()
        .map(|p| {
            let c0 = g.constant_term();
            let holds = (&c0 % &p).is_zero() && !(&c0 % (&p * &p)).is_zero();
            (p, holds)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    fn first(m: u64, k: u64) -> FamilyParams {
        FamilyParams::new(ChainKind::First, m, k).unwrap()
    }

    fn second(m: u64, k: u64) -> FamilyParams {
        FamilyParams::new(ChainKind::Second, m, k).unwrap()
    }

    #[test]
    fn seeds() {
        assert_eq!(family_seed(&first(2, 1)), z(&[1, 2, 2, 2, 4]));
        assert_eq!(family_seed(&second(2, 1)), z(&[-3, 4]));
        assert!(FamilyParams::new(ChainKind::Second, 2, 3).is_err());
        assert!(FamilyParams::new(ChainKind::First, 1, 3).is_err());
        assert!(FamilyParams::new(ChainKind::First, 2, 0).is_err());
        assert!(FamilyParams::new(ChainKind::Second, 2, 2).is_ok());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(
            closed_form_term(&first(2, 1), 2).unwrap(),
            z(&[1, 1, 2, 2, 2, 4])
        );
        assert_eq!(
            closed_form_term(&second(2, 1), 3).unwrap(),
            z(&[-1, -1, -3, 4])
        );
        for params in [first(3, 2), second(3, 5)] {
            assert_eq!(closed_form_term(&params, 1).unwrap(), family_seed(&params));
        }
        assert!(closed_form_term(&first(2, 1), 0).is_err());
    }

    #[test]
    fn product_formula() {
        assert_eq!(
            product_formula_kind1(2, 1).unwrap(),
            (z(&[1, 1, 2]), z(&[1, 0, 0, 2]))
        );
        assert_eq!(
            product_formula_kind1(3, 2).unwrap(),
            (z(&[1, 1, 1, 3]), z(&[1, 0, 0, 0, 3]))
        );
        let (a, b) = product_formula_kind1(2, 1).unwrap();
        assert_eq!(&a * &b, z(&[1, 1, 2, 2, 2, 4]));
    }

    #[test]
    fn auxiliary() {
        assert_eq!(
            auxiliary_f(&first(2, 1), 1).unwrap(),
            z(&[-4, 2, 0, 0, 1, 1])
        );
        assert_eq!(auxiliary_f(&second(2, 1), 3).unwrap(), z(&[4, -7, 2, 0, 1]));
        let f1 = family_seed(&first(2, 1));
        assert_eq!(
            auxiliary_f(&first(2, 1), 1).unwrap(),
            &z(&[-1, 1]) * &f1.reciprocal().unwrap()
        );
        // second kind, n = 1 collapses to three terms
        assert_eq!(auxiliary_f(&second(2, 1), 1).unwrap(), z(&[4, -7, 3]));
    }

    #[test]
    fn gadget_quadratic() {
        assert_eq!(proof_gadget_g(2, 1).unwrap(), z(&[8, -26, 8]));
        assert_eq!(proof_gadget_g(3, 2).unwrap(), z(&[54, -132, 54]));
        assert!(proof_gadget_g(2, 3).is_err());
    }

    #[test]
    fn infinite_seeds() {
        assert_eq!(infinite_seed(ChainKind::First, 5).unwrap(), z(&[1, 5]));
        assert_eq!(infinite_seed(ChainKind::Second, 3).unwrap(), z(&[-3, 1]));
        assert!(infinite_seed(ChainKind::First, 4).is_err());
        assert!(infinite_seed(ChainKind::Second, 0).is_err());
    }

    #[test]
    fn eisenstein_split_ii() {
        let ok = eisenstein_on_split_ii(&first(6, 1), 2);
        assert_eq!(ok, vec![(BigInt::from(2), true), (BigInt::from(3), true)]);
        // m = 4: 2^2 divides m(m-1) = 12, so the criterion does not apply at 2
        let bad = eisenstein_on_split_ii(&first(4, 1), 2);
        assert_eq!(bad, vec![(BigInt::from(2), false)]);
    }
}
