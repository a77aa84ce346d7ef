//! Irreducibility certificates and the decision pipeline.
//!
//! [`decide_irreducible`] tries cheap sufficient conditions first and falls
//! back to complete factorization, so every verdict is definitive. Each
//! verdict carries the data needed to re-check it with [`IrreducibilityVerdict::verify`].

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::arith::{prime_divisors, primes_from, residue};
use crate::error::{Error, Result};
use crate::factorize::modp::{factor_degrees, is_good_prime};
use crate::factorize::{
    factor_mod_p, factor_over_rationals, is_irreducible_mod_p, rational_roots, Factorization,
    ModPoly,
};
use crate::polyz::Polynomial;

/// Budgets for the modular fast paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecisionConfig {
    /// Primes tried for an irreducible reduction.
    pub mod_p_budget: usize,
    /// Primes whose factor-degree patterns are intersected.
    pub degree_set_primes: usize,
}

impl Default for DecisionConfig {
    fn default() -> Self {
        Self {
            mod_p_budget: 10,
            degree_set_primes: 5,
        }
    }
}

/// Why a polynomial is known to be irreducible over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    DegreeOne,
    /// Degree 2 or 3 without rational roots.
    RationalRootAbsence,
    Eisenstein {
        prime: BigInt,
    },
    /// `x^n - a_{n-1} x^{n-1} - ... - a_0` with `a_{n-1} >= ... >= a_0 > 0`.
    Brauer,
    ModPIrreducible {
        prime: u64,
    },
    /// The intersection of feasible factor degrees over these primes is `{0, n}`.
    DegreeSetSingleton {
        primes: Vec<u64>,
    },
    FullFactorization,
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::DegreeOne => "degree-one",
            Certificate::RationalRootAbsence => "rational-root-absence",
            Certificate::Eisenstein { .. } => "eisenstein",
            Certificate::Brauer => "brauer",
            Certificate::ModPIrreducible { .. } => "mod-p-irreducible",
            Certificate::DegreeSetSingleton { .. } => "degree-set-singleton",
            Certificate::FullFactorization => "full-factorization",
        }
    }

    /// Re-checks the certificate against `f` from its recorded data alone.
    pub fn verify(&self, f: &Polynomial) -> bool {
        let g = f.primitive_part();
        let Some(n) = g.degree() else {
            return false;
        };
        match self {
            Certificate::DegreeOne => n == 1,
            Certificate::RationalRootAbsence => {
                (2..=3).contains(&n) && rational_roots(&g).is_ok_and(|r| r.is_empty())
            }
            Certificate::Eisenstein { prime } => n >= 1 && eisenstein_holds(&g, prime),
            Certificate::Brauer => brauer_check(&g),
            Certificate::ModPIrreducible { prime } => {
                // replayed through the full modular factorization
                factor_mod_p(&g, *prime)
                    .is_ok_and(|fs| fs.len() == 1 && fs[0].1 == 1 && fs[0].0.degree() == Some(n))
            }
            Certificate::DegreeSetSingleton { primes } => {
                degree_set_prune(&g, primes).is_ok_and(|s| s == BTreeSet::from([0, n]))
            }
            Certificate::FullFactorization => {
                factor_over_rationals(&g).is_ok_and(|fact| fact.is_irreducible())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    Irreducible(Certificate),
    /// The witness reconstructs the input and has at least two
    /// nonconstant factors counted with multiplicity.
    Reducible(Factorization),
    /// Nonzero constants are units over the rationals.
    Constant,
}

impl IrreducibilityVerdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Irreducible(_))
    }

    pub fn is_reducible(&self) -> bool {
        matches!(self, IrreducibilityVerdict::Reducible(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            IrreducibilityVerdict::Irreducible(c) => Some(c),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&Factorization> {
        match self {
            IrreducibilityVerdict::Reducible(w) => Some(w),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            IrreducibilityVerdict::Irreducible(_) => "irreducible",
            IrreducibilityVerdict::Reducible(_) => "reducible",
            IrreducibilityVerdict::Constant => "constant",
        }
    }

    pub fn verify(&self, f: &Polynomial) -> bool {
        match self {
            IrreducibilityVerdict::Irreducible(c) => c.verify(f),
            IrreducibilityVerdict::Reducible(w) => {
                w.reconstruct() == *f
                    && w.factor_count() >= 2
                    && w.factors.iter().all(|(g, _)| !g.is_constant())
            }
            IrreducibilityVerdict::Constant => !f.is_zero() && f.is_constant(),
        }
    }
}

fn eisenstein_holds(f: &Polynomial, p: &BigInt) -> bool {
    let Some(n) = f.degree() else {
        return false;
    };
    let coeffs = f.coeffs();
    !(&coeffs[n] % p).is_zero()
        && coeffs[..n].iter().all(|c| (c % p).is_zero())
        && !(&coeffs[0] % (p * p)).is_zero()
}

/// A prime `p` for which Eisenstein's criterion applies to `f`, searched among
/// the prime divisors of the gcd of the non-leading coefficients.
pub fn eisenstein_check(f: &Polynomial) -> Option<BigInt> {
    let n = f.degree().filter(|&n| n >= 1)?;
    let lower = Polynomial::from_coeffs(f.coeffs()[..n].to_vec());
    let g = lower.content();
    if g.is_zero() {
        return None;
    }
    prime_divisors(&g)
        .into_iter()
        .find(|p| eisenstein_holds(f, p))
}

/// Brauer's shape: monic, every lower coefficient negative, and the negated
/// lower coefficients non-increasing from `x^{n-1}` down to the constant.
pub fn brauer_check(f: &Polynomial) -> bool {
    let Some(n) = f.degree().filter(|&n| n >= 1) else {
        return false;
    };
    let c = f.coeffs();
    if !c[n].is_one() || !c[0].is_negative() {
        return false;
    }
    // a_i = -c_i must satisfy a_{n-1} >= ... >= a_0 > 0
    c[..n].windows(2).all(|w| w[1] <= w[0])
}

/// The first of the first `prime_budget` primes not dividing the leading
/// coefficient modulo which `f` stays irreducible.
pub fn mod_p_certificate(f: &Polynomial, prime_budget: usize) -> Option<u64> {
    let lead = f.leading_coeff()?.clone();
    if f.degree()? == 0 {
        return None;
    }
    primes_from(2)
        .filter(|&p| residue(&lead, p) != 0)
        .take(prime_budget)
        .find(|&p| is_irreducible_mod_p(&ModPoly::from_poly(f, p)))
}

fn subset_sums(degrees: &[usize], n: usize) -> BTreeSet<usize> {
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for &d in degrees {
        for s in (d..=n).rev() {
            if reachable[s - d] {
                reachable[s] = true;
            }
        }
    }
    (0..=n).filter(|&s| reachable[s]).collect()
}

/// Degrees a factor of `f` over the integers can have, given the factor
/// degree patterns modulo each prime. `{0, deg f}` alone means irreducible.
///
/// Each prime must not divide the leading coefficient and must leave the
/// reduction squarefree.
pub fn degree_set_prune(f: &Polynomial, primes: &[u64]) -> Result<BTreeSet<usize>> {
    let n = f.require_degree()?;
    let mut feasible: BTreeSet<usize> = (0..=n).collect();
    for &p in primes {
        if !is_good_prime(f, p) {
            return Err(Error::InvalidParams(format!(
                "prime {p} divides the leading coefficient or gives a non-squarefree image"
            )));
        }
        let sums = subset_sums(&factor_degrees(&ModPoly::from_poly(f, p)), n);
        feasible = feasible.intersection(&sums).copied().collect();
    }
    Ok(feasible)
}

/// Decides irreducibility over the rationals with the default budgets.
pub fn decide_irreducible(f: &Polynomial) -> Result<IrreducibilityVerdict> {
    decide_irreducible_with(f, &DecisionConfig::default())
}

/// Runs, in order: degree checks, rational roots (decisive up to degree 3),
/// Eisenstein, Brauer, an irreducible reduction modulo a small prime,
/// factor-degree intersection, and finally complete factorization.
pub fn decide_irreducible_with(
    f: &Polynomial,
    config: &DecisionConfig,
) -> Result<IrreducibilityVerdict> {
    use IrreducibilityVerdict::*;

    let n = f.require_degree()?;
    if n == 0 {
        return Ok(Constant);
    }
    if n == 1 {
        return Ok(Irreducible(Certificate::DegreeOne));
    }
    let reducible = || factor_over_rationals(f).map(Reducible);
    if f.constant_term().is_zero() {
        return reducible();
    }
    let g = f.primitive_part();
    if n <= 3 {
        return if rational_roots(&g)?.is_empty() {
            Ok(Irreducible(Certificate::RationalRootAbsence))
        } else {
            reducible()
        };
    }
    if let Some(prime) = eisenstein_check(&g) {
        return Ok(Irreducible(Certificate::Eisenstein { prime }));
    }
    if brauer_check(&g) {
        return Ok(Irreducible(Certificate::Brauer));
    }
    if let Some(prime) = mod_p_certificate(&g, config.mod_p_budget) {
        return Ok(Irreducible(Certificate::ModPIrreducible { prime }));
    }
    if !g.is_squarefree() {
        return reducible();
    }
    let primes: Vec<u64> = primes_from(2)
        .filter(|&p| is_good_prime(&g, p))
        .take(config.degree_set_primes)
        .collect();
    if degree_set_prune(&g, &primes)? == BTreeSet::from([0, n]) {
        return Ok(Irreducible(Certificate::DegreeSetSingleton { primes }));
    }
    let fact = factor_over_rationals(f)?;
    Ok(if fact.is_irreducible() {
        Irreducible(Certificate::FullFactorization)
    } else {
        Reducible(fact)
    })
}
