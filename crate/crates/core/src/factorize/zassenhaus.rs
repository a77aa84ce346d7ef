use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use super::hensel::{hensel_lift, symmetric};
use super::modp::{factor_degrees, factor_mod_p, is_good_prime, ModPoly};
use crate::arith::primes_from;
use crate::certify::degree_set_prune;
use crate::polyz::Polynomial;

/// Number of suitable primes examined when choosing the lifting prime.
pub(crate) const PRIME_CANDIDATES: usize = 8;

/// `2^deg(f) * ceil(||f||_2)`: bounds every coefficient of every integer
/// factor of `f`, and of `lc(f)/lc(g) * g` for any factor `g`.
pub fn mignotte_bound(f: &Polynomial) -> BigInt {
    let norm_sq = f.norm_squared();
    let root = norm_sq.sqrt();
    let ceil = if &root * &root == norm_sq {
        root
    } else {
        root + 1u32
    };
    ceil << f.degree().unwrap_or(0)
}

/// Chooses among the first suitable primes `p >= 3` the one with the fewest
/// modular factors. Returns it with all primes examined.
fn choose_prime(f: &Polynomial) -> (u64, Vec<u64>) {
    let primes: Vec<u64> = primes_from(3)
        .filter(|&p| is_good_prime(f, p))
        .take(PRIME_CANDIDATES)
        .collect();
    let best = primes
        .iter()
        .copied()
        .min_by_key(|&p| factor_degrees(&ModPoly::from_poly(f, p)).len())
        .expect("some prime is suitable");
    (best, primes)
}

/// Irreducible factors of a primitive squarefree `f` with positive leading
/// coefficient and `f(0) != 0`.
pub(crate) fn factor_squarefree(f: &Polynomial) -> Vec<Polynomial> {
    let n = f.degree().expect("nonzero");
    if n <= 1 {
        return vec![f.clone()];
    }
    let (p, primes) = choose_prime(f);
    let feasible = degree_set_prune(f, &primes).expect("primes are suitable");
    let modular: Vec<ModPoly> = factor_mod_p(f, p)
        .expect("suitable prime")
        .into_iter()
        .map(|(g, _)| g)
        .collect();
    if modular.len() == 1 || feasible.len() <= 2 {
        return vec![f.clone()];
    }
    let bound = mignotte_bound(f) * 2u32;
    let mut exponent = 1u32;
    let mut modulus = BigInt::from(p);
    while modulus <= bound {
        modulus *= p;
        exponent += 1;
    }
    let lifted = hensel_lift(f, &modular, p, exponent).expect("squarefree image lifts");
    recombine(f, lifted, &modulus, &feasible)
}

/// Zassenhaus subset search: subsets by ascending size, skipping those whose
/// degree is infeasible, each candidate confirmed by exact division.
fn recombine(
    f: &Polynomial,
    mut lifted: Vec<Polynomial>,
    modulus: &BigInt,
    feasible: &BTreeSet<usize>,
) -> Vec<Polynomial> {
    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    'sizes: while 2 * size <= lifted.len() {
        for subset in (0..lifted.len()).combinations(size) {
            let degree: usize = subset.iter().map(|&i| lifted[i].degree().unwrap()).sum();
            if !feasible.contains(&degree) {
                continue;
            }
            let lead = rest.leading_coeff().unwrap().clone();
            // cheap filter on constant terms before building the product
            let constant = subset.iter().fold(lead.clone(), |acc, &i| {
                (acc * lifted[i].constant_term()) % modulus
            });
            let constant = symmetric(&Polynomial::constant(constant), modulus).constant_term();
            if constant.is_zero() || !(lead.clone() * rest.constant_term() % &constant).is_zero() {
                continue;
            }
            let product = subset.iter().fold(Polynomial::constant(lead), |acc, &i| {
                symmetric(&(&acc * &lifted[i]), modulus)
            });
            let candidate = product.primitive_part();
            if let Some(quotient) = rest.div_exact(&candidate) {
                found.push(candidate);
                rest = quotient;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
                continue 'sizes;
            }
        }
        size += 1;
    }
    if !rest.is_constant() {
        found.push(rest);
    } else {
        debug_assert!(rest.is_one());
    }
    found
}
