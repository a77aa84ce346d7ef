//! Integer Cunningham chains `p_i = 2 p_{i-1} + eps`.

pub mod primality;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::chains::ChainKind;
use crate::error::{Error, Result};
pub use primality::{is_prime_u64, is_probable_prime, MillerRabin};

const SEARCH_CHUNK: u64 = 1 << 16;

/// A run of primes each obtained from the previous one by `p -> 2p + eps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntChain {
    pub kind: ChainKind,
    pub primes: Vec<BigInt>,
}

impl IntChain {
    pub fn length(&self) -> usize {
        self.primes.len()
    }

    pub fn start(&self) -> &BigInt {
        &self.primes[0]
    }

    /// The value after the last prime, `2 p_k + eps`.
    pub fn terminator(&self) -> BigInt {
        next(self.primes.last().expect("nonempty chain"), self.kind)
    }

    /// All members prime, recurrence holds, terminator composite and the
    /// predecessor of the start not prime.
    pub fn revalidate(&self, mr: &MillerRabin) -> bool {
        !self.primes.is_empty()
            && self.primes.iter().all(|p| mr.is_probable_prime(p))
            && self
                .primes
                .windows(2)
                .all(|w| w[1] == next(&w[0], self.kind))
            && !mr.is_probable_prime(&self.terminator())
            && is_chain_initial(self.start(), self.kind, mr)
    }
}

impl fmt::Display for IntChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn next(p: &BigInt, kind: ChainKind) -> BigInt {
    p * 2 + kind.eps()
}

fn is_prime(n: &BigInt, mr: &MillerRabin) -> bool {
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => mr.is_probable_prime(n),
    }
}

/// Whether `(p - eps) / 2` fails to be a prime, so that no chain extends
/// backwards from `p`.
pub fn is_chain_initial(p: &BigInt, kind: ChainKind, mr: &MillerRabin) -> bool {
    let shifted = p - kind.eps();
    if shifted.is_odd() {
        return true;
    }
    !is_prime(&(shifted / 2), mr)
}

/// Follows the recurrence from `p`, stopping at the first composite or once
/// `limit` primes have been collected.
fn follow(p: BigInt, kind: ChainKind, mr: &MillerRabin, limit: usize) -> Vec<BigInt> {
    let mut primes = vec![p];
    while primes.len() < limit {
        let n = next(primes.last().unwrap(), kind);
        if !is_prime(&n, mr) {
            break;
        }
        primes.push(n);
    }
    primes
}

/// The chain starting at the prime `p`, continued until `2 p_k + eps` is composite.
pub fn int_chain_length(p: &BigInt, kind: ChainKind) -> Result<IntChain> {
    int_chain_length_with(p, kind, &MillerRabin::default())
}

pub fn int_chain_length_with(p: &BigInt, kind: ChainKind, mr: &MillerRabin) -> Result<IntChain> {
    if !is_prime(p, mr) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let primes = follow(p.clone(), kind, mr, usize::MAX);
    Ok(IntChain { kind, primes })
}

fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Primes in `[lo, hi)` by a segmented sieve over `base` (all primes up to `sqrt(hi)`).
fn sieve_segment(lo: u64, hi: u64, base: &[u64]) -> Vec<u64> {
    let lo = lo.max(2);
    if lo >= hi {
        return Vec::new();
    }
    let mut composite = vec![false; (hi - lo) as usize];
    for &q in base {
        if q * q >= hi {
            break;
        }
        let mut j = (q * q).max(lo.div_ceil(q) * q);
        while j < hi {
            composite[(j - lo) as usize] = true;
            j += q;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// All chain-initial chains of exact length `k` whose first prime is below
/// `bound`, in ascending order of start.
pub fn search_int_chains(k: usize, kind: ChainKind, bound: u64) -> Result<Vec<IntChain>> {
    search_int_chains_with(k, kind, bound, &MillerRabin::default())
}

pub fn search_int_chains_with(
    k: usize,
    kind: ChainKind,
    bound: u64,
    mr: &MillerRabin,
) -> Result<Vec<IntChain>> {
    if k < 1 {
        return Err(Error::InvalidParams(
            "chain length must be at least 1".into(),
        ));
    }
    if bound < 2 {
        return Err(Error::InvalidParams("bound must be at least 2".into()));
    }
    let base = small_primes((bound as f64).sqrt() as u64 + 1);
    let chunks: Vec<(u64, u64)> = (0..bound.div_ceil(SEARCH_CHUNK))
        .map(|c| (c * SEARCH_CHUNK, ((c + 1) * SEARCH_CHUNK).min(bound)))
        .collect();
    let found: Vec<Vec<IntChain>> = chunks
        .into_par_iter()
        .map(|(lo, hi)| {
            sieve_segment(lo, hi, &base)
                .into_iter()
                .map(BigInt::from)
                .filter(|p| is_chain_initial(p, kind, mr))
                .map(|p| follow(p, kind, mr, k + 1))
                .filter(|primes| primes.len() == k)
                .map(|primes| IntChain { kind, primes })
                .collect()
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}
