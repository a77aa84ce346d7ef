//! Integer helpers: prime iteration, factoring, divisor enumeration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::intchains::primality::{is_prime_u64, is_probable_prime};

const TRIAL_LIMIT: u64 = 10_000;

/// Primes `>= start`, ascending.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime_u64(n))
}

/// Prime factorization of `|n|` as ascending `(prime, exponent)` pairs.
/// Empty for 0 and ±1.
pub fn factor_integer(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if n.is_zero() {
        return out;
    }
    for p in primes_from(2).take_while(|&p| p <= TRIAL_LIMIT) {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
    }
    if !n.is_one() {
        let mut stack = vec![n];
        let mut large: Vec<BigInt> = Vec::new();
        while let Some(m) = stack.pop() {
            if m.is_one() {
                continue;
            }
            if m < BigInt::from(TRIAL_LIMIT * TRIAL_LIMIT) || is_probable_prime(&m) {
                large.push(m);
                continue;
            }
            let d = pollard_rho(&m);
            stack.push(&m / &d);
            stack.push(d);
        }
        large.sort();
        for p in large {
            match out.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => out.push((p, 1)),
            }
        }
    }
    out
}

/// Nontrivial factor of an odd composite `n` (Brent's variant of rho).
fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    for c in 1u32.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), BigInt::one());
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
    }
    unreachable!()
}

/// Distinct prime divisors of `|n|`.
pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    factor_integer(n).into_iter().map(|(p, _)| p).collect()
}

/// Positive divisors of `|n|`, ascending. Empty for 0.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factor_integer(n) {
        let current = divs.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk *= &p;
            divs.extend(current.iter().map(|d| d * &pk));
        }
    }
    divs.sort();
    divs
}

/// `n mod p` as a residue in `[0, p)`.
pub(crate) fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        let f = |n: i64| {
            factor_integer(&BigInt::from(n))
                .into_iter()
                .map(|(p, e)| (p.to_i64().unwrap(), e))
                .collect::<Vec<_>>()
        };
        assert_eq!(f(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f(-97), vec![(97, 1)]);
        assert_eq!(f(1), vec![]);
        assert_eq!(f(0), vec![]);
        // two primes above the trial limit
        assert_eq!(f(100_003 * 100_019), vec![(100_003, 1), (100_019, 1)]);
    }

    #[test]
    fn divisor_enumeration() {
        let d: Vec<i64> = divisors(&BigInt::from(-12))
            .iter()
            .map(|d| d.to_i64().unwrap())
            .collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
        assert!(divisors(&BigInt::zero()).is_empty());
    }

    #[test]
    fn prime_iteration() {
        let p: Vec<u64> = primes_from(3).take(5).collect();
        assert_eq!(p, vec![3, 5, 7, 11, 13]);
    }
}
