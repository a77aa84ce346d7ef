//! Miller–Rabin primality testing.
//!
//! Below 2^64 the fixed witness set {2, 3, ..., 37} makes the test exact.
//! Above that, 40 rounds with witnesses drawn from a seeded ChaCha stream,
//! so results are reproducible for a given seed.

use num_bigint::{BigInt, BigUint, RandBigInt, Sign};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const DETERMINISTIC_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
const RANDOM_ROUNDS: usize = 40;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exact primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in DETERMINISTIC_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in DETERMINISTIC_WITNESSES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A Miller–Rabin tester whose random witnesses come from a fixed seed.
#[derive(Clone, Copy, Debug, Default)]
pub struct MillerRabin {
    seed: u64,
}

impl MillerRabin {
    pub fn new(seed: u64) -> Self {
        Self { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn is_probable_prime(&self, n: &BigInt) -> bool {
        if n.sign() != Sign::Plus {
            return false;
        }
        if let Some(small) = n.to_u64() {
            return is_prime_u64(small);
        }
        let n = n.magnitude();
        for p in DETERMINISTIC_WITNESSES {
            if (n % p).is_zero() {
                return false;
            }
        }
        let one = BigUint::one();
        let n_minus_one = n - &one;
        let s = n_minus_one.trailing_zeros().unwrap_or(0);
        let d = &n_minus_one >> s;
        let two = BigUint::from(2u32);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        'round: for _ in 0..RANDOM_ROUNDS {
            let a = rng.gen_biguint_range(&two, &n_minus_one);
            let mut x = a.modpow(&d, n);
            if x == one || x == n_minus_one {
                continue;
            }
            for _ in 1..s {
                x = x.modpow(&two, n);
                if x == n_minus_one {
                    continue 'round;
                }
            }
            return false;
        }
        true
    }
}

/// Primality with the default seed (0).
pub fn is_probable_prime(n: &BigInt) -> bool {
    MillerRabin::default().is_probable_prime(n)
}
