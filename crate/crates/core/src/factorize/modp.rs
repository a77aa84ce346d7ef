//! Polynomials over the prime field `F_p` and their factorization.
//!
//! Squarefree decomposition, then distinct-degree splitting, then
//! Cantor–Zassenhaus equal-degree splitting (trace map when `p = 2`).

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::residue;
use crate::error::{Error, Result};
use crate::intchains::primality::{is_prime_u64, pow_mod_u64};
use crate::polyz::Polynomial;

/// Seed for the equal-degree splitting stream; factorizations are deterministic.
const SPLIT_SEED: u64 = 0x5eed_cafe;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod_u64(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut out = Self { p, coeffs };
        out.normalize();
        out
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub fn from_poly(f: &Polynomial, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| residue(c, p)).collect())
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`.
    pub fn to_poly(&self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn zero(p: u64) -> Self {
        Self { p, coeffs: vec![] }
    }

    fn one(p: u64) -> Self {
        Self {
            p,
            coeffs: vec![1 % p],
        }
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0)
                    + other.coeffs.get(i).copied().unwrap_or(0))
                    % self.p
            })
            .collect();
        Self::new(self.p, c)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let p = self.p;
        let c = (0..n)
            .map(|i| {
                (self.coeffs.get(i).copied().unwrap_or(0) + p
                    - other.coeffs.get(i).copied().unwrap_or(0))
                    % p
            })
            .collect();
        Self::new(p, c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        Self::new(p, out)
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.p))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let p = self.p;
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Self::zero(p), self.clone());
        };
        let inv = inv_mod(d.lead(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = mul_mod(rem[i + dd], inv, p);
            if q == 0 {
                continue;
            }
            quot[i] = q;
            for (j, &c) in d.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + p - mul_mod(q, c, p)) % p;
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Monic gcd (zero only when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(p), Self::zero(p));
        let (mut t0, mut t1) = (Self::zero(p), Self::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = inv_mod(r0.lead(), p);
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(
            p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mul_mod(c, i as u64 % p, p))
                .collect(),
        )
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    /// `x^p mod m` by repeated use of the Frobenius on the current power.
    fn frobenius(&self, m: &Self) -> Self {
        self.pow_mod(self.p as u128, m)
    }

    fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).is_one()
    }

    /// Inverse of the Frobenius on a polynomial whose derivative vanishes.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Self::new(self.p, c)
    }
}

impl Ord for ModPoly {
    /// Degree first, then coefficients from the leading term down.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for ModPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Squarefree decomposition of a monic polynomial over `F_p`.
fn squarefree_mod_p(f: &ModPoly) -> Vec<(ModPoly, u32)> {
    let mut out = Vec::new();
    squarefree_rec(f, 1, &mut out);
    out
}

fn squarefree_rec(f: &ModPoly, mult: u32, out: &mut Vec<(ModPoly, u32)>) {
    let p = f.p;
    if f.degree().unwrap_or(0) == 0 {
        return;
    }
    let d = f.derivative();
    if d.is_zero() {
        squarefree_rec(&f.pth_root(), mult * p as u32, out);
        return;
    }
    let mut c = f.gcd(&d);
    let mut w = f.div_rem(&c).0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_rem(&y).0;
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, mult * i));
        }
        i += 1;
        w = y;
        c = c.div_rem(&w).0;
    }
    if !c.is_one() {
        squarefree_rec(&c.pth_root(), mult * p as u32, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
fn distinct_degree(f: &ModPoly) -> Vec<(ModPoly, usize)> {
    let p = f.p;
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModPoly::x(p);
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.frobenius(&rest);
        let g = h.sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    out
}

/// Splits a monic squarefree product of degree-`d` irreducibles.
fn equal_degree(f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    let n = f.degree().unwrap_or(0);
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.p;
    loop {
        let a = ModPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // trace from F_{2^d} down to F_2
            let mut t = a.rem(f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f);
                acc = acc.add(&t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = a.rem(f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.frobenius(f);
                norm = norm.mul(&t).rem(f);
            }
            norm.pow_mod(((p - 1) / 2) as u128, f).sub(&ModPoly::one(p))
        };
        let g = b.gcd(f);
        if let Some(gd) = g.degree() {
            if gd > 0 && gd < n {
                equal_degree(&g, d, rng, out);
                equal_degree(&f.div_rem(&g).0, d, rng, out);
                return;
            }
        }
    }
}

/// Monic irreducible factors of a squarefree polynomial over `F_p`, sorted.
pub(crate) fn factor_squarefree(f: &ModPoly) -> Vec<ModPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut out = Vec::new();
    for (g, d) in distinct_degree(&f.monic()) {
        equal_degree(&g, d, &mut rng, &mut out);
    }
    out.sort();
    out
}

/// Degrees of the irreducible factors of a squarefree polynomial, found by
/// distinct-degree splitting alone (no equal-degree splitting needed).
pub(crate) fn factor_degrees(f: &ModPoly) -> Vec<usize> {
    distinct_degree(&f.monic())
        .into_iter()
        .flat_map(|(g, d)| std::iter::repeat_n(d, g.degree().unwrap() / d))
        .collect()
}

/// True when the reduction of `f` modulo `p` keeps its degree and is squarefree.
pub(crate) fn is_good_prime(f: &Polynomial, p: u64) -> bool {
    let Some(lead) = f.leading_coeff() else {
        return false;
    };
    residue(lead, p) != 0 && ModPoly::from_poly(f, p).is_squarefree()
}

/// Irreducibility over `F_p` (Ben-Or: no factor of degree `<= n/2`).
pub fn is_irreducible_mod_p(f: &ModPoly) -> bool {
    let Some(n) = f.degree().filter(|&n| n > 0) else {
        return false;
    };
    let f = f.monic();
    let x = ModPoly::x(f.p);
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = h.frobenius(&f);
        if !h.sub(&x).gcd(&f).is_one() {
            return false;
        }
    }
    true
}

/// Complete monic factorization of `f` modulo `p`, with multiplicities.
///
/// The leading coefficient of `f` times the product of the returned factors
/// is congruent to `f` modulo `p`.
pub fn factor_mod_p(f: &Polynomial, p: u64) -> Result<Vec<(ModPoly, u32)>> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let lead = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    if residue(lead, p) == 0 {
        return Err(Error::PrimeDividesLeading(p));
    }
    let fp = ModPoly::from_poly(f, p).monic();
    let mut out: Vec<(ModPoly, u32)> = Vec::new();
    for (g, e) in squarefree_mod_p(&fp) {
        out.extend(factor_squarefree(&g).into_iter().map(|h| (h, e)));
    }
    out.sort();
    Ok(out)
}
