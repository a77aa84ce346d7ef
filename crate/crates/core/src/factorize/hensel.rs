//! Quadratic Hensel lifting of a modular factorization.
//!
//! The input `f` is made monic modulo `p^l` by scaling with the inverse of
//! its leading coefficient; factors are then lifted along a balanced binary
//! tree, each node running Newton steps `m -> min(m^2, p^l)` on the pair
//! `(g, h)` together with its Bezout coefficients.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::modp::ModPoly;
use crate::arith::residue;
use crate::error::{Error, Result};
use crate::polyz::Polynomial;

fn reduce(f: &Polynomial, m: &BigInt) -> Polynomial {
    Polynomial::from_coeffs(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Quotient and remainder by a monic divisor over `Z/m`.
fn div_rem_monic(a: &Polynomial, d: &Polynomial, m: &BigInt) -> (Polynomial, Polynomial) {
    let dd = d.degree().expect("nonzero divisor");
    let a = reduce(a, m);
    let Some(nd) = a.degree().filter(|&n| n >= dd) else {
        return (Polynomial::zero(), a);
    };
    let mut rem = a.into_coeffs();
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (0..=nd - dd).rev() {
        let q = rem[i + dd].mod_floor(m);
        if q.is_zero() {
            continue;
        }
        for (j, c) in d.coeffs().iter().enumerate() {
            rem[i + j] = (&rem[i + j] - &q * c).mod_floor(m);
        }
        quot[i] = q;
    }
    (
        Polynomial::from_coeffs(quot),
        reduce(&Polynomial::from_coeffs(rem), m),
    )
}

struct Lifted {
    g: Polynomial,
    h: Polynomial,
    s: Polynomial,
    t: Polynomial,
}

/// One Newton step: valid modulo any `m_new` with `m | m_new | m^2`.
fn hensel_step(f: &Polynomial, cur: Lifted, m_new: &BigInt) -> Lifted {
    let Lifted { g, h, s, t } = cur;
    let e = reduce(&(f - &(&g * &h)), m_new);
    let (q, r) = div_rem_monic(&(&s * &e), &h, m_new);
    let g_new = reduce(&(&g + &(&t * &e) + &q * &g), m_new);
    let h_new = reduce(&(&h + &r), m_new);
    let b = reduce(
        &(&(&s * &g_new) + &(&t * &h_new) - Polynomial::one()),
        m_new,
    );
    let (c, d) = div_rem_monic(&(&s * &b), &h_new, m_new);
    let s_new = reduce(&(&s - &d), m_new);
    let t_new = reduce(&(&t - &(&t * &b) - &c * &g_new), m_new);
    Lifted {
        g: g_new,
        h: h_new,
        s: s_new,
        t: t_new,
    }
}

fn product_mod_p(factors: &[ModPoly], p: u64) -> ModPoly {
    factors
        .iter()
        .fold(ModPoly::new(p, vec![1]), |acc, g| acc.mul(g))
}

fn lift_tree(
    f: &Polynomial,
    factors: &[ModPoly],
    p: u64,
    target: &BigInt,
    out: &mut Vec<Polynomial>,
) {
    if factors.len() == 1 {
        out.push(reduce(f, target));
        return;
    }
    let mid = factors.len() / 2;
    let g0 = product_mod_p(&factors[..mid], p);
    let h0 = product_mod_p(&factors[mid..], p);
    let (_, s0, t0) = g0.ext_gcd(&h0);
    let mut cur = Lifted {
        g: g0.to_poly(),
        h: h0.to_poly(),
        s: s0.to_poly(),
        t: t0.to_poly(),
    };
    let mut m = BigInt::from(p);
    while &m < target {
        let next = (&m * &m).min(target.clone());
        cur = hensel_step(f, cur, &next);
        m = next;
    }
    lift_tree(&cur.g, &factors[..mid], p, target, out);
    lift_tree(&cur.h, &factors[mid..], p, target, out);
}

/// Lifts a factorization `f ≡ lc(f) * prod(factors) (mod p)` to one modulo
/// `p^target_exponent`.
///
/// The factors must be monic, pairwise coprime modulo `p`, and `p` must not
/// divide the leading coefficient. The result holds monic factors, in input
/// order, with coefficients in `[0, p^l)` and `lc(f) * prod ≡ f (mod p^l)`.
pub fn hensel_lift(
    f: &Polynomial,
    modular_factors: &[ModPoly],
    p: u64,
    target_exponent: u32,
) -> Result<Vec<Polynomial>> {
    let lead = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    if residue(lead, p) == 0 {
        return Err(Error::PrimeDividesLeading(p));
    }
    if modular_factors.is_empty() {
        return Ok(Vec::new());
    }
    for (i, a) in modular_factors.iter().enumerate() {
        for b in &modular_factors[i + 1..] {
            if !a.gcd(b).is_one() {
                return Err(Error::NotCoprime(p));
            }
        }
    }
    let fp = ModPoly::from_poly(f, p);
    let expected = product_mod_p(modular_factors, p).scale(residue(lead, p));
    if fp != expected
        || modular_factors
            .iter()
            .any(|g| g.coeffs().last() != Some(&1))
    {
        return Err(Error::FactorMismatch(p));
    }
    let target = num_traits::pow(BigInt::from(p), target_exponent.max(1) as usize);
    let lead_inv = lead
        .modinv(&target)
        .expect("leading coefficient is a unit modulo p^l");
    let monic = reduce(&f.scale(&lead_inv), &target);
    let mut out = Vec::with_capacity(modular_factors.len());
    lift_tree(&monic, modular_factors, p, &target, &mut out);
    Ok(out)
}

/// Symmetric representative of each coefficient in `(-m/2, m/2]`.
pub(crate) fn symmetric(f: &Polynomial, m: &BigInt) -> Polynomial {
    let half = m >> 1;
    Polynomial::from_coeffs(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}
