//! Complete factorization over the rationals.
//!
//! Pipeline: sign and content split, removal of the power of `x`, Yun
//! squarefree decomposition, then Zassenhaus on each squarefree part
//! (modular factorization, Hensel lifting, subset recombination).

pub mod hensel;
pub mod modp;
mod quadrinomial;
mod zassenhaus;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

pub use hensel::hensel_lift;
pub use modp::{factor_mod_p, is_irreducible_mod_p, ModPoly};
pub use quadrinomial::{
    exponent_gcd_reduce, is_binomial_product, two_part_split_check, Quadrinomial, SplitCheck,
};
pub use zassenhaus::mignotte_bound;

use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::polyz::{Polynomial, Rational};

/// `sign * content * prod(factor^multiplicity)`, factors primitive,
/// irreducible over the rationals, with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub content: BigInt,
    /// Sorted by degree, then coefficients.
    pub factors: Vec<(Polynomial, u32)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> Polynomial {
        let unit = if self.sign < 0 {
            -&self.content
        } else {
            self.content.clone()
        };
        self.factors
            .iter()
            .fold(Polynomial::constant(unit), |acc, (g, e)| acc * g.pow(*e))
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn is_irreducible(&self) -> bool {
        self.factor_count() == 1
    }

    /// Factors repeated according to multiplicity.
    pub fn expanded(&self) -> Vec<Polynomial> {
        self.factors
            .iter()
            .flat_map(|(g, e)| std::iter::repeat_n(g.clone(), *e as usize))
            .collect()
    }
}

/// Factors `f` completely over the rationals.
pub fn factor_over_rationals(f: &Polynomial) -> Result<Factorization> {
    let (content, sign, primitive) = f.content_and_primitive()?;
    let mut factors: Vec<(Polynomial, u32)> = Vec::new();
    if !primitive.is_constant() {
        let (v, rest) = primitive.strip_x_power();
        if v > 0 {
            factors.push((Polynomial::x(), v as u32));
        }
        for (part, e) in squarefree_decompose(&rest) {
            factors.extend(
                zassenhaus::factor_squarefree(&part)
                    .into_iter()
                    .map(|g| (g, e)),
            );
        }
    }
    factors.sort();
    Ok(Factorization {
        sign,
        content,
        factors,
    })
}

/// Yun's squarefree decomposition of a primitive polynomial.
///
/// Returns `(g_i, m_i)` with `f = ± prod g_i^m_i`, every `g_i` primitive,
/// squarefree, nonconstant, pairwise coprime, and `m_i` strictly increasing.
pub fn squarefree_decompose(f: &Polynomial) -> Vec<(Polynomial, u32)> {
    let a = f.primitive_part();
    if a.is_constant() {
        return Vec::new();
    }
    let da = a.derivative();
    let c = a.gcd(&da);
    let mut w = a.div_exact(&c).expect("gcd divides f");
    let mut y = da.div_exact(&c).expect("gcd divides f'");
    let mut z = &y - &w.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while !w.is_constant() {
        let g = w.gcd(&z);
        if !g.is_constant() {
            out.push((g.clone(), i));
        }
        w = w.div_exact(&g).expect("gcd divides w");
        y = z.div_exact(&g).expect("gcd divides z");
        z = &y - &w.derivative();
        i += 1;
    }
    out
}

/// All rational roots, by testing `±r/s` for `r | f(0)`, `s | lc(f)`.
pub fn rational_roots(f: &Polynomial) -> Result<BTreeSet<Rational>> {
    f.require_degree()?;
    let mut roots = BTreeSet::new();
    let (v, g) = f.strip_x_power();
    if v > 0 {
        roots.insert(Rational::zero());
    }
    if g.is_constant() {
        return Ok(roots);
    }
    let numerators = divisors(&g.constant_term());
    let denominators = divisors(g.leading_coeff().unwrap());
    for s in &denominators {
        for r in &numerators {
            for cand in [
                Rational::new(r.clone(), s.clone()),
                Rational::new(-r, s.clone()),
            ] {
                if *cand.denom() == *s && g.eval_at(&cand).is_zero() {
                    roots.insert(cand);
                }
            }
        }
    }
    Ok(roots)
}

/// Reciprocal and nonreciprocal parts of a polynomial with `f(0) != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReciprocalSplit {
    /// Product of the reciprocal irreducible factors, carrying the sign and
    /// content of the input.
    pub reciprocal_part: Polynomial,
    /// Product of the nonreciprocal irreducible factors, primitive with
    /// positive leading coefficient.
    pub nonreciprocal_part: Polynomial,
}

/// Classifies each irreducible factor `g` of `f` as reciprocal
/// (`g = ±reciprocal(g)`) or not and multiplies up the two classes.
pub fn split_reciprocal_parts(f: &Polynomial) -> Result<ReciprocalSplit> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let fact = factor_over_rationals(f)?;
    let unit = if fact.sign < 0 {
        -&fact.content
    } else {
        fact.content.clone()
    };
    let mut reciprocal_part = Polynomial::constant(unit);
    let mut nonreciprocal_part = Polynomial::one();
    for (g, e) in &fact.factors {
        if g.is_reciprocal() {
            reciprocal_part = reciprocal_part * g.pow(*e);
        } else {
            nonreciprocal_part = nonreciprocal_part * g.pow(*e);
        }
    }
    Ok(ReciprocalSplit {
        reciprocal_part,
        nonreciprocal_part,
    })
}
