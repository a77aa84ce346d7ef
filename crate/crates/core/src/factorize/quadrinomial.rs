//! Structure checks on four-term polynomials `a x^m + b x^n + c x^p + d`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::factor_over_rationals;
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::polyz::Polynomial;

/// `a x^m + b x^n + c x^p + d` with nonzero coefficients and `m > n > p > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quadrinomial {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
    pub m: usize,
    pub n: usize,
    pub p: usize,
}

impl Quadrinomial {
    pub fn new(
        a: BigInt,
        m: usize,
        b: BigInt,
        n: usize,
        c: BigInt,
        p: usize,
        d: BigInt,
    ) -> Result<Self> {
        if [&a, &b, &c, &d].iter().any(|x| x.is_zero()) {
            return Err(Error::InvalidParams(
                "quadrinomial coefficients must be nonzero".into(),
            ));
        }
        if !(m > n && n > p && p > 0) {
            return Err(Error::InvalidParams(format!(
                "quadrinomial exponents must satisfy m > n > p > 0, got {m}, {n}, {p}"
            )));
        }
        Ok(Self {
            a,
            b,
            c,
            d,
            m,
            n,
            p,
        })
    }

    /// Reads a polynomial with exactly four nonzero terms, one of them constant.
    pub fn from_polynomial(f: &Polynomial) -> Result<Self> {
        let support: Vec<usize> = f.support().collect();
        if support.len() != 4 || support[0] != 0 {
            return Err(Error::InvalidParams(format!(
                "{f} is not a quadrinomial with nonzero constant term"
            )));
        }
        let c = |i: usize| f.coeff(support[i]);
        Self::new(c(3), support[3], c(2), support[2], c(1), support[1], c(0))
    }

    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.terms())
    }

    /// `(exponent, coefficient)` for `x^m, x^n, x^p, x^0`.
    pub fn terms(&self) -> [(usize, BigInt); 4] {
        [
            (self.m, self.a.clone()),
            (self.n, self.b.clone()),
            (self.p, self.c.clone()),
            (0, self.d.clone()),
        ]
    }
}

impl TryFrom<&Polynomial> for Quadrinomial {
    type Error = Error;
    fn try_from(f: &Polynomial) -> Result<Self> {
        Self::from_polynomial(f)
    }
}

/// Integer binomials `(t x^p + r2, s x^n + r1)` whose product is `q`, if any.
///
/// Four distinct exponents force the split `m = n + p`, and then
/// `st = a, s r2 = b, t r1 = c, r1 r2 = d`; every divisor `s` of `a` is tried.
/// By Gauss's lemma a rational factorization into binomials rescales to an
/// integral one, so none here means none over the rationals either.
pub fn is_binomial_product(q: &Quadrinomial) -> Option<(Polynomial, Polynomial)> {
    if q.n + q.p != q.m {
        return None;
    }
    let positive = divisors(&q.a);
    let candidates = positive.iter().cloned().chain(positive.iter().map(|s| -s));
    for s in candidates {
        let t = &q.a / &s;
        let (r2, rem_b) = q.b.div_rem(&s);
        let (r1, rem_c) = q.c.div_rem(&t);
        if !rem_b.is_zero() || !rem_c.is_zero() || &r1 * &r2 != q.d {
            continue;
        }
        let low = Polynomial::from_terms([(q.p, t), (0, r2)]);
        let high = Polynomial::from_terms([(q.n, s), (0, r1)]);
        return Some((low, high));
    }
    None
}

/// One way of dividing a quadrinomial into two binomial parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCheck {
    pub parts: (Polynomial, Polynomial),
    /// `gcd` of the two parts with their powers of `x` removed.
    pub common: Polynomial,
    /// Irreducible factors of `common`, each flagged reciprocal or not.
    pub common_factors: Vec<(Polynomial, bool)>,
}

impl SplitCheck {
    pub fn has_nonreciprocal_common_factor(&self) -> bool {
        self.common_factors
            .iter()
            .any(|(_, reciprocal)| !reciprocal)
    }

    pub fn nonreciprocal_common_factors(&self) -> impl Iterator<Item = &Polynomial> {
        self.common_factors
            .iter()
            .filter(|(_, reciprocal)| !reciprocal)
            .map(|(g, _)| g)
    }
}

/// The three pairings of the four terms into two-term parts:
/// `{x^m, x^n} | {x^p, 1}`, `{x^m, x^p} | {x^n, 1}`, `{x^m, 1} | {x^n, x^p}`.
pub fn two_part_split_check(q: &Quadrinomial) -> Vec<SplitCheck> {
    let [t_m, t_n, t_p, t_0] = q.terms();
    let pairings = [
        ([&t_m, &t_n], [&t_p, &t_0]),
        ([&t_m, &t_p], [&t_n, &t_0]),
        ([&t_m, &t_0], [&t_n, &t_p]),
    ];
    pairings
        .into_iter()
        .map(|(first, second)| {
            let g1 = Polynomial::from_terms(first.into_iter().cloned());
            let g2 = Polynomial::from_terms(second.into_iter().cloned());
            let common = g1.strip_x_power().1.gcd(&g2.strip_x_power().1);
            let common_factors = if common.is_constant() {
                Vec::new()
            } else {
                factor_over_rationals(&common)
                    .expect("nonzero gcd")
                    .factors
                    .into_iter()
                    .map(|(g, _)| {
                        let r = g.is_reciprocal();
                        (g, r)
                    })
                    .collect()
            };
            SplitCheck {
                parts: (g1, g2),
                common,
                common_factors,
            }
        })
        .collect()
}

/// `(v, g)` with `v` the gcd of the exponents carrying nonzero coefficients
/// and `g(x^v) = f`. Constants and `v = 1` return `f` unchanged with `v = 1`.
pub fn exponent_gcd_reduce(f: &Polynomial) -> Result<(usize, Polynomial)> {
    f.require_degree()?;
    let v = f.support().fold(0usize, |g, e| g.gcd(&e));
    if v <= 1 {
        return Ok((1, f.clone()));
    }
    let reduced = Polynomial::from_terms(f.support().map(|e| (e / v, f.coeff(e))));
    Ok((v, reduced))
}

impl std::fmt::Display for Quadrinomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}
