//! Dense univariate polynomials with arbitrary-precision integer coefficients.
//!
//! `Polynomial` stores coefficients in ascending degree order: `coeffs[i]` is
//! the coefficient of `x^i`. The representation is canonical: the zero
//! polynomial is the empty vector, and otherwise the last entry is nonzero.

mod fmt;
mod gcd;

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers, used for evaluation points and rational roots.
pub type Rational = num_rational::BigRational;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^deg`; zero when `c` is zero.
    pub fn monomial(c: BigInt, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        Self { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds `sum c * x^e` from `(e, c)` pairs; repeated exponents accumulate.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (e, c) in terms {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for the zero polynomial and nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn require_degree(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Exponents carrying nonzero coefficients, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.support().count()
    }

    /// One step of a Cunningham recurrence: `x * f + eps`.
    pub fn chain_step(&self, eps: i64) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::from(eps));
        coeffs.extend(self.coeffs.iter().cloned());
        Self::from_coeffs(coeffs)
    }

    /// Exact value at a rational point (Horner).
    pub fn eval_at(&self, q: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| {
            acc * q + Rational::from_integer(c.clone())
        })
    }

    /// Exact value at an integer point (Horner).
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `x^deg f * f(1/x)`: the coefficient sequence reversed.
    ///
    /// When `f(0) = 0` the reversed sequence has leading zeros, which are
    /// dropped, so the degree falls by the x-adic valuation of `f`.
    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_coeffs(
            self.coeffs.iter().rev().cloned().collect(),
        ))
    }

    /// `f = ±reciprocal(f)`. Always false when `f(0) = 0` or `f` is zero.
    pub fn is_reciprocal(&self) -> bool {
        if self.is_zero() || self.coeffs[0].is_zero() {
            return false;
        }
        let n = self.coeffs.len();
        let same = (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i]);
        same || (0..n).all(|i| self.coeffs[i] == -&self.coeffs[n - 1 - i])
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| if g.is_one() { g } else { g.gcd(c) })
    }

    /// Splits `f = sign * content * primitive` with `primitive` having
    /// positive leading coefficient and unit content.
    pub fn content_and_primitive(&self) -> Result<(BigInt, i8, Self)> {
        let lead = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        let sign: i8 = if lead.is_negative() { -1 } else { 1 };
        let content = self.content();
        let divisor = if sign < 0 { -&content } else { content.clone() };
        let primitive = Self {
            coeffs: self.coeffs.iter().map(|c| c / &divisor).collect(),
        };
        Ok((content, sign, primitive))
    }

    /// Primitive part with positive leading coefficient; zero maps to zero.
    pub fn primitive_part(&self) -> Self {
        match self.content_and_primitive() {
            Ok((_, _, p)) => p,
            Err(_) => Self::zero(),
        }
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one()
    }

    /// Sign changes in the sequence of nonzero coefficients.
    pub fn descartes_sign_changes(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let signs: Vec<bool> = self
            .coeffs
            .iter()
            .filter(|c| !c.is_zero())
            .map(Signed::is_negative)
            .collect();
        Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides every coefficient by `c`; `None` unless all divide exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            coeffs.push(q);
        }
        Some(Self { coeffs })
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Largest `k` with `x^k | f` (zero for the zero polynomial).
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Removes the largest power of `x` dividing `f`, returning its exponent.
    pub fn strip_x_power(&self) -> (usize, Self) {
        let v = self.x_valuation();
        (v, Self::from_coeffs(self.coeffs[v..].to_vec()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(x^v)`.
    pub fn compose_x_power(&self, v: usize) -> Self {
        if v == 0 || self.is_zero() {
            return self.clone();
        }
        Self::from_terms(self.support().map(|i| (i * v, self.coeffs[i].clone())))
    }

    /// Sum of squared coefficients.
    pub fn norm_squared(&self) -> BigInt {
        self.coeffs.iter().map(|c| c * c).sum()
    }

    /// Largest coefficient magnitude.
    pub fn max_norm(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_default()
    }

    pub fn negated(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Ord for Polynomial {
    /// Degree first, then coefficients from the leading term down.
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> Polynomial {
    let n = a.len().max(b.len());
    let coeffs = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_default();
            match b.get(i) {
                Some(y) if negate_b => x - y,
                Some(y) => x + y,
                None => x,
            }
        })
        .collect();
    Polynomial::from_coeffs(coeffs)
}

fn mul_coeffs(a: &[BigInt], b: &[BigInt]) -> Polynomial {
    if a.is_empty() || b.is_empty() {
        return Polynomial::zero();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    Polynomial::from_coeffs(out)
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $body:expr) => {
        impl $Trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $Trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $Trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
        impl $Trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $body(&self.coeffs, &rhs.coeffs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| add_coeffs(a, b, false));
forward_binop!(Sub, sub, |a, b| add_coeffs(a, b, true));
forward_binop!(Mul, mul, mul_coeffs);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| acc * p)
    }
}

impl<'a> std::iter::Product<&'a Polynomial> for Polynomial {
    fn product<I: Iterator<Item = &'a Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::one(), |acc, p| &acc * p)
    }
}
