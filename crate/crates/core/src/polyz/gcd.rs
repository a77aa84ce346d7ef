use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Polynomial;

impl Polynomial {
    /// Exact quotient over the integers; `None` when `divisor` does not
    /// divide `self` in `Z[x]`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading_coeff()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * d;
            }
            quot[i] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Polynomial::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Pseudo-remainder: `lc(divisor)^(deg self - deg divisor + 1) * self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &Polynomial) -> Polynomial {
        let (Some(nd), Some(dd)) = (self.degree(), divisor.degree()) else {
            return self.clone();
        };
        if nd < dd {
            return self.clone();
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.clone();
        let mut steps = nd - dd + 1;
        while let Some(rd) = rem.degree().filter(|&rd| rd >= dd) {
            let top = rem.coeffs[rd].clone();
            let mut coeffs: Vec<BigInt> = rem.coeffs.iter().map(|c| c * lead).collect();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                coeffs[rd - dd + j] -= &top * d;
            }
            rem = Polynomial::from_coeffs(coeffs);
            steps -= 1;
        }
        rem.scale(&num_traits::pow(lead.clone(), steps))
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    ///
    /// Uses the subresultant remainder sequence, which keeps intermediate
    /// coefficient growth polynomial without taking contents at every step.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (a.degree().unwrap() - b.degree().unwrap()) as u32;
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive_part();
            }
            if r.degree() == Some(0) {
                return Polynomial::one();
            }
            let divisor = &g * num_traits::pow(h.clone(), delta as usize);
            a = b;
            b = r
                .div_scalar_exact(&divisor)
                .expect("subresultant division is exact");
            g = a.leading_coeff().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let num = num_traits::pow(g.clone(), delta as usize);
                let den = num_traits::pow(h, (delta - 1) as usize);
                num / den
            };
        }
    }

    /// True when `self` and `other` share no nonconstant factor.
    pub fn is_coprime(&self, other: &Polynomial) -> bool {
        self.gcd(other).is_constant()
    }

    /// Primitive square-free part check: `gcd(f, f') = 1`.
    pub fn is_squarefree(&self) -> bool {
        self.degree()
            .is_some_and(|d| d == 0 || self.gcd(&self.derivative()).is_one())
    }
}
