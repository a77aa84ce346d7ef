use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Polynomial;

/// Canonical text: descending degree, unit coefficients elided, zero terms
/// omitted, `" + "`/`" - "` separators, and `"0"` for the zero polynomial.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}
