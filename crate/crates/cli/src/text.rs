//! Polynomial text: `poly := sign? term (sign term)*`,
//! `term := int | int? 'x' ('^' uint)?`. Whitespace is ignored and the
//! Unicode minus sign is read as `-`.

use cunningham::Polynomial;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected '{found}' at position {position}")]
    Unexpected { found: char, position: usize },
    #[error("unexpected end of input at position {position}")]
    UnexpectedEnd { position: usize },
    #[error("non-integer coefficient at position {position}")]
    NonInteger { position: usize },
    #[error("negative exponent at position {position}")]
    NegativeExponent { position: usize },
    #[error("exponent too large at position {position}")]
    ExponentTooLarge { position: usize },
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::Empty => None,
            ParseError::Unexpected { position, .. }
            | ParseError::UnexpectedEnd { position }
            | ParseError::NonInteger { position }
            | ParseError::NegativeExponent { position }
            | ParseError::ExponentTooLarge { position } => Some(*position),
        }
    }
}

/// Largest exponent accepted; keeps a stray digit run from allocating gigabytes.
pub const MAX_EXPONENT: usize = 1 << 20;

struct Lexer {
    // (position in the original text, character), whitespace removed
    chars: Vec<(usize, char)>,
    at: usize,
    end: usize,
}

impl Lexer {
    fn new(text: &str) -> Self {
        let chars: Vec<(usize, char)> = text
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
            .collect();
        Self {
            chars,
            at: 0,
            end: text.chars().count(),
        }
    }

    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.at).copied()
    }

    fn bump(&mut self) {
        self.at += 1;
    }

    fn position(&self) -> usize {
        self.peek().map_or(self.end, |(i, _)| i)
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some((position, found)) => ParseError::Unexpected { found, position },
            None => ParseError::UnexpectedEnd { position: self.end },
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some((_, c)) = self.peek().filter(|(_, c)| c.is_ascii_digit()) {
            s.push(c);
            self.bump();
        }
        (!s.is_empty()).then_some(s)
    }
}

fn term(lex: &mut Lexer) -> Result<(usize, BigInt), ParseError> {
    let start = lex.position();
    let coeff = lex.digits();
    if let Some((_, '.' | '/')) = lex.peek() {
        return Err(ParseError::NonInteger { position: start });
    }
    let coeff = coeff.map(|d| d.parse::<BigInt>().expect("digits"));
    match lex.peek() {
        Some((_, 'x' | 'X')) => lex.bump(),
        _ => return coeff.map(|c| (0, c)).ok_or_else(|| lex.unexpected()),
    }
    let coeff = coeff.unwrap_or_else(|| BigInt::from(1));
    if !matches!(lex.peek(), Some((_, '^'))) {
        return Ok((1, coeff));
    }
    lex.bump();
    let at = lex.position();
    if let Some((_, '-')) = lex.peek() {
        return Err(ParseError::NegativeExponent { position: at });
    }
    let digits = lex.digits().ok_or_else(|| lex.unexpected())?;
    let exponent: usize = digits
        .parse()
        .ok()
        .filter(|&e| e <= MAX_EXPONENT)
        .ok_or(ParseError::ExponentTooLarge { position: at })?;
    Ok((exponent, coeff))
}

/// Parses polynomial text. Repeated exponents accumulate.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ParseError> {
    let mut lex = Lexer::new(text);
    if lex.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match lex.peek() {
            Some((_, '+')) => {
                lex.bump();
                false
            }
            Some((_, '-')) => {
                lex.bump();
                true
            }
            None if !first => break,
            _ if first => false,
            _ => return Err(lex.unexpected()),
        };
        let (e, c) = term(&mut lex)?;
        terms.push((e, if negative { -c } else { c }));
        first = false;
    }
    Ok(Polynomial::from_terms(terms))
}

/// Canonical text, e.g. `4x^5 + 2x^4 + x + 1`.
pub fn format_polynomial(f: &Polynomial) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_i64(c)
    }

    #[test]
    fn parses() {
        assert_eq!(
            parse_polynomial("4x^4+2x^3+2x^2+2x+1").unwrap(),
            p(&[1, 2, 2, 2, 4])
        );
        assert_eq!(parse_polynomial("-x^2 + 3").unwrap(), p(&[3, 0, -1]));
        assert_eq!(parse_polynomial("x + x").unwrap(), p(&[0, 2]));
        assert_eq!(parse_polynomial("x^2 - x^2").unwrap(), Polynomial::zero());
        assert_eq!(parse_polynomial("0").unwrap(), Polynomial::zero());
        assert_eq!(parse_polynomial("4 x \u{2212} 3").unwrap(), p(&[-3, 4]));
        assert_eq!(parse_polynomial("+7").unwrap(), p(&[7]));
        assert_eq!(parse_polynomial("x^0 + 2X").unwrap(), p(&[1, 2]));
    }

    #[test]
    fn rejects() {
        assert_eq!(
            parse_polynomial("2^x"),
            Err(ParseError::Unexpected {
                found: '^',
                position: 1
            })
        );
        assert_eq!(parse_polynomial(""), Err(ParseError::Empty));
        assert_eq!(parse_polynomial("   "), Err(ParseError::Empty));
        assert_eq!(
            parse_polynomial("2.5x"),
            Err(ParseError::NonInteger { position: 0 })
        );
        assert_eq!(
            parse_polynomial("1/2"),
            Err(ParseError::NonInteger { position: 0 })
        );
        assert_eq!(
            parse_polynomial("x^-2"),
            Err(ParseError::NegativeExponent { position: 2 })
        );
        assert_eq!(
            parse_polynomial("x +"),
            Err(ParseError::UnexpectedEnd { position: 3 })
        );
        assert_eq!(
            parse_polynomial("x x"),
            Err(ParseError::Unexpected {
                found: 'x',
                position: 2
            })
        );
        assert_eq!(
            parse_polynomial("--x"),
            Err(ParseError::Unexpected {
                found: '-',
                position: 1
            })
        );
        assert!(matches!(
            parse_polynomial("x^99999999999"),
            Err(ParseError::ExponentTooLarge { .. })
        ));
    }

    #[test]
    fn formats() {
        assert_eq!(
            format_polynomial(&p(&[1, 1, 2, 2, 2, 4])),
            "4x^5 + 2x^4 + 2x^3 + 2x^2 + x + 1"
        );
        assert_eq!(format_polynomial(&p(&[-3, 4])), "4x - 3");
        assert_eq!(format_polynomial(&Polynomial::zero()), "0");
    }
}
