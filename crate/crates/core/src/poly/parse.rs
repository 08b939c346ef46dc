//! Text format for polynomials.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := factor ('*'? factor)*
//! factor   := rational | identifier ('^' nat)? | '(' expr ')' ('^' nat)?
//! rational := int ('/' posint)?
//! ```
//!
//! Juxtaposition (`3x`, `2 x y`) multiplies. Output always uses explicit `*`
//! and `^`, with terms in descending `GrevLex`, so printing and re-parsing is a
//! fixed point.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Poly, RingSpec};
use crate::{Error, Rational, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(Error::Syntax {
                    offset: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    Ok(out)
}

/// Target of the parser: anything with a ring structure and named generators.
pub(crate) trait ParseTarget {
    type Elem: Clone;

    fn constant(&self, c: Rational) -> Self::Elem;
    /// Resolves an identifier, or `None` when it is not a generator.
    fn generator(&self, name: &str) -> Option<Self::Elem>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn pow(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut acc = self.constant(Rational::one());
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }
}

struct Parser<'a, T: ParseTarget> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
    target: &'a T,
}

impl<T: ParseTarget> Parser<'_, T> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(_, o)| *o)
            .unwrap_or(self.end)
    }

    fn syntax<R>(&self, message: impl Into<String>) -> Result<R> {
        Err(Error::Syntax {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<T::Elem> {
        let negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut acc = self.term()?;
        if negate {
            acc = self.target.neg(&acc);
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.target.add(&acc, &t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = self.target.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<T::Elem> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let f = self.factor()?;
                    acc = self.target.mul(&acc, &f);
                }
                Some(Token::Int(_) | Token::Ident(_) | Token::LParen) => {
                    let f = self.factor()?;
                    acc = self.target.mul(&acc, &f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() != Some(&Token::Caret) {
            return Ok(1);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                let e = u32::try_from(&n).or_else(|_| self.syntax("exponent too large"))?;
                self.pos += 1;
                Ok(e)
            }
            _ => self.syntax("expected a natural number after `^`"),
        }
    }

    fn factor(&mut self) -> Result<T::Elem> {
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(self.target.constant(Rational::new(n, d)))
                        }
                        Some(Token::Int(_)) => self.syntax("zero denominator"),
                        _ => self.syntax("expected a positive integer after `/`"),
                    }
                } else {
                    Ok(self.target.constant(Rational::from_integer(n)))
                }
            }
            Some(Token::Ident(name)) => {
                let offset = self.offset();
                let g = self
                    .target
                    .generator(&name)
                    .ok_or(Error::UnknownVariable { name, offset })?;
                self.pos += 1;
                let e = self.exponent()?;
                Ok(if e == 1 { g } else { self.target.pow(&g, e) })
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.syntax("expected `)`");
                }
                self.pos += 1;
                let e = self.exponent()?;
                Ok(if e == 1 {
                    inner
                } else {
                    self.target.pow(&inner, e)
                })
            }
            Some(_) => self.syntax("expected a number, variable or `(`"),
            None => self.syntax("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_with<T: ParseTarget>(text: &str, target: &T) -> Result<T::Elem> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "empty input".into(),
        });
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
        target,
    };
    let value = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return parser.syntax("unexpected trailing input");
    }
    Ok(value)
}

struct CommutativeTarget<'a>(&'a RingSpec);

impl ParseTarget for CommutativeTarget<'_> {
    type Elem = Poly;

    fn constant(&self, c: Rational) -> Poly {
        Poly::constant(self.0, c)
    }

    fn generator(&self, name: &str) -> Option<Poly> {
        self.0.index_of(name).map(|i| Poly::var(self.0, i))
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a + b
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a - b
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a * b
    }

    fn neg(&self, a: &Poly) -> Poly {
        -a
    }

    fn pow(&self, a: &Poly, e: u32) -> Poly {
        a.pow(e)
    }
}

/// Parses `text` as an element of `Q[ring]`.
pub fn parse_poly(text: &str, ring: &RingSpec) -> Result<Poly> {
    parse_with(text, &CommutativeTarget(ring))
}

/// Writes `x^2*y` style monomials; `names[i]` is the printed name of exponent `i`.
pub(crate) fn write_monomial(out: &mut String, m: &Monomial, names: &[impl AsRef<str>]) {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(names[i].as_ref());
        if e > 1 {
            write!(out, "^{e}").unwrap();
        }
    }
}

/// Shared term printer: `terms` must already be in display order.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Monomial, &'a Rational)>,
    names: &[impl AsRef<str>],
) -> fmt::Result {
    let mut out = String::new();
    for (m, c) in terms {
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = c.abs();
        if m.is_one() {
            write!(out, "{a}").unwrap();
        } else {
            if !a.is_one() {
                write!(out, "{a}*").unwrap();
            }
            write_monomial(&mut out, m, names);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    f.write_str(&out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms().iter().map(|(m, c)| (m, c)),
            self.ring().names(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring() -> RingSpec {
        RingSpec::new(["x", "y"]).unwrap()
    }

    #[test]
    fn parses_examples() {
        let f = parse_poly("x^2-y^3", &ring()).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.coefficient(&Monomial::from([2, 0])), Rational::one());
        assert_eq!(f.coefficient(&Monomial::from([0, 3])), -Rational::one());
        let reiffen = parse_poly("x^4+y^5+x*y^4", &ring()).unwrap();
        assert_eq!(reiffen.to_string(), "x*y^4+y^5+x^4");
        assert!(parse_poly("0", &ring()).unwrap().is_zero());
        assert_eq!(
            parse_poly("3x y - 1/2(x+y)^2", &ring())
                .unwrap()
                .to_string(),
            "-1/2*x^2+2*x*y-1/2*y^2"
        );
        assert_eq!(parse_poly("-x", &ring()).unwrap().to_string(), "-x");
    }

    #[test]
    fn reports_errors_with_offsets() {
        assert_eq!(
            parse_poly("x+z", &ring()),
            Err(Error::UnknownVariable {
                name: "z".into(),
                offset: 2
            })
        );
        match parse_poly("x^2 +", &ring()) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("unexpected {other:?}"),
        }
        match parse_poly("x $ y", &ring()) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_poly("1/0", &ring()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_poly("(x", &ring()),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(parse_poly("", &ring()), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_poly("x^y", &ring()),
            Err(Error::Syntax { .. })
        ));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(((0u32..4, 0u32..4), -5i64..6, 1i64..4), 0..6).prop_map(|terms| {
            let r = ring();
            Poly::from_terms(
                &r,
                terms.into_iter().map(|((a, b), n, d)| {
                    (Monomial::from([a, b]), Rational::new(n.into(), d.into()))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(p in small_poly()) {
            let printed = p.to_string();
            let back = parse_poly(&printed, &ring()).unwrap();
            prop_assert_eq!(&back, &p);
            prop_assert_eq!(back.to_string(), printed);
        }
    }
}
