//! Text grammar for polynomials.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-' factor | primary ('^' integer)?
//! primary := integer ('/' integer)? | variable | '(' expr ')'
//! ```
//!
//! The printer (`Display` for [`Poly`]) emits this grammar, and printing a
//! parsed polynomial then parsing it again is a fixed point.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rat;
use crate::ring::PolyRing;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((Tok::Plus, start)),
            '-' => out.push((Tok::Minus, start)),
            '*' => out.push((Tok::Star, start)),
            '/' => out.push((Tok::Slash, start)),
            '^' => out.push((Tok::Caret, start)),
            '(' => out.push((Tok::LParen, start)),
            ')' => out.push((Tok::RParen, start)),
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Num(n), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    ring: &'a Arc<PolyRing>,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.here(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            Some(Tok::Minus) => {
                self.pos += 1;
                -&self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.factor()?);
        }
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    let e: u32 = match u32::try_from(n) {
                        Ok(e) if e <= 10_000 => e,
                        _ => return self.err("exponent too large"),
                    };
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut value = Rat::from_bigint(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => {
                            self.pos += 1;
                            value = value.div(&Rat::from_bigint(d));
                        }
                        _ => return self.err("expected a nonzero integer denominator"),
                    }
                }
                let c = self.ring.field().from_rat(&value)?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Poly::var_named(self.ring, &name).ok_or(Error::UnknownVariable { name, pos: at })
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("expected a number, variable or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` as an element of `ring`.
pub fn parse_poly(ring: &Arc<PolyRing>, text: &str) -> Result<Poly> {
    let toks = lex(text)?;
    let mut p = Parser {
        ring,
        toks,
        pos: 0,
        end: text.len(),
    };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::{Mono, MonomialOrder};
    use proptest::prelude::*;

    fn r3() -> Arc<PolyRing> {
        PolyRing::xyz(FieldSpec::Rational)
    }

    #[test]
    fn linear_form() {
        let r = r3();
        let f = parse_poly(&r, "x + 2*y - z").unwrap();
        assert_eq!(f.linear_coeff(0), Rat::from_int(1));
        assert_eq!(f.linear_coeff(1), Rat::from_int(2));
        assert_eq!(f.linear_coeff(2), Rat::from_int(-1));
        assert!(f.is_linear_form());
    }

    #[test]
    fn zero_and_expansion() {
        let r = r3();
        assert!(parse_poly(&r, "0").unwrap().terms().is_empty());
        let f = parse_poly(&r, "(x+y)^2 - x^2 - 2*x*y").unwrap();
        assert_eq!(f.terms(), &[(Mono::from_exps(&[0, 2, 0]), Rat::ONE)]);
    }

    #[test]
    fn errors_carry_positions() {
        let r = r3();
        assert_eq!(
            parse_poly(&r, "x + w"),
            Err(Error::UnknownVariable {
                name: "w".into(),
                pos: 4
            })
        );
        assert!(matches!(parse_poly(&r, "x+*y"), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse_poly(&r, "(x"), Err(Error::Syntax { pos: 2, .. })));
        let fp = PolyRing::new(&["x"], MonomialOrder::Degrevlex, FieldSpec::prime(7).unwrap()).unwrap();
        assert!(matches!(parse_poly(&fp, "1/7*x"), Err(Error::NotInvertible(_))));
        assert_eq!(parse_poly(&fp, "1/2*x").unwrap().to_string(), "-3*x");
    }

    #[test]
    fn rational_coefficients_print() {
        let r = r3();
        let f = parse_poly(&r, "-1/2*x^2*y + 3 - z").unwrap();
        assert_eq!(f.to_string(), "-1/2*x^2*y - z + 3");
    }

    proptest! {
        #[test]
        fn print_parse_fixed_point(cs in proptest::collection::vec((-20i64..20, 1i64..5), 10)) {
            let r = r3();
            let mons: Vec<Mono> = (0..=2).flat_map(|d| r.monomials_of_degree(d)).collect();
            let f = Poly::from_terms(
                &r,
                mons.iter().zip(&cs).map(|(m, (a, b))| (*m, Rat::new(*a, *b))).collect(),
            );
            let g = parse_poly(&r, &f.to_string()).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), f.to_string());
        }
    }
}
