//! Expression grammar for scalars, free-algebra elements and `t`-polynomials.
//!
//! One grammar serves all three: identifiers resolve to declared parameters
//! (scalar atoms) or generators (element atoms); `{ ... }` encloses a scalar
//! subexpression; `/` and negative powers require scalar operands. Parse
//! errors carry the line and column of the offending token.
//!
//! ```text
//! expr  := term (('+'|'-') term)*
//! term  := unary (('*'|'/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | identifier | '{' expr '}' | '(' expr ')'
//! ```

use std::fmt;

use num::BigInt;
use thiserror::Error;

use crate::freealg::{FreeElement, GenSet, GensRef, Word};
use crate::scalars::{MPoly, ParamsRef, Scalar, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at line {}, column {}: {}",
            self.line, self.col, self.message
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBrace,
    RBrace,
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(input: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = input.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    s.push(d);
                    chars.next();
                    bump(d, &mut line, &mut col);
                } else {
                    break;
                }
            }
            let n = s.parse::<BigInt>().map_err(|_| ParseError {
                line: tline,
                col: tcol,
                message: format!("invalid integer literal `{s}`"),
            })?;
            out.push(Spanned {
                tok: Tok::Int(n),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    s.push(d);
                    chars.next();
                    bump(d, &mut line, &mut col);
                } else {
                    break;
                }
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            other => {
                return Err(ParseError {
                    line: tline,
                    col: tcol,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        bump(c, &mut line, &mut col);
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    gens: &'a GensRef,
    params: &'a ParamsRef,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, at: &Spanned, message: impl Into<String>) -> ParseError {
        ParseError {
            line: at.line,
            col: at.col,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<FreeElement, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.next();
                    acc = acc.add_ref(&self.term()?);
                }
                Tok::Minus => {
                    self.next();
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreeElement, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.next();
                    acc = acc.mul_ref(&self.unary()?);
                }
                Tok::Slash => {
                    let at = self.next();
                    let rhs = self.unary()?;
                    let c = rhs
                        .as_scalar()
                        .ok_or_else(|| self.err(&at, "divisor must be a scalar expression"))?;
                    let inv = c
                        .inv()
                        .map_err(|_| self.err(&at, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<FreeElement, ParseError> {
        if matches!(self.peek().tok, Tok::Minus) {
            self.next();
            return Ok(self.unary()?.neg_ref());
        }
        self.power()
    }

    fn power(&mut self) -> Result<FreeElement, ParseError> {
        let base = self.atom()?;
        if !matches!(self.peek().tok, Tok::Caret) {
            return Ok(base);
        }
        let caret = self.next();
        let mut negative = false;
        if matches!(self.peek().tok, Tok::Minus) {
            self.next();
            negative = true;
        }
        let at = self.next();
        let n = match &at.tok {
            Tok::Int(n) => n.clone(),
            _ => return Err(self.err(&at, "expected integer exponent after `^`")),
        };
        let exp_u32: u32 = n
            .try_into()
            .map_err(|_| self.err(&at, "exponent too large"))?;
        if negative {
            let c = base.as_scalar().ok_or_else(|| {
                self.err(&caret, "negative powers require a scalar base")
            })?;
            let v = c
                .pow(-(exp_u32 as i64))
                .map_err(|_| self.err(&caret, "division by zero"))?;
            return Ok(FreeElement::scalar(self.gens, v));
        }
        Ok(base.pow(exp_u32))
    }

    fn atom(&mut self) -> Result<FreeElement, ParseError> {
        let at = self.next();
        match &at.tok {
            Tok::Int(n) => Ok(FreeElement::scalar(
                self.gens,
                Scalar::from_mpoly(MPoly::constant(self.params, n.clone())),
            )),
            Tok::Ident(name) => {
                if let Some(idx) = self.gens.index_of(name) {
                    Ok(FreeElement::generator(self.gens, self.params, idx))
                } else if self.params.index_of(name).is_some() {
                    Ok(FreeElement::scalar(
                        self.gens,
                        Scalar::param(self.params, name).unwrap(),
                    ))
                } else {
                    Err(self.err(
                        &at,
                        format!("unknown identifier `{name}` (not a generator or declared parameter)"),
                    ))
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.next();
                if !matches!(close.tok, Tok::RParen) {
                    return Err(self.err(&close, "expected `)`"));
                }
                Ok(inner)
            }
            Tok::LBrace => {
                let inner = self.expr()?;
                let close = self.next();
                if !matches!(close.tok, Tok::RBrace) {
                    return Err(self.err(&close, "expected `}`"));
                }
                let c = inner.as_scalar().ok_or_else(|| {
                    self.err(&at, "braced subexpression must be scalar-valued")
                })?;
                Ok(FreeElement::scalar(self.gens, c))
            }
            _ => Err(self.err(&at, "expected a value")),
        }
    }
}

/// Parses a free-algebra element over the given generators and parameters.
pub fn parse_element(
    input: &str,
    gens: &GensRef,
    params: &ParamsRef,
) -> Result<FreeElement, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        gens,
        params,
    };
    let e = p.expr()?;
    let end = p.next();
    if !matches!(end.tok, Tok::End) {
        return Err(p.err(&end, "unexpected trailing input"));
    }
    Ok(e)
}

/// Parses a scalar expression (no generators allowed).
pub fn parse_scalar(input: &str, params: &ParamsRef) -> Result<Scalar, ParseError> {
    let gens = GenSet::new(Vec::<String>::new()).unwrap();
    let e = parse_element(input, &gens, params)?;
    e.as_scalar().ok_or(ParseError {
        line: 1,
        col: 1,
        message: "expected a scalar expression".to_string(),
    })
}

/// Parses a polynomial in the single variable `t`.
pub fn parse_tpoly(input: &str, params: &ParamsRef) -> Result<TPoly, ParseError> {
    let gens = GenSet::new(["t"]).unwrap();
    let e = parse_element(input, &gens, params)?;
    let mut coeffs: Vec<Scalar> = Vec::new();
    for (w, c) in e.terms() {
        let d = w.len();
        while coeffs.len() <= d {
            coeffs.push(Scalar::zero(params));
        }
        coeffs[d] = coeffs[d].add_ref(c);
    }
    Ok(TPoly::from_coeffs(params, coeffs))
}

/// Formats a word for error messages; exposed for round-trip tests.
pub fn word_of(gens: &GensRef, letters: &[u8]) -> Word {
    assert!(letters.iter().all(|&l| (l as usize) < gens.len()));
    Word(letters.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Params;

    #[test]
    fn scalar_grammar() {
        let ps = Params::new(["p", "q"]).unwrap();
        let s = parse_scalar("p^-1", &ps).unwrap();
        assert_eq!(s, Scalar::param(&ps, "p").unwrap().pow(-1).unwrap());
        let s2 = parse_scalar("1/(q-1)", &ps).unwrap();
        assert_eq!(s2.to_string(), "1/(q - 1)");
        let s3 = parse_scalar("2^3 - 8", &ps).unwrap();
        assert!(s3.is_zero());
    }

    #[test]
    fn element_grammar() {
        let ps = Params::new(["q"]).unwrap();
        let gens = GenSet::txy();
        let e = parse_element("{1/(q-1)}*x*y", &gens, &ps).unwrap();
        assert_eq!(e.to_string(), "{1/(q - 1)}*x*y");
        let e2 = parse_element("y*x - q*x*y - t^2", &gens, &ps).unwrap();
        assert_eq!(e2.num_terms(), 3);
        // whitespace insensitive
        let e3 = parse_element("  y * x\n - q*x*y-t^2 ", &gens, &ps).unwrap();
        assert_eq!(e2, e3);
    }

    #[test]
    fn tpoly_grammar() {
        let ps = Params::new(["p", "k"]).unwrap();
        let f = parse_tpoly("p*t + k", &ps).unwrap();
        assert_eq!(f.degree(), Some(1));
        assert_eq!(f.coeff(1), Scalar::param(&ps, "p").unwrap());
        assert_eq!(f.coeff(0), Scalar::param(&ps, "k").unwrap());
        let g = parse_tpoly("t^2 - 2*t + 1", &ps).unwrap();
        assert_eq!(g.coeff(2), Scalar::one(&ps));
        assert_eq!(g.coeff(1), Scalar::from_int(&ps, -2));
    }

    #[test]
    fn error_positions() {
        let ps = Params::new(["p"]).unwrap();
        let gens = GenSet::txy();
        let err = parse_element("x *\n@", &gens, &ps).unwrap_err();
        assert_eq!((err.line, err.col), (2, 1));
        let err2 = parse_element("x * w", &gens, &ps).unwrap_err();
        assert_eq!((err2.line, err2.col), (1, 5));
        assert!(err2.message.contains("unknown identifier"));
    }

    #[test]
    fn scalar_round_trip_display() {
        let ps = Params::new(["p", "q"]).unwrap();
        for src in ["p", "1/(q-1)", "(p^2-1)/(p-1)", "-3/7", "p*q - 2"] {
            let s = parse_scalar(src, &ps).unwrap();
            let printed = s.to_string();
            let again = parse_scalar(&printed, &ps).unwrap();
            assert_eq!(s, again, "round trip failed for {src} -> {printed}");
        }
    }

    #[test]
    fn element_round_trip_display() {
        let ps = Params::new(["p", "q"]).unwrap();
        let gens = GenSet::txy();
        for src in [
            "x*y + t",
            "y*t - {p}*t*y",
            "x^2*y + 2*x*t",
            "{1/(q-1)}*x*y - {p/(p-1)}*t",
            "3",
            "0",
        ] {
            let e = parse_element(src, &gens, &ps).unwrap();
            let printed = e.to_string();
            let again = parse_element(&printed, &gens, &ps).unwrap();
            assert_eq!(e, again, "round trip failed for {src} -> {printed}");
        }
    }

    #[test]
    fn division_rules() {
        let ps = Params::new(["q"]).unwrap();
        let gens = GenSet::txy();
        // dividing an element by a scalar is fine
        let e = parse_element("x/2", &gens, &ps).unwrap();
        assert_eq!(e.to_string(), "{1/2}*x");
        // dividing by an element is rejected
        assert!(parse_element("x/y", &gens, &ps).is_err());
        // dividing by zero is rejected
        assert!(parse_element("x/0", &gens, &ps).is_err());
        // negative power of an element is rejected
        assert!(parse_element("x^-1", &gens, &ps).is_err());
    }
}
