//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expression := term (('+'|'-') term)*
//! term       := factor ('*' factor)*
//! factor     := rational | variable ('^' nonneg-integer)? | '(' expression ')' | '-' factor
//! rational   := integer ('/' positive-integer)?
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::{MultiPoly, PolyError};

#[derive(Clone, Debug, PartialEq)]
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
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((start, Tok::Int(s.parse().unwrap())));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push((start, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => {
                return Err(PolyError::Syntax {
                    pos: start,
                    msg: format!("unexpected character '{other}'"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    vars: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn syntax<T>(&self, msg: &str) -> Result<T, PolyError> {
        Err(PolyError::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn expression(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.next();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let at = self.offset();
        match self.next() {
            Some(Tok::Minus) => Ok(-self.factor()?),
            Some(Tok::LParen) => {
                let inner = self.expression()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => {
                        self.pos -= 1;
                        self.syntax("expected ')'")
                    }
                }
            }
            Some(Tok::Int(n)) => {
                let mut value = BigRational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.next();
                    match self.next() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            value /= BigRational::from_integer(d);
                        }
                        Some(Tok::Int(_)) => {
                            self.pos -= 1;
                            return self.syntax("zero denominator");
                        }
                        _ => {
                            self.pos -= 1;
                            return self.syntax("expected positive integer denominator");
                        }
                    }
                }
                Ok(MultiPoly::constant(self.vars, value))
            }
            Some(Tok::Ident(name)) => {
                let idx = self.vars.iter().position(|v| *v == name).ok_or(
                    PolyError::UnknownVariable {
                        name: name.clone(),
                        pos: Some(at),
                    },
                )?;
                let mut exp = 1u32;
                if let Some(Tok::Caret) = self.peek() {
                    self.next();
                    let ep = self.offset();
                    match self.next() {
                        Some(Tok::Int(n)) => {
                            if let Some(Tok::Slash) = self.peek() {
                                return Err(PolyError::BadExponent {
                                    pos: ep,
                                    msg: "exponent must be an integer".into(),
                                });
                            }
                            exp = u32::try_from(n).map_err(|_| PolyError::BadExponent {
                                pos: ep,
                                msg: "exponent too large".into(),
                            })?;
                        }
                        Some(Tok::Minus) => {
                            return Err(PolyError::BadExponent {
                                pos: ep,
                                msg: "exponent must be non-negative".into(),
                            })
                        }
                        _ => {
                            self.pos -= 1;
                            return self.syntax("expected integer exponent");
                        }
                    }
                }
                let mut e = vec![0; self.vars.len()];
                e[idx] = exp;
                Ok(MultiPoly::monomial(self.vars, e, BigRational::one()))
            }
            Some(_) => {
                self.pos -= 1;
                self.syntax("expected a number, variable, '(' or '-'")
            }
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses `text` into a polynomial over `variables`.
pub fn parse_poly<S: AsRef<str>>(text: &str, variables: &[S]) -> Result<MultiPoly, PolyError> {
    let vars: Vec<String> = variables.iter().map(|v| v.as_ref().to_string()).collect();
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.chars().count(),
        vars: &vars,
    };
    let out = p.expression()?;
    if p.pos < p.toks.len() {
        return p.syntax("unexpected trailing input");
    }
    Ok(out)
}
