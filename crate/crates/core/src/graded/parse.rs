//! Polynomial literals such as `z^4 + x*y*z^2 + a*x^2*y^2` or
//! `(u^2+u) x^2 y^2`.
//!
//! Grammar, with `*` optional between factors:
//!
//! ```text
//! sum    := term ('+' term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' integer)?
//! atom   := 'x' | 'y' | 'z' | 'a' | scalar | '(' sum ')'
//! ```
//!
//! `a` stands for the distinguished parameter α when one is supplied.
//! Scalars are whatever the coefficient field accepts (`0`, `1`, `u`,
//! `0x..`, `t`). Since the characteristic is two, `-` is read as `+`.

use super::{GradedError, Poly};
use crate::fields::Field;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(char),
    Num(String),
    Plus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, GradedError> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        i += 1;
        let tok = match c {
            ' ' | '\t' | '\n' => continue,
            '+' | '-' => Tok::Plus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::Open,
            ')' => Tok::Close,
            '0'..='9' => {
                let mut lit = c.to_string();
                if c == '0' && chars.get(i) == Some(&'x') {
                    lit.push('x');
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_hexdigit() {
                        lit.push(chars[i]);
                        i += 1;
                    }
                } else {
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        lit.push(chars[i]);
                        i += 1;
                    }
                }
                Tok::Num(lit)
            }
            c if c.is_ascii_alphabetic() => Tok::Ident(c),
            _ => {
                return Err(GradedError::Parse {
                    pos: start,
                    msg: format!("unexpected character `{c}`"),
                })
            }
        };
        out.push((start, tok));
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    field: &'a F,
    alpha: Option<&'a F::Elem>,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(p, _)| *p)
    }

    fn err(&self, msg: impl Into<String>) -> GradedError {
        GradedError::Parse {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn sum(&mut self) -> Result<Poly<F>, GradedError> {
        let mut acc = self.term()?;
        while self.peek() == Some(&Tok::Plus) {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Tok::Ident(_) | Tok::Num(_) | Tok::Open))
    }

    fn term(&mut self) -> Result<Poly<F>, GradedError> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.starts_factor() {
                return Ok(acc);
            }
            acc = acc.mul(&self.factor()?);
        }
    }

    fn factor(&mut self) -> Result<Poly<F>, GradedError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        match self.peek().cloned() {
            Some(Tok::Num(n)) if !n.starts_with("0x") => {
                let e: u64 = n.parse().map_err(|_| self.err("exponent too large"))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            _ => Err(self.err("expected an exponent")),
        }
    }

    fn atom(&mut self) -> Result<Poly<F>, GradedError> {
        let f = self.field;
        let tok = self.peek().cloned().ok_or_else(|| self.err("unexpected end of input"))?;
        let p = match tok {
            Tok::Ident('x') => Poly::mono(f, 1, 0, 0),
            Tok::Ident('y') => Poly::mono(f, 0, 1, 0),
            Tok::Ident('z') => Poly::mono(f, 0, 0, 1),
            Tok::Ident('a') => match self.alpha {
                Some(a) => Poly::constant(f, a.clone()),
                None => return Err(self.err("`a` used but no parameter value is set")),
            },
            Tok::Ident(c) => {
                let v = f
                    .parse_atom(&c.to_string())
                    .ok_or_else(|| self.err(format!("unknown symbol `{c}`")))?;
                Poly::constant(f, v)
            }
            Tok::Num(n) => {
                let v = match f.parse_atom(&n) {
                    Some(v) => v,
                    // integers reduce mod 2
                    None => match n.parse::<u64>() {
                        Ok(k) => f.from_bool(k % 2 == 1),
                        Err(_) => return Err(self.err(format!("bad literal `{n}`"))),
                    },
                };
                Poly::constant(f, v)
            }
            Tok::Open => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Tok::Close) {
                    return Err(self.err("expected `)`"));
                }
                inner
            }
            _ => return Err(self.err("expected a factor")),
        };
        self.pos += 1;
        Ok(p)
    }
}

/// Parses a polynomial literal over `field`, with `a` bound to `alpha`.
pub fn parse_poly<F: Field>(field: &F, s: &str, alpha: Option<&F::Elem>) -> Result<Poly<F>, GradedError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(GradedError::Parse {
            pos: 0,
            msg: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        field,
        alpha,
        toks,
        pos: 0,
        len: s.len(),
    };
    let out = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}
