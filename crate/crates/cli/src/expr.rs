//! Polynomial expressions in `x0..x{n-1}`, `i` and the deformation symbol `a`.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | 'i' | 'a' | 'x' nat | '(' expr ')'
//! ```
//!
//! A rational literal is `nat` or `nat/nat`; there is no general division.

use std::fmt;

use kforge_core::gauss::fmt_rational;
use kforge_core::{Gauss, Poly, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    I,
    A,
    X(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown symbol `{symbol}` at line {line}, column {column}")]
    UnknownSymbol { symbol: String, line: usize, column: usize },
    #[error("x{index} at line {line}, column {column} is out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize, line: usize, column: usize },
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    dim: usize,
}

impl Parser {
    fn location(&self, pos: usize) -> (usize, usize) {
        let mut line = 1;
        let mut column = 1;
        for &c in &self.chars[..pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        (line, column)
    }

    fn syntax(&self, pos: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.location(pos);
        ParseError::Syntax { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Option<(String, usize)> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(char::is_ascii_digit) {
            self.pos += 1;
        }
        (self.pos > start).then(|| (self.chars[start..self.pos].iter().collect(), start))
    }

    fn int(&self, digits: &str, at: usize) -> Result<i128, ParseError> {
        digits.parse::<i128>().map_err(|_| self.syntax(at, "integer literal too large"))
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if self.eat('-') { Expr::Neg(Box::new(self.term()?)) } else { self.term()? };
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.eat('*') {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let (digits, at) = self.nat().ok_or_else(|| self.syntax(self.pos, "expected a natural exponent"))?;
            let e = u32::try_from(self.int(&digits, at)?).map_err(|_| self.syntax(at, "exponent too large"))?;
            return Ok(Expr::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(c) = self.peek() else {
            return Err(self.syntax(self.pos, "unexpected end of input"));
        };
        let start = self.pos;
        match c {
            '(' => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.syntax(self.pos, "expected `)`"));
                }
                Ok(inner)
            }
            '0'..='9' => {
                let (num, at) = self.nat().expect("digit present");
                let numer = self.int(&num, at)?;
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    let (den, at) = self.nat().ok_or_else(|| self.syntax(self.pos, "division is only allowed inside a rational literal"))?;
                    let denom = self.int(&den, at)?;
                    if denom == 0 {
                        return Err(self.syntax(at, "zero denominator"));
                    }
                    return Ok(Expr::Num(Rational::new(numer, denom)));
                }
                Ok(Expr::Num(Rational::from_integer(numer)))
            }
            c if c.is_alphabetic() || c == '_' => {
                while self.chars.get(self.pos).is_some_and(|c| c.is_alphanumeric() || *c == '_') {
                    self.pos += 1;
                }
                let word: String = self.chars[start..self.pos].iter().collect();
                let (line, column) = self.location(start);
                match word.as_str() {
                    "i" => Ok(Expr::I),
                    "a" => Ok(Expr::A),
                    w if w.len() > 1 && w.starts_with('x') && w[1..].bytes().all(|b| b.is_ascii_digit()) => {
                        let index: usize = w[1..].parse().map_err(|_| self.syntax(start, "index too large"))?;
                        if index >= self.dim {
                            return Err(ParseError::IndexOutOfRange { index, dim: self.dim, line, column });
                        }
                        Ok(Expr::X(index))
                    }
                    _ => Err(ParseError::UnknownSymbol { symbol: word, line, column }),
                }
            }
            c => Err(self.syntax(start, format!("unexpected character `{c}`"))),
        }
    }
}

/// Parses a polynomial in `x0..x{dim-1}`.
pub fn parse_poly(src: &str, dim: usize) -> Result<Expr, ParseError> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, dim };
    let e = p.expr()?;
    if let Some(c) = p.peek() {
        return Err(p.syntax(p.pos, format!("unexpected character `{c}`")));
    }
    Ok(e)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Neg(_) => 2,
        Expr::Mul(..) => 3,
        Expr::Pow(..) => 4,
        Expr::Num(r) if !r.is_integer() => 3,
        _ => 5,
    }
}

fn wrap(e: &Expr, min: u8) -> String {
    if prec(e) < min {
        format!("({e})")
    } else {
        e.to_string()
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) if *r.numer() < 0 => write!(f, "({})", fmt_rational(r)),
            Expr::Num(r) => f.write_str(&fmt_rational(r)),
            Expr::I => f.write_str("i"),
            Expr::A => f.write_str("a"),
            Expr::X(k) => write!(f, "x{k}"),
            Expr::Neg(e) => write!(f, "-{}", wrap(e, 3)),
            Expr::Add(l, r) => write!(f, "{} + {}", wrap(l, 1), wrap(r, 3)),
            Expr::Sub(l, r) => write!(f, "{} - {}", wrap(l, 1), wrap(r, 3)),
            Expr::Mul(l, r) => write!(f, "{}*{}", wrap(l, 3), wrap(r, 4)),
            Expr::Pow(b, e) => write!(f, "{}^{e}", wrap(b, 5)),
        }
    }
}

impl Expr {
    /// Total degree in the coordinates, ignoring cancellations.
    pub fn degree(&self) -> u32 {
        match self {
            Expr::Num(_) | Expr::I | Expr::A => 0,
            Expr::X(_) => 1,
            Expr::Neg(e) => e.degree(),
            Expr::Add(l, r) | Expr::Sub(l, r) => l.degree().max(r.degree()),
            Expr::Mul(l, r) => l.degree() + r.degree(),
            Expr::Pow(b, e) => b.degree() * e,
        }
    }

    /// Evaluates to a polynomial truncated at `a^order`.
    pub fn to_poly(&self, dim: usize, order: usize) -> kforge_core::Result<Poly> {
        let c = |g: Gauss| Poly::constant(g, dim, order);
        Ok(match self {
            Expr::Num(r) => c(Gauss::real(*r)),
            Expr::I => c(Gauss::i()),
            Expr::A => c(Gauss::int(1)).scale_a(1),
            Expr::X(k) => Poly::x(*k, dim, order),
            Expr::Neg(e) => e.to_poly(dim, order)?.scale(&Gauss::int(-1)),
            Expr::Add(l, r) => l.to_poly(dim, order)?.add(&r.to_poly(dim, order)?)?,
            Expr::Sub(l, r) => l.to_poly(dim, order)?.sub(&r.to_poly(dim, order)?)?,
            Expr::Mul(l, r) => l.to_poly(dim, order)?.mul(&r.to_poly(dim, order)?)?,
            Expr::Pow(b, e) => b.to_poly(dim, order)?.pow(*e)?,
        })
    }
}
