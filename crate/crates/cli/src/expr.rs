//! Polynomial expressions.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' unary)?
//! atom    := NUMBER | NUMBER '/' NUMBER | IDENT | '(' expr ')'
//! ```
//!
//! `^` binds tightest and associates to the right, so `-x^2` is `-(x^2)` and
//! `x^2^3` is `x^8`. Unary minus is accepted anywhere an operand may start.
//! Exponents must evaluate to non-negative integer constants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;
use typeb::{Polynomial, Rational};

/// Largest exponent accepted when lowering.
pub const MAX_EXPONENT: usize = 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{pos}: unexpected {found}, expected {}", .expected.join(" or "))]
    Syntax { pos: Pos, found: String, expected: Vec<&'static str> },
    #[error("{pos}: unknown variable `{found}`, expected `{expected}`")]
    WrongVariable { pos: Pos, found: String, expected: String },
    #[error("{pos}: {message}")]
    BadExponent { pos: Pos, message: String },
    #[error("{pos}: {message}")]
    BadLiteral { pos: Pos, message: String },
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Literal(Rational),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(r) => format!("number `{r}`"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            chars.next();
            column += 1;
            out.push((t, pos));
            continue;
        }
        if c.is_ascii_digit() {
            let mut num = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                num.push(d);
                chars.next();
                column += 1;
            }
            let mut den = String::from("1");
            if chars.peek() == Some(&'/') {
                chars.next();
                column += 1;
                den.clear();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    den.push(d);
                    chars.next();
                    column += 1;
                }
                if den.is_empty() {
                    return Err(ParseError::BadLiteral {
                        pos,
                        message: format!("literal `{num}/` needs a denominator"),
                    });
                }
            }
            let n: BigInt = num.parse().unwrap();
            let d: BigInt = den.parse().unwrap();
            if d.is_zero() {
                return Err(ParseError::BadLiteral { pos, message: "zero denominator".into() });
            }
            out.push((Tok::Num(Rational::new(n, d)), pos));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                name.push(d);
                chars.next();
                column += 1;
            }
            out.push((Tok::Ident(name), pos));
            continue;
        }
        return Err(ParseError::Syntax {
            pos,
            found: format!("character `{c}`"),
            expected: vec!["number", "variable", "operator", "parenthesis"],
        });
    }
    out.push((Tok::Eof, Pos { line, column }));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

const OPERAND: &[&str] = &["number", "variable", "`(`", "`-`"];

impl Parser {
    fn peek(&self) -> &(Tok, Pos) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected<T>(&self, expected: &[&'static str]) -> Result<T, ParseError> {
        let (tok, pos) = self.peek();
        Err(ParseError::Syntax { pos: *pos, found: tok.describe(), expected: expected.to_vec() })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            let (tok, pos) = self.peek().clone();
            let make: fn(Box<Expr>, Box<Expr>) -> ExprKind = match tok {
                Tok::Plus => ExprKind::Add,
                Tok::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr { kind: make(Box::new(lhs), Box::new(rhs)), pos };
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while let (Tok::Star, pos) = self.peek().clone() {
            self.bump();
            let rhs = self.unary()?;
            lhs = Expr { kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)), pos };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if let (Tok::Minus, pos) = self.peek().clone() {
            self.bump();
            let inner = self.unary()?;
            return Ok(Expr { kind: ExprKind::Neg(Box::new(inner)), pos });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if let (Tok::Caret, pos) = self.peek().clone() {
            self.bump();
            let exp = self.unary()?;
            return Ok(Expr { kind: ExprKind::Pow(Box::new(base), Box::new(exp)), pos });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.peek().clone();
        match tok {
            Tok::Num(r) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Literal(r), pos })
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Expr { kind: ExprKind::Var(name), pos })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().0 != Tok::RParen {
                    return self.unexpected(&["`)`", "operator"]);
                }
                self.bump();
                Ok(inner)
            }
            _ => self.unexpected(OPERAND),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, at: 0 };
    let e = p.expr()?;
    if p.peek().0 != Tok::Eof {
        return p.unexpected(&["operator", "end of input"]);
    }
    Ok(e)
}

/// Lower an expression tree to a monomial-basis polynomial in `var`.
pub fn lower(e: &Expr, var: &str) -> Result<Polynomial, ParseError> {
    let same = "single variable";
    Ok(match &e.kind {
        ExprKind::Literal(r) => Polynomial::constant(var, r.clone()),
        ExprKind::Var(name) if name == var => Polynomial::variable(var),
        ExprKind::Var(name) => {
            return Err(ParseError::WrongVariable { pos: e.pos, found: name.clone(), expected: var.into() })
        }
        ExprKind::Neg(a) => -lower(a, var)?,
        ExprKind::Add(a, b) => lower(a, var)?.add(&lower(b, var)?).expect(same),
        ExprKind::Sub(a, b) => lower(a, var)?.sub(&lower(b, var)?).expect(same),
        ExprKind::Mul(a, b) => lower(a, var)?.mul(&lower(b, var)?).expect(same),
        ExprKind::Pow(a, b) => {
            let base = lower(a, var)?;
            let exp = lower(b, var)?;
            let bad = |message: String| ParseError::BadExponent { pos: b.pos, message };
            if exp.degree().unwrap_or(0) > 0 {
                return Err(bad("exponent must be a constant".into()));
            }
            let c = exp.coeff(0);
            if !c.is_integer() {
                return Err(bad(format!("exponent {c} is not an integer")));
            }
            let k = c.to_integer();
            if k < BigInt::zero() {
                return Err(bad(format!("negative exponent {k}")));
            }
            let k = k.to_usize().filter(|&k| k <= MAX_EXPONENT).ok_or_else(|| bad(format!("exponent {k} exceeds {MAX_EXPONENT}")))?;
            base.pow(k).expect(same)
        }
    })
}

/// Parse `text` as a polynomial in `var`.
pub fn parse_poly(text: &str, var: &str) -> Result<Polynomial, ParseError> {
    lower(&parse_expr(text)?, var)
}
