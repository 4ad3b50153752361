//! Input language for defining functions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := ('-' | '+') unary | power
//! power := atom ('^' integer)?
//! atom  := number | 'i' | 'z'k | ('conj' | 'Re' | 'Im') '(' expr ')' | '(' expr ')'
//! ```
//!
//! Numbers are non-negative decimals and are read exactly (`0.25` is `1/4`).
//! Division is only allowed by constants. Lowering replaces `conj(zk)` by the
//! independent variable `w̄k`, so `Re(e) = (e + conj(e))/2` expands exactly.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::hermitian::{check_hermitian, hermitian_involution, Bipoly, RealBipoly};
use crate::poly::{CPoly, GaussianRational, Var};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    /// Non-negative rational literal.
    Num(BigRational),
    I,
    /// `z_{k+1}`.
    Var(usize),
    Conj(Box<Expr>),
    Re(Box<Expr>),
    Im(Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

const MAX_POWER: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigRational),
    Ident(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < bytes.len() {
        let ch = bytes[k] as char;
        if ch.is_ascii_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() || ch == '.' {
            let start = k;
            while k < bytes.len() && (bytes[k].is_ascii_digit() || bytes[k] == b'.') {
                k += 1;
            }
            out.push((start, Tok::Num(decimal(&src[start..k], start)?)));
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = k;
            while k < bytes.len() && (bytes[k].is_ascii_alphanumeric() || bytes[k] == b'_') {
                k += 1;
            }
            out.push((start, Tok::Ident(src[start..k].to_string())));
        } else if "+-*/^()".contains(ch) {
            out.push((k, Tok::Op(ch)));
            k += 1;
        } else {
            let c = src[k..].chars().next().unwrap_or('?');
            return Err(Error::Parse { pos: k, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

fn decimal(text: &str, pos: usize) -> Result<BigRational> {
    let bad = || Error::Parse { pos, msg: format!("malformed number {text:?}") };
    let (int, frac) = match text.split_once('.') {
        Some((a, b)) => (a, b),
        None => (text, ""),
    };
    if (int.is_empty() && frac.is_empty()) || frac.contains('.') {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    let num: BigInt = digits.parse().map_err(|_| bad())?;
    let den = num_traits::pow(BigInt::from(10), frac.len());
    Ok(BigRational::new(num, den))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
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

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let Some(Tok::Num(k)) = self.peek().cloned() else {
            return self.err("expected a non-negative integer exponent");
        };
        if !k.is_integer() || k > BigRational::from_integer(MAX_POWER.into()) {
            return self.err(format!("exponent must be an integer in 0..={MAX_POWER}"));
        }
        self.at += 1;
        let e: u32 = k.to_integer().try_into().expect("bounded exponent");
        Ok(Expr::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expr> {
        let Some(tok) = self.peek().cloned() else {
            return self.err("unexpected end of input");
        };
        match tok {
            Tok::Num(r) => {
                self.at += 1;
                Ok(Expr::Num(r))
            }
            Tok::Op('(') => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Tok::Ident(name) => {
                self.at += 1;
                match name.as_str() {
                    "i" => Ok(Expr::I),
                    "conj" | "Re" | "re" | "Im" | "im" => {
                        if !self.eat('(') {
                            return self.err(format!("expected '(' after {name}"));
                        }
                        let e = Box::new(self.expr()?);
                        if !self.eat(')') {
                            return self.err("expected ')'");
                        }
                        Ok(match name.as_str() {
                            "conj" => Expr::Conj(e),
                            "Re" | "re" => Expr::Re(e),
                            _ => Expr::Im(e),
                        })
                    }
                    _ => match name.strip_prefix('z').and_then(|k| k.parse::<usize>().ok()) {
                        Some(k) if k >= 1 && !name[1..].starts_with('0') => Ok(Expr::Var(k - 1)),
                        _ => {
                            self.at -= 1;
                            self.err(format!("unknown identifier {name:?} (variables are z1, z2, ...)"))
                        }
                    },
                }
            }
            Tok::Op(c) => self.err(format!("unexpected {c:?}")),
        }
    }
}

/// Parses an expression; errors carry the byte offset of the offending token.
pub fn parse_expression(text: &str) -> Result<Expr> {
    let toks = lex(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Number of variables: one more than the largest index used.
    pub fn arity(&self) -> usize {
        match self {
            Expr::Num(_) | Expr::I => 0,
            Expr::Var(k) => k + 1,
            Expr::Conj(a) | Expr::Re(a) | Expr::Im(a) | Expr::Neg(a) | Expr::Pow(a, _) => a.arity(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.arity().max(b.arity()),
        }
    }

    /// Expands into a polynomial in `(z, w̄)` over `n` variable pairs.
    pub fn lower(&self, n: usize) -> Result<CPoly> {
        if self.arity() > n {
            return Err(Error::Input(format!("expression uses z{} but n = {n}", self.arity())));
        }
        self.lower_unchecked(n)
    }

    fn lower_unchecked(&self, n: usize) -> Result<CPoly> {
        let half = GaussianRational::from_fracs(1, 2, 0, 1);
        Ok(match self {
            Expr::Num(r) => CPoly::constant(n, GaussianRational::real(r.clone())),
            Expr::I => CPoly::constant(n, GaussianRational::i()),
            Expr::Var(k) => CPoly::var(n, Var::Z(*k)),
            Expr::Conj(a) => hermitian_involution(&a.lower_unchecked(n)?),
            Expr::Re(a) => {
                let p = a.lower_unchecked(n)?;
                (&p + &hermitian_involution(&p)).scale(&half)
            }
            Expr::Im(a) => {
                let p = a.lower_unchecked(n)?;
                (&p - &hermitian_involution(&p)).scale(&GaussianRational::from_fracs(0, 1, -1, 2))
            }
            Expr::Neg(a) => -a.lower_unchecked(n)?,
            Expr::Add(a, b) => &a.lower_unchecked(n)? + &b.lower_unchecked(n)?,
            Expr::Sub(a, b) => &a.lower_unchecked(n)? - &b.lower_unchecked(n)?,
            Expr::Mul(a, b) => &a.lower_unchecked(n)? * &b.lower_unchecked(n)?,
            Expr::Div(a, b) => {
                let d = b.lower_unchecked(n)?;
                let c = d.constant_value().filter(|_| d.is_constant()).ok_or_else(|| Error::Input("division by a non-constant expression".into()))?;
                let inv = c.inv().ok_or_else(|| Error::Input("division by zero".into()))?;
                a.lower_unchecked(n)?.scale(&inv)
            }
            Expr::Pow(a, k) => a.lower_unchecked(n)?.pow(*k),
        })
    }

    /// Lowers and validates as a real defining function.
    pub fn to_real(&self, n: usize) -> Result<RealBipoly> {
        let p = self.lower(n)?;
        if p.is_zero() {
            return Err(Error::ZeroDefiningFunction);
        }
        let check = check_hermitian(&Bipoly::from_cpoly(p.clone()));
        if !check.hermitian {
            return Err(Error::NotRealValued(check.violations.len()));
        }
        RealBipoly::from_complexified(p)
    }
}

/// Parses and lowers `text`; `n` defaults to the number of variables used (at least 1).
pub fn parse_real(text: &str, n: Option<usize>) -> Result<RealBipoly> {
    let e = parse_expression(text)?;
    e.to_real(n.unwrap_or(e.arity().max(1)))
}

fn fmt_decimal(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        return write!(f, "{}", r.numer());
    }
    // literals have denominators 2^a 5^b, so some power of ten clears them
    let ten = BigInt::from(10);
    let mut scaled = r.clone();
    let mut places = 0usize;
    while !scaled.is_integer() && places < 64 {
        scaled *= BigRational::from_integer(ten.clone());
        places += 1;
    }
    if !scaled.is_integer() {
        return write!(f, "({}/{})", r.numer(), r.denom());
    }
    let digits = scaled.to_integer().abs().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (a, b) = digits.split_at(digits.len() - places);
    write!(f, "{a}.{b}")
}

impl fmt::Display for Expr {
    /// Fully parenthesized form; parsing it gives back the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(r) => fmt_decimal(r, f),
            Expr::I => write!(f, "i"),
            Expr::Var(k) => write!(f, "z{}", k + 1),
            Expr::Conj(a) => write!(f, "conj({a})"),
            Expr::Re(a) => write!(f, "Re({a})"),
            Expr::Im(a) => write!(f, "Im({a})"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, k) => match **a {
                Expr::Num(ref r) if r.is_integer() => write!(f, "{a}^{k}"),
                Expr::I | Expr::Var(_) => write!(f, "{a}^{k}"),
                _ => write!(f, "({a})^{k}"),
            },
        }
    }
}

impl Expr {
    pub fn num(k: i64) -> Expr {
        assert!(k >= 0, "literals are non-negative");
        Expr::Num(BigRational::from_integer(k.into()))
    }
}
