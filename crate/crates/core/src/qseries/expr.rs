//! Parser for the small product-expression language used by the CLI.
//!
//! ```text
//! EXPR     := TERM { ('+'|'-') TERM }
//! TERM     := RATIONAL ['*'] { FACTOR } | FACTOR { ['*'] FACTOR }
//! FACTOR   := 'prod' GROUP { GROUP } | 'x^' INT | 'x^{' INT '}'
//!           | '(' EXPR ')' | 'inv' '(' EXPR ')'
//! GROUP    := '(' '1' ('+'|'-') 'x^{' LIN '}' ')' [ '^' INT ]
//! LIN      := [INT] 's' [ ('+'|'-') INT ]
//! RATIONAL := INT [ '/' INT ]
//! ```
//!
//! `prod` binds every directly following group, so
//! `prod(1+x^{2s})(1+x^{1s})` is a single two-factor product.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::product::{eval_product, Factor, ProductSpec};
use super::FormalSeries;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {}: {message}", .position + 1)]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    /// The input line followed by a caret under the offending column.
    pub fn diagnostic(&self) -> String {
        let col = self.input[..self.position.min(self.input.len())]
            .chars()
            .count();
        format!("{}\n{}^ {}", self.input, " ".repeat(col), self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Const(BigRational),
    Monomial(usize),
    Product(ProductSpec),
    Mul(Vec<Expr>),
    Sum(Vec<(bool, Expr)>),
    Inverse(Box<Expr>),
}

impl Expr {
    /// Expands the expression to `x^order`.
    pub fn eval(&self, order: usize) -> Result<FormalSeries> {
        Ok(match self {
            Expr::Const(c) => FormalSeries::constant(c.clone(), order),
            Expr::Monomial(k) => FormalSeries::monomial(*k, BigRational::one(), order),
            Expr::Product(spec) => eval_product(spec, order)?,
            Expr::Mul(items) => {
                let mut acc = FormalSeries::one(order);
                for item in items {
                    acc = &acc * &item.eval(order)?;
                }
                acc
            }
            Expr::Sum(items) => {
                let mut acc = FormalSeries::zero(order);
                for (negate, item) in items {
                    let v = item.eval(order)?;
                    acc = if *negate { &acc - &v } else { &acc + &v };
                }
                acc
            }
            Expr::Inverse(inner) => inner.eval(order)?.inverse()?,
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(c) => write!(f, "{}", super::format_rational(c)),
            Expr::Monomial(k) => write!(f, "x^{k}"),
            Expr::Product(spec) => {
                write!(f, "prod")?;
                for fac in &spec.factors {
                    let sign = if fac.sign > 0 { '+' } else { '-' };
                    write!(f, "(1{sign}x^{{{}s", fac.stride)?;
                    if fac.offset != 0 {
                        write!(f, "{:+}", fac.offset)?;
                    }
                    write!(f, "}})")?;
                    if fac.exponent != 1 {
                        write!(f, "^{}", fac.exponent)?;
                    }
                }
                Ok(())
            }
            Expr::Mul(items) => {
                let s: Vec<String> = items.iter().map(|e| e.to_string()).collect();
                write!(f, "{}", s.join(" * "))
            }
            Expr::Sum(items) => {
                write!(f, "(")?;
                for (i, (neg, e)) in items.iter().enumerate() {
                    match (i, neg) {
                        (0, false) => write!(f, "{e}")?,
                        (0, true) => write!(f, "-{e}")?,
                        (_, false) => write!(f, " + {e}")?,
                        (_, true) => write!(f, " - {e}")?,
                    }
                }
                write!(f, ")")
            }
            Expr::Inverse(inner) => write!(f, "inv({inner})"),
        }
    }
}

/// Parses an expression in the grammar above.
pub fn parse_expr(input: &str) -> std::result::Result<Expr, ParseError> {
    let mut p = Parser { src: input, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < input.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

/// Parses and expands in one step.
pub fn eval_expr(input: &str, order: usize) -> Result<FormalSeries> {
    parse_expr(input)?.eval(order)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            input: self.src.to_string(),
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> std::result::Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let s = &self.rest()[..len];
        self.pos += len;
        Some(s)
    }

    fn natural(&mut self) -> std::result::Result<BigInt, ParseError> {
        let start = self.pos;
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected an integer"))?;
        d.parse::<BigInt>().map_err(|_| ParseError {
            input: self.src.to_string(),
            position: start,
            message: "invalid integer".into(),
        })
    }

    fn small_int(&mut self, allow_negative: bool) -> std::result::Result<i64, ParseError> {
        let negative = allow_negative && self.eat("-");
        if !negative && allow_negative {
            self.eat("+");
        }
        let start = self.pos;
        let d = self
            .digits()
            .ok_or_else(|| self.error("expected an integer"))?;
        let v: i64 = d.parse().map_err(|_| ParseError {
            input: self.src.to_string(),
            position: start,
            message: "integer out of range".into(),
        })?;
        if v > i64::from(i32::MAX) {
            return Err(ParseError {
                input: self.src.to_string(),
                position: start,
                message: "integer out of range".into(),
            });
        }
        Ok(if negative { -v } else { v })
    }

    fn expr(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut items = Vec::new();
        let mut negate = self.eat("-");
        if !negate {
            self.eat("+");
        }
        loop {
            items.push((negate, self.term()?));
            if self.eat("+") {
                negate = false;
            } else if self.eat("-") {
                negate = true;
            } else {
                break;
            }
        }
        if items.len() == 1 && !items[0].0 {
            return Ok(items.pop().unwrap().1);
        }
        Ok(Expr::Sum(items))
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some('(' | 'x' | 'p' | 'i'))
    }

    fn term(&mut self) -> std::result::Result<Expr, ParseError> {
        let mut items = Vec::new();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let num = self.natural()?;
            let mut value = BigRational::from_integer(num);
            if self.eat("/") {
                let at = self.pos;
                let den = self.natural()?;
                if den.is_zero() {
                    return Err(ParseError {
                        input: self.src.to_string(),
                        position: at,
                        message: "zero denominator".into(),
                    });
                }
                value /= BigRational::from_integer(den);
            }
            items.push(Expr::Const(value));
            if self.eat("*") && !self.starts_factor() {
                return Err(self.error("expected a factor after `*`"));
            }
        } else {
            items.push(self.factor()?);
        }
        while self.eat("*") || self.starts_factor() {
            items.push(self.factor()?);
        }
        if items.len() == 1 {
            return Ok(items.pop().unwrap());
        }
        Ok(Expr::Mul(items))
    }

    fn factor(&mut self) -> std::result::Result<Expr, ParseError> {
        if self.eat("prod") {
            let mut spec = ProductSpec::new();
            spec.factors.push(self.group()?);
            loop {
                let save = self.pos;
                match self.group() {
                    Ok(f) => spec.factors.push(f),
                    Err(_) => {
                        self.pos = save;
                        break;
                    }
                }
            }
            return Ok(Expr::Product(spec));
        }
        if self.eat("inv") {
            self.expect("(")?;
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(Expr::Inverse(Box::new(inner)));
        }
        if self.eat("x^") {
            let braced = self.eat("{");
            let at = self.pos;
            let k = self.small_int(false)?;
            if braced {
                if self.peek() == Some('s') {
                    self.pos = at;
                    return Err(self.error("`s` is only allowed inside `prod(...)`"));
                }
                self.expect("}")?;
            }
            return Ok(Expr::Monomial(k as usize));
        }
        if self.eat("(") {
            let inner = self.expr()?;
            self.expect(")")?;
            return Ok(inner);
        }
        Err(self.error("expected `prod`, `inv`, `x^`, `(` or a number"))
    }

    fn group(&mut self) -> std::result::Result<Factor, ParseError> {
        self.expect("(")?;
        self.expect("1")?;
        let sign = if self.eat("+") {
            1
        } else if self.eat("-") {
            -1
        } else {
            return Err(self.error("expected `+` or `-`"));
        };
        self.expect("x^{")?;
        let lin_start = self.pos;
        let stride = if self.peek() == Some('s') {
            1
        } else {
            self.small_int(false)?
        };
        self.expect("s")?;
        let offset = if self.eat("+") {
            self.small_int(false)?
        } else if self.eat("-") {
            -self.small_int(false)?
        } else {
            0
        };
        self.expect("}")?;
        self.expect(")")?;
        let exponent = if self.eat("^") {
            self.small_int(true)?
        } else {
            1
        };
        if stride == 0 || stride + offset < 1 {
            return Err(ParseError {
                input: self.src.to_string(),
                position: lin_start,
                message: "the exponent a·s+b must be positive at s = 1".into(),
            });
        }
        Ok(Factor::new(
            sign,
            stride as u32,
            offset as i32,
            exponent as i32,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{frac, rat};

    #[test]
    fn hecke_b_product() {
        let s = eval_expr("prod(1+x^{2s})(1+x^{1s})", 2).unwrap();
        assert_eq!(s, FormalSeries::from_integers([1, 1, 2], 2));
    }

    #[test]
    fn scalar_times_product() {
        let s = eval_expr("1/2 * prod(1+x^{2s-1})(1+x^{1s})", 3).unwrap();
        assert_eq!(s.coeff(0).unwrap(), &frac(1, 2));
        assert_eq!(s.coeff(1).unwrap(), &rat(1));
    }

    #[test]
    fn monomials_and_sums() {
        assert_eq!(eval_expr("x^0", 3).unwrap(), FormalSeries::one(3));
        assert_eq!(
            eval_expr("x^2 - 3", 3).unwrap(),
            FormalSeries::from_integers([-3, 0, 1], 3)
        );
        assert_eq!(
            eval_expr("inv(1 - x^1)", 3).unwrap(),
            FormalSeries::from_integers([1, 1, 1, 1], 3)
        );
        assert_eq!(
            eval_expr("2*x^1*(1+x^1)", 3).unwrap(),
            FormalSeries::from_integers([0, 2, 2], 3)
        );
    }

    #[test]
    fn negative_exponents_in_products() {
        let a = eval_expr("prod(1-x^{1s})^-1", 10).unwrap();
        let b = eval_expr("inv(prod(1-x^{1s}))", 10).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff(10).unwrap(), &rat(42));
    }

    #[test]
    fn errors_carry_position() {
        let err = parse_expr("prod(1+x^{2s)").unwrap_err();
        assert_eq!(err.position, 12);
        assert!(err.diagnostic().ends_with("^ expected `}`"));
        let err = parse_expr("prod(1+x^{1s-1})").unwrap_err();
        assert_eq!(err.position, 10);
        let err = parse_expr("1/0").unwrap_err();
        assert_eq!(err.message, "zero denominator");
        assert!(parse_expr("(1+x^{1s})").is_err());
        assert!(parse_expr("x^1 )").is_err());
        assert!(parse_expr("").is_err());
    }

    #[test]
    fn display_reparses() {
        for src in [
            "prod(1+x^{2s})(1+x^{1s})",
            "1/2 * prod(1+x^{2s-1})^2(1+x^{1s}) + 3/2*prod(1+x^{4s-2})",
            "inv(1 - x^3) - x^1",
        ] {
            let e = parse_expr(src).unwrap();
            let again = parse_expr(&e.to_string()).unwrap();
            assert_eq!(e.eval(12).unwrap(), again.eval(12).unwrap(), "{src}");
        }
    }
}
