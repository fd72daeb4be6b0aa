//! Expression parser, pretty-printer and JSON codec for polynomials.
//!
//! Grammar:
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := base ("^" uint)?
//! base   := ident | number | "(" expr ")" | "-" factor
//! number := digits ("/" digits)?
//! ```
//!
//! Implicit multiplication (`2x`) is rejected. In 𝔽_p a fraction `a/b`
//! denotes `a·b⁻¹`.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::{CoeffError, FieldSpec, Scalar};
use crate::poly::{Monomial, PolyError, Polynomial, Ring};

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 1 << 16;
const MAX_DEPTH: usize = 200;
const MAX_EXPANDED_TERMS: u128 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Ident,
    Int,
    Fraction,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprToken {
    pub kind: TokenKind,
    pub lexeme: String,
    pub span: Range<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
    ExponentTooLarge,
    NonIntegerExponent,
    DivisionByZero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offsets into the input.
    pub span: Range<usize>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}")?,
            ParseErrorKind::UnknownVariable(v) => write!(f, "unknown variable {v:?}")?,
            ParseErrorKind::ExponentTooLarge => write!(f, "exponent too large")?,
            ParseErrorKind::NonIntegerExponent => write!(f, "exponent must be a non-negative integer")?,
            ParseErrorKind::DivisionByZero => write!(f, "division by zero")?,
        }
        write!(f, " at {}..{}", self.span.start, self.span.end)
    }
}

impl ParseError {
    fn new(kind: ParseErrorKind, span: Range<usize>) -> Self {
        ParseError { kind, span }
    }

    fn syntax(msg: impl Into<String>, span: Range<usize>) -> Self {
        Self::new(ParseErrorKind::Syntax(msg.into()), span)
    }

    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self.kind {
            ParseErrorKind::Syntax(_) => "SyntaxError",
            ParseErrorKind::UnknownVariable(_) => "UnknownVariable",
            ParseErrorKind::ExponentTooLarge => "ExponentTooLarge",
            ParseErrorKind::NonIntegerExponent => "NonIntegerExponent",
            ParseErrorKind::DivisionByZero => "DivisionByZero",
        }
    }
}

/// Splits `text` into tokens; whitespace separates tokens and is dropped.
pub fn tokenize(text: &str) -> Result<Vec<ExprToken>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let kind = match c {
            b'+' => TokenKind::Plus,
            b'-' => TokenKind::Minus,
            b'*' => TokenKind::Star,
            b'^' => TokenKind::Caret,
            b'(' => TokenKind::LParen,
            b')' => TokenKind::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let mut kind = TokenKind::Int;
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    kind = TokenKind::Fraction;
                }
                if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                    return Err(ParseError::syntax("implicit multiplication is not allowed", start..i + 1));
                }
                out.push(ExprToken { kind, lexeme: text[start..i].to_string(), span: start..i });
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push(ExprToken { kind: TokenKind::Ident, lexeme: text[start..i].to_string(), span: start..i });
                continue;
            }
            _ => {
                let len = text[start..].chars().next().map_or(1, char::len_utf8);
                return Err(ParseError::syntax(
                    format!("unexpected character {:?}", &text[start..start + len]),
                    start..start + len,
                ));
            }
        };
        i += 1;
        out.push(ExprToken { kind, lexeme: text[start..i].to_string(), span: start..i });
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<ExprToken>,
    pos: usize,
    depth: usize,
    ring: &'a Arc<Ring>,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&ExprToken> {
        self.tokens.get(self.pos)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn eof_span(&self) -> Range<usize> {
        self.end..self.end
    }

    fn next(&mut self) -> Option<ExprToken> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn enter(&mut self, span: Range<usize>) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError::syntax("expression nested too deeply", span));
        }
        Ok(())
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some(k @ (TokenKind::Plus | TokenKind::Minus)) = self.peek_kind() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if k == TokenKind::Plus { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek_kind() == Some(TokenKind::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let start = self.peek().map_or(self.end, |t| t.span.start);
        let base = self.base()?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok(base);
        }
        let caret = self.next().expect("peeked");
        let (exp, exp_span) = self.exponent(caret.span.end)?;
        let span = start..exp_span.end;
        check_power_size(&base, exp, span)?;
        Ok(base.pow(exp as u32))
    }

    fn exponent(&mut self, after: usize) -> Result<(u64, Range<usize>), ParseError> {
        let tok = self.next().ok_or_else(|| ParseError::syntax("missing exponent", after..after))?;
        match tok.kind {
            TokenKind::Int => {
                let e: u64 = tok
                    .lexeme
                    .parse()
                    .map_err(|_| ParseError::new(ParseErrorKind::ExponentTooLarge, tok.span.clone()))?;
                if e > MAX_EXPONENT {
                    return Err(ParseError::new(ParseErrorKind::ExponentTooLarge, tok.span));
                }
                Ok((e, tok.span))
            }
            TokenKind::Fraction | TokenKind::Minus => {
                Err(ParseError::new(ParseErrorKind::NonIntegerExponent, tok.span))
            }
            TokenKind::LParen => {
                self.enter(tok.span.clone())?;
                let inner = self.expr()?;
                self.depth -= 1;
                let close = self.expect_rparen(tok.span.start)?;
                let span = tok.span.start..close.end;
                let value = inner
                    .constant_value()
                    .ok_or_else(|| ParseError::new(ParseErrorKind::NonIntegerExponent, span.clone()))?;
                let e = natural_value(&value)
                    .ok_or_else(|| ParseError::new(ParseErrorKind::NonIntegerExponent, span.clone()))?;
                if e > MAX_EXPONENT {
                    return Err(ParseError::new(ParseErrorKind::ExponentTooLarge, span));
                }
                Ok((e, span))
            }
            _ => Err(ParseError::syntax(format!("expected exponent, found {:?}", tok.lexeme), tok.span)),
        }
    }

    fn expect_rparen(&mut self, open: usize) -> Result<Range<usize>, ParseError> {
        match self.next() {
            Some(t) if t.kind == TokenKind::RParen => Ok(t.span),
            Some(t) => Err(ParseError::syntax(format!("expected ')', found {:?}", t.lexeme), t.span)),
            None => Err(ParseError::syntax("unclosed '('", open..self.end)),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let eof = self.eof_span();
        let tok = self.next().ok_or_else(|| ParseError::syntax("unexpected end of input", eof))?;
        let field = self.ring.field();
        match tok.kind {
            TokenKind::Ident => {
                let idx = self.ring.var_index(&tok.lexeme).ok_or_else(|| {
                    ParseError::new(ParseErrorKind::UnknownVariable(tok.lexeme.clone()), tok.span.clone())
                })?;
                Ok(Polynomial::var(self.ring, idx))
            }
            TokenKind::Int | TokenKind::Fraction => {
                let c = Scalar::parse(field, &tok.lexeme).map_err(|e| match e {
                    CoeffError::DivisionByZero => ParseError::new(ParseErrorKind::DivisionByZero, tok.span.clone()),
                    other => ParseError::syntax(other.to_string(), tok.span.clone()),
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            TokenKind::LParen => {
                self.enter(tok.span.clone())?;
                let inner = self.expr()?;
                self.depth -= 1;
                self.expect_rparen(tok.span.start)?;
                Ok(inner)
            }
            TokenKind::Minus => {
                self.enter(tok.span.clone())?;
                let inner = self.factor()?;
                self.depth -= 1;
                Ok(-inner)
            }
            _ => Err(ParseError::syntax(format!("unexpected {:?}", tok.lexeme), tok.span)),
        }
    }
}

fn natural_value(c: &Scalar) -> Option<u64> {
    use num_traits::ToPrimitive;
    match c.as_rational() {
        Some(q) if q.is_integer() => q.numer().to_u64(),
        Some(_) => None,
        None => c.residue().map(u64::from),
    }
}

/// Rejects powers whose expansion would be unreasonably large.
fn check_power_size(base: &Polynomial, exp: u64, span: Range<usize>) -> Result<(), ParseError> {
    let too_large = || ParseError::new(ParseErrorKind::ExponentTooLarge, span.clone());
    if exp <= 1 || base.is_zero() {
        return Ok(());
    }
    if let Some(c) = base.constant_value() {
        if let Some(q) = c.as_rational() {
            let bits = q.numer().bits() + q.denom().bits();
            if bits.saturating_mul(exp) > (1 << 20) {
                return Err(too_large());
            }
        }
        return Ok(());
    }
    let deg = base.degree().finite().unwrap_or(0);
    if deg.saturating_mul(exp) > MAX_EXPONENT {
        return Err(too_large());
    }
    // upper bound on the term count of a t-term polynomial raised to exp
    let t = base.num_terms() as u128;
    let mut bound: u128 = 1;
    for i in 1..t {
        bound = bound.saturating_mul(u128::from(exp) + i) / i;
        if bound > MAX_EXPANDED_TERMS {
            return Err(too_large());
        }
    }
    Ok(())
}

/// Parses `text` into a polynomial of `ring`, fully expanded.
pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial, ParseError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, depth: 0, ring, end: text.len() };
    let out = p.expr()?;
    if let Some(t) = p.peek() {
        return Err(ParseError::syntax(format!("unexpected {:?}", t.lexeme), t.span.clone()));
    }
    Ok(out)
}

/// Convenience wrapper building the ring from names and a field.
pub fn parse_poly_in<S: AsRef<str>>(text: &str, vars: &[S], field: FieldSpec) -> Result<Polynomial, ParseError> {
    let ring = Ring::new(field, vars.iter().map(|v| v.as_ref().to_string()))
        .map_err(|e| ParseError::syntax(e.to_string(), 0..0))?;
    parse_poly(text, &ring)
}

/// Deterministic rendering in descending graded-lex order; inverse of [`parse_poly`].
pub fn format_poly(f: &Polynomial) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let vars = f.ring().vars();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().rev().enumerate() {
        let negative = c.as_rational().is_some_and(|q| q < &num_rational::BigRational::from_integer(BigInt::from(0)));
        let mag = if negative { -c } else { c.clone() };
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let mono = format_monomial(m, vars);
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

fn format_monomial(m: &Monomial, vars: &[String]) -> String {
    let parts: Vec<String> = m
        .exps()
        .iter()
        .zip(vars)
        .filter(|(e, _)| **e > 0)
        .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("field {expected} expected, document says {found}")]
    FieldConflict { expected: FieldSpec, found: FieldSpec },
    #[error("variable list {found:?} does not match {expected:?}")]
    VarsConflict { expected: Vec<String>, found: Vec<String> },
}

/// One term of the JSON polynomial form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// `{ "field": "Q"|"Fp:<p>", "vars": [...], "terms": [{"coeff": "...", "exps": [...]}] }`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub field: String,
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn encode(f: &Polynomial) -> Self {
        PolyJson {
            field: f.field().to_string(),
            vars: f.ring().vars().to_vec(),
            terms: f.terms().rev().map(|(m, c)| TermJson { coeff: c.to_string(), exps: m.exps().to_vec() }).collect(),
        }
    }

    pub fn decode(&self) -> Result<Polynomial, CodecError> {
        let field = FieldSpec::parse(&self.field)?;
        let ring = Ring::new(field, self.vars.iter().cloned())?;
        self.decode_in(&ring)
    }

    /// Decodes into an existing ring, which must agree with the document.
    pub fn decode_in(&self, ring: &Arc<Ring>) -> Result<Polynomial, CodecError> {
        let field = FieldSpec::parse(&self.field)?;
        if field != ring.field() {
            return Err(CodecError::FieldConflict { expected: ring.field(), found: field });
        }
        if self.vars != ring.vars() {
            return Err(CodecError::VarsConflict { expected: ring.vars().to_vec(), found: self.vars.clone() });
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            terms.push((Monomial::new(t.exps.clone()), Scalar::parse(field, &t.coeff)?));
        }
        Ok(Polynomial::from_terms(ring, terms)?)
    }
}

pub fn poly_to_json(f: &Polynomial) -> String {
    serde_json::to_string(&PolyJson::encode(f)).expect("serializable")
}
