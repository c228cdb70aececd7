//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr     := ('+'|'-')? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | var | '(' expr ')'
//! rational := int ('/' nat)?
//! var      := letter (letter | digit | '_')*
//! ```
//!
//! Multiplication is always explicit. A leading sign is accepted so that
//! printed polynomials with a negative leading coefficient parse back.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::poly::{CoefficientField, MonomialOrder, PolyError, PolyRing, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable { name: String, line: usize, column: usize },
    #[error("at line {line}, column {column}: {source}")]
    Coefficient { line: usize, column: usize, source: PolyError },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    Comma,
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    while i < chars.len() {
        let c = chars[i];
        let (tl, tc) = (line, col);
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Token { tok, line: tl, column: tc });
            i += 1;
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Int(s.parse().expect("digits")), line: tl, column: tc });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            col += i - start;
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line: tl, column: tc });
            continue;
        }
        return Err(ParseError::Syntax { line: tl, column: tc, message: format!("unexpected character `{c}`") });
    }
    out.push(Token { tok: Tok::Eof, line, column: col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    ring: &'a Arc<PolyRing>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, t: &Token, what: &str) -> ParseError {
        let found = match &t.tok {
            Tok::Eof => "end of input".to_string(),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Ident(s) => format!("`{s}`"),
            other => format!("`{}`", tok_text(other)),
        };
        ParseError::Syntax { line: t.line, column: t.column, message: format!("expected {what}, found {found}") }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut negate_first = false;
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                negate_first = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate_first {
            acc = acc.neg();
        }
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if self.peek().tok == Tok::Caret {
            self.bump();
            let t = self.bump();
            let Tok::Int(n) = &t.tok else {
                return Err(self.error(&t, "a natural-number exponent"));
            };
            let e = n.to_u32().ok_or_else(|| ParseError::Syntax {
                line: t.line,
                column: t.column,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => {
                let mut den = BigInt::from(1);
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    let Tok::Int(dn) = &d.tok else {
                        return Err(self.error(&d, "a natural-number denominator"));
                    };
                    if dn.is_zero() {
                        return Err(ParseError::Coefficient { line: d.line, column: d.column, source: PolyError::DivisionByZero });
                    }
                    den = dn.clone();
                }
                let c = self
                    .ring
                    .field()
                    .from_ratio(n, &den)
                    .map_err(|source| ParseError::Coefficient { line: t.line, column: t.column, source })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::Ident(name) => match self.ring.var_index(name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(ParseError::UnknownVariable { name: name.clone(), line: t.line, column: t.column }),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                let close = self.bump();
                if close.tok != Tok::RParen {
                    return Err(self.error(&close, "`)`"));
                }
                Ok(inner)
            }
            _ => Err(self.error(&t, "a number, variable or `(`")),
        }
    }
}

fn tok_text(t: &Tok) -> &'static str {
    match t {
        Tok::Plus => "+",
        Tok::Minus => "-",
        Tok::Star => "*",
        Tok::Caret => "^",
        Tok::Slash => "/",
        Tok::LParen => "(",
        Tok::RParen => ")",
        Tok::Comma => ",",
        _ => "?",
    }
}

/// Parses one polynomial in the given ring.
pub fn parse_polynomial(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, ring };
    let out = p.expr()?;
    let t = p.peek().clone();
    if t.tok != Tok::Eof {
        return Err(p.error(&t, "an operator or end of input"));
    }
    Ok(out)
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polynomial_list(text: &str, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0, ring };
    let mut out = vec![p.expr()?];
    loop {
        let t = p.peek().clone();
        match t.tok {
            Tok::Comma => {
                p.bump();
                out.push(p.expr()?);
            }
            Tok::Eof => return Ok(out),
            _ => return Err(p.error(&t, "`,` or end of input")),
        }
    }
}

/// Distinct identifiers occurring in `text`, sorted alphabetically.
pub fn infer_variables(text: &str) -> Result<Vec<String>, ParseError> {
    let mut names: Vec<String> = lex(text)?
        .into_iter()
        .filter_map(|t| match t.tok {
            Tok::Ident(s) => Some(s),
            _ => None,
        })
        .collect();
    names.sort();
    names.dedup();
    Ok(names)
}

/// Builds a ring from the identifiers in `text` and parses it there.
pub fn parse_with_inferred_ring(
    text: &str,
    field: CoefficientField,
    order: MonomialOrder,
) -> Result<Polynomial, ParseError> {
    let vars = infer_variables(text)?;
    let ring = PolyRing::new(vars, field, order).map_err(|source| ParseError::Coefficient { line: 1, column: 1, source })?;
    parse_polynomial(text, &ring)
}
