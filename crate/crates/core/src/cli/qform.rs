//! Quadratic-form expressions such as `5*x1^2 + 6*x1*x2 + 6*x2^2`.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := [coef ['*']] factor ('*' factor)*
//! factor := 'x' digits ['^' digits]
//! coef   := digits ['/' digits]
//! ```
//!
//! Every term must have total degree 2. The Gram matrix `A` of
//! `q(x) = xᵀ A x` puts half of each cross coefficient on either side of
//! the diagonal, so odd cross coefficients give half-integer entries.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::format::parse_rational;
use super::ParseError;
use crate::linalg::SymMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Num(String),
    Var(usize),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let at = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((at, Token::Plus)),
            '-' => out.push((at, Token::Minus)),
            '*' => out.push((at, Token::Star)),
            '^' => out.push((at, Token::Caret)),
            '0'..='9' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_digit() || bytes[j] == b'/') {
                    j += 1;
                }
                out.push((at, Token::Num(s[i..j].to_string())));
                i = j;
                continue;
            }
            c if c.is_alphabetic() || c == '_' => {
                let mut j = i;
                while j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_') {
                    j += 1;
                }
                let name = &s[i..j];
                let index = name
                    .strip_prefix('x')
                    .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|d| d.parse::<usize>().ok())
                    .filter(|&k| k >= 1)
                    .ok_or_else(|| ParseError::UnknownVariable {
                        name: name.to_string(),
                    })?;
                out.push((at, Token::Var(index)));
                i = j;
                continue;
            }
            other => {
                return Err(ParseError::Syntax {
                    line: 1,
                    msg: format!("unexpected character '{}' at column {}", other, at + 1),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

/// One monomial: coefficient times `x_i x_j` (0-based, `i <= j`).
struct Term {
    coef: BigRational,
    i: usize,
    j: usize,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Token)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |(o, _)| *o)
    }

    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            line: 1,
            msg: format!("{} at column {}", msg, self.offset() + 1),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term, ParseError> {
        let begin = self.offset();
        let mut coef = BigRational::one();
        let mut had_coef = false;
        if let Some(Token::Num(s)) = self.peek() {
            coef = parse_rational(&s.clone(), 1)?;
            had_coef = true;
            self.pos += 1;
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            }
        }
        let mut vars: Vec<usize> = Vec::new();
        loop {
            match self.peek() {
                Some(Token::Var(k)) => {
                    let k = *k;
                    self.pos += 1;
                    let mut power = 1usize;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        match self.peek() {
                            Some(Token::Num(p)) => {
                                power = p.parse().map_err(|_| self.err("bad exponent"))?;
                                self.pos += 1;
                            }
                            _ => return Err(self.err("expected exponent")),
                        }
                    }
                    vars.extend(std::iter::repeat(k - 1).take(power.min(3)));
                }
                _ if vars.is_empty() && !had_coef => return Err(self.err("expected a term")),
                _ => break,
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        let end = self.offset();
        if vars.len() != 2 {
            return Err(ParseError::Degree {
                term: self.src[begin..end].trim().to_string(),
            });
        }
        if negative {
            coef = -coef;
        }
        let (i, j) = (vars[0].min(vars[1]), vars[0].max(vars[1]));
        Ok(Term { coef, i, j })
    }

    fn expr(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            None => return Err(self.err("empty expression")),
            _ => false,
        };
        loop {
            terms.push(self.term(negative)?);
            match self.peek() {
                None => break,
                Some(Token::Plus) => negative = false,
                Some(Token::Minus) => negative = true,
                Some(_) => return Err(self.err("expected '+' or '-'")),
            }
            self.pos += 1;
        }
        Ok(terms)
    }
}

/// Gram matrix of a quadratic form in variables `x1..xn`; `n` is the largest
/// variable index that appears.
pub fn parse_quadratic_form(text: &str) -> Result<SymMatrix, ParseError> {
    let mut p = Parser {
        src: text,
        toks: tokenize(text)?,
        pos: 0,
    };
    let terms = p.expr()?;
    let n = terms.iter().map(|t| t.j + 1).max().unwrap_or(0);
    let mut a = SymMatrix::zeros(n);
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    for t in terms {
        if t.coef.is_zero() {
            continue;
        }
        if t.i == t.j {
            let v = a.get(t.i, t.i) + &t.coef;
            a.set(t.i, t.i, v);
        } else {
            let v = a.get(t.i, t.j) + &t.coef * &half;
            a.set(t.i, t.j, v);
        }
    }
    Ok(a)
}
