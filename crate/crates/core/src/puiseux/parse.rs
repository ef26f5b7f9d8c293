use num_traits::{One, Zero};

use super::{Mode, PuiseuxScalar, ValuedPolynomial};
use crate::polyhedra::Rational;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    T,
    X(usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> String {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        chars[start..*i].iter().collect()
    };
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => (out.push(Tok::Plus), i += 1).1,
            '-' | '−' => (out.push(Tok::Minus), i += 1).1,
            '*' | '·' => (out.push(Tok::Star), i += 1).1,
            '^' => (out.push(Tok::Caret), i += 1).1,
            '(' => (out.push(Tok::LParen), i += 1).1,
            ')' => (out.push(Tok::RParen), i += 1).1,
            't' => (out.push(Tok::T), i += 1).1,
            'x' => {
                i += 1;
                if i < chars.len() && chars[i] == '_' {
                    i += 1;
                }
                let d = digits(&mut i);
                let idx: usize = d
                    .parse()
                    .map_err(|_| Error::Parse(format!("variable at offset {i} needs an index")))?;
                if idx == 0 {
                    return Err(Error::Parse("variables are numbered from x1".into()));
                }
                out.push(Tok::X(idx));
            }
            c if c.is_ascii_digit() => {
                let n = digits(&mut i);
                let mut q = Rational::from_integer(n.parse().expect("digits"));
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let d: num_bigint::BigInt = digits(&mut i).parse().expect("digits");
                    if d.is_zero() {
                        return Err(Error::Parse("division by zero".into()));
                    }
                    q /= Rational::from_integer(d);
                }
                out.push(Tok::Num(q));
            }
            other => return Err(Error::Parse(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    nvars: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.bump() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn constant(&self, s: PuiseuxScalar) -> ValuedPolynomial {
        ValuedPolynomial::monomial(self.nvars, Mode::Laurent, vec![0; self.nvars], s)
            .expect("constant term")
    }

    fn expr(&mut self) -> Result<ValuedPolynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -&self.term()?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ValuedPolynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.factor()?;
                }
                Some(Tok::Num(_) | Tok::T | Tok::X(_) | Tok::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    /// `^` followed by `k`, `-k`, `p/q` or a parenthesised signed rational.
    fn exponent(&mut self) -> Result<Rational> {
        let paren = self.peek() == Some(&Tok::LParen);
        if paren {
            self.bump();
        }
        let negative = self.peek() == Some(&Tok::Minus);
        if negative {
            self.bump();
        }
        let q = match self.bump() {
            Some(Tok::Num(q)) => q,
            got => return Err(Error::Parse(format!("expected exponent, found {got:?}"))),
        };
        if paren {
            self.expect(Tok::RParen)?;
        }
        Ok(if negative { -q } else { q })
    }

    fn int_exponent(&mut self) -> Result<i64> {
        let q = self.exponent()?;
        if !q.is_integer() {
            return Err(Error::Parse(
                "fractional exponents are only allowed on t".into(),
            ));
        }
        i64::try_from(q.numer()).map_err(|_| Error::Parse("exponent too large".into()))
    }

    fn factor(&mut self) -> Result<ValuedPolynomial> {
        match self.bump() {
            Some(Tok::Num(q)) => Ok(self.constant(PuiseuxScalar::constant(q))),
            Some(Tok::T) => {
                let e = if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    self.exponent()?
                } else {
                    Rational::one()
                };
                Ok(self.constant(PuiseuxScalar::t_pow(e)))
            }
            Some(Tok::X(i)) => {
                let k = if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    self.int_exponent()?
                } else {
                    1
                };
                let mut e = vec![0; self.nvars];
                e[i - 1] = k;
                Ok(
                    ValuedPolynomial::monomial(self.nvars, Mode::Laurent, e, PuiseuxScalar::one())
                        .expect("monomial"),
                )
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let k = self.int_exponent()?;
                    if k.is_negative() {
                        return Err(Error::Parse("negative power of a parenthesised sum".into()));
                    }
                    let mut acc = self.constant(PuiseuxScalar::one());
                    for _ in 0..k {
                        acc = &acc * &inner;
                    }
                    Ok(acc)
                } else {
                    Ok(inner)
                }
            }
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

fn parse_in(src: &str, nvars: Option<usize>) -> Result<ValuedPolynomial> {
    let toks = tokenize(src)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let seen = toks
        .iter()
        .filter_map(|t| if let Tok::X(i) = t { Some(*i) } else { None })
        .max()
        .unwrap_or(0);
    let nvars = match nvars {
        Some(n) if n < seen => {
            return Err(Error::Parse(format!(
                "x{seen} used but only {n} variables declared"
            )))
        }
        Some(n) => n,
        None => seen,
    };
    let mut p = Parser {
        toks,
        pos: 0,
        nvars,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    let laurent = poly.terms().keys().flatten().any(|&k| k < 0);
    poly.with_mode(if laurent {
        Mode::Laurent
    } else {
        Mode::Ordinary
    })
}

/// Parses a polynomial in `x1, x2, ...` with coefficients in `t`.
///
/// The number of variables is the largest index used. The result is in
/// Laurent mode iff some exponent is negative after expansion.
///
/// ```
/// use sphertrop::puiseux::parse_polynomial;
/// let f = parse_polynomial("(t^-1 + 3*t^3)*x1 + t^(1/2)*x2^2").unwrap();
/// assert_eq!(f.nvars(), 2);
/// ```
pub fn parse_polynomial(src: &str) -> Result<ValuedPolynomial> {
    parse_in(src, None)
}

/// Like [`parse_polynomial`] with a fixed number of variables.
pub fn parse_polynomial_in(src: &str, nvars: usize) -> Result<ValuedPolynomial> {
    parse_in(src, Some(nvars))
}

/// Parses a Puiseux scalar, an expression in `t` alone such as `-1 - t`.
pub fn parse_scalar(src: &str) -> Result<PuiseuxScalar> {
    let p = parse_in(src, Some(0))?;
    Ok(p.terms()
        .get(&Vec::new())
        .cloned()
        .unwrap_or_else(PuiseuxScalar::zero))
}
