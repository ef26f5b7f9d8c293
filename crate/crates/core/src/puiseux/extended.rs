use std::fmt;
use std::ops::Add;

use num_traits::Zero;

use crate::polyhedra::{format_rational, parse_rational, QVector, Rational};
use crate::{Error, Result};

/// An element of `Q ∪ {∞}`. Every finite value is below `Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtQ {
    Finite(Rational),
    Infinite,
}

impl ExtQ {
    pub fn zero() -> ExtQ {
        ExtQ::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> ExtQ {
        ExtQ::Finite(Rational::from_integer(n.into()))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtQ::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtQ::Finite(q) => Some(q),
            ExtQ::Infinite => None,
        }
    }

    /// `u * w` with the convention `0 * ∞ = 0` and `u * ∞ = ∞` for `u > 0`.
    /// Negative `u` against `∞` is not meaningful and yields `∞` as well;
    /// callers reject that case earlier.
    pub fn pair_exponent(u: i64, w: &ExtQ) -> ExtQ {
        match w {
            _ if u == 0 => ExtQ::zero(),
            ExtQ::Finite(q) => ExtQ::Finite(q * Rational::from_integer(u.into())),
            ExtQ::Infinite => ExtQ::Infinite,
        }
    }

    pub fn from_vector(v: &QVector) -> Vec<ExtQ> {
        v.iter().cloned().map(ExtQ::Finite).collect()
    }
}

impl From<Rational> for ExtQ {
    fn from(q: Rational) -> ExtQ {
        ExtQ::Finite(q)
    }
}

impl Add for ExtQ {
    type Output = ExtQ;

    fn add(self, rhs: ExtQ) -> ExtQ {
        match (self, rhs) {
            (ExtQ::Finite(a), ExtQ::Finite(b)) => ExtQ::Finite(a + b),
            _ => ExtQ::Infinite,
        }
    }
}

impl fmt::Display for ExtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtQ::Finite(q) => write!(f, "{}", format_rational(q)),
            ExtQ::Infinite => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for ExtQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExtQ> {
        match s.trim() {
            "inf" | "∞" | "oo" | "infinity" => Ok(ExtQ::Infinite),
            other => Ok(ExtQ::Finite(parse_rational(other)?)),
        }
    }
}

/// Parses `"(-2, 0)"`, `"-2,0"` or `"1/2, inf"` into an extended weight.
pub fn parse_weight(s: &str) -> Result<Vec<ExtQ>> {
    let inner = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if inner.trim().is_empty() {
        return Ok(vec![]);
    }
    inner.split(',').map(str::parse).collect()
}
