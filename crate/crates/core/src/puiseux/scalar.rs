use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::ExtQ;
use crate::polyhedra::{format_rational, Rational};

/// A finite sum `Σ c_i t^{e_i}` with rational exponents and coefficients.
///
/// Stored canonically: exponents strictly increasing, no zero coefficients.
/// The empty sum is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PuiseuxScalar {
    terms: Vec<(Rational, Rational)>,
}

impl PuiseuxScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Rational::zero())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn monomial(coefficient: Rational, exponent: Rational) -> Self {
        Self::from_terms([(exponent, coefficient)])
    }

    /// `t^e`, the splitting of the valuation.
    pub fn t_pow(exponent: Rational) -> Self {
        Self::monomial(Rational::one(), exponent)
    }

    /// Builds a scalar from `(exponent, coefficient)` pairs in any order,
    /// merging repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut v: Vec<(Rational, Rational)> = terms.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        PuiseuxScalar { terms: out }
    }

    /// `(exponent, coefficient)` pairs by increasing exponent.
    pub fn terms(&self) -> &[(Rational, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Least exponent, `∞` for zero.
    pub fn valuation(&self) -> ExtQ {
        self.terms
            .first()
            .map_or(ExtQ::Infinite, |(e, _)| ExtQ::Finite(e.clone()))
    }

    /// The residue of `t^{-v(s)} s`: the coefficient of the lowest term.
    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coefficient(&self, exponent: &Rational) -> Rational {
        self.terms
            .iter()
            .find(|(e, _)| e == exponent)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: &Rational) -> Self {
        PuiseuxScalar {
            terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Multiplicative inverse, available for single-term scalars only
    /// (others have infinite support).
    pub fn inverse(&self) -> Option<Self> {
        match self.terms.as_slice() {
            [(e, c)] => Some(Self::monomial(c.recip(), -e)),
            _ => None,
        }
    }
}

impl Add for &PuiseuxScalar {
    type Output = PuiseuxScalar;

    fn add(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        PuiseuxScalar::from_terms(self.terms.iter().chain(&rhs.terms).cloned())
    }
}

impl Sub for &PuiseuxScalar {
    type Output = PuiseuxScalar;

    fn sub(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        self + &-rhs
    }
}

impl Neg for &PuiseuxScalar {
    type Output = PuiseuxScalar;

    fn neg(self) -> PuiseuxScalar {
        PuiseuxScalar {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &PuiseuxScalar {
    type Output = PuiseuxScalar;

    fn mul(self, rhs: &PuiseuxScalar) -> PuiseuxScalar {
        PuiseuxScalar::from_terms(
            self.terms
                .iter()
                .flat_map(|(ea, ca)| rhs.terms.iter().map(move |(eb, cb)| (ea + eb, ca * cb))),
        )
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PuiseuxScalar {
            type Output = PuiseuxScalar;
            fn $m(self, rhs: PuiseuxScalar) -> PuiseuxScalar {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

pub(crate) fn format_t_power(e: &Rational) -> String {
    if e.is_one() {
        "t".into()
    } else if e.is_integer() {
        format!("t^{}", e.numer())
    } else {
        format!("t^({})", format_rational(e))
    }
}

impl fmt::Display for PuiseuxScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mag = c.abs();
            if e.is_zero() {
                write!(f, "{}", format_rational(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", format_t_power(e))?;
            } else {
                write!(f, "{}*{}", format_rational(&mag), format_t_power(e))?;
            }
        }
        Ok(())
    }
}
