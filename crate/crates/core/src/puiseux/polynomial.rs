use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};

use super::residue::{format_monomial, grlex_desc};
use super::{ExtQ, PuiseuxScalar, ResiduePolynomial};
use crate::polyhedra::Rational;
use crate::{Error, Result};

/// Exponent vector of a monomial `x^u`.
pub type Exponent = Vec<i64>;

/// Whether a polynomial lives in the Laurent ring (negative exponents allowed,
/// weights finite) or the ordinary ring (nonnegative exponents, weights may be `∞`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Laurent,
    Ordinary,
}

/// `f = Σ a_u x^u` with Puiseux coefficients `a_u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuedPolynomial {
    nvars: usize,
    mode: Mode,
    terms: BTreeMap<Exponent, PuiseuxScalar>,
}

impl ValuedPolynomial {
    pub fn zero(nvars: usize, mode: Mode) -> Self {
        ValuedPolynomial {
            nvars,
            mode,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(nvars: usize, mode: Mode, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, PuiseuxScalar)>,
    {
        let mut p = Self::zero(nvars, mode);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    /// Adds `c x^e`, merging with an existing term.
    pub fn add_term(&mut self, e: Exponent, c: PuiseuxScalar) -> Result<()> {
        if e.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: e.len(),
            });
        }
        if self.mode == Mode::Ordinary && e.iter().any(|&k| k < 0) {
            return Err(Error::LaurentNotAllowed);
        }
        let merged = match self.terms.remove(&e) {
            Some(old) => &old + &c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(e, merged);
        }
        Ok(())
    }

    /// The single-term polynomial `c x^e`.
    pub fn monomial(nvars: usize, mode: Mode, e: Exponent, c: PuiseuxScalar) -> Result<Self> {
        Self::from_terms(nvars, mode, [(e, c)])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Reinterprets the polynomial in another ring. Fails when switching to
    /// ordinary mode with negative exponents present.
    pub fn with_mode(mut self, mode: Mode) -> Result<Self> {
        if mode == Mode::Ordinary && self.terms.keys().flatten().any(|&k| k < 0) {
            return Err(Error::LaurentNotAllowed);
        }
        self.mode = mode;
        Ok(self)
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, PuiseuxScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn check_weight(&self, w: &[ExtQ]) -> Result<()> {
        if w.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: w.len(),
            });
        }
        if self.mode == Mode::Laurent && w.iter().any(|x| !x.is_finite()) {
            return Err(Error::InfiniteWeightOnLaurent);
        }
        Ok(())
    }

    /// `v(a_u) + <u, w>` for every term, in exponent order.
    pub fn term_values(&self, w: &[ExtQ]) -> Result<Vec<(&Exponent, ExtQ)>> {
        self.check_weight(w)?;
        Ok(self
            .terms
            .iter()
            .map(|(u, a)| {
                let val = u.iter().zip(w).fold(a.valuation(), |acc, (&k, wi)| {
                    acc + ExtQ::pair_exponent(k, wi)
                });
                (u, val)
            })
            .collect())
    }

    /// `trop(f)(w) = min_u (v(a_u) + <u, w>)`; `∞` for the zero polynomial.
    pub fn trop_eval(&self, w: &[ExtQ]) -> Result<ExtQ> {
        Ok(self
            .term_values(w)?
            .into_iter()
            .map(|(_, v)| v)
            .min()
            .unwrap_or(ExtQ::Infinite))
    }

    /// Initial form read off termwise: the residues of the coefficients of
    /// the terms attaining the minimum. Zero when every term is infinite.
    pub fn initial_form(&self, w: &[ExtQ]) -> Result<ResiduePolynomial> {
        let values = self.term_values(w)?;
        let min = values
            .iter()
            .map(|(_, v)| v.clone())
            .min()
            .unwrap_or(ExtQ::Infinite);
        if !min.is_finite() {
            return Ok(ResiduePolynomial::zero(self.nvars));
        }
        Ok(ResiduePolynomial::from_terms(
            self.nvars,
            values.into_iter().filter(|(_, v)| *v == min).map(|(u, _)| {
                let c = self.terms[u]
                    .leading_coefficient()
                    .cloned()
                    .unwrap_or_default();
                (u.clone(), c)
            }),
        ))
    }

    /// Initial form computed by substituting `x_i -> t^{w_i} x_i`, dividing by
    /// `t^W` where `W` is the least valuation among the substituted
    /// coefficients, and reducing the coefficients modulo the maximal ideal.
    pub fn initial_form_substitution(&self, w: &[ExtQ]) -> Result<ResiduePolynomial> {
        self.check_weight(w)?;
        let w: Vec<&Rational> = w
            .iter()
            .map(|x| x.finite().ok_or(Error::InfiniteWeight))
            .collect::<Result<_>>()?;
        let substituted: Vec<(&Exponent, PuiseuxScalar)> = self
            .terms
            .iter()
            .map(|(u, a)| {
                let shift: Rational = u
                    .iter()
                    .zip(&w)
                    .map(|(&k, wi)| *wi * Rational::from_integer(k.into()))
                    .sum();
                (u, a.shift(&shift))
            })
            .collect();
        let Some(big_w) = substituted
            .iter()
            .filter_map(|(_, s)| s.valuation().finite().cloned())
            .min()
        else {
            return Ok(ResiduePolynomial::zero(self.nvars));
        };
        let neg_w = -big_w;
        Ok(ResiduePolynomial::from_terms(
            self.nvars,
            substituted
                .into_iter()
                .map(|(u, s)| (u.clone(), s.shift(&neg_w).coefficient(&Rational::zero()))),
        ))
    }

    /// The polynomial `f|_{O_σ}` on the torus orbit where the coordinates in
    /// `sigma` (0-based) vanish: drop every term involving them, then forget
    /// those variables. Only meaningful for ordinary polynomials.
    pub fn restrict_to_orbit(&self, sigma: &[usize]) -> Result<ValuedPolynomial> {
        if self.mode == Mode::Laurent {
            return Err(Error::LaurentNotAllowed);
        }
        if let Some(&bad) = sigma.iter().find(|&&i| i >= self.nvars) {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: bad + 1,
            });
        }
        let keep: Vec<usize> = (0..self.nvars).filter(|i| !sigma.contains(i)).collect();
        let mut out = ValuedPolynomial::zero(keep.len(), Mode::Ordinary);
        for (u, a) in &self.terms {
            if sigma.iter().all(|&i| u[i] == 0) {
                out.add_term(keep.iter().map(|&i| u[i]).collect(), a.clone())?;
            }
        }
        Ok(out)
    }

    /// Per-variable exponent `c` such that `x^c f` has no negative exponents.
    pub fn clearing_exponent(&self) -> Exponent {
        (0..self.nvars)
            .map(|i| self.terms.keys().map(|u| -u[i]).max().unwrap_or(0).max(0))
            .collect()
    }

    /// Evaluates `x^c f` at `point`, where `c` is [`Self::clearing_exponent`].
    /// For a point with nonzero coordinates this vanishes iff `f` does.
    pub fn evaluate_cleared(&self, point: &[PuiseuxScalar]) -> Result<PuiseuxScalar> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: point.len(),
            });
        }
        let c = self.clearing_exponent();
        let mut total = PuiseuxScalar::zero();
        for (u, a) in &self.terms {
            let mut term = a.clone();
            for (i, p) in point.iter().enumerate() {
                let k = u[i] + c[i];
                if k > 0 {
                    term = &term * &p.pow(k as u32);
                }
            }
            total = &total + &term;
        }
        Ok(total)
    }

    /// Whether `point` is a zero of `f` in the torus. Coordinates must be nonzero.
    pub fn vanishes_at(&self, point: &[PuiseuxScalar]) -> Result<bool> {
        if let Some(i) = point.iter().position(PuiseuxScalar::is_zero) {
            return Err(Error::ZeroWitnessCoordinate(i));
        }
        Ok(self.evaluate_cleared(point)?.is_zero())
    }

    fn combine(&self, other: &ValuedPolynomial) -> ValuedPolynomial {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials in different numbers of variables"
        );
        let mode = if self.mode == Mode::Laurent || other.mode == Mode::Laurent {
            Mode::Laurent
        } else {
            Mode::Ordinary
        };
        ValuedPolynomial::zero(self.nvars, mode)
    }
}

impl Add for &ValuedPolynomial {
    type Output = ValuedPolynomial;

    fn add(self, rhs: &ValuedPolynomial) -> ValuedPolynomial {
        let mut out = self.combine(rhs);
        for (u, a) in self.terms.iter().chain(&rhs.terms) {
            out.add_term(u.clone(), a.clone()).expect("mode checked");
        }
        out
    }
}

impl Neg for &ValuedPolynomial {
    type Output = ValuedPolynomial;

    fn neg(self) -> ValuedPolynomial {
        ValuedPolynomial {
            nvars: self.nvars,
            mode: self.mode,
            terms: self.terms.iter().map(|(u, a)| (u.clone(), -a)).collect(),
        }
    }
}

impl Sub for &ValuedPolynomial {
    type Output = ValuedPolynomial;

    fn sub(self, rhs: &ValuedPolynomial) -> ValuedPolynomial {
        self + &-rhs
    }
}

impl Mul for &ValuedPolynomial {
    type Output = ValuedPolynomial;

    // Exponents add when monomials multiply.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &ValuedPolynomial) -> ValuedPolynomial {
        let mut out = self.combine(rhs);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                let e = u.iter().zip(v).map(|(x, y)| x + y).collect();
                out.add_term(e, a * b).expect("mode checked");
            }
        }
        out
    }
}

impl fmt::Display for ValuedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| grlex_desc(a.0, b.0));
        for (i, (u, a)) in ordered.into_iter().enumerate() {
            let mono = format_monomial(u);
            let single = a.terms().len() == 1;
            let negative = single && a.terms()[0].1.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = if negative { -a } else { a.clone() };
            let coeff_text = if single {
                coeff.to_string()
            } else {
                format!("({coeff})")
            };
            if mono.is_empty() {
                write!(f, "{coeff_text}")?;
            } else if coeff == PuiseuxScalar::one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff_text}*{mono}")?;
            }
        }
        Ok(())
    }
}
