//! Finite Puiseux scalars over `Q`, polynomials with Puiseux coefficients,
//! tropical evaluation and initial forms.
//!
//! The valuation of a scalar is its least exponent of `t`; the residue of a
//! scalar `s` with valuation `a` is the coefficient of `t^a`, i.e. the image
//! of `t^{-a} s` in the residue field `Q`.

mod extended;
mod parse;
mod polynomial;
mod residue;
mod scalar;

pub use extended::{parse_weight, ExtQ};
pub use parse::{parse_polynomial, parse_polynomial_in, parse_scalar};
pub use polynomial::{Exponent, Mode, ValuedPolynomial};
pub use residue::ResiduePolynomial;
pub use scalar::PuiseuxScalar;
