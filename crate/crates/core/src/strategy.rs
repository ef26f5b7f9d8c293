//! Named, runtime-selectable algorithm variants.
//!
//! Each family is a trait; a [`Registry`] maps names to boxed
//! implementations. Lookups of unknown names fail with the list of
//! available ones.

use crate::grobtrop::grobner_tropicalize_embedding;
use crate::puiseux::{ExtQ, ResiduePolynomial, ValuedPolynomial};
use crate::spherical::{ColoredFan, SphericalDatum};
use crate::troposphere::{tropicalize_embedding, ExtendedTrop};
use crate::{Error, Result};

pub trait Named {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
}

pub trait Tropicalizer: Named + Send + Sync {
    fn tropicalize(&self, datum: &SphericalDatum, fan: &ColoredFan) -> Result<ExtendedTrop>;
}

pub trait InitialFormMethod: Named + Send + Sync {
    fn initial_form(&self, f: &ValuedPolynomial, w: &[ExtQ]) -> Result<ResiduePolynomial>;
}

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<Box<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Registry {
            kind,
            entries: Vec::new(),
        }
    }

    /// Adds an entry, replacing any entry of the same name.
    pub fn register(&mut self, entry: Box<T>) {
        self.entries.retain(|e| e.name() != entry.name());
        self.entries.push(entry);
    }

    pub fn get(&self, name: &str) -> Result<&T> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|b| &**b)
            .ok_or_else(|| Error::UnknownStrategy {
                kind: self.kind,
                name: name.to_string(),
                available: self.names().join(", "),
            })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.entries.iter().map(|b| &**b)
    }
}

pub struct Facewise;

impl Named for Facewise {
    fn name(&self) -> &'static str {
        "facewise"
    }

    fn description(&self) -> &'static str {
        "one stratum per colored face, valuation cone projected along the face"
    }
}

impl Tropicalizer for Facewise {
    fn tropicalize(&self, datum: &SphericalDatum, fan: &ColoredFan) -> Result<ExtendedTrop> {
        tropicalize_embedding(datum, fan)
    }
}

pub struct Grobner;

impl Named for Grobner {
    fn name(&self) -> &'static str {
        "grobner"
    }

    fn description(&self) -> &'static str {
        "strata from faces of dual cones, valuations restricted to regular units"
    }
}

impl Tropicalizer for Grobner {
    fn tropicalize(&self, datum: &SphericalDatum, fan: &ColoredFan) -> Result<ExtendedTrop> {
        grobner_tropicalize_embedding(datum, fan)
    }
}

pub struct Termwise;

impl Named for Termwise {
    fn name(&self) -> &'static str {
        "termwise"
    }

    fn description(&self) -> &'static str {
        "residues of the coefficients of the minimal terms"
    }
}

impl InitialFormMethod for Termwise {
    fn initial_form(&self, f: &ValuedPolynomial, w: &[ExtQ]) -> Result<ResiduePolynomial> {
        f.initial_form(w)
    }
}

pub struct Substitution;

impl Named for Substitution {
    fn name(&self) -> &'static str {
        "substitution"
    }

    fn description(&self) -> &'static str {
        "residue of t^-W f(t^w x), finite weights only"
    }
}

impl InitialFormMethod for Substitution {
    fn initial_form(&self, f: &ValuedPolynomial, w: &[ExtQ]) -> Result<ResiduePolynomial> {
        f.initial_form_substitution(w)
    }
}

pub fn tropicalizers() -> Registry<dyn Tropicalizer> {
    let mut r: Registry<dyn Tropicalizer> = Registry::new("tropicalizer");
    r.register(Box::new(Facewise));
    r.register(Box::new(Grobner));
    r
}

pub fn initial_form_methods() -> Registry<dyn InitialFormMethod> {
    let mut r: Registry<dyn InitialFormMethod> = Registry::new("initial-form method");
    r.register(Box::new(Termwise));
    r.register(Box::new(Substitution));
    r
}
