use std::fmt;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::ring::{Coefficient, GaussPoly, IntPoly, LaurentPoly, Monomial, Var};

/// An invariant value: integer coefficients for the Alexander-type
/// families, Gaussian integers for Study determinants that are not real.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyValue {
    Int(IntPoly),
    Gaussian(GaussPoly),
}

impl PolyValue {
    pub fn zero() -> Self {
        PolyValue::Int(IntPoly::zero())
    }

    /// Gaussian values with no imaginary part are stored as integers.
    pub fn from_gaussian(p: GaussPoly) -> Self {
        if p.terms().all(|(_, c)| c.im.is_zero()) {
            PolyValue::Int(p.map_coeffs(|c| c.re.clone()))
        } else {
            PolyValue::Gaussian(p)
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            PolyValue::Int(p) => p.is_zero(),
            PolyValue::Gaussian(p) => p.is_zero(),
        }
    }

    pub fn exponent_range(&self, v: Var) -> Option<(i32, i32)> {
        match self {
            PolyValue::Int(p) => p.exponent_range(v),
            PolyValue::Gaussian(p) => p.exponent_range(v),
        }
    }

    pub fn variables(&self) -> Vec<Var> {
        match self {
            PolyValue::Int(p) => p.variables(),
            PolyValue::Gaussian(p) => p.variables(),
        }
    }

    pub fn as_int(&self) -> Option<&IntPoly> {
        match self {
            PolyValue::Int(p) => Some(p),
            PolyValue::Gaussian(_) => None,
        }
    }

    /// Negated when `negate`, then shifted so the lowest exponents of `s`
    /// and `t` are 0. Other variables keep their exponents.
    pub fn normalized(&self, negate: bool) -> Self {
        match self {
            PolyValue::Int(p) => PolyValue::Int(normalize(p, negate)),
            PolyValue::Gaussian(p) => PolyValue::Gaussian(normalize(p, negate)),
        }
    }

    /// Equal, or equal after negation.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == other.normalized(true).normalized(false)
    }

    /// Parses a polynomial string, as integer coefficients when possible.
    pub fn parse(text: &str) -> Result<Self, crate::ring::RingError> {
        match text.parse::<IntPoly>() {
            Ok(p) => Ok(PolyValue::Int(p)),
            Err(_) => Ok(Self::from_gaussian(text.parse()?)),
        }
    }
}

fn normalize<R: Coefficient>(p: &LaurentPoly<R>, negate: bool) -> LaurentPoly<R> {
    let p = if negate { -p } else { p.clone() };
    let low = |v| p.exponent_range(v).map_or(0, |(lo, _)| lo);
    let shift = Monomial::from_powers([(Var::S, -low(Var::S)), (Var::T, -low(Var::T))]);
    p.shift(&shift)
}

impl fmt::Display for PolyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyValue::Int(p) => p.fmt(f),
            PolyValue::Gaussian(p) => p.fmt(f),
        }
    }
}

impl Serialize for PolyValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
