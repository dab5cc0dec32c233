use std::collections::BTreeMap;

use serde::Serialize;

use super::PolyValue;
use crate::ring::Var;
use crate::switches::Family;

/// Highest and lowest exponent of one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentRange {
    pub e_max: i32,
    pub e_min: i32,
}

impl ExponentRange {
    /// `max(|e_max|, |e_min|)`.
    pub fn e(&self) -> u32 {
        self.e_max.unsigned_abs().max(self.e_min.unsigned_abs())
    }

    pub fn span(&self) -> u32 {
        (self.e_max - self.e_min) as u32
    }
}

/// Lower bounds read off the exponents of the bounded variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// Keyed by variable name; absent variables do not occur.
    pub exponents: BTreeMap<String, ExponentRange>,
    /// Study determinants double every exponent; they are divided by this
    /// factor (rounding up) before the bounds are read.
    pub exponent_scale: u32,
    /// Odd crossings of a knot, from `z`.
    pub n_o_bound: u32,
    /// Real crossings of a knot, from `z`.
    pub n_real_bound: u32,
    /// Odd crossings per component, from `z_i`; keys are 1-based.
    pub o_i_bounds: BTreeMap<String, u32>,
    /// Crossings between two components, from `w_i_j`; keys `"i,j"`.
    pub l_ij_bounds: BTreeMap<String, u32>,
    /// Virtual crossings, from `alpha`.
    pub n_v_bound: u32,
    /// `e_max - e_min` for `z`. Only a conjectured bound on the real
    /// crossing number.
    pub z_span: Option<u32>,
}

pub fn derive_bounds(poly: &PolyValue, family: Family) -> BoundsReport {
    let scale = if family.is_quaternionic() { 2 } else { 1 };
    let mut report = BoundsReport {
        exponent_scale: scale,
        ..Default::default()
    };
    if poly.is_zero() {
        return report;
    }
    for var in poly.variables().into_iter().filter(Var::is_bounded) {
        let Some((e_min, e_max)) = poly.exponent_range(var) else {
            continue;
        };
        let range = ExponentRange { e_max, e_min };
        report.exponents.insert(var.to_string(), range);
        let e = range.e().div_ceil(scale);
        match var {
            Var::Z => {
                report.n_o_bound = e + e % 2;
                report.n_real_bound = if e > 0 { e + 1 } else { 0 };
                report.z_span = Some(range.span().div_ceil(scale));
            }
            Var::ZComp(i) => {
                report.o_i_bounds.insert(i.to_string(), e);
            }
            Var::Link(i, j) => {
                report.l_ij_bounds.insert(format!("{i},{j}"), e);
            }
            Var::Alpha => report.n_v_bound = e,
            Var::S | Var::T => {}
        }
    }
    report
}
