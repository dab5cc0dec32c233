//! Presentation matrices of diagrams and the invariant polynomials built
//! from their determinants.
//!
//! Slot convention at a real crossing, with `in(x)`/`out(x)` the arcs
//! entering and leaving the pass `x`:
//! - positive: `[out(over), out(under)] = S · [in(under), in(over)]`;
//! - negative: `[out(under), out(over)] = S^-1 · [in(over), in(under)]`.
//!
//! At a virtual crossing the pass read first (component, position order) plays
//! the role of the over pass of a positive crossing.

mod bounds;
mod value;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

pub use bounds::{derive_bounds, BoundsReport, ExponentRange};
pub use value::PolyValue;

use crate::diagram::{Arc, Crossing, Diagram, DiagramError, PassLoc, Sign};
use crate::parity::{classify, ParityLabeling};
use crate::ring::{quaternion_to_complex_rep, Coefficient, LaurentPoly, Matrix, RingError};
use crate::switches::{Family, QuaternionUnits, RuleSet, Switch, SwitchError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Switch(#[from] SwitchError),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("no switch for crossing {0}")]
    MissingSwitch(String),
    #[error("diagram has virtual crossings but the rule set has no virtual map")]
    MissingVirtualMap,
    #[error("arc {0:?} is the output of {1} relations")]
    ArcCoverage(Arc, usize),
}

/// `output = Σ coefficient · arc`.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation<R> {
    pub output: Arc,
    pub terms: Vec<(Arc, LaurentPoly<R>)>,
}

impl<R: Coefficient> fmt::Debug for Relation<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} = ", self.output)?;
        f.debug_list().entries(&self.terms).finish()
    }
}

fn relations_at<R: Coefficient>(
    s: &Switch<R>,
    use_inverse: bool,
    ins: [Arc; 2],
    outs: [Arc; 2],
) -> [Relation<R>; 2] {
    let m = if use_inverse { &s.inverse } else { &s.forward };
    [0, 1].map(|r| Relation {
        output: outs[r],
        terms: (0..2).map(|c| (ins[c], m.get(r, c).clone())).collect(),
    })
}

/// Two relations per real or virtual crossing, in crossing-id order.
pub fn assemble_relations<R: Coefficient>(
    d: &Diagram,
    labeling: &ParityLabeling,
    rs: &RuleSet<R>,
) -> Result<Vec<Relation<R>>, EngineError> {
    let inn = |p: PassLoc| d.incoming_arc(p);
    let out = |p: PassLoc| d.outgoing_arc(p);
    let mut rels = Vec::with_capacity(2 * d.crossings().len());
    for (id, c) in d.crossings() {
        let pair = match *c {
            Crossing::Real { sign, over, under } => {
                let label = labeling
                    .get(*id)
                    .ok_or_else(|| EngineError::MissingSwitch(id.to_string()))?;
                let s = rs
                    .switch_for(label)
                    .ok_or_else(|| EngineError::MissingSwitch(format!("{id} ({label})")))?;
                match sign {
                    Sign::Positive => {
                        relations_at(s, false, [inn(under), inn(over)], [out(over), out(under)])
                    }
                    Sign::Negative => {
                        relations_at(s, true, [inn(over), inn(under)], [out(under), out(over)])
                    }
                }
            }
            Crossing::Virtual { first, second } => {
                let v = rs
                    .virtual_map
                    .as_ref()
                    .ok_or(EngineError::MissingVirtualMap)?;
                let (a, b) = if first <= second {
                    (first, second)
                } else {
                    (second, first)
                };
                relations_at(v, false, [inn(b), inn(a)], [out(a), out(b)])
            }
        };
        rels.extend(pair);
    }
    Ok(rels)
}

/// One row per arc in arc order: the coefficients of the relation whose
/// output is that arc, with `-1` added on the diagonal.
pub fn presentation_matrix<R: Coefficient>(
    d: &Diagram,
    relations: &[Relation<R>],
) -> Result<Matrix<R>, EngineError> {
    let index: BTreeMap<Arc, usize> = d.arcs().enumerate().map(|(i, a)| (a, i)).collect();
    let n = index.len();
    let mut m = Matrix::zeros(n, n);
    let mut covered = vec![0usize; n];
    for rel in relations {
        let row = index[&rel.output];
        covered[row] += 1;
        for (arc, coeff) in &rel.terms {
            let col = index[arc];
            m.set(row, col, m.get(row, col) + coeff);
        }
        m.set(row, row, m.get(row, row) - &LaurentPoly::one());
    }
    for (arc, &i) in &index {
        if covered[i] != 1 {
            return Err(EngineError::ArcCoverage(*arc, covered[i]));
        }
    }
    Ok(m)
}

/// Presence of classical-ness and odd-crossing evidence.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    /// Nonzero value of a family that vanishes on classical knots and
    /// links; `None` when the family gives no such conclusion.
    pub nonclassical: Option<bool>,
    /// Value differs from the family without a parity map, so every diagram
    /// has an odd crossing; `None` when there is no such counterpart.
    pub odd_evidence: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub family: Family,
    pub gauss_code: String,
    pub writhe: i64,
    #[serde(skip)]
    pub raw_det: PolyValue,
    #[serde(rename = "polynomial")]
    pub canonical: PolyValue,
    pub bounds: BoundsReport,
    pub flags: Flags,
}

/// Evaluation options; the units only matter for quaternionic families.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub units: QuaternionUnits,
}

/// Diagrams that evaluate to the zero polynomial without a determinant.
fn trivially_zero(d: &Diagram) -> bool {
    d.real_crossing_count() == 0 || d.components().iter().any(Vec::is_empty)
}

fn determinant_of<R: Coefficient>(
    d: &Diagram,
    rs: &RuleSet<R>,
    det: impl Fn(&Matrix<R>) -> Result<PolyValue, RingError>,
) -> Result<PolyValue, EngineError> {
    let labeling = classify(d);
    let rels = assemble_relations(d, &labeling, rs)?;
    let m = presentation_matrix(d, &rels)?;
    log::debug!(
        "{}: {}x{} presentation matrix",
        rs.family,
        m.rows(),
        m.cols()
    );
    Ok(det(&m)?)
}

/// Raw determinant of the presentation matrix under `family`.
pub fn raw_determinant(
    d: &Diagram,
    family: Family,
    opts: &Options,
) -> Result<PolyValue, EngineError> {
    if trivially_zero(d) {
        return Ok(PolyValue::zero());
    }
    let stripped;
    let d = if family.uses_virtual_map() || d.virtual_crossing_count() == 0 {
        d
    } else {
        stripped = d.without_virtual();
        &stripped
    };
    let n = d.component_count();
    if family.is_quaternionic() {
        let rs = family.quaternion_rules(n, &opts.units)?;
        determinant_of(d, &rs, |m| {
            quaternion_to_complex_rep(m)
                .determinant()
                .map(PolyValue::from_gaussian)
        })
    } else {
        let rs = family.int_rules(n)?;
        determinant_of(d, &rs, |m| m.determinant().map(PolyValue::Int))
    }
}

/// `(-1)^writhe · det`, normalized in `s` and `t`.
pub fn canonical(d: &Diagram, family: Family, opts: &Options) -> Result<PolyValue, EngineError> {
    let raw = raw_determinant(d, family, opts)?;
    Ok(raw.normalized(d.writhe() % 2 != 0))
}

pub fn compute_invariant(
    d: &Diagram,
    family: Family,
    opts: &Options,
) -> Result<InvariantResult, EngineError> {
    let raw_det = raw_determinant(d, family, opts)?;
    let canonical = raw_det.normalized(d.writhe() % 2 != 0);
    let knot_like =
        d.component_count() == 1 || matches!(family, Family::Sawollek | Family::AlphaSawollek);
    let nonclassical = (family.is_alexander_type() && knot_like).then(|| !canonical.is_zero());
    let odd_evidence = match family.even_counterpart() {
        Some(base) => Some(canonical != self::canonical(d, base, opts)?),
        None => None,
    };
    Ok(InvariantResult {
        family,
        gauss_code: d.to_string(),
        writhe: d.writhe(),
        bounds: derive_bounds(&canonical, family),
        raw_det,
        canonical,
        flags: Flags {
            nonclassical,
            odd_evidence,
        },
    })
}
