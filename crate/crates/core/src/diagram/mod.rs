//! Signed oriented Gauss codes for virtual knots and links, extended with
//! `V<id>` passes for virtual crossings.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! code      := component (';' component)*
//! component := ε | pass (',' pass)*
//! pass      := ('O' | '0' | 'U') id ('+' | '-') | 'V' id
//! id        := [1-9][0-9]*
//! ```

mod moves;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use moves::{KinkOrder, R2Orientation, R2Variant, Strand};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CrossingId(pub u32);

impl fmt::Display for CrossingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PassKind {
    Over,
    Under,
    Virtual,
}

/// One visit of a component to a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Pass {
    pub kind: PassKind,
    pub crossing: CrossingId,
    /// Present exactly for real (over/under) passes.
    pub sign: Option<Sign>,
}

impl Pass {
    pub fn over(id: u32, sign: Sign) -> Self {
        Self {
            kind: PassKind::Over,
            crossing: CrossingId(id),
            sign: Some(sign),
        }
    }

    pub fn under(id: u32, sign: Sign) -> Self {
        Self {
            kind: PassKind::Under,
            crossing: CrossingId(id),
            sign: Some(sign),
        }
    }

    pub fn virtual_pass(id: u32) -> Self {
        Self {
            kind: PassKind::Virtual,
            crossing: CrossingId(id),
            sign: None,
        }
    }

    pub fn is_virtual(&self) -> bool {
        self.kind == PassKind::Virtual
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            PassKind::Over => 'O',
            PassKind::Under => 'U',
            PassKind::Virtual => 'V',
        };
        write!(f, "{kind}{}", self.crossing)?;
        if let Some(sign) = self.sign {
            write!(f, "{}", sign.symbol())?;
        }
        Ok(())
    }
}

/// Location of a pass: component index and position within its cyclic
/// sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PassLoc {
    pub component: usize,
    pub position: usize,
}

/// An arc of the diagram. Arc `p` of a component runs from pass `p` to pass
/// `p + 1` (cyclically), so a component with `k` passes has `k` arcs. An
/// empty component has the single site `Arc { position: 0 }` for insertions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub component: usize,
    pub position: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Crossing {
    Real {
        sign: Sign,
        over: PassLoc,
        under: PassLoc,
    },
    /// `first` precedes `second` in reading order (component, position).
    Virtual { first: PassLoc, second: PassLoc },
}

impl Crossing {
    pub fn is_virtual(&self) -> bool {
        matches!(self, Crossing::Virtual { .. })
    }

    pub fn locations(&self) -> (PassLoc, PassLoc) {
        match *self {
            Crossing::Real { over, under, .. } => (over, under),
            Crossing::Virtual { first, second } => (first, second),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed pass `{token}` (component {component}, position {position})")]
    MalformedToken {
        component: usize,
        position: usize,
        token: String,
    },
    #[error("virtual pass `{token}` carries a sign (component {component}, position {position})")]
    SignedVirtual {
        component: usize,
        position: usize,
        token: String,
    },
    #[error("pass `{token}` has no sign (component {component}, position {position})")]
    MissingSign {
        component: usize,
        position: usize,
        token: String,
    },
    #[error("crossing {crossing} appears {count} time(s); expected exactly 2")]
    Occurrences { crossing: CrossingId, count: usize },
    #[error("crossing {crossing} mixes real and virtual passes")]
    MixedKinds { crossing: CrossingId },
    #[error("crossing {crossing} needs one over and one under pass")]
    SameKind { crossing: CrossingId },
    #[error("crossing {crossing} has different signs at its two passes")]
    SignMismatch { crossing: CrossingId },
    #[error("no arc {position} on component {component}")]
    InvalidArc { component: usize, position: usize },
    #[error("move not applicable: {0}")]
    NotApplicable(String),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Accept real passes without a sign and read them as positive.
    pub permissive_signs: bool,
}

/// A validated Gauss code.
#[derive(Clone, PartialEq, Eq)]
pub struct Diagram {
    components: Vec<Vec<Pass>>,
    crossings: BTreeMap<CrossingId, Crossing>,
}

impl Diagram {
    /// Validates and indexes a list of cyclic pass sequences.
    pub fn new(components: Vec<Vec<Pass>>) -> Result<Self, DiagramError> {
        let mut seen: BTreeMap<CrossingId, Vec<(PassLoc, Pass)>> = BTreeMap::new();
        for (c, comp) in components.iter().enumerate() {
            for (p, pass) in comp.iter().enumerate() {
                if pass.is_virtual() != pass.sign.is_none() {
                    return Err(if pass.is_virtual() {
                        DiagramError::SignedVirtual {
                            component: c,
                            position: p,
                            token: pass.to_string(),
                        }
                    } else {
                        DiagramError::MissingSign {
                            component: c,
                            position: p,
                            token: pass.to_string(),
                        }
                    });
                }
                let loc = PassLoc {
                    component: c,
                    position: p,
                };
                seen.entry(pass.crossing).or_default().push((loc, *pass));
            }
        }
        let mut crossings = BTreeMap::new();
        for (id, occ) in seen {
            if occ.len() != 2 {
                return Err(DiagramError::Occurrences {
                    crossing: id,
                    count: occ.len(),
                });
            }
            let (l0, p0) = occ[0];
            let (l1, p1) = occ[1];
            let crossing = match (p0.kind, p1.kind) {
                (PassKind::Virtual, PassKind::Virtual) => Crossing::Virtual {
                    first: l0,
                    second: l1,
                },
                (PassKind::Virtual, _) | (_, PassKind::Virtual) => {
                    return Err(DiagramError::MixedKinds { crossing: id })
                }
                (a, b) if a == b => return Err(DiagramError::SameKind { crossing: id }),
                _ => {
                    if p0.sign != p1.sign {
                        return Err(DiagramError::SignMismatch { crossing: id });
                    }
                    let (over, under) = if p0.kind == PassKind::Over {
                        (l0, l1)
                    } else {
                        (l1, l0)
                    };
                    Crossing::Real {
                        sign: p0.sign.expect("real pass is signed"),
                        over,
                        under,
                    }
                }
            };
            crossings.insert(id, crossing);
        }
        Ok(Self {
            components,
            crossings,
        })
    }

    /// The single-component diagram with no crossings.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// `n` components with no crossings.
    pub fn unlink(n: usize) -> Self {
        Self {
            components: vec![Vec::new(); n],
            crossings: BTreeMap::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        Self::parse_with(text, ParseOptions::default())
    }

    pub fn parse_with(text: &str, opts: ParseOptions) -> Result<Self, DiagramError> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut components = Vec::new();
        for (c, comp) in cleaned.split(';').enumerate() {
            let mut passes = Vec::new();
            if !comp.is_empty() {
                for (p, token) in comp.split(',').enumerate() {
                    passes.push(parse_pass(token, c, p, opts)?);
                }
            }
            components.push(passes);
        }
        Self::new(components)
    }

    pub fn components(&self) -> &[Vec<Pass>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn pass(&self, loc: PassLoc) -> &Pass {
        &self.components[loc.component][loc.position]
    }

    pub fn crossings(&self) -> &BTreeMap<CrossingId, Crossing> {
        &self.crossings
    }

    pub fn crossing(&self, id: CrossingId) -> Option<&Crossing> {
        self.crossings.get(&id)
    }

    pub fn real_crossing_count(&self) -> usize {
        self.crossings.values().filter(|c| !c.is_virtual()).count()
    }

    pub fn virtual_crossing_count(&self) -> usize {
        self.crossings.values().filter(|c| c.is_virtual()).count()
    }

    pub fn pass_count(&self) -> usize {
        self.components.iter().map(Vec::len).sum()
    }

    /// Positive minus negative real crossings.
    pub fn writhe(&self) -> i64 {
        self.crossings
            .values()
            .map(|c| match c {
                Crossing::Real { sign, .. } => sign.value(),
                Crossing::Virtual { .. } => 0,
            })
            .sum()
    }

    /// Smallest unused crossing label.
    pub fn fresh_id(&self) -> u32 {
        self.crossings.keys().next_back().map_or(1, |id| id.0 + 1)
    }

    /// All arcs, in component order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.components.iter().enumerate().flat_map(|(c, comp)| {
            (0..comp.len()).map(move |p| Arc {
                component: c,
                position: p,
            })
        })
    }

    /// Arc ending at the pass `loc` (incoming strand).
    pub fn incoming_arc(&self, loc: PassLoc) -> Arc {
        let len = self.components[loc.component].len();
        Arc {
            component: loc.component,
            position: (loc.position + len - 1) % len,
        }
    }

    /// Arc starting at the pass `loc` (outgoing strand).
    pub fn outgoing_arc(&self, loc: PassLoc) -> Arc {
        Arc {
            component: loc.component,
            position: loc.position,
        }
    }

    /// Same diagram with component `component` read from a base point `k`
    /// passes later.
    pub fn rotate(&self, component: usize, k: usize) -> Self {
        let mut comps = self.components.clone();
        let comp = &mut comps[component];
        if !comp.is_empty() {
            let k = k % comp.len();
            comp.rotate_left(k);
        }
        Self::new(comps).expect("rotation preserves validity")
    }

    /// Same Gauss code with every virtual pass deleted.
    pub fn without_virtual(&self) -> Self {
        let comps = self
            .components
            .iter()
            .map(|c| c.iter().filter(|p| !p.is_virtual()).copied().collect())
            .collect();
        Self::new(comps).expect("deleting virtual pairs preserves validity")
    }

    /// Same code with every crossing sign reversed.
    pub fn flip_signs(&self) -> Self {
        let comps = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| Pass {
                        sign: p.sign.map(Sign::flip),
                        ..*p
                    })
                    .collect()
            })
            .collect();
        Self::new(comps).expect("sign flip preserves validity")
    }

    /// Reverses the sign of one real crossing and exchanges its over and
    /// under passes.
    pub fn switch_crossing(&self, id: CrossingId) -> Result<Self, DiagramError> {
        match self.crossing(id) {
            Some(Crossing::Real { .. }) => {}
            _ => {
                return Err(DiagramError::NotApplicable(format!(
                    "{id} is not a real crossing"
                )))
            }
        }
        let comps = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| {
                        if p.crossing != id {
                            return *p;
                        }
                        let kind = match p.kind {
                            PassKind::Over => PassKind::Under,
                            _ => PassKind::Over,
                        };
                        Pass {
                            kind,
                            crossing: id,
                            sign: p.sign.map(Sign::flip),
                        }
                    })
                    .collect()
            })
            .collect();
        Self::new(comps)
    }

    pub(crate) fn check_arc(&self, arc: Arc) -> Result<(), DiagramError> {
        let ok = match self.components.get(arc.component) {
            Some(c) if c.is_empty() => arc.position == 0,
            Some(c) => arc.position < c.len(),
            None => false,
        };
        if ok {
            Ok(())
        } else {
            Err(DiagramError::InvalidArc {
                component: arc.component,
                position: arc.position,
            })
        }
    }

    pub(crate) fn into_components(self) -> Vec<Vec<Pass>> {
        self.components
    }
}

fn parse_pass(
    token: &str,
    component: usize,
    position: usize,
    opts: ParseOptions,
) -> Result<Pass, DiagramError> {
    let malformed = || DiagramError::MalformedToken {
        component,
        position,
        token: token.to_string(),
    };
    let mut chars = token.chars();
    let kind = match chars.next() {
        Some('O') | Some('0') => PassKind::Over,
        Some('U') => PassKind::Under,
        Some('V') => PassKind::Virtual,
        _ => return Err(malformed()),
    };
    let rest = chars.as_str();
    let digits_end = rest
        .find(|c: char| !c.is_ascii_digit())
        .unwrap_or(rest.len());
    let (digits, tail) = rest.split_at(digits_end);
    if digits.is_empty() || digits.starts_with('0') {
        return Err(malformed());
    }
    let id: u32 = digits.parse().map_err(|_| malformed())?;
    let sign = match tail {
        "" => None,
        "+" => Some(Sign::Positive),
        "-" => Some(Sign::Negative),
        _ => return Err(malformed()),
    };
    match (kind, sign) {
        (PassKind::Virtual, Some(_)) => Err(DiagramError::SignedVirtual {
            component,
            position,
            token: token.to_string(),
        }),
        (PassKind::Virtual, None) => Ok(Pass::virtual_pass(id)),
        (_, None) if opts.permissive_signs => Ok(Pass {
            kind,
            crossing: CrossingId(id),
            sign: Some(Sign::Positive),
        }),
        (_, None) => Err(DiagramError::MissingSign {
            component,
            position,
            token: token.to_string(),
        }),
        (_, Some(s)) => Ok(Pass {
            kind,
            crossing: CrossingId(id),
            sign: Some(s),
        }),
    }
}

/// Canonical text form: `;` between components, `,` between passes,
/// explicit signs on real passes.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, comp) in self.components.iter().enumerate() {
            if c > 0 {
                f.write_str(";")?;
            }
            for (p, pass) in comp.iter().enumerate() {
                if p > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{pass}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(\"{self}\")")
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const KNOT_3_1: &str = "O1-,O2-,U1-,O3+,U2-,U3+";
    const LINK: &str = "O1,O7,O3,U1,U2,U3,O2;U4,O5,U6,U5,O4,O6,U7";

    #[test]
    fn parses_3_1() {
        let d = Diagram::parse(KNOT_3_1).unwrap();
        assert_eq!(d.component_count(), 1);
        assert_eq!(d.real_crossing_count(), 3);
        let signs: Vec<Sign> = d
            .crossings()
            .values()
            .map(|c| match c {
                Crossing::Real { sign, .. } => *sign,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(signs, [Sign::Negative, Sign::Negative, Sign::Positive]);
        assert_eq!(d.writhe(), -1);
    }

    #[test]
    fn zero_is_read_as_over() {
        let d = Diagram::parse("01-,02-,U1-,O3+,U2-,U3+").unwrap();
        assert_eq!(d.to_string(), KNOT_3_1);
    }

    #[test]
    fn unsigned_link_needs_permissive_mode() {
        assert!(matches!(
            Diagram::parse(LINK),
            Err(DiagramError::MissingSign { .. })
        ));
        let d = Diagram::parse_with(
            LINK,
            ParseOptions {
                permissive_signs: true,
            },
        )
        .unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.real_crossing_count(), 7);
        assert_eq!(d.writhe(), 7);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            Diagram::parse("O1-,U2-"),
            Err(DiagramError::Occurrences {
                crossing: CrossingId(1),
                count: 1
            })
        );
        assert_eq!(
            Diagram::parse("O1+,O1+"),
            Err(DiagramError::SameKind {
                crossing: CrossingId(1)
            })
        );
        assert_eq!(
            Diagram::parse("U1+,U1+"),
            Err(DiagramError::SameKind {
                crossing: CrossingId(1)
            })
        );
        assert_eq!(
            Diagram::parse("O1+,U1-"),
            Err(DiagramError::SignMismatch {
                crossing: CrossingId(1)
            })
        );
        assert!(matches!(
            Diagram::parse("O1+,V1"),
            Err(DiagramError::MixedKinds { .. })
        ));
        assert!(matches!(
            Diagram::parse("V1+,V1"),
            Err(DiagramError::SignedVirtual { position: 0, .. })
        ));
        assert!(matches!(
            Diagram::parse("O1+,X2,U1+"),
            Err(DiagramError::MalformedToken { position: 1, .. })
        ));
        assert!(matches!(
            Diagram::parse("O01+,U01+"),
            Err(DiagramError::MalformedToken { .. })
        ));
        assert!(matches!(
            Diagram::parse("O1+,,U1+"),
            Err(DiagramError::MalformedToken { position: 1, .. })
        ));
        assert!(matches!(
            Diagram::parse("O1+,O1+,U1+"),
            Err(DiagramError::Occurrences { count: 3, .. })
        ));
    }

    #[test]
    fn serialization() {
        assert_eq!(Diagram::parse("").unwrap().to_string(), "");
        assert_eq!(Diagram::parse("").unwrap(), Diagram::unknot());
        assert_eq!(
            Diagram::parse(" O1+ , V2,U1+,V2 ").unwrap().to_string(),
            "O1+,V2,U1+,V2"
        );
        assert_eq!(Diagram::parse(";").unwrap(), Diagram::unlink(2));
    }

    #[test]
    fn writhe_cases() {
        assert_eq!(Diagram::unknot().writhe(), 0);
        let d = Diagram::parse("O1-,O2-,U3+,U1-,O4-,U2-,O3+,U4-").unwrap();
        assert_eq!(d.flip_signs().writhe(), -d.writhe());
        let v = Diagram::parse("O1+,V2,U1+,V2").unwrap();
        assert_eq!(v.writhe(), 1);
        assert_eq!(v.virtual_crossing_count(), 1);
    }

    #[test]
    fn switch_crossing_swaps_roles() {
        let d = Diagram::parse(KNOT_3_1).unwrap();
        let e = d.switch_crossing(CrossingId(1)).unwrap();
        assert_eq!(e.to_string(), "U1+,O2-,O1+,O3+,U2-,U3+");
        assert!(Diagram::parse("V1,V1")
            .unwrap()
            .switch_crossing(CrossingId(1))
            .is_err());
    }
}
