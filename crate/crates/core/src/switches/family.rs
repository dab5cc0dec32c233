use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{
    alexander, antidiagonal, link_map, p2, p3_component, quaternionic, twist, Switch, SwitchError,
};
use crate::parity::Parity;
use crate::ring::{Coefficient, Integer, Quaternion, Var};

/// Named invariant families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Sawollek,
    ZParity,
    P2Parity,
    LinkParity,
    AlphaSawollek,
    AlphaLinkParity,
    Quaternionic,
    ZParityQuaternionic,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Sawollek,
        Family::ZParity,
        Family::P2Parity,
        Family::LinkParity,
        Family::AlphaSawollek,
        Family::AlphaLinkParity,
        Family::Quaternionic,
        Family::ZParityQuaternionic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Sawollek => "sawollek",
            Family::ZParity => "z-parity",
            Family::P2Parity => "p2-parity",
            Family::LinkParity => "link-parity",
            Family::AlphaSawollek => "alpha-sawollek",
            Family::AlphaLinkParity => "alpha-link-parity",
            Family::Quaternionic => "quaternionic",
            Family::ZParityQuaternionic => "z-parity-quaternionic",
        }
    }

    /// Quaternionic families are evaluated through the Study determinant.
    pub fn is_quaternionic(self) -> bool {
        matches!(self, Family::Quaternionic | Family::ZParityQuaternionic)
    }

    /// Families whose odd map has no link-crossing counterpart and so are
    /// only defined on knots.
    pub fn knot_only(self) -> bool {
        matches!(
            self,
            Family::ZParity | Family::P2Parity | Family::ZParityQuaternionic
        )
    }

    pub fn uses_virtual_map(self) -> bool {
        matches!(self, Family::AlphaSawollek | Family::AlphaLinkParity)
    }

    /// Families built from the Generalized Alexander switch, which vanish
    /// on classical knots.
    pub fn is_alexander_type(self) -> bool {
        !self.is_quaternionic()
    }

    /// The family with the same even map and no parity distinction.
    pub fn even_counterpart(self) -> Option<Family> {
        match self {
            Family::ZParity | Family::P2Parity => Some(Family::Sawollek),
            Family::ZParityQuaternionic => Some(Family::Quaternionic),
            _ => None,
        }
    }

    pub fn applies_to(self, components: usize) -> bool {
        components <= 1 || !self.knot_only()
    }

    fn check_components(self, components: usize) -> Result<(), SwitchError> {
        if self.applies_to(components) {
            Ok(())
        } else {
            Err(SwitchError::Components {
                family: self.name().into(),
                components,
            })
        }
    }

    /// Switches over the integers for a diagram with `components`
    /// components.
    pub fn int_rules(self, components: usize) -> Result<RuleSet<Integer>, SwitchError> {
        self.check_components(components)?;
        let n = components.max(1);
        let b = alexander();
        let rs = match self {
            Family::Sawollek | Family::AlphaSawollek => RuleSet::uniform(self, n, b.clone(), b),
            Family::ZParity => RuleSet::uniform(self, n, b.clone(), super::p3()),
            Family::P2Parity => RuleSet::uniform(self, n, b, p2()),
            Family::LinkParity | Family::AlphaLinkParity => RuleSet::link_parity(self, n, b),
            Family::Quaternionic | Family::ZParityQuaternionic => {
                return Err(SwitchError::UnknownFamily(format!(
                    "{} needs quaternion units",
                    self.name()
                )))
            }
        };
        Ok(if self.uses_virtual_map() {
            rs.with_virtual(twist())
        } else {
            rs
        })
    }

    /// Switches over the quaternions for the quaternionic families.
    pub fn quaternion_rules(
        self,
        components: usize,
        units: &QuaternionUnits,
    ) -> Result<RuleSet<Quaternion>, SwitchError> {
        self.check_components(components)?;
        let n = components.max(1);
        let b = quaternionic(units);
        match self {
            Family::Quaternionic => Ok(RuleSet::uniform(self, n, b.clone(), b)),
            Family::ZParityQuaternionic => Ok(RuleSet::uniform(self, n, b, super::p3())),
            _ => Err(SwitchError::UnknownFamily(format!(
                "{} is not quaternionic",
                self.name()
            ))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = SwitchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s.trim())
            .ok_or_else(|| SwitchError::UnknownFamily(s.into()))
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// The pair `(U, V)` of orthogonal pure unit quaternions parametrizing the
/// quaternionic switch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuaternionUnits {
    pub u: Quaternion,
    pub v: Quaternion,
}

impl Default for QuaternionUnits {
    fn default() -> Self {
        Self {
            u: Quaternion::i(),
            v: Quaternion::j(),
        }
    }
}

impl QuaternionUnits {
    pub fn new(u: Quaternion, v: Quaternion) -> Result<Self, SwitchError> {
        for q in [&u, &v] {
            if !(q.is_pure() && q.norm().is_one()) {
                return Err(SwitchError::NotPureUnit(q.to_string()));
            }
        }
        if !u.dot(&v).is_zero() {
            return Err(SwitchError::NotOrthogonal(u.to_string(), v.to_string()));
        }
        Ok(Self { u, v })
    }

    /// Every admissible pair with integral entries: `U, V ∈ {±i, ±j, ±k}`,
    /// orthogonal.
    pub fn all_admissible() -> Vec<Self> {
        let units: Vec<Quaternion> = [Quaternion::i(), Quaternion::j(), Quaternion::k()]
            .into_iter()
            .flat_map(|q| [q.clone(), -q])
            .collect();
        let mut out = Vec::new();
        for u in &units {
            for v in &units {
                if let Ok(p) = Self::new(u.clone(), v.clone()) {
                    out.push(p);
                }
            }
        }
        out
    }
}

impl fmt::Display for QuaternionUnits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.u.fmt_body(), self.v.fmt_body())
    }
}

impl FromStr for QuaternionUnits {
    type Err = SwitchError;

    /// Parses `U,V`, e.g. `i,j` or `-k,i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [u, v] = parts[..] else {
            return Err(SwitchError::NotPureUnit(s.into()));
        };
        Self::new(Quaternion::parse_body(u)?, Quaternion::parse_body(v)?)
    }
}

/// Which switch applies at each class of crossing. Components are 0-based.
#[derive(Clone)]
pub struct RuleSet<R> {
    pub family: Family,
    pub even: Vec<Switch<R>>,
    pub odd: Vec<Switch<R>>,
    pub link: BTreeMap<(usize, usize), Switch<R>>,
    pub virtual_map: Option<Switch<R>>,
}

impl<R: Coefficient> RuleSet<R> {
    /// Same even and odd map on every component; link crossings use the
    /// even map.
    pub fn uniform(family: Family, components: usize, even: Switch<R>, odd: Switch<R>) -> Self {
        let mut link = BTreeMap::new();
        for i in 0..components {
            for j in i + 1..components {
                link.insert((i, j), even.clone());
            }
        }
        Self {
            family,
            even: vec![even; components],
            odd: vec![odd; components],
            link,
            virtual_map: None,
        }
    }

    /// Per-component odd maps `P_i` with variable `z_i` and link maps
    /// `L_{i,j}`. A single component uses plain `z`.
    pub fn link_parity(family: Family, components: usize, even: Switch<R>) -> Self {
        let odd = if components == 1 {
            vec![antidiagonal("P3", Var::Z)]
        } else {
            (1..=components as u32).map(p3_component).collect()
        };
        let mut link = BTreeMap::new();
        for i in 0..components {
            for j in i + 1..components {
                link.insert((i, j), link_map(i as u32 + 1, j as u32 + 1));
            }
        }
        Self {
            family,
            even: vec![even; components],
            odd,
            link,
            virtual_map: None,
        }
    }

    pub fn with_virtual(mut self, v: Switch<R>) -> Self {
        self.virtual_map = Some(v);
        self
    }

    pub fn components(&self) -> usize {
        self.even.len()
    }

    /// The switch for a crossing of the given class.
    pub fn switch_for(&self, p: Parity) -> Option<&Switch<R>> {
        match p {
            Parity::Even { component } => self.even.get(component),
            Parity::Odd { component } => self.odd.get(component),
            Parity::Link(i, j) => self.link.get(&(i, j)),
        }
    }
}

impl<R: Coefficient> fmt::Debug for RuleSet<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleSet")
            .field("family", &self.family)
            .field("even", &self.even)
            .field("odd", &self.odd)
            .field("link", &self.link)
            .field("virtual_map", &self.virtual_map)
            .finish()
    }
}
