use std::fmt;
use std::str::FromStr;

use super::RingError;

/// A polynomial variable.
///
/// The derived ordering is the canonical variable order used for
/// serialization: `s < t < z < z_1 < z_2 < ... < w_1_2 < ... < alpha`.
/// Component numbers in `ZComp` and `Link` are 1-based, matching the printed
/// names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    S,
    T,
    Z,
    ZComp(u32),
    /// `w_{i,j}` with `i < j`.
    Link(u32, u32),
    Alpha,
}

impl Var {
    /// Link variable for an unordered component pair.
    pub fn link(i: u32, j: u32) -> Self {
        if i <= j {
            Var::Link(i, j)
        } else {
            Var::Link(j, i)
        }
    }

    /// Variables whose exponents are read by the crossing-number bounds.
    /// `s` and `t` only carry the unit ambiguity of the invariant.
    pub fn is_bounded(&self) -> bool {
        !matches!(self, Var::S | Var::T)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::S => f.write_str("s"),
            Var::T => f.write_str("t"),
            Var::Z => f.write_str("z"),
            Var::ZComp(i) => write!(f, "z_{i}"),
            Var::Link(i, j) => write!(f, "w_{i}_{j}"),
            Var::Alpha => f.write_str("alpha"),
        }
    }
}

impl FromStr for Var {
    type Err = RingError;

    fn from_str(name: &str) -> Result<Self, Self::Err> {
        let bad = || RingError::Parse(format!("unknown variable `{name}`"));
        let index = |s: &str| -> Result<u32, RingError> {
            match s.parse::<u32>() {
                Ok(v) if v > 0 && !s.starts_with('0') => Ok(v),
                _ => Err(bad()),
            }
        };
        match name {
            "s" => Ok(Var::S),
            "t" => Ok(Var::T),
            "z" => Ok(Var::Z),
            "alpha" => Ok(Var::Alpha),
            _ => {
                if let Some(rest) = name.strip_prefix("z_") {
                    Ok(Var::ZComp(index(rest)?))
                } else if let Some(rest) = name.strip_prefix("w_") {
                    let (i, j) = rest.split_once('_').ok_or_else(bad)?;
                    let (i, j) = (index(i)?, index(j)?);
                    if i >= j {
                        return Err(bad());
                    }
                    Ok(Var::Link(i, j))
                } else {
                    Err(bad())
                }
            }
        }
    }
}
