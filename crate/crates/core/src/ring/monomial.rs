use std::cmp::Ordering;
use std::fmt;

use super::Var;

/// A Laurent monomial: a sparse map from variables to nonzero integer
/// exponents, kept sorted by the canonical variable order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    powers: Vec<(Var, i32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(v: Var) -> Self {
        Self::pow(v, 1)
    }

    pub fn pow(v: Var, exp: i32) -> Self {
        if exp == 0 {
            Self::one()
        } else {
            Self {
                powers: vec![(v, exp)],
            }
        }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs, merging repeats
    /// and dropping zero exponents.
    pub fn from_powers<I: IntoIterator<Item = (Var, i32)>>(powers: I) -> Self {
        let mut out = Self::one();
        for (v, e) in powers {
            out = out.mul(&Self::pow(v, e));
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn powers(&self) -> &[(Var, i32)] {
        &self.powers
    }

    pub fn exponent(&self, v: Var) -> i32 {
        self.powers
            .iter()
            .find(|(w, _)| *w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn degree(&self) -> i64 {
        self.powers.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn is_polynomial(&self) -> bool {
        self.powers.iter().all(|&(_, e)| e > 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, 1)
    }

    /// `self / other`, always defined in the Laurent ring.
    pub fn div(&self, other: &Self) -> Self {
        self.merge(other, -1)
    }

    pub fn inverse(&self) -> Self {
        Self {
            powers: self.powers.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    /// Componentwise minimum of exponents (missing variables count as 0).
    pub fn gcd_exponents(&self, other: &Self) -> Self {
        self.zip_with(other, i32::min)
    }

    fn merge(&self, other: &Self, sign: i32) -> Self {
        self.zip_with(other, |a, b| a + sign * b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Self {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() || j < other.powers.len() {
            let (v, a, b) = match (self.powers.get(i), other.powers.get(j)) {
                (Some(&(v, a)), Some(&(w, b))) => match v.cmp(&w) {
                    Ordering::Less => {
                        i += 1;
                        (v, a, 0)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (w, 0, b)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (v, a, b)
                    }
                },
                (Some(&(v, a)), None) => {
                    i += 1;
                    (v, a, 0)
                }
                (None, Some(&(w, b))) => {
                    j += 1;
                    (w, 0, b)
                }
                (None, None) => unreachable!(),
            };
            let e = f(a, b);
            if e != 0 {
                powers.push((v, e));
            }
        }
        Self { powers }
    }
}

/// Graded lexicographic order: total degree first, then the exponent of the
/// earliest variable in the canonical order where the two differ.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let diff = self.div(other);
            match diff.powers.first() {
                None => Ordering::Equal,
                Some(&(_, e)) => e.cmp(&0),
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.powers.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}
