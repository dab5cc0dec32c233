use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::RingError;

/// Which coefficient ring a polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Integer,
    Gaussian,
    Quaternion,
}

/// Coefficient ring of a [`LaurentPoly`](super::LaurentPoly).
///
/// Multiplication is not assumed commutative; callers keep factor order.
pub trait Coefficient:
    Clone
    + Debug
    + Eq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const DOMAIN: Domain;

    fn from_integer(n: BigInt) -> Self;

    /// `Some(n)` when the coefficient is an ordinary integer.
    fn as_integer(&self) -> Option<BigInt>;

    /// Two-sided inverse when `self` is a unit of the coefficient ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// Body of the parenthesized form used in polynomial strings, e.g.
    /// `2+3i` or `1-j+2k`.
    fn fmt_body(&self) -> String;

    fn parse_body(text: &str) -> Result<Self, RingError>;
}

/// Commutative coefficient rings in which exact division can be decided.
/// Required by the fraction-free determinant.
pub trait ExactDiv: Coefficient {
    /// `self / d` when `d` divides `self` exactly.
    fn div_exact(&self, d: &Self) -> Option<Self>;
}

pub type Integer = BigInt;

impl Coefficient for BigInt {
    const DOMAIN: Domain = Domain::Integer;

    fn from_integer(n: BigInt) -> Self {
        n
    }

    fn as_integer(&self) -> Option<BigInt> {
        Some(self.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        (self.abs().is_one()).then(|| self.clone())
    }

    fn fmt_body(&self) -> String {
        self.to_string()
    }

    fn parse_body(text: &str) -> Result<Self, RingError> {
        let parts = parse_unit_terms(text, &[])?;
        Ok(parts[0].clone())
    }
}

impl ExactDiv for BigInt {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }
}

/// Gaussian integer `re + im·i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigInt,
    pub im: BigInt,
}

impl Gaussian {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        Self {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn i() -> Self {
        Self::new(0, 1)
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl Zero for Gaussian {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gaussian {
    fn one() -> Self {
        Self::new(1, 0)
    }
}

impl Add for Gaussian {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }
}

impl Sub for Gaussian {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }
}

impl Neg for Gaussian {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for Gaussian {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }
}

impl Coefficient for Gaussian {
    const DOMAIN: Domain = Domain::Gaussian;

    fn from_integer(n: BigInt) -> Self {
        Self {
            re: n,
            im: BigInt::zero(),
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.norm().is_one().then(|| self.conj())
    }

    fn fmt_body(&self) -> String {
        fmt_unit_terms(&[&self.re, &self.im], &["", "i"])
    }

    fn parse_body(text: &str) -> Result<Self, RingError> {
        let p = parse_unit_terms(text, &['i'])?;
        Ok(Self {
            re: p[0].clone(),
            im: p[1].clone(),
        })
    }
}

impl ExactDiv for Gaussian {
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        if n.is_zero() {
            return None;
        }
        let num = self.clone() * d.conj();
        Some(Self {
            re: num.re.div_exact(&n)?,
            im: num.im.div_exact(&n)?,
        })
    }
}

impl Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_body())
    }
}

/// Integral (Lipschitz) quaternion `a + b·i + c·j + d·k`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Quaternion {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn i() -> Self {
        Self::new(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::new(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::new(0, 0, 0, 1)
    }

    pub fn conj(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// Real part of `self · conj(other)`; zero iff the two are orthogonal
    /// as vectors in R^4.
    pub fn dot(&self, other: &Self) -> BigInt {
        &self.a * &other.a + &self.b * &other.b + &self.c * &other.c + &self.d * &other.d
    }

    pub fn is_pure(&self) -> bool {
        self.a.is_zero()
    }

    /// The 2×2 complex matrix `[[a+bi, c+di], [-c+di, a-bi]]`, row-major.
    pub fn complex_rep(&self) -> [Gaussian; 4] {
        [
            Gaussian::new(self.a.clone(), self.b.clone()),
            Gaussian::new(self.c.clone(), self.d.clone()),
            Gaussian::new(-&self.c, self.d.clone()),
            Gaussian::new(self.a.clone(), -&self.b),
        ]
    }
}

impl Zero for Quaternion {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

impl One for Quaternion {
    fn one() -> Self {
        Self::new(1, 0, 0, 0)
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self {
            a: self.a + o.a,
            b: self.b + o.b,
            c: self.c + o.c,
            d: self.d + o.d,
        }
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self {
            a: self.a - o.a,
            b: self.b - o.b,
            c: self.c - o.c,
            d: self.d - o.d,
        }
    }
}

impl Neg for Quaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }
}

// Hamilton product; i^2 = j^2 = k^2 = ijk = -1.
impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Self {
            a: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            b: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            c: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

impl Coefficient for Quaternion {
    const DOMAIN: Domain = Domain::Quaternion;

    fn from_integer(n: BigInt) -> Self {
        Self {
            a: n,
            ..Self::default()
        }
    }

    fn as_integer(&self) -> Option<BigInt> {
        (self.b.is_zero() && self.c.is_zero() && self.d.is_zero()).then(|| self.a.clone())
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.norm().is_one().then(|| self.conj())
    }

    fn fmt_body(&self) -> String {
        fmt_unit_terms(&[&self.a, &self.b, &self.c, &self.d], &["", "i", "j", "k"])
    }

    fn parse_body(text: &str) -> Result<Self, RingError> {
        let p = parse_unit_terms(text, &['i', 'j', 'k'])?;
        Ok(Self {
            a: p[0].clone(),
            b: p[1].clone(),
            c: p[2].clone(),
            d: p[3].clone(),
        })
    }
}

impl Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_body())
    }
}

fn fmt_unit_terms(parts: &[&BigInt], units: &[&str]) -> String {
    let mut out = String::new();
    for (n, unit) in parts.iter().zip(units) {
        if n.is_zero() {
            continue;
        }
        let sign = if n.is_negative() {
            "-"
        } else if out.is_empty() {
            ""
        } else {
            "+"
        };
        out.push_str(sign);
        let mag = n.abs();
        if unit.is_empty() || !mag.is_one() {
            out.push_str(&mag.to_string());
        }
        out.push_str(unit);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses `±n₀ ± n₁u₁ ± ...` where each `uᵢ` is one of `units`; repeated
/// units accumulate. Returns `[real, per-unit...]`.
fn parse_unit_terms(text: &str, units: &[char]) -> Result<Vec<BigInt>, RingError> {
    let bad = || RingError::Parse(format!("malformed coefficient `{text}`"));
    let mut acc = vec![BigInt::zero(); units.len() + 1];
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(bad());
    }
    let mut pos = 0;
    while pos < chars.len() {
        let mut negative = false;
        if chars[pos] == '+' || chars[pos] == '-' {
            negative = chars[pos] == '-';
            pos += 1;
        } else if pos != 0 {
            return Err(bad());
        }
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_digit() {
            pos += 1;
        }
        let magnitude: BigInt = if pos > start {
            chars[start..pos]
                .iter()
                .collect::<String>()
                .parse()
                .map_err(|_| bad())?
        } else {
            BigInt::one()
        };
        let slot = match chars.get(pos) {
            Some(c) if units.contains(c) => {
                pos += 1;
                1 + units.iter().position(|u| u == c).unwrap()
            }
            _ if pos > start => 0,
            _ => return Err(bad()),
        };
        let value = if negative { -magnitude } else { magnitude };
        acc[slot] += value;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        let m1 = -Quaternion::one();
        assert_eq!(i.clone() * i.clone(), m1);
        assert_eq!(j.clone() * j.clone(), m1);
        assert_eq!(k.clone() * k.clone(), m1);
        assert_eq!(i.clone() * j.clone() * k.clone(), m1);
        assert_eq!(i.clone() * j.clone(), k);
        assert_eq!(j * i, -k);
    }

    #[test]
    fn gaussian_exact_division() {
        let a = Gaussian::new(3, 1);
        let b = Gaussian::new(1, -2);
        let p = a.clone() * b.clone();
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(Gaussian::new(1, 0).div_exact(&Gaussian::new(1, 1)), None);
    }

    #[test]
    fn units() {
        assert!(BigInt::from(-1).unit_inverse().is_some());
        assert!(BigInt::from(2).unit_inverse().is_none());
        assert_eq!(Gaussian::i().unit_inverse(), Some(Gaussian::new(0, -1)));
        assert_eq!(Quaternion::k().unit_inverse(), Some(-Quaternion::k()));
        assert!(Quaternion::new(1, 1, 0, 0).unit_inverse().is_none());
    }

    #[test]
    fn body_round_trip() {
        let q = Quaternion::new(-2, 1, 0, -3);
        assert_eq!(q.fmt_body(), "-2+i-3k");
        assert_eq!(Quaternion::parse_body("-2+i-3k").unwrap(), q);
        assert_eq!(Gaussian::parse_body("-i").unwrap(), Gaussian::new(0, -1));
        assert_eq!(Gaussian::new(0, 0).fmt_body(), "0");
        assert!(Gaussian::parse_body("2j").is_err());
        assert!(BigInt::parse_body("3i").is_err());
    }
}
