use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{Coefficient, ExactDiv, Monomial, RingError, Var};

/// Exact multivariate Laurent polynomial over the coefficient ring `R`.
///
/// Terms are stored sparsely with no zero coefficients, so structural
/// equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<R> {
    terms: BTreeMap<Monomial, R>,
}

/// A unit of the Laurent ring: a coefficient-ring unit times a monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit<R> {
    pub coeff: R,
    pub monomial: Monomial,
}

impl<R: Coefficient> Unit<R> {
    pub fn inverse(&self) -> Unit<R> {
        Unit {
            coeff: self
                .coeff
                .unit_inverse()
                .expect("unit coefficient is invertible"),
            monomial: self.monomial.inverse(),
        }
    }

    pub fn to_poly(&self) -> LaurentPoly<R> {
        LaurentPoly::term(self.coeff.clone(), self.monomial.clone())
    }
}

impl<R: Coefficient> Default for LaurentPoly<R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<R: Coefficient> LaurentPoly<R> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn constant(c: R) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(R::from_integer(BigInt::from(n)))
    }

    pub fn term(c: R, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::term(R::one(), Monomial::var(v))
    }

    /// `v^exp` with unit coefficient.
    pub fn var_pow(v: Var, exp: i32) -> Self {
        Self::term(R::one(), Monomial::pow(v, exp))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, R)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Multiplies every term by `m`.
    pub fn shift(&self, m: &Monomial) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Left multiplication by a coefficient.
    pub fn scale_left(&self, c: &R) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, x)| (m.clone(), c.clone() * x.clone())),
        )
    }

    /// Applies `f` to every coefficient, keeping monomials.
    pub fn map_coeffs<S: Coefficient>(&self, f: impl Fn(&R) -> S) -> LaurentPoly<S> {
        LaurentPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// The unit decomposition when `self` is a unit of the Laurent ring,
    /// i.e. a single term whose coefficient is a unit.
    pub fn as_unit(&self) -> Option<Unit<R>> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        c.unit_inverse()?;
        Some(Unit {
            coeff: c.clone(),
            monomial: m.clone(),
        })
    }

    /// Inverse in the Laurent ring, if `self` is a unit.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_unit().map(|u| u.inverse().to_poly())
    }

    /// Componentwise minimum exponent over all terms; `None` for zero.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, m| acc.gcd_exponents(m)))
    }

    /// Lowest and highest exponent of `v` over all terms.
    pub fn exponent_range(&self, v: Var) -> Option<(i32, i32)> {
        let mut exps = self.terms.keys().map(|m| m.exponent(v));
        let first = exps.next()?;
        Some(exps.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    /// Variables occurring with a nonzero exponent in some term.
    pub fn variables(&self) -> Vec<Var> {
        let mut vars: Vec<Var> = self
            .terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|&(v, _)| v))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms
            .keys()
            .all(|m| m.powers().iter().all(|&(_, e)| e >= 0))
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl<R: ExactDiv> LaurentPoly<R> {
    /// Exact quotient `self / d` for polynomials with nonnegative exponents.
    ///
    /// Runs multivariate division by leading terms in graded-lex order and
    /// returns `None` when `d` does not divide `self` in the polynomial ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (d_mono, d_coeff) = d.leading()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((r_mono, r_coeff)) = rem.leading() {
            let q_mono = r_mono.div(d_mono);
            if q_mono.powers().iter().any(|&(_, e)| e < 0) {
                return None;
            }
            let q_coeff = r_coeff.div_exact(d_coeff)?;
            let q = Self::term(q_coeff, q_mono);
            rem = &rem - &(&q * d);
            quot = &quot + &q;
        }
        Some(quot)
    }
}

impl<R: Coefficient> Add for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn add(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<R: Coefficient> Sub for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn sub(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<R: Coefficient> Mul for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn mul(self, rhs: Self) -> LaurentPoly<R> {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Coefficient> Neg for &LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<R: Coefficient> $tr for LaurentPoly<R> {
            type Output = LaurentPoly<R>;
            fn $method(self, rhs: Self) -> LaurentPoly<R> {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Coefficient> Neg for LaurentPoly<R> {
    type Output = LaurentPoly<R>;
    fn neg(self) -> LaurentPoly<R> {
        -&self
    }
}

/// Canonical form: terms from the highest monomial down, each printed as
/// `coef*var^exp*...` with unit coefficients and unit exponents elided.
/// Non-integer coefficients are parenthesized, e.g. `(1+2i)*t`.
impl<R: Coefficient> fmt::Display for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, body) = match c.as_integer() {
                Some(n) => {
                    let mag = n.abs();
                    let body = match (mag.is_one(), m.is_one()) {
                        (true, true) => "1".to_string(),
                        (true, false) => m.to_string(),
                        (false, true) => mag.to_string(),
                        (false, false) => format!("{mag}*{m}"),
                    };
                    (n.is_negative(), body)
                }
                None => {
                    let body = if m.is_one() {
                        format!("({})", c.fmt_body())
                    } else {
                        format!("({})*{m}", c.fmt_body())
                    };
                    (false, body)
                }
            };
            match (k, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl<R: Coefficient> fmt::Debug for LaurentPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Parses sums of products such as `2*s^-1*t - (1+i)*z^2 + 3`. Accepts the
/// canonical output plus any reordering, repeated factors, and spacing.
impl<R: Coefficient> FromStr for LaurentPoly<R> {
    type Err = RingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        Parser::new(text).parse()
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            src,
            chars: src.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> RingError {
        RingError::Parse(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse<R: Coefficient>(mut self) -> Result<LaurentPoly<R>, RingError> {
        if self.chars.is_empty() {
            return Err(self.err("empty polynomial"));
        }
        let mut out = LaurentPoly::zero();
        let mut first = true;
        while self.peek().is_some() {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                _ if first => false,
                _ => return Err(self.err("expected `+` or `-`")),
            };
            first = false;
            let term = self.term::<R>()?;
            out = if negative { &out - &term } else { &out + &term };
        }
        Ok(out)
    }

    fn term<R: Coefficient>(&mut self) -> Result<LaurentPoly<R>, RingError> {
        let mut acc = self.factor::<R>()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            let f = self.factor::<R>()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor<R: Coefficient>(&mut self) -> Result<LaurentPoly<R>, RingError> {
        match self.peek() {
            Some('(') => {
                let close = self.chars[self.pos..]
                    .iter()
                    .position(|&c| c == ')')
                    .ok_or_else(|| self.err("unclosed `(`"))?;
                let body: String = self.chars[self.pos + 1..self.pos + close].iter().collect();
                self.pos += close + 1;
                Ok(LaurentPoly::constant(R::parse_body(&body)?))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.digits()?;
                Ok(LaurentPoly::constant(R::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self
                    .peek()
                    .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
                {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let v: Var = name.parse()?;
                let mut exp = 1i32;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    let negative = self.peek() == Some('-');
                    if negative {
                        self.pos += 1;
                    }
                    let n: i32 = self
                        .digits()?
                        .try_into()
                        .map_err(|_| self.err("exponent out of range"))?;
                    exp = if negative { -n } else { n };
                }
                Ok(LaurentPoly::var_pow(v, exp))
            }
            _ => Err(self.err("expected a factor")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, RingError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }
}
