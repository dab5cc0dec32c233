//! Linear switches: 2×2 matrices over a Laurent ring acting on pairs of arc
//! labels, the named maps used by each invariant family, and symbolic axiom
//! checks.

mod axioms;
mod family;

use std::fmt;

use thiserror::Error;

use crate::ring::{
    Coefficient, ExactDiv, Integer, LaurentPoly, Matrix, Quaternion, RingError, Var,
};

pub use axioms::{
    check_axioms_single, check_mixed_ybe, ruleset_equations, verify_ruleset, AxiomReport,
    EquationResult, RulesetReport, YbeEquation,
};
pub use family::{Family, QuaternionUnits, RuleSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SwitchError {
    #[error("switch {name}: expected a 2x2 matrix")]
    Shape { name: String },
    #[error("switch {name}: forward and inverse do not multiply to the identity")]
    NotInverse { name: String },
    #[error("switch {name}: determinant is not a unit")]
    Singular { name: String },
    #[error("quaternion units must be pure unit quaternions, got {0}")]
    NotPureUnit(String),
    #[error("quaternion units {0} and {1} are not orthogonal")]
    NotOrthogonal(String, String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family {family} does not apply to diagrams with {components} components")]
    Components { family: String, components: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A linear switch. `forward` acts on the column `(a, b)`; entries multiply
/// vector components from the left.
#[derive(Clone, PartialEq, Eq)]
pub struct Switch<R> {
    pub name: String,
    pub forward: Matrix<R>,
    pub inverse: Matrix<R>,
}

fn is_2x2<R: Coefficient>(m: &Matrix<R>) -> bool {
    m.rows() == 2 && m.cols() == 2
}

impl<R: Coefficient> Switch<R> {
    /// Checked constructor: both products must be the identity.
    pub fn new(
        name: impl Into<String>,
        forward: Matrix<R>,
        inverse: Matrix<R>,
    ) -> Result<Self, SwitchError> {
        let s = Self::unchecked(name, forward, inverse);
        if !is_2x2(&s.forward) || !is_2x2(&s.inverse) {
            return Err(SwitchError::Shape { name: s.name });
        }
        if !s.is_invertible() {
            return Err(SwitchError::NotInverse { name: s.name });
        }
        Ok(s)
    }

    /// No validation; used for deliberately broken switches in checks.
    pub fn unchecked(name: impl Into<String>, forward: Matrix<R>, inverse: Matrix<R>) -> Self {
        Self {
            name: name.into(),
            forward,
            inverse,
        }
    }

    /// A self-inverse switch.
    pub fn involution(name: impl Into<String>, forward: Matrix<R>) -> Result<Self, SwitchError> {
        let inverse = forward.clone();
        Self::new(name, forward, inverse)
    }

    pub fn is_invertible(&self) -> bool {
        let id = Matrix::identity(2);
        let ok = |a: &Matrix<R>, b: &Matrix<R>| a.mul(b).map(|p| p == id).unwrap_or(false);
        is_2x2(&self.forward)
            && is_2x2(&self.inverse)
            && ok(&self.forward, &self.inverse)
            && ok(&self.inverse, &self.forward)
    }

    pub fn is_involution(&self) -> bool {
        self.forward == self.inverse
    }

    /// The switch with forward and inverse exchanged.
    pub fn inverted(&self) -> Self {
        Self {
            name: format!("{}^-1", self.name),
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
        }
    }

    /// Copy with `delta` added to forward entry `(r, c)`; the inverse is
    /// left as it was.
    pub fn perturbed(&self, r: usize, c: usize, delta: &LaurentPoly<R>) -> Self {
        let mut forward = self.forward.clone();
        forward.set(r, c, forward.get(r, c) + delta);
        Self {
            name: format!("{}[{r}{c}]+{delta}", self.name),
            forward,
            inverse: self.inverse.clone(),
        }
    }
}

impl<R: ExactDiv> Switch<R> {
    /// Builds the inverse from the adjugate; the determinant must be a unit.
    pub fn from_forward(name: impl Into<String>, forward: Matrix<R>) -> Result<Self, SwitchError> {
        let name = name.into();
        if !is_2x2(&forward) {
            return Err(SwitchError::Shape { name });
        }
        let det = forward.determinant()?;
        let Some(inv_det) = det.unit_inverse() else {
            return Err(SwitchError::Singular { name });
        };
        let e = |r, c| forward.get(r, c);
        let inverse = Matrix::from_rows(vec![
            vec![&inv_det * e(1, 1), &inv_det * &-e(0, 1)],
            vec![&inv_det * &-e(1, 0), &inv_det * e(0, 0)],
        ])?;
        Self::new(name, forward, inverse)
    }
}

impl<R: Coefficient> fmt::Debug for Switch<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = [[{}, {}], [{}, {}]]",
            self.name,
            self.forward.get(0, 0),
            self.forward.get(0, 1),
            self.forward.get(1, 0),
            self.forward.get(1, 1)
        )
    }
}

fn mat2<R: Coefficient>(e: [[LaurentPoly<R>; 2]; 2]) -> Matrix<R> {
    let [[a, b], [c, d]] = e;
    Matrix::from_rows(vec![vec![a, b], vec![c, d]]).expect("2x2 rows")
}

fn v<R: Coefficient>(var: Var) -> LaurentPoly<R> {
    LaurentPoly::var(var)
}

fn v_inv<R: Coefficient>(var: Var) -> LaurentPoly<R> {
    LaurentPoly::var_pow(var, -1)
}

/// The Generalized Alexander switch `[[0, s], [t, 1-st]]`.
pub fn alexander() -> Switch<Integer> {
    let st = &v::<Integer>(Var::S) * &v(Var::T);
    let forward = mat2([
        [LaurentPoly::zero(), v(Var::S)],
        [v(Var::T), &LaurentPoly::one() - &st],
    ]);
    let inv_st = &v_inv::<Integer>(Var::S) * &v_inv(Var::T);
    let inverse = mat2([
        [&LaurentPoly::one() - &inv_st, v_inv(Var::T)],
        [v_inv(Var::S), LaurentPoly::zero()],
    ]);
    Switch::new("B", forward, inverse).expect("alexander switch is invertible")
}

/// `P1 = B`.
pub fn p1() -> Switch<Integer> {
    Switch {
        name: "P1".into(),
        ..alexander()
    }
}

/// `P2 = [[0, s], [t, st-1]]`.
pub fn p2() -> Switch<Integer> {
    let st = &v::<Integer>(Var::S) * &v(Var::T);
    let forward = mat2([
        [LaurentPoly::zero(), v(Var::S)],
        [v(Var::T), &st - &LaurentPoly::one()],
    ]);
    Switch::from_forward("P2", forward).expect("P2 is invertible")
}

/// `[[0, x], [x^-1, 0]]`, an involution for any variable `x`.
pub fn antidiagonal<R: Coefficient>(name: impl Into<String>, x: Var) -> Switch<R> {
    let forward = mat2([[LaurentPoly::zero(), v(x)], [v_inv(x), LaurentPoly::zero()]]);
    Switch::involution(name, forward).expect("antidiagonal switch is an involution")
}

/// `P3 = [[0, z], [z^-1, 0]]`.
pub fn p3<R: Coefficient>() -> Switch<R> {
    antidiagonal("P3", Var::Z)
}

/// `P3` in component `i` (1-based), with variable `z_i`.
pub fn p3_component<R: Coefficient>(i: u32) -> Switch<R> {
    antidiagonal(format!("P_{i}"), Var::ZComp(i))
}

/// Link map `L_{i,j} = [[0, w_i_j], [w_i_j^-1, 0]]`.
pub fn link_map<R: Coefficient>(i: u32, j: u32) -> Switch<R> {
    let w = Var::link(i, j);
    let Var::Link(a, b) = w else { unreachable!() };
    antidiagonal(format!("L_{a}_{b}"), w)
}

/// Twist map `V = [[0, alpha], [alpha^-1, 0]]` for virtual crossings.
pub fn twist<R: Coefficient>() -> Switch<R> {
    antidiagonal("V", Var::Alpha)
}

/// Quaternionic switch `[[1+U, -V t], [V t^-1, 1+U]]` with inverse
/// `[[1-U, V t], [-V t^-1, 1-U]]`, for orthogonal pure unit quaternions.
pub fn quaternionic(units: &QuaternionUnits) -> Switch<Quaternion> {
    let (u, w) = (&units.u, &units.v);
    let c = |q: Quaternion| LaurentPoly::constant(q);
    let t = v::<Quaternion>(Var::T);
    let ti = v_inv::<Quaternion>(Var::T);
    let one = Quaternion::from_integer(1.into());
    let forward = mat2([
        [c(one.clone() + u.clone()), t.scale_left(&-w.clone())],
        [ti.scale_left(w), c(one.clone() + u.clone())],
    ]);
    let inverse = mat2([
        [c(one.clone() - u.clone()), t.scale_left(w)],
        [ti.scale_left(&-w.clone()), c(one - u.clone())],
    ]);
    Switch::new(format!("Q({u},{w})"), forward, inverse)
        .expect("orthogonal pure units give an invertible switch")
}
