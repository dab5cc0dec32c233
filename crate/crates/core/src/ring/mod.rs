//! Exact Laurent polynomial arithmetic over the integers, Gaussian integers
//! and integral quaternions, plus matrices and determinants over them.

mod coeff;
mod matrix;
mod monomial;
mod poly;
mod var;

use thiserror::Error;

pub use coeff::{Coefficient, Domain, ExactDiv, Gaussian, Integer, Quaternion};
pub use matrix::{quaternion_to_complex_rep, Matrix};
pub use monomial::Monomial;
pub use poly::{LaurentPoly, Unit};
pub use var::Var;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("cannot multiply {left:?} by {right:?} matrix")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("determinant of non-square {rows}x{cols} matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix rows have different lengths")]
    Ragged,
    #[error("inexact division during elimination")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type IntPoly = LaurentPoly<Integer>;
pub type GaussPoly = LaurentPoly<Gaussian>;
pub type QuatPoly = LaurentPoly<Quaternion>;
