use std::fmt;

use super::{Coefficient, ExactDiv, Gaussian, LaurentPoly, Monomial, Quaternion, RingError};

/// Dense matrix of Laurent polynomials, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly<R>>,
}

impl<R: Coefficient> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![LaurentPoly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<LaurentPoly<R>>>) -> Result<Self, RingError> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(RingError::Ragged);
        }
        Ok(Self {
            rows: n,
            cols: m,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Parses each entry with the polynomial grammar.
    pub fn parse_rows(rows: &[&[&str]]) -> Result<Self, RingError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|e| e.parse()).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly<R> {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: LaurentPoly<R>) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly<R>] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly<R>> {
        self.entries.iter()
    }

    /// Exact product; `(A·B)[r][c] = Σ_k A[r][k]·B[k][c]` with left factors
    /// kept on the left.
    pub fn mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.cols != other.rows {
            return Err(RingError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    let a = self.get(r, k);
                    let b = other.get(k, c);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    pub fn map<S: Coefficient>(&self, f: impl Fn(&LaurentPoly<R>) -> LaurentPoly<S>) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Copy with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        out
    }
}

impl<R: ExactDiv> Matrix<R> {
    /// Exact determinant.
    ///
    /// Each row is divided by the monomial of its componentwise minimum
    /// exponents so all entries become ordinary polynomials, fraction-free
    /// Bareiss elimination runs on the result, and the extracted monomials
    /// are multiplied back in.
    pub fn determinant(&self) -> Result<LaurentPoly<R>, RingError> {
        if !self.is_square() {
            return Err(RingError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one());
        }
        let mut extracted = Monomial::one();
        let mut work: Vec<Vec<LaurentPoly<R>>> = Vec::with_capacity(n);
        for r in 0..n {
            let row = self.row(r);
            let lowest = row
                .iter()
                .filter_map(LaurentPoly::min_exponents)
                .reduce(|a, b| a.gcd_exponents(&b));
            let Some(lowest) = lowest else {
                return Ok(LaurentPoly::zero());
            };
            let back = lowest.inverse();
            work.push(row.iter().map(|e| e.shift(&back)).collect());
            extracted = extracted.mul(&lowest);
        }
        let det = bareiss(work)?;
        Ok(det.shift(&extracted))
    }
}

fn bareiss<R: ExactDiv>(mut m: Vec<Vec<LaurentPoly<R>>>) -> Result<LaurentPoly<R>, RingError> {
    let n = m.len();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // Sparsest nonzero pivot in column k keeps intermediate growth down.
        let pivot = (k..n)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].len());
        let Some(p) = pivot else {
            return Ok(LaurentPoly::zero());
        };
        if p != k {
            m.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).ok_or(RingError::InexactDivision)?;
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Replaces every quaternion coefficient by its 2×2 complex representation
/// `[[a+bi, c+di], [-c+di, a-bi]]`; an n×n matrix becomes 2n×2n.
pub fn quaternion_to_complex_rep(m: &Matrix<Quaternion>) -> Matrix<Gaussian> {
    let mut out = Matrix::zeros(2 * m.rows(), 2 * m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let mut block: [Vec<(Monomial, Gaussian)>; 4] = Default::default();
            for (mono, q) in m.get(r, c).terms() {
                for (slot, g) in q.complex_rep().into_iter().enumerate() {
                    block[slot].push((mono.clone(), g));
                }
            }
            for (slot, terms) in block.into_iter().enumerate() {
                out.set(
                    2 * r + slot / 2,
                    2 * c + slot % 2,
                    LaurentPoly::from_terms(terms),
                );
            }
        }
    }
    out
}

impl<R: Coefficient> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integer;

    type M = Matrix<Integer>;

    #[test]
    fn identity_is_neutral() {
        let m = M::parse_rows(&[
            &["s", "1 - t", "0"],
            &["z^-1", "2", "s*t"],
            &["0", "alpha", "-1"],
        ])
        .unwrap();
        assert_eq!(M::identity(3).mul(&m).unwrap(), m);
    }

    #[test]
    fn alexander_switch_times_inverse() {
        let b = M::parse_rows(&[&["0", "s"], &["t", "1 - s*t"]]).unwrap();
        let inv = M::parse_rows(&[&["1 - s^-1*t^-1", "t^-1"], &["s^-1", "0"]]).unwrap();
        assert_eq!(b.mul(&inv).unwrap(), M::identity(2));
    }

    #[test]
    fn one_by_one_product() {
        let a = M::parse_rows(&[&["s + 1"]]).unwrap();
        let b = M::parse_rows(&[&["s - 1"]]).unwrap();
        assert_eq!(a.mul(&b).unwrap(), M::parse_rows(&[&["s^2 - 1"]]).unwrap());
    }

    #[test]
    fn dimension_errors() {
        let a = M::zeros(2, 3);
        assert!(matches!(
            a.mul(&a),
            Err(RingError::DimensionMismatch { .. })
        ));
        assert!(matches!(a.determinant(), Err(RingError::NotSquare { .. })));
    }

    #[test]
    fn small_determinants() {
        let b = M::parse_rows(&[&["0", "s"], &["t", "1 - s*t"]]).unwrap();
        assert_eq!(b.determinant().unwrap(), "-s*t".parse().unwrap());
        for n in 1..=6 {
            assert!(M::identity(n).determinant().unwrap().is_one());
        }
    }

    #[test]
    fn negative_exponent_rows() {
        let m = M::parse_rows(&[&["s^-1", "t^-2"], &["1", "s^-3*t"]]).unwrap();
        assert_eq!(m.determinant().unwrap(), "s^-4*t - t^-2".parse().unwrap());
    }

    #[test]
    fn complex_rep_examples() {
        let q = |s: &str| Matrix::<Quaternion>::parse_rows(&[&[s]]).unwrap();
        let g = |rows: &[&[&str]]| Matrix::<Gaussian>::parse_rows(rows).unwrap();
        assert_eq!(
            quaternion_to_complex_rep(&q("(i)")),
            g(&[&["(i)", "0"], &["0", "(-i)"]])
        );
        assert_eq!(quaternion_to_complex_rep(&q("1")), Matrix::identity(2));
        assert_eq!(
            quaternion_to_complex_rep(&q("(j)*t")),
            g(&[&["0", "t"], &["-t", "0"]])
        );
    }
}
