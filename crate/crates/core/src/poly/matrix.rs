//! Matrices over `Q[q]` and its fraction field, with fraction-free (Bareiss)
//! Gauss-Jordan inversion.

use rayon::prelude::*;

use super::{MultiPoly, RatFunc};
use crate::error::{Error, Result};
use num_traits::Zero;

use crate::linalg::{self, DenseMatrix};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type PolyMatrix = Matrix<MultiPoly>;
pub type RatMatrix = Matrix<RatFunc>;

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| MultiPoly::zero(nvars))
    }

    pub fn constant(m: &DenseMatrix, nvars: usize) -> Self {
        let cols = m.first().map_or(0, Vec::len);
        Self::from_fn(m.len(), cols, |i, j| {
            MultiPoly::constant(nvars, m[i][j].clone())
        })
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                MultiPoly::one(nvars)
            } else {
                MultiPoly::zero(nvars)
            }
        })
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let nvars = self
            .data
            .first()
            .or(other.data.first())
            .map_or(0, MultiPoly::nvars);
        let data: Vec<MultiPoly> = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / other.cols, idx % other.cols);
                let mut acc = MultiPoly::zero(nvars);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                acc
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("sum of differently shaped matrices".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Evaluation at `q = 0`.
    pub fn at_origin(&self) -> DenseMatrix {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(MultiPoly::constant_term).collect())
            .collect()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self.get(i, j) == &-self.get(j, i)))
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.data.iter().filter_map(MultiPoly::total_degree).max()
    }

    pub fn rescale_vars(&self, factors: &[Q]) -> Self {
        self.map(|p| p.rescale_vars(factors))
    }

    pub fn to_rat(&self) -> RatMatrix {
        self.map(|p| RatFunc::from_poly(p.clone()))
    }
}

impl RatMatrix {
    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (i..self.cols).all(|j| self.get(i, j) == &-self.get(j, i)))
    }

    pub fn all_polynomial(&self) -> bool {
        self.data.iter().all(RatFunc::is_polynomial)
    }

    pub fn to_poly(&self) -> Option<PolyMatrix> {
        self.all_polynomial().then(|| self.map(|r| r.num().clone()))
    }

    /// Maximal total degree of the entries when they are all polynomial.
    pub fn polynomial_degree(&self) -> Option<u32> {
        self.to_poly().map(|m| m.max_degree().unwrap_or(0))
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape("sum of differently shaped matrices".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .par_iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != other.rows {
            return Err(Error::Shape("product of incompatible matrices".into()));
        }
        let nvars = self.data.first().map_or(0, RatFunc::nvars);
        let data = (0..self.rows * other.cols)
            .into_par_iter()
            .map(|idx| {
                let (i, j) = (idx / other.cols, idx % other.cols);
                (0..self.cols).fold(RatFunc::zero(nvars), |acc, k| {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        &acc + &(a * b)
                    }
                })
            })
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn rescale_vars(&self, factors: &[Q]) -> Self {
        self.map(|r| r.rescale_vars(factors))
    }
}

/// Adjugate and determinant of a square polynomial matrix.
#[derive(Clone, Debug)]
pub struct Adjugate {
    pub det: MultiPoly,
    pub adj: PolyMatrix,
}

/// Fraction-free Gauss-Jordan elimination on `[M | I]`.
///
/// After step k every entry is a (k+1)-minor of the augmented matrix, so
/// each division by the previous pivot is exact. At the end the left block is
/// `d I` with `d = ±det M` and the right block is `d M⁻¹`. Pivots are chosen
/// among nonzero candidates preferring constants, then fewest terms.
pub fn bareiss_adjugate(m: &PolyMatrix) -> Result<Adjugate> {
    let n = m.rows();
    if n != m.cols() {
        return Err(Error::Shape("adjugate of a non-square matrix".into()));
    }
    let nvars = m.data.first().map_or(0, MultiPoly::nvars);
    if n == 0 {
        return Ok(Adjugate {
            det: MultiPoly::one(nvars),
            adj: m.clone(),
        });
    }
    let mut rows: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend((0..n).map(|j| {
                if i == j {
                    MultiPoly::one(nvars)
                } else {
                    MultiPoly::zero(nvars)
                }
            }));
            r
        })
        .collect();
    let mut prev = MultiPoly::one(nvars);
    let mut negate = false;
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&i| !rows[i][k].is_zero())
            .min_by_key(|&i| (!rows[i][k].is_constant(), rows[i][k].len()))
            .ok_or(Error::Singular)?;
        if pivot != k {
            rows.swap(pivot, k);
            negate = !negate;
        }
        let pivot_row = rows[k].clone();
        let p = pivot_row[k].clone();
        rows.par_iter_mut()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .for_each(|(_, row)| {
                let factor = std::mem::replace(&mut row[k], MultiPoly::zero(nvars));
                for j in k + 1..2 * n {
                    let scaled = &p * &row[j];
                    let updated = if factor.is_zero() || pivot_row[j].is_zero() {
                        scaled
                    } else {
                        &scaled - &(&factor * &pivot_row[j])
                    };
                    row[j] = updated.div_exact(&prev).expect("Bareiss division is exact");
                }
            });
        prev = p;
    }
    let d = prev;
    let (det, adj_sign) = if negate { (-&d, true) } else { (d, false) };
    // M⁻¹ = R / d = (±R) / det.
    let adj = PolyMatrix::from_fn(n, n, |i, j| {
        let r = &rows[i][n + j];
        if adj_sign {
            -r
        } else {
            r.clone()
        }
    });
    Ok(Adjugate { det, adj })
}

/// Exact inverse over the fraction field.
#[derive(Clone, Debug)]
pub struct RatInverse {
    pub inverse: RatMatrix,
    pub det: MultiPoly,
    /// `det` is a nonzero constant, so every entry is polynomial.
    pub polynomial: bool,
    /// `det(0) = 0`: invertible only away from a hypersurface through the
    /// origin.
    pub singular_at_origin: bool,
}

pub fn rat_inverse(m: &PolyMatrix) -> Result<RatInverse> {
    let Adjugate { det, adj } = bareiss_adjugate(m)?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let inverse = Matrix {
        rows: adj.rows,
        cols: adj.cols,
        data: adj
            .data
            .par_iter()
            .map(|a| RatFunc::new(a.clone(), det.clone()).expect("nonzero det"))
            .collect(),
    };
    Ok(RatInverse {
        inverse,
        polynomial: det.is_constant(),
        singular_at_origin: det.constant_term() == Q::from_integer(0.into()),
        det,
    })
}

/// Inverse of an affine matrix `M = M₀ + L(q)` with `M₀` invertible and
/// `N = M₀⁻¹L` nilpotent, as the finite series `Σ_k (-N)^k M₀⁻¹`. Then
/// `det M = det M₀`. Returns `None` when the entries are not affine or `N`
/// is not nilpotent.
pub fn nilpotent_affine_inverse(m: &PolyMatrix) -> Result<Option<(PolyMatrix, Q)>> {
    let size = m.rows();
    if size != m.cols() {
        return Err(Error::Shape("inverse of a non-square matrix".into()));
    }
    if m.max_degree().unwrap_or(0) > 1 {
        return Ok(None);
    }
    let nvars = m.data.first().map_or(0, MultiPoly::nvars);
    let m0 = m.at_origin();
    let det0 = linalg::determinant(&m0);
    if det0.is_zero() {
        return Err(Error::Singular);
    }
    let m0_inv = PolyMatrix::constant(&linalg::inverse(&m0)?, nvars);
    let linear = m.add(&PolyMatrix::constant(&m0, nvars).map(|p| -p))?;
    let minus_n = m0_inv.mul(&linear)?.map(|p| -p);
    let mut term = PolyMatrix::identity(size, nvars);
    let mut sum = term.clone();
    for _ in 0..size {
        term = term.mul(&minus_n)?;
        if term.entries().all(MultiPoly::is_zero) {
            return Ok(Some((sum.mul(&m0_inv)?, det0)));
        }
        sum = sum.add(&term)?;
    }
    Ok(None)
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_determinant(m: &PolyMatrix) -> MultiPoly {
    fn rec(rows: &[Vec<MultiPoly>], nvars: usize) -> MultiPoly {
        match rows.len() {
            0 => MultiPoly::one(nvars),
            1 => rows[0][0].clone(),
            n => {
                let mut acc = MultiPoly::zero(nvars);
                for j in 0..n {
                    if rows[0][j].is_zero() {
                        continue;
                    }
                    let minor: Vec<Vec<MultiPoly>> = rows[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(c, _)| *c != j)
                                .map(|(_, x)| x.clone())
                                .collect()
                        })
                        .collect();
                    let term = &rows[0][j] * &rec(&minor, nvars);
                    acc = if j % 2 == 0 {
                        &acc + &term
                    } else {
                        &acc - &term
                    };
                }
                acc
            }
        }
    }
    let nvars = m.data.first().map_or(0, MultiPoly::nvars);
    rec(&m.to_rows(), nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i).unwrap()
    }

    fn c(n: usize, x: i64) -> MultiPoly {
        MultiPoly::constant(n, q(x))
    }

    #[test]
    fn unipotent_inverse() {
        let m =
            PolyMatrix::from_rows(vec![vec![c(1, 1), v(1, 0)], vec![c(1, 0), c(1, 1)]]).unwrap();
        let inv = rat_inverse(&m).unwrap();
        assert_eq!(inv.det, c(1, 1));
        assert!(inv.polynomial);
        let expected =
            PolyMatrix::from_rows(vec![vec![c(1, 1), -&v(1, 0)], vec![c(1, 0), c(1, 1)]]).unwrap();
        assert_eq!(inv.inverse.to_poly().unwrap(), expected);
    }

    #[test]
    fn singular_and_origin_flags() {
        let m =
            PolyMatrix::from_rows(vec![vec![v(1, 0), v(1, 0)], vec![v(1, 0), v(1, 0)]]).unwrap();
        assert!(matches!(rat_inverse(&m), Err(Error::Singular)));
        let m =
            PolyMatrix::from_rows(vec![vec![v(1, 0), c(1, 0)], vec![c(1, 0), c(1, 1)]]).unwrap();
        let inv = rat_inverse(&m).unwrap();
        assert!(inv.singular_at_origin && !inv.polynomial);
    }

    #[test]
    fn neumann_matches_bareiss() {
        let n = 2;
        let (x, y) = (v(n, 0), v(n, 1));
        let m = PolyMatrix::from_rows(vec![
            vec![c(n, 2), x.clone(), y.clone()],
            vec![c(n, 0), c(n, 1), &x + &y],
            vec![c(n, 0), c(n, 0), c(n, 3)],
        ])
        .unwrap();
        let (inv, det) = nilpotent_affine_inverse(&m).unwrap().unwrap();
        assert_eq!(det, q(6));
        let r = rat_inverse(&m).unwrap();
        assert_eq!(r.inverse.to_poly().unwrap(), inv);
        let generic =
            PolyMatrix::from_rows(vec![vec![c(n, 1), x.clone()], vec![y.clone(), c(n, 1)]])
                .unwrap();
        assert!(nilpotent_affine_inverse(&generic).unwrap().is_none());
    }

    #[test]
    fn adjugate_identity() {
        let n = 2;
        let (x, y) = (v(n, 0), v(n, 1));
        let m = PolyMatrix::from_rows(vec![
            vec![c(n, 0), x.clone(), c(n, 1)],
            vec![&x + &y, c(n, 2), y.clone()],
            vec![c(n, 1), &x * &y, c(n, 0)],
        ])
        .unwrap();
        let Adjugate { det, adj } = bareiss_adjugate(&m).unwrap();
        assert_eq!(det, cofactor_determinant(&m));
        let prod = m.mul(&adj).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expect = if i == j {
                    det.clone()
                } else {
                    MultiPoly::zero(n)
                };
                assert_eq!(prod.get(i, j), &expect);
            }
        }
    }
}
