//! Dense exact linear algebra over the rationals: row reduction, kernels,
//! spans and inverses. Matrices are small (at most dim sl_n squared), so rows
//! are plain `Vec<Q>`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Q;

pub type DenseMatrix = Vec<Vec<Q>>;

/// Reduces `m` to reduced row echelon form in place and returns the pivot
/// columns. Zero rows are moved to the bottom.
pub fn rref(m: &mut DenseMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        if !inv.is_one() {
            for x in m[r][c..].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &DenseMatrix) -> usize {
    let mut m = m.clone();
    rref(&mut m).len()
}

/// Basis of `{x : m x = 0}`, one vector per free column, in column order.
pub fn kernel(m: &DenseMatrix, cols: usize) -> Vec<Vec<Q>> {
    let mut r = m.clone();
    let pivots = rref(&mut r);
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Q::zero(); cols];
        v[free] = Q::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[row][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Reduced echelon basis of the row span of `vectors`.
pub fn span_basis(vectors: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut m = vectors.to_vec();
    let k = rref(&mut m).len();
    m.truncate(k);
    m
}

/// Index of the first vector that is a linear combination of its predecessors.
pub fn first_dependent(vectors: &[Vec<Q>]) -> Option<usize> {
    let mut acc: Vec<Vec<Q>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        acc.push(v.clone());
        if rank(&acc) < acc.len() {
            return Some(i);
        }
    }
    None
}

/// Coefficients expressing `v` in terms of `basis` (rows), if `v` lies in
/// their span. `basis` must be linearly independent.
pub fn express_in(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let k = basis.len();
    let dim = v.len();
    // Columns are basis vectors, augmented by v.
    let mut m: DenseMatrix = (0..dim)
        .map(|r| {
            let mut row: Vec<Q> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(v[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = m[row][k].clone();
    }
    Some(x)
}

/// Row-reduced spanning set supporting fast membership tests.
#[derive(Clone, Debug)]
pub struct Span {
    rows: DenseMatrix,
    pivots: Vec<usize>,
}

impl Span {
    pub fn new(vectors: &[Vec<Q>]) -> Self {
        let mut rows = vectors.to_vec();
        let pivots = rref(&mut rows);
        rows.truncate(pivots.len());
        Span { rows, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut v = v.to_vec();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }
}

pub fn identity(n: usize) -> DenseMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

pub fn inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::Shape("inverse of a non-square matrix".into()));
    }
    let mut aug: DenseMatrix = m
        .iter()
        .zip(identity(n))
        .map(|(r, id)| r.iter().cloned().chain(id).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(m: &DenseMatrix) -> Q {
    let n = m.len();
    let mut a = m.clone();
    let mut det = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

pub fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner)
                        .filter(|&k| !row[k].is_zero() && !b[k][j].is_zero())
                        .map(|k| &row[k] * &b[k][j])
                        .fold(Q::zero(), |acc, x| acc + x)
                })
                .collect()
        })
        .collect()
}

pub fn transpose(m: &DenseMatrix) -> DenseMatrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_one() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let prod = mat_mul(&a, &transpose(&vec![v.clone()]));
            assert!(prod.iter().all(|r| r[0].is_zero()));
        }
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mat_mul(&a, &inv), identity(2));
        assert_eq!(determinant(&a), q(1));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), q(-1));
    }

    #[test]
    fn express_and_dependency() {
        let basis = m(&[&[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(
            express_in(&basis, &[q(2), q(3), q(5)]),
            Some(vec![q(2), q(3)])
        );
        assert_eq!(express_in(&basis, &[q(0), q(0), q(1)]), None);
        let vs = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(first_dependent(&vs), Some(2));
    }
}
