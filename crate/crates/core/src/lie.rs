//! Exact model of sl_n: elementary-matrix basis, bracket, invariant form and
//! ad h weight decompositions.
//!
//! Basis vectors are the off-diagonal elementary matrices `E(i,j)` and the
//! Cartan elements `H(i) = E(i,i) - E(i+1,i+1)`, indices 1-based. The root
//! vector of `ε_i - ε_j` is `E(i,j)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, DenseMatrix};
use crate::rational::{parse_q, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisLabel {
    OffDiag(usize, usize),
    Cartan(usize),
}

impl BasisLabel {
    pub fn is_valid(&self, n: usize) -> bool {
        match *self {
            BasisLabel::OffDiag(i, j) => i != j && (1..=n).contains(&i) && (1..=n).contains(&j),
            BasisLabel::Cartan(i) => i >= 1 && i < n,
        }
    }

    /// Position of the label in [`basis_labels`] order.
    pub fn index(&self, n: usize) -> usize {
        match *self {
            BasisLabel::OffDiag(i, j) => (i - 1) * (n - 1) + (j - 1) - usize::from(j > i),
            BasisLabel::Cartan(i) => n * (n - 1) + i - 1,
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::OffDiag(i, j) => write!(f, "E({i},{j})"),
            BasisLabel::Cartan(i) => write!(f, "H({i})"),
        }
    }
}

impl FromStr for BasisLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidLabel(s.to_string());
        let s2 = s.trim();
        let (kind, rest) = s2.split_at(1.min(s2.len()));
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let nums: Vec<usize> = inner
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (kind, nums.as_slice()) {
            ("E", &[i, j]) if i != j => Ok(BasisLabel::OffDiag(i, j)),
            ("H", &[i]) => Ok(BasisLabel::Cartan(i)),
            _ => Err(bad()),
        }
    }
}

/// All `n² - 1` labels in canonical order: off-diagonal labels
/// lexicographically, then `H(1)..H(n-1)`.
pub fn basis_labels(n: usize) -> Vec<BasisLabel> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            out.push(BasisLabel::OffDiag(i, j));
        }
    }
    out.extend((1..n).map(BasisLabel::Cartan));
    out
}

/// Normalization of the invariant symmetric form.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    /// `tr(XY)`.
    #[default]
    Trace,
    /// `2n tr(XY)`, the Killing form of sl_n.
    Killing,
}

impl Form {
    pub fn scale(self, n: usize) -> Q {
        match self {
            Form::Trace => Q::one(),
            Form::Killing => q(2 * n as i64),
        }
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trace" => Ok(Form::Trace),
            "killing" => Ok(Form::Killing),
            _ => Err(Error::Parse(format!("unknown form `{s}`"))),
        }
    }
}

/// The root `ε_i - ε_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    /// `β_{a,b} = α_a + … + α_b`.
    pub fn simple_range(a: usize, b: usize) -> Self {
        assert!(a <= b, "empty simple-root range");
        Root { i: a, j: b + 1 }
    }

    pub fn simple(a: usize) -> Self {
        Self::simple_range(a, a)
    }

    pub fn is_positive(&self) -> bool {
        self.i < self.j
    }

    pub fn negate(&self) -> Self {
        Root {
            i: self.j,
            j: self.i,
        }
    }

    /// `(a, b)` with `self = α_a + … + α_b`, for positive roots.
    pub fn simple_expansion(&self) -> Option<(usize, usize)> {
        self.is_positive().then(|| (self.i, self.j - 1))
    }

    pub fn vector(&self, n: usize) -> LieElement {
        LieElement::basis(n, BasisLabel::OffDiag(self.i, self.j))
    }

    /// Coroot `E(i,i) - E(j,j)`.
    pub fn coroot(&self, n: usize) -> LieElement {
        let (lo, hi, sign) = if self.i < self.j {
            (self.i, self.j, q(1))
        } else {
            (self.j, self.i, q(-1))
        };
        let mut out = LieElement::zero(n);
        for k in lo..hi {
            out.add_term(BasisLabel::Cartan(k), &sign);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    n: usize,
    coeffs: BTreeMap<BasisLabel, Q>,
}

impl LieElement {
    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "sl_n needs n >= 2");
        LieElement {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// A single basis vector. Panics on a label invalid for `n`.
    pub fn basis(n: usize, label: BasisLabel) -> Self {
        assert!(label.is_valid(n), "{label} is not a label of sl_{n}");
        let mut out = Self::zero(n);
        out.coeffs.insert(label, Q::one());
        out
    }

    pub fn elementary(n: usize, i: usize, j: usize) -> Self {
        Self::basis(n, BasisLabel::OffDiag(i, j))
    }

    pub fn cartan(n: usize, i: usize) -> Self {
        Self::basis(n, BasisLabel::Cartan(i))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (BasisLabel, Q)>,
    {
        let mut out = Self::zero(n);
        for (label, c) in terms {
            if !label.is_valid(n) {
                return Err(Error::InvalidLabel(format!("{label} for sl_{n}")));
            }
            out.add_term(label, &c);
        }
        Ok(out)
    }

    /// Diagonal matrix with the given traceless entries.
    pub fn diagonal(n: usize, entries: &[Q]) -> Result<Self> {
        if entries.len() != n {
            return Err(Error::Shape(format!(
                "{} diagonal entries for sl_{n}",
                entries.len()
            )));
        }
        let mut m = vec![vec![Q::zero(); n]; n];
        for (i, d) in entries.iter().enumerate() {
            m[i][i] = d.clone();
        }
        Self::from_matrix(&m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, &Q)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, label: BasisLabel) -> Q {
        self.coeffs.get(&label).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, label: BasisLabel, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(label).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&label);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn to_matrix(&self) -> DenseMatrix {
        let n = self.n;
        let mut m = vec![vec![Q::zero(); n]; n];
        for (label, c) in &self.coeffs {
            match *label {
                BasisLabel::OffDiag(i, j) => m[i - 1][j - 1] += c,
                BasisLabel::Cartan(i) => {
                    m[i - 1][i - 1] += c;
                    m[i][i] -= c;
                }
            }
        }
        m
    }

    pub fn from_matrix(m: &DenseMatrix) -> Result<Self> {
        let n = m.len();
        if n < 2 || m.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("expected a square matrix of size >= 2".into()));
        }
        let trace: Q = (0..n).map(|i| m[i][i].clone()).sum();
        if !trace.is_zero() {
            return Err(Error::NotTraceless);
        }
        let mut out = Self::zero(n);
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                if i != j && !x.is_zero() {
                    out.coeffs
                        .insert(BasisLabel::OffDiag(i + 1, j + 1), x.clone());
                }
            }
        }
        // diag(d) = Σ c_i H(i) with c_i = d_1 + … + d_i.
        let mut acc = Q::zero();
        for i in 1..n {
            acc += &m[i - 1][i - 1];
            if !acc.is_zero() {
                out.coeffs.insert(BasisLabel::Cartan(i), acc.clone());
            }
        }
        Ok(out)
    }

    /// Coordinates in [`basis_labels`] order.
    pub fn coords(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n * self.n - 1];
        for (label, c) in &self.coeffs {
            v[label.index(self.n)] = c.clone();
        }
        v
    }

    pub fn from_coords(n: usize, coords: &[Q]) -> Self {
        assert_eq!(coords.len(), n * n - 1);
        let mut out = Self::zero(n);
        for (label, c) in basis_labels(n).into_iter().zip(coords) {
            if !c.is_zero() {
                out.coeffs.insert(label, c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        LieElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(l, x)| (*l, x * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (l, c) in &other.coeffs {
            out.add_term(*l, c);
        }
        Ok(out)
    }

    /// `xy - yx`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let n = self.n;
        let a = self.to_matrix();
        let b = other.to_matrix();
        let mut c = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for k in (0..n).filter(|&k| !a[i][k].is_zero()) {
                for j in (0..n).filter(|&j| !b[k][j].is_zero()) {
                    c[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
        for i in 0..n {
            for k in (0..n).filter(|&k| !b[i][k].is_zero()) {
                for j in (0..n).filter(|&j| !a[k][j].is_zero()) {
                    c[i][j] -= &b[i][k] * &a[k][j];
                }
            }
        }
        Self::from_matrix(&c)
    }

    /// `tr(xy)`, computed on the sparse coefficients.
    pub fn trace_pairing(&self, other: &Self) -> Result<Q> {
        self.check_same(other)?;
        let mut acc = Q::zero();
        for (label, x) in &self.coeffs {
            match *label {
                BasisLabel::OffDiag(i, j) => {
                    if let Some(y) = other.coeffs.get(&BasisLabel::OffDiag(j, i)) {
                        acc += x * y;
                    }
                }
                BasisLabel::Cartan(i) => {
                    for (other_label, y) in other.coeffs.range(BasisLabel::Cartan(1)..) {
                        if let BasisLabel::Cartan(j) = *other_label {
                            match i.abs_diff(j) {
                                0 => acc += x * y * q(2),
                                1 => acc -= x * y,
                                _ => {}
                            }
                        }
                    }
                }
            }
        }
        Ok(acc)
    }

    pub fn pairing(&self, other: &Self, form: Form) -> Result<Q> {
        Ok(self.trace_pairing(other)? * form.scale(self.n))
    }

    pub fn is_diagonal(&self) -> bool {
        self.coeffs
            .keys()
            .all(|l| matches!(l, BasisLabel::Cartan(_)))
    }

    /// Diagonal entries of a Cartan element.
    pub fn diagonal_entries(&self) -> Result<Vec<Q>> {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal(self.to_string()));
        }
        let m = self.to_matrix();
        Ok((0..self.n).map(|i| m[i][i].clone()).collect())
    }

    /// The ad h eigenvalue of `self` if it is a weight vector for the
    /// diagonal element with entries `diag`. Zero has no weight.
    pub fn weight(&self, diag: &[Q]) -> Option<Q> {
        let mut weights = self.coeffs.keys().map(|l| label_weight(*l, diag));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.coeffs
                .iter()
                .map(|(l, c)| (l.to_string(), serde_json::Value::String(c.to_string())))
                .collect(),
        )
    }

    pub fn from_json(n: usize, value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("Lie element must be a JSON object".into()))?;
        let terms = obj
            .iter()
            .map(|(k, v)| {
                let label: BasisLabel = k.parse()?;
                let c = match v {
                    serde_json::Value::String(s) => parse_q(s)?,
                    serde_json::Value::Number(x) => parse_q(&x.to_string())?,
                    _ => return Err(Error::Parse(format!("bad coefficient for {k}"))),
                };
                Ok((label, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_terms(n, terms)
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (label, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs} ")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &LieElement {
    type Output = LieElement;

    fn add(self, rhs: &LieElement) -> LieElement {
        self.checked_add(rhs)
            .expect("adding elements of different sl_n")
    }
}

impl std::ops::Sub for &LieElement {
    type Output = LieElement;

    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &rhs.scale(&q(-1))
    }
}

impl std::ops::Neg for &LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        self.scale(&q(-1))
    }
}

fn label_weight(label: BasisLabel, diag: &[Q]) -> Q {
    match label {
        BasisLabel::OffDiag(i, j) => &diag[i - 1] - &diag[j - 1],
        BasisLabel::Cartan(_) => Q::zero(),
    }
}

fn to_integer_weight(w: &Q) -> Result<i64> {
    if !w.is_integer() {
        return Err(Error::NotGraded {
            vector: format!("non-integral weight {w}"),
        });
    }
    i64::try_from(w.to_integer()).map_err(|_| Error::NotGraded {
        vector: format!("weight {w}"),
    })
}

/// Splits `span(space)` into ad h eigenspaces. Each block basis is in reduced
/// echelon form with respect to the canonical label order.
pub fn weight_decompose(
    h: &LieElement,
    space: &[LieElement],
) -> Result<BTreeMap<i64, Vec<LieElement>>> {
    let diag = h.diagonal_entries()?;
    let n = h.n;
    for v in space {
        h.check_same(v)?;
    }
    let labels = basis_labels(n);
    let weights: Vec<i64> = labels
        .iter()
        .map(|l| to_integer_weight(&label_weight(*l, &diag)))
        .collect::<Result<_>>()?;

    let coords: Vec<Vec<Q>> = space.iter().map(LieElement::coords).collect();
    let basis = linalg::span_basis(&coords);
    let project = |v: &[Q], m: i64| -> Vec<Q> {
        v.iter()
            .zip(&weights)
            .map(|(x, &w)| if w == m { x.clone() } else { Q::zero() })
            .collect()
    };
    let mut present: Vec<i64> = Vec::new();
    for v in &basis {
        for (x, &w) in v.iter().zip(&weights) {
            if !x.is_zero() && !present.contains(&w) {
                present.push(w);
            }
        }
    }
    present.sort_unstable();

    let mut blocks = BTreeMap::new();
    let mut total = 0;
    for &m in &present {
        let projections: Vec<Vec<Q>> = basis.iter().map(|v| project(v, m)).collect();
        let block = linalg::span_basis(&projections);
        total += block.len();
        blocks.insert(m, block);
    }
    if total != basis.len() {
        let offender = space
            .iter()
            .zip(&coords)
            .find(|(_, c)| {
                present
                    .iter()
                    .any(|&m| linalg::express_in(&basis, &project(c, m)).is_none())
            })
            .map(|(v, _)| v.to_string())
            .unwrap_or_default();
        return Err(Error::NotGraded { vector: offender });
    }
    Ok(blocks
        .into_iter()
        .map(|(m, vs)| {
            (
                m,
                vs.iter().map(|c| LieElement::from_coords(n, c)).collect(),
            )
        })
        .collect())
}

/// Every basis vector of sl_n.
pub fn full_basis(n: usize) -> Vec<LieElement> {
    basis_labels(n)
        .into_iter()
        .map(|l| LieElement::basis(n, l))
        .collect()
}

/// Gram matrix of a form on the full label basis.
pub fn gram_matrix(n: usize, form: Form) -> DenseMatrix {
    let basis = full_basis(n);
    basis
        .iter()
        .map(|x| {
            basis
                .iter()
                .map(|y| x.pairing(y, form).expect("same n"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn e(n: usize, i: usize, j: usize) -> LieElement {
        LieElement::elementary(n, i, j)
    }

    fn h(n: usize, i: usize) -> LieElement {
        LieElement::cartan(n, i)
    }

    #[test]
    fn defining_sl2_relation() {
        assert_eq!(e(2, 1, 2).bracket(&e(2, 2, 1)).unwrap(), h(2, 1));
        assert_eq!(
            h(2, 1).bracket(&e(2, 1, 2)).unwrap(),
            e(2, 1, 2).scale(&q(2))
        );
    }

    #[test]
    fn sl3_simple_roots_bracket_to_highest() {
        let x1 = Root::simple(1).vector(3);
        let x2 = Root::simple(2).vector(3);
        assert_eq!(x1.bracket(&x2).unwrap(), e(3, 1, 3));
    }

    #[test]
    fn mismatched_dimensions() {
        assert_eq!(
            e(2, 1, 2).bracket(&e(3, 1, 2)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(e(2, 1, 2).trace_pairing(&e(3, 2, 1)).is_err());
    }

    #[test]
    fn pairing_values() {
        assert_eq!(e(2, 1, 2).trace_pairing(&e(2, 2, 1)).unwrap(), q(1));
        assert_eq!(h(2, 1).trace_pairing(&h(2, 1)).unwrap(), q(2));
        let z1 = &(&h(4, 1) + &h(4, 2).scale(&q(2))) - &h(4, 3);
        assert_eq!(h(4, 2).trace_pairing(&z1).unwrap(), q(4));
        assert_eq!(h(4, 2).pairing(&z1, Form::Killing).unwrap(), q(32));
    }

    #[test]
    fn pairing_matches_dense_trace() {
        let x = LieElement::from_terms(
            3,
            [
                (BasisLabel::Cartan(1), q(3)),
                (BasisLabel::Cartan(2), qf(-1, 2)),
                (BasisLabel::OffDiag(1, 3), q(2)),
            ],
        )
        .unwrap();
        let y = LieElement::from_terms(
            3,
            [
                (BasisLabel::Cartan(2), q(5)),
                (BasisLabel::Cartan(1), q(1)),
                (BasisLabel::OffDiag(3, 1), q(7)),
            ],
        )
        .unwrap();
        let prod = linalg::mat_mul(&x.to_matrix(), &y.to_matrix());
        let tr: Q = (0..3).map(|i| prod[i][i].clone()).sum();
        assert_eq!(x.trace_pairing(&y).unwrap(), tr);
    }

    #[test]
    fn labels_roundtrip_and_index() {
        for n in 2..6 {
            let labels = basis_labels(n);
            assert_eq!(labels.len(), n * n - 1);
            for (k, l) in labels.iter().enumerate() {
                assert_eq!(l.index(n), k);
                assert_eq!(l.to_string().parse::<BasisLabel>().unwrap(), *l);
            }
        }
        assert!("E(1,1)".parse::<BasisLabel>().is_err());
        assert!("X(1)".parse::<BasisLabel>().is_err());
        assert!(!BasisLabel::Cartan(3).is_valid(3));
    }

    #[test]
    fn matrix_roundtrip() {
        let m: DenseMatrix = vec![
            vec![q(1), q(2), q(0)],
            vec![q(0), q(3), q(0)],
            vec![qf(1, 2), q(0), q(-4)],
        ];
        assert_eq!(LieElement::from_matrix(&m).unwrap().to_matrix(), m);
        let mut bad = m.clone();
        bad[0][0] = q(5);
        assert_eq!(LieElement::from_matrix(&bad), Err(Error::NotTraceless));
    }

    #[test]
    fn json_roundtrip() {
        let x = &e(4, 1, 2).scale(&qf(3, 2)) - &h(4, 3);
        let v = x.to_json();
        assert_eq!(v["E(1,2)"], "3/2");
        assert_eq!(LieElement::from_json(4, &v).unwrap(), x);
        assert!(LieElement::from_json(2, &v).is_err());
    }

    #[test]
    fn roots() {
        let b = Root::simple_range(2, 3);
        assert_eq!(b, Root { i: 2, j: 4 });
        assert_eq!(b.simple_expansion(), Some((2, 3)));
        assert_eq!(b.negate().simple_expansion(), None);
        assert_eq!(b.coroot(4), &h(4, 2) + &h(4, 3));
        assert_eq!(b.negate().coroot(4), -&b.coroot(4));
    }

    #[test]
    fn decompose_subregular_sl4() {
        let hplus = LieElement::diagonal(4, &[q(2), q(0), q(0), q(-2)]).unwrap();
        let blocks = weight_decompose(&hplus, &full_basis(4)).unwrap();
        let dims: Vec<(i64, usize)> = blocks.iter().map(|(m, b)| (*m, b.len())).collect();
        assert_eq!(dims, vec![(-4, 1), (-2, 4), (0, 5), (2, 4), (4, 1)]);
    }

    #[test]
    fn decompose_zero_h() {
        let blocks = weight_decompose(&LieElement::zero(3), &full_basis(3)).unwrap();
        assert_eq!(blocks.len(), 1);
        assert_eq!(blocks[&0].len(), 8);
    }

    #[test]
    fn decompose_rejects_mixed_span() {
        let hplus = LieElement::diagonal(3, &[q(1), q(0), q(-1)]).unwrap();
        let mixed = &e(3, 1, 2) + &e(3, 2, 1);
        let err = weight_decompose(&hplus, &[mixed.clone(), e(3, 1, 3)]).unwrap_err();
        assert_eq!(
            err,
            Error::NotGraded {
                vector: mixed.to_string()
            }
        );
        assert!(matches!(
            weight_decompose(&e(3, 1, 2), &[]),
            Err(Error::NotDiagonal(_))
        ));
    }

    #[test]
    fn gram_is_nondegenerate() {
        for n in 2..=6 {
            let d = linalg::determinant(&gram_matrix(n, Form::Trace));
            assert!(!d.is_zero(), "degenerate trace form for n = {n}");
        }
    }
}
