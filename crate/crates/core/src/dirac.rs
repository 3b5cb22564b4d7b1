//! Constraint matrices on the slice `e + 𝔫^⊥` and the Dirac formula
//! `Λ = A + Dᵀ C⁻¹ D`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::complement::{Complement, DualData};
use crate::error::{Error, Result};
use crate::lie::{Form, LieElement};
use crate::linalg;
use crate::orbit::GradedCentralizer;
use crate::poly::{
    bareiss_adjugate, nilpotent_affine_inverse, MultiPoly, PolyMatrix, RatFunc, RatMatrix,
};
use crate::rational::Q;

/// `C_lm = ⟨x, [X_l, X_m]⟩`, `D_lj = ⟨x, [X_l, Z_j]⟩`, `A_ij = ⟨x, [Z_i, Z_j]⟩`
/// and `B = Dᵀ`, where `x = e + Σ q_s Z̄_s`.
#[derive(Clone, Debug)]
pub struct Assembled {
    pub a: PolyMatrix,
    pub b: PolyMatrix,
    pub c: PolyMatrix,
    pub d: PolyMatrix,
    pub z_weights: Vec<i64>,
    pub x_weights: Option<Vec<i64>>,
}

impl Assembled {
    pub fn nvars(&self) -> usize {
        self.a.rows()
    }
}

/// `⟨e + Σ q_s Z̄_s, w⟩` as an affine polynomial.
fn pair_point(e: &LieElement, zbar: &[LieElement], form: Form, w: &LieElement) -> MultiPoly {
    let k = zbar.len();
    let mut terms = Vec::with_capacity(k + 1);
    if !w.is_zero() {
        terms.push((vec![0u16; k], e.pairing(w, form).expect("same n")));
        for (s, zb) in zbar.iter().enumerate() {
            let mut exps = vec![0u16; k];
            exps[s] = 1;
            terms.push((exps, zb.pairing(w, form).expect("same n")));
        }
    }
    MultiPoly::from_terms(k, terms)
}

fn bracket_matrix(
    e: &LieElement,
    dual: &DualData,
    rows: &[LieElement],
    cols: &[LieElement],
) -> PolyMatrix {
    let entries: Vec<MultiPoly> = (0..rows.len() * cols.len())
        .into_par_iter()
        .map(|idx| {
            let (i, j) = (idx / cols.len(), idx % cols.len());
            let w = rows[i].bracket(&cols[j]).expect("same n");
            pair_point(e, &dual.zbar, dual.form, &w)
        })
        .collect();
    let mut it = entries.into_iter();
    PolyMatrix::from_fn(rows.len(), cols.len(), |_, _| it.next().expect("sized"))
}

pub fn assemble(
    e: &LieElement,
    z: &GradedCentralizer,
    c: &Complement,
    dual: &DualData,
) -> Result<Assembled> {
    if dual.zbar.len() != z.dim() || dual.xbar.len() != c.dim() {
        return Err(Error::Inconsistent(
            "dual data does not match the bases".into(),
        ));
    }
    let cm = bracket_matrix(e, dual, &c.basis, &c.basis);
    if linalg::determinant(&cm.at_origin()).is_zero() {
        return Err(Error::NotTransversal);
    }
    let d = bracket_matrix(e, dual, &c.basis, &z.basis);
    let a = bracket_matrix(e, dual, &z.basis, &z.basis);
    Ok(Assembled {
        b: d.transpose(),
        a,
        c: cm,
        d,
        z_weights: z.weights.clone(),
        x_weights: c.weights.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Degree {
    Polynomial(u32),
    NonPolynomial,
}

impl Degree {
    fn of(m: &RatMatrix) -> Self {
        m.polynomial_degree()
            .map_or(Degree::NonPolynomial, Degree::Polynomial)
    }

    pub fn value(self) -> Option<u32> {
        match self {
            Degree::Polynomial(d) => Some(d),
            Degree::NonPolynomial => None,
        }
    }
}

impl std::fmt::Display for Degree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Degree::Polynomial(d) => write!(f, "{d}"),
            Degree::NonPolynomial => write!(f, "non-polynomial"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InverseMethod {
    /// Finite Neumann series around `C(0)`.
    Nilpotent,
    Bareiss,
}

#[derive(Clone, Debug)]
pub struct TransverseStructure {
    pub matrices: Assembled,
    pub det_c: MultiPoly,
    /// `Dᵀ C⁻¹ D`
    pub lambda_prime: RatMatrix,
    /// `A + Dᵀ C⁻¹ D`
    pub lambda: RatMatrix,
    pub degree_prime: Degree,
    pub degree: Degree,
    pub polynomial: bool,
    pub quadratic: bool,
    /// `A = 0`, so `Λ = Λ′`.
    pub a_vanishes: bool,
    pub inverse_method: InverseMethod,
    pub grading: GradingReport,
}

pub fn transverse_tensor(m: Assembled) -> Result<TransverseStructure> {
    transverse_tensor_with(m, false)
}

/// As [`transverse_tensor`]; `force_bareiss` skips the Neumann-series path.
pub fn transverse_tensor_with(m: Assembled, force_bareiss: bool) -> Result<TransverseStructure> {
    let nvars = m.nvars();
    let fast = if force_bareiss {
        None
    } else {
        nilpotent_affine_inverse(&m.c)?
    };
    let (lambda_prime, lambda, det_c, method) = match fast {
        Some((inv, det0)) => {
            let p = m.b.mul(&inv)?.mul(&m.d)?;
            let lp = p.to_rat();
            let l = m.a.add(&p)?.to_rat();
            (
                lp,
                l,
                MultiPoly::constant(nvars, det0),
                InverseMethod::Nilpotent,
            )
        }
        None => {
            let adj = bareiss_adjugate(&m.c)?;
            if adj.det.is_zero() {
                return Err(Error::Singular);
            }
            let p = m.b.mul(&adj.adj)?.mul(&m.d)?;
            let full = m.a.map(|x| x * &adj.det).add(&p)?;
            let over = |num: &PolyMatrix| -> RatMatrix {
                let rows: Vec<Vec<RatFunc>> = (0..num.rows())
                    .into_par_iter()
                    .map(|i| {
                        num.row(i)
                            .iter()
                            .map(|x| RatFunc::new(x.clone(), adj.det.clone()).expect("nonzero det"))
                            .collect()
                    })
                    .collect();
                RatMatrix::from_rows(rows).expect("rectangular")
            };
            (over(&p), over(&full), adj.det, InverseMethod::Bareiss)
        }
    };
    let degree_prime = Degree::of(&lambda_prime);
    let degree = Degree::of(&lambda);
    let polynomial = degree != Degree::NonPolynomial;
    let grading = grading_report(&m, &det_c, &lambda);
    let a_vanishes = m.a.entries().all(MultiPoly::is_zero);
    Ok(TransverseStructure {
        a_vanishes,
        matrices: m,
        det_c,
        lambda_prime,
        lambda,
        degree_prime,
        degree,
        polynomial,
        quadratic: degree.value().is_some_and(|d| d <= 2),
        inverse_method: method,
        grading,
    })
}

impl TransverseStructure {
    /// `Λ(0) = 0`.
    pub fn vanishes_at_origin(&self) -> bool {
        let origin = vec![Q::zero(); self.matrices.nvars()];
        self.lambda
            .entries()
            .all(|r| r.eval(&origin).is_some_and(|v| v.is_zero()))
    }

    /// Antisymmetry of `A`, `Λ′` and `Λ`, and `A(0) = D(0) = 0`.
    pub fn shape_checks(&self) -> bool {
        let m = &self.matrices;
        m.a.is_antisymmetric()
            && self.lambda_prime.is_antisymmetric()
            && self.lambda.is_antisymmetric()
            && m.a
                .entries()
                .chain(m.d.entries())
                .all(|p| p.constant_term().is_zero())
    }

    pub fn denominators(&self) -> DenominatorReport {
        denominator_report(&self.lambda_prime)
    }
}

/// Quasi-homogeneity under `q_s ↦ t^{2+n_s} q_s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub applicable: bool,
    pub c_quasi_homogeneous: bool,
    pub det_constant: bool,
    pub lambda_weights: bool,
    pub violations: Vec<String>,
}

impl GradingReport {
    pub fn passed(&self) -> bool {
        self.applicable && self.c_quasi_homogeneous && self.det_constant && self.lambda_weights
    }
}

pub fn grading_report(m: &Assembled, det_c: &MultiPoly, lambda: &RatMatrix) -> GradingReport {
    let Some(nu) = &m.x_weights else {
        return GradingReport {
            applicable: false,
            c_quasi_homogeneous: false,
            det_constant: det_c.is_constant(),
            lambda_weights: false,
            violations: Vec::new(),
        };
    };
    let n = &m.z_weights;
    let w: Vec<i64> = n.iter().map(|x| 2 + x).collect();
    let mut violations = Vec::new();
    let mut c_ok = true;
    for l in 0..m.c.rows() {
        for k in 0..m.c.cols() {
            let p = m.c.get(l, k);
            if !p.is_zero() && !p.is_quasi_homogeneous(&w, 2 + nu[l] + nu[k]) {
                c_ok = false;
                violations.push(format!(
                    "C({},{}) = {p} is not of weight {}",
                    l + 1,
                    k + 1,
                    2 + nu[l] + nu[k]
                ));
            }
        }
    }
    let det_constant = det_c.is_constant() && !det_c.is_zero();
    if !det_constant {
        violations.push(format!("det C = {det_c} is not a nonzero constant"));
    }
    let mut l_ok = true;
    for i in 0..lambda.rows() {
        for j in 0..lambda.cols() {
            let r = lambda.get(i, j);
            let target = n[i] + n[j] + 2;
            let ok = match r.as_poly() {
                Some(p) => p.is_zero() || p.is_quasi_homogeneous(&w, target),
                None => false,
            };
            if !ok {
                l_ok = false;
                violations.push(format!(
                    "Λ({},{}) = {r} is not of weight {target}",
                    i + 1,
                    j + 1
                ));
            }
        }
    }
    GradingReport {
        applicable: true,
        c_quasi_homogeneous: c_ok,
        det_constant,
        lambda_weights: l_ok,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiVerdict {
    Pass,
    Fail {
        triple: (usize, usize, usize),
        residual: RatFunc,
    },
}

impl JacobiVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, JacobiVerdict::Pass)
    }
}

/// `Σ_l (L_il ∂_l L_jk + L_jl ∂_l L_ki + L_kl ∂_l L_ij) = 0` for all
/// `i < j < k`. Triples are 0-based in the verdict.
pub fn jacobi_check(l: &RatMatrix) -> Result<JacobiVerdict> {
    let k = l.rows();
    if k != l.cols() {
        return Err(Error::Shape("Jacobi check needs a square matrix".into()));
    }
    for i in 0..k {
        for j in i..k {
            if l.get(i, j) != &-l.get(j, i) {
                return Err(Error::NotAntisymmetric(i + 1, j + 1));
            }
        }
    }
    let nvars = l.entries().next().map_or(0, RatFunc::nvars);
    if nvars != k {
        return Err(Error::Shape(format!(
            "{k}x{k} bivector in {nvars} variables"
        )));
    }
    let triples: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|i| (i + 1..k).flat_map(move |j| (j + 1..k).map(move |m| (i, j, m))))
        .collect();
    let failure = if let Some(p) = l.to_poly() {
        let deriv: Vec<PolyMatrix> = (0..k)
            .map(|v| p.map(|x| x.derivative(v).expect("in range")))
            .collect();
        let d = |v: usize, a: usize, b: usize| deriv[v].get(a, b);
        triples.par_iter().find_map_first(|&(i, j, m)| {
            let mut acc = MultiPoly::zero(nvars);
            for v in 0..k {
                for (a, b, c) in [(i, j, m), (j, m, i), (m, i, j)] {
                    let x = p.get(a, v);
                    let y = d(v, b, c);
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
            }
            (!acc.is_zero()).then(|| ((i, j, m), RatFunc::from_poly(acc)))
        })
    } else {
        let deriv: Vec<RatMatrix> = (0..k)
            .map(|v| l.map(|x| x.derivative(v).expect("in range")))
            .collect();
        triples.par_iter().find_map_first(|&(i, j, m)| {
            let mut acc = RatFunc::zero(nvars);
            for (v, dv) in deriv.iter().enumerate() {
                for (a, b, c) in [(i, j, m), (j, m, i), (m, i, j)] {
                    let x = l.get(a, v);
                    let y = dv.get(b, c);
                    if !x.is_zero() && !y.is_zero() {
                        acc = &acc + &(x * y);
                    }
                }
            }
            (!acc.is_zero()).then_some(((i, j, m), acc))
        })
    };
    Ok(match failure {
        None => JacobiVerdict::Pass,
        Some((triple, residual)) => JacobiVerdict::Fail { triple, residual },
    })
}

/// The point `x(q) = e + Σ q_s Z̄_s` as an `n × n` matrix of linear
/// polynomials.
pub fn slice_point(e: &LieElement, zbar: &[LieElement]) -> PolyMatrix {
    let k = zbar.len();
    let em = e.to_matrix();
    let zm: Vec<_> = zbar.iter().map(LieElement::to_matrix).collect();
    PolyMatrix::from_fn(e.n(), e.n(), |a, b| {
        let terms = zm
            .iter()
            .enumerate()
            .filter(|(_, z)| !z[a][b].is_zero())
            .map(|(s, z)| {
                let mut exps = vec![0u16; k];
                exps[s] = 1;
                (exps, z[a][b].clone())
            });
        &MultiPoly::from_terms(k, terms) + &MultiPoly::constant(k, em[a][b].clone())
    })
}

/// `tr x^m` for `2 <= m <= n`: invariant functions restricted to the slice,
/// hence Casimirs of the transverse structure.
pub fn trace_invariants(x: &PolyMatrix) -> Result<Vec<MultiPoly>> {
    let n = x.rows();
    let nvars = x.entries().next().map_or(0, MultiPoly::nvars);
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    let mut pow = x.clone();
    for _ in 2..=n {
        pow = pow.mul(x)?;
        out.push((0..n).fold(MultiPoly::zero(nvars), |acc, i| &acc + pow.get(i, i)));
    }
    Ok(out)
}

/// A row of `Λ · ∇f` that does not vanish. `power` is the exponent `m` in
/// `f = tr x^m`; `row` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirFailure {
    pub power: usize,
    pub row: usize,
    pub residual: RatFunc,
}

/// Checks `Σ_j Λ_ij ∂_j f = 0` for each `f = tr x^m`.
pub fn casimir_check(l: &RatMatrix, x: &PolyMatrix) -> Result<Option<CasimirFailure>> {
    let k = l.rows();
    let fs = trace_invariants(x)?;
    if let Some(f) = fs.first() {
        if f.nvars() != k || l.cols() != k {
            return Err(Error::Shape(format!(
                "{k}x{} bivector, {} slice coordinates",
                l.cols(),
                f.nvars()
            )));
        }
    }
    let cases: Vec<(usize, usize)> = (0..fs.len())
        .flat_map(|m| (0..k).map(move |i| (m, i)))
        .collect();
    let grads: Vec<Vec<RatFunc>> = fs
        .iter()
        .map(|f| {
            (0..k)
                .map(|v| RatFunc::from_poly(f.derivative(v).expect("in range")))
                .collect()
        })
        .collect::<Vec<_>>();
    Ok(cases.par_iter().find_map_first(|&(m, i)| {
        let mut acc = RatFunc::zero(k);
        for (j, g) in grads[m].iter().enumerate() {
            if !g.is_zero() && !l.get(i, j).is_zero() {
                acc = &acc + &(l.get(i, j) * g);
            }
        }
        (!acc.is_zero()).then(|| CasimirFailure {
            power: m + 2,
            row: i,
            residual: acc,
        })
    }))
}

/// Denominators of the non-polynomial entries, written over a pairwise
/// coprime, squarefree family of factors obtained by gcd splitting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenominatorReport {
    pub factors: Vec<MultiPoly>,
    /// `(row, col)` (1-based) to exponents of `factors`.
    pub entries: BTreeMap<(usize, usize), Vec<u32>>,
}

impl DenominatorReport {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every denominator is a power of the single factor `f`.
    pub fn all_powers_of(&self, f: &MultiPoly) -> bool {
        let f = f.monic();
        self.factors.len() == 1 && self.factors[0] == f
    }
}

fn split_once(pool: &mut Vec<MultiPoly>) -> bool {
    for idx in 0..pool.len() {
        let a = pool[idx].clone();
        for v in 0..a.nvars() {
            if a.degree_in(v) < 2 {
                continue;
            }
            let g = a.gcd(&a.derivative(v).expect("in range"));
            if !g.is_constant() {
                pool[idx] = a.div_exact(&g).expect("gcd divides");
                pool.push(g);
                return true;
            }
        }
        for jdx in idx + 1..pool.len() {
            let b = pool[jdx].clone();
            let g = a.gcd(&b);
            if !g.is_constant() && (g != a.monic() || g != b.monic()) {
                pool[idx] = a.div_exact(&g).expect("gcd divides");
                pool[jdx] = b.div_exact(&g).expect("gcd divides");
                pool.push(g);
                return true;
            }
            if !g.is_constant() {
                // a and b coincide up to a scalar.
                pool.remove(jdx);
                return true;
            }
        }
    }
    false
}

pub fn denominator_report(m: &RatMatrix) -> DenominatorReport {
    let mut dens = BTreeMap::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let r = m.get(i, j);
            if !r.is_polynomial() {
                dens.insert((i + 1, j + 1), r.den().clone());
            }
        }
    }
    let mut pool: Vec<MultiPoly> = dens.values().cloned().collect();
    pool.dedup();
    loop {
        pool.retain(|p| !p.is_constant());
        if !split_once(&mut pool) {
            break;
        }
    }
    let mut factors: Vec<MultiPoly> = pool.iter().map(MultiPoly::monic).collect();
    factors.sort_by_key(MultiPoly::to_string);
    factors.dedup();
    let entries = dens
        .into_iter()
        .map(|(pos, mut d)| {
            let exps = factors
                .iter()
                .map(|f| {
                    let mut e = 0;
                    while !d.is_constant() {
                        match d.div_exact(f) {
                            Some(qt) => d = qt,
                            None => break,
                        }
                        e += 1;
                    }
                    e
                })
                .collect();
            (pos, exps)
        })
        .collect();
    DenominatorReport { factors, entries }
}
