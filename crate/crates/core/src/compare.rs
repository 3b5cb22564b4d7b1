//! Comparison against hand-computed matrices that use a differently
//! normalized dual basis `Z̄′_s = c_s Z̄_s`. A matrix `M(q)` then appears as
//! `M(c_1 q_1, …, c_k q_k)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{Form, LieElement};
use crate::poly::{RatFunc, RatMatrix};
use crate::rational::{nth_root, Q};

/// `Π c_s^{exps_s} = ratio`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Equation {
    exps: Vec<u16>,
    ratio: Q,
}

fn equations(ours: &RatFunc, theirs: &RatFunc) -> Vec<Equation> {
    let (Some(a), Some(b)) = (ours.as_poly(), theirs.as_poly()) else {
        return Vec::new();
    };
    a.terms()
        .iter()
        .filter_map(|(e, x)| {
            let y = b.coeff(e);
            (!y.is_zero() && !e.iter().all(|&k| k == 0)).then(|| Equation {
                exps: e.clone(),
                ratio: y / x,
            })
        })
        .collect()
}

/// Result of [`align_scaling`]: the factors and how many monomial equations
/// they satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Scaling {
    #[serde(serialize_with = "crate::report::ser_q_vec")]
    pub factors: Vec<Q>,
    pub satisfied: usize,
    pub equations: usize,
}

fn magnitude_votes(eqs: &[Equation], known: &[Option<Q>]) -> BTreeMap<usize, HashMap<Q, usize>> {
    let mut votes: BTreeMap<usize, HashMap<Q, usize>> = BTreeMap::new();
    for eq in eqs {
        let unknown: Vec<usize> = (0..known.len())
            .filter(|&s| eq.exps[s] > 0 && known[s].is_none())
            .collect();
        if unknown.len() != 1 {
            continue;
        }
        let s = unknown[0];
        let mut rest = eq.ratio.abs();
        for (t, k) in known.iter().enumerate() {
            if let Some(c) = k {
                if eq.exps[t] > 0 {
                    rest /= num_traits::pow(c.clone(), usize::from(eq.exps[t]));
                }
            }
        }
        if let Some(root) = nth_root(&rest, u32::from(eq.exps[s])) {
            *votes.entry(s).or_default().entry(root).or_default() += 1;
        }
    }
    votes
}

fn satisfied(eqs: &[Equation], c: &[Q]) -> usize {
    eqs.iter()
        .filter(|eq| {
            let v = eq.exps.iter().zip(c).fold(Q::one(), |acc, (&k, x)| {
                acc * num_traits::pow(x.clone(), usize::from(k))
            });
            v == eq.ratio
        })
        .count()
}

/// Solves for `c` such that `ours(c ⊙ q) = theirs(q)` on polynomial entries.
///
/// Magnitudes are propagated from equations with a single unknown, taking the
/// most supported value at each step; signs are then chosen exhaustively to
/// satisfy the largest number of equations. Individual inconsistent entries
/// therefore do not prevent alignment; they show up in the comparison.
pub fn align_scaling(pairs: &[(&RatFunc, &RatFunc)], nvars: usize) -> Scaling {
    let eqs: Vec<Equation> = pairs.iter().flat_map(|(a, b)| equations(a, b)).collect();
    let mut known: Vec<Option<Q>> = vec![None; nvars];
    loop {
        let votes = magnitude_votes(&eqs, &known);
        let best = votes
            .iter()
            .flat_map(|(&s, vs)| vs.iter().map(move |(v, &n)| (n, s, v.clone())))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match best {
            Some((_, s, v)) => known[s] = Some(v),
            None => break,
        }
    }
    let magnitudes: Vec<Q> = known
        .into_iter()
        .map(|k| k.unwrap_or_else(Q::one))
        .collect();
    let mut best = (0, magnitudes.clone());
    if nvars <= 16 {
        for mask in 0u32..(1 << nvars) {
            let c: Vec<Q> = magnitudes
                .iter()
                .enumerate()
                .map(|(s, m)| {
                    if mask >> s & 1 == 1 {
                        -m.clone()
                    } else {
                        m.clone()
                    }
                })
                .collect();
            let n = satisfied(&eqs, &c);
            if n > best.0 {
                best = (n, c);
            }
        }
    } else {
        best.0 = satisfied(&eqs, &magnitudes);
    }
    Scaling {
        factors: best.1,
        satisfied: best.0,
        equations: eqs.len(),
    }
}

/// `c_s = ⟨Z̄′_s, Z_s⟩`, after checking that each `Z̄′_s` is a multiple of
/// the strict dual `Z̄_s`. Returns the indices (1-based) that are not.
pub fn dual_ratio_scaling(
    reference: &[LieElement],
    strict: &[LieElement],
    z: &[LieElement],
    form: Form,
) -> Result<(Vec<Q>, Vec<usize>)> {
    if reference.len() != strict.len() || z.len() != strict.len() {
        return Err(Error::Shape(
            "reference dual basis has the wrong length".into(),
        ));
    }
    let mut factors = Vec::with_capacity(z.len());
    let mut off = Vec::new();
    for (s, ((r, zb), zz)) in reference.iter().zip(strict).zip(z).enumerate() {
        let c = r.pairing(zz, form)?;
        if c.is_zero() || &zb.scale(&c) != r {
            off.push(s + 1);
        }
        factors.push(if c.is_zero() { Q::one() } else { c });
    }
    Ok((factors, off))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub matrix: String,
    /// 1-based.
    pub row: usize,
    pub col: usize,
    pub computed: RatFunc,
    pub expected: RatFunc,
    /// The displayed matrix is not antisymmetric here and the mirrored entry
    /// agrees with the computation.
    pub display_inconsistent: bool,
}

/// Entrywise comparison of `ours(c ⊙ q)` with `expected`.
pub fn compare_matrix(
    name: &str,
    ours: &RatMatrix,
    expected: &RatMatrix,
    c: &[Q],
    antisymmetric: bool,
) -> Result<Vec<EntryMismatch>> {
    if (ours.rows(), ours.cols()) != (expected.rows(), expected.cols()) {
        return Err(Error::Shape(format!(
            "{name}: computed {}x{}, expected {}x{}",
            ours.rows(),
            ours.cols(),
            expected.rows(),
            expected.cols()
        )));
    }
    let scaled = ours.rescale_vars(c);
    let mut out = Vec::new();
    for i in 0..ours.rows() {
        for j in 0..ours.cols() {
            let (a, b) = (scaled.get(i, j), expected.get(i, j));
            if a.cross_eq(b) {
                continue;
            }
            let display_inconsistent = antisymmetric
                && b != &-expected.get(j, i)
                && scaled.get(j, i).cross_eq(expected.get(j, i));
            out.push(EntryMismatch {
                matrix: name.to_string(),
                row: i + 1,
                col: j + 1,
                computed: a.clone(),
                expected: b.clone(),
                display_inconsistent,
            });
        }
    }
    Ok(out)
}
