//! Complements of the centralizer 𝔤^e and their dual bases.

use std::cmp::Reverse;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{gram_matrix, weight_decompose, BasisLabel, Form, LieElement};
use crate::linalg::{self, Span};
use crate::orbit::{classify, image_ad, ConormalType, GradedCentralizer, Sl2Triplet};
use crate::rational::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComplementKind {
    ImAdF,
    Conormal,
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    pub basis: Vec<LieElement>,
    /// ad h weights, present iff the span is ad h-invariant.
    pub weights: Option<Vec<i64>>,
    pub ad_h_invariant: bool,
    pub subalgebra: bool,
    pub kind: ComplementKind,
    /// The supplied vectors spanned an invariant space but were not weight
    /// vectors, so the basis was replaced by a graded one.
    pub rebased: bool,
}

impl Complement {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Dual bases with respect to the chosen form: `⟨Z̄_i, Z_j⟩ = δ_ij`,
/// `⟨Z̄_i, X_l⟩ = 0`, and symmetrically for `X̄`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualData {
    pub zbar: Vec<LieElement>,
    pub xbar: Vec<LieElement>,
    pub form: Form,
}

fn coords(vs: &[LieElement]) -> Vec<Vec<Q>> {
    vs.iter().map(LieElement::coords).collect()
}

fn leading_label(x: &LieElement) -> BasisLabel {
    *x.terms().next().expect("nonzero basis vector").0
}

fn sort_graded(basis: &mut [(i64, LieElement)]) {
    basis.sort_by_key(|(w, x)| (Reverse(*w), leading_label(x)));
}

/// Checks `𝔤 = 𝔤^e ⊕ span(vectors)`, naming the first dependency.
fn check_direct(z: &GradedCentralizer, vectors: &[LieElement]) -> Result<()> {
    let n = z.basis.first().map_or(2, LieElement::n);
    let expected = n * n - 1 - z.dim();
    if vectors.len() != expected {
        return Err(Error::WrongComplementSize {
            expected,
            found: vectors.len(),
        });
    }
    let all: Vec<Vec<Q>> = coords(&z.basis)
        .into_iter()
        .chain(coords(vectors))
        .collect();
    if let Some(i) = linalg::first_dependent(&all) {
        let j = i - z.dim();
        return Err(Error::RankDefect(format!(
            "X_{} = {} lies in the span of the centralizer and X_1..X_{}",
            j + 1,
            vectors[j],
            j
        )));
    }
    Ok(())
}

fn is_subalgebra(vectors: &[LieElement]) -> bool {
    let span = Span::new(&coords(vectors));
    (0..vectors.len()).all(|i| {
        (i + 1..vectors.len()).all(|j| {
            let b = vectors[i].bracket(&vectors[j]).expect("same n");
            span.contains(&b.coords())
        })
    })
}

/// Invariance test and, when possible, a graded basis of the same span.
fn graded_form(t: &Sl2Triplet, vectors: &[LieElement]) -> Option<(Vec<(i64, LieElement)>, bool)> {
    let diag = t.h_diagonal();
    let direct: Option<Vec<i64>> = vectors
        .iter()
        .map(|x| {
            x.weight(&diag)
                .filter(Q::is_integer)
                .map(|w| i64::try_from(w.to_integer()).expect("small"))
        })
        .collect();
    if let Some(ws) = direct {
        return Some((ws.into_iter().zip(vectors.iter().cloned()).collect(), false));
    }
    let span = Span::new(&coords(vectors));
    let invariant = vectors
        .iter()
        .all(|x| span.contains(&t.h.bracket(x).expect("same n").coords()));
    if !invariant {
        return None;
    }
    let blocks = weight_decompose(&t.h, vectors).ok()?;
    let mut out: Vec<(i64, LieElement)> = blocks
        .into_iter()
        .flat_map(|(w, b)| b.into_iter().map(move |x| (w, x)))
        .collect();
    sort_graded(&mut out);
    Some((out, true))
}

fn finish(
    z: &GradedCentralizer,
    graded: Vec<(i64, LieElement)>,
    kind: ComplementKind,
) -> Result<Complement> {
    let (weights, basis): (Vec<i64>, Vec<LieElement>) = graded.into_iter().unzip();
    check_direct(z, &basis)?;
    let subalgebra = is_subalgebra(&basis);
    Ok(Complement {
        basis,
        weights: Some(weights),
        ad_h_invariant: true,
        subalgebra,
        kind,
        rebased: false,
    })
}

/// `Im ad f`, ordered by decreasing weight.
pub fn im_ad_f(t: &Sl2Triplet, z: &GradedCentralizer) -> Result<Complement> {
    let image = image_ad(&t.f);
    let mut graded: Vec<(i64, LieElement)> = weight_decompose(&t.h, &image)?
        .into_iter()
        .flat_map(|(w, b)| b.into_iter().map(move |x| (w, x)))
        .collect();
    sort_graded(&mut graded);
    finish(z, graded, ComplementKind::ImAdF)
}

fn label_weight(label: BasisLabel, diag: &[Q]) -> i64 {
    match label {
        BasisLabel::OffDiag(i, j) => {
            i64::try_from((&diag[i - 1] - &diag[j - 1]).to_integer()).expect("small")
        }
        BasisLabel::Cartan(_) => 0,
    }
}

/// Subalgebra complement for partitions whose parts differ by at most one.
///
/// With the dominant h the indices split into consecutive blocks: for
/// `(p^r)` the blocks are `1..m` and `m+1..n` with `m = (p-1)r`; for
/// `(p^r, (p-1)^s)` they are `1..a`, `a+1..b`, `b+1..n` with `T = r+s`,
/// `a = (p-2)T + r`, `b = (p-1)T`. The complement is
/// `sl(1..a) ⊕ ã ⊕ (strictly block-lower part)`, where `ã` is a line in the
/// span of the Cartan elements `H_i` at the block boundaries.
pub fn conormal_complement(t: &Sl2Triplet, z: &GradedCentralizer) -> Result<Complement> {
    let p = &t.partition;
    let class = classify(p);
    let Some(family) = class.family_type else {
        return Err(Error::UnsupportedFamily(p.to_string()));
    };
    let n = p.n();
    let parts = p.parts();
    let big = parts[0];
    let r = parts.iter().filter(|&&x| x == big).count();
    let boundaries: Vec<usize> = match family {
        ConormalType::I => vec![(big - 1) * r],
        ConormalType::II => {
            let tt = parts.len();
            vec![(big - 2) * tt + r, (big - 1) * tt]
        }
    };
    let first = boundaries[0];
    let block = |i: usize| boundaries.iter().filter(|&&b| i > b).count();

    let diag = t.h_diagonal();
    let mut rest: Vec<(i64, LieElement)> = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let inside_first = i <= first && j <= first;
            let lower = block(i) > block(j);
            if inside_first || lower {
                let label = BasisLabel::OffDiag(i, j);
                rest.push((label_weight(label, &diag), LieElement::basis(n, label)));
            }
        }
    }
    for i in 1..first {
        rest.push((0, LieElement::cartan(n, i)));
    }

    let cartan_line = match family {
        ConormalType::I => LieElement::cartan(n, first),
        ConormalType::II => choose_cartan_line(t, z, &rest, &boundaries)?,
    };
    rest.push((0, cartan_line));
    sort_graded(&mut rest);
    let c = finish(z, rest, ComplementKind::Conormal)?;
    if !c.subalgebra {
        return Err(Error::Inconsistent(format!(
            "conormal complement of {p} is not a subalgebra"
        )));
    }
    Ok(c)
}

/// The line `ã` inside `𝔞 = ⟨H_a, H_b⟩`: the pairing-orthogonal complement of
/// the part of `𝔞` already reached by 𝔤^e and the other summands, falling
/// back to a boundary `H` if that line is isotropic.
fn choose_cartan_line(
    t: &Sl2Triplet,
    z: &GradedCentralizer,
    rest: &[(i64, LieElement)],
    boundaries: &[usize],
) -> Result<LieElement> {
    let n = t.n();
    let ha = LieElement::cartan(n, boundaries[0]);
    let hb = LieElement::cartan(n, boundaries[1]);
    let others: Vec<Vec<Q>> = coords(&z.basis)
        .into_iter()
        .chain(rest.iter().map(|(_, x)| x.coords()))
        .collect();
    // Columns: others, then H_a, H_b. Kernel vectors project to 𝔞 ∩ span(others).
    let mut cols = others.clone();
    cols.push(ha.coords());
    cols.push(hb.coords());
    let m = linalg::transpose(&cols);
    let k = cols.len();
    let meet: Vec<LieElement> = linalg::kernel(&m, k)
        .into_iter()
        .map(|v| &ha.scale(&v[k - 2]) + &hb.scale(&v[k - 1]))
        .filter(|x| !x.is_zero())
        .collect();
    let meet_basis = linalg::span_basis(&coords(&meet));
    if meet_basis.len() != 1 {
        return Err(Error::Inconsistent(format!(
            "expected a one-dimensional overlap with the boundary Cartan span, found {}",
            meet_basis.len()
        )));
    }
    let w = LieElement::from_coords(n, &meet_basis[0]);
    let candidate = &ha.scale(&w.trace_pairing(&hb)?) - &hb.scale(&w.trace_pairing(&ha)?);
    let reached = Span::new(&others);
    for v in [candidate, ha, hb] {
        if !v.is_zero() && !reached.contains(&v.coords()) {
            return Ok(v);
        }
    }
    Err(Error::Inconsistent(
        "no Cartan line completes the complement".into(),
    ))
}

/// Validates a user-supplied basis and analyses it.
pub fn custom_complement(
    t: &Sl2Triplet,
    z: &GradedCentralizer,
    vectors: Vec<LieElement>,
) -> Result<Complement> {
    for x in &vectors {
        if x.n() != t.n() {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: t.n(),
            });
        }
    }
    check_direct(z, &vectors)?;
    let subalgebra = is_subalgebra(&vectors);
    match graded_form(t, &vectors) {
        Some((graded, rebased)) => {
            let (weights, basis): (Vec<i64>, Vec<LieElement>) = graded.into_iter().unzip();
            Ok(Complement {
                basis,
                weights: Some(weights),
                ad_h_invariant: true,
                subalgebra,
                kind: ComplementKind::Custom,
                rebased,
            })
        }
        None => Ok(Complement {
            basis: vectors,
            weights: None,
            ad_h_invariant: false,
            subalgebra,
            kind: ComplementKind::Custom,
            rebased: false,
        }),
    }
}

/// Solves the Gram system of `(Z, X)` exactly.
pub fn dual_basis(z: &GradedCentralizer, c: &Complement, form: Form) -> Result<DualData> {
    let n = c.basis.first().or(z.basis.first()).map_or(2, LieElement::n);
    let b: Vec<Vec<Q>> = coords(&z.basis)
        .into_iter()
        .chain(coords(&c.basis))
        .collect();
    let p = gram_matrix(n, form);
    let g = linalg::mat_mul(&linalg::mat_mul(&b, &p), &linalg::transpose(&b));
    let ginv = linalg::inverse(&g)
        .map_err(|_| Error::Inconsistent("singular Gram matrix of (Z, X)".into()))?;
    let duals: Vec<LieElement> = linalg::mat_mul(&ginv, &b)
        .iter()
        .map(|row| LieElement::from_coords(n, row))
        .collect();
    let (zbar, xbar) = duals.split_at(z.dim());
    Ok(DualData {
        zbar: zbar.to_vec(),
        xbar: xbar.to_vec(),
        form,
    })
}

impl DualData {
    /// Number of violated identities among `⟨Z̄_i, Z_j⟩ = δ_ij`,
    /// `⟨Z̄_i, X_l⟩ = 0`, `⟨X̄_l, X_m⟩ = δ_lm`, `⟨X̄_l, Z_i⟩ = 0`.
    pub fn gram_violations(&self, z: &GradedCentralizer, c: &Complement) -> usize {
        let check = |bars: &[LieElement], same: &[LieElement], other: &[LieElement]| {
            let mut bad = 0;
            for (i, bar) in bars.iter().enumerate() {
                for (j, y) in same.iter().enumerate() {
                    let v = bar.pairing(y, self.form).expect("same n");
                    let want = if i == j {
                        Q::from_integer(1.into())
                    } else {
                        Q::zero()
                    };
                    bad += usize::from(v != want);
                }
                bad += other
                    .iter()
                    .filter(|y| !bar.pairing(y, self.form).expect("same n").is_zero())
                    .count();
            }
            bad
        };
        check(&self.zbar, &z.basis, &c.basis) + check(&self.xbar, &c.basis, &z.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{centralizer, triplet_from_partition, Partition};

    fn setup(s: &str) -> (Sl2Triplet, GradedCentralizer) {
        let t = triplet_from_partition(&s.parse::<Partition>().unwrap()).unwrap();
        let z = centralizer(&t);
        (t, z)
    }

    #[test]
    fn im_ad_f_subregular() {
        let (t, z) = setup("3,1");
        let c = im_ad_f(&t, &z).unwrap();
        assert_eq!(c.dim(), 10);
        assert!(c.ad_h_invariant);
        let w = c.weights.as_ref().unwrap();
        assert!(w.windows(2).all(|p| p[0] >= p[1]));
        let d = dual_basis(&z, &c, Form::Trace).unwrap();
        assert_eq!(d.gram_violations(&z, &c), 0);
        // 𝔫^⊥ = 𝔤^f
        for zb in &d.zbar {
            assert!(t.f.bracket(zb).unwrap().is_zero());
        }
    }

    #[test]
    fn conormal_type_one_and_two() {
        for s in ["2,2", "3,2", "4", "2,1", "2,2,1", "3,3", "3,3,2", "2,1,1"] {
            let (t, z) = setup(s);
            let c = conormal_complement(&t, &z).unwrap();
            assert!(c.subalgebra && c.ad_h_invariant, "{s}");
        }
        let (t, z) = setup("3,1");
        assert!(matches!(
            conormal_complement(&t, &z),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn custom_rejects_centralizer_vector() {
        let (t, z) = setup("3,1");
        let mut vs = im_ad_f(&t, &z).unwrap().basis;
        vs[0] = t.e.clone();
        match custom_complement(&t, &z, vs) {
            Err(Error::RankDefect(msg)) => assert!(msg.contains("X_1")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn custom_rebases_mixed_weights() {
        let (t, z) = setup("3,1");
        let mut vs = im_ad_f(&t, &z).unwrap().basis;
        let mixed = &vs[0] + &vs[vs.len() - 1];
        vs[0] = mixed;
        let c = custom_complement(&t, &z, vs).unwrap();
        assert!(c.ad_h_invariant && c.rebased);
    }

    #[test]
    fn killing_duals_are_rescaled() {
        let (t, z) = setup("3,1");
        let c = im_ad_f(&t, &z).unwrap();
        let tr = dual_basis(&z, &c, Form::Trace).unwrap();
        let k = dual_basis(&z, &c, Form::Killing).unwrap();
        let s = Form::Killing.scale(4);
        assert_eq!(k.zbar[0].scale(&s), tr.zbar[0]);
        assert_eq!(k.gram_violations(&z, &c), 0);
    }
}
