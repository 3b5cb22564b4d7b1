//! Invariant suites and fixture comparisons, as used by `ptransverse check`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::compare::{align_scaling, compare_matrix, dual_ratio_scaling, EntryMismatch, Scaling};
use crate::complement::ComplementKind;
use crate::dirac::{casimir_check, jacobi_check, slice_point, Degree, DenominatorReport};
use crate::engine::{run, Run};
use crate::error::{Error, Result};
use crate::fixtures::{parse_matrix, Builtin, ComplementFile, ComplementSpec, BUILTINS};
use crate::lie::{full_basis, Form, LieElement};
use crate::orbit::{characteristic_and_height, classify, grading_dims, image_ad, Partition};
use crate::poly::{parse_ratfunc, RatFunc, RatMatrix};
use crate::rational::Q;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckResult {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            detail: None,
        }
    }

    fn with(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed,
            detail: Some(detail.into()),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    fn from_results(suite: &str, results: Vec<CheckResult>) -> Self {
        let passed = results.iter().filter(|r| r.passed).count();
        SuiteReport {
            suite: suite.to_string(),
            failed: results.len() - passed,
            passed,
            results,
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

/// Outcome of reproducing one shipped or user-supplied example.
#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub name: String,
    pub run: Run,
    pub scaling: Scaling,
    /// Factors read off the hand-normalized dual basis, with the indices of
    /// vectors that are not multiples of the strict dual.
    pub dual_scaling: Option<(Vec<Q>, Vec<usize>)>,
    /// Scaling used for the comparison.
    pub factors: Vec<Q>,
    pub compared: BTreeMap<String, usize>,
    pub mismatches: Vec<EntryMismatch>,
    pub named_keys: Vec<(usize, usize)>,
    pub named_mismatches: Vec<(usize, usize)>,
    pub expected_degree: Option<Degree>,
    pub jacobi: bool,
    /// Jacobi identity and the `tr x^m` Casimirs for our tensor.
    pub casimirs: bool,
    /// The same two tests applied to the displayed `Λ′` completed by our
    /// `A`, when the display is antisymmetric.
    pub display_poisson: Option<DisplayVerdict>,
    pub denominators: DenominatorReport,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DisplayVerdict {
    pub jacobi: bool,
    pub casimirs: bool,
}

impl DisplayVerdict {
    pub fn poisson(&self) -> bool {
        self.jacobi && self.casimirs
    }
}

/// The displayed entries are brackets of `z_i = c_i q_i`, so the bivector in
/// the displayed coordinates `q` is `(A(c ⊙ q) + Λ′_shown(q))_ij / (c_i c_j)`,
/// on the slice `e + Σ q_s c_s Z̄_s`.
fn display_verdict(r: &Run, shown: &RatMatrix, c: &[Q]) -> Result<Option<DisplayVerdict>> {
    if !shown.is_antisymmetric() {
        return Ok(None);
    }
    let k = c.len();
    let full = r.structure.matrices.a.to_rat().rescale_vars(c).add(shown)?;
    let full = RatMatrix::from_fn(k, k, |i, j| {
        full.get(i, j) * &RatFunc::constant(k, (&c[i] * &c[j]).recip())
    });
    let zbar: Vec<LieElement> = r.dual.zbar.iter().zip(c).map(|(z, s)| z.scale(s)).collect();
    let x = slice_point(&r.triplet.e, &zbar);
    Ok(Some(DisplayVerdict {
        jacobi: jacobi_check(&full)?.passed(),
        casimirs: casimir_check(&full, &x)?.is_none(),
    }))
}

impl FixtureOutcome {
    /// Mismatches not explained by an internally inconsistent display.
    pub fn unexplained(&self) -> Vec<&EntryMismatch> {
        self.mismatches
            .iter()
            .filter(|m| !m.display_inconsistent)
            .collect()
    }

    pub fn degree_matches(&self) -> bool {
        self.expected_degree
            .is_none_or(|d| d == self.run.structure.degree_prime)
    }

    pub fn scalings_agree(&self) -> bool {
        match &self.dual_scaling {
            Some((f, off)) if off.is_empty() => f == &self.scaling.factors,
            _ => true,
        }
    }

    pub fn reproduced(&self) -> bool {
        self.unexplained().is_empty()
            && self.named_mismatches.is_empty()
            && self.degree_matches()
            && self.jacobi
            && self.casimirs
            && self.scalings_agree()
    }

    pub fn mismatches_in(&self, matrix: &str) -> Vec<&EntryMismatch> {
        self.mismatches
            .iter()
            .filter(|m| m.matrix == matrix)
            .collect()
    }

    /// Our entry `(i, j)` (1-based) of `Λ′` in the comparison coordinates.
    pub fn scaled_lambda_prime(&self, i: usize, j: usize) -> RatFunc {
        self.run
            .structure
            .lambda_prime
            .get(i - 1, j - 1)
            .rescale_vars(&self.factors)
    }
}

pub fn run_fixture(f: &ComplementFile) -> Result<FixtureOutcome> {
    let partition = f
        .partition
        .clone()
        .ok_or_else(|| Error::Parse(format!("{}: fixture needs a partition", f.name)))?;
    let form = Form::Trace;
    let r = run(&partition, &f.complement, f.centralizer.clone(), form)?;
    let k = r.centralizer.dim();
    let ts = &r.structure;
    let to_rat = |m: &crate::poly::PolyMatrix| m.to_rat();

    let mut targets: Vec<(&str, RatMatrix, RatMatrix, bool)> = Vec::new();
    if let Some(c) = &f.expected.c {
        targets.push(("C", to_rat(&ts.matrices.c), parse_matrix(c, k)?, true));
    }
    if let Some(d) = &f.expected.d {
        targets.push(("D", to_rat(&ts.matrices.d), parse_matrix(d, k)?, false));
    }
    if let Some(l) = &f.expected.lambda_prime {
        targets.push((
            "lambda_prime",
            ts.lambda_prime.clone(),
            parse_matrix(l, k)?,
            true,
        ));
    }
    let named: Vec<((usize, usize), RatFunc)> = f
        .expected
        .named
        .iter()
        .map(|(&(i, j), s)| Ok(((i, j), parse_ratfunc(s, k)?)))
        .collect::<Result<_>>()?;

    let mut pairs: Vec<(&RatFunc, &RatFunc)> = Vec::new();
    for (_, ours, theirs, _) in &targets {
        pairs.extend(ours.entries().zip(theirs.entries()));
    }
    for ((i, j), e) in &named {
        if *i == 0 || *j == 0 || *i > k || *j > k {
            return Err(Error::Parse(format!(
                "{}: bracket ({i},{j}) out of range",
                f.name
            )));
        }
        pairs.push((ts.lambda_prime.get(i - 1, j - 1), e));
    }
    let scaling = align_scaling(&pairs, k);
    let dual_scaling = match &f.reference_dual {
        Some(refs) => Some(dual_ratio_scaling(
            refs,
            &r.dual.zbar,
            &r.centralizer.basis,
            form,
        )?),
        None => None,
    };
    let factors = match &dual_scaling {
        Some((fs, off)) if off.is_empty() => fs.clone(),
        _ => scaling.factors.clone(),
    };

    let mut mismatches = Vec::new();
    let mut compared = BTreeMap::new();
    for (name, ours, theirs, anti) in &targets {
        mismatches.extend(compare_matrix(name, ours, theirs, &factors, *anti)?);
        compared.insert(name.to_string(), ours.rows() * ours.cols());
    }
    let named_mismatches = named
        .iter()
        .filter(|((i, j), e)| {
            !ts.lambda_prime
                .get(i - 1, j - 1)
                .rescale_vars(&factors)
                .cross_eq(e)
        })
        .map(|(p, _)| *p)
        .collect();
    if !named.is_empty() {
        compared.insert("named_brackets".into(), named.len());
    }
    let jacobi = jacobi_check(&ts.lambda)?.passed();
    let casimirs = casimir_check(&ts.lambda, &slice_point(&r.triplet.e, &r.dual.zbar))?.is_none();
    let display_poisson = match targets.iter().find(|t| t.0 == "lambda_prime") {
        Some((_, _, shown, _)) => display_verdict(&r, shown, &factors)?,
        None => None,
    };
    let denominators = ts.denominators();
    Ok(FixtureOutcome {
        name: f.name.clone(),
        scaling,
        dual_scaling,
        factors,
        compared,
        mismatches,
        named_keys: named.iter().map(|(p, _)| *p).collect(),
        named_mismatches,
        expected_degree: f.expected.degree,
        jacobi,
        casimirs,
        display_poisson,
        denominators,
        run: r,
    })
}

fn fixture_results(b: &Builtin) -> Vec<CheckResult> {
    let f = match ComplementFile::parse(b.name, b.text, None) {
        Ok(f) => f,
        Err(e) => {
            return vec![CheckResult::with(
                format!("{}: load", b.name),
                false,
                e.to_string(),
            )]
        }
    };
    let o = match run_fixture(&f) {
        Ok(o) => o,
        Err(e) => {
            return vec![CheckResult::with(
                format!("{}: run", b.name),
                false,
                e.to_string(),
            )]
        }
    };
    let mut out = Vec::new();
    for (matrix, count) in &o.compared {
        let (bad, excused): (Vec<&EntryMismatch>, Vec<&EntryMismatch>) = o
            .mismatches
            .iter()
            .filter(|m| &m.matrix == matrix)
            .partition(|m| !m.display_inconsistent);
        let passed = if matrix == "named_brackets" {
            o.named_mismatches.is_empty()
        } else {
            bad.is_empty()
        };
        let mut detail = format!("{count} entries compared");
        if matrix == "named_brackets" {
            let ok: Vec<String> = o
                .named_keys
                .iter()
                .filter(|p| !o.named_mismatches.contains(p))
                .map(|(i, j)| format!("{{z{i},z{j}}}"))
                .collect();
            detail.push_str(&format!(", {} agree: {}", ok.len(), ok.join(" ")));
        }
        if !excused.is_empty() {
            let at: Vec<String> = excused
                .iter()
                .map(|m| format!("({},{})", m.row, m.col))
                .collect();
            detail.push_str(&format!(
                "; displayed matrix not antisymmetric at {}",
                at.join(" ")
            ));
        }
        for m in bad.iter().take(3) {
            detail.push_str(&format!(
                "; ({},{}) computed {} expected {}",
                m.row, m.col, m.computed, m.expected
            ));
        }
        out.push(CheckResult::with(
            format!("{}: {matrix}", b.name),
            passed,
            detail,
        ));
    }
    let factors: Vec<String> = o.factors.iter().map(Q::to_string).collect();
    out.push(CheckResult::with(
        format!("{}: coordinate scaling", b.name),
        o.scalings_agree(),
        format!("q_s -> c_s q_s with c = ({})", factors.join(", ")),
    ));
    out.push(CheckResult::with(
        format!("{}: degree", b.name),
        o.degree_matches(),
        format!("computed {}", o.run.structure.degree_prime),
    ));
    out.extend(structure_checks(b.name, &o.run));
    if let Some(d) = o.display_poisson {
        // A display that is not Poisson explains mismatches; it does not
        // turn them into passes.
        let note = if d.poisson() {
            "; the displayed tensor passes the Jacobi and Casimir tests".to_string()
        } else {
            format!(
                "; the displayed tensor is not Poisson (Jacobi {}, Casimirs {})",
                pass_word(d.jacobi),
                pass_word(d.casimirs)
            )
        };
        if let Some(r) = out.iter_mut().find(|r| r.name.ends_with(": lambda_prime")) {
            r.detail.get_or_insert_with(String::new).push_str(&note);
        }
    }
    if !o.denominators.is_empty() {
        let fs: Vec<String> = o
            .denominators
            .factors
            .iter()
            .map(|p| format!("({p})"))
            .collect();
        out.push(CheckResult::with(
            format!("{}: denominators", b.name),
            !o.run.structure.polynomial,
            format!("factors {}", fs.join(" ")),
        ));
    }
    out
}

fn pass_word(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

/// Reproduces every shipped example; results are grouped by example family.
pub fn check_fixtures() -> (SuiteReport, Vec<(String, bool)>) {
    let per: Vec<Vec<CheckResult>> = BUILTINS.par_iter().map(fixture_results).collect();
    let mut groups: Vec<(String, bool)> = Vec::new();
    for (b, rs) in BUILTINS.iter().zip(&per) {
        let ok = rs.iter().all(|r| r.passed);
        match groups.iter_mut().find(|(g, _)| g == b.group) {
            Some(g) => g.1 &= ok,
            None => groups.push((b.group.to_string(), ok)),
        }
    }
    (
        SuiteReport::from_results("fixtures", per.into_iter().flatten().collect()),
        groups,
    )
}

/// Per-weight oracle for the moduli dimension, from label weights alone.
pub fn moduli_dimension_by_labels(p: &Partition) -> Result<usize> {
    let t = crate::orbit::triplet_from_partition(p)?;
    let diag = t.h_diagonal();
    let mut g: BTreeMap<i64, usize> = BTreeMap::new();
    for x in full_basis(p.n()) {
        let w = x.weight(&diag).expect("basis vectors are weight vectors");
        *g.entry(i64::try_from(w.to_integer()).expect("small"))
            .or_default() += 1;
    }
    let ge = crate::orbit::centralizer(&t).graded_dims();
    Ok(2 * ge.iter().map(|(m, &d)| d * (g[m] - d)).sum::<usize>())
}

fn orbit_checks(p: &Partition) -> Vec<CheckResult> {
    let name = |s: &str| format!("{p}: {s}");
    let t = match crate::orbit::triplet_from_partition(p) {
        Ok(t) => t,
        Err(e) => return vec![CheckResult::with(name("triplet"), false, e.to_string())],
    };
    let n = p.n();
    let (ch, height) = characteristic_and_height(&t);
    let z = crate::orbit::centralizer(&t);
    let closed = 2 * (p.parts()[0] as i64 - 1);
    let image = image_ad(&t.f);
    vec![
        CheckResult::new(name("sl2 relations"), t.relations_hold()),
        CheckResult::new(
            name("characteristic in {0,1,2}"),
            ch.iter().all(|c| (0..=2).contains(c)),
        ),
        CheckResult::with(
            name("height"),
            height == closed,
            format!("scan {height}, closed form {closed}"),
        ),
        CheckResult::new(
            name("centralizer"),
            z.dim() == p.centralizer_dimension()
                && z.weights.iter().all(|&w| w >= 0)
                && z.basis
                    .iter()
                    .all(|x| t.e.bracket(x).is_ok_and(|b| b.is_zero())),
        ),
        CheckResult::with(
            name("rank-nullity for ad f"),
            z.dim() + image.len() == n * n - 1,
            format!("{} + {}", z.dim(), image.len()),
        ),
        CheckResult::new(
            name("moduli dimension"),
            moduli_dimension_by_labels(p).is_ok_and(|d| d == crate::orbit::moduli_dimension(&t))
                && grading_dims(&t).values().sum::<usize>() == n * n - 1,
        ),
    ]
}

/// All structural checks for one transverse structure. Grading and
/// polynomiality are only guaranteed, and only checked, for ad h-invariant
/// complements.
pub fn structure_checks(label: &str, r: &Run) -> Vec<CheckResult> {
    let ts = &r.structure;
    let name = |s: &str| format!("{label}: {s}");
    let mut out = vec![CheckResult::new(
        name("dual basis"),
        r.dual.gram_violations(&r.centralizer, &r.complement) == 0,
    )];
    if ts.grading.applicable {
        out.extend([
            CheckResult::with(
                name("polynomial"),
                ts.polynomial,
                format!("degree {}", ts.degree),
            ),
            CheckResult::with(
                name("det C constant"),
                ts.grading.det_constant,
                ts.det_c.to_string(),
            ),
            CheckResult::new(name("C quasi-homogeneous"), ts.grading.c_quasi_homogeneous),
            CheckResult::new(name("Λ weights n_i+n_j+2"), ts.grading.lambda_weights),
        ]);
    }
    out.extend([
        CheckResult::new(name("antisymmetry, A(0) = D(0) = 0"), ts.shape_checks()),
        CheckResult::new(name("Λ(0) = 0"), ts.vanishes_at_origin()),
        match jacobi_check(&ts.lambda) {
            Ok(v) => CheckResult::new(name("Jacobi"), v.passed()),
            Err(e) => CheckResult::with(name("Jacobi"), false, e.to_string()),
        },
        match casimir_check(&ts.lambda, &slice_point(&r.triplet.e, &r.dual.zbar)) {
            Ok(v) => CheckResult::new(name("trace invariants are Casimirs"), v.is_none()),
            Err(e) => {
                CheckResult::with(name("trace invariants are Casimirs"), false, e.to_string())
            }
        },
    ]);
    match r.complement.kind {
        ComplementKind::Conormal => {
            out.push(CheckResult::new(
                name("subalgebra"),
                r.complement.subalgebra,
            ));
            out.push(CheckResult::with(
                name("degree <= 2"),
                ts.quadratic,
                format!("degree {}", ts.degree),
            ));
        }
        ComplementKind::ImAdF => {
            let f = &r.triplet.f;
            let perp_is_gf = r
                .dual
                .zbar
                .iter()
                .all(|x| f.bracket(x).is_ok_and(|b| b.is_zero()));
            out.push(CheckResult::new(
                name("orthogonal of Im ad f is g^f"),
                perp_is_gf,
            ));
        }
        ComplementKind::Custom => {}
    }
    out
}

fn complement_cases(p: &Partition) -> Vec<(String, ComplementSpec)> {
    let mut cases = vec![(format!("{p} imadf"), ComplementSpec::ImAdF)];
    if classify(p).conormal_family {
        cases.push((format!("{p} conormal"), ComplementSpec::Conormal));
    }
    cases
}

/// Every nonzero orbit of sl_n for `2 <= n <= max_n`, with `Im ad f` and,
/// where available, the conormal complement.
pub fn check_properties(max_n: usize) -> SuiteReport {
    let partitions: Vec<Partition> = (2..=max_n)
        .flat_map(Partition::all)
        .filter(|p| !p.is_zero_orbit())
        .collect();
    let results: Vec<CheckResult> = partitions
        .par_iter()
        .flat_map_iter(|p| {
            let mut out = orbit_checks(p);
            for (label, spec) in complement_cases(p) {
                match run(p, &spec, None, Form::Trace) {
                    Ok(r) => out.extend(structure_checks(&label, &r)),
                    Err(e) => out.push(CheckResult::with(label, false, e.to_string())),
                }
            }
            out
        })
        .collect();
    SuiteReport::from_results("properties", results)
}

/// A Lie-algebra sanity suite: bracket Jacobi identity and invariance of the
/// form on all basis triples of sl_n for small n.
pub fn check_lie_core(max_n: usize) -> SuiteReport {
    let mut results = Vec::new();
    for n in 2..=max_n.min(4) {
        let b = full_basis(n);
        let mut jacobi = true;
        let mut invariant = true;
        for x in &b {
            for y in &b {
                let xy = x.bracket(y).expect("same n");
                for z in &b {
                    let lhs = xy.bracket(z).expect("same n");
                    let a = y.bracket(z).expect("same n").bracket(x).expect("same n");
                    let c = z.bracket(x).expect("same n").bracket(y).expect("same n");
                    jacobi &= (&(&lhs + &a) + &c).is_zero();
                    let p1 = xy.trace_pairing(z).expect("same n");
                    let p2 = x
                        .trace_pairing(&y.bracket(z).expect("same n"))
                        .expect("same n");
                    invariant &= p1 == p2;
                }
            }
        }
        results.push(CheckResult::new(
            format!("sl{n}: Jacobi identity on basis triples"),
            jacobi,
        ));
        results.push(CheckResult::new(
            format!("sl{n}: invariance of the trace form"),
            invariant,
        ));
        let det = crate::linalg::determinant(&crate::lie::gram_matrix(n, Form::Trace));
        results.push(CheckResult::new(
            format!("sl{n}: nondegenerate form"),
            !det.is_zero(),
        ));
    }
    let _ = LieElement::zero(2);
    SuiteReport::from_results("lie", results)
}
