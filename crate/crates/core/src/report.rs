//! Text, JSON and LaTeX renderings of orbit data and transverse structures.
//! All output is deterministic: maps are ordered and no timing is included.

use std::fmt::Write as _;

use serde::Serializer;
use serde_json::{json, Value};

use crate::dirac::{casimir_check, jacobi_check, slice_point, CasimirFailure, JacobiVerdict};
use crate::engine::Run;
use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::orbit::{
    centralizer, characteristic_and_height, classify, grading_dims, moduli_dimension, Sl2Triplet,
};
use crate::poly::{PolyMatrix, RatMatrix};
use crate::rational::Q;

pub fn ser_q_vec<S: Serializer>(v: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(Q::to_string))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            _ => Err(Error::Parse(format!("unknown format `{s}`"))),
        }
    }
}

/// Which of `Λ` and `Λ′` to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorChoice {
    Full,
    Prime,
    Both,
}

impl TensorChoice {
    fn full(self) -> bool {
        self != TensorChoice::Prime
    }

    fn prime(self) -> bool {
        self != TensorChoice::Full
    }
}

impl std::str::FromStr for TensorChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(TensorChoice::Full),
            "prime" => Ok(TensorChoice::Prime),
            "both" => Ok(TensorChoice::Both),
            _ => Err(Error::Parse(format!("unknown tensor choice `{s}`"))),
        }
    }
}

fn strings(v: &[LieElement]) -> Vec<String> {
    v.iter().map(LieElement::to_string).collect()
}

fn rat_rows(m: &RatMatrix) -> Vec<Vec<String>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

fn matrix_json(m: &RatMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": rat_rows(m),
        "structured": m.to_rows().iter().map(|r| r.iter().map(|x| x.to_json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

fn poly_json(m: &PolyMatrix) -> Value {
    matrix_json(&m.to_rat())
}

fn orbit_value(t: &Sl2Triplet) -> Value {
    let (ch, height) = characteristic_and_height(t);
    let z = centralizer(t);
    let dims: serde_json::Map<String, Value> = grading_dims(t)
        .into_iter()
        .map(|(m, d)| (m.to_string(), json!(d)))
        .collect();
    let zdims: serde_json::Map<String, Value> = z
        .graded_dims()
        .into_iter()
        .map(|(m, d)| (m.to_string(), json!(d)))
        .collect();
    json!({
        "n": t.n(),
        "partition": t.partition.to_string(),
        "h": t.h.to_string(),
        "e": t.e.to_string(),
        "f": t.f.to_string(),
        "characteristic": ch,
        "height": height,
        "grading_dims": dims,
        "centralizer": {
            "dim": z.dim(),
            "basis": strings(&z.basis),
            "weights": z.weights,
            "graded_dims": zdims,
        },
        "moduli_dimension": moduli_dimension(t),
        "classification": classify(&t.partition),
    })
}

pub fn orbit_json(t: &Sl2Triplet) -> String {
    serde_json::to_string_pretty(&orbit_value(t)).expect("serializable")
}

pub fn orbit_text(t: &Sl2Triplet) -> String {
    let (ch, height) = characteristic_and_height(t);
    let z = centralizer(t);
    let c = classify(&t.partition);
    let mut s = String::new();
    let _ = writeln!(s, "orbit {} in sl{}", t.partition, t.n());
    let _ = writeln!(s, "h = {}", t.h);
    let _ = writeln!(s, "e = {}", t.e);
    let _ = writeln!(s, "f = {}", t.f);
    let _ = writeln!(s, "weighted Dynkin diagram: {ch:?}");
    let _ = writeln!(s, "height: {height}");
    let dims: Vec<String> = grading_dims(t)
        .iter()
        .map(|(m, d)| format!("{m}:{d}"))
        .collect();
    let _ = writeln!(s, "dim g(i): {}", dims.join(" "));
    let _ = writeln!(s, "centralizer (dim {}):", z.dim());
    for (k, (x, w)) in z.basis.iter().zip(&z.weights).enumerate() {
        let _ = writeln!(s, "  Z{} [weight {w}] = {x}", k + 1);
    }
    let _ = writeln!(s, "moduli dimension: {}", moduli_dimension(t));
    let _ = writeln!(s, "spherical: {}", c.spherical);
    let family = match c.family_type {
        Some(ty) => format!("type {ty:?}"),
        None => "none".into(),
    };
    let _ = writeln!(s, "conormal family: {family}");
    s
}

/// Everything needed to render one transverse structure.
pub struct TransverseReport<'a> {
    pub run: &'a Run,
    pub jacobi: JacobiVerdict,
    /// First `tr x^m` that fails to be a Casimir, if any.
    pub casimir: Option<CasimirFailure>,
    pub tensor: TensorChoice,
    /// Also print `C`, `D` and `A` in text and LaTeX output (JSON always
    /// includes them).
    pub show_matrices: bool,
}

impl<'a> TransverseReport<'a> {
    pub fn new(run: &'a Run, tensor: TensorChoice) -> Result<Self> {
        let lambda = &run.structure.lambda;
        Ok(TransverseReport {
            jacobi: jacobi_check(lambda)?,
            casimir: casimir_check(lambda, &slice_point(&run.triplet.e, &run.dual.zbar))?,
            run,
            tensor,
            show_matrices: false,
        })
    }

    pub fn with_matrices(mut self, show: bool) -> Self {
        self.show_matrices = show;
        self
    }

    /// Every guaranteed property holds: Jacobi identity, Casimirs,
    /// antisymmetry and, for a graded complement, the grading.
    pub fn consistent(&self) -> bool {
        let ts = &self.run.structure;
        self.jacobi.passed()
            && self.casimir.is_none()
            && ts.shape_checks()
            && (!ts.grading.applicable || ts.grading.passed())
    }

    pub fn to_json(&self) -> String {
        let r = self.run;
        let ts = &r.structure;
        let den = ts.denominators();
        let denominators: Vec<Value> = den
            .entries
            .iter()
            .map(|((i, j), e)| json!({"row": i, "col": j, "exponents": e}))
            .collect();
        let jacobi = match &self.jacobi {
            JacobiVerdict::Pass => json!({"passed": true}),
            JacobiVerdict::Fail { triple, residual } => json!({
                "passed": false,
                "triple": [triple.0 + 1, triple.1 + 1, triple.2 + 1],
                "residual": residual.to_string(),
            }),
        };
        let mut v = json!({
            "orbit": orbit_value(&r.triplet),
            "centralizer": {"basis": strings(&r.centralizer.basis), "weights": r.centralizer.weights},
            "complement": {
                "kind": r.complement.kind,
                "dim": r.complement.dim(),
                "basis": strings(&r.complement.basis),
                "weights": r.complement.weights,
                "ad_h_invariant": r.complement.ad_h_invariant,
                "subalgebra": r.complement.subalgebra,
                "rebased": r.complement.rebased,
            },
            "form": r.dual.form,
            "dual_basis": strings(&r.dual.zbar),
            "det_C": ts.det_c.to_string(),
            "degree": ts.degree,
            "degree_prime": ts.degree_prime,
            "polynomial": ts.polynomial,
            "quadratic": ts.quadratic,
            "a_vanishes": ts.a_vanishes,
            "inverse_method": format!("{:?}", ts.inverse_method).to_lowercase(),
            "grading": ts.grading,
            "jacobi": jacobi,
            "casimirs": match &self.casimir {
                None => json!({"passed": true}),
                Some(c) => json!({"passed": false, "power": c.power, "row": c.row + 1, "residual": c.residual.to_string()}),
            },
            "denominators": {
                "factors": den.factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "entries": denominators,
            },
            "matrices": {
                "A": poly_json(&ts.matrices.a),
                "C": poly_json(&ts.matrices.c),
                "D": poly_json(&ts.matrices.d),
            },
        });
        if self.tensor.full() {
            v["lambda"] = matrix_json(&ts.lambda);
        }
        if self.tensor.prime() {
            v["lambda_prime"] = matrix_json(&ts.lambda_prime);
        }
        serde_json::to_string_pretty(&v).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let r = self.run;
        let ts = &r.structure;
        let mut s = String::new();
        let _ = writeln!(
            s,
            "transverse structure at {} in sl{}",
            r.triplet.partition,
            r.triplet.n()
        );
        let _ = writeln!(s, "e = {}", r.triplet.e);
        let kind = format!("{:?}", r.complement.kind).to_lowercase();
        let _ = writeln!(s, "complement ({kind}, dim {}):", r.complement.dim());
        for (k, x) in r.complement.basis.iter().enumerate() {
            let w = r
                .complement
                .weights
                .as_ref()
                .map_or(String::new(), |w| format!(" [weight {}]", w[k]));
            let _ = writeln!(s, "  X{}{w} = {x}", k + 1);
        }
        let _ = writeln!(s, "dual basis:");
        for (k, x) in r.dual.zbar.iter().enumerate() {
            let _ = writeln!(s, "  Zbar{} = {x}", k + 1);
        }
        let _ = writeln!(s, "det C = {}", ts.det_c);
        let _ = writeln!(s, "degree: {} (Lambda' {})", ts.degree, ts.degree_prime);
        let _ = writeln!(s, "polynomial: {}, A = 0: {}", ts.polynomial, ts.a_vanishes);
        if ts.grading.applicable {
            let _ = writeln!(
                s,
                "grading: {}",
                if ts.grading.passed() {
                    "ok"
                } else {
                    "violated"
                }
            );
        } else {
            let _ = writeln!(s, "grading: not applicable (complement not ad h-invariant)");
        }
        match &self.jacobi {
            JacobiVerdict::Pass => {
                let _ = writeln!(s, "Jacobi identity: holds");
            }
            JacobiVerdict::Fail { triple, residual } => {
                let (i, j, k) = (triple.0 + 1, triple.1 + 1, triple.2 + 1);
                let _ = writeln!(
                    s,
                    "Jacobi identity: fails at ({i},{j},{k}), residual {residual}"
                );
            }
        }
        match &self.casimir {
            None => {
                let _ = writeln!(s, "tr x^m Casimirs: hold");
            }
            Some(c) => {
                let _ = writeln!(
                    s,
                    "tr x^{} is not a Casimir: row {} gives {}",
                    c.power,
                    c.row + 1,
                    c.residual
                );
            }
        }
        let den = ts.denominators();
        if !den.is_empty() {
            let fs: Vec<String> = den.factors.iter().map(|f| format!("({f})")).collect();
            let _ = writeln!(s, "denominator factors: {}", fs.join(" "));
        }
        if self.show_matrices {
            for (name, m) in [
                ("C", &ts.matrices.c),
                ("D", &ts.matrices.d),
                ("A", &ts.matrices.a),
            ] {
                let _ = writeln!(s, "{name} ({}x{}):", m.rows(), m.cols());
                for row in rat_rows(&m.to_rat()) {
                    let _ = writeln!(s, "  [{}]", row.join(", "));
                }
            }
        }
        let print = |s: &mut String, name: &str, m: &RatMatrix| {
            let _ = writeln!(s, "{name}:");
            for i in 0..m.rows() {
                for j in i + 1..m.cols() {
                    let x = m.get(i, j);
                    if !x.is_zero() {
                        let _ = writeln!(s, "  {{q{}, q{}}} = {x}", i + 1, j + 1);
                    }
                }
            }
        };
        if self.tensor.full() {
            print(
                &mut s,
                "Lambda (upper triangle, nonzero entries)",
                &ts.lambda,
            );
        }
        if self.tensor.prime() {
            print(
                &mut s,
                "Lambda' (upper triangle, nonzero entries)",
                &ts.lambda_prime,
            );
        }
        s
    }

    pub fn to_latex(&self) -> String {
        let ts = &self.run.structure;
        let mut s = String::new();
        if self.show_matrices {
            for (name, m) in [
                ("C", &ts.matrices.c),
                ("D", &ts.matrices.d),
                ("A", &ts.matrices.a),
            ] {
                let _ = writeln!(s, "{name} = {}", latex_matrix(&m.to_rat()));
            }
        }
        if self.tensor.full() {
            let _ = writeln!(s, "\\Lambda = {}", latex_matrix(&ts.lambda));
        }
        if self.tensor.prime() {
            let _ = writeln!(s, "\\Lambda' = {}", latex_matrix(&ts.lambda_prime));
        }
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Latex => self.to_latex(),
        }
    }
}

pub fn latex_matrix(m: &RatMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_latex())
                .collect::<Vec<_>>()
                .join(" & ")
        })
        .collect();
    format!(
        "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
        rows.join(" \\\\\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::run;
    use crate::fixtures::ComplementSpec;
    use crate::lie::Form;

    fn subregular() -> Run {
        run(
            &"3,1".parse().unwrap(),
            &ComplementSpec::ImAdF,
            None,
            Form::Trace,
        )
        .unwrap()
    }

    #[test]
    fn json_is_deterministic_and_complete() {
        let r = subregular();
        let a = TransverseReport::new(&r, TensorChoice::Both)
            .unwrap()
            .to_json();
        let b = TransverseReport::new(&subregular(), TensorChoice::Both)
            .unwrap()
            .to_json();
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["degree"]["value"], 3);
        assert_eq!(v["jacobi"]["passed"], true);
        assert_eq!(v["lambda"]["rows"], 5);
        assert_eq!(v["orbit"]["moduli_dimension"], 14);
    }

    #[test]
    fn tensor_choice_filters_output() {
        let r = subregular();
        let v: Value = serde_json::from_str(
            &TransverseReport::new(&r, TensorChoice::Prime)
                .unwrap()
                .to_json(),
        )
        .unwrap();
        assert!(v.get("lambda").is_none() && v.get("lambda_prime").is_some());
        let tex = TransverseReport::new(&r, TensorChoice::Full)
            .unwrap()
            .to_latex();
        assert!(tex.starts_with("\\Lambda = \\begin{pmatrix}") && !tex.contains("\\Lambda'"));
    }

    #[test]
    fn orbit_text_mentions_the_family() {
        let t = crate::orbit::triplet_from_partition(&"2,2".parse().unwrap()).unwrap();
        let s = orbit_text(&t);
        assert!(s.contains("conormal family: type I"));
        assert!(orbit_json(&t).contains("\"moduli_dimension\""));
    }
}
