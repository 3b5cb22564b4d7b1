//! Worked examples shipped with the crate, and the JSON format used for
//! user-supplied complements.
//!
//! A complement file is either a plain JSON list of Lie elements, or an
//! object with the keys
//!
//! * `complement`: list of Lie elements, or `"imadf"` / `"conormal"`;
//! * `centralizer` (optional): graded basis of 𝔤^e to use instead of the
//!   computed one;
//! * `reference_dual` (optional): a hand-normalized dual basis `Z̄′`;
//! * `n`, `partition`, `description` (optional);
//! * `expected` (optional): `C`, `D`, `lambda_prime` as matrices of
//!   expression strings, `named_brackets` as `{"i,j": expr}`, and `degree`
//!   (an integer or `"non-polynomial"`).

use std::collections::BTreeMap;

use serde_json::Value;

use crate::dirac::Degree;
use crate::error::{Error, Result};
use crate::lie::LieElement;
use crate::orbit::Partition;
use crate::poly::{parse_ratfunc, RatFunc, RatMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplementSpec {
    Vectors(Vec<LieElement>),
    ImAdF,
    Conormal,
}

#[derive(Clone, Debug, Default)]
pub struct Expected {
    pub degree: Option<Degree>,
    pub c: Option<Vec<Vec<String>>>,
    pub d: Option<Vec<Vec<String>>>,
    pub lambda_prime: Option<Vec<Vec<String>>>,
    /// 1-based `(i, j)` to expression.
    pub named: BTreeMap<(usize, usize), String>,
}

#[derive(Clone, Debug)]
pub struct ComplementFile {
    pub name: String,
    pub description: Option<String>,
    pub n: usize,
    pub partition: Option<Partition>,
    pub complement: ComplementSpec,
    pub centralizer: Option<Vec<LieElement>>,
    pub reference_dual: Option<Vec<LieElement>>,
    pub expected: Expected,
}

fn elements(n: usize, v: &Value, what: &str) -> Result<Vec<LieElement>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("`{what}` must be a list of Lie elements")))?
        .iter()
        .map(|x| LieElement::from_json(n, x))
        .collect()
}

fn string_matrix(v: &Value, what: &str) -> Result<Vec<Vec<String>>> {
    let bad = || Error::Parse(format!("`{what}` must be a list of rows of strings"));
    v.as_array()
        .ok_or_else(bad)?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(bad()),
                })
                .collect()
        })
        .collect()
}

/// Parses a matrix of expressions in `nvars` variables.
pub fn parse_matrix(rows: &[Vec<String>], nvars: usize) -> Result<RatMatrix> {
    let parsed = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_ratfunc(s, nvars))
                .collect::<Result<Vec<RatFunc>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RatMatrix::from_rows(parsed)
}

fn parse_pair(key: &str) -> Result<(usize, usize)> {
    let bad = || Error::Parse(format!("bracket key `{key}` must look like \"i,j\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

impl ComplementFile {
    /// `n_hint` is used when the file does not state `n`.
    pub fn parse(name: &str, text: &str, n_hint: Option<usize>) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .map(|x| x as usize)
            .or(n_hint)
            .ok_or_else(|| Error::Parse(format!("{name}: no `n` given")))?;
        if let (Some(h), true) = (n_hint, value.get("n").is_some()) {
            if h != n {
                return Err(Error::DimensionMismatch { left: h, right: n });
            }
        }
        if value.is_array() {
            return Ok(ComplementFile {
                name: name.to_string(),
                description: None,
                n,
                partition: None,
                complement: ComplementSpec::Vectors(elements(n, &value, "complement")?),
                centralizer: None,
                reference_dual: None,
                expected: Expected::default(),
            });
        }
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse(format!("{name}: expected a list or an object")))?;
        let complement = match obj.get("complement") {
            Some(Value::String(s)) if s == "imadf" => ComplementSpec::ImAdF,
            Some(Value::String(s)) if s == "conormal" => ComplementSpec::Conormal,
            Some(v @ Value::Array(_)) => ComplementSpec::Vectors(elements(n, v, "complement")?),
            _ => {
                return Err(Error::Parse(format!(
                    "{name}: missing or invalid `complement`"
                )))
            }
        };
        let optional = |key: &str| -> Result<Option<Vec<LieElement>>> {
            obj.get(key).map(|v| elements(n, v, key)).transpose()
        };
        let partition = obj
            .get("partition")
            .and_then(Value::as_str)
            .map(str::parse::<Partition>)
            .transpose()?;
        let mut expected = Expected::default();
        if let Some(e) = obj.get("expected") {
            expected.degree = match e.get("degree") {
                None => None,
                Some(Value::Number(d)) => Some(Degree::Polynomial(
                    d.as_u64()
                        .ok_or_else(|| Error::Parse("bad degree".into()))?
                        as u32,
                )),
                Some(Value::String(s)) if s == "non-polynomial" => Some(Degree::NonPolynomial),
                Some(_) => return Err(Error::Parse(format!("{name}: bad `degree`"))),
            };
            expected.c = e.get("C").map(|v| string_matrix(v, "C")).transpose()?;
            expected.d = e.get("D").map(|v| string_matrix(v, "D")).transpose()?;
            expected.lambda_prime = e
                .get("lambda_prime")
                .map(|v| string_matrix(v, "lambda_prime"))
                .transpose()?;
            if let Some(named) = e.get("named_brackets").and_then(Value::as_object) {
                for (k, v) in named {
                    let s = v
                        .as_str()
                        .ok_or_else(|| Error::Parse(format!("bracket {k} must be a string")))?;
                    expected.named.insert(parse_pair(k)?, s.to_string());
                }
            }
        }
        Ok(ComplementFile {
            name: name.to_string(),
            description: obj
                .get("description")
                .and_then(Value::as_str)
                .map(str::to_string),
            n,
            partition,
            complement,
            centralizer: optional("centralizer")?,
            reference_dual: optional("reference_dual")?,
            expected,
        })
    }
}

pub const SL4_31_N: &str = include_str!("../fixtures/sl4_31_n.json");
pub const SL4_31_N_PRIME: &str = include_str!("../fixtures/sl4_31_n_prime.json");
pub const SL4_31_N1: &str = include_str!("../fixtures/sl4_31_n1.json");
pub const SL5_32_N: &str = include_str!("../fixtures/sl5_32_n.json");

/// A shipped example and the group it is reported under.
pub struct Builtin {
    pub name: &'static str,
    pub group: &'static str,
    pub text: &'static str,
}

pub const BUILTINS: [Builtin; 4] = [
    Builtin {
        name: "sl4_31_n",
        group: "sl4 (3,1), graded complements",
        text: SL4_31_N,
    },
    Builtin {
        name: "sl4_31_n_prime",
        group: "sl4 (3,1), graded complements",
        text: SL4_31_N_PRIME,
    },
    Builtin {
        name: "sl4_31_n1",
        group: "sl4 (3,1), non-invariant complement",
        text: SL4_31_N1,
    },
    Builtin {
        name: "sl5_32_n",
        group: "sl5 (3,2), degree-4 example",
        text: SL5_32_N,
    },
];

pub fn builtin(name: &str) -> Option<ComplementFile> {
    BUILTINS
        .iter()
        .find(|b| b.name == name)
        .map(|b| ComplementFile::parse(b.name, b.text, None).expect("shipped fixtures parse"))
}
