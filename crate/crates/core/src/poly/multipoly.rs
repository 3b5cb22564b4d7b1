use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{parse_q, Q};

pub type Exponents = Vec<u16>;

/// Graded lexicographic order: total degree first, then the exponent of
/// `q1`, `q2`, ….
pub fn grlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&x| u32::from(x)).sum();
    let db: u32 = b.iter().map(|&x| u32::from(x)).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Sparse polynomial in `q1..qk` with rational coefficients.
///
/// Terms are kept sorted by decreasing [`grlex`] order and never carry a zero
/// coefficient, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: Vec<(Exponents, Q)>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(vec![0; nvars], c)],
        }
    }

    /// The variable `q_{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Result<Self> {
        if index >= nvars {
            return Err(Error::VariableOutOfRange { index, nvars });
        }
        let mut e = vec![0; nvars];
        e[index] = 1;
        Ok(MultiPoly {
            nvars,
            terms: vec![(e, Q::one())],
        })
    }

    pub fn monomial(exps: Exponents, c: Q) -> Self {
        let nvars = exps.len();
        if c.is_zero() {
            return Self::zero(nvars);
        }
        MultiPoly {
            nvars,
            terms: vec![(exps, c)],
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, Q)>>(nvars: usize, terms: I) -> Self {
        let mut acc: HashMap<Exponents, Q> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            *acc.entry(e).or_insert_with(Q::zero) += c;
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, acc: HashMap<Exponents, Q>) -> Self {
        let mut terms: Vec<(Exponents, Q)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        MultiPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exponents, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.iter().all(|&x| x == 0))
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.is_one() && self.terms[0].0.iter().all(|&x| x == 0)
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.as_slice() {
            [] => Some(Q::zero()),
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// Value at `q = 0`.
    pub fn constant_term(&self) -> Q {
        self.terms
            .last()
            .filter(|(e, _)| e.iter().all(|&x| x == 0))
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms
            .first()
            .map(|(e, _)| e.iter().map(|&x| u32::from(x)).sum())
    }

    pub fn leading(&self) -> Option<(&Exponents, &Q)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    pub fn coeff(&self, exps: &[u16]) -> Q {
        self.terms
            .iter()
            .find(|(e, _)| e.as_slice() == exps)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Q::zero)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Scalar multiple with coprime integer coefficients and a positive
    /// leading coefficient.
    pub fn integer_primitive(&self) -> Self {
        let Some((_, lead)) = self.leading() else {
            return self.clone();
        };
        let (mut den, mut num) = (BigInt::one(), BigInt::zero());
        for (_, c) in &self.terms {
            den = den.lcm(c.denom());
            num = num.gcd(c.numer());
        }
        let mut factor = Q::new(den, num);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars);
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(point)
                    .filter(|(&k, _)| k > 0)
                    .fold(c.clone(), |acc, (&k, x)| {
                        acc * num_traits::pow(x.clone(), usize::from(k))
                    })
            })
            .sum()
    }

    /// Formal derivative with respect to `q_{var+1}`.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange {
                index: var,
                nvars: self.nvars,
            });
        }
        let terms = self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
            let mut e2 = e.clone();
            e2[var] -= 1;
            (e2, c * Q::from_integer(e[var].into()))
        });
        Ok(Self::from_terms(self.nvars, terms))
    }

    /// Substitutes `q_s -> c_s q_s`.
    pub fn rescale_vars(&self, factors: &[Q]) -> Self {
        assert_eq!(factors.len(), self.nvars);
        let terms = self.terms.iter().map(|(e, c)| {
            let f = e
                .iter()
                .zip(factors)
                .filter(|(&k, _)| k > 0)
                .fold(c.clone(), |acc, (&k, x)| {
                    acc * num_traits::pow(x.clone(), usize::from(k))
                });
            (e.clone(), f)
        });
        Self::from_terms(self.nvars, terms)
    }

    /// Set of weighted degrees `Σ w_s e_s` over the terms; `{0}` for the zero
    /// polynomial.
    pub fn weighted_degrees(&self, weights: &[i64]) -> BTreeSet<i64> {
        assert_eq!(weights.len(), self.nvars);
        if self.is_zero() {
            return BTreeSet::from([0]);
        }
        self.terms
            .iter()
            .map(|(e, _)| e.iter().zip(weights).map(|(&k, &w)| i64::from(k) * w).sum())
            .collect()
    }

    /// Whether every term has weighted degree `d`.
    pub fn is_quasi_homogeneous(&self, weights: &[i64], d: i64) -> bool {
        self.is_zero() || self.weighted_degrees(weights) == BTreeSet::from([d])
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    fn contains_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[var] > 0)
    }

    /// Coefficients of the powers of `q_{var+1}`, each free of that variable.
    pub fn coeffs_in(&self, var: usize) -> BTreeMap<u16, MultiPoly> {
        let mut groups: BTreeMap<u16, Vec<(Exponents, Q)>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] = 0;
            groups.entry(e[var]).or_default().push((e2, c.clone()));
        }
        groups
            .into_iter()
            .map(|(d, ts)| (d, MultiPoly::from_terms(self.nvars, ts)))
            .collect()
    }

    fn mul_monomial(&self, exps: &[u16], c: &Q) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), x * c))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert_eq!(self.nvars, divisor.nvars);
        if divisor.is_zero() {
            return None;
        }
        if let Some(c) = divisor.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (lead_e, lead_c) = divisor.leading().expect("nonzero");
        let lead_inv = lead_c.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Exponents, Q)> = Vec::new();
        while let Some((re, rc)) = rem.leading() {
            if re.iter().zip(lead_e).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Exponents = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = rc * &lead_inv;
            rem = &rem - &divisor.mul_monomial(&qe, &qc);
            quot.push((qe, qc));
        }
        Some(MultiPoly::from_terms(self.nvars, quot))
    }

    /// Pseudo-remainder of `self` by `b` as polynomials in `q_{var+1}`.
    fn pseudo_rem(&self, b: &MultiPoly, var: usize) -> MultiPoly {
        let db = b.degree_in(var);
        let lb = b.coeffs_in(var).remove(&db).expect("leading coefficient");
        let mut r = self.clone();
        while !r.is_zero() && r.contains_var(var) && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = r.coeffs_in(var).remove(&dr).expect("leading coefficient");
            let mut shift = vec![0; self.nvars];
            shift[var] = dr - db;
            r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift, &Q::one()));
        }
        if db == 0 {
            return MultiPoly::zero(self.nvars);
        }
        r
    }

    fn content_in(&self, var: usize) -> MultiPoly {
        let mut g = MultiPoly::zero(self.nvars);
        for c in self.coeffs_in(var).into_values() {
            g = g.gcd(&c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Monic greatest common divisor, by recursive content / primitive part
    /// reduction with primitive pseudo-remainder sequences.
    pub fn gcd(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let n = self.nvars;
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return MultiPoly::one(n);
        }
        if self.div_exact(other).is_some() {
            return other.monic();
        }
        if other.div_exact(self).is_some() {
            return self.monic();
        }
        let var = (0..n)
            .rev()
            .find(|&v| self.contains_var(v) || other.contains_var(v))
            .expect("nonconstant");
        if !self.contains_var(var) {
            return self.gcd(&other.content_in(var));
        }
        if !other.contains_var(var) {
            return self.content_in(var).gcd(other);
        }
        let ca = self.content_in(var);
        let cb = other.content_in(var);
        let content = ca.gcd(&cb);
        let mut a = self
            .div_exact(&ca)
            .expect("content divides")
            .integer_primitive();
        let mut b = other
            .div_exact(&cb)
            .expect("content divides")
            .integer_primitive();
        if a.degree_in(var) < b.degree_in(var) {
            std::mem::swap(&mut a, &mut b);
        }
        let multivariate = (0..n).any(|v| v != var && (a.contains_var(v) || b.contains_var(v)));
        if multivariate && coprime_in(&a, &b, var) {
            return content.monic();
        }
        let g = loop {
            let r = a.pseudo_rem(&b, var);
            if r.is_zero() {
                break b;
            }
            if !r.contains_var(var) {
                break MultiPoly::one(n);
            }
            a = b;
            // Without scalar normalization the coefficients grow
            // exponentially along the remainder sequence.
            let cr = r.content_in(var);
            b = r
                .div_exact(&cr)
                .expect("content divides")
                .integer_primitive();
        };
        let g = g.div_exact(&g.content_in(var)).expect("content divides");
        (&content * &g).monic()
    }

    /// Substitutes `point[v]` for every variable except `q_{keep+1}`.
    fn specialize(&self, keep: usize, point: &[Q]) -> MultiPoly {
        MultiPoly::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, c)| {
                let mut k = c.clone();
                for (v, (&x, p)) in e.iter().zip(point).enumerate() {
                    if v != keep && x > 0 {
                        k *= num_traits::pow(p.clone(), usize::from(x));
                    }
                }
                let mut e2 = vec![0; self.nvars];
                e2[keep] = e[keep];
                (e2, k)
            }),
        )
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(e, c)| json!({"coeff": c.to_string(), "exps": e}))
                .collect(),
        )
    }

    pub fn from_json(nvars: usize, value: &Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("polynomial must be a JSON array".into()))?;
        let terms = arr
            .iter()
            .map(|t| {
                let c = t["coeff"]
                    .as_str()
                    .ok_or_else(|| Error::Parse("term needs a string coeff".into()))
                    .and_then(parse_q)?;
                let exps: Exponents = t["exps"]
                    .as_array()
                    .ok_or_else(|| Error::Parse("term needs exps".into()))?
                    .iter()
                    .map(|x| {
                        x.as_u64()
                            .and_then(|v| u16::try_from(v).ok())
                            .ok_or_else(|| Error::Parse("bad exponent".into()))
                    })
                    .collect::<Result<_>>()?;
                if exps.len() != nvars {
                    return Err(Error::Parse(format!("expected {nvars} exponents")));
                }
                Ok((exps, c))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(nvars, terms))
    }

    /// LaTeX rendering in decreasing graded-lex order, e.g.
    /// `-\frac{2}{3}q_{2}q_{3} + 16q_{1}^{2}q_{3}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            if c.is_negative() {
                out.push_str(if k == 0 { "-" } else { " - " });
            } else if k > 0 {
                out.push_str(" + ");
            }
            let is_unit_monomial = e.iter().all(|&x| x == 0);
            if !abs.is_one() || is_unit_monomial {
                if abs.is_integer() {
                    out.push_str(&abs.to_string());
                } else {
                    out.push_str(&format!("\\frac{{{}}}{{{}}}", abs.numer(), abs.denom()));
                }
            }
            for (i, &p) in e.iter().enumerate().filter(|(_, &p)| p > 0) {
                out.push_str(&format!("q_{{{}}}", i + 1));
                if p > 1 {
                    out.push_str(&format!("^{{{p}}}"));
                }
            }
        }
        out
    }
}

/// Sound coprimality shortcut for primitive `a`, `b` in `q_{var+1}`.
///
/// At a point where both leading coefficients survive, the specialization of
/// `gcd(a, b)` keeps its degree in `q_{var+1}` and divides both specialized
/// polynomials, so a constant univariate gcd there proves the primitive gcd is
/// 1. A `false` answer is inconclusive.
fn coprime_in(a: &MultiPoly, b: &MultiPoly, var: usize) -> bool {
    let (la, lb) = (lead_coeff_in(a, var), lead_coeff_in(b, var));
    for attempt in 0..4i64 {
        let point: Vec<Q> = (0..a.nvars)
            .map(|v| Q::from_integer(BigInt::from(3 + 7 * attempt + 2 * v as i64)))
            .collect();
        if la.eval(&point).is_zero() || lb.eval(&point).is_zero() {
            continue;
        }
        return a
            .specialize(var, &point)
            .gcd(&b.specialize(var, &point))
            .is_constant();
    }
    false
}

fn lead_coeff_in(p: &MultiPoly, var: usize) -> MultiPoly {
    p.coeffs_in(var)
        .pop_last()
        .map_or_else(|| MultiPoly::zero(p.nvars), |(_, c)| c)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("q{}", i + 1)
                    } else {
                        format!("q{}^{p}", i + 1)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{abs}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

fn merge(a: &MultiPoly, b: &MultiPoly, negate_b: bool) -> MultiPoly {
    assert_eq!(a.nvars, b.nvars, "polynomials over different variable sets");
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let bval = |c: &Q| if negate_b { -c.clone() } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        match grlex(&a.terms[i].0, &b.terms[j].0) {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b.terms[j].0.clone(), bval(&b.terms[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = if negate_b {
                    &a.terms[i].1 - &b.terms[j].1
                } else {
                    &a.terms[i].1 + &b.terms[j].1
                };
                if !c.is_zero() {
                    out.push((a.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(e, c)| (e.clone(), bval(c))));
    MultiPoly {
        nvars: a.nvars,
        terms: out,
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        merge(self, rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        merge(self, rhs, true)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(
            self.nvars, rhs.nvars,
            "polynomials over different variable sets"
        );
        if self.is_zero() || rhs.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Exponents, Q> = HashMap::with_capacity(self.len() * rhs.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        MultiPoly::from_map(self.nvars, acc)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qf};

    fn v(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i).unwrap()
    }

    fn c(n: usize, x: i64) -> MultiPoly {
        MultiPoly::constant(n, q(x))
    }

    fn parsed(s: &str) -> MultiPoly {
        crate::poly::parse_ratfunc(s, 3)
            .unwrap()
            .as_poly()
            .unwrap()
            .clone()
    }

    #[test]
    fn integer_primitive_clears_scalars() {
        let p = parsed("-3/4*q1^2 + 9/2*q2 - 3");
        assert_eq!(p.integer_primitive(), parsed("q1^2 - 6*q2 + 4"));
    }

    #[test]
    fn coprime_gcd_stays_small() {
        // Found by property testing: an unnormalized remainder sequence
        // made this gcd run for minutes.
        let a = parsed(
            "2*q1^2*q2^3*q3 + q1*q2^3*q3^2 + 9/4*q1^2*q2*q3^2 + 9/2*q1^2*q2*q3 - 40*q1*q2^2 - 20*q2^2*q3 - 45*q1*q3 - 90*q1",
        );
        let b = parsed(
            "q1^3*q2^2*q3^2 + 1/2*q1^2*q2^2*q3^3 + 1/2*q1^2*q2*q3^2 - 19*q1^2*q2*q3 - 10*q1*q2*q3^2 + 12*q1*q3^2 - 10*q1*q3 - 16/3*q2*q3 - 20*q1",
        );
        assert!(a.gcd(&b).is_one());
        let g = parsed("q1*q3 - 2/3*q2 + 1");
        assert_eq!((&a * &g).gcd(&(&b * &g)), g.monic());
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (v(2, 0), v(2, 1));
        let p = &(&a + &b) * &(&a - &b);
        assert_eq!(p, &(&a * &a) - &(&b * &b));
        assert_eq!(p.to_string(), "q1^2 - q2^2");
    }

    #[test]
    fn derivative() {
        let p = &c(3, 4) * &(&v(3, 0) * &v(3, 2));
        assert_eq!(p.derivative(0).unwrap(), &c(3, 4) * &v(3, 2));
        assert_eq!(
            p.derivative(3),
            Err(Error::VariableOutOfRange { index: 3, nvars: 3 })
        );
        assert_eq!(
            MultiPoly::var(2, 2),
            Err(Error::VariableOutOfRange { index: 2, nvars: 2 })
        );
    }

    #[test]
    fn bracket_polynomial_vanishes_at_origin() {
        // 375/2 q1^3 + 10 q5 q1 - 5 q4 q1 - 2/3 q2 q3
        let n = 8;
        let p = &(&(&v(n, 0).pow(3).scale(&qf(375, 2)) + &(&v(n, 4) * &v(n, 0)).scale(&q(10)))
            - &(&v(n, 3) * &v(n, 0)).scale(&q(5)))
            - &(&v(n, 1) * &v(n, 2)).scale(&qf(2, 3));
        assert_eq!(p.eval(&vec![q(0); n]), q(0));
        assert_eq!(p.constant_term(), q(0));
        assert_eq!(p.total_degree(), Some(3));
    }

    #[test]
    fn weighted_degrees() {
        let w = [2, 4, 4, 4, 6];
        let m = &v(5, 0) * &v(5, 2);
        assert_eq!(m.weighted_degrees(&w), BTreeSet::from([6]));
        assert_eq!(c(5, 7).weighted_degrees(&w), BTreeSet::from([0]));
        let mixed = &(&v(5, 1) * &v(5, 0)).scale(&q(4)) - &v(5, 0).pow(3).scale(&q(64));
        assert_eq!(mixed.weighted_degrees(&w), BTreeSet::from([6]));
        assert!(mixed.is_quasi_homogeneous(&w, 6));
        let bad = &mixed + &v(5, 0);
        assert_eq!(bad.weighted_degrees(&w), BTreeSet::from([2, 6]));
    }

    #[test]
    fn exact_division_and_gcd() {
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        let f = &(&x + &y) * &(&z - &c(3, 1));
        let g = &(&x + &y) * &(&x - &z);
        assert_eq!(f.div_exact(&(&x + &y)), Some(&z - &c(3, 1)));
        assert_eq!(f.div_exact(&(&x - &z)), None);
        assert_eq!(f.gcd(&g), &x + &y);
        let h = (&z - &c(3, 1)).pow(3);
        let k = &(&z - &c(3, 1)).pow(2) * &(&x * &y).scale(&q(6));
        assert_eq!(h.gcd(&k), (&z - &c(3, 1)).pow(2));
        assert_eq!(f.gcd(&c(3, 5)), c(3, 1));
        assert_eq!(x.gcd(&y), c(3, 1));
    }

    #[test]
    fn json_roundtrip() {
        let p = &(&v(2, 0) * &v(2, 1)).scale(&qf(-2, 3)) + &c(2, 1);
        let j = p.to_json();
        assert_eq!(j[0]["coeff"], "-2/3");
        assert_eq!(MultiPoly::from_json(2, &j).unwrap(), p);
    }

    #[test]
    fn latex() {
        let p =
            &(&v(3, 2) * &v(3, 1)).scale(&qf(-2, 3)) + &(&v(3, 0).pow(2) * &v(3, 2)).scale(&q(16));
        assert_eq!(p.to_latex(), "16q_{1}^{2}q_{3} - \\frac{2}{3}q_{2}q_{3}");
    }
}
