use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde_json::{json, Value};

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::rational::Q;

/// Reduced quotient of polynomials: `gcd(num, den) = 1` and the leading
/// graded-lex coefficient of `den` is one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Singular);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(n),
            };
        }
        if let Some(c) = den.constant_value() {
            return RatFunc {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(n),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides"),
                den.div_exact(&g).expect("gcd divides"),
            )
        };
        Self::normalized(num, den)
    }

    /// Makes the denominator monic; the caller guarantees coprimality.
    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        let n = num.nvars();
        if num.is_zero() {
            return RatFunc {
                num,
                den: MultiPoly::one(n),
            };
        }
        let lc = den.leading().expect("nonzero").1.recip();
        RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let n = p.nvars();
        RatFunc {
            num: p,
            den: MultiPoly::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::from_poly(MultiPoly::constant(nvars, c))
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    /// Equality by cross-multiplication, independent of normal form.
    pub fn cross_eq(&self, other: &RatFunc) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn derivative(&self, var: usize) -> Result<Self> {
        let dn = self.num.derivative(var)?;
        if self.is_polynomial() {
            return Ok(Self::from_poly(dn));
        }
        let dd = self.den.derivative(var)?;
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Ok(Self::reduce(num, &self.den * &self.den))
    }

    pub fn rescale_vars(&self, factors: &[Q]) -> Self {
        Self::reduce(
            self.num.rescale_vars(factors),
            self.den.rescale_vars(factors),
        )
    }

    pub fn eval(&self, point: &[Q]) -> Option<Q> {
        let d = self.den.eval(point);
        (!d.is_zero()).then(|| self.num.eval(point) / d)
    }

    pub fn to_json(&self) -> Value {
        json!({"num": self.num.to_json(), "den": self.den.to_json()})
    }

    pub fn to_latex(&self) -> String {
        if self.is_polynomial() {
            self.num.to_latex()
        } else {
            format!(
                "\\frac{{{}}}{{{}}}",
                self.num.to_latex(),
                self.den.to_latex()
            )
        }
    }
}

/// Divides `a` and `b` by their gcd.
fn cancel(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
    if b.is_constant() || a.is_constant() {
        return (a.clone(), b.clone());
    }
    let g = a.gcd(b);
    if g.is_one() {
        return (a.clone(), b.clone());
    }
    (
        a.div_exact(&g).expect("gcd divides"),
        b.div_exact(&g).expect("gcd divides"),
    )
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        // Henrici: only the common part of the denominators can cancel.
        let g = self.den.gcd(&rhs.den);
        let (d1, d2) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (
                self.den.div_exact(&g).expect("gcd divides"),
                rhs.den.div_exact(&g).expect("gcd divides"),
            )
        };
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        if g.is_one() {
            return RatFunc::normalized(num, &d1 * &d2);
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (
                num.div_exact(&h).expect("gcd divides"),
                g.div_exact(&h).expect("gcd divides"),
            )
        };
        RatFunc::normalized(num, &(&d1 * &d2) * &g)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero(self.nvars());
        }
        if self.is_polynomial() && rhs.is_polynomial() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Both inputs are reduced, so only cross cancellation is possible.
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFunc::normalized(&n1 * &n2, &d1 * &d2)
    }
}

impl std::ops::Div for &RatFunc {
    type Output = Result<RatFunc>;

    fn div(self, rhs: &RatFunc) -> Result<RatFunc> {
        let inv = rhs.recip()?;
        Ok(self.mul(&inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn v(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(n, i).unwrap()
    }

    #[test]
    fn reduces_common_factor() {
        let (x, y) = (v(2, 0), v(2, 1));
        let one = MultiPoly::one(2);
        let num = (&(&x - &one) * &y).scale(&q(3));
        let den = (&(&x - &one) * &(&x - &one)).scale(&q(2));
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.den(), &(&x - &one));
        assert_eq!(r.num(), &y.scale(&Q::new(3.into(), 2.into())));
        assert!(RatFunc::new(x.clone(), MultiPoly::zero(2)).is_err());
    }

    #[test]
    fn reduce_is_idempotent() {
        let (x, y) = (v(2, 0), v(2, 1));
        let r = RatFunc::new(&x * &y, &(&x * &x) + &y).unwrap();
        assert_eq!(RatFunc::new(r.num().clone(), r.den().clone()).unwrap(), r);
    }

    #[test]
    fn arithmetic() {
        let (x, y) = (v(2, 0), v(2, 1));
        let a = RatFunc::new(x.clone(), y.clone()).unwrap();
        let b = RatFunc::new(y.clone(), x.clone()).unwrap();
        let prod = &a * &b;
        assert!(prod.is_polynomial());
        assert_eq!(prod, RatFunc::constant(2, q(1)));
        let sum = &a - &a;
        assert!(sum.is_zero());
        let d = a.derivative(1).unwrap();
        assert_eq!(d, RatFunc::new(-&x, &y * &y).unwrap());
        assert!((&a / &b)
            .unwrap()
            .cross_eq(&RatFunc::new(&x * &x, &y * &y).unwrap()));
    }
}
