//! Exact rational scalars and their string form (`"num/den"`, or `"num"` when
//! the denominator is one).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Exact `d`-th root of a rational, if one exists.
pub fn nth_root(x: &Q, d: u32) -> Option<Q> {
    if d == 1 {
        return Some(x.clone());
    }
    if x.is_negative() && d.is_multiple_of(2) {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.abs().nth_root(d);
        (r.pow(d) == n.abs()).then(|| if n.is_negative() { -r } else { r })
    };
    Some(Q::new(root(x.numer())?, root(x.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-6/4").unwrap(), qf(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(nth_root(&qf(-8, 27), 3), Some(qf(-2, 3)));
        assert_eq!(nth_root(&qf(4, 9), 2), Some(qf(2, 3)));
        assert_eq!(nth_root(&q(2), 2), None);
        assert_eq!(nth_root(&q(-4), 2), None);
    }
}
