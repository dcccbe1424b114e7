//! Exact rationals. Everything weight-like in the crate is a [`Rational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p` or `p/q`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("not a rational: `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // numer/denom beyond f64 range individually; fall back to a scaled quotient
        let n = r.numer().to_string().len() as i32;
        let d = r.denom().to_string().len() as i32;
        let shift = (n.max(d) - 300).max(0) as u32;
        let scale = BigInt::from(10u8).pow(shift);
        let a = (r.numer() / &scale).to_f64().unwrap_or(0.0);
        let b = (r.denom() / &scale).to_f64().unwrap_or(1.0);
        a / b
    })
}

/// Exact square root when `r` is the square of a rational.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

pub fn is_positive(r: &Rational) -> bool {
    r.is_positive()
}

pub fn pow(r: &Rational, e: usize) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces() {
        assert_eq!(parse_rational("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(format_rational(&parse_rational("10/36").unwrap()), "5/18");
        assert_eq!(format_rational(&int(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(rational_sqrt(&ratio(4, 9)), Some(ratio(2, 3)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&ratio(4, 3)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    #[test]
    fn huge_to_f64() {
        let big = Rational::new(BigInt::from(10u8).pow(400) * 3, BigInt::from(10u8).pow(400) * 2);
        assert!((to_f64(&big) - 1.5).abs() < 1e-12);
    }
}
