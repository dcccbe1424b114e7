//! Dense univariate polynomials over the rationals, and the monic
//! [`CharPoly`] used as the cospectrality certificate.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, to_f64, Rational};

/// `Σ coeffs[i] x^i`, trailing zeros trimmed (the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![Rational::one()] }
    }

    /// `x - r`.
    pub fn linear(r: &Rational) -> Self {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        Poly { coeffs: c }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(i.into())).collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lc;
            if !q.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &q * c;
                }
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Yun's square-free factorization: `self = c · Π factors[i]^(i+1)`, each
    /// factor monic and square-free. Empty factors are kept as `1`.
    pub fn square_free_factors(&self) -> Vec<Poly> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        loop {
            let g = b.gcd(&d);
            out.push(g.clone());
            b = b.div_rem(&g).0;
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_rem(&g).0;
            d = c.sub(&b.derivative());
        }
        while out.last().is_some_and(|p| p.degree() == Some(0)) {
            out.pop();
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// All real roots with multiplicity, ascending, located to within `tol`.
    ///
    /// Works on the square-free part of each multiplicity class: roots are
    /// isolated by Sturm sequences and refined by exact bisection, so
    /// repeated roots cost no accuracy.
    pub fn real_roots(&self, tol: f64) -> Vec<f64> {
        let mut roots = Vec::new();
        for (i, factor) in self.square_free_factors().iter().enumerate() {
            for r in sturm_roots(factor, tol) {
                roots.extend(std::iter::repeat(r).take(i + 1));
            }
        }
        roots.sort_by(f64::total_cmp);
        roots
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }
}

fn sign_changes(seq: &[Poly], x: &Rational) -> usize {
    let signs: Vec<i8> = seq
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| if v.is_positive() { 1 } else { -1 })
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Real roots of a square-free polynomial.
fn sturm_roots(f: &Poly, tol: f64) -> Vec<f64> {
    let Some(deg) = f.degree() else { return Vec::new() };
    if deg == 0 {
        return Vec::new();
    }
    let mut seq = vec![f.clone(), f.derivative()];
    loop {
        let n = seq.len();
        let r = seq[n - 2].div_rem(&seq[n - 1]).1;
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    // Cauchy bound
    let lc = f.leading().unwrap().abs();
    let bound = f.coeffs.iter().map(|c| c.abs() / &lc).fold(Rational::zero(), |m, v| if v > m { v } else { m })
        + Rational::one();
    let tol_r = Rational::from_float(tol).unwrap_or_else(|| Rational::new(1.into(), 1_000_000_000_000i64.into()));
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        // roots in (lo, hi]
        let count = sign_changes(&seq, &lo) - sign_changes(&seq, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(bisect(f, lo, hi, &tol_r));
            continue;
        }
        let mid = (&lo + &hi) / Rational::from_integer(2.into());
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out
}

/// Refines the single root of `f` in `(lo, hi]`.
fn bisect(f: &Poly, mut lo: Rational, mut hi: Rational, tol: &Rational) -> f64 {
    let two = Rational::from_integer(2.into());
    let mut f_hi = f.eval(&hi);
    if f_hi.is_zero() {
        return to_f64(&hi);
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        let f_mid = f.eval(&mid);
        if f_mid.is_zero() {
            return to_f64(&mid);
        }
        if f_mid.is_positive() == f_hi.is_positive() {
            hi = mid;
            f_hi = f_mid;
        } else {
            lo = mid;
        }
    }
    to_f64(&((lo + hi) / two))
}

/// Monic characteristic polynomial `det(xI - M)`, coefficient `i` for `x^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly(Poly);

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        let p = Poly::new(coeffs);
        if !p.leading().is_some_and(One::is_one) {
            return Err(Error::InvalidParameter("characteristic polynomial must be monic".into()));
        }
        Ok(CharPoly(p))
    }

    pub fn from_poly(p: Poly) -> Result<Self> {
        Self::from_coeffs(p.coeffs)
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap()
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.0.coeff(k)
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        CharPoly(Poly::monomial(k))
    }

    pub fn times(&self, other: &CharPoly) -> CharPoly {
        CharPoly(&self.0 * &other.0)
    }

    /// Largest `m` with `(x - r)^m` dividing the polynomial.
    pub fn root_multiplicity(&self, r: &Rational) -> usize {
        let mut p = self.0.clone();
        let mut m = 0;
        while !p.is_zero() {
            // synthetic division by (x - r)
            let n = p.coeffs.len();
            let mut q = vec![Rational::zero(); n - 1];
            let mut carry = Rational::zero();
            for k in (0..n).rev() {
                let v = &p.coeffs[k] + &carry * r;
                if k == 0 {
                    if !v.is_zero() {
                        return m;
                    }
                } else {
                    q[k - 1] = v.clone();
                }
                carry = v;
            }
            m += 1;
            p = Poly::new(q);
            if p.degree() == Some(0) {
                break;
            }
        }
        m
    }

    pub fn real_roots(&self, tol: f64) -> Vec<f64> {
        self.0.real_roots(tol)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let pj: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        let coeffs = pj.coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        let p = CharPoly::from_coeffs(coeffs)?;
        if p.degree() != pj.degree {
            return Err(Error::Json(format!("degree {} does not match coefficients", pj.degree)));
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    degree: usize,
    coeffs: Vec<String>,
}

impl From<&CharPoly> for PolyJson {
    fn from(p: &CharPoly) -> Self {
        PolyJson { degree: p.degree(), coeffs: p.coeffs().iter().map(format_rational).collect() }
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            match (mag.is_one(), k) {
                (true, 0) => f.write_str("1")?,
                (true, _) => f.write_str(&mono)?,
                (false, 0) => write!(f, "{mag}")?,
                (false, _) => write!(f, "{mag} {mono}")?,
            }
        }
        Ok(())
    }
}
