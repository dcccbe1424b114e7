//! Exact characteristic polynomials.
//!
//! Denominators are cleared first: with `s` the lcm of all entry
//! denominators, `sM` is an integer matrix whose characteristic polynomial is
//! found by the division-free Berkowitz algorithm. The rational answer is
//! recovered from `p_M(x) = s^-n · p_{sM}(sx)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::matrix::RationalMatrix;
use crate::poly::CharPoly;
use crate::rational::Rational;

pub fn char_poly_exact(m: &RationalMatrix) -> CharPoly {
    let n = m.order();
    let s = m.entries().iter().fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
    let scaled: Vec<Vec<BigInt>> = (0..n)
        .map(|i| m.row(i).iter().map(|e| e.numer() * (&s / e.denom())).collect())
        .collect();
    // highest power first
    let int_coeffs = berkowitz(&scaled);
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut s_pow = BigInt::one();
    for (j, c) in int_coeffs.into_iter().enumerate() {
        // coefficient of x^(n-j) is c / s^j
        coeffs[n - j] = Rational::new(c, s_pow.clone());
        s_pow *= &s;
    }
    CharPoly::from_coeffs(coeffs).expect("Berkowitz output is monic")
}

/// Coefficients of `det(xI - A)`, leading coefficient first, using only ring
/// operations.
pub(crate) fn berkowitz(a: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = a.len();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut c = vec![BigInt::one(), -a[0][0].clone()];
    for r in 1..n {
        // Leading r×r block M, row R = a[r][..r], column S = a[..r][r].
        // Toeplitz column: 1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a[r][r].clone());
        let mut v: Vec<BigInt> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let rv: BigInt = (0..r).map(|j| &a[r][j] * &v[j]).sum();
            t.push(-rv);
            if k + 1 < r {
                v = (0..r).map(|i| (0..r).map(|j| &a[i][j] * &v[j]).sum()).collect();
            }
        }
        let mut next = vec![BigInt::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for (j, cj) in c.iter().enumerate().take(i + 1) {
                if !cj.is_zero() && !t[i - j].is_zero() {
                    *slot += &t[i - j] * cj;
                }
            }
        }
        c = next;
    }
    c
}
