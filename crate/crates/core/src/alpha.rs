//! α-cospectrality for the adjacency matrix: `spec(H) = α·spec(G)`.
//!
//! The check is exact and takes `β = α²`. Writing `p_G(x) = Σ c_k x^k`, the
//! scaled spectrum has `p_H(x) = αⁿ p_G(x/α)`, so `c_k(H) = c_k(G)·α^(n-k)`.
//! When `β` has no rational square root, odd powers of `α` are irrational, so
//! both polynomials must vanish at every odd `n-k` and the even ones are
//! compared through `β^((n-k)/2)`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::matrix::MatrixKind;
use crate::rational::{format_rational, is_positive, pow, rational_sqrt, Rational};
use crate::spectra::{char_poly, eigenvalues_numeric};

/// Tolerance used by [`estimate_alpha`].
pub const ALPHA_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlphaMode {
    /// `β` is not a rational square; odd coefficients must vanish.
    ExactParity,
    /// `α = √β` is rational; every coefficient compared directly.
    ExactRationalAlpha,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaVerdict {
    pub cospectral: bool,
    pub alpha_squared: Rational,
    pub mode: AlphaMode,
}

impl AlphaVerdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cospectral": self.cospectral,
            "alpha_squared": format_rational(&self.alpha_squared),
            "mode": self.mode,
        })
    }
}

/// Decides `spec_A(H) = √β · spec_A(G)` exactly.
pub fn alpha_cospectral_check(g: &WeightedGraph, h: &WeightedGraph, beta: &Rational) -> Result<AlphaVerdict> {
    if !is_positive(beta) {
        return Err(Error::InvalidParameter(format!("beta must be positive, got {}", format_rational(beta))));
    }
    let n = g.order();
    if n != h.order() {
        return Err(Error::OrderMismatch(n, h.order()));
    }
    let pg = char_poly(g, MatrixKind::Adjacency)?;
    let ph = char_poly(h, MatrixKind::Adjacency)?;
    let (mode, cospectral) = match rational_sqrt(beta) {
        Some(alpha) => {
            let ok = (0..=n).all(|k| ph.coeff(k) == pg.coeff(k) * pow(&alpha, n - k));
            (AlphaMode::ExactRationalAlpha, ok)
        }
        None => {
            let ok = (0..=n).all(|k| {
                let e = n - k;
                if e % 2 == 1 {
                    pg.coeff(k).is_zero() && ph.coeff(k).is_zero()
                } else {
                    ph.coeff(k) == pg.coeff(k) * pow(beta, e / 2)
                }
            });
            (AlphaMode::ExactParity, ok)
        }
    };
    Ok(AlphaVerdict { cospectral, alpha_squared: beta.clone(), mode })
}

/// The `α > 0` with `spec_A(H) = α·spec_A(G)` to [`ALPHA_TOL`], from sorted
/// numeric spectra; zeros must pair with zeros. `None` on order mismatch or
/// when no uniform multiple exists.
pub fn estimate_alpha(g: &WeightedGraph, h: &WeightedGraph) -> Option<f64> {
    if g.order() != h.order() {
        return None;
    }
    let sg = eigenvalues_numeric(g, MatrixKind::Adjacency).ok()?;
    let sh = eigenvalues_numeric(h, MatrixKind::Adjacency).ok()?;
    let alpha = sg
        .iter()
        .zip(&sh)
        .filter(|(x, _)| x.abs() > ALPHA_TOL)
        .max_by(|a, b| a.0.abs().total_cmp(&b.0.abs()))
        .map(|(x, y)| y / x)
        .unwrap_or(1.0);
    if alpha <= 0.0 {
        return None;
    }
    let fits = sg.iter().zip(&sh).all(|(x, y)| (alpha * x - y).abs() <= ALPHA_TOL * y.abs().max(1.0));
    fits.then_some(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixture;
    use crate::rational::{int, ratio};

    #[test]
    fn fig10_parity_route() {
        let left = fixture("fig10_left").unwrap();
        let right = fixture("fig10_right").unwrap();
        let v = alpha_cospectral_check(&right, &left, &int(2)).unwrap();
        assert_eq!(v, AlphaVerdict { cospectral: true, alpha_squared: int(2), mode: AlphaMode::ExactParity });
        assert!(alpha_cospectral_check(&left, &right, &ratio(1, 2)).unwrap().cospectral);
        assert!(!alpha_cospectral_check(&left, &right, &int(2)).unwrap().cospectral);
        assert!((estimate_alpha(&right, &left).unwrap() - 2f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn rational_alpha_and_identity() {
        let g = fixture("fig2_left").unwrap();
        let v = alpha_cospectral_check(&g, &g, &int(1)).unwrap();
        assert!(v.cospectral);
        assert_eq!(v.mode, AlphaMode::ExactRationalAlpha);
        let scaled = g.scale(&ratio(3, 2)).unwrap();
        assert!(alpha_cospectral_check(&g, &scaled, &ratio(9, 4)).unwrap().cospectral);
        assert_eq!(estimate_alpha(&g, &g), Some(1.0));
    }

    #[test]
    fn fig2_pair() {
        let (l, r) = (fixture("fig2_left").unwrap(), fixture("fig2_right").unwrap());
        assert!(alpha_cospectral_check(&l, &r, &ratio(4, 3)).unwrap().cospectral);
        assert!((estimate_alpha(&l, &r).unwrap() - (4.0f64 / 3.0).sqrt()).abs() < 1e-8);
    }

    #[test]
    fn errors() {
        let k2 = WeightedGraph::simple(&["a", "b"], &[("a", "b")]).unwrap();
        let p3 = WeightedGraph::simple(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(alpha_cospectral_check(&k2, &p3, &int(1)), Err(Error::OrderMismatch(2, 3)));
        assert!(alpha_cospectral_check(&k2, &k2, &int(0)).is_err());
        assert!(alpha_cospectral_check(&k2, &k2, &int(-1)).is_err());
        assert_eq!(estimate_alpha(&k2, &p3), None);
    }

    #[test]
    fn json_shape() {
        let v = AlphaVerdict { cospectral: true, alpha_squared: ratio(4, 3), mode: AlphaMode::ExactParity };
        assert_eq!(v.to_json().to_string(), r#"{"alpha_squared":"4/3","cospectral":true,"mode":"exact-parity"}"#);
    }
}
