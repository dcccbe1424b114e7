//! Spectra of graphs and exact cospectrality verdicts.
//!
//! The normalized Laplacian is similar to `I - P` with `P = D^-1 A`, so two
//! graphs are normalized-cospectral exactly when their transition matrices
//! have the same characteristic polynomial. That comparison is exact.

use serde_json::json;

use crate::charpoly::char_poly_exact;
use crate::eigen::{symmetric_eigen, SymmetricEigen};
use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::matrix::{exact_matrix, normalized_laplacian, MatrixKind};
use crate::poly::CharPoly;

/// Exact characteristic polynomial of one of the rational graph matrices.
pub fn char_poly(g: &WeightedGraph, kind: MatrixKind) -> Result<CharPoly> {
    if kind == MatrixKind::Normalized {
        return Err(Error::ExactUnsupported(kind));
    }
    Ok(char_poly_exact(&exact_matrix(g, kind)?))
}

/// Exact cospectrality; `Normalized` is decided on transition polynomials.
pub fn cospectral(g: &WeightedGraph, h: &WeightedGraph, kind: MatrixKind) -> Result<bool> {
    let kind = match kind {
        MatrixKind::Normalized => MatrixKind::Transition,
        k => k,
    };
    // validate both before short-circuiting on order
    let pg = char_poly(g, kind)?;
    let ph = char_poly(h, kind)?;
    Ok(g.order() == h.order() && pg == ph)
}

/// Eigen-decomposition of the symmetric matrix backing `kind`. For
/// `Transition` this is the normalized Laplacian.
pub fn symmetric_decomposition(g: &WeightedGraph, kind: MatrixKind) -> Result<SymmetricEigen> {
    let m = match kind {
        MatrixKind::Normalized | MatrixKind::Transition => normalized_laplacian(g)?,
        k => exact_matrix(g, k)?.to_real(),
    };
    Ok(symmetric_eigen(&m))
}

/// All eigenvalues ascending. `Transition` eigenvalues are reported as
/// `1 - λ` over the normalized-Laplacian spectrum.
pub fn eigenvalues_numeric(g: &WeightedGraph, kind: MatrixKind) -> Result<Vec<f64>> {
    let e = symmetric_decomposition(g, kind)?;
    let mut vals = e.values;
    if kind == MatrixKind::Transition {
        vals = vals.into_iter().map(|l| 1.0 - l).collect();
        vals.sort_by(f64::total_cmp);
    }
    Ok(vals)
}

pub fn spectrum_json(kind: MatrixKind, eigenvalues: &[f64]) -> serde_json::Value {
    json!({ "matrix": kind.as_str(), "eigenvalues": eigenvalues })
}
