//! Harmonic eigenvectors `y = D^-1/2 x` and their lifts through a twin-subgraph witness.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::matrix::MatrixKind;
use crate::rational::to_f64;
use crate::spectra::symmetric_decomposition;

use super::TwinSubgraphWitness;

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicVector {
    pub values: BTreeMap<VertexId, f64>,
    pub lambda: f64,
}

impl HarmonicVector {
    pub fn new(values: BTreeMap<VertexId, f64>, lambda: f64) -> Self {
        HarmonicVector { values, lambda }
    }

    /// The same value at every vertex of `g`.
    pub fn constant(g: &WeightedGraph, value: f64, lambda: f64) -> Self {
        HarmonicVector { values: g.vertices().iter().map(|v| (v.clone(), value)).collect(), lambda }
    }

    fn at(&self, u: &VertexId) -> Result<f64> {
        self.values.get(u).copied().ok_or_else(|| Error::MissingValue(u.to_string()))
    }

    fn get_or_zero(&self, u: &str) -> f64 {
        self.values.get(u).copied().unwrap_or(0.0)
    }
}

/// `max_u |Σ_v w(u,v) y(v) - (1-λ) d(u) y(u)|`.
pub fn harmonic_residual(g: &WeightedGraph, y: &HarmonicVector) -> Result<f64> {
    let mut worst = 0.0f64;
    for (i, u) in g.vertices().iter().enumerate() {
        let yu = y.at(u)?;
        let mut lhs = 0.0;
        for (j, w) in g.neighbors_at(i) {
            lhs += to_f64(w) * y.at(&g.vertices()[j])?;
        }
        let rhs = (1.0 - y.lambda) * to_f64(&g.degree_at(i)) * yu;
        worst = worst.max((lhs - rhs).abs());
    }
    Ok(worst)
}

/// All harmonic eigenvectors from a numeric normalized-Laplacian eigenbasis.
pub fn harmonic_eigenvectors(g: &WeightedGraph) -> Result<Vec<HarmonicVector>> {
    let eig = symmetric_decomposition(g, MatrixKind::Normalized)?;
    let inv_sqrt_d: Vec<f64> = g.degrees().iter().map(|d| 1.0 / to_f64(d).sqrt()).collect();
    Ok(eig
        .pairs()
        .map(|(lambda, x)| {
            let values = g.vertices().iter().enumerate().map(|(i, v)| (v.clone(), x[i] * inv_sqrt_d[i])).collect();
            HarmonicVector { values, lambda }
        })
        .collect())
}

/// Lifts a harmonic vector of `Ĝ`: copies it on `V1 ∪ V3` and transports the
/// `V1` values to `V2` through `π`.
pub fn lift_from_quotient(w: &TwinSubgraphWitness, xhat: &HarmonicVector) -> HarmonicVector {
    let mut values = BTreeMap::new();
    for u in w.v1().iter().chain(w.v3()) {
        values.insert(u.clone(), xhat.get_or_zero(u.as_str()));
    }
    for (u, pu) in w.pi() {
        values.insert(pu.clone(), xhat.get_or_zero(u.as_str()));
    }
    HarmonicVector { values, lambda: xhat.lambda }
}

/// Lifts a harmonic vector of `Ĥ⁽¹⁾`: `α·ŷ` on `V1`, `-ŷ∘π⁻¹` on `V2`, zero on `V3`.
pub fn lift_from_hat(w: &TwinSubgraphWitness, yhat: &HarmonicVector) -> HarmonicVector {
    let alpha = to_f64(w.alpha());
    let mut values = BTreeMap::new();
    for (u, pu) in w.pi() {
        let y = yhat.get_or_zero(u.as_str());
        values.insert(u.clone(), alpha * y);
        values.insert(pu.clone(), -y);
    }
    for t in w.v3() {
        values.insert(t.clone(), 0.0);
    }
    HarmonicVector { values, lambda: yhat.lambda }
}

/// `Σ_u d(u) y(u) z(u)`.
pub fn d_inner_product(g: &WeightedGraph, y: &HarmonicVector, z: &HarmonicVector) -> Result<f64> {
    let mut acc = 0.0;
    for (i, u) in g.vertices().iter().enumerate() {
        acc += to_f64(&g.degree_at(i)) * y.at(u)? * z.at(u)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixtures::fixture;
    use crate::twins::{hat_subgraph, quotient_graph, verify_twin_subgraphs};

    fn fig4() -> (WeightedGraph, TwinSubgraphWitness) {
        let g = fixture("fig4").unwrap();
        let pi: BTreeMap<&str, &str> = [("a", "a'"), ("b", "b'")].into_iter().collect();
        let w = verify_twin_subgraphs(&g, &["a", "b"], &["a'", "b'"], &["c", "d", "e"], &pi).unwrap().unwrap();
        (g, w)
    }

    #[test]
    fn ones_are_harmonic_at_zero() {
        let g = fixture("fig2_left").unwrap();
        let y = HarmonicVector::constant(&g, 1.0, 0.0);
        assert_eq!(harmonic_residual(&g, &y).unwrap(), 0.0);
        let ip = d_inner_product(&g, &y, &y).unwrap();
        assert_eq!(ip, 2.0 * g.edge_count() as f64);
    }

    #[test]
    fn k2_half_residual() {
        let g = WeightedGraph::simple(&["a", "b"], &[("a", "b")]).unwrap();
        let y = HarmonicVector::constant(&g, 1.0, 0.5);
        assert!((harmonic_residual(&g, &y).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn missing_value_is_an_error() {
        let g = WeightedGraph::simple(&["a", "b"], &[("a", "b")]).unwrap();
        let y = HarmonicVector::new([(VertexId::new("a").unwrap(), 1.0)].into_iter().collect(), 0.0);
        assert_eq!(harmonic_residual(&g, &y), Err(Error::MissingValue("b".into())));
    }

    #[test]
    fn numeric_eigenpairs_are_harmonic() {
        let g = fixture("fig4").unwrap();
        for y in harmonic_eigenvectors(&g).unwrap() {
            assert!(harmonic_residual(&g, &y).unwrap() <= 1e-8);
        }
    }

    #[test]
    fn lifts_on_fig4() {
        let (g, w) = fig4();
        let ghat = quotient_graph(&g, &w).unwrap();
        let h1 = hat_subgraph(&g, &w, 1).unwrap();
        let xs: Vec<_> = harmonic_eigenvectors(&ghat).unwrap().iter().map(|x| lift_from_quotient(&w, x)).collect();
        let ys: Vec<_> = harmonic_eigenvectors(&h1).unwrap().iter().map(|y| lift_from_hat(&w, y)).collect();
        for v in xs.iter().chain(&ys) {
            assert!(harmonic_residual(&g, v).unwrap() <= 1e-8);
        }
        for x in &xs {
            for y in &ys {
                assert!(d_inner_product(&g, x, y).unwrap().abs() <= 1e-8);
            }
        }
        // V2 carries -(V1 values)/α
        for y in &ys {
            for (u, pu) in w.pi() {
                assert!((y.values[pu] + y.values[u] / 2.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn trivial_lifts() {
        let (g, w) = fig4();
        let ghat = quotient_graph(&g, &w).unwrap();
        let c = lift_from_quotient(&w, &HarmonicVector::constant(&ghat, 1.0, 0.0));
        assert!(c.values.values().all(|&v| v == 1.0));
        assert_eq!(c.values.len(), g.order());

        let h1 = hat_subgraph(&g, &w, 1).unwrap();
        let z = lift_from_hat(&w, &HarmonicVector::constant(&h1, 0.0, 0.3));
        assert_eq!(harmonic_residual(&g, &z).unwrap(), 0.0);

        let mut xv = HarmonicVector::constant(&ghat, 1.0, 0.0);
        for u in w.v1() {
            xv.values.insert(u.clone(), 0.0);
        }
        let lifted = lift_from_quotient(&w, &xv);
        for u in w.v1().iter().chain(w.v2()) {
            assert_eq!(lifted.values[u], 0.0);
        }
        let v3_only = lift_from_quotient(&w, &xv);
        let hat = lift_from_hat(&w, &harmonic_eigenvectors(&h1).unwrap()[0]);
        assert_eq!(d_inner_product(&g, &v3_only, &hat).unwrap(), 0.0);
    }
}
