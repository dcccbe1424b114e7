//! Cyclic Jacobi eigensolver for real symmetric matrices.

use crate::matrix::RealMatrix;

/// Off-diagonal threshold at which a sweep sequence is considered converged.
pub const OFF_DIAGONAL_TOL: f64 = 1e-13;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues ascending; `vectors` holds the matching unit eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: RealMatrix,
}

impl SymmetricEigen {
    pub fn vector(&self, k: usize) -> Vec<f64> {
        self.vectors.column(k)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (f64, Vec<f64>)> + '_ {
        self.values.iter().enumerate().map(|(k, &l)| (l, self.vector(k)))
    }
}

/// Diagonalizes a symmetric matrix by cyclic Jacobi rotations, sweeping until
/// every off-diagonal entry is below [`OFF_DIAGONAL_TOL`] (relative to the
/// matrix scale when that exceeds one).
pub fn symmetric_eigen(m: &RealMatrix) -> SymmetricEigen {
    let n = m.order();
    let mut a = m.clone();
    let mut v = RealMatrix::identity(n);
    let scale = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).fold(0.0f64, |s, (i, j)| s.max(m.get(i, j).abs()));
    let tol = OFF_DIAGONAL_TOL * scale.max(1.0);

    for _ in 0..MAX_SWEEPS {
        let off = (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).fold(0.0f64, |s, (p, q)| s.max(a.get(p, q).abs()));
        if off < tol {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                a.set(p, p, app - t * apq);
                a.set(q, q, aqq + t * apq);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for r in 0..n {
                    if r != p && r != q {
                        let arp = a.get(r, p);
                        let arq = a.get(r, q);
                        let new_rp = c * arp - s * arq;
                        let new_rq = s * arp + c * arq;
                        a.set(r, p, new_rp);
                        a.set(p, r, new_rp);
                        a.set(r, q, new_rq);
                        a.set(q, r, new_rq);
                    }
                }
                for r in 0..n {
                    let vrp = v.get(r, p);
                    let vrq = v.get(r, q);
                    v.set(r, p, c * vrp - s * vrq);
                    v.set(r, q, s * vrp + c * vrq);
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let mut vectors = RealMatrix::zeros(n);
    for (new, &old) in order.iter().enumerate() {
        for r in 0..n {
            vectors.set(r, new, v.get(r, old));
        }
    }
    SymmetricEigen { values, vectors }
}

/// `max_i |(Mx - λx)_i|`.
pub fn residual(m: &RealMatrix, lambda: f64, x: &[f64]) -> f64 {
    m.mul_vec(x).iter().zip(x).map(|(mx, xi)| (mx - lambda * xi).abs()).fold(0.0, f64::max)
}
