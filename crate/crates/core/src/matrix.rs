//! The five graph matrices, in graph vertex order.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rational::{to_f64, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// `A`, `A[u][v] = w(u,v)`.
    Adjacency,
    /// `L = D - A`.
    Laplacian,
    /// `Q = D + A`.
    Signless,
    /// `D^-1/2 (D - A) D^-1/2`; irrational entries, numeric only.
    Normalized,
    /// `P = D^-1 A`, the random-walk matrix. Similar to `I - normalized`.
    Transition,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 5] =
        [Self::Adjacency, Self::Laplacian, Self::Signless, Self::Normalized, Self::Transition];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Adjacency => "adjacency",
            Self::Laplacian => "laplacian",
            Self::Signless => "signless",
            Self::Normalized => "normalized",
            Self::Transition => "transition",
        }
    }

    pub fn is_exact(self) -> bool {
        self != Self::Normalized
    }

    pub fn needs_positive_degrees(self) -> bool {
        matches!(self, Self::Normalized | Self::Transition)
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown matrix kind `{s}`")))
    }
}

/// Dense square matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(n: usize) -> Self {
        RationalMatrix { n, entries: vec![Rational::zero(); n * n] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidParameter("matrix is not square".into()));
        }
        Ok(RationalMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn to_real(&self) -> RealMatrix {
        RealMatrix { n: self.n, data: self.entries.iter().map(to_f64).collect() }
    }
}

/// Dense square `f64` matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    n: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(n: usize) -> Self {
        RealMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.set(i, i, 1.0);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix is not square");
        RealMatrix { n, data: rows.iter().flatten().copied().collect() }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }
}

/// Exact for every kind but normalized.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphMatrix {
    Exact(RationalMatrix),
    Numeric(RealMatrix),
}

pub fn build_matrix(g: &WeightedGraph, kind: MatrixKind) -> Result<GraphMatrix> {
    match kind {
        MatrixKind::Normalized => normalized_laplacian(g).map(GraphMatrix::Numeric),
        _ => exact_matrix(g, kind).map(GraphMatrix::Exact),
    }
}

fn check_degrees(g: &WeightedGraph, kind: MatrixKind) -> Result<Vec<Rational>> {
    let degrees = g.degrees();
    if kind.needs_positive_degrees() {
        if let Some(i) = degrees.iter().position(Zero::is_zero) {
            return Err(Error::ZeroDegree { vertex: g.vertices()[i].to_string(), kind });
        }
    }
    Ok(degrees)
}

/// Exact matrix for any kind except [`MatrixKind::Normalized`].
pub fn exact_matrix(g: &WeightedGraph, kind: MatrixKind) -> Result<RationalMatrix> {
    if !kind.is_exact() {
        return Err(Error::ExactUnsupported(kind));
    }
    let degrees = check_degrees(g, kind)?;
    let n = g.order();
    let mut m = RationalMatrix::zeros(n);
    for i in 0..n {
        for (j, w) in g.neighbors_at(i) {
            let v = match kind {
                MatrixKind::Adjacency | MatrixKind::Signless => w.clone(),
                MatrixKind::Laplacian => -w.clone(),
                MatrixKind::Transition => w / &degrees[i],
                MatrixKind::Normalized => unreachable!(),
            };
            m.set(i, j, v);
        }
        match kind {
            MatrixKind::Laplacian => {
                let v = &degrees[i] + m.get(i, i);
                m.set(i, i, v);
            }
            MatrixKind::Signless => {
                let v = &degrees[i] + m.get(i, i);
                m.set(i, i, v);
            }
            _ => {}
        }
    }
    Ok(m)
}

/// `D^-1/2 (D - A) D^-1/2`. Off-diagonal magnitudes are taken as the square
/// root of the exact ratio `w(u,v)^2 / (d(u) d(v))`, which is invariant under
/// scaling of the graph, so `scale(G, α)` yields a bit-identical matrix.
pub fn normalized_laplacian(g: &WeightedGraph) -> Result<RealMatrix> {
    let degrees = check_degrees(g, MatrixKind::Normalized)?;
    let n = g.order();
    let mut m = RealMatrix::identity(n);
    for i in 0..n {
        for (j, w) in g.neighbors_at(i) {
            let r = (w * w) / (&degrees[i] * &degrees[j]);
            let mag = to_f64(&r).sqrt();
            if i == j {
                m.set(i, i, 1.0 - mag);
            } else {
                m.set(i, j, -mag);
            }
        }
    }
    Ok(m)
}

/// Identity matrix of order `n` over the rationals.
pub fn rational_identity(n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n);
    for i in 0..n {
        m.set(i, i, Rational::one());
    }
    m
}
