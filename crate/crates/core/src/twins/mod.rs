//! Twin vertices and twin subgraphs.
//!
//! Two vertices are twins when they are non-adjacent, both have a neighbor,
//! and one weight profile is a fixed positive multiple `α` of the other
//! (vertex weight, loop weight and every edge weight). Merging a twin class
//! into one vertex removes `m - 1` vertices and, for loopless twins, removes
//! exactly `m - 1` copies of the normalized-Laplacian eigenvalue 1 (the
//! root 0 of the transition polynomial).

mod harmonic;
mod subgraph;

pub use harmonic::{d_inner_product, harmonic_eigenvectors, harmonic_residual, lift_from_hat, lift_from_quotient, HarmonicVector};
pub use subgraph::{decomposition_check, hat_subgraph, quotient_graph, verify_twin_subgraphs, TwinSubgraphWitness, WitnessFile};

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightedGraph};
use crate::rational::Rational;

/// A maximal set of mutual twins. `scales[v]` is `w(v) / w(rep)` in the
/// sense of the weight profiles, with the first member as the representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinClass {
    members: Vec<VertexId>,
    scales: BTreeMap<VertexId, Rational>,
}

impl TwinClass {
    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn scale(&self, v: &str) -> Option<&Rational> {
        self.scales.get(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// `α` with `α · profile(u) = profile(v)`.
    pub fn alpha(&self, u: &str, v: &str) -> Option<Rational> {
        Some(self.scales.get(v)? / self.scales.get(u)?)
    }

    /// Merged label: members joined with `+`.
    pub fn merged_label(&self) -> String {
        self.members.iter().map(VertexId::as_str).collect::<Vec<_>>().join("+")
    }
}

pub(crate) fn twin_alpha_at(g: &WeightedGraph, i: usize, j: usize) -> Option<Rational> {
    if i == j || !g.weight_at(i, j).is_zero() || !g.has_proper_neighbor(i) || !g.has_proper_neighbor(j) {
        return None;
    }
    // profile entries: vertex weight, loop, and w(·, t) for t ≠ i, j
    let n = g.order();
    let mut alpha: Option<Rational> = None;
    let mut check = |a: Rational, b: Rational| -> bool {
        match (&alpha, a.is_zero()) {
            (_, true) => b.is_zero(),
            (Some(al), false) => al * &a == b,
            (None, false) => {
                if b.is_zero() {
                    return false;
                }
                alpha = Some(b / a);
                true
            }
        }
    };
    if !check(g.vertex_weight_at(i).clone(), g.vertex_weight_at(j).clone()) {
        return None;
    }
    if !check(g.weight_at(i, i), g.weight_at(j, j)) {
        return None;
    }
    for t in (0..n).filter(|&t| t != i && t != j) {
        if !check(g.weight_at(i, t), g.weight_at(j, t)) {
            return None;
        }
    }
    alpha
}

/// The twin factor `α` of `(u, v)` (`α·profile(u) = profile(v)`), or `None`
/// when they are adjacent, either is isolated, or no consistent `α` exists.
pub fn twin_check(g: &WeightedGraph, u: &str, v: &str) -> Result<Option<Rational>> {
    let (i, j) = (g.idx(u)?, g.idx(v)?);
    if i == j {
        return Err(Error::InvalidParameter(format!("twin check needs two distinct vertices, got `{u}` twice")));
    }
    Ok(twin_alpha_at(g, i, j))
}

/// Partition of the non-isolated vertices into maximal twin classes, in
/// first-member order. Every pair inside a class is re-verified.
pub fn twin_classes(g: &WeightedGraph) -> Result<Vec<TwinClass>> {
    let n = g.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for rep in 0..n {
        if assigned[rep] || !g.has_proper_neighbor(rep) {
            continue;
        }
        assigned[rep] = true;
        let mut members = vec![rep];
        let mut scales = BTreeMap::new();
        scales.insert(g.vertices()[rep].clone(), Rational::one());
        for v in rep + 1..n {
            if assigned[v] {
                continue;
            }
            if let Some(alpha) = twin_alpha_at(g, rep, v) {
                assigned[v] = true;
                members.push(v);
                scales.insert(g.vertices()[v].clone(), alpha);
            }
        }
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                let (su, sv) = (&scales[&g.vertices()[u]], &scales[&g.vertices()[v]]);
                if twin_alpha_at(g, u, v) != Some(sv / su) {
                    return Err(Error::TwinClassInconsistent(format!(
                        "`{}` and `{}` share a class but are not twins with factor {}",
                        g.vertices()[u],
                        g.vertices()[v],
                        sv / su
                    )));
                }
            }
        }
        classes.push(TwinClass { members: members.iter().map(|&i| g.vertices()[i].clone()).collect(), scales });
    }
    Ok(classes)
}

/// Merges a twin class of size at least two into one vertex labelled with
/// the members joined by `+`, placed at the first member's position.
pub fn coalesce_class(g: &WeightedGraph, class: &TwinClass) -> Result<WeightedGraph> {
    if class.len() < 2 {
        return Err(Error::InvalidTwinClass("a class needs at least two members to coalesce".into()));
    }
    let idx = class.members.iter().map(|m| g.idx(m.as_str())).collect::<Result<Vec<_>>>()
        .map_err(|e| Error::InvalidTwinClass(e.to_string()))?;
    let rep = idx[0];
    for (k, &v) in idx.iter().enumerate().skip(1) {
        let want = class.scales.get(&class.members[k]).cloned();
        let got = twin_alpha_at(g, rep, v);
        if got.is_none() || got != want {
            return Err(Error::InvalidTwinClass(format!(
                "`{}` is not a twin of `{}` with the recorded factor",
                class.members[k], class.members[0]
            )));
        }
    }
    g.merge_vertices(&idx, VertexId::new(class.merged_label())?)
}

/// Coalesces twin classes until none of size two or more remains (merging
/// can create new twins). Returns the result and the number of vertices removed.
pub fn coalesce_all(g: &WeightedGraph) -> Result<(WeightedGraph, usize)> {
    let mut current = g.clone();
    loop {
        let classes: Vec<TwinClass> = twin_classes(&current)?.into_iter().filter(|c| c.len() >= 2).collect();
        if classes.is_empty() {
            break;
        }
        for class in &classes {
            current = coalesce_class(&current, class)?;
        }
    }
    let removed = g.order() - current.order();
    Ok((current, removed))
}
