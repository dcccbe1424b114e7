use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GraphBuilder, VertexId, WeightedGraph};
use crate::matrix::MatrixKind;
use crate::rational::Rational;
use crate::spectra::char_poly;

/// A verified twin-subgraph certificate: a partition `(V1, V2, V3)` of the
/// vertices, a bijection `π: V1 → V2` and the factor `α` with
/// `α·G[V1] = π⁻¹(G[V2])` and `α·w(u,t) = w(π(u),t)` for `u ∈ V1, t ∈ V3`.
///
/// Only [`verify_twin_subgraphs`] constructs one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinSubgraphWitness {
    v1: Vec<VertexId>,
    v2: Vec<VertexId>,
    v3: Vec<VertexId>,
    pi: BTreeMap<VertexId, VertexId>,
    alpha: Rational,
}

impl TwinSubgraphWitness {
    pub fn v1(&self) -> &[VertexId] {
        &self.v1
    }

    pub fn v2(&self) -> &[VertexId] {
        &self.v2
    }

    pub fn v3(&self) -> &[VertexId] {
        &self.v3
    }

    pub fn pi(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.pi
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn pi_inverse(&self) -> BTreeMap<VertexId, VertexId> {
        self.pi.iter().map(|(a, b)| (b.clone(), a.clone())).collect()
    }

    /// Checks `self` still certifies `g` (it may come from another graph).
    fn ensure_for(&self, g: &WeightedGraph) -> Result<()> {
        let again = verify_twin_subgraphs(g, &self.v1, &self.v2, &self.v3, &self.pi)
            .map_err(|e| Error::InvalidWitness(format!("unverified witness: {e}")))?;
        match again {
            Some(w) if w.alpha == self.alpha => Ok(()),
            _ => Err(Error::InvalidWitness("witness does not certify this graph".into())),
        }
    }
}

/// Witness file layout: `{"V1": [...], "V2": [...], "V3": [...], "pi": {"u": "v"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessFile {
    #[serde(rename = "V1")]
    pub v1: Vec<String>,
    #[serde(rename = "V2")]
    pub v2: Vec<String>,
    #[serde(rename = "V3")]
    pub v3: Vec<String>,
    pub pi: BTreeMap<String, String>,
}

impl WitnessFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_witness(w: &TwinSubgraphWitness) -> Self {
        let strs = |v: &[VertexId]| v.iter().map(|x| x.to_string()).collect();
        WitnessFile {
            v1: strs(&w.v1),
            v2: strs(&w.v2),
            v3: strs(&w.v3),
            pi: w.pi.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
        }
    }

    pub fn verify(&self, g: &WeightedGraph) -> Result<Option<TwinSubgraphWitness>> {
        verify_twin_subgraphs(g, &self.v1, &self.v2, &self.v3, &self.pi)
    }
}

fn lookup_all<S: AsRef<str>>(g: &WeightedGraph, set: &[S], name: &str) -> Result<Vec<usize>> {
    set.iter()
        .map(|u| g.idx(u.as_ref()).map_err(|_| Error::InvalidWitness(format!("{name} names unknown vertex `{}`", u.as_ref()))))
        .collect()
}

/// Returns the unique `α` certifying `(V1, V2, V3, π)` as twin subgraphs of
/// `g`, as a witness, or `None` when the conditions fail.
///
/// Errors when the sets are not a partition of the vertices, `π` is not a
/// bijection `V1 → V2`, or `V1` is empty.
pub fn verify_twin_subgraphs<S, K, M>(
    g: &WeightedGraph,
    v1: &[S],
    v2: &[S],
    v3: &[S],
    pi: &BTreeMap<K, M>,
) -> Result<Option<TwinSubgraphWitness>>
where
    S: AsRef<str>,
    K: AsRef<str>,
    M: AsRef<str>,
{
    let i1 = lookup_all(g, v1, "V1")?;
    let i2 = lookup_all(g, v2, "V2")?;
    let i3 = lookup_all(g, v3, "V3")?;
    if i1.is_empty() {
        return Err(Error::InvalidWitness("V1 is empty".into()));
    }
    let mut seen = HashSet::new();
    for &i in i1.iter().chain(&i2).chain(&i3) {
        if !seen.insert(i) {
            return Err(Error::InvalidWitness(format!("vertex `{}` appears twice in the partition", g.vertices()[i])));
        }
    }
    if seen.len() != g.order() {
        return Err(Error::InvalidWitness("V1, V2, V3 do not cover every vertex".into()));
    }

    let in1: BTreeSet<usize> = i1.iter().copied().collect();
    let in2: BTreeSet<usize> = i2.iter().copied().collect();
    let mut map = BTreeMap::new();
    for (a, b) in pi {
        let (a, b) = (a.as_ref(), b.as_ref());
        let ia = g.idx(a).map_err(|_| Error::InvalidWitness(format!("pi maps unknown vertex `{a}`")))?;
        let ib = g.idx(b).map_err(|_| Error::InvalidWitness(format!("pi maps to unknown vertex `{b}`")))?;
        if !in1.contains(&ia) || !in2.contains(&ib) {
            return Err(Error::InvalidWitness(format!("pi pair `{a}` -> `{b}` is not V1 -> V2")));
        }
        map.insert(ia, ib);
    }
    let image: BTreeSet<usize> = map.values().copied().collect();
    if map.len() != in1.len() || image != in2 || image.len() != map.len() {
        return Err(Error::InvalidWitness("pi is not a bijection from V1 onto V2".into()));
    }

    // no V1–V2 edges
    if i1.iter().any(|&u| i2.iter().any(|&v| !g.weight_at(u, v).is_zero())) {
        return Ok(None);
    }

    let mut pairs: Vec<(Rational, Rational)> = Vec::new();
    for &u in &i1 {
        let pu = map[&u];
        pairs.push((g.vertex_weight_at(u).clone(), g.vertex_weight_at(pu).clone()));
        for &v in &i1 {
            if v >= u {
                pairs.push((g.weight_at(u, v), g.weight_at(pu, map[&v])));
            }
        }
        for &t in &i3 {
            pairs.push((g.weight_at(u, t), g.weight_at(pu, t)));
        }
    }
    let Some((a, b)) = pairs.iter().find(|(a, _)| !a.is_zero()) else {
        return Ok(None);
    };
    if b.is_zero() {
        return Ok(None);
    }
    let alpha = b / a;
    if !pairs.iter().all(|(a, b)| &alpha * a == *b) {
        return Ok(None);
    }

    let ids = |set: &[usize]| set.iter().map(|&i| g.vertices()[i].clone()).collect::<Vec<_>>();
    Ok(Some(TwinSubgraphWitness {
        v1: ids(&i1),
        v2: ids(&i2),
        v3: ids(&i3),
        pi: map.iter().map(|(&a, &b)| (g.vertices()[a].clone(), g.vertices()[b].clone())).collect(),
        alpha,
    }))
}

/// `Ĝ`: delete `V2`, multiply each `V1` vertex weight and each edge with an
/// endpoint in `V1` (once, including `V1`–`V1` edges and loops) by `1 + α`.
pub fn quotient_graph(g: &WeightedGraph, w: &TwinSubgraphWitness) -> Result<WeightedGraph> {
    w.ensure_for(g)?;
    let factor = Rational::one() + &w.alpha;
    let in1: HashSet<&str> = w.v1.iter().map(VertexId::as_str).collect();
    let in2: HashSet<&str> = w.v2.iter().map(VertexId::as_str).collect();
    let mut b = GraphBuilder::new();
    for v in g.vertices().iter().filter(|v| !in2.contains(v.as_str())) {
        let mut vw = g.vertex_weight(v.as_str())?.clone();
        if in1.contains(v.as_str()) {
            vw *= &factor;
        }
        b.vertex(v.as_str(), vw)?;
    }
    for (u, v, wt) in g.edges() {
        if in2.contains(u.as_str()) || in2.contains(v.as_str()) {
            continue;
        }
        let scaled = if in1.contains(u.as_str()) || in1.contains(v.as_str()) { wt * &factor } else { wt.clone() };
        b.edge(u.as_str(), v.as_str(), scaled)?;
    }
    Ok(b.finish())
}

/// `Ĥ⁽ⁱ⁾`: `G[V_side]` with vertex weights `w'(u) = w(u) + Σ_{t∈V3} w(u,t)`.
/// Loops inside `V_side` are kept unchanged.
pub fn hat_subgraph(g: &WeightedGraph, w: &TwinSubgraphWitness, side: u8) -> Result<WeightedGraph> {
    w.ensure_for(g)?;
    let set = match side {
        1 => &w.v1,
        2 => &w.v2,
        _ => return Err(Error::InvalidParameter(format!("side must be 1 or 2, got {side}"))),
    };
    let mut b = GraphBuilder::new();
    for u in set {
        let mut wp = g.vertex_weight(u.as_str())?.clone();
        for t in &w.v3 {
            wp += g.edge_weight(u.as_str(), t.as_str())?;
        }
        b.vertex(u.as_str(), wp)?;
    }
    let restricted = g.restrict(set)?;
    for (u, v, wt) in restricted.edges() {
        b.edge(u.as_str(), v.as_str(), wt.clone())?;
    }
    let h = b.finish();
    // keep g's vertex order
    let order: Vec<&str> = restricted.vertices().iter().map(VertexId::as_str).collect();
    h.reordered(&order)
}

/// Exact spectral decomposition: `p_G = p_Ĝ · p_Ĥ⁽¹⁾` on transition polynomials.
pub fn decomposition_check(g: &WeightedGraph, w: &TwinSubgraphWitness) -> Result<bool> {
    let whole = char_poly(g, MatrixKind::Transition)?;
    let quotient = char_poly(&quotient_graph(g, w)?, MatrixKind::Transition)?;
    let hat = char_poly(&hat_subgraph(g, w, 1)?, MatrixKind::Transition)?;
    Ok(whole == quotient.times(&hat))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::fixtures::fixture;
    use crate::rational::int;

    fn pi(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
        pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
    }

    fn fig4_witness(g: &WeightedGraph) -> TwinSubgraphWitness {
        verify_twin_subgraphs(g, &["a", "b"], &["a'", "b'"], &["c", "d", "e"], &pi(&[("a", "a'"), ("b", "b'")]))
            .unwrap()
            .unwrap()
    }

    #[test]
    fn fig4_alpha_two() {
        let g = fixture("fig4").unwrap();
        assert_eq!(fig4_witness(&g).alpha(), &int(2));
    }

    #[test]
    fn fig4_swapped_pi_fails() {
        let g = fixture("fig4").unwrap();
        let r = verify_twin_subgraphs(&g, &["a", "b"], &["a'", "b'"], &["c", "d", "e"], &pi(&[("a", "b'"), ("b", "a'")]));
        assert_eq!(r.unwrap(), None);
    }

    #[test]
    fn malformed_witnesses() {
        let g = fixture("fig4").unwrap();
        let ok_pi = pi(&[("a", "a'"), ("b", "b'")]);
        let not_cover = verify_twin_subgraphs(&g, &["a", "b"], &["a'", "b'"], &["c", "d"], &ok_pi);
        assert!(matches!(not_cover, Err(Error::InvalidWitness(_))));
        let dup = verify_twin_subgraphs(&g, &["a", "b"], &["a'", "b'"], &["c", "d", "e", "a"], &ok_pi);
        assert!(matches!(dup, Err(Error::InvalidWitness(_))));
        let not_bij = verify_twin_subgraphs(&g, &["a", "b"], &["a'", "b'"], &["c", "d", "e"], &pi(&[("a", "a'"), ("b", "a'")]));
        assert!(matches!(not_bij, Err(Error::InvalidWitness(_))));
        let empty: [&str; 0] = [];
        let no_v1 = verify_twin_subgraphs(&g, &empty, &empty, &["a", "b", "c", "d", "e", "a'", "b'"], &pi(&[]));
        assert!(matches!(no_v1, Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn fig4_quotient_is_fig5() {
        let g = fixture("fig4").unwrap();
        let w = fig4_witness(&g);
        let q = quotient_graph(&g, &w).unwrap();
        assert_eq!(q, fixture("fig5_Ghat").unwrap());
        for u in ["a", "b"] {
            assert_eq!(q.degree(u).unwrap(), int(3) * g.degree(u).unwrap());
        }
    }

    #[test]
    fn fig4_hats() {
        let g = fixture("fig4").unwrap();
        let w = fig4_witness(&g);
        let h1 = hat_subgraph(&g, &w, 1).unwrap();
        let h2 = hat_subgraph(&g, &w, 2).unwrap();
        assert_eq!(h1, fixture("fig5_H1hat").unwrap());
        assert_eq!(h2, fixture("fig5_H2hat").unwrap());
        assert_eq!(h1.degree("a").unwrap(), int(2));
        let h1_scaled = h1.scale(w.alpha()).unwrap();
        let relabeled = h1_scaled.relabeled(w.v1().iter().map(|u| w.pi()[u].clone()).collect()).unwrap();
        assert_eq!(relabeled, h2);
        assert!(hat_subgraph(&g, &w, 3).is_err());
    }

    #[test]
    fn fig4_decomposes() {
        let g = fixture("fig4").unwrap();
        assert!(decomposition_check(&g, &fig4_witness(&g)).unwrap());
    }

    #[test]
    fn identical_copies_off_a_center() {
        let g = WeightedGraph::simple(&["o", "p", "q", "r", "s"], &[("o", "p"), ("p", "q"), ("o", "r"), ("r", "s")]).unwrap();
        let w = verify_twin_subgraphs(&g, &["p", "q"], &["r", "s"], &["o"], &pi(&[("p", "r"), ("q", "s")])).unwrap().unwrap();
        assert_eq!(w.alpha(), &int(1));
        let q = quotient_graph(&g, &w).unwrap();
        assert_eq!(q.edge_weight("o", "p").unwrap(), int(2));
        assert_eq!(q.edge_weight("p", "q").unwrap(), int(2));
        assert!(decomposition_check(&g, &w).unwrap());
    }

    #[test]
    fn witness_from_other_graph_rejected() {
        let g = fixture("fig4").unwrap();
        let w = fig4_witness(&g);
        let other = g.scale(&int(2)).unwrap().disjoint_union(&WeightedGraph::simple(&["z"], &[]).unwrap());
        assert!(matches!(quotient_graph(&other, &w), Err(Error::InvalidWitness(_))));
    }

    #[test]
    fn witness_json_round_trip() {
        let g = fixture("fig4").unwrap();
        let file = WitnessFile::from_witness(&fig4_witness(&g));
        let text = file.to_json();
        assert!(text.contains("\"V1\""));
        let back = WitnessFile::parse(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.verify(&g).unwrap().unwrap().alpha(), &int(2));
        assert!(WitnessFile::parse("{").is_err());
    }
}
