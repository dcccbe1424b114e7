//! Exact-weight undirected graphs.
//!
//! A [`WeightedGraph`] carries nonnegative rational vertex weights and
//! symmetric positive rational edge weights. Absent pairs have weight zero and
//! zero-weight edges are never stored. Loops are stored as the pair `{u,u}` and
//! contribute their weight once to the degree.
//!
//! Graphs are immutable values: every transform returns a new graph.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Opaque vertex label, unique within a graph.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if label.is_empty() || label.chars().any(char::is_whitespace) {
            return Err(Error::InvalidVertexId(label));
        }
        Ok(VertexId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightedGraph {
    ids: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    vertex_weights: Vec<Rational>,
    /// Symmetric adjacency; a loop lives once at `adj[u][u]`.
    adj: Vec<BTreeMap<usize, Rational>>,
}

/// Incremental builder; [`WeightedGraph::build`] is the one-shot form.
#[derive(Debug, Default)]
pub struct GraphBuilder {
    graph: WeightedGraph,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, id: &str, weight: Rational) -> Result<&mut Self> {
        let id = VertexId::new(id)?;
        if weight.is_negative() {
            return Err(Error::NegativeWeight { target: id.to_string(), weight: weight.to_string() });
        }
        if self.graph.index.contains_key(&id) {
            return Err(Error::DuplicateVertex(id.to_string()));
        }
        let g = &mut self.graph;
        g.index.insert(id.clone(), g.ids.len());
        g.ids.push(id);
        g.vertex_weights.push(weight);
        g.adj.push(BTreeMap::new());
        Ok(self)
    }

    /// Adds `w` to the weight of `{u, v}`; zero weights are dropped.
    pub fn edge(&mut self, u: &str, v: &str, weight: Rational) -> Result<&mut Self> {
        let g = &mut self.graph;
        let i = g.idx(u)?;
        let j = g.idx(v)?;
        if weight.is_negative() {
            return Err(Error::NegativeWeight { target: format!("{{{u},{v}}}"), weight: weight.to_string() });
        }
        g.add_edge_weight(i, j, &weight);
        Ok(self)
    }

    pub fn finish(&mut self) -> WeightedGraph {
        std::mem::take(&mut self.graph)
    }
}

impl WeightedGraph {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex and edge lists. Repeated edges accumulate.
    pub fn build<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = (String, Rational)>,
        E: IntoIterator<Item = (String, String, Rational)>,
    {
        let mut b = GraphBuilder::new();
        for (id, w) in vertices {
            b.vertex(&id, w)?;
        }
        for (u, v, w) in edges {
            b.edge(&u, &v, w)?;
        }
        Ok(b.finish())
    }

    /// Simple graph with unit edges and zero vertex weights.
    pub fn simple(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        Self::build(
            vertices.iter().map(|v| (v.to_string(), Rational::zero())),
            edges.iter().map(|(u, v)| (u.to_string(), v.to_string(), Rational::one())),
        )
    }

    fn add_edge_weight(&mut self, i: usize, j: usize, w: &Rational) {
        if w.is_zero() {
            return;
        }
        let e = self.adj[i].entry(j).or_insert_with(Rational::zero);
        *e += w;
        if i != j {
            let e = self.adj[j].entry(i).or_insert_with(Rational::zero);
            *e += w;
        }
    }

    pub(crate) fn idx(&self, u: &str) -> Result<usize> {
        self.index.get(u).copied().ok_or_else(|| Error::UnknownVertex(u.to_string()))
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn contains(&self, u: &str) -> bool {
        self.index.contains_key(u)
    }

    pub fn position(&self, u: &str) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn vertex_weight(&self, u: &str) -> Result<&Rational> {
        Ok(&self.vertex_weights[self.idx(u)?])
    }

    /// `w(u, v)`, zero when the pair is not stored.
    pub fn edge_weight(&self, u: &str, v: &str) -> Result<Rational> {
        let (i, j) = (self.idx(u)?, self.idx(v)?);
        Ok(self.weight_at(i, j))
    }

    pub(crate) fn weight_at(&self, i: usize, j: usize) -> Rational {
        self.adj[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub(crate) fn vertex_weight_at(&self, i: usize) -> &Rational {
        &self.vertex_weights[i]
    }

    /// Neighbors of vertex index `i` with weights, a loop included as `(i, w)`.
    pub(crate) fn neighbors_at(&self, i: usize) -> impl Iterator<Item = (usize, &Rational)> {
        self.adj[i].iter().map(|(&j, w)| (j, w))
    }

    /// Neighbor labels and weights of `u`.
    pub fn neighbors(&self, u: &str) -> Result<Vec<(&VertexId, &Rational)>> {
        let i = self.idx(u)?;
        Ok(self.adj[i].iter().map(|(&j, w)| (&self.ids[j], w)).collect())
    }

    pub(crate) fn degree_at(&self, i: usize) -> Rational {
        self.adj[i].values().fold(self.vertex_weights[i].clone(), |acc, w| acc + w)
    }

    /// `d(u) = w(u) + Σ_{v∼u} w(u,v)`, loop counted once.
    pub fn degree(&self, u: &str) -> Result<Rational> {
        Ok(self.degree_at(self.idx(u)?))
    }

    pub fn degrees(&self) -> Vec<Rational> {
        (0..self.order()).map(|i| self.degree_at(i)).collect()
    }

    /// Whether `u` has an edge to some other vertex (loops do not count).
    pub(crate) fn has_proper_neighbor(&self, i: usize) -> bool {
        self.adj[i].keys().any(|&j| j != i)
    }

    /// Stored edges as index pairs `i <= j`, in row order.
    pub(crate) fn edge_indices(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.adj.iter().enumerate().flat_map(|(i, row)| row.range(i..).map(move |(&j, w)| (i, j, w)))
    }

    /// Stored edges as `(u, v, w)` with `u` not after `v` in vertex order.
    pub fn edges(&self) -> Vec<(&VertexId, &VertexId, &Rational)> {
        self.edge_indices().map(|(i, j, w)| (&self.ids[i], &self.ids[j], w)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_indices().count()
    }

    pub fn total_edge_weight(&self) -> Rational {
        self.edge_indices().fold(Rational::zero(), |acc, (_, _, w)| acc + w)
    }

    pub fn total_vertex_weight(&self) -> Rational {
        self.vertex_weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    pub fn has_loops(&self) -> bool {
        self.edge_indices().any(|(i, j, _)| i == j)
    }

    /// Unit edge weights, zero vertex weights, no loops.
    pub fn is_simple(&self) -> bool {
        self.vertex_weights.iter().all(Zero::is_zero)
            && self.edge_indices().all(|(i, j, w)| i != j && w.is_one())
    }

    /// `αG`: every vertex and edge weight multiplied by `alpha`.
    pub fn scale(&self, alpha: &Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::NonPositiveScale(alpha.to_string()));
        }
        let mut g = self.clone();
        for w in &mut g.vertex_weights {
            *w *= alpha;
        }
        for row in &mut g.adj {
            for w in row.values_mut() {
                *w *= alpha;
            }
        }
        Ok(g)
    }

    /// Induced subgraph on `keep`, in this graph's vertex order.
    pub fn restrict<S: AsRef<str>>(&self, keep: &[S]) -> Result<Self> {
        let mut chosen = BTreeSet::new();
        for u in keep {
            chosen.insert(self.idx(u.as_ref())?);
        }
        Ok(self.induced(&chosen.into_iter().collect::<Vec<_>>()))
    }

    /// Same graph with vertices listed in `order` (a permutation of the vertex set).
    pub fn reordered<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        let picks = order.iter().map(|u| self.idx(u.as_ref())).collect::<Result<Vec<_>>>()?;
        let distinct: BTreeSet<_> = picks.iter().collect();
        if picks.len() != self.order() || distinct.len() != picks.len() {
            return Err(Error::InvalidParameter("reorder list is not a permutation of the vertices".into()));
        }
        Ok(self.induced(&picks))
    }

    /// Subgraph induced on index list `picks`, in that order.
    pub(crate) fn induced(&self, picks: &[usize]) -> Self {
        let remap: HashMap<usize, usize> = picks.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let mut g = WeightedGraph::empty();
        for &old in picks {
            g.index.insert(self.ids[old].clone(), g.ids.len());
            g.ids.push(self.ids[old].clone());
            g.vertex_weights.push(self.vertex_weights[old].clone());
            g.adj.push(BTreeMap::new());
        }
        for (new_i, &old_i) in picks.iter().enumerate() {
            for (old_j, w) in &self.adj[old_i] {
                if let Some(&new_j) = remap.get(old_j) {
                    g.adj[new_i].insert(new_j, w.clone());
                }
            }
        }
        g
    }

    /// Vertex-disjoint union. If any label of `other` collides, all of
    /// `other`'s labels get a `1:` prefix (repeated until collision-free).
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let mut prefix = String::new();
        while other.ids.iter().any(|id| self.contains(&format!("{prefix}{id}"))) {
            prefix.insert_str(0, "1:");
        }
        let mut g = self.clone();
        let offset = g.order();
        for (i, id) in other.ids.iter().enumerate() {
            let id = VertexId(format!("{prefix}{id}"));
            g.index.insert(id.clone(), offset + i);
            g.ids.push(id);
            g.vertex_weights.push(other.vertex_weights[i].clone());
            g.adj.push(other.adj[i].iter().map(|(&j, w)| (j + offset, w.clone())).collect());
        }
        g
    }

    /// Replaces the vertex labels (same order, same count).
    pub fn relabeled(&self, labels: Vec<VertexId>) -> Result<Self> {
        if labels.len() != self.order() {
            return Err(Error::OrderMismatch(labels.len(), self.order()));
        }
        let mut index = HashMap::new();
        for (i, id) in labels.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(id.to_string()));
            }
        }
        Ok(WeightedGraph { ids: labels, index, vertex_weights: self.vertex_weights.clone(), adj: self.adj.clone() })
    }

    /// Replaces the vertices at `members` (indices, nonempty) by one vertex at
    /// the position of the first member, with summed vertex, loop and edge weights.
    pub(crate) fn merge_vertices(&self, members: &[usize], label: VertexId) -> Result<Self> {
        if self.contains(label.as_str()) && !members.iter().any(|&m| self.ids[m] == label) {
            return Err(Error::DuplicateVertex(label.to_string()));
        }
        let member_set: BTreeSet<usize> = members.iter().copied().collect();
        let head = members[0];
        let mut b = GraphBuilder::new();
        let mut new_index = vec![usize::MAX; self.order()];
        let mut next = 0;
        let mut merged_weight = Rational::zero();
        for &m in &member_set {
            merged_weight += &self.vertex_weights[m];
        }
        for i in 0..self.order() {
            if i == head {
                b.vertex(label.as_str(), merged_weight.clone())?;
            } else if member_set.contains(&i) {
                continue;
            } else {
                b.vertex(self.ids[i].as_str(), self.vertex_weights[i].clone())?;
            }
            new_index[i] = next;
            next += 1;
        }
        for &m in &member_set {
            new_index[m] = new_index[head];
        }
        let mut g = b.finish();
        for (i, j, w) in self.edge_indices() {
            g.add_edge_weight(new_index[i], new_index[j], w);
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn c6() -> WeightedGraph {
        WeightedGraph::simple(
            &["a", "b", "c", "d", "e", "f"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("e", "f"), ("f", "a")],
        )
        .unwrap()
    }

    #[test]
    fn cycle_construction() {
        let g = c6();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_simple());
        assert_eq!(g.degree("a").unwrap(), int(2));
    }

    #[test]
    fn build_errors() {
        let v = vec![("a".to_string(), int(0)), ("a".to_string(), int(0))];
        assert_eq!(WeightedGraph::build(v, vec![]), Err(Error::DuplicateVertex("a".into())));
        let v = vec![("a".to_string(), int(0))];
        let e = vec![("a".to_string(), "z".to_string(), int(1))];
        assert_eq!(WeightedGraph::build(v.clone(), e), Err(Error::UnknownVertex("z".into())));
        let v2 = vec![("a".to_string(), int(0)), ("b".to_string(), int(0))];
        let e = vec![("a".to_string(), "b".to_string(), int(-1))];
        assert!(matches!(WeightedGraph::build(v2, e), Err(Error::NegativeWeight { .. })));
        let v = vec![("a".to_string(), int(-1))];
        assert!(matches!(WeightedGraph::build(v, vec![]), Err(Error::NegativeWeight { .. })));
        assert!(matches!(VertexId::new("a b"), Err(Error::InvalidVertexId(_))));
        assert!(matches!(VertexId::new(""), Err(Error::InvalidVertexId(_))));
    }

    #[test]
    fn zero_edges_dropped() {
        let g = WeightedGraph::build(
            vec![("a".to_string(), int(0)), ("b".to_string(), int(0))],
            vec![("a".to_string(), "b".to_string(), int(0))],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn degree_with_vertex_weight_and_loop() {
        let mut b = GraphBuilder::new();
        b.vertex("u", int(3)).unwrap();
        let g = b.finish();
        assert_eq!(g.degree("u").unwrap(), int(3));

        let mut b = GraphBuilder::new();
        b.vertex("u", int(1)).unwrap().vertex("v", int(0)).unwrap();
        b.edge("u", "u", int(5)).unwrap().edge("u", "v", int(2)).unwrap();
        let g = b.finish();
        // loop counted once
        assert_eq!(g.degree("u").unwrap(), int(8));
        assert_eq!(g.degree("v").unwrap(), int(2));
        assert!(g.has_loops());
        assert!(!g.is_simple());
        assert_eq!(g.degree("nope"), Err(Error::UnknownVertex("nope".into())));
    }

    #[test]
    fn scale_identity_and_inverse() {
        let g = c6();
        assert_eq!(g.scale(&int(1)).unwrap(), g);
        assert_eq!(g.scale(&int(2)).unwrap().scale(&ratio(1, 2)).unwrap(), g);
        let g3 = g.scale(&int(3)).unwrap();
        assert!(g3.edges().iter().all(|(_, _, w)| **w == int(3)));
        assert!(matches!(g.scale(&int(0)), Err(Error::NonPositiveScale(_))));
        assert!(matches!(g.scale(&int(-2)), Err(Error::NonPositiveScale(_))));
    }

    #[test]
    fn restrict_cases() {
        let g = c6();
        let ab = g.restrict(&["b", "a"]).unwrap();
        assert_eq!(ab.vertices().iter().map(VertexId::as_str).collect::<Vec<_>>(), ["a", "b"]);
        assert_eq!(ab.edge_count(), 1);
        let all: Vec<&str> = g.vertices().iter().map(VertexId::as_str).collect();
        assert_eq!(g.restrict(&all).unwrap(), g);
        assert!(g.restrict::<&str>(&[]).unwrap().is_empty());
        assert_eq!(g.restrict(&["zz"]), Err(Error::UnknownVertex("zz".into())));
    }

    #[test]
    fn union_cases() {
        let k2 = WeightedGraph::simple(&["x", "y"], &[("x", "y")]).unwrap();
        let u = k2.disjoint_union(&k2);
        assert_eq!(u.order(), 4);
        assert_eq!(u.edge_count(), 2);
        assert!(u.contains("1:x"));
        let uu = u.disjoint_union(&u);
        assert_eq!(uu.order(), 8);
        assert_eq!(uu.edge_count(), 4);
        assert_eq!(c6().disjoint_union(&WeightedGraph::empty()), c6());
    }

    #[test]
    fn merge_sums_weights() {
        let g = WeightedGraph::simple(&["p", "q", "c"], &[("p", "c"), ("q", "c")]).unwrap();
        let m = g.merge_vertices(&[0, 1], VertexId::new("p+q").unwrap()).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.edge_weight("p+q", "c").unwrap(), int(2));
    }
}
